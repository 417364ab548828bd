"""Command line entry points.

One request per invocation. Results go to stdout as text or as a single
JSON document (sorted keys, no timing data, so identical requests produce
identical bytes); diagnostics go to stderr. Exit codes: 0 success,
1 invalid input, 2 syntax error, 3 resource budget exhausted,
4 inconclusive, 5 verification failure.
"""

import json
import sys

import click

from .algebra import make_signature
from .annihilator import ann_one, ann_pair, bs_ideal, global_b
from .corpus import load_fixtures, run_fixture
from .errors import InvalidInputError, ParseError, ResourceLimitError, WeylbsError
from .groebner import GBConfig
from .parsing import parse_operator, parse_poly, used_names
from .poly import factored_str
from .rational import (
    ann_rational,
    bs_rational_elim,
    bs_rational_linear,
    certificate,
    verify_certificate,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_SYNTAX = 2
EXIT_RESOURCE = 3
EXIT_INCONCLUSIVE = 4
EXIT_VERIFY_FAILED = 5

_DEFAULT_NAMES = ("x", "y", "z")


class CliError(click.ClickException):
    def __init__(self, message, code):
        super().__init__(message)
        self.exit_code = code


def _fail(exc, code):
    raise CliError(str(exc), code)


def _variables(texts, vars_option):
    """Variable tuple shared by all expressions of the request."""
    if vars_option:
        names = tuple(n.strip() for n in vars_option.split(",") if n.strip())
        if not names:
            _fail("empty --vars", EXIT_SYNTAX)
        return names
    try:
        used = set()
        for text in texts:
            used |= used_names(text)
    except ParseError as exc:
        _fail(exc, EXIT_SYNTAX)
    unknown = used - set(_DEFAULT_NAMES)
    if unknown:
        _fail(f"variables {sorted(unknown)} are outside the default x, y, z; "
              f"declare them with --vars", EXIT_SYNTAX)
    names = tuple(n for n in _DEFAULT_NAMES if n in used)
    return names or ("x",)


def _parse(text, variables):
    try:
        return parse_poly(text, variables)
    except ParseError as exc:
        _fail(exc, EXIT_SYNTAX)


def _config(max_pairs, max_steps):
    kwargs = {}
    if max_pairs is not None:
        kwargs["max_pairs"] = max_pairs
    if max_steps is not None:
        kwargs["max_reduction_steps"] = max_steps
    return GBConfig(**kwargs) if kwargs else None


def _emit(doc, lines, output_format):
    if output_format == "json":
        click.echo(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            click.echo(line)


def _poly_doc(p):
    """Expanded string plus linear factors when p is univariate."""
    entry = {"expanded": str(p)}
    if len([n for n in p.vars if p.degree_in(n) > 0]) <= 1:
        entry["factored"] = factored_str(p)
    return entry


def _run(fn):
    try:
        fn()
    except ParseError as exc:
        _fail(exc, EXIT_SYNTAX)
    except ResourceLimitError as exc:
        _fail(exc, EXIT_RESOURCE)
    except WeylbsError as exc:
        _fail(exc, EXIT_INVALID)


def _common_options(fn):
    fn = click.option("--vars", "vars_option", default=None,
                      help="Comma-separated variable names; defaults to the "
                           "subset of x,y,z that appears in the input.")(fn)
    fn = click.option("--format", "output_format",
                      type=click.Choice(["text", "json"]), default="text",
                      help="Output format.")(fn)
    fn = click.option("--max-pairs", type=int, default=None,
                      help="Budget: critical pairs per basis run.")(fn)
    fn = click.option("--max-steps", type=int, default=None,
                      help="Budget: reduction steps per basis run.")(fn)
    return fn


@click.group()
def main():
    """Annihilators and Bernstein-Sato polynomials of rational functions."""


# -- annihilators ------------------------------------------------------------


@main.command("ann-pair")
@click.option("-f", "f_text", required=True, help="Numerator polynomial.")
@click.option("-g", "g_text", required=True, help="Denominator polynomial.")
@_common_options
def ann_pair_cmd(f_text, g_text, vars_option, output_format, max_pairs, max_steps):
    """Annihilator of f^s1 g^s2: reduced basis over D[s1,s2]."""
    def go():
        variables = _variables([f_text, g_text], vars_option)
        f = _parse(f_text, variables)
        g = _parse(g_text, variables)
        gens = ann_pair(f, g, config=_config(max_pairs, max_steps))
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "ann-pair",
            "inputs": {"f": f_text, "g": g_text, "vars": list(variables)},
            "result": {"generators": [str(a) for a in gens]},
        }
        lines = [f"annihilator of f^s1 g^s2 ({len(gens)} generators):"]
        lines += [f"  {a}" for a in gens]
        _emit(doc, lines, output_format)
    _run(go)


@main.command("ann-one")
@click.option("-f", "f_text", required=True, help="The polynomial.")
@_common_options
def ann_one_cmd(f_text, vars_option, output_format, max_pairs, max_steps):
    """Annihilator of f^s: reduced basis over D[s]."""
    def go():
        variables = _variables([f_text], vars_option)
        f = _parse(f_text, variables)
        gens = ann_one(f, config=_config(max_pairs, max_steps))
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "ann-one",
            "inputs": {"f": f_text, "vars": list(variables)},
            "result": {"generators": [str(a) for a in gens]},
        }
        lines = [f"annihilator of f^s ({len(gens)} generators):"]
        lines += [f"  {a}" for a in gens]
        _emit(doc, lines, output_format)
    _run(go)


@main.command("global-b")
@click.option("-f", "f_text", required=True, help="The polynomial.")
@_common_options
def global_b_cmd(f_text, vars_option, output_format, max_pairs, max_steps):
    """Bernstein-Sato polynomial of f."""
    def go():
        variables = _variables([f_text], vars_option)
        f = _parse(f_text, variables)
        b = global_b(f, config=_config(max_pairs, max_steps))
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "global-b",
            "inputs": {"f": f_text, "vars": list(variables)},
            "result": {"b": _poly_doc(b)},
        }
        lines = [f"b(s) = {factored_str(b)}", f"expanded: {b}"]
        _emit(doc, lines, output_format)
    _run(go)


@main.command("bs-ideal")
@click.option("-f", "f_text", required=True, help="Numerator polynomial.")
@click.option("-g", "g_text", required=True, help="Denominator polynomial.")
@click.option("--supplied", type=click.Path(exists=True), default=None,
              help="File of candidate generators in s1, s2 (one per line); "
                   "each is admitted only after a membership check.")
@_common_options
def bs_ideal_cmd(f_text, g_text, supplied, vars_option, output_format,
                 max_pairs, max_steps):
    """Two-parameter functional-equation ideal of (f, g) with shift lines."""
    def go():
        variables = _variables([f_text, g_text], vars_option)
        f = _parse(f_text, variables)
        g = _parse(g_text, variables)
        supplied_polys = None
        if supplied is not None:
            supplied_polys = [
                _parse(line, ("s1", "s2"))
                for line in _expression_lines(supplied)
            ]
        data = bs_ideal(f, g, supplied=supplied_polys,
                        config=_config(max_pairs, max_steps))
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "bs-ideal",
            "inputs": {"f": f_text, "g": g_text, "vars": list(variables)},
            "result": {
                "generators": [str(b) for b in data.generators],
                "shift_lines": sorted(data.L),
                "e": data.e,
                "epsilon": data.epsilon,
            },
        }
        lines = [f"functional-equation ideal ({len(data.generators)} generators):"]
        lines += [f"  {b}" for b in data.generators]
        lines += [f"shift lines L = {sorted(data.L)}",
                  f"e = {data.e}", f"epsilon = {data.epsilon}"]
        _emit(doc, lines, output_format)
    _run(go)


@main.command("ann-rational")
@click.option("-f", "f_text", required=True, help="Numerator polynomial.")
@click.option("-g", "g_text", required=True, help="Denominator polynomial.")
@click.option("-m", type=int, required=True, help="Denominator shift, m >= 0.")
@click.option("--step-mode", type=click.Choice(["direct", "iterated"]),
              default="direct", help="How to descend from the saturated level.")
@_common_options
def ann_rational_cmd(f_text, g_text, m, step_mode, vars_option, output_format,
                     max_pairs, max_steps):
    """Annihilator of (1/g^m)(f/g)^s: reduced basis over D[s]."""
    def go():
        variables = _variables([f_text, g_text], vars_option)
        f = _parse(f_text, variables)
        g = _parse(g_text, variables)
        gens = ann_rational(f, g, m, step_mode=step_mode,
                            config=_config(max_pairs, max_steps))
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "ann-rational",
            "inputs": {"f": f_text, "g": g_text, "m": m,
                       "step_mode": step_mode, "vars": list(variables)},
            "result": {"generators": [str(a) for a in gens]},
        }
        lines = [f"annihilator at m={m} ({len(gens)} generators):"]
        lines += [f"  {a}" for a in gens]
        _emit(doc, lines, output_format)
    _run(go)


# -- rational Bernstein-Sato ---------------------------------------------------


@main.command("bs-rational")
@click.option("-f", "f_text", required=True, help="Numerator polynomial.")
@click.option("-g", "g_text", required=True, help="Denominator polynomial.")
@click.option("-m", type=int, required=True, help="Denominator shift, m >= 0.")
@click.option("-N", "n_terms", type=int, required=True,
              help="Number of terms in the functional equation, N >= 1.")
@click.option("--method", type=click.Choice(["elimination", "linear"]),
              default="elimination",
              help="elimination decides zero ideals; linear can only "
                   "find a b or report inconclusive.")
@click.option("--max-degree", type=int, default=24,
              help="Degree cap for the linear method.")
@_common_options
def bs_rational_cmd(f_text, g_text, m, n_terms, method, max_degree,
                    vars_option, output_format, max_pairs, max_steps):
    """N-term Bernstein-Sato polynomial of f/g at shift m."""
    def go():
        variables = _variables([f_text, g_text], vars_option)
        f = _parse(f_text, variables)
        g = _parse(g_text, variables)
        config = _config(max_pairs, max_steps)
        if method == "elimination":
            result = bs_rational_elim(f, g, m, n_terms, config=config)
        else:
            result = bs_rational_linear(f, g, m, n_terms,
                                        max_degree=max_degree, config=config)
        res_doc = {"status": result.status, "m": m, "N": n_terms,
                   "method": result.method}
        lines = []
        if result.status == "ok":
            res_doc["b"] = _poly_doc(result.b)
            lines.append(f"b(s) = {factored_str(result.b)}")
            lines.append(f"expanded: {result.b}")
        elif result.status == "zero":
            res_doc["b"] = None
            lines.append("the N-term ideal is zero: no functional equation "
                         f"with N={n_terms} exists at m={m}")
        else:
            res_doc["b"] = None
            lines.append(f"inconclusive up to degree {max_degree}; "
                         "raise --max-degree or use --method elimination")
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "bs-rational",
            "inputs": {"f": f_text, "g": g_text, "m": m, "N": n_terms,
                       "method": method, "vars": list(variables)},
            "result": res_doc,
        }
        _emit(doc, lines, output_format)
        if result.status == "inconclusive":
            sys.exit(EXIT_INCONCLUSIVE)
    _run(go)


@main.command("certificate")
@click.option("-f", "f_text", required=True, help="Numerator polynomial.")
@click.option("-g", "g_text", required=True, help="Denominator polynomial.")
@click.option("-m", type=int, required=True, help="Denominator shift, m >= 0.")
@click.option("-N", "n_terms", type=int, required=True,
              help="Number of terms in the functional equation, N >= 1.")
@click.option("-b", "b_text", default=None,
              help="The b(s) to certify; computed by elimination if omitted.")
@click.option("--out", type=click.Path(), default=None,
              help="Write the certificate JSON here instead of stdout.")
@_common_options
def certificate_cmd(f_text, g_text, m, n_terms, b_text, out, vars_option,
                    output_format, max_pairs, max_steps):
    """Operators P_k with b g^N = sum P_k f^k g^{N-k} modulo the annihilator."""
    def go():
        variables = _variables([f_text, g_text], vars_option)
        f = _parse(f_text, variables)
        g = _parse(g_text, variables)
        config = _config(max_pairs, max_steps)
        if b_text is not None:
            b = _parse(b_text, ("s",))
        else:
            result = bs_rational_elim(f, g, m, n_terms, config=config)
            if result.status != "ok":
                _fail(f"no b to certify: the N-term ideal is {result.status}",
                      EXIT_INVALID)
            b = result.b
        cert = certificate(f, g, m, n_terms, b, config=config)
        cert_doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "certificate",
            "inputs": {"f": f_text, "g": g_text, "m": m, "N": n_terms,
                       "vars": list(variables)},
            "b": str(b),
            "operators": [{"k": k, "op": str(p)} for k, p in cert],
        }
        payload = json.dumps(cert_doc, indent=2, sort_keys=True)
        if out is not None:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
            click.echo(f"certificate written to {out}")
        elif output_format == "json":
            click.echo(payload)
        else:
            click.echo(f"b(s) = {b}")
            for k, p in cert:
                click.echo(f"P_{k} = {p}")
    _run(go)


@main.command("verify")
@click.option("-f", "f_text", required=True, help="Numerator polynomial.")
@click.option("-g", "g_text", required=True, help="Denominator polynomial.")
@click.option("-m", type=int, required=True, help="Denominator shift, m >= 0.")
@click.option("-N", "n_terms", type=int, required=True,
              help="Number of terms in the functional equation, N >= 1.")
@click.option("--cert", "cert_path", type=click.Path(exists=True), required=True,
              help="Certificate JSON produced by the certificate command.")
@_common_options
def verify_cmd(f_text, g_text, m, n_terms, cert_path, vars_option,
               output_format, max_pairs, max_steps):
    """Recheck a certificate: twisted action and ideal membership."""
    def go():
        variables = _variables([f_text, g_text], vars_option)
        f = _parse(f_text, variables)
        g = _parse(g_text, variables)
        with open(cert_path, encoding="utf-8") as fh:
            try:
                cert_doc = json.load(fh)
            except json.JSONDecodeError as exc:
                _fail(f"certificate file: {exc}", EXIT_SYNTAX)
        try:
            b_text = cert_doc["b"]
            op_entries = cert_doc["operators"]
        except (KeyError, TypeError):
            _fail("certificate file lacks 'b' or 'operators'", EXIT_SYNTAX)
        b = _parse(b_text, ("s",))
        sig = make_signature(variables, central_params=("s",))
        try:
            cert = [(entry["k"], parse_operator(entry["op"], sig))
                    for entry in op_entries]
        except ParseError as exc:
            _fail(exc, EXIT_SYNTAX)
        except (KeyError, TypeError):
            _fail("certificate operators need 'k' and 'op' fields", EXIT_SYNTAX)
        report = {}
        ok = verify_certificate(f, g, m, n_terms, b, cert,
                                config=_config(max_pairs, max_steps),
                                report=report)
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "inputs": {"f": f_text, "g": g_text, "m": m, "N": n_terms,
                       "b": str(b), "vars": list(variables)},
            "result": {"verified": ok,
                       "failed_check": report.get("failed_check")},
        }
        if ok:
            lines = ["PASS: the certificate annihilates the twisted element "
                     "and lies in the annihilator"]
        else:
            lines = [f"FAIL: {report.get('failed_check')} check rejected "
                     "the certificate"]
        _emit(doc, lines, output_format)
        if not ok:
            sys.exit(EXIT_VERIFY_FAILED)
    _run(go)


# -- regression corpus ---------------------------------------------------------


@main.command("corpus")
@click.option("--list", "list_only", is_flag=True,
              help="List fixtures and expectations without running.")
@click.option("--filter", "name_filter", default=None,
              help="Run only fixtures whose name contains this substring.")
@click.option("--include-stretch", is_flag=True,
              help="Also run fixtures tagged stretch (no runtime bound).")
@click.option("--format", "output_format",
              type=click.Choice(["text", "json"]), default="text")
def corpus_cmd(list_only, name_filter, include_stretch, output_format):
    """Run the bundled worked examples and compare exact expected values."""
    fixtures = load_fixtures()
    if name_filter:
        fixtures = [fx for fx in fixtures if name_filter in fx.name]
    if not include_stretch:
        fixtures = [fx for fx in fixtures if "stretch" not in fx.tags]
    if list_only:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "corpus",
            "fixtures": [
                {"name": fx.name, "kind": fx.kind, "tags": sorted(fx.tags),
                 "expect": {k: fx.headers[k] for k in sorted(fx.headers)
                            if k.startswith("expect")}}
                for fx in fixtures
            ],
        }
        lines = [f"{fx.name}  [{fx.kind}]"
                 + (f"  tags={','.join(sorted(fx.tags))}" if fx.tags else "")
                 for fx in fixtures]
        _emit(doc, lines, output_format)
        return
    results = []
    failed = 0
    for fx in fixtures:
        outcome = run_fixture(fx)
        results.append(outcome)
        status = "PASS" if outcome.passed else "FAIL"
        if not outcome.passed:
            failed += 1
        click.echo(f"{status}  {fx.name:32s} {outcome.seconds:8.2f}s"
                   + ("" if outcome.passed else f"  {outcome.detail}"))
    click.echo(f"{len(results) - failed}/{len(results)} fixtures passed")
    if failed:
        sys.exit(EXIT_INVALID)


def _expression_lines(path):
    """Non-comment, non-blank lines of a fixture-style file."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(line)
    return out


if __name__ == "__main__":
    main()
