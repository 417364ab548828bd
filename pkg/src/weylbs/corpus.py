"""Bundled regression corpus: worked examples with exact expected values.

Fixture files live in the package's fixtures/ directory. A fixture is a
plain text file: header lines `# key: value` carry parameters and expected
values, the remaining non-blank lines are expressions in the CLI grammar
(one per line). The `kind` header selects which checks run.
"""

import time
from dataclasses import dataclass
from importlib import resources

from .algebra import make_signature, weyl_from_poly
from .annihilator import ann_pair, bs_ideal
from .groebner import (
    buchberger,
    central_saturation,
    ideal_equal,
    left_normal_form,
    transporter,
)
from .parsing import parse_operator, parse_poly
from .rational import (
    ann_rational,
    bs_rational_elim,
    bs_rational_linear,
    certificate,
    specialized_annihilator,
    verify_certificate,
)


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    headers: dict        # key -> list of values, in file order
    body: tuple          # expression lines
    tags: frozenset

    def one(self, key, default=None):
        values = self.headers.get(key)
        if not values:
            if default is not None:
                return default
            raise KeyError(f"{self.name}: missing header {key}")
        if len(values) > 1:
            raise KeyError(f"{self.name}: header {key} given twice")
        return values[0]

    def many(self, key):
        return self.headers.get(key, [])


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _parse_fixture(name, text):
    headers = {}
    body = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            content = line.lstrip("#").strip()
            if ":" not in content:
                continue
            key, _, value = content.partition(":")
            headers.setdefault(key.strip(), []).append(value.strip())
        else:
            body.append(line)
    kind = headers.get("kind", [None])[0]
    if kind is None:
        raise ValueError(f"fixture {name} lacks a kind header")
    tags = frozenset(
        t.strip() for v in headers.get("tags", []) for t in v.split(",") if t.strip())
    return Fixture(name, kind, headers, tuple(body), tags)


def load_fixtures():
    """All bundled fixtures, sorted by name."""
    out = []
    root = resources.files("weylbs").joinpath("fixtures")
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".txt"):
            continue
        out.append(_parse_fixture(entry.name[:-4], entry.read_text("utf-8")))
    return out


# -- shared plumbing -----------------------------------------------------------


def _vars_of(fx):
    return tuple(n.strip() for n in fx.one("vars").split(",") if n.strip())

def _fg(fx):
    variables = _vars_of(fx)
    return (parse_poly(fx.one("f"), variables),
            parse_poly(fx.one("g"), variables))

def _sig1(fx):
    return make_signature(_vars_of(fx), central_params=("s",))

def _sig2(fx):
    return make_signature(_vars_of(fx), central_params=("s1", "s2"))

def _s_poly(text):
    return parse_poly(text, ("s",))

def _monic_set(polys):
    return {str(p.monic()) for p in polys}

def _in_ideal(op, gens):
    return left_normal_form(op, buchberger(gens)).is_zero()


# -- runners -------------------------------------------------------------------


def _run_ann_pair_ideal(fx):
    f, g = _fg(fx)
    sig = _sig2(fx)
    expected = [parse_operator(line, sig) for line in fx.body]
    got = ann_pair(f, g)
    if not ideal_equal(got, expected):
        return False, "computed annihilator differs from the expected ideal"
    return True, f"{len(got)} generators, ideal-equal to the expected ones"


def _run_bs_ideal(fx):
    f, g = _fg(fx)
    data = bs_ideal(f, g)
    expected = parse_poly(fx.one("expect-b"), ("s1", "s2"))
    if len(data.generators) != 1:
        return False, f"expected a principal ideal, got {len(data.generators)} generators"
    if data.generators[0].monic() != expected.monic():
        return False, "generator differs from the expected product"
    expect_lines = sorted(int(v) for v in fx.one("expect-L").split(",")) \
        if fx.one("expect-L", "none") != "none" else []
    if sorted(data.L) != expect_lines:
        return False, f"shift lines {sorted(data.L)} != {expect_lines}"
    if data.e != int(fx.one("expect-e")):
        return False, f"e = {data.e} != {fx.one('expect-e')}"
    if data.epsilon != int(fx.one("expect-epsilon")):
        return False, f"epsilon = {data.epsilon} != {fx.one('expect-epsilon')}"
    return True, "generator, shift lines, e and epsilon all match"


def _run_bs_rational(fx):
    f, g = _fg(fx)
    m, n = int(fx.one("m")), int(fx.one("N"))
    method = fx.one("method", "elimination")
    if method == "elimination":
        result = bs_rational_elim(f, g, m, n)
    else:
        result = bs_rational_linear(f, g, m, n,
                                    max_degree=int(fx.one("max-degree", "24")))
    expect_status = fx.one("expect-status", "ok")
    if result.status != expect_status:
        return False, f"status {result.status} != {expect_status}"
    if expect_status == "ok":
        expected = _s_poly(fx.one("expect-b")).monic()
        if result.b != expected:
            return False, f"b = {result.b} != {expected}"
        return True, f"b = {result.b}"
    return True, f"status {result.status} as expected"


def _run_ann_rational_saturated(fx):
    f, g = _fg(fx)
    m = int(fx.one("m"))
    direct = ann_rational(f, g, m, step_mode="direct")
    iterated = ann_rational(f, g, m, step_mode="iterated")
    if not ideal_equal(direct, iterated):
        return False, "direct and iterated step modes disagree"
    spec = specialized_annihilator(f, g, m)
    if not ideal_equal(direct, spec):
        return False, "annihilator differs from the plain specialization"
    return True, "equals the specialization; step modes agree"


def _run_ann_rational_extra(fx):
    f, g = _fg(fx)
    m = int(fx.one("m"))
    sig = _sig1(fx)
    extra = parse_operator(fx.body[0], sig)
    direct = ann_rational(f, g, m, step_mode="direct")
    iterated = ann_rational(f, g, m, step_mode="iterated")
    if not ideal_equal(direct, iterated):
        return False, "direct and iterated step modes disagree"
    if not _in_ideal(extra, direct):
        return False, "expected operator is missing from the annihilator"
    spec = specialized_annihilator(f, g, m)
    if _in_ideal(extra, spec):
        return False, "operator already lies in the specialization"
    return True, "contains the extra operator; specialization does not"


def _run_saturation(fx):
    f, g = _fg(fx)
    m = int(fx.one("m"))
    sig = _sig1(fx)
    ann = ann_pair(f, g)
    J = specialized_annihilator(f, g, m, ann=ann)
    sat = central_saturation(J)
    expect_factors = _monic_set(
        _s_poly(t) for t in fx.one("expect-q-factors").split(";"))
    if _monic_set(sat.factors) != expect_factors:
        return False, f"q factors {_monic_set(sat.factors)} != {expect_factors}"
    stable = _s_poly(fx.one("expect-stable"))
    growing = _s_poly(fx.one("expect-growing"))
    t_stable = transporter(J, weyl_from_poly(sig, stable))
    if not ideal_equal(t_stable, J):
        return False, f"quotient by {stable} changed the ideal"
    t_growing = transporter(J, weyl_from_poly(sig, growing))
    if ideal_equal(t_growing, J):
        return False, f"quotient by {growing} left the ideal unchanged"
    witness = parse_operator(fx.body[0], sig)
    if not _in_ideal(witness, t_growing):
        return False, "displayed operator missing from the enlarged quotient"
    if _in_ideal(witness, J):
        return False, "displayed operator unexpectedly already in the ideal"
    if not ideal_equal(list(sat.generators), t_growing):
        return False, f"saturation differs from the quotient by {growing}"
    return True, f"saturation = quotient by {growing}; {stable} is superfluous"


def _run_certificate_roundtrip(fx):
    f, g = _fg(fx)
    m, n = int(fx.one("m")), int(fx.one("N"))
    result = bs_rational_elim(f, g, m, n)
    if result.status != "ok":
        return False, f"no b to certify: status {result.status}"
    expected = _s_poly(fx.one("expect-b")).monic()
    if result.b != expected:
        return False, f"b = {result.b} != {expected}"
    cert = certificate(f, g, m, n, result.b)
    report = {}
    if not verify_certificate(f, g, m, n, result.b, cert, report=report):
        return False, f"round-trip certificate failed the {report.get('failed_check')} check"
    return True, f"b = {result.b}; certificate verified"


def _run_certificate_fixture(fx):
    f, g = _fg(fx)
    m, n = int(fx.one("m")), int(fx.one("N"))
    b = _s_poly(fx.one("b"))
    sig = _sig1(fx)
    cert = [(k + 1, parse_operator(line, sig)) for k, line in enumerate(fx.body)]
    report = {}
    if not verify_certificate(f, g, m, n, b, cert, report=report):
        return False, f"certificate failed the {report.get('failed_check')} check"
    return True, "bundled certificate verified"


def _run_three_var(fx):
    f, g = _fg(fx)
    supplied = [parse_poly(line, ("s1", "s2")) for line in fx.body]
    data = bs_ideal(f, g, supplied=supplied)
    sig = _sig1(fx)
    half = weyl_from_poly(sig, _s_poly("s + 1/2"))
    spec1 = specialized_annihilator(f, g, 1)
    quot = transporter(spec1, half)
    if ideal_equal(quot, spec1):
        return False, "quotient by s+1/2 did not enlarge the m=1 specialization"
    sat1 = central_saturation(spec1)
    if not sat1.changed or not ideal_equal(list(sat1.generators), quot):
        return False, "m=1 saturation differs from the quotient by s+1/2"
    i1 = ann_rational(f, g, 1, B=data)
    if not ideal_equal(i1, quot):
        return False, "m=1 annihilator differs from the quotient by s+1/2"
    for m in (2, 3):
        if central_saturation(specialized_annihilator(f, g, m)).changed:
            return False, f"m={m} specialization is not saturated"
    expected = _s_poly(fx.one("expect-b")).monic()
    for n in (1, 2, 3, 4):
        result = bs_rational_elim(f, g, 0, n, B=data)
        if result.status != "ok" or result.b != expected:
            return False, f"N={n}: got {result.status} {result.b}, expected {expected}"
    return True, "saturations and N=1..4 polynomials all match"


_RUNNERS = {
    "ann-pair-ideal": _run_ann_pair_ideal,
    "bs-ideal": _run_bs_ideal,
    "bs-rational": _run_bs_rational,
    "ann-rational-saturated": _run_ann_rational_saturated,
    "ann-rational-extra": _run_ann_rational_extra,
    "saturation": _run_saturation,
    "certificate-roundtrip": _run_certificate_roundtrip,
    "certificate-fixture": _run_certificate_fixture,
    "three-var": _run_three_var,
}


def run_fixture(fx):
    """Execute one fixture and report pass/fail with timing."""
    runner = _RUNNERS.get(fx.kind)
    start = time.monotonic()
    if runner is None:
        return FixtureResult(fx.name, False, f"unknown kind {fx.kind!r}", 0.0)
    try:
        passed, detail = runner(fx)
    except Exception as exc:       # a fixture crash is a failure, not an abort
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return FixtureResult(fx.name, passed, detail, time.monotonic() - start)


def run_corpus(name_filter=None, include_stretch=False):
    """Run every bundled fixture, optionally filtered; returns FixtureResults."""
    results = []
    for fx in load_fixtures():
        if name_filter and name_filter not in fx.name:
            continue
        if not include_stretch and "stretch" in fx.tags:
            continue
        results.append(run_fixture(fx))
    return results
