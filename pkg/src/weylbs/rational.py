"""Annihilators and Bernstein-Sato polynomials of rational functions f/g.

I_m(s) denotes the annihilator in D[s] of (1/g^m)(f/g)^s. The N-term
polynomial b^{(N)} is the monic generator of the ideal of b satisfying
b(s) g^N = Q + sum_k P_k f^k g^{N-k} with Q in I_{m+N}(s).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (WeylElement, make_signature, poly_from_weyl,
                      weyl_from_poly)
from .annihilator import ann_pair, bs_ideal
from .errors import InvalidInputError, ResourceLimitError
from .groebner import (buchberger, central_saturation, eliminate,
                       left_normal_form, nf_with_cofactors, transporter)
from .poly import Poly, univariate_gcd
from .twisted import TwistedElement, act_on_twisted

_S = Poly.variable(("s",), "s")


@dataclass(frozen=True)
class RationalBSResult:
    """Outcome of an N-term computation.

    status: "ok" (b is the monic polynomial), "zero" (the ideal is zero;
    only the elimination method may assert this), or "inconclusive" (the
    degree cap was reached without finding a dependence).
    """

    status: str
    b: Poly | None
    N: int
    m: int
    method: str
    certificate: tuple | None = None
    stats: dict = field(default_factory=dict)

    def is_zero(self):
        return self.status == "zero"


def _check_fgm(f, g, m):
    for p in (f, g):
        if p.is_zero() or p.is_constant():
            raise InvalidInputError("f and g must be non-constant")
    if m < 0:
        raise InvalidInputError("m must be nonnegative")


def _one_param_sig(ann):
    return ann[0].sig


def specialized_annihilator(f, g, m, ann=None, config=None):
    """Generators of I(s, -s-m): the two-parameter annihilator restricted
    to the line s1 = s, s2 = -s - m."""
    _check_fgm(f, g, m)
    if ann is None:
        ann = ann_pair(f, g, config)
    sig2 = ann[0].sig
    xvars = tuple(sig2.names[i] for i in sig2.position_indices)
    target = make_signature(xvars, central_params=("s",))
    sub = {"s1": _S, "s2": -_S - m}
    return [a.substitute_params(sub, target) for a in ann]


def _shift_s(el, gamma):
    """s |-> s - gamma."""
    return el.substitute_params({"s": _S - gamma}, el.sig)


def ann_rational(f, g, m, B=None, step_mode="direct", config=None):
    """Generators of I_m(s) = Ann_{D[s]} (1/g^m)(f/g)^s.

    If the shift-line analysis of the pair's functional-equation ideal
    shows gamma = epsilon - m <= 0, the specialized annihilator is merely
    saturated. Otherwise I_m is pulled down from I_epsilon through
    syzygies against powers of f: in one step (direct) or one unit shift
    at a time (iterated).
    """
    _check_fgm(f, g, m)
    if step_mode not in ("direct", "iterated"):
        raise InvalidInputError(f"unknown step_mode {step_mode!r}")
    ann2 = ann_pair(f, g, config)
    if B is None:
        B = bs_ideal(f, g, config=config)
    gamma = B.epsilon - m
    if gamma <= 0:
        base = specialized_annihilator(f, g, m, ann=ann2, config=config)
        return list(central_saturation(base, config=config).generators)
    eps = B.epsilon
    base = specialized_annihilator(f, g, eps, ann=ann2, config=config)
    cur = list(central_saturation(base, config=config).generators)
    sig = _one_param_sig(cur)
    xvars = tuple(sig.names[i] for i in sig.position_indices)
    f_lift = f.with_variables(xvars)
    if step_mode == "direct":
        shifted = [_shift_s(a, gamma) for a in cur]
        t = transporter(shifted, weyl_from_poly(sig, f_lift ** gamma), config)
        return list(buchberger(t, config=config).elements)
    for _ in range(gamma):
        shifted = [_shift_s(a, 1) for a in cur]
        t = transporter(shifted, weyl_from_poly(sig, f_lift), config)
        cur = list(buchberger(t, config=config).elements)
    return cur


def _n_term_data(f, g, m, N, B, config):
    """(generators of J, count of annihilator part, signature, embeddings)."""
    if N < 1:
        raise InvalidInputError("N must be at least 1")
    ann = ann_rational(f, g, m + N, B=B, config=config)
    sig = _one_param_sig(ann)
    xvars = tuple(sig.names[i] for i in sig.position_indices)
    f_l = f.with_variables(xvars)
    g_l = g.with_variables(xvars)
    powers = [weyl_from_poly(sig, f_l ** k * g_l ** (N - k))
              for k in range(1, N + 1)]
    g_n = weyl_from_poly(sig, g_l ** N)
    return ann, powers, g_n, sig


def bs_rational_linear(f, g, m, N, max_degree=24, B=None, config=None):
    """N-term polynomial of f/g at m by iterated normal forms of s^k g^N.

    Finds the minimal-degree monic dependence among the normal forms via
    exact incremental elimination. Cannot certify zero: exceeding
    max_degree yields status "inconclusive".
    """
    _check_fgm(f, g, m)
    if max_degree < 1:
        raise InvalidInputError("max_degree must be at least 1")
    ann, powers, g_n, sig = _n_term_data(f, g, m, N, B, config)
    gb = buchberger(ann + powers, config=config)
    stats = {"gb_size": len(gb), "gb_pairs": gb.stats.get("pairs")}
    s_el = WeylElement.variable(sig, "s")
    p_k = left_normal_form(g_n, gb)
    if p_k.is_zero():
        return RationalBSResult("ok", Poly.constant(("s",), 1), N, m,
                                "linear", None, stats)
    order_key = gb.order.key
    rows = []          # reduced row echelon: (pivot, terms, rep)
    k = 0
    while k <= max_degree:
        terms = dict(p_k.terms)
        rep = {k: 1}
        for pivot, row_terms, row_rep in rows:
            c = terms.get(pivot)
            if not c:
                continue
            for mono, rc in row_terms.items():
                acc = terms.get(mono, 0) - c * rc
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
            for i, rc in row_rep.items():
                acc = rep.get(i, 0) - c * rc
                if acc:
                    rep[i] = acc
                else:
                    rep.pop(i, None)
        if not terms:
            b = Poly(("s",), {(i,): c for i, c in rep.items()})
            stats["steps"] = k
            return RationalBSResult("ok", b.monic(), N, m, "linear",
                                    None, stats)
        pivot = max(terms, key=order_key)
        inv = 1 / terms[pivot]
        terms = {mo: c * inv for mo, c in terms.items()}
        rep = {i: c * inv for i, c in rep.items()}
        for idx, (opiv, oterms, orep) in enumerate(rows):
            c = oterms.get(pivot)
            if not c:
                continue
            for mono, rc in terms.items():
                acc = oterms.get(mono, 0) - c * rc
                if acc:
                    oterms[mono] = acc
                else:
                    oterms.pop(mono, None)
            for i, rc in rep.items():
                acc = orep.get(i, 0) - c * rc
                if acc:
                    orep[i] = acc
                else:
                    orep.pop(i, None)
        rows.append((pivot, terms, rep))
        p_k = left_normal_form(s_el * p_k, gb)
        k += 1
    stats["steps"] = k
    return RationalBSResult("inconclusive", None, N, m, "linear", None, stats)


def bs_rational_elim(f, g, m, N, B=None, config=None):
    """N-term polynomial by transporter and elimination; complete: a zero
    ideal is detected and reported as status "zero"."""
    _check_fgm(f, g, m)
    ann, powers, g_n, sig = _n_term_data(f, g, m, N, B, config)
    t = transporter(ann + powers, g_n, config)
    stats = {"transporter_size": len(t)}
    if not t:
        return RationalBSResult("zero", None, N, m, "elimination", None, stats)
    weyl_names = tuple(sig.names[i] for i in
                       sig.position_indices + sig.derivation_indices)
    survivors = eliminate(t, weyl_names, config)
    stats["eliminated_size"] = len(survivors)
    if not survivors:
        return RationalBSResult("zero", None, N, m, "elimination", None, stats)
    acc = None
    for el in survivors:
        p = poly_from_weyl(el, ("s",))
        acc = p if acc is None else univariate_gcd(acc, p)
    return RationalBSResult("ok", acc.monic(), N, m, "elimination", None, stats)


def certificate(f, g, m, N, b, B=None, config=None):
    """Cofactors P_k with b g^N - sum_k P_k f^k g^{N-k} in I_{m+N}(s)."""
    _check_fgm(f, g, m)
    ann, powers, g_n, sig = _n_term_data(f, g, m, N, B, config)
    target = weyl_from_poly(sig, b.with_variables(("s",))) * g_n
    nf, cof = nf_with_cofactors(target, ann + powers, config=config)
    if not nf.is_zero():
        raise InvalidInputError("b does not satisfy an N-term equation")
    offset = len(ann)
    return [(k, cof[offset + k - 1]) for k in range(1, N + 1)]


def verify_certificate(f, g, m, N, b, cert, ann=None, config=None,
                       report=None):
    """Independent double check of a certificate.

    (action) the combination annihilates the twisted element
    1/g^{m+N} (f/g)^s exactly; (membership) it reduces to zero against a
    basis of I_{m+N}(s). Both must hold. On failure the report dict, if
    given, records which check failed.
    """
    _check_fgm(f, g, m)
    if ann is None:
        ann = ann_rational(f, g, m + N, config=config)
    sig = _one_param_sig(ann)
    xvars = tuple(sig.names[i] for i in sig.position_indices)
    f_l = f.with_variables(xvars)
    g_l = g.with_variables(xvars)
    combo = weyl_from_poly(sig, b.with_variables(("s",))) \
        * weyl_from_poly(sig, g_l ** N)
    for k, p_k in cert:
        if not 1 <= k <= N:
            raise InvalidInputError(f"certificate index {k} out of range")
        combo = combo - p_k * weyl_from_poly(sig, f_l ** k * g_l ** (N - k))
    elem = TwistedElement.generator(f_l, g_l, m=m + N)
    if not act_on_twisted(combo, elem).is_zero():
        if report is not None:
            report["failed_check"] = "action"
        return False
    gb = buchberger(ann, config=config)
    if not left_normal_form(combo, gb).is_zero():
        if report is not None:
            report["failed_check"] = "membership"
        return False
    return True
