"""Annihilators of twisted powers, global b-functions, and the ideal of
two-parameter functional equations for a pair of polynomials.

The annihilator of f1^{s1} f2^{s2} is computed by adjoining, per polynomial,
a Weyl pair (tj, dtj) and central tags uj, vj, eliminating the tags, and
translating the surviving bi-homogeneous operators into D[s1,s2] through the
normal-ordering identity tj^a dtj^a = theta (theta-1) ... (theta-a+1) with
theta |-> -sj - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import WeylElement, make_signature, poly_from_weyl, weyl_from_poly
from .errors import HomogeneityError, InvalidInputError
from .groebner import buchberger, eliminate, left_normal_form
from .poly import Poly, integer_shift_lines, univariate_gcd

_TAG_NAMES = ("t1", "u1", "v1", "t2", "u2", "v2", "dt1", "dt2")


def _position_vars(polys):
    seen = dict.fromkeys(v for p in polys for v in p.vars)
    out = tuple(seen)
    clash = set(out) & set(_TAG_NAMES)
    if clash:
        raise InvalidInputError(f"input variables collide with tags: {sorted(clash)}")
    return out


def _check_inputs(polys):
    for p in polys:
        if p.is_zero() or p.is_constant():
            raise InvalidInputError("polynomial must be non-constant")


def _weights(mono, t_idx, dt_idx):
    return tuple(mono[t] - mono[d] for t, d in zip(t_idx, dt_idx))


def _annihilator_core(polys, param_names, config):
    """Generators of Ann_{D[params]} of prod_j fj^{sj}."""
    _check_inputs(polys)
    xvars = _position_vars(polys)
    p = len(polys)
    tnames = tuple(f"t{j + 1}" for j in range(p))
    unames = tuple(f"u{j + 1}" for j in range(p))
    vnames = tuple(f"v{j + 1}" for j in range(p))
    big = make_signature(xvars + tnames, central_aux=unames + vnames)
    lifted = [poly.with_variables(xvars) for poly in polys]

    gens = []
    for j, f in enumerate(lifted):
        t = WeylElement.variable(big, tnames[j])
        u = WeylElement.variable(big, unames[j])
        v = WeylElement.variable(big, vnames[j])
        gens.append(t - u * weyl_from_poly(big, f))
        gens.append(u * v - 1)
    for x in xvars:
        op = WeylElement.variable(big, "d" + x)
        for j, f in enumerate(lifted):
            fx = f.derivative(x)
            if fx.is_zero():
                continue
            u = WeylElement.variable(big, unames[j])
            dt = WeylElement.variable(big, "d" + tnames[j])
            op = op + u * weyl_from_poly(big, fx) * dt
        gens.append(op)

    survivors = eliminate(gens, unames + vnames, config)

    t_idx = tuple(big.index[n] for n in tnames)
    dt_idx = tuple(big.index["d" + n] for n in tnames)
    target = make_signature(xvars, central_params=param_names)
    out = []
    for el in survivors:
        out.append(_theta_rewrite(el, big, target, t_idx, dt_idx, param_names))
    return out


def _balance(el, big, tnames, t_idx, dt_idx):
    """Left-multiply by dtj^w or tj^-w so every weight becomes zero."""
    monos = iter(el.terms)
    w = _weights(next(monos), t_idx, dt_idx)
    for mono in monos:
        if _weights(mono, t_idx, dt_idx) != w:
            raise HomogeneityError(
                f"elimination produced a non-homogeneous operator: {el}")
    for j, wj in enumerate(w):
        if wj > 0:
            el = WeylElement.variable(big, "d" + tnames[j]) ** wj * el
        elif wj < 0:
            el = WeylElement.variable(big, tnames[j]) ** (-wj) * el
    return el


def _theta_rewrite(el, big, target, t_idx, dt_idx, param_names):
    tnames = tuple(big.names[i] for i in t_idx)
    el = _balance(el, big, tnames, t_idx, dt_idx)
    xmap = []
    for i, name in enumerate(big.names):
        if i in t_idx or i in dt_idx:
            xmap.append(None)
        else:
            xmap.append(target.index.get(name))
    param_idx = tuple(target.index[n] for n in param_names)
    s_polys = [Poly.variable(param_names, n) for n in param_names]
    out = {}
    for mono, c in el.terms.items():
        base = [0] * target.nvars
        for i, e in enumerate(mono):
            if not e:
                continue
            j = xmap[i]
            if j is None:
                if i not in t_idx and i not in dt_idx:
                    raise InvalidInputError(
                        f"tag variable {big.names[i]!r} survived elimination")
            else:
                base[j] = e
        factor = Poly.constant(param_names, 1)
        for j, (ti, di) in enumerate(zip(t_idx, dt_idx)):
            a = mono[ti]
            if mono[di] != a:
                raise HomogeneityError("balanced term is not weight-zero")
            for k in range(a):
                factor = factor * (-s_polys[j] - 1 - k)
        for pm, pc in factor.terms.items():
            m2 = list(base)
            for idx, e in zip(param_idx, pm):
                m2[idx] = e
            key = tuple(m2)
            acc = out.get(key)
            val = c * pc
            out[key] = val if acc is None else acc + val
    return WeylElement(target, out)


def ann_pair(f, g, config=None):
    """Generators of the annihilator of f^{s1} g^{s2} in D[s1, s2]."""
    return _annihilator_core([f, g], ("s1", "s2"), config)


def ann_one(f, config=None):
    """Generators of the annihilator of f^s in D[s]."""
    return _annihilator_core([f], ("s",), config)


def _central_elimination(gens, config):
    """Survivors of eliminating every position and derivation variable."""
    sig = gens[0].sig
    weyl_names = tuple(sig.names[i] for i in
                       sig.position_indices + sig.derivation_indices)
    return eliminate(gens, weyl_names, config)


def global_b(f, config=None):
    """Monic generator of (Ann(f^s) + <f>) intersected with C[s]."""
    ann = ann_one(f, config)
    sig = ann[0].sig
    xvars = tuple(sig.names[i] for i in sig.position_indices)
    gens = ann + [weyl_from_poly(sig, f.with_variables(xvars))]
    survivors = _central_elimination(gens, config)
    if not survivors:
        raise InvalidInputError("no functional equation found")
    acc = None
    for el in survivors:
        p = poly_from_weyl(el, ("s",))
        acc = p if acc is None else univariate_gcd(acc, p)
    return acc.monic()


@dataclass(frozen=True)
class BSIdealData:
    """Generators of the two-parameter functional-equation ideal of (f, g),
    with the integer shift lines each generator vanishes on.

    L, e belong to the generator with the smallest e; epsilon = min e_b - 1.
    """

    generators: tuple
    line_sets: tuple
    L: frozenset
    e: int
    epsilon: int


def _e_of(lines):
    return 1 if not lines else max(lines)


def bs_ideal(f, g, supplied=None, config=None):
    """BSIdealData for the pair (f, g).

    supplied: optional externally produced generators (list of Poly in
    s1, s2); each is validated by membership before being trusted.
    """
    _check_inputs([f, g])
    ann = ann_pair(f, g, config)
    sig = ann[0].sig
    xvars = tuple(sig.names[i] for i in sig.position_indices)
    fg = weyl_from_poly(sig, (f * g).with_variables(xvars))
    if supplied is not None:
        gb = buchberger(ann + [fg], config=config)
        gens = []
        for b in supplied:
            b = b.with_variables(("s1", "s2"))
            if not left_normal_form(weyl_from_poly(sig, b), gb).is_zero():
                raise InvalidInputError(
                    f"supplied generator fails the membership check: {b}")
            gens.append(b)
    else:
        survivors = _central_elimination(ann + [fg], config)
        gens = [poly_from_weyl(el, ("s1", "s2")) for el in survivors]
    if not gens:
        raise InvalidInputError("no two-parameter functional equation found")
    line_sets = tuple(frozenset(integer_shift_lines(b)) for b in gens)
    es = [_e_of(ls) for ls in line_sets]
    best = min(range(len(gens)), key=lambda i: es[i])
    return BSIdealData(tuple(gens), line_sets,
                       frozenset(line_sets[best]), es[best], min(es) - 1)


def c_condition(data, m):
    """True iff some generator b admits no i >= 1 with m + 2i in L_b."""
    if m < 0:
        raise InvalidInputError("m must be nonnegative")
    for lines in data.line_sets:
        if not any(ell >= m + 2 and (ell - m) % 2 == 0 for ell in lines):
            return True
    return False
