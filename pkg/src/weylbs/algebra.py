"""Normally ordered arithmetic in Weyl algebras extended by central variables.

A signature fixes Weyl pairs (x_i, dx_i) plus commuting parameters and
auxiliary variables. Elements are stored as maps from dense exponent tuples
(read in the normal order x^a dx^b central^c) to rational coefficients.
The only nontrivial relation is dx_i * x_i = x_i * dx_i + 1 inside a pair.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from operator import add

from gmpy2 import mpq

from .errors import InvalidInputError, SignatureMismatchError
from .orders import BlockOrder, DegRevLex, Lex
from .poly import MAX_EXPONENT, Poly, check_exponent, qq, render_terms

_ONE = mpq(1)
_MUL_CACHE_CAP = 400_000


@lru_cache(maxsize=65536)
def _leibniz_table(alpha, beta):
    """Coefficients of dx^beta * x^alpha = sum_k C(a,k)C(b,k)k! x^(a-k)dx^(b-k)."""
    kmax = min(alpha, beta)
    return tuple((k, comb(alpha, k) * comb(beta, k) * factorial(k))
                 for k in range(kmax + 1))


class AlgebraSignature:
    """Variable layout: positions, then derivations, then params, then aux.

    Parameters
    ----------
    weyl_pairs : sequence of (position_name, derivation_name)
    central_params : sequence of str
        The s-variables the algebra is polynomial over.
    central_aux : sequence of str
        Extra commuting helpers (u, v, saturation tags); same semantics as
        params but kept apart so parameter-only logic can reject them.
    """

    __slots__ = ("weyl_pairs", "central_params", "central_aux", "names",
                 "index", "nvars", "pair_indices", "position_indices",
                 "derivation_indices", "param_indices", "aux_indices",
                 "central_indices", "_mul_cache")

    def __init__(self, weyl_pairs, central_params=(), central_aux=()):
        self.weyl_pairs = tuple(tuple(p) for p in weyl_pairs)
        self.central_params = tuple(central_params)
        self.central_aux = tuple(central_aux)
        names = []
        for x, _ in self.weyl_pairs:
            names.append(x)
        for _, d in self.weyl_pairs:
            names.append(d)
        names.extend(self.central_params)
        names.extend(self.central_aux)
        if len(set(names)) != len(names):
            raise InvalidInputError(f"duplicate variable names in {names}")
        self.names = tuple(names)
        self.index = {n: i for i, n in enumerate(names)}
        self.nvars = len(names)
        n = len(self.weyl_pairs)
        self.position_indices = tuple(range(n))
        self.derivation_indices = tuple(range(n, 2 * n))
        self.pair_indices = tuple(zip(self.position_indices, self.derivation_indices))
        k = len(self.central_params)
        self.param_indices = tuple(range(2 * n, 2 * n + k))
        self.aux_indices = tuple(range(2 * n + k, self.nvars))
        self.central_indices = self.param_indices + self.aux_indices
        self._mul_cache = {}

    def __eq__(self, other):
        return (isinstance(other, AlgebraSignature)
                and self.weyl_pairs == other.weyl_pairs
                and self.central_params == other.central_params
                and self.central_aux == other.central_aux)

    def __hash__(self):
        return hash((self.weyl_pairs, self.central_params, self.central_aux))

    def __repr__(self):
        return (f"AlgebraSignature({list(self.weyl_pairs)}, "
                f"params={list(self.central_params)}, aux={list(self.central_aux)})")

    def zero_mono(self):
        return (0,) * self.nvars

    def unit_mono(self, name):
        i = self.index[name]
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def mono_mul(self, a, b):
        """Normally ordered product of two monomials: tuple of (mono, int coeff)."""
        prod = tuple(map(add, a, b))
        if max(prod, default=0) > MAX_EXPONENT:
            for e in prod:
                check_exponent(e)
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        interacting = [(ix, idx) for ix, idx in self.pair_indices
                       if a[idx] and b[ix]]
        if not interacting:
            return ((prod, 1),)
        combos = [(list(prod), 1)]
        for ix, idx in interacting:
            table = _leibniz_table(b[ix], a[idx])
            new = []
            for m, w in combos:
                for k, wk in table:
                    if k == 0:
                        new.append((m, w))
                    else:
                        m2 = list(m)
                        m2[ix] -= k
                        m2[idx] -= k
                        new.append((m2, w * wk))
            combos = new
        result = tuple((tuple(m), w) for m, w in combos)
        if len(self._mul_cache) >= _MUL_CACHE_CAP:
            self._mul_cache.clear()
        self._mul_cache[key] = result
        return result

    # -- order builders --------------------------------------------------

    def order_weyl_degrevlex(self):
        """<_D on the (x, dx) block only."""
        return DegRevLex(self.position_indices + self.derivation_indices)

    def order_ds_block(self):
        """The D[s] block order: (x, dx) compared first under <_D, params break ties."""
        blocks = [self.order_weyl_degrevlex()]
        if self.param_indices:
            blocks.append(DegRevLex(self.param_indices))
        if self.aux_indices:
            blocks.append(DegRevLex(self.aux_indices))
        return BlockOrder(blocks) if len(blocks) > 1 else blocks[0]

    def order_total_degrevlex(self):
        return DegRevLex(tuple(range(self.nvars)))

    def order_eliminating(self, elim_names, rest_order=None):
        """Block order making every monomial touching elim_names dominant."""
        elim = tuple(self.index[n] for n in elim_names)
        rest = tuple(i for i in range(self.nvars) if i not in set(elim))
        if rest_order is None:
            rest_order = DegRevLex(rest)
        return BlockOrder([DegRevLex(elim), rest_order])


class WeylElement:
    """Element of the algebra fixed by a signature, in canonical normal order."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig, terms=()):
        clean = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != sig.nvars:
                raise InvalidInputError(
                    f"monomial {mono} has {len(mono)} slots, expected {sig.nvars}")
            c = qq(coeff)
            if c:
                acc = clean.get(mono)
                if acc is None:
                    clean[mono] = c
                else:
                    acc = acc + c
                    if acc:
                        clean[mono] = acc
                    else:
                        del clean[mono]
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, sig):
        return cls(sig)

    @classmethod
    def one(cls, sig):
        return cls(sig, {sig.zero_mono(): _ONE})

    @classmethod
    def constant(cls, sig, value):
        return cls(sig, {sig.zero_mono(): qq(value)})

    @classmethod
    def variable(cls, sig, name):
        return cls(sig, {sig.unit_mono(name): _ONE})

    # -- basic structure -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            if isinstance(other, int):
                return self == WeylElement.constant(self.sig, other)
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    __hash__ = None

    def _check(self, other):
        if isinstance(other, WeylElement):
            if other.sig != self.sig:
                raise SignatureMismatchError(
                    f"{self.sig!r} vs {other.sig!r}")
            return other
        return WeylElement.constant(self.sig, other)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                acc = acc + c
                if acc:
                    out[m] = acc
                else:
                    del out[m]
        return WeylElement(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.sig, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            c = qq(other)
            if not c:
                return WeylElement(self.sig)
            return WeylElement(self.sig, {m: co * c for m, co in self.terms.items()})
        other = self._check(other)
        sig = self.sig
        out = {}
        mono_mul = sig.mono_mul
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                c = ca * cb
                for m, w in mono_mul(ma, mb):
                    acc = out.get(m)
                    if acc is None:
                        out[m] = c * w
                    else:
                        acc = acc + c * w
                        if acc:
                            out[m] = acc
                        else:
                            del out[m]
        return WeylElement(self.sig, out)

    def __rmul__(self, other):
        # scalars commute; anything else must use __mul__
        if isinstance(other, WeylElement):
            return NotImplemented
        return self * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidInputError(f"operator power must be a nonnegative int, got {n!r}")
        result = WeylElement.one(self.sig)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def uses_any(self, indices):
        idx = tuple(indices)
        return any(any(m[i] for i in idx) for m in self.terms)

    def leading_monomial(self, order):
        if not self.terms:
            raise InvalidInputError("zero element has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order):
        if not self.terms:
            return self
        return self * (_ONE / self.leading_coeff(order))

    def __str__(self):
        return render_terms(self.sig.names, self.terms)

    def __repr__(self):
        return f"WeylElement({self!s})"

    # -- actions and substitutions ------------------------------------------

    def act_on_poly(self, h):
        """Apply the operator to a commutative polynomial.

        h lives over position variables and (optionally) central params, which
        act as scalars. Auxiliary variables must be absent from the operator.
        """
        sig = self.sig
        if self.uses_any(sig.aux_indices):
            raise InvalidInputError("operator uses auxiliary variables")
        target_vars = tuple(sig.names[i] for i in sig.position_indices + sig.param_indices)
        h = h if h.vars == target_vars else h.with_variables(target_vars)
        npos = len(sig.position_indices)
        result = Poly.zero(target_vars)
        for mono, coeff in self.terms.items():
            part = h
            for j, di in enumerate(sig.derivation_indices):
                for _ in range(mono[di]):
                    part = part.derivative(target_vars[j])
                if part.is_zero():
                    break
            if part.is_zero():
                continue
            shift = tuple(mono[i] for i in sig.position_indices) + \
                tuple(mono[i] for i in sig.param_indices)
            out = {}
            for m, c in part.terms.items():
                m2 = tuple(e + s for e, s in zip(m, shift))
                out[m2] = out.get(m2, 0) + c * coeff
            result = result + Poly(target_vars, out)
        return result

    def substitute_params(self, mapping, target_sig):
        """Image under a central substitution: each param maps to an affine form.

        mapping values are Poly over target_sig.central_params (or scalars);
        each must have total degree <= 1 so the map is an affine substitution.
        The Weyl pairs of both signatures must agree, and aux variables may
        not appear in the element.
        """
        sig = self.sig
        if sig.weyl_pairs != target_sig.weyl_pairs:
            raise SignatureMismatchError("substitution must preserve the Weyl pairs")
        if self.uses_any(sig.aux_indices):
            raise InvalidInputError("element uses auxiliary variables")
        pvars = target_sig.central_params
        images = []
        for name in sig.central_params:
            img = mapping.get(name)
            if img is None:
                img = Poly.variable(pvars, name)
            elif not isinstance(img, Poly):
                img = Poly.constant(pvars, img)
            elif img.vars != pvars:
                img = img.with_variables(pvars)
            if img.total_degree() > 1:
                raise InvalidInputError(f"image of {name} is not affine: {img}")
            images.append(img)
        out = {}
        n2 = len(target_sig.weyl_pairs) * 2
        for mono, coeff in self.terms.items():
            central = Poly.constant(pvars, coeff)
            for img, i in zip(images, sig.param_indices):
                if mono[i]:
                    central = central * img ** mono[i]
            head = mono[:n2]
            for pm, pc in central.terms.items():
                m2 = head + pm
                acc = out.get(m2)
                out[m2] = pc if acc is None else acc + pc
        return WeylElement(target_sig, out)


def weyl_from_poly(sig, p):
    """Embed a commutative polynomial (positions and/or centrals only)."""
    allowed = {}
    for name in p.vars:
        i = sig.index.get(name)
        if i is None:
            raise InvalidInputError(f"variable {name!r} not in signature")
        if i in sig.derivation_indices:
            raise InvalidInputError(f"{name!r} is a derivation; embedding is ambiguous")
        allowed[name] = i
    out = {}
    for mono, coeff in p.terms.items():
        m2 = [0] * sig.nvars
        for name, e in zip(p.vars, mono):
            m2[allowed[name]] = e
        out[tuple(m2)] = coeff
    return WeylElement(sig, out)


def poly_from_weyl(el, variables):
    """Extract a commutative polynomial; fails if other variables occur."""
    sig = el.sig
    keep = [sig.index[v] for v in variables]
    other = [i for i in range(sig.nvars) if i not in set(keep)]
    out = {}
    for mono, coeff in el.terms.items():
        if any(mono[i] for i in other):
            raise InvalidInputError(
                f"element is not a polynomial in {variables}: {el}")
        out[tuple(mono[i] for i in keep)] = coeff
    return Poly(tuple(variables), out)


def _role_table(sig):
    roles = {}
    for i, name in enumerate(sig.names):
        if i in sig.position_indices:
            roles[name] = "position"
        elif i in sig.derivation_indices:
            roles[name] = "derivation"
        elif i in sig.param_indices:
            roles[name] = "param"
        else:
            roles[name] = "aux"
    return roles


def convert_signature(el, target_sig):
    """Re-express el over target_sig, matching variables by name.

    Every variable el actually uses must exist in target_sig with the same
    role (position/derivation/param/aux); otherwise the commutation rules
    would silently change.
    """
    sig = el.sig
    if sig == target_sig:
        return el
    src_roles = _role_table(sig)
    dst_roles = _role_table(target_sig)
    mapping = [target_sig.index.get(n) for n in sig.names]
    out = {}
    for mono, c in el.terms.items():
        m2 = [0] * target_sig.nvars
        for i, e in enumerate(mono):
            if not e:
                continue
            name = sig.names[i]
            j = mapping[i]
            if j is None:
                raise InvalidInputError(
                    f"variable {name!r} absent from target signature")
            if src_roles[name] != dst_roles[name]:
                raise InvalidInputError(
                    f"variable {name!r} changes role "
                    f"({src_roles[name]} -> {dst_roles[name]})")
            m2[j] = e
        key = tuple(m2)
        acc = out.get(key)
        out[key] = c if acc is None else acc + c
    return WeylElement(target_sig, out)


def derivation_names(position_names):
    return tuple("d" + x for x in position_names)


def make_signature(position_names, central_params=(), central_aux=()):
    """Standard signature: pairs (x, dx) for each position name."""
    pairs = tuple(zip(position_names, derivation_names(position_names)))
    return AlgebraSignature(pairs, central_params, central_aux)
