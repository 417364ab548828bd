"""Symbolic elements h/(f^a g^b) * f^s1 g^s2 and the operator action on them.

The ambient module is free of rank one over a localization, so an element is
zero iff its numerator h is zero; equality needs no gcd, only cross
multiplication by denominator powers.
"""

from __future__ import annotations

from .errors import DivisionRemainderError, InvalidInputError, SignatureMismatchError
from .poly import Poly

_TWO_PARAMS = ("s1", "s2")
_ONE_PARAM = ("s",)


class TwistedElement:
    """h/(f^a g^b) * f^s1 g^s2 (two_params=True) or h/(f^a g^b) * (f/g)^s.

    h is a Poly over the position variables plus the parameter names; f and g
    are Polys over the position variables, nonzero and non-constant.
    In the one-parameter form the element denotes h * f^(s-a) * g^(-s-b).
    """

    __slots__ = ("h", "f", "g", "a", "b", "two_params", "pos_vars")

    def __init__(self, h, f, g, a=0, b=0, two_params=False):
        if f.is_zero() or f.is_constant() or g.is_zero() or g.is_constant():
            raise InvalidInputError("f and g must be non-constant")
        if f.vars != g.vars:
            g = g.with_variables(f.vars)
        if a < 0 or b < 0:
            raise InvalidInputError("denominator exponents must be >= 0")
        pos = f.vars
        params = _TWO_PARAMS if two_params else _ONE_PARAM
        hv = pos + params
        object.__setattr__(self, "pos_vars", pos)
        object.__setattr__(self, "h", h.with_variables(hv) if h.vars != hv else h)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "two_params", two_params)

    def __setattr__(self, name, value):
        raise AttributeError("TwistedElement is immutable")

    @classmethod
    def generator(cls, f, g, m=0, two_params=False):
        """The canonical element 1/g^m (f/g)^s, or f^s1 g^s2 when two_params."""
        params = _TWO_PARAMS if two_params else _ONE_PARAM
        h = Poly.constant(f.vars + params, 1)
        return cls(h, f, g, 0, 0 if two_params else m, two_params)

    def is_zero(self):
        return self.h.is_zero()

    def _compatible(self, other):
        if (self.two_params != other.two_params or self.f != other.f
                or self.g != other.g):
            raise SignatureMismatchError("twisted elements over different data")

    def __eq__(self, other):
        if not isinstance(other, TwistedElement):
            return NotImplemented
        self._compatible(other)
        hv = self.h.vars
        fa = self.f.with_variables(hv)
        ga = self.g.with_variables(hv)
        left = self.h * fa ** other.a * ga ** other.b
        right = other.h * fa ** self.a * ga ** self.b
        return left == right

    __hash__ = None

    def __add__(self, other):
        self._compatible(other)
        a, b = max(self.a, other.a), max(self.b, other.b)
        hv = self.h.vars
        fa = self.f.with_variables(hv)
        ga = self.g.with_variables(hv)
        h1 = self.h * fa ** (a - self.a) * ga ** (b - self.b)
        h2 = other.h * fa ** (a - other.a) * ga ** (b - other.b)
        return TwistedElement(h1 + h2, self.f, self.g, a, b, self.two_params)

    def __neg__(self):
        return TwistedElement(-self.h, self.f, self.g, self.a, self.b, self.two_params)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        return TwistedElement(self.h * c, self.f, self.g, self.a, self.b,
                              self.two_params)

    # -- the module action ---------------------------------------------------

    def mul_position(self, name, power=1):
        h = self.h * Poly.variable(self.h.vars, name) ** power
        return TwistedElement(h, self.f, self.g, self.a, self.b, self.two_params)

    def mul_param(self, name, power=1):
        h = self.h * Poly.variable(self.h.vars, name) ** power
        return TwistedElement(h, self.f, self.g, self.a, self.b, self.two_params)

    def apply_derivation(self, name):
        """d/d name; one denominator power of f and of g is added."""
        hv = self.h.vars
        f = self.f.with_variables(hv)
        g = self.g.with_variables(hv)
        df = self.f.derivative(name).with_variables(hv)
        dg = self.g.derivative(name).with_variables(hv)
        if self.two_params:
            s1 = Poly.variable(hv, "s1")
            s2 = Poly.variable(hv, "s2")
            fexp = s1 - self.a
            gexp = s2 - self.b
        else:
            s = Poly.variable(hv, "s")
            fexp = s - self.a
            gexp = -s - self.b
        h = f * g * self.h.derivative(name) + fexp * g * df * self.h \
            + gexp * f * dg * self.h
        return TwistedElement(h, self.f, self.g, self.a + 1, self.b + 1,
                              self.two_params)

    def reduced(self):
        """Cancel full powers of f and of g from h (display form)."""
        h, a, b = self.h, self.a, self.b
        hv = h.vars
        f = self.f.with_variables(hv)
        g = self.g.with_variables(hv)
        while a > 0 and not h.is_zero():
            try:
                h = h.exact_div(f)
                a -= 1
            except DivisionRemainderError:
                break
        while b > 0 and not h.is_zero():
            try:
                h = h.exact_div(g)
                b -= 1
            except DivisionRemainderError:
                break
        if h.is_zero():
            a = b = 0
        return TwistedElement(h, self.f, self.g, a, b, self.two_params)

    def __str__(self):
        e = self.reduced()
        core = "f^s1*g^s2" if self.two_params else "(f/g)^s"
        if e.a == 0 and e.b == 0:
            return f"({e.h}) * {core}"
        return f"({e.h}) / (f^{e.a}*g^{e.b}) * {core}"

    def __repr__(self):
        return f"TwistedElement({self!s})"


def act_on_twisted(op, elem):
    """Apply a Weyl operator to a twisted element term by term.

    The operator must live over a signature whose parameter block matches the
    element's flag: ("s",) for one-parameter elements, ("s1","s2") for
    two-parameter ones. Positions must match the element's variables.
    """
    sig = op.sig
    expected = _TWO_PARAMS if elem.two_params else _ONE_PARAM
    if sig.central_params != expected:
        raise SignatureMismatchError(
            f"operator params {sig.central_params} do not match element {expected}")
    if op.uses_any(sig.aux_indices):
        raise InvalidInputError("operator uses auxiliary variables")
    pos_names = tuple(x for x, _ in sig.weyl_pairs)
    if tuple(elem.pos_vars) != pos_names:
        raise SignatureMismatchError(
            f"operator positions {pos_names} vs element {tuple(elem.pos_vars)}")
    result = None
    for mono, coeff in op.terms.items():
        part = elem
        for j, di in enumerate(sig.derivation_indices):
            for _ in range(mono[di]):
                part = part.apply_derivation(pos_names[j])
        for j, xi in enumerate(sig.position_indices):
            if mono[xi]:
                part = part.mul_position(pos_names[j], mono[xi])
        for j, pi in enumerate(sig.param_indices):
            if mono[pi]:
                part = part.mul_param(sig.central_params[j], mono[pi])
        part = part.scaled(coeff)
        result = part if result is None else result + part
    if result is None:
        return TwistedElement(Poly.zero(elem.h.vars), elem.f, elem.g,
                              0, 0, elem.two_params)
    return result
