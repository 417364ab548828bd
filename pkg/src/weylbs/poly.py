"""Exact commutative polynomials over Q with named variables.

Monomials are dense exponent tuples, one slot per variable. Coefficients are
gmpy2.mpq rationals; floats are rejected at the boundary so no approximation
can enter the engine.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

from .errors import (
    DivisionRemainderError,
    ExponentOverflowError,
    InvalidInputError,
    ResourceLimitError,
)

# Hard cap on any single exponent. Python ints never wrap, so this exists to
# turn runaway inputs into a diagnostic instead of an allocation storm.
MAX_EXPONENT = 10 ** 6

_ZERO = mpq(0)
_ONE = mpq(1)


def qq(value):
    """Coerce value to an exact rational. Floats are rejected."""
    if isinstance(value, type(_ZERO)):
        return value
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value)
    raise InvalidInputError(f"not an exact rational: {value!r} ({type(value).__name__})")


def check_exponent(e):
    if e > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent {e} exceeds cap {MAX_EXPONENT}")
    return e


def _degrevlex_key(mono):
    # Graded reverse lexicographic key over the full slot tuple; used only
    # for canonical display and leading-term bookkeeping inside this module.
    return (sum(mono), tuple(-e for e in reversed(mono)))


class Poly:
    """Immutable multivariate polynomial over Q.

    Parameters
    ----------
    variables : sequence of str
        Variable names; fixes the exponent-slot layout.
    terms : mapping or iterable of (exponent tuple, coefficient)
        Zero coefficients are stripped; exponents are validated.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=()):
        variables = tuple(variables)
        nv = len(variables)
        clean = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nv:
                raise InvalidInputError(
                    f"monomial {mono} has {len(mono)} slots, expected {nv}")
            for e in mono:
                if e < 0:
                    raise InvalidInputError(f"negative exponent in {mono}")
                check_exponent(e)
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
        object.__setattr__(self, "vars", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): qq(value)})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise InvalidInputError(f"unknown variable {name!r} in {variables}")
        mono = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {mono: _ONE})

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_value(self):
        if not self.terms:
            return _ZERO
        if not self.is_constant():
            raise InvalidInputError("polynomial is not constant")
        return next(iter(self.terms.values()))

    # -- ring operations -----------------------------------------------

    def _coerced(self, other):
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise InvalidInputError(
                    f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return Poly.constant(self.vars, other)

    def __add__(self, other):
        other = self._coerced(other)
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
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerced(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = qq(other)
            if not c:
                return Poly(self.vars)
            return Poly(self.vars, {m: co * c for m, co in self.terms.items()})
        other = self._coerced(other)
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(ea + eb for ea, eb in zip(ma, mb))
                c = ca * cb
                acc = out.get(m)
                if acc is None:
                    out[m] = c
                else:
                    acc = acc + c
                    if acc:
                        out[m] = acc
                    else:
                        del out[m]
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidInputError(f"polynomial power must be a nonnegative int, got {n!r}")
        check_exponent(n * max((self.total_degree(), 1)))
        result = Poly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            n >>= 1
            if base_needed:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or type(other) is type(_ZERO):
            return self.is_constant() and self.constant_value() == qq(other)
        return NotImplemented

    __hash__ = None

    # -- structure -----------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def leading(self):
        """(monomial, coeff) of the degrevlex-largest term. Zero input errors."""
        if not self.terms:
            raise InvalidInputError("zero polynomial has no leading term")
        m = max(self.terms, key=_degrevlex_key)
        return m, self.terms[m]

    def monic(self):
        if not self.terms:
            return self
        _, lc = self.leading()
        return self * (_ONE / lc)

    def derivative(self, name):
        i = self.vars.index(name)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                out[m2] = out.get(m2, _ZERO) + c * e
        return Poly(self.vars, out)

    def coefficients_in(self, name):
        """Map degree -> Poly over the remaining variables (coefficient of name^d)."""
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets = {}
        for m, c in self.terms.items():
            m2 = m[:i] + m[i + 1:]
            buckets.setdefault(m[i], {})[m2] = c
        return {d: Poly(rest, t) for d, t in sorted(buckets.items())}

    def with_variables(self, variables):
        """Re-embed into a superset (or reordering) of the variable tuple."""
        variables = tuple(variables)
        pos = []
        for v in self.vars:
            if v not in variables:
                if self.degree_in(v) > 0:
                    raise InvalidInputError(
                        f"variable {v!r} is used but absent from {variables}")
                pos.append(None)
            else:
                pos.append(variables.index(v))
        out = {}
        for m, c in self.terms.items():
            m2 = [0] * len(variables)
            for e, p in zip(m, pos):
                if p is not None:
                    m2[p] = e
            out[tuple(m2)] = out.get(tuple(m2), _ZERO) + c
        return Poly(variables, out)

    def substitute(self, assignments, variables):
        """Ring homomorphism: each own variable maps to a Poly/scalar over `variables`.

        Variables not named in `assignments` must exist in the target tuple and
        map to themselves.
        """
        variables = tuple(variables)
        images = []
        for v in self.vars:
            if v in assignments:
                img = assignments[v]
                if not isinstance(img, Poly):
                    img = Poly.constant(variables, img)
                elif img.vars != variables:
                    img = img.with_variables(variables)
            else:
                img = Poly.variable(variables, v)
            images.append(img)
        result = Poly.zero(variables)
        for m, c in self.terms.items():
            term = Poly.constant(variables, c)
            for img, e in zip(images, m):
                if e:
                    term = term * img ** e
            result = result + term
        return result

    def evaluate(self, assignments):
        """Full evaluation at rational points; every used variable must be assigned."""
        total = _ZERO
        vals = []
        for v in self.vars:
            if v in assignments:
                vals.append(qq(assignments[v]))
            else:
                if self.degree_in(v) > 0:
                    raise InvalidInputError(f"no value for variable {v!r}")
                vals.append(_ZERO)
        for m, c in self.terms.items():
            acc = c
            for val, e in zip(vals, m):
                if e:
                    acc = acc * val ** e
            total = total + acc
        return total

    # -- division ------------------------------------------------------

    def exact_div(self, divisor):
        """Quotient self/divisor; raises DivisionRemainderError if not exact."""
        divisor = self._coerced(divisor)
        if divisor.is_zero():
            raise InvalidInputError("division by zero polynomial")
        rem = dict(self.terms)
        dm, dc = divisor.leading()
        quot = {}
        while rem:
            m = max(rem, key=_degrevlex_key)
            c = rem[m]
            qm = tuple(a - b for a, b in zip(m, dm))
            if any(e < 0 for e in qm):
                raise DivisionRemainderError(
                    f"nonzero remainder: leading term not divisible by {divisor}")
            qc = c / dc
            quot[qm] = quot.get(qm, _ZERO) + qc
            for m2, c2 in divisor.terms.items():
                mm = tuple(a + b for a, b in zip(qm, m2))
                acc = rem.get(mm, _ZERO) - qc * c2
                if acc:
                    rem[mm] = acc
                else:
                    rem.pop(mm, None)
        return Poly(self.vars, quot)

    def divides(self, other):
        try:
            other.exact_div(self)
            return True
        except DivisionRemainderError:
            return False

    # -- display --------------------------------------------------------

    def __str__(self):
        return render_terms(self.vars, self.terms)

    def __repr__(self):
        return f"Poly({self.vars!r}, {self!s})"


def render_terms(names, terms, sort_key=_degrevlex_key):
    """Canonical string in the CLI grammar; reparses to an equal value."""
    if not terms:
        return "0"
    pieces = []
    for mono in sorted(terms, key=sort_key, reverse=True):
        c = terms[mono]
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(c))] + factors)
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = [body if sign == "+" else "-" + body]
    for sign, body in pieces[1:]:
        out.append(f" {sign} {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# univariate utilities


def as_univariate(p):
    """Return (variable name, dense coefficient list c0..cd) for a 1-variable Poly."""
    active = [v for v in p.vars if p.degree_in(v) > 0]
    if len(active) > 1:
        raise InvalidInputError(f"not univariate: uses {active}")
    name = active[0] if active else (p.vars[0] if p.vars else "s")
    d = p.degree_in(name) if active else 0
    coeffs = [_ZERO] * (d + 1)
    i = p.vars.index(name)
    for m, c in p.terms.items():
        coeffs[m[i]] = c
    return name, coeffs


def poly_from_coeffs(name, coeffs):
    return Poly((name,), {(i,): c for i, c in enumerate(coeffs) if qq(c)})


def univariate_gcd(p, q):
    """Monic gcd of two univariate polynomials over Q (Euclid)."""
    name, a = as_univariate(p)
    _, b = as_univariate(q)
    while any(b):
        a, b = b, _poly_mod(a, b)
    if not any(a):
        return Poly.zero((name,))
    lc = a[_deg(a)]
    return poly_from_coeffs(name, [c / lc for c in a])


def _deg(coeffs):
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i]:
            return i
    return -1


def _poly_mod(a, b):
    a = list(a)
    db, lcb = _deg(b), b[_deg(b)]
    if db == 0:
        return [_ZERO]
    while _deg(a) >= db:
        da = _deg(a)
        f = a[da] / lcb
        for i in range(db + 1):
            a[da - db + i] -= f * b[i]
        a[da] = _ZERO
    return a[:db] if len(a) >= db else a


def _divisors(n):
    """Positive divisors of |n| by trial division with an iteration budget."""
    n = abs(n)
    if n == 0:
        raise InvalidInputError("divisors of zero requested")
    small, large = [], []
    d, steps = 1, 0
    while d * d <= n:
        steps += 1
        if steps > 2_000_000:
            raise ResourceLimitError(f"divisor enumeration budget exhausted for {n}")
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _clear_denominators(coeffs):
    """Scale to primitive integer coefficients; returns list of ints."""
    from math import gcd, lcm

    den = 1
    for c in coeffs:
        den = lcm(den, int(c.denominator))
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def rational_roots(p):
    """All rational roots with multiplicities, as a list of (root, mult)."""
    name, coeffs = as_univariate(p)
    if _deg(coeffs) < 0:
        raise InvalidInputError("zero polynomial")
    roots = []
    work = list(coeffs)
    # strip root 0 first
    k = 0
    while not work[0] and _deg(work) > 0:
        work = work[1:]
        k += 1
    if k:
        roots.append((_ZERO, k))
    if _deg(work) == 0:
        return roots
    ints = _clear_denominators(work)
    a0, an = ints[0], ints[_deg(ints)]
    candidates = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            candidates.add(mpq(num, den))
            candidates.add(mpq(-num, den))
    for r in sorted(candidates):
        mult = 0
        while _deg(work) > 0 and _eval_coeffs(work, r) == 0:
            work = _deflate(work, r)
            mult += 1
        if mult:
            roots.append((r, mult))
    return sorted(roots)


def _eval_coeffs(coeffs, x):
    acc = _ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs, r):
    """Divide by (X - r) assuming r is a root (synthetic division)."""
    d = _deg(coeffs)
    out = [_ZERO] * d
    carry = coeffs[d]
    out[d - 1] = carry
    for i in range(d - 1, 0, -1):
        carry = coeffs[i] + carry * r
        out[i - 1] = carry
    if coeffs[0] + carry * r != 0:
        raise DivisionRemainderError("not a root")
    return out


def linear_factor_decomposition(p):
    """Split p = lead * prod (X - r)^mult * residual, residual monic, no rational roots.

    Returns (lead: mpq, [(root, mult)...], residual Poly).
    """
    name, coeffs = as_univariate(p)
    if _deg(coeffs) < 0:
        raise InvalidInputError("zero polynomial")
    roots = rational_roots(p)
    work = list(coeffs)
    for r, mult in roots:
        for _ in range(mult):
            work = _deflate(work, r)
    lead = work[_deg(work)]
    residual = poly_from_coeffs(name, [c / lead for c in work])
    return lead, roots, residual


def factored_str(p):
    """Display form: leading coefficient times linear factors times residual."""
    name, _ = as_univariate(p)
    lead, roots, residual = linear_factor_decomposition(p)
    pieces = []
    if lead != 1 or (not roots and residual.is_constant()):
        pieces.append(str(lead))
    for r, mult in roots:
        if r == 0:
            base = name
        elif r < 0:
            base = f"({name} + {-r})"
        else:
            base = f"({name} - {r})"
        pieces.append(base if mult == 1 else f"{base}^{mult}")
    if not residual.is_constant():
        pieces.append(f"({residual})")
    return "*".join(pieces) if pieces else "1"


def integer_shift_lines(b, s1="s1", s2="s2"):
    """L_b = sorted list of integers l such that (s1 + s2 + l) divides b.

    Method: substitute s1 = u, s2 = w - u; the factor becomes w + l, free of u.
    The gcd of the u-coefficients (univariate in w) collects exactly the
    s1+s2-line content; its integer roots, negated, form L_b.
    """
    if b.is_zero():
        raise InvalidInputError("zero polynomial has every factor")
    uw = ("u", "w")
    u = Poly.variable(uw, "u")
    w = Poly.variable(uw, "w")
    image = b.substitute({s1: u, s2: w - u}, uw)
    coeffs = image.coefficients_in("u")
    g = None
    for c in coeffs.values():
        if c.is_zero():
            continue
        c1 = c if len(c.vars) == 1 else c.with_variables(("w",))
        g = c1 if g is None else univariate_gcd(g, c1)
        if g.is_constant():
            return []
    if g is None or g.is_constant():
        return []
    lines = []
    for r, _mult in rational_roots(g):
        if r.denominator == 1:
            lines.append(-int(r))
    return sorted(lines)
