import random

import pytest
from gmpy2 import mpq

from weylbs.algebra import (
    WeylElement,
    make_signature,
    poly_from_weyl,
    weyl_from_poly,
)
from weylbs.errors import InvalidInputError, SignatureMismatchError
from weylbs.poly import Poly
from weylbs.twisted import TwistedElement, act_on_twisted

from oracles import random_poly, random_weyl, slow_mono_product

D1 = make_signature(("x",), central_params=("s",))
D2 = make_signature(("x", "y"), central_params=("s",))
D2P = make_signature(("x", "y"), central_params=("s1", "s2"))
XY = ("x", "y")


def op(sig, text_terms):
    return WeylElement(sig, text_terms)


def v(sig, name):
    return WeylElement.variable(sig, name)


def test_commutation_relation():
    x, dx = v(D1, "x"), v(D1, "dx")
    assert dx * x == x * dx + 1
    assert x * dx == x * dx  # sanity
    # dx * x^2 = x^2 dx + 2x
    assert dx * x ** 2 == x ** 2 * dx + 2 * x


def test_leibniz_closed_form():
    x, dx = v(D1, "x"), v(D1, "dx")
    # dx^2 * x^2 = x^2 dx^2 + 4 x dx + 2
    assert dx ** 2 * x ** 2 == x ** 2 * dx ** 2 + 4 * x * dx + 2


def test_central_variables_commute():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    assert s * x == x * s
    assert s * dx == dx * s
    assert (s * dx) * (s * x) == s ** 2 * x * dx + s ** 2


def test_mono_product_matches_slow_oracle():
    rng = random.Random(42)
    for _ in range(300):
        a = tuple(rng.randint(0, 3) for _ in range(D2.nvars))
        b = tuple(rng.randint(0, 3) for _ in range(D2.nvars))
        got = {}
        for m, w in D2.mono_mul(a, b):
            got[m] = got.get(m, 0) + w
        got = {m: mpq(c) for m, c in got.items() if c}
        expected = {m: mpq(c) for m, c in slow_mono_product(D2, a, b).items()}
        assert got == expected


def test_associativity_random():
    rng = random.Random(99)
    for _ in range(250):
        p = random_weyl(rng, D2, max_degree=4, max_terms=3)
        q = random_weyl(rng, D2, max_degree=4, max_terms=3)
        r = random_weyl(rng, D2, max_degree=4, max_terms=3)
        assert (p * q) * r == p * (q * r)


def test_signature_mismatch():
    with pytest.raises(SignatureMismatchError):
        v(D1, "x") * v(D2, "x")


def test_act_on_poly_basics():
    x, dx, dy = v(D2, "x"), v(D2, "dx"), v(D2, "dy")
    y = v(D2, "y")
    x3 = Poly(XY, {(3, 0): 1})
    assert dx.act_on_poly(x3) == Poly(XY, {(2, 0): 3}).with_variables(("x", "y", "s"))
    assert (x * dx).act_on_poly(x3) == Poly(XY, {(3, 0): 3}).with_variables(("x", "y", "s"))
    euler = x * dx + y * dy
    x2y = Poly(XY, {(2, 1): 1})
    assert euler.act_on_poly(x2y) == 3 * Poly(XY, {(2, 1): 1}).with_variables(("x", "y", "s"))


def test_multiply_agrees_with_action_composition():
    rng = random.Random(5)
    for _ in range(150):
        p = random_weyl(rng, D2, max_degree=3, max_terms=3)
        q = random_weyl(rng, D2, max_degree=3, max_terms=3)
        h = random_poly(rng, XY, max_degree=4, max_terms=4).with_variables(
            ("x", "y", "s"))
        assert (p * q).act_on_poly(h) == p.act_on_poly(q.act_on_poly(h))


def test_embedding_roundtrip():
    f = Poly(XY, {(2, 0): 1, (0, 2): 1})
    el = weyl_from_poly(D2, f)
    assert poly_from_weyl(el, XY) == f
    with pytest.raises(InvalidInputError):
        poly_from_weyl(v(D2, "dx"), XY)


# -- substitutions -----------------------------------------------------------


def P_pq(sig):
    """P(s1,s2) = x dx + y dy - 2 s1 - 2 s2."""
    x, y, dx, dy = (v(sig, n) for n in ("x", "y", "dx", "dy"))
    s1, s2 = v(sig, "s1"), v(sig, "s2")
    return x * dx + y * dy - 2 * s1 - 2 * s2


def Q_pq(sig):
    """Q(s1,s2) = x y^2 dx - x^2 y dy + x^2 s2 - y^2 s2."""
    x, y, dx, dy = (v(sig, n) for n in ("x", "y", "dx", "dy"))
    s2 = v(sig, "s2")
    return x * y ** 2 * dx - x ** 2 * y * dy + x ** 2 * s2 - y ** 2 * s2


def spec_line(m):
    """s1 -> s, s2 -> -s-m."""
    s = Poly.variable(("s",), "s")
    return {"s1": s, "s2": -s - m}


def test_substitute_params_on_P():
    for m in range(4):
        got = P_pq(D2P).substitute_params(spec_line(m), D2)
        x, y, dx, dy = (v(D2, n) for n in ("x", "y", "dx", "dy"))
        assert got == x * dx + y * dy + 2 * m


def test_substitute_params_on_Q():
    got = Q_pq(D2P).substitute_params(spec_line(1), D2)
    x, y, dx, dy, s = (v(D2, n) for n in ("x", "y", "dx", "dy", "s"))
    expected = x * y ** 2 * dx - x ** 2 * y * dy - x ** 2 * s - x ** 2 \
        + y ** 2 * s + y ** 2
    assert got == expected


def test_substitute_identity_and_homomorphism():
    rng = random.Random(17)
    s = Poly.variable(("s",), "s")
    mapping = {"s1": s - 2, "s2": -s - 1}
    for _ in range(100):
        p = random_weyl(rng, D2P, max_degree=3, max_terms=3)
        q = random_weyl(rng, D2P, max_degree=3, max_terms=3)
        ident = {"s1": Poly.variable(("s1", "s2"), "s1")}
        assert p.substitute_params(ident, D2P) == p
        left = (p * q).substitute_params(mapping, D2)
        right = p.substitute_params(mapping, D2) * q.substitute_params(mapping, D2)
        assert left == right


def test_substitute_rejects_nonaffine():
    s = Poly.variable(("s",), "s")
    with pytest.raises(InvalidInputError):
        P_pq(D2P).substitute_params({"s1": s * s, "s2": s}, D2)


# -- twisted elements --------------------------------------------------------


F = Poly(XY, {(2, 0): 1, (0, 2): 1})  # x^2 + y^2
G = Poly(XY, {(1, 1): 1})             # x y


def test_twisted_zero_and_equality():
    e = TwistedElement.generator(F, G, m=1)
    assert not e.is_zero()
    lifted = TwistedElement(e.h * F.with_variables(e.h.vars), F, G, 1, 1, False)
    assert lifted == e


def at_s2_zero(e):
    """Specialize the g-exponent to zero: the spec's encoding of 'g absent'."""
    hv = e.h.vars
    return TwistedElement(e.h.substitute({"s2": 0}, hv), e.f, e.g,
                          e.a, e.b, e.two_params)


def test_action_dx_on_f_power_s1():
    # dx on (x^2+y^2)^{s1} -> 2x s1 / f * f^{s1}, two-parameter with s2 = 0
    sig = D2P
    e = TwistedElement.generator(F, G, two_params=True)
    got = at_s2_zero(act_on_twisted(v(sig, "dx"), e))
    hv = got.h.vars
    expected_h = 2 * Poly.variable(hv, "x") * Poly.variable(hv, "s1") \
        * G.with_variables(hv)
    assert got == TwistedElement(expected_h, F, G, 1, 1, True)


def test_action_euler_identity():
    # (x dx + y dy - 2 s1) kills (x^2+y^2)^{s1} g^0 (encoded as s2 = 0)
    sig = D2P
    x, y, dx, dy, s1 = (v(sig, n) for n in ("x", "y", "dx", "dy", "s1"))
    e = TwistedElement.generator(F, G, two_params=True)
    assert at_s2_zero(act_on_twisted(x * dx + y * dy - 2 * s1, e)).is_zero()


def test_action_P_and_Q_annihilate():
    e = TwistedElement.generator(F, G, two_params=True)
    assert act_on_twisted(P_pq(D2P), e).is_zero()
    assert act_on_twisted(Q_pq(D2P), e).is_zero()


def test_action_one_param_R():
    # R(s) from Example 4.11 annihilates (1/g)(f/g)^s
    sig = D2
    x, y, dx, dy, s = (v(sig, n) for n in ("x", "y", "dx", "dy", "s"))
    R = y ** 2 * dx * dy - x * y * dy ** 2 - y * dx * s - x * dy * s \
        + y * dx - 2 * x * dy
    e = TwistedElement.generator(F, G, m=1)
    assert act_on_twisted(R, e).is_zero()
    # and the specialized P, Q do too
    for m in range(4):
        em = TwistedElement.generator(F, G, m=m)
        Pm = P_pq(D2P).substitute_params(spec_line(m), D2)
        Qm = Q_pq(D2P).substitute_params(spec_line(m), D2)
        assert act_on_twisted(Pm, em).is_zero()
        assert act_on_twisted(Qm, em).is_zero()


def test_action_T_at_m0():
    # T(s) from Example 4.11 annihilates (f/g)^s
    sig = D2
    x, y, dx, dy, s = (v(sig, n) for n in ("x", "y", "dx", "dy", "s"))
    T = y * dx ** 4 * dy - y * dy ** 5 - dx ** 4 * s + 2 * dx ** 2 * dy ** 2 * s \
        - dy ** 4 * s - 4 * dx ** 2 * dy ** 2 - 4 * dy ** 4
    e = TwistedElement.generator(F, G, m=0)
    assert act_on_twisted(T, e).is_zero()


def test_action_compatibility_twisted_random():
    rng = random.Random(23)
    e = TwistedElement.generator(F, G, m=1)
    for _ in range(40):
        p = random_weyl(rng, D2, max_degree=2, max_terms=2)
        q = random_weyl(rng, D2, max_degree=2, max_terms=2)
        left = act_on_twisted(p * q, e)
        right = act_on_twisted(p, act_on_twisted(q, e))
        assert left == right
