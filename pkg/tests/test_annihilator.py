import pytest

from weylbs.algebra import WeylElement, make_signature, weyl_from_poly
from weylbs.annihilator import (
    BSIdealData,
    ann_one,
    ann_pair,
    bs_ideal,
    c_condition,
    global_b,
)
from weylbs.errors import InvalidInputError
from weylbs.groebner import buchberger, ideal_equal, left_normal_form
from weylbs.poly import Poly
from weylbs.twisted import TwistedElement, act_on_twisted

XY = ("x", "y")
D2 = make_signature(XY, central_params=("s",))
D2P = make_signature(XY, central_params=("s1", "s2"))

X = Poly.variable(XY, "x")
Y = Poly.variable(XY, "y")
F = X ** 2 + Y ** 2
G = X * Y

S2 = ("s1", "s2")
S1P = Poly.variable(S2, "s1")
S2P = Poly.variable(S2, "s2")

# single generator of the functional-equation ideal for (x^2+y^2, xy)
B_X2Y2 = ((S1P + 1) * (S2P + 1)
          * (S1P + S2P + 1) * (S1P + S2P + 2) * (S1P + S2P + 3)
          * (2 * S1P + 2 * S2P + 3) * (2 * S1P + 2 * S2P + 5))


def v(sig, name):
    return WeylElement.variable(sig, name)


def paper_pq():
    x, y, dx, dy = (v(D2P, n) for n in ("x", "y", "dx", "dy"))
    s1, s2 = v(D2P, "s1"), v(D2P, "s2")
    P = x * dx + y * dy - 2 * s1 - 2 * s2
    Q = x * y ** 2 * dx - x ** 2 * y * dy + x ** 2 * s2 - y ** 2 * s2
    return P, Q


# -- annihilators -------------------------------------------------------------


def test_ann_pair_coordinates():
    got = ann_pair(X, Y)
    x, y, dx, dy = (v(D2P, n) for n in ("x", "y", "dx", "dy"))
    s1, s2 = v(D2P, "s1"), v(D2P, "s2")
    assert ideal_equal(got, [x * dx - s1, y * dy - s2])


def test_ann_one_sum_of_squares():
    got = ann_one(F)
    x, y, dx, dy, s = (v(D2, n) for n in ("x", "y", "dx", "dy", "s"))
    euler = x * dx + y * dy - 2 * s
    rot = y * dx - x * dy
    assert ideal_equal(got, [euler, rot])


def test_ann_pair_matches_displayed_generators():
    got = ann_pair(F, G)
    P, Q = paper_pq()
    assert ideal_equal(got, [P, Q])


def at_s2_zero(e):
    hv = e.h.vars
    return TwistedElement(e.h.substitute({"s2": 0}, hv), e.f, e.g,
                          e.a, e.b, e.two_params)


def test_ann_outputs_annihilate_twisted_oracle():
    elem2 = TwistedElement.generator(F, G, two_params=True)
    for a in ann_pair(F, G):
        assert act_on_twisted(a, elem2).is_zero()
    # one-parameter f^s: encode as f^{s1} g^{s2} with s2 specialized to 0
    for a in ann_one(F):
        sub = a.substitute_params(
            {"s": Poly.variable(("s1", "s2"), "s1")}, D2P)
        assert at_s2_zero(act_on_twisted(sub, elem2)).is_zero()


def test_ann_rejects_constant_and_collisions():
    with pytest.raises(InvalidInputError):
        ann_one(Poly.constant(("x",), 3))
    with pytest.raises(InvalidInputError):
        ann_pair(X, Poly.constant(XY, 1))
    t1 = Poly.variable(("t1",), "t1")
    with pytest.raises(InvalidInputError):
        ann_one(t1 ** 2 + t1)


# -- global b-functions -------------------------------------------------------


def test_global_b_linear():
    assert global_b(Poly.variable(("x",), "x")) == Poly(("s",), {(1,): 1, (0,): 1})


def test_global_b_xy_and_sum_of_squares():
    s = Poly.variable(("s",), "s")
    assert global_b(G) == (s + 1) ** 2
    assert global_b(F) == (s + 1) ** 2


def test_global_b_divides_any_witnessed_b():
    # (dx^2 + dy^2) f^{sigma+1} = 4(sigma+1)^2 f^sigma for f = x^2+y^2,
    # verified on the twisted oracle with sigma = s1 + s2; the computed
    # polynomial must divide the witnessed (s+1)^2
    dx, dy = v(D2P, "dx"), v(D2P, "dy")
    elem = TwistedElement.generator(F, F, two_params=True)
    hv = elem.h.vars
    shifted = TwistedElement(F.with_variables(hv), F, F, 0, 0, True)
    sigma1 = (Poly.variable(hv, "s1") + Poly.variable(hv, "s2") + 1)
    assert act_on_twisted(dx ** 2 + dy ** 2, shifted) == \
        elem.scaled(4 * sigma1 ** 2)
    sp = Poly.variable(("s",), "s")
    witness_poly = (sp + 1) ** 2
    b = global_b(F)
    assert witness_poly.exact_div(b) * b == witness_poly


# -- functional-equation ideal of a pair --------------------------------------


def test_bs_ideal_coordinates():
    data = bs_ideal(X, Y)
    assert len(data.generators) == 1
    assert data.generators[0].monic() == ((S1P + 1) * (S2P + 1)).monic()
    assert data.L == frozenset()
    assert data.e == 1
    assert data.epsilon == 0


def test_bs_ideal_running_example():
    data = bs_ideal(F, G)
    assert len(data.generators) == 1
    assert data.generators[0].monic() == B_X2Y2.monic()
    assert data.L == frozenset({1, 2, 3})
    assert data.e == 3
    assert data.epsilon == 2


def test_bs_ideal_membership_invariant():
    # every generator lies in I(s1,s2) + <fg>
    data = bs_ideal(F, G)
    ann = ann_pair(F, G)
    sig = ann[0].sig
    gb = buchberger(ann + [weyl_from_poly(sig, F * G)])
    for b in data.generators:
        assert left_normal_form(weyl_from_poly(sig, b), gb).is_zero()


def test_bs_ideal_supplied_mode_validates():
    data = bs_ideal(F, G, supplied=[B_X2Y2])
    assert data.L == frozenset({1, 2, 3})
    assert data.e == 3 and data.epsilon == 2
    with pytest.raises(InvalidInputError):
        bs_ideal(F, G, supplied=[S1P + 5])


def test_functional_equation_spot_check():
    # dx dy x^{s1+1} y^{s2+1} = (s1+1)(s2+1) x^{s1} y^{s2}: the computed
    # generator for the pair (x, y) satisfies its defining equation
    data = bs_ideal(X, Y)
    b = data.generators[0].monic()
    dx, dy = v(D2P, "dx"), v(D2P, "dy")
    elem = TwistedElement.generator(X, Y, two_params=True)
    hv = elem.h.vars
    shifted = TwistedElement((X * Y).with_variables(hv), X, Y, 0, 0, True)
    lhs = act_on_twisted(dx * dy, shifted)
    assert lhs == elem.scaled(b.with_variables(hv))


# -- specialization consistency ------------------------------------------------


def test_specialized_annihilator_kills_one_parameter_element():
    s = Poly.variable(("s",), "s")
    for m in range(3):
        elem = TwistedElement.generator(F, G, m=m)
        for a in ann_pair(F, G):
            spec = a.substitute_params({"s1": s, "s2": -s - m}, D2)
            assert act_on_twisted(spec, elem).is_zero()


# -- the parity condition on shift lines ---------------------------------------


def test_c_condition_running_example():
    data = bs_ideal(F, G, supplied=[B_X2Y2])
    assert c_condition(data, 2)          # 2+2i >= 4, never in {1,2,3}
    assert c_condition(data, 3)
    assert not c_condition(data, 0)      # 0+2 = 2 in L
    assert not c_condition(data, 1)      # 1+2 = 3 in L


def test_c_condition_empty_lines():
    data = bs_ideal(X, Y)
    for m in range(6):
        assert c_condition(data, m)


def test_c_condition_rejects_negative_m():
    with pytest.raises(InvalidInputError):
        c_condition(bs_ideal(X, Y), -1)
