import random

import pytest

from weylbs.algebra import WeylElement, make_signature, weyl_from_poly
from weylbs.errors import InvalidInputError, ResourceLimitError
from weylbs.groebner import (
    GBConfig,
    buchberger,
    central_saturation,
    central_saturation_pair,
    eliminate,
    ideal_contains,
    ideal_equal,
    leading_coeff_in_params,
    left_normal_form,
    nf_with_cofactors,
    syzygy,
    transporter,
)
from weylbs.poly import Poly

from oracles import random_weyl

D1 = make_signature(("x",), central_params=("s",))
D2 = make_signature(("x", "y"), central_params=("s",))
D2P = make_signature(("x", "y"), central_params=("s1", "s2"))


def v(sig, name):
    return WeylElement.variable(sig, name)


def poly_s(expr_coeffs):
    # helper: dict {deg: coeff} -> Poly in s
    return Poly(("s",), {(d,): c for d, c in expr_coeffs.items()})


# -- normal form -------------------------------------------------------------


def test_nf_euler_example():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    gb = buchberger([x * dx - s])
    # dx*x = x*dx + 1 reduces to s + 1
    assert left_normal_form(dx * x, gb) == s + 1


def test_nf_is_zero_exactly_on_ideal_members():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    g = x * dx - s
    gb = buchberger([g])
    rng = random.Random(7)
    for _ in range(40):
        a = random_weyl(rng, D1, max_degree=3, max_terms=3)
        assert left_normal_form(a * g, gb).is_zero()


def test_nf_is_linear():
    # full normal form is a linear projection; later stages rely on this
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    gb = buchberger([x * dx - s, x ** 3])
    rng = random.Random(11)
    for _ in range(40):
        p = random_weyl(rng, D1, max_degree=4, max_terms=4)
        q = random_weyl(rng, D1, max_degree=4, max_terms=4)
        np_ = left_normal_form(p, gb)
        nq = left_normal_form(q, gb)
        assert left_normal_form(p + 3 * q, gb) == np_ + 3 * nq


def test_unit_ideal_from_x_and_dx():
    # dx*x - x*dx = 1, so the pair generates everything; the product
    # criterion would wrongly skip this S-pair
    x, dx = v(D1, "x"), v(D1, "dx")
    gb = buchberger([x, dx])
    assert len(gb) == 1
    assert gb.elements[0] == WeylElement.one(D1)


def test_reduced_gb_is_canonical_under_shuffling():
    rng = random.Random(23)
    for _ in range(25):
        gens = [random_weyl(rng, D2, max_degree=3, max_terms=3)
                for _ in range(3)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb1 = buchberger(gens)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        scaled = [7 * g for g in shuffled]
        gb2 = buchberger(scaled)
        assert [e.terms for e in gb1.elements] == [e.terms for e in gb2.elements]


def test_membership_after_closure():
    rng = random.Random(31)
    for _ in range(15):
        gens = [random_weyl(rng, D1, max_degree=3, max_terms=2)
                for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb = buchberger(gens)
        a = random_weyl(rng, D1, max_degree=2, max_terms=2)
        b = random_weyl(rng, D1, max_degree=2, max_terms=2)
        member = a * gens[0] + (b * gens[-1] if len(gens) > 1 else 0)
        assert ideal_contains(gb, member)


# -- elimination -------------------------------------------------------------


def test_eliminate_weyl_variables():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    got = eliminate([x * dx - s, x], ("x", "dx"))
    assert got == [s + 1]


def test_eliminate_nothing_of_interest():
    x, dx = v(D1, "x"), v(D1, "dx")
    assert eliminate([x * dx], ("s",)) != []  # ideal survives untouched


# -- syzygies, transporters, cofactors ---------------------------------------


def test_syzygy_relations_hold_exactly():
    x, dx = v(D2, "x"), v(D2, "dx")
    y, dy = v(D2, "y"), v(D2, "dy")
    gens = [x ** 2 + y ** 2, x * y, dx * y]
    rels = syzygy(gens)
    assert rels
    for rel in rels:
        acc = WeylElement.zero(D2)
        for a, g in zip(rel, gens):
            acc = acc + a * g
        assert acc.is_zero()


def test_syzygy_of_commuting_pair_contains_koszul():
    x, y = v(D2, "x"), v(D2, "y")
    rels = syzygy([x, y])
    # (y, -x) is a relation; it must be generated, so y*x - x*y lies in the
    # module closure. Check by direct membership of the relation.
    target_ok = False
    for rel in rels:
        if rel[0] == y and rel[1] == -x:
            target_ok = True
    assert target_ok


def test_transporter_by_one_is_identity():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    gens = [x * dx - s, x ** 2]
    t = transporter(gens, WeylElement.one(D1))
    assert ideal_equal(t, gens)


def test_transporter_members_transport():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    gens = [x * dx - s, x ** 3]
    gb = buchberger(gens)
    h = x + 1
    t = transporter(gens, h)
    assert t
    for a in t:
        assert ideal_contains(gb, a * h)


def test_transporter_finds_quotient_by_central_factor():
    # I = <(s+1) x, (s+1) dx>; transporter by s+1 must reach <x, dx> = <1>
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    gens = [(s + 1) * x, (s + 1) * dx]
    t = transporter(gens, s + 1)
    gb = buchberger(t)
    assert gb.elements == (WeylElement.one(D1),)


def test_nf_with_cofactors_reconstructs():
    rng = random.Random(41)
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    gens = [x * dx - s, x ** 3]
    for _ in range(20):
        p = random_weyl(rng, D1, max_degree=4, max_terms=4)
        nf, cof = nf_with_cofactors(p, gens)
        acc = nf
        for c, g in zip(cof, gens):
            acc = acc + c * g
        assert acc == p
    member = (x + dx) * gens[0] + s * gens[1]
    nf, cof = nf_with_cofactors(member, gens)
    assert nf.is_zero()


# -- leading coefficients over the parameters --------------------------------


def test_leading_coeff_in_params_basic():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    g = (s ** 2 + 1) * x * dx + s * x + 3
    lc = leading_coeff_in_params(g)
    assert lc == Poly(("s",), {(2,): 1, (0,): 1})


def test_leading_coeff_groups_equal_weyl_monomials():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    g = s * x * dx + 2 * x * dx + s ** 5
    lc = leading_coeff_in_params(g)
    assert lc == Poly(("s",), {(1,): 1, (0,): 2})


# -- central saturation -------------------------------------------------------


def test_saturation_already_saturated():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    res = central_saturation([x * dx - s])
    assert not res.changed
    assert res.q.is_constant()
    assert ideal_equal(res.generators, [x * dx - s])


def test_saturation_by_s_plus_one():
    # <x dx - s, x> contains s+1; quotient by its infinite power is everything
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    res = central_saturation([x * dx - s, x])
    assert res.changed
    assert res.q == Poly(("s",), {(1,): 1, (0,): 1})
    assert res.generators == (WeylElement.one(D1),)
    # witness: (s+1)^k * 1 lies in the original ideal for the stated k
    base = buchberger([x * dx - s, x])
    for g, w in zip(res.generators, res.witnesses):
        assert left_normal_form(weyl_from_poly(D1, w) * g, base).is_zero()


def test_saturation_factor_and_rabinowitsch_agree():
    x, dx, s = v(D1, "x"), v(D1, "dx"), v(D1, "s")
    for gens in ([x * dx - s, x], [s * x, s * dx], [x * dx - s]):
        a = central_saturation(gens, method="factors")
        b = central_saturation(gens, method="rabinowitsch")
        assert ideal_equal(a.basis, b.basis)


def test_saturation_two_params_validation_variant():
    x, dx, s1, s2 = v(D2P, "x"), v(D2P, "dx"), v(D2P, "s1"), v(D2P, "s2")
    res = central_saturation_pair([s1 * x, s2 * dx])
    assert res.changed
    assert res.generators == (WeylElement.one(D2P),)


# -- budgets -----------------------------------------------------------------


def test_budget_exhaustion_raises():
    x, dx = v(D2, "x"), v(D2, "dx")
    y, dy = v(D2, "y"), v(D2, "dy")
    gens = [x ** 3 + dy ** 2, x * y * dx * dy + 1, dx ** 3 - y]
    with pytest.raises(ResourceLimitError):
        buchberger(gens, config=GBConfig(max_pairs=1))


def test_empty_generators_rejected():
    with pytest.raises(InvalidInputError):
        buchberger([])
