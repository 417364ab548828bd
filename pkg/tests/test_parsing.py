import pytest

from weylbs.algebra import WeylElement, make_signature
from weylbs.errors import ParseError
from weylbs.parsing import parse_operator, parse_poly, used_names
from weylbs.poly import MAX_EXPONENT, Poly

XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, variables=XY):
    return parse_poly(text, variables)


# -- grammar ------------------------------------------------------------------


def test_parse_poly_basic_forms():
    x = Poly.variable(XY, "x")
    y = Poly.variable(XY, "y")
    assert P("x^4+y^5+x*y^4") == x ** 4 + y ** 5 + x * y ** 4
    assert P("x^2 + 2*x*y + y^2") == (x + y) ** 2
    assert P("(x+y)^2") == (x + y) ** 2
    assert P("7/2") == Poly.constant(XY, "7/2")
    assert P("0") == Poly.zero(XY)


def test_parse_three_variables():
    x, y, z = (Poly.variable(XYZ, n) for n in XYZ)
    assert P("x^6+y^6+2*z*x^3*y^3", XYZ) == \
        x ** 6 + y ** 6 + 2 * z * x ** 3 * y ** 3


def test_rational_literals_and_division():
    x, y = Poly.variable(XY, "x"), Poly.variable(XY, "y")
    assert P("3/4*y") == y * Poly.constant(XY, "3/4")
    assert P("x/2 - (y+1)/3") == \
        x * Poly.constant(XY, "1/2") - (y + 1) * Poly.constant(XY, "1/3")


def test_precedence_caret_tightest_then_unary_minus():
    x = Poly.variable(XY, "x")
    assert P("-x^2") == -(x ** 2)
    assert P("-2^2") == Poly.constant(XY, -4)
    assert P("2*x^3") == 2 * x ** 3


def test_whitespace_insignificant():
    assert P(" x ^ 2+ y * x ") == P("x^2+y*x")


def test_juxtaposition_is_an_error():
    with pytest.raises(ParseError):
        P("2x")
    with pytest.raises(ParseError):
        P("x y")
    with pytest.raises(ParseError):
        P("(x)(y)")


def test_error_positions():
    with pytest.raises(ParseError) as info:
        P("x + q")
    assert info.value.position == 4
    with pytest.raises(ParseError) as info:
        P("x^y")
    assert info.value.position == 2


def test_malformed_inputs():
    for bad in ["", "   ", "x*", "(x", "x^", "x^2^3", "x/y", "1/0", "x$y", "*x"]:
        with pytest.raises(ParseError):
            P(bad)


def test_exponent_overflow_rejected_at_parse():
    with pytest.raises(ParseError):
        P(f"x^{MAX_EXPONENT + 1}")
    assert P(f"x^{2}").degree_in("x") == 2


def test_unknown_variable():
    with pytest.raises(ParseError):
        P("w + 1", ("x",))


# -- round trips ---------------------------------------------------------------


def test_poly_print_parse_round_trip():
    cases = [
        "x^4+y^5+x*y^4",
        "-x^2 + 3/4*y - 1",
        "(x+y)^3 - x*y/7",
        "0",
        "5",
        "-1/3",
    ]
    for text in cases:
        p = P(text)
        assert parse_poly(str(p), XY) == p


def test_operator_print_parse_round_trip():
    sig = make_signature(XY, central_params=("s",))
    cases = [
        "dx*x",                  # normal ordering: x*dx + 1
        "x*dx - s",
        "-1/2*x*dx + s - 1/2",
        "y^2*dx*dy - x*y*dy^2 - y*dx*s - x*dy*s + y*dx - 2*x*dy",
    ]
    for text in cases:
        el = parse_operator(text, sig)
        assert parse_operator(str(el), sig) == el


def test_operator_products_normal_order():
    sig = make_signature(XY, central_params=("s",))
    dx = WeylElement.variable(sig, "dx")
    x = WeylElement.variable(sig, "x")
    assert parse_operator("dx*x", sig) == x * dx + WeylElement.one(sig)
    assert parse_operator("dx*x - x*dx", sig) == WeylElement.one(sig)


def test_used_names():
    assert used_names("x^2 + 2*x*y") == {"x", "y"}
    assert used_names("3/4") == set()
    assert used_names("dx*s1 - foo") == {"dx", "s1", "foo"}
