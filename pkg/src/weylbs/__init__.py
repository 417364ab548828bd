"""Exact annihilators and Bernstein-Sato polynomials of rational functions.

The package computes, over the rationals and without any floating point,
left Groebner bases in Weyl algebras with central parameters, annihilator
ideals of powers f^s1 g^s2 and of twisted rational elements (1/g^m)(f/g)^s,
and the N-term Bernstein-Sato polynomials of f/g together with verifiable
operator certificates.
"""

from .algebra import (
    AlgebraSignature,
    WeylElement,
    convert_signature,
    make_signature,
    poly_from_weyl,
    weyl_from_poly,
)
from .annihilator import (
    BSIdealData,
    ann_one,
    ann_pair,
    bs_ideal,
    c_condition,
    global_b,
)
from .corpus import Fixture, FixtureResult, load_fixtures, run_corpus, run_fixture
from .errors import (
    DivisionRemainderError,
    ExponentOverflowError,
    HomogeneityError,
    InvalidInputError,
    ParseError,
    ResourceLimitError,
    SignatureMismatchError,
    WeylbsError,
)
from .groebner import (
    GBConfig,
    GroebnerBasis,
    SaturationResult,
    buchberger,
    central_saturation,
    central_saturation_pair,
    eliminate,
    ideal_contains,
    ideal_equal,
    left_normal_form,
    module_buchberger,
    nf_with_cofactors,
    syzygy,
    transporter,
)
from .parsing import parse_expression, parse_operator, parse_poly, used_names
from .poly import (
    MAX_EXPONENT,
    Poly,
    factored_str,
    integer_shift_lines,
    linear_factor_decomposition,
    rational_roots,
    univariate_gcd,
)
from .rational import (
    RationalBSResult,
    ann_rational,
    bs_rational_elim,
    bs_rational_linear,
    certificate,
    specialized_annihilator,
    verify_certificate,
)
from .twisted import TwistedElement, act_on_twisted

__version__ = "0.1.0"

__all__ = [
    "AlgebraSignature",
    "BSIdealData",
    "DivisionRemainderError",
    "ExponentOverflowError",
    "Fixture",
    "FixtureResult",
    "GBConfig",
    "GroebnerBasis",
    "HomogeneityError",
    "InvalidInputError",
    "MAX_EXPONENT",
    "ParseError",
    "Poly",
    "RationalBSResult",
    "ResourceLimitError",
    "SaturationResult",
    "SignatureMismatchError",
    "TwistedElement",
    "WeylElement",
    "WeylbsError",
    "act_on_twisted",
    "ann_one",
    "ann_pair",
    "ann_rational",
    "bs_ideal",
    "bs_rational_elim",
    "bs_rational_linear",
    "buchberger",
    "c_condition",
    "central_saturation",
    "central_saturation_pair",
    "certificate",
    "convert_signature",
    "eliminate",
    "factored_str",
    "global_b",
    "ideal_contains",
    "ideal_equal",
    "integer_shift_lines",
    "left_normal_form",
    "linear_factor_decomposition",
    "load_fixtures",
    "make_signature",
    "module_buchberger",
    "nf_with_cofactors",
    "parse_expression",
    "parse_operator",
    "parse_poly",
    "poly_from_weyl",
    "rational_roots",
    "run_corpus",
    "run_fixture",
    "specialized_annihilator",
    "syzygy",
    "transporter",
    "univariate_gcd",
    "used_names",
    "verify_certificate",
    "weyl_from_poly",
]
