"""Multi-index arrays over exact semirings and the ternary cubix algebras."""

from ternarity.ndmatrix.array import Cubix, MultiArray
from ternarity.ndmatrix.catalogue import (
    CATALOGUE,
    CurriedOp,
    all_curried,
    curry,
    identity_subalgebra_scan,
    probe_binary,
    verify_identity_catalogue,
)
from ternarity.ndmatrix.products import KINDS, SCHEMES, make_cubix_identities, multiply
from ternarity.ndmatrix.semiring import BOOL, RATIONAL, Boolean, PrimeField, Rational, parse_semiring
from ternarity.ndmatrix.splice import SpliceScheme, splice

__all__ = [
    "BOOL", "CATALOGUE", "KINDS", "RATIONAL", "SCHEMES",
    "Boolean", "Cubix", "CurriedOp", "MultiArray", "PrimeField", "Rational", "SpliceScheme",
    "all_curried", "curry", "identity_subalgebra_scan", "make_cubix_identities", "multiply",
    "parse_semiring", "probe_binary", "splice", "verify_identity_catalogue",
]
