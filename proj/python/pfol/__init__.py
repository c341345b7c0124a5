"""p-th powers, p-divisors and irreducibility certificates for plane vector fields."""

from ._core import (
    ParseError,
    Poly,
    Ring,
    __version__,
    certify,
    certify_family,
    certify_irreducible,
    degree_and_linf,
    expected_divisor,
    family_field,
    is_indecomposable,
    is_invariant_curve,
    newton_polytope,
    p_divisor,
    p_power,
    verify_family,
)

__all__ = [
    "ParseError",
    "Poly",
    "Ring",
    "__version__",
    "certify",
    "certify_family",
    "certify_irreducible",
    "degree_and_linf",
    "expected_divisor",
    "family_field",
    "is_indecomposable",
    "is_invariant_curve",
    "newton_polytope",
    "p_divisor",
    "p_power",
    "verify_family",
]
