"""Exact covariant bi-differential operators on matrix space.

Thin re-export of the compiled module. All values cross the boundary as
text: rationals "p/q", polynomials and operators in their serialized
forms, verification reports as JSON strings.
"""

from ._covops import (
    act,
    alpha,
    apply_operator,
    build_operator,
    normalization_d,
    poly_canonical,
    rankin_cohen,
    report_passed,
    suite_names,
    transvectant,
    verify,
    ParseError,
    PoleError,
)

__all__ = [
    "act",
    "alpha",
    "apply_operator",
    "build_operator",
    "normalization_d",
    "poly_canonical",
    "rankin_cohen",
    "report_passed",
    "suite_names",
    "transvectant",
    "verify",
    "ParseError",
    "PoleError",
]
