"""Subtractive ideals and subtractive topology of finite commutative semirings."""

from ._core import (
    AxiomViolation,
    CapExceeded,
    Error,
    FiniteSemiring,
    Ideal,
    NatIdeal,
    ParseError,
    SubtractiveSpace,
    build_space,
    builtin,
    builtin_from_spec,
    check,
    generate_ideal,
    homomorphisms,
    ideal_product,
    ideal_sum,
    ideals,
    parse_semiring,
    parse_semirings,
    radical,
    search,
    standard_corpus,
)

__all__ = [
    "AxiomViolation",
    "CapExceeded",
    "Error",
    "FiniteSemiring",
    "Ideal",
    "NatIdeal",
    "ParseError",
    "SubtractiveSpace",
    "build_space",
    "builtin",
    "builtin_from_spec",
    "check",
    "generate_ideal",
    "homomorphisms",
    "ideal_product",
    "ideal_sum",
    "ideals",
    "parse_semiring",
    "parse_semirings",
    "radical",
    "search",
    "standard_corpus",
]
