"""BCH codes over GF(q) for primitive, anti-primitive and projective lengths."""

from ._core import (
    Error,
    coset,
    cosets,
    dimension,
    dimension_formula,
    dually_bch,
    family_length,
    generator,
    largest_leaders,
    leader_formula,
    min_distance,
    params_report,
    suite_names,
    verify,
)

__all__ = [
    "Error",
    "coset",
    "cosets",
    "dimension",
    "dimension_formula",
    "dually_bch",
    "family_length",
    "generator",
    "largest_leaders",
    "leader_formula",
    "min_distance",
    "params_report",
    "suite_names",
    "verify",
]
