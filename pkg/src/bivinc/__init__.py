"""Bi-vincular permutation patterns: matching, enumeration and classification."""

from bivinc.perms import Permutation, ParseError, apply_symmetry, parse_permutation, permutations_of, reduce
from bivinc.patterns import (
    BiVincularPattern,
    canonical_representative,
    contains,
    count_occurrences,
    enumerate_patterns,
    parse_pattern,
    pattern_symmetry,
    symmetry_class,
)

__version__ = "0.1.0"

__all__ = [
    "BiVincularPattern",
    "ParseError",
    "Permutation",
    "apply_symmetry",
    "canonical_representative",
    "contains",
    "count_occurrences",
    "enumerate_patterns",
    "parse_pattern",
    "parse_permutation",
    "pattern_symmetry",
    "permutations_of",
    "reduce",
    "symmetry_class",
]
