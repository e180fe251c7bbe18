"""Permutation codes, code transforms, and Mahonian pattern statistics."""

from permcodes.codes import (
    build_from_mcmahon,
    build_from_mcmahon_steps,
    lehmer_decode,
    lehmer_encode,
    mcmahon_code,
)
from permcodes.core import (
    Distribution,
    check_permutation,
    check_subexcedant,
    enumerate_permutations,
    enumerate_subexcedant,
    enumeration_cap,
    format_sequence,
    identity,
    inv,
    maj,
    parse_digits,
    parse_permutation,
    reduction,
)
from permcodes.patterns import (
    CodeReport,
    PointedPattern,
    VincularPattern,
    count_many,
    count_occurrences,
    count_pointed_at,
    induced_code,
    is_permutation_code,
    occurrences,
    parse_pattern,
    parse_terms,
)
from permcodes.statistics import (
    StatisticDef,
    distribution,
    distribution_many,
    evaluate,
    from_expression,
    is_mahonian,
    lookup,
    registry,
)
from permcodes.transforms import TransformKind
from permcodes.verify import (
    SUITES,
    VerifyReport,
    run_suite,
    verify_lehmer_identities,
    verify_lemma_and_remarks,
    verify_mahonian_all,
    verify_mcmahon,
    verify_s2_s4,
    verify_theorem_codes,
)

__version__ = "0.1.0"

__all__ = [
    "CodeReport",
    "Distribution",
    "PointedPattern",
    "StatisticDef",
    "SUITES",
    "TransformKind",
    "VerifyReport",
    "VincularPattern",
    "build_from_mcmahon",
    "build_from_mcmahon_steps",
    "check_permutation",
    "check_subexcedant",
    "count_many",
    "count_occurrences",
    "count_pointed_at",
    "distribution",
    "distribution_many",
    "enumerate_permutations",
    "enumerate_subexcedant",
    "enumeration_cap",
    "evaluate",
    "format_sequence",
    "from_expression",
    "identity",
    "induced_code",
    "inv",
    "is_mahonian",
    "is_permutation_code",
    "lehmer_decode",
    "lehmer_encode",
    "lookup",
    "maj",
    "mcmahon_code",
    "occurrences",
    "parse_digits",
    "parse_pattern",
    "parse_permutation",
    "parse_terms",
    "reduction",
    "registry",
    "run_suite",
    "verify_lehmer_identities",
    "verify_lemma_and_remarks",
    "verify_mahonian_all",
    "verify_mcmahon",
    "verify_s2_s4",
    "verify_theorem_codes",
]
