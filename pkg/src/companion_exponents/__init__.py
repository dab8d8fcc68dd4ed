"""Exponents of primitive (0,1) companion matrices.

Closed-form exponent rules, a definition-level powering oracle, conductor
(coin-problem) computations, counting formulas, and exhaustive censuses
of attainable exponents, with a scriptable CLI front end
(``companion-exp``).
"""

from ._version import __version__
from .core import (
    BoolMatrix,
    CompanionSpec,
    ReducibleError,
    VertexPartition,
    companion_matrix,
    cycle_lengths,
    imprimitivity_index,
    is_irreducible,
    is_primitive,
    longest_run,
    vertex_partition,
    wielandt_bound,
)
from .counting import (
    CensusRecord,
    DispatchMismatchError,
    StringCountTable,
    block_prefix_upper_count,
    census,
    count_imprimitive,
    count_positive_trace_with_exponent,
    count_primitive,
    f_strings,
    gap_progression_exponent_claim,
    list_imprimitive,
    membership,
    string_count_table,
    t_runs,
    two_coprime_exponent_claim,
)
from .formulas import (
    ExponentReport,
    LocalExpQuery,
    PreconditionError,
    block_prefix_exponent,
    exponent,
    gap_rule_local_exponent,
    is_special_vertex,
    origin_local_exponent,
    positive_trace_exponent,
    reduce_to_support,
    require_primitive,
    smallest_cycle_two_exponent,
    two_cycle_exponent,
)
from .frobenius import (
    GeneratorSet,
    NotCoprimeError,
    conductor,
    pair_conductor,
    progression_conductor,
    representable,
)
from .oracle import (
    LocalExponentTable,
    NotPrimitiveError,
    PowerTrace,
    bool_product,
    has_positive_power,
    local_exponent,
    local_exponent_table,
    row_exponent,
)
from .oracle import exponent as oracle_exponent

__all__ = [
    "__version__",
    "BoolMatrix",
    "CensusRecord",
    "CompanionSpec",
    "DispatchMismatchError",
    "ExponentReport",
    "GeneratorSet",
    "LocalExpQuery",
    "LocalExponentTable",
    "NotCoprimeError",
    "NotPrimitiveError",
    "PowerTrace",
    "PreconditionError",
    "ReducibleError",
    "StringCountTable",
    "VertexPartition",
    "block_prefix_exponent",
    "block_prefix_upper_count",
    "bool_product",
    "census",
    "companion_matrix",
    "conductor",
    "count_imprimitive",
    "count_positive_trace_with_exponent",
    "count_primitive",
    "cycle_lengths",
    "exponent",
    "f_strings",
    "gap_progression_exponent_claim",
    "gap_rule_local_exponent",
    "has_positive_power",
    "imprimitivity_index",
    "is_irreducible",
    "is_primitive",
    "is_special_vertex",
    "list_imprimitive",
    "local_exponent",
    "local_exponent_table",
    "longest_run",
    "membership",
    "oracle_exponent",
    "origin_local_exponent",
    "pair_conductor",
    "positive_trace_exponent",
    "progression_conductor",
    "reduce_to_support",
    "representable",
    "require_primitive",
    "row_exponent",
    "smallest_cycle_two_exponent",
    "string_count_table",
    "t_runs",
    "two_coprime_exponent_claim",
    "two_cycle_exponent",
    "vertex_partition",
    "wielandt_bound",
]
