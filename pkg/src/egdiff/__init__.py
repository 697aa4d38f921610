"""Erdős–Gallai difference lists of degree sequences, with brute-force oracles."""

from .core import (
    DegreeSequence,
    DifferenceList,
    EGDiffError,
    InvalidDegreeError,
    NotGraphicalError,
    PreconditionError,
    SizeLimitError,
    eg_difference,
    eg_differences,
    is_graphical_full,
    is_graphical_li,
    last_difference,
    max_difference,
    modified_durfee,
    new_degree_sequence,
    principal_differences,
)
from .matrix import (
    StarMatrix,
    antitranspose,
    check_islands,
    difference_matrix,
    ferrers,
    format_matrix,
    sigma,
    sigma_all,
)
from .complement import complement_index, complement_sequence, shared_differences
from .classes import (
    SplitPartition,
    decomposed_sequences,
    has_isolated_vertex,
    is_split,
    is_threshold,
    is_weakly_threshold,
    split_off_partition,
    splittance,
)
from .realize import (
    ForcedPair,
    Graph,
    enumerate_labeled_realizations,
    forcible_pairs,
    havel_hakimi,
    iter_labeled_realizations,
    splittance_bruteforce,
)
from .posets import (
    UnitTransformation,
    apply_unit_transformation,
    canonical_unit_transformations,
    delta_update,
    dominates,
    is_canonical,
    muirhead_chain,
    rao_leq,
    unit_transformation,
)

__version__ = "0.1.0"
