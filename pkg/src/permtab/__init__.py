"""Permutation tableaux, alternating paths, and the dashed pattern 32-1."""

from ._accel import BACKEND
from .bijection import Permutation, descent_column_check, format_permutation, parse_permutation, xi
from .core import (
    AlternativeRepresentation,
    BorderLabeling,
    CellKind,
    FerrersShape,
    PermutationTableau,
    StructureError,
    TableauError,
    classify_cells,
    format_alternative,
    format_tableau,
    label_border,
    parse_alternative,
    parse_tableau,
    reconstruct,
    to_alternative,
    unrestricted_rows,
    validate,
)
from .enumeration import StatisticDistribution, distribution, shapes_of_length, tableaux_of_length, tableaux_of_shape
from .lbell import bell, is_lbell, structural_noinv_check
from .paths import AlternatingPath, PathOrder, alternating_path, compare_paths, inv, inversions, w, w_vector
from .patterns import DashedPattern, PatternError, count_occurrences, oracle_count, parse_pattern, reverse_complement

__version__ = "0.1.0"
