"""Exhaustive generation of tableaux and statistic histograms."""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import _accel
from .bijection import Permutation
from .core import FerrersShape, PermutationTableau, to_alternative
from .patterns import count_occurrences, parse_pattern
from .paths import inv


def _compositions(total_rows: int, width: int) -> Iterator[tuple[int, ...]]:
    # weakly decreasing tuples of length total_rows with entries in [0, width],
    # produced in reverse-lexicographic order
    if total_rows == 0:
        yield ()
        return
    for first in range(width, -1, -1):
        for rest in _compositions(total_rows - 1, first):
            yield (first, *rest)


def shapes_of_length(n: int) -> Iterator[FerrersShape]:
    """All shapes with rows + columns = n, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        yield FerrersShape(())
        return
    found = []
    for r in range(1, n + 1):
        width = n - r
        found.extend((width, *rest) for rest in _compositions(r - 1, width))
    for rows in sorted(found, reverse=True):
        yield FerrersShape(rows)


def tableaux_of_shape(shape: FerrersShape) -> Iterator[PermutationTableau]:
    widths = shape.row_lengths
    for masks in _accel.shape_fillings(widths):
        rows = tuple(tuple((m >> c) & 1 for c in range(w)) for m, w in zip(masks, widths))
        yield PermutationTableau(shape, rows)


def tableaux_of_length(n: int) -> Iterator[PermutationTableau]:
    for shape in shapes_of_length(n):
        yield from tableaux_of_shape(shape)


def count_of_shape(shape: FerrersShape) -> int:
    return len(_accel.shape_fillings(shape.row_lengths))


@dataclass(frozen=True)
class StatisticDistribution:
    histogram: dict[int, int]
    total: int

    def __post_init__(self) -> None:
        if sum(self.histogram.values()) != self.total:
            raise ValueError("histogram does not sum to total")

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "StatisticDistribution":
        counts = Counter(values)
        return cls(dict(sorted(counts.items())), sum(counts.values()))

    def merge(self, other: "StatisticDistribution") -> "StatisticDistribution":
        counts = Counter(self.histogram)
        counts.update(other.histogram)
        return StatisticDistribution(dict(sorted(counts.items())), self.total + other.total)

    def to_tsv(self) -> str:
        lines = [f"{v}\t{c}" for v, c in self.histogram.items()]
        lines.append(f"total\t{self.total}")
        return "\n".join(lines) + "\n"


def _inv_of_shape(shape: FerrersShape) -> StatisticDistribution:
    return StatisticDistribution.from_values(inv(to_alternative(t)) for t in tableaux_of_shape(shape))


def _pattern_values(pattern: str) -> Callable[[Permutation], int]:
    p = parse_pattern(pattern)
    return lambda perm: count_occurrences(p, perm)


def distribution(n: int, statistic: str, jobs: int = 1) -> StatisticDistribution:
    """Histogram of a named statistic at length ``n``.

    ``"inv"`` (alias ``"inv-tableau"``) is the inversion number over all
    tableaux of length ``n``; ``"pattern:<p>"`` counts occurrences of the
    dashed pattern ``p`` over all permutations of ``1..n``.
    """
    if statistic in ("inv", "inv-tableau"):
        shapes = list(shapes_of_length(n))
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as pool:
                parts = list(pool.map(_inv_of_shape, shapes))
        else:
            parts = [_inv_of_shape(s) for s in shapes]
        result = StatisticDistribution({}, 0)
        for part in parts:
            result = result.merge(part)
        return result
    if statistic.startswith("pattern:"):
        f = _pattern_values(statistic.split(":", 1)[1])
        return StatisticDistribution.from_values(
            f(perm) for perm in itertools.permutations(range(1, n + 1))
        )
    raise ValueError(f"unknown statistic {statistic!r}; use 'inv' or 'pattern:<p>'")
