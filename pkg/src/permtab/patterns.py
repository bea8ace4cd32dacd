"""Dashed (vincular) patterns: parsing, occurrence counting, reverse complement."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from . import _accel
from .bijection import Permutation

_TOKEN = re.compile(r"[1-9]+|--?")


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class DashedPattern:
    """Blocks of pattern values; entries inside a block must sit side by side."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(int(v) for v in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks or any(not b for b in blocks):
            raise PatternError("pattern blocks must be nonempty")
        values = self.values
        if len(set(values)) != len(values):
            raise PatternError(f"repeated value in {self}")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PatternError(f"values of {self} are not 1..{len(values)}")
        if len(values) > 9:
            raise PatternError("patterns are limited to 9 letters")

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for b in self.blocks for v in b)

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def block_lengths(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return "-".join("".join(map(str, b)) for b in self.blocks)


def parse_pattern(text: str) -> DashedPattern:
    """Read ``"32-1"`` style notation; ``--`` is accepted as a single dash.

    >>> parse_pattern("32--1").blocks
    ((3, 2), (1,))
    """
    text = text.strip()
    pos = 0
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.start() != pos:
            break
        tokens.append(m.group())
        pos = m.end()
    if pos != len(text) or not text:
        raise PatternError(f"illegal pattern text {text!r}")
    blocks: list[tuple[int, ...]] = []
    expect_digits = True
    for tok in tokens:
        is_dash = tok[0] == "-"
        if is_dash == expect_digits:
            raise PatternError(f"empty block in {text!r}")
        if not is_dash:
            blocks.append(tuple(int(ch) for ch in tok))
        expect_digits = is_dash
    if expect_digits:
        raise PatternError(f"empty block in {text!r}")
    return DashedPattern(tuple(blocks))


def _as_pattern(p: DashedPattern | str) -> DashedPattern:
    return parse_pattern(p) if isinstance(p, str) else p


def count_occurrences(p: DashedPattern | str, perm: Sequence[int]) -> int:
    """Number of occurrences of the dashed pattern ``p`` in ``perm``."""
    p = _as_pattern(p)
    return _accel.count_vincular(tuple(perm), p.values, p.block_lengths)


def oracle_count(p: DashedPattern | str, perm: Sequence[int]) -> int:
    """Brute-force count over every increasing index tuple; kept deliberately naive."""
    p = _as_pattern(p)
    perm = list(perm)
    starts, pos = [], 0
    for length in p.block_lengths:
        starts.append(pos)
        pos += length
    adjacent = {q for s, length in zip(starts, p.block_lengths) for q in range(s + 1, s + length)}
    target = _standardize(p.values)
    total = 0
    for idx in itertools.combinations(range(len(perm)), p.k):
        if any(idx[q] != idx[q - 1] + 1 for q in adjacent):
            continue
        if _standardize([perm[i] for i in idx]) == target:
            total += 1
    return total


def _standardize(seq: Sequence[int]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(seq), start=1)}
    return tuple(ranks[v] for v in seq)


def reverse_complement(perm: Sequence[int]) -> Permutation:
    n = len(perm)
    return tuple(n + 1 - x for x in reversed(perm))
