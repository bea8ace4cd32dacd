"""Pure-Python versions of the hot loops; semantics match ``_kernels.pyx``."""

from __future__ import annotations

from typing import Sequence


def count_vincular(perm: Sequence[int], values: Sequence[int], block_lengths: Sequence[int]) -> int:
    """Count occurrences of a dashed pattern by placing its blocks left to right.

    Each new entry is checked against the entries already placed, so a
    partial placement is abandoned as soon as its relative order breaks.
    """
    n, k = len(perm), len(values)
    if k > n:
        return 0
    nblocks = len(block_lengths)
    offsets = [0] * nblocks
    for b in range(1, nblocks):
        offsets[b] = offsets[b - 1] + block_lengths[b - 1]
    tail = [0] * (nblocks + 1)
    for b in range(nblocks - 1, -1, -1):
        tail[b] = tail[b + 1] + block_lengths[b]
    chosen = [0] * k

    def place(b: int, start: int) -> int:
        if b == nblocks:
            return 1
        off, length = offsets[b], block_lengths[b]
        total = 0
        for s in range(start, n - tail[b] + 1):
            ok = True
            for t in range(length):
                q = off + t
                x = perm[s + t]
                vq = values[q]
                for q2 in range(q):
                    if (x > chosen[q2]) != (vq > values[q2]):
                        ok = False
                        break
                if not ok:
                    break
                chosen[q] = x
            if ok:
                total += place(b + 1, s + length)
        return total

    return place(0, 0)


def shape_fillings(row_lengths: Sequence[int]) -> list[tuple[int, ...]]:
    """Every 0/1 filling of the shape satisfying both tableau axioms.

    Fillings come back as per-row bitmasks (bit ``c`` is column ``c`` from the
    left). Cells are visited column by column from the left, top to bottom,
    trying 0 before 1.
    """
    rows = len(row_lengths)
    cols = row_lengths[0] if rows else 0
    heights = [sum(1 for x in row_lengths if x > c) for c in range(cols)]
    cells = [(c, r) for c in range(cols) for r in range(heights[c])]
    ncells = len(cells)
    masks = [0] * rows
    out: list[tuple[int, ...]] = []

    def rec(idx: int, left_ones: int, col_one: bool) -> None:
        if idx == ncells:
            out.append(tuple(masks))
            return
        c, r = cells[idx]
        if r == 0:
            col_one = False
        last = r == heights[c] - 1
        # a 0 is illegal under a 1 with a 1 to its left, or as a column's last chance
        if not (col_one and (left_ones >> r) & 1) and not (last and not col_one):
            rec(idx + 1, left_ones, col_one)
        masks[r] |= 1 << c
        rec(idx + 1, left_ones | (1 << r), True)
        masks[r] &= ~(1 << c)

    rec(0, 0, False)
    return out
