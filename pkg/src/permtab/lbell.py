"""L-Bell tableaux and Bell numbers."""

from __future__ import annotations

from .core import AlternativeRepresentation, CellKind, PermutationTableau, classify_cells


def is_lbell(t: PermutationTableau) -> bool:
    """Every topmost 1 is also the leftmost 1 of its row.

    Leftmost means the largest column label, since column labels grow
    right to left.
    """
    kinds = classify_cells(t)
    lab = t.labels
    for r, row in enumerate(t.filling):
        ones = [c for c, v in enumerate(row) if v]
        i = lab.row_label[r]
        if any(kinds[(i, lab.col_label[c])] is CellKind.TOPMOST_ONE for c in ones[1:]):
            return False
    return True


def structural_noinv_check(a: AlternativeRepresentation) -> bool:
    """At most one black dot per row, and no empty cell sits under a black dot
    with a black dot as the nearest dot to its right."""
    lab = a.labels
    per_row: dict[int, int] = {}
    for i, _ in a.black_dots:
        per_row[i] = per_row.get(i, 0) + 1
        if per_row[i] > 1:
            return False
    dots = {cell: "B" for cell in a.black_dots}
    dots.update({cell: "W" for cell in a.white_dots})
    for r, width in enumerate(a.shape.row_lengths):
        i = lab.row_label[r]
        # scan right to left, remembering the nearest dot seen so far
        nearest = None
        for c in range(width - 1, -1, -1):
            cell = (i, lab.col_label[c])
            kind = dots.get(cell)
            if kind is not None:
                nearest = kind
                continue
            j = lab.col_label[c]
            if nearest == "B" and a.black_row[j] < i:
                return False
    return True


def bell(m: int) -> list[int]:
    """Bell numbers B_0..B_m from the Bell triangle."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    values = [1]
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        values.append(row[0])
    return values
