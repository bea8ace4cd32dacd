"""Alternating paths, the order on them, and the inversion statistic."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import AlternativeRepresentation, Cell


class PathOrder(enum.Enum):
    LESS = "<"
    GREATER = ">"
    P_CONTAINS_Q = "P contains Q"
    Q_CONTAINS_P = "Q contains P"


@dataclass(frozen=True)
class AlternatingPath:
    """Dot labels from the starting dot to a black dot in an unrestricted row.

    ``cells[k]`` is the ``(row_label, col_label)`` cell of the dot named by
    ``labels[k]``; keeping the cells lets paths be compared on their own.
    """

    labels: tuple[int, ...]
    cells: tuple[Cell, ...]

    @property
    def start(self) -> int:
        return self.labels[0]

    @property
    def end_cell(self) -> Cell:
        return self.cells[-1]

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.labels


def alternating_path(a: AlternativeRepresentation, start: int) -> AlternatingPath:
    """Follow dots from ``start`` until a black dot sits in an unrestricted row.

    A white dot steps to the black dot atop its column; a black dot in a row
    with a white dot steps to that white dot.

    Raises:
        ValueError: ``start`` is out of range or names a row without a white dot.
    """
    lab = a.labels
    black_row, white_col = a.black_row, a.white_col
    if start in lab.col_index:
        cell = (black_row[start], start)
    elif start in white_col:
        cell = (start, white_col[start])
    elif start in lab.row_index:
        raise ValueError(f"row {start} holds no white dot, so no path starts there")
    else:
        raise ValueError(f"label {start} is out of range 1..{a.n}")

    labels, cells = [start], [cell]
    on_black = start in lab.col_index
    while True:
        i, j = cells[-1]
        if on_black:
            if i not in white_col:
                break
            labels.append(i)
            cells.append((i, white_col[i]))
        else:
            labels.append(j)
            cells.append((black_row[j], j))
        on_black = not on_black
    return AlternatingPath(tuple(labels), tuple(cells))


def all_paths(a: AlternativeRepresentation) -> dict[int, AlternatingPath]:
    """Path of every dot, keyed by the dot's label."""
    return {k: alternating_path(a, k) for k in a.dot_labels()}


def _outranks(p_cell: Cell, q_cell: Cell) -> bool:
    # Distinct ending dots either differ in row (compare by "below": larger
    # row label) or share a row (compare by "right": smaller column label).
    if p_cell[0] != q_cell[0]:
        return p_cell[0] > q_cell[0]
    return p_cell[1] < q_cell[1]


def compare_paths(p: AlternatingPath, q: AlternatingPath) -> PathOrder:
    m = 0
    while m < min(len(p), len(q)) and p.labels[-1 - m] == q.labels[-1 - m]:
        m += 1
    if m == len(q):
        return PathOrder.P_CONTAINS_Q
    if m == len(p):
        return PathOrder.Q_CONTAINS_P
    # with m == 0 the paths are disjoint and these are their own ending dots
    p_end, q_end = p.cells[-1 - m], q.cells[-1 - m]
    return PathOrder.GREATER if _outranks(p_end, q_end) else PathOrder.LESS


def inversions(a: AlternativeRepresentation, paths: dict[int, AlternatingPath] | None = None) -> list[tuple[int, int]]:
    """All pairs ``(j, k)`` with ``j`` a column label, ``j < k`` and ``P_j > P_k``.

    ``k`` runs over dot labels only: a row label without a white dot has no
    path to compare against.
    """
    if paths is None:
        paths = all_paths(a)
    dots = sorted(paths)
    out = []
    for j in a.column_labels:
        pj = paths[j]
        for k in dots:
            if k <= j or k in pj:
                continue
            if compare_paths(pj, paths[k]) is PathOrder.GREATER:
                out.append((j, k))
    return out


def w(a: AlternativeRepresentation, j: int) -> int:
    """Number of inversions whose first entry is the column label ``j``."""
    if j not in a.labels.col_index:
        raise ValueError(f"{j} is not a column label")
    return sum(1 for first, _ in inversions(a) if first == j)


def w_vector(a: AlternativeRepresentation) -> dict[int, int]:
    counts = dict.fromkeys(a.column_labels, 0)
    for j, _ in inversions(a):
        counts[j] += 1
    return counts


def inv(a: AlternativeRepresentation) -> int:
    return len(inversions(a))
