"""Ferrers shapes, border labelings, permutation tableaux and their dot form.

Every public function addresses cells as ``(row_label, col_label)`` pairs.
Geometric indices (row 0 at the top, column 0 at the left) stay internal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

Cell = tuple[int, int]


class TableauError(ValueError):
    """Raised when input cannot be turned into a permutation tableau."""


class StructureError(TableauError):
    """The filling does not fit the shape, or a dot lies outside it."""


@dataclass(frozen=True)
class FerrersShape:
    """Weakly decreasing row lengths; trailing zeros are empty rows."""

    row_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(x) for x in self.row_lengths)
        object.__setattr__(self, "row_lengths", rows)
        if any(x < 0 for x in rows):
            raise StructureError(f"negative row length in {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise StructureError(f"row lengths must be weakly decreasing: {rows}")

    @property
    def rows(self) -> int:
        return len(self.row_lengths)

    @property
    def columns(self) -> int:
        return self.row_lengths[0] if self.row_lengths else 0

    @property
    def length(self) -> int:
        return self.rows + self.columns

    def column_height(self, c: int) -> int:
        return sum(1 for x in self.row_lengths if x > c)

    def __str__(self) -> str:
        # the empty shape (n = 0) is written like an empty row
        return ",".join(map(str, self.row_lengths)) or "-"


@dataclass(frozen=True)
class BorderLabeling:
    """Labels 1..n read along the southeast border, top right to bottom left.

    ``row_label[r]`` and ``col_label[c]`` are indexed geometrically (row 0 on
    top, column 0 on the left); the inverse maps go from label to index.
    """

    row_label: tuple[int, ...]
    col_label: tuple[int, ...]
    row_index: Mapping[int, int] = field(repr=False)
    col_index: Mapping[int, int] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.row_label) + len(self.col_label)

    @property
    def row_labels(self) -> frozenset[int]:
        return frozenset(self.row_label)

    @property
    def column_labels(self) -> frozenset[int]:
        return frozenset(self.col_label)

    def is_column(self, label: int) -> bool:
        if not 1 <= label <= self.n:
            raise KeyError(label)
        return label in self.col_index


def label_border(shape: FerrersShape) -> BorderLabeling:
    """Walk the southeast border and hand out labels 1..n."""
    row_label = [0] * shape.rows
    col_label = [0] * shape.columns
    label = 1
    x = shape.columns
    for r, width in enumerate(shape.row_lengths):
        while x > width:
            x -= 1
            col_label[x] = label
            label += 1
        row_label[r] = label
        label += 1
    while x > 0:
        x -= 1
        col_label[x] = label
        label += 1
    return BorderLabeling(
        row_label=tuple(row_label),
        col_label=tuple(col_label),
        row_index={lab: r for r, lab in enumerate(row_label)},
        col_index={lab: c for c, lab in enumerate(col_label)},
    )


class Axiom(enum.Enum):
    COLUMN_WITHOUT_ONE = 1
    ZERO_WITH_ONE_ABOVE_AND_LEFT = 2


@dataclass(frozen=True)
class Violation:
    axiom: Axiom
    cell: Cell | None
    column: int | None = None

    def __str__(self) -> str:
        if self.axiom is Axiom.COLUMN_WITHOUT_ONE:
            return f"column {self.column} contains no 1"
        return f"cell {self.cell} is a 0 with a 1 above and a 1 to the left"


@dataclass(frozen=True)
class PermutationTableau:
    """A 0/1 filling of a Ferrers shape, rows listed left to right.

    Construction only checks that the filling fits the shape; use
    :func:`validate` (or :meth:`is_valid`) for the two tableau axioms.
    """

    shape: FerrersShape
    filling: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.shape, FerrersShape):
            object.__setattr__(self, "shape", FerrersShape(tuple(self.shape)))
        rows = tuple(tuple(int(v) for v in row) for row in self.filling)
        object.__setattr__(self, "filling", rows)
        widths = tuple(len(row) for row in rows)
        if widths != self.shape.row_lengths:
            raise StructureError(
                f"filling row lengths {widths} do not match shape {self.shape.row_lengths}"
            )
        if any(v not in (0, 1) for row in rows for v in row):
            raise StructureError("filling entries must be 0 or 1")

    @cached_property
    def labels(self) -> BorderLabeling:
        return label_border(self.shape)

    @property
    def n(self) -> int:
        return self.shape.length

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        lab = self.labels
        return self.filling[lab.row_index[i]][lab.col_index[j]]

    def cells(self) -> Iterator[Cell]:
        lab = self.labels
        for r, row in enumerate(self.filling):
            for c in range(len(row)):
                yield lab.row_label[r], lab.col_label[c]

    def is_valid(self) -> bool:
        return not validate(self)


def validate(t: PermutationTableau) -> list[Violation]:
    """Return every axiom violation of ``t``; an empty list means valid."""
    lab = t.labels
    rows = t.filling
    out: list[Violation] = []
    for c in range(t.shape.columns):
        if not any(row[c] for row in rows if len(row) > c):
            out.append(Violation(Axiom.COLUMN_WITHOUT_ONE, None, lab.col_label[c]))
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v:
                continue
            if any(row[:c]) and any(rows[q][c] for q in range(r)):
                out.append(
                    Violation(Axiom.ZERO_WITH_ONE_ABOVE_AND_LEFT, (lab.row_label[r], lab.col_label[c]))
                )
    return out


def check_valid(t: PermutationTableau) -> PermutationTableau:
    problems = validate(t)
    if problems:
        raise TableauError("; ".join(map(str, problems)))
    return t


class CellKind(enum.Enum):
    TOPMOST_ONE = "topmost-1"
    OTHER_ONE = "other-1"
    RESTRICTED_ZERO = "restricted-0"
    RIGHTMOST_RESTRICTED_ZERO = "rightmost-restricted-0"
    FREE_ZERO = "free-0"


def _classify_grid(rows: Sequence[Sequence[int]]) -> list[list[CellKind]]:
    kinds: list[list[CellKind]] = []
    seen_one: set[int] = set()
    for row in rows:
        kind_row = []
        for c, v in enumerate(row):
            if v:
                kind_row.append(CellKind.OTHER_ONE if c in seen_one else CellKind.TOPMOST_ONE)
            else:
                kind_row.append(CellKind.RESTRICTED_ZERO if c in seen_one else CellKind.FREE_ZERO)
        # the rightmost restricted 0 has the largest column index
        for c in range(len(row) - 1, -1, -1):
            if kind_row[c] is CellKind.RESTRICTED_ZERO:
                kind_row[c] = CellKind.RIGHTMOST_RESTRICTED_ZERO
                break
        seen_one.update(c for c, v in enumerate(row) if v)
        kinds.append(kind_row)
    return kinds


def classify_cells(t: PermutationTableau) -> dict[Cell, CellKind]:
    lab = t.labels
    return {
        (lab.row_label[r], lab.col_label[c]): kind
        for r, kind_row in enumerate(_classify_grid(t.filling))
        for c, kind in enumerate(kind_row)
    }


def unrestricted_rows(t: PermutationTableau) -> list[int]:
    """Row labels of rows holding no restricted 0, in increasing order."""
    lab = t.labels
    restricted = (
        CellKind.RESTRICTED_ZERO,
        CellKind.RIGHTMOST_RESTRICTED_ZERO,
    )
    return sorted(
        lab.row_label[r]
        for r, kind_row in enumerate(_classify_grid(t.filling))
        if not any(k in restricted for k in kind_row)
    )


@dataclass(frozen=True)
class AlternativeRepresentation:
    """Shape plus black dots (topmost 1s) and white dots (rightmost restricted 0s).

    Only structural well-formedness is enforced here: dots lie inside the
    shape, one black dot per column, at most one white dot per row, and no
    cell carries both kinds. Whether the dots encode a tableau is decided by
    :func:`reconstruct`.
    """

    shape: FerrersShape
    black_dots: frozenset[Cell]
    white_dots: frozenset[Cell]

    def __post_init__(self) -> None:
        if not isinstance(self.shape, FerrersShape):
            object.__setattr__(self, "shape", FerrersShape(tuple(self.shape)))
        black = frozenset((int(i), int(j)) for i, j in self.black_dots)
        white = frozenset((int(i), int(j)) for i, j in self.white_dots)
        object.__setattr__(self, "black_dots", black)
        object.__setattr__(self, "white_dots", white)
        lab = self.labels
        for i, j in black | white:
            if i not in lab.row_index or j not in lab.col_index:
                raise StructureError(f"cell ({i},{j}) does not use a row label and a column label")
            if lab.col_index[j] >= self.shape.row_lengths[lab.row_index[i]]:
                raise StructureError(f"cell ({i},{j}) lies outside the shape")
        cols = sorted(j for _, j in black)
        if cols != sorted(lab.col_label):
            raise StructureError("need exactly one black dot in every column")
        rows = [i for i, _ in white]
        if len(rows) != len(set(rows)):
            raise StructureError("at most one white dot per row")
        if black & white:
            raise StructureError("a cell cannot hold both a black and a white dot")

    @cached_property
    def labels(self) -> BorderLabeling:
        return label_border(self.shape)

    @property
    def n(self) -> int:
        return self.shape.length

    @cached_property
    def black_row(self) -> dict[int, int]:
        """Column label -> row label of that column's black dot."""
        return {j: i for i, j in self.black_dots}

    @cached_property
    def white_col(self) -> dict[int, int]:
        """Row label -> column label of that row's white dot."""
        return {i: j for i, j in self.white_dots}

    @property
    def column_labels(self) -> list[int]:
        return sorted(self.labels.col_label)

    def unrestricted_rows(self) -> list[int]:
        return sorted(i for i in self.labels.row_label if i not in self.white_col)

    def dot_labels(self) -> list[int]:
        """Labels naming a dot: every column label, and rows with a white dot."""
        return sorted([*self.labels.col_label, *self.white_col])


def to_alternative(t: PermutationTableau) -> AlternativeRepresentation:
    kinds = classify_cells(t)
    return AlternativeRepresentation(
        shape=t.shape,
        black_dots=frozenset(c for c, k in kinds.items() if k is CellKind.TOPMOST_ONE),
        white_dots=frozenset(c for c, k in kinds.items() if k is CellKind.RIGHTMOST_RESTRICTED_ZERO),
    )


def reconstruct(a: AlternativeRepresentation) -> PermutationTableau:
    """Rebuild the unique tableau whose topmost 1s and rightmost restricted 0s are ``a``.

    Raises:
        TableauError: if no permutation tableau has these dots.
    """
    lab = a.labels
    top = {lab.col_index[j]: lab.row_index[i] for i, j in a.black_dots}
    white = {lab.row_index[i]: lab.col_index[j] for i, j in a.white_dots}
    for r, c in white.items():
        if top[c] >= r:
            raise TableauError(
                f"white dot ({lab.row_label[r]},{lab.col_label[c]}) has no black dot above it"
            )
    rows = []
    for r, width in enumerate(a.shape.row_lengths):
        w = white.get(r)
        row = []
        for c in range(width):
            if r < top[c]:
                row.append(0)
            elif r == top[c]:
                row.append(1)
            elif w is None:
                row.append(1)
            else:
                # geometric right of the white dot is a larger column index
                row.append(1 if c > w else 0)
        rows.append(tuple(row))
    t = PermutationTableau(a.shape, tuple(rows))
    problems = validate(t)
    if problems:
        raise TableauError("dots do not encode a permutation tableau: " + "; ".join(map(str, problems)))
    if to_alternative(t) != a:
        raise TableauError("dots do not encode a permutation tableau: classification differs")
    return t


# -- text formats ----------------------------------------------------------


def format_tableau(t: PermutationTableau) -> str:
    lines = [str(t.n), str(t.shape)]
    lines += ["".join(map(str, row)) if row else "-" for row in t.filling]
    return "\n".join(lines) + "\n"


def format_alternative(a: AlternativeRepresentation) -> str:
    lines = [str(a.n), str(a.shape)]
    lines += [f"B {i} {j}" for i, j in sorted(a.black_dots, key=lambda cell: cell[1])]
    lines += [f"W {i} {j}" for i, j in sorted(a.white_dots)]
    return "\n".join(lines) + "\n"


def _parse_header(lines: list[str]) -> tuple[int, FerrersShape]:
    if len(lines) < 2:
        raise TableauError("expected a length line and a shape line")
    try:
        n = int(lines[0])
        shape_text = lines[1]
        rows = tuple(int(x) for x in shape_text.split(",")) if shape_text != "-" else ()
    except ValueError as exc:
        raise TableauError(f"bad header: {exc}") from None
    shape = FerrersShape(rows)
    if shape.length != n:
        raise TableauError(f"declared length {n} but shape {shape} has length {shape.length}")
    return n, shape


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.strip("\n").splitlines()]


def parse_tableau(text: str) -> PermutationTableau:
    lines = _content_lines(text)
    _, shape = _parse_header(lines)
    body = lines[2:]
    if len(body) != shape.rows:
        raise StructureError(f"shape has {shape.rows} rows but {len(body)} row lines given")
    rows = []
    for line in body:
        if line == "-":
            rows.append(())
        elif line and set(line) <= {"0", "1"}:
            rows.append(tuple(int(ch) for ch in line))
        else:
            raise StructureError(f"bad row line {line!r}")
    return PermutationTableau(shape, tuple(rows))


def parse_alternative(text: str) -> AlternativeRepresentation:
    lines = _content_lines(text)
    _, shape = _parse_header(lines)
    black, white = set(), set()
    for line in lines[2:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("B", "W"):
            raise StructureError(f"bad dot line {line!r}")
        try:
            cell = (int(parts[1]), int(parts[2]))
        except ValueError:
            raise StructureError(f"bad dot line {line!r}") from None
        (black if parts[0] == "B" else white).add(cell)
    return AlternativeRepresentation(shape, frozenset(black), frozenset(white))


def is_alternative_text(text: str) -> bool:
    body = _content_lines(text)[2:]
    return bool(body) and body[0][:1] in ("B", "W")


def load(text: str) -> AlternativeRepresentation:
    """Read either text format and return a checked dot representation."""
    if is_alternative_text(text):
        a = parse_alternative(text)
        reconstruct(a)
        return a
    return to_alternative(check_valid(parse_tableau(text)))


def iter_records(text: str) -> Iterable[str]:
    """Split a stream of blank-line separated records."""
    chunk: list[str] = []
    for line in text.splitlines():
        if line.strip():
            chunk.append(line)
        elif chunk:
            yield "\n".join(chunk) + "\n"
            chunk = []
    if chunk:
        yield "\n".join(chunk) + "\n"
