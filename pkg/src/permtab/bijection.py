"""The insertion map from dot representations to permutations."""

from __future__ import annotations

from typing import Sequence

from .core import AlternativeRepresentation, reconstruct

Permutation = tuple[int, ...]


def check_permutation(entries: Sequence[int]) -> Permutation:
    perm = tuple(int(x) for x in entries)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if not text:
        return ()
    try:
        return check_permutation(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad permutation {text!r}: {exc}") from None


def format_permutation(perm: Sequence[int]) -> str:
    return ",".join(map(str, perm))


def xi(a: AlternativeRepresentation, *, checked: bool = False) -> Permutation:
    """Build the permutation of ``a`` by inserting column labels, largest first.

    Start from the unrestricted row labels in increasing order. Each column
    label ``j`` goes immediately left of the row label of its black dot, and
    the rows holding white dots in column ``j`` then go, increasing, as a
    block immediately left of ``j``.

    Pass ``checked=True`` to skip the reconstruction check when ``a`` is
    already known to come from a valid tableau.
    """
    if not checked:
        reconstruct(a)
    seq = a.unrestricted_rows()
    whites_by_col: dict[int, list[int]] = {}
    for i, j in a.white_dots:
        whites_by_col.setdefault(j, []).append(i)
    for j in sorted(a.labels.col_label, reverse=True):
        pos = seq.index(a.black_row[j])
        seq.insert(pos, j)
        seq[pos:pos] = sorted(whites_by_col.get(j, ()))
    return tuple(seq)


def descent_column_check(a: AlternativeRepresentation, perm: Sequence[int] | None = None) -> bool:
    """True iff the descent tops of ``xi(a)`` are exactly its column labels."""
    if perm is None:
        perm = xi(a)
    cols = a.labels.col_index
    for x, y in zip(perm, perm[1:]):
        if (x > y) != (x in cols):
            return False
    return not perm or perm[-1] not in cols
