import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permtab import (
    AlternativeRepresentation,
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
from permtab.core import Axiom, load

from conftest import all_tableaux
from oracles import brute_shapes


@pytest.mark.parametrize(
    "rows, row_labels, col_labels",
    [
        ((5, 5, 3, 2, 2, 0), {1, 2, 5, 7, 8, 11}, {3, 4, 6, 9, 10}),
        ((0,), {1}, set()),
        ((2, 2, 1), {1, 2, 4}, {3, 5}),
        ((6, 5, 5, 5, 4, 3), {1, 3, 4, 5, 7, 9}, {2, 6, 8, 10, 11, 12}),
    ],
)
def test_label_border(rows, row_labels, col_labels):
    lab = label_border(FerrersShape(rows))
    assert set(lab.row_label) == row_labels
    assert set(lab.col_label) == col_labels


def test_labels_increase_in_reading_direction():
    lab = label_border(FerrersShape((5, 5, 3, 2, 2, 0)))
    assert list(lab.row_label) == sorted(lab.row_label)
    # column 0 is the leftmost, so labels decrease left to right
    assert list(lab.col_label) == sorted(lab.col_label, reverse=True)
    assert lab.is_column(9) and not lab.is_column(8)


@pytest.mark.parametrize("n", range(0, 8))
def test_label_partition(n):
    for rows in brute_shapes(n):
        lab = label_border(FerrersShape(rows))
        labels = list(lab.row_label) + list(lab.col_label)
        assert sorted(labels) == list(range(1, n + 1))


def test_shape_rejects_increase():
    with pytest.raises(StructureError):
        FerrersShape((1, 2))


def test_validate_figure_1_1(figure):
    assert validate(parse_tableau(figure("fig1_1.tab"))) == []


def test_validate_column_without_one():
    t = PermutationTableau(FerrersShape((1,)), ((0,),))
    (v,) = validate(t)
    assert v.axiom is Axiom.COLUMN_WITHOUT_ONE and v.column == 2


def test_validate_zero_with_one_above_and_left():
    # labels: rows 1, 2; columns 3 (right), 4 (left)
    t = PermutationTableau(FerrersShape((2, 2)), ((0, 1), (1, 0)))
    problems = validate(t)
    assert [(p.axiom, p.cell) for p in problems] == [(Axiom.ZERO_WITH_ONE_ABOVE_AND_LEFT, (2, 3))]


def test_validate_reports_every_violation():
    t = PermutationTableau(FerrersShape((2, 2, 2)), ((0, 1), (1, 0), (1, 0)))
    cells = sorted(p.cell for p in validate(t))
    assert cells == [(2, 4), (3, 4)]


def test_filling_shape_mismatch_is_structural():
    with pytest.raises(StructureError):
        PermutationTableau(FerrersShape((2, 1)), ((1, 1), (1, 1)))


def test_classify_figure_1_1(figure):
    t = parse_tableau(figure("fig1_1.tab"))
    kinds = classify_cells(t)
    rrz = sorted(c for c, k in kinds.items() if k is CellKind.RIGHTMOST_RESTRICTED_ZERO)
    assert rrz == [(5, 9), (8, 10)]
    assert unrestricted_rows(t) == [1, 2, 7, 11]
    tops = sorted(j for (_, j), k in kinds.items() if k is CellKind.TOPMOST_ONE)
    assert tops == [3, 4, 6, 9, 10]


def test_classify_empty_rows():
    t = PermutationTableau(FerrersShape((0, 0, 0)), ((), (), ()))
    assert classify_cells(t) == {}
    assert unrestricted_rows(t) == [1, 2, 3]


def test_classify_figure_2_2_right(figure):
    t = reconstruct(parse_alternative(figure("fig2_2_right.alt")))
    kinds = classify_cells(t)
    assert [c for c, k in kinds.items() if k is CellKind.RIGHTMOST_RESTRICTED_ZERO] == [(4, 5)]
    assert unrestricted_rows(t) == [1, 2]


@pytest.mark.parametrize("n", range(0, 7))
def test_classification_soundness(n):
    for t in all_tableaux(n):
        kinds = classify_cells(t)
        for (i, j), k in kinds.items():
            if k is not CellKind.RIGHTMOST_RESTRICTED_ZERO:
                continue
            above = [t[(i2, j)] for i2 in t.labels.row_label if i2 < i and (i2, j) in kinds]
            assert 1 in above
            right = [kinds[(i, j2)] for j2 in t.labels.col_label if j2 < j and (i, j2) in kinds]
            assert CellKind.RESTRICTED_ZERO not in right
            assert CellKind.RIGHTMOST_RESTRICTED_ZERO not in right


def test_to_alternative_figure_1_1(figure):
    a = to_alternative(parse_tableau(figure("fig1_1.tab")))
    assert sorted(j for _, j in a.black_dots) == [3, 4, 6, 9, 10]
    assert sorted(a.white_dots) == [(5, 9), (8, 10)]


def test_to_alternative_figure_2_2_left():
    t = PermutationTableau(FerrersShape((2,)), ((1, 1),))
    a = to_alternative(t)
    assert a.black_dots == {(1, 2), (1, 3)}
    assert a.white_dots == frozenset()


def test_to_alternative_empty_rows():
    a = to_alternative(PermutationTableau(FerrersShape((0, 0)), ((), ())))
    assert not a.black_dots and not a.white_dots


def test_reconstruct_figure_2_1(figure):
    a = parse_alternative(figure("fig2_1.alt"))
    assert reconstruct(a) == parse_tableau(figure("fig2_1.tab"))


def test_reconstruct_black_dots_in_first_row():
    shape = FerrersShape((3, 2, 1))
    lab = label_border(shape)
    a = AlternativeRepresentation(shape, frozenset((lab.row_label[0], j) for j in lab.col_label), frozenset())
    t = reconstruct(a)
    assert t.filling == ((1, 1, 1), (1, 1), (1,))
    assert validate(t) == [] and to_alternative(t) == a


def test_reconstruct_white_without_black_above():
    # columns 3 (right) and 4 (left); black dot of column 4 sits in row 2
    a = AlternativeRepresentation(FerrersShape((2, 2)), frozenset({(1, 3), (2, 4)}), frozenset({(2, 3)}))
    with pytest.raises(TableauError):
        reconstruct(a)


def test_reconstruct_rejects_non_encoding_dots():
    # white dot right of the black dot in its row cannot be a restricted 0
    a = AlternativeRepresentation(FerrersShape((2, 2)), frozenset({(2, 4), (1, 3)}), frozenset({(2, 3)}))
    with pytest.raises(TableauError):
        reconstruct(a)


def test_alternative_structure_checks():
    shape = FerrersShape((2,))
    with pytest.raises(StructureError):
        AlternativeRepresentation(shape, frozenset({(1, 2)}), frozenset())
    with pytest.raises(StructureError):
        AlternativeRepresentation(shape, frozenset({(1, 2), (1, 3), (1, 3)}), frozenset({(2, 3)}))


@pytest.mark.parametrize("n", range(0, 8))
def test_round_trip(n):
    for t in all_tableaux(n):
        assert reconstruct(to_alternative(t)) == t


@pytest.mark.parametrize("n", range(0, 7))
def test_alternative_unique(n):
    reps = [to_alternative(t) for t in all_tableaux(n)]
    assert len(set(reps)) == len(reps)


@st.composite
def fillings(draw):
    rows = draw(st.lists(st.integers(0, 4), min_size=1, max_size=5).map(lambda xs: tuple(sorted(xs, reverse=True))))
    filling = tuple(tuple(draw(st.lists(st.integers(0, 1), min_size=w, max_size=w))) for w in rows)
    return PermutationTableau(FerrersShape(rows), filling)


@settings(max_examples=300)
@given(fillings())
def test_round_trip_random_fillings(t):
    if validate(t):
        return
    assert reconstruct(to_alternative(t)) == t


def test_text_formats_round_trip(figure):
    text = figure("fig1_1.tab")
    t = parse_tableau(text)
    assert format_tableau(t) == text
    alt_text = figure("fig2_1.alt")
    assert format_alternative(parse_alternative(alt_text)) == alt_text


def test_text_format_bit_exact():
    t = PermutationTableau(FerrersShape((2, 1, 0)), ((1, 1), (0,), ()))
    assert format_tableau(t) == "5\n2,1,0\n11\n0\n-\n"
    empty = PermutationTableau(FerrersShape(()), ())
    assert parse_tableau(format_tableau(empty)) == empty


def test_parse_errors():
    with pytest.raises(TableauError):
        parse_tableau("4\n2\n11\n")
    with pytest.raises(StructureError):
        parse_tableau("3\n2\n1x\n")
    with pytest.raises(StructureError):
        parse_alternative("3\n2\nX 1 2\n")


def test_load_accepts_both_formats(figure):
    assert load(figure("fig2_1.tab")) == load(figure("fig2_1.alt"))
