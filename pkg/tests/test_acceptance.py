"""Exit criteria. Each test carries a ``criterion`` marker; the conftest hook
prints one PASS/FAIL line per criterion at the end of the run."""

import itertools
import math
import time
from collections import Counter

import pytest

from permtab import (
    alternating_path,
    bell,
    count_occurrences,
    descent_column_check,
    format_tableau,
    inversions,
    is_lbell,
    oracle_count,
    parse_alternative,
    parse_tableau,
    reconstruct,
    reverse_complement,
    structural_noinv_check,
    tableaux_of_length,
    to_alternative,
    unrestricted_rows,
    w_vector,
    xi,
)
from permtab.core import load
from permtab.paths import PathOrder, all_paths, compare_paths
from permtab.verify import ORACLE_PATTERNS, random_permutations

from conftest import all_tableaux


@pytest.mark.criterion("1 count identity n<=8")
def test_count_identity():
    start = time.perf_counter()
    for n in range(9):
        assert sum(1 for _ in tableaux_of_length(n)) == math.factorial(n)
    assert time.perf_counter() - start <= 60


@pytest.mark.criterion("2 inv = f_3-21(xi) = f_32-1(rc xi), n<=7")
def test_main_theorem():
    start = time.perf_counter()
    checked = 0
    for n in range(8):
        for t in tableaux_of_length(n):
            a = to_alternative(t)
            perm = xi(a, checked=True)
            k = len(inversions(a))
            assert k == count_occurrences("3-21", perm), format_tableau(t)
            assert k == count_occurrences("32-1", reverse_complement(perm)), format_tableau(t)
            checked += 1
    assert checked == sum(math.factorial(n) for n in range(8))
    assert time.perf_counter() - start <= 30


@pytest.mark.criterion("3 inv histogram = f_32-1 histogram, n<=7")
def test_distribution_identity():
    for n in range(8):
        tableau_side = Counter(len(inversions(to_alternative(t))) for t in all_tableaux(n))
        perm_side = Counter(count_occurrences("32-1", p) for p in itertools.permutations(range(1, n + 1)))
        assert tableau_side == perm_side


@pytest.mark.criterion("4 Bell counts n<=8")
def test_bell_counts():
    bells = bell(8)
    assert bells[8] == 4140
    for n in range(9):
        inv_zero = lbell = 0
        for t in tableaux_of_length(n):
            inv_zero += not inversions(to_alternative(t))
            lbell += is_lbell(t)
        avoiders = sum(1 for p in itertools.permutations(range(1, n + 1)) if count_occurrences("32-1", p) == 0)
        assert inv_zero == lbell == avoiders == bells[n]


@pytest.mark.criterion("5 lbell <=> inv=0 <=> structural, n<=7")
def test_equivalence_theorem():
    for n in range(8):
        for t in all_tableaux(n):
            a = to_alternative(t)
            zero = not inversions(a)
            assert is_lbell(t) == zero == structural_noinv_check(a)


@pytest.mark.criterion("6 golden figures")
def test_golden_figures(figure):
    fig11 = parse_tableau(figure("fig1_1.tab"))
    assert sorted(to_alternative(fig11).white_dots) == [(5, 9), (8, 10)]
    assert unrestricted_rows(fig11) == [1, 2, 7, 11]

    fig21 = parse_alternative(figure("fig2_1.alt"))
    assert reconstruct(fig21) == parse_tableau(figure("fig2_1.tab"))
    assert alternating_path(fig21, 6).labels == (6, 5, 12)
    assert alternating_path(fig21, 7).labels == (7, 10, 4, 11)

    left = load(figure("fig2_2_left.alt"))
    assert w_vector(left)[2] == 1 and len(inversions(left)) == 1
    right = load(figure("fig2_2_right.alt"))
    assert w_vector(right)[3] == 2 and w_vector(right)[5] == 0 and len(inversions(right)) == 2


@pytest.mark.criterion("7 lemma suites")
def test_lemmas():
    for n in range(8):
        for t in all_tableaux(n):
            assert descent_column_check(to_alternative(t))
    for n in range(7):
        for t in all_tableaux(n):
            a = to_alternative(t)
            perm = xi(a, checked=True)
            pos = {v: q for q, v in enumerate(perm)}
            paths = all_paths(a)
            for p in paths.values():
                spots = [pos[x] for x in p.labels]
                assert spots == sorted(spots)
            for i, pi in paths.items():
                for j, pj in paths.items():
                    if i != j:
                        order = compare_paths(pi, pj)
                        assert (pos[i] < pos[j]) == (order in (PathOrder.LESS, PathOrder.P_CONTAINS_Q))


@pytest.mark.criterion("8 count_occurrences = oracle_count, 1000 perms")
def test_oracle_equivalence():
    perms = random_permutations(seed=0, count=1000, max_n=10)
    assert len(perms) == 1000 and max(map(len, perms)) <= 10
    assert set(ORACLE_PATTERNS) == {"32-1", "3-21", "31-2", "2-31", "1-32", "21-3"}
    for perm in perms:
        for p in ORACLE_PATTERNS:
            assert count_occurrences(p, perm) == oracle_count(p, perm)


@pytest.mark.criterion("9 round trip n<=7, uniqueness n<=6")
def test_round_trip():
    for n in range(8):
        for t in all_tableaux(n):
            assert reconstruct(to_alternative(t)) == t
    for n in range(7):
        reps = [to_alternative(t) for t in all_tableaux(n)]
        assert len(set(reps)) == len(reps)
