"""Exhaustive checks of the tableau/permutation identities at small length.

Each check runs for every length ``0..n`` (clamped to the check's own
ceiling) and stops at the first counterexample it meets.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib.resources import files
from typing import Callable, Iterable

from .bijection import descent_column_check, format_permutation, xi
from .core import (
    FerrersShape,
    format_tableau,
    load,
    parse_alternative,
    parse_tableau,
    reconstruct,
    to_alternative,
    unrestricted_rows,
    validate,
)
from .enumeration import distribution, shapes_of_length, tableaux_of_shape
from .lbell import bell, is_lbell, structural_noinv_check
from .paths import PathOrder, all_paths, alternating_path, compare_paths, inversions, w_vector
from .patterns import count_occurrences, oracle_count, parse_pattern, reverse_complement

ORACLE_PATTERNS = ("32-1", "3-21", "31-2", "2-31", "1-32", "21-3")


@dataclass
class CheckResult:
    name: str
    n: int
    passed: bool
    detail: str = ""
    counterexample: str = ""

    def __post_init__(self) -> None:
        if not self.passed and not self.counterexample:
            self.counterexample = self.detail or "?"

    def tsv(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return "\t".join([self.name, str(self.n), status, self.detail, self.counterexample])


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_tsv(self) -> str:
        lines = ["check\tn\tstatus\tdetail\tcounterexample"]
        lines += [c.tsv() for c in self.checks]
        return "\n".join(lines) + "\n"


def _one_line(text: str) -> str:
    return text.strip().replace("\n", "|")


# -- per-tableau predicates ------------------------------------------------


def _theorem(t) -> bool:
    a = to_alternative(t)
    perm = xi(a, checked=True)
    k = len(inversions(a))
    return k == count_occurrences("3-21", perm) == count_occurrences("32-1", reverse_complement(perm))


def _equivalence(t) -> bool:
    a = to_alternative(t)
    zero = not inversions(a)
    return is_lbell(t) == zero == structural_noinv_check(a)


def _descent(t) -> bool:
    a = to_alternative(t)
    return descent_column_check(a, xi(a, checked=True))


def _subsequence(t) -> bool:
    a = to_alternative(t)
    pos = {v: q for q, v in enumerate(xi(a, checked=True))}
    for path in all_paths(a).values():
        spots = [pos[x] for x in path.labels]
        if spots != sorted(spots):
            return False
    return True


def _left_of(t) -> bool:
    a = to_alternative(t)
    pos = {v: q for q, v in enumerate(xi(a, checked=True))}
    paths = all_paths(a)
    for i, pi in paths.items():
        for j, pj in paths.items():
            if i == j:
                continue
            order = compare_paths(pi, pj)
            if (pos[i] < pos[j]) != (order in (PathOrder.LESS, PathOrder.P_CONTAINS_Q)):
                return False
    return True


def _roundtrip(t) -> bool:
    return reconstruct(to_alternative(t)) == t


def _path_shape(t) -> bool:
    a = to_alternative(t)
    n_dots = len(a.dot_labels())
    unrestricted = set(a.unrestricted_rows())
    for path in all_paths(a).values():
        if len(path) > n_dots or len(set(path.labels)) != len(path):
            return False
        if path.end_cell[0] not in unrestricted or path.end_cell[1] not in a.labels.col_index:
            return False
    return True


PREDICATES: dict[str, Callable] = {
    "theorem": _theorem,
    "equivalence": _equivalence,
    "descent": _descent,
    "subsequence": _subsequence,
    "leftof": _left_of,
    "roundtrip": _roundtrip,
    "paths": _path_shape,
}

# largest length each check runs at
CEILINGS = {
    "count": 8,
    "theorem": 7,
    "distribution": 7,
    "bell": 8,
    "equivalence": 7,
    "descent": 7,
    "subsequence": 6,
    "leftof": 6,
    "roundtrip": 7,
    "unique": 6,
    "bijective": 7,
    "paths": 7,
    "golden": 0,
    "oracle": 0,
}

CHECK_NAMES = tuple(CEILINGS)


def _scan_shape(args: tuple[str, tuple[int, ...]]) -> tuple[int, str]:
    name, rows = args
    pred = PREDICATES[name]
    seen = 0
    for t in tableaux_of_shape(FerrersShape(rows)):
        seen += 1
        if not pred(t):
            return seen, _one_line(format_tableau(t))
    return seen, ""


def _map(fn, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _per_tableau(name: str, n: int, jobs: int) -> CheckResult:
    work = [(name, s.row_lengths) for m in range(n + 1) for s in shapes_of_length(m)]
    seen = 0
    for count, bad in _map(_scan_shape, work, jobs):
        seen += count
        if bad:
            return CheckResult(name, n, False, f"{seen} tableaux checked", bad)
    return CheckResult(name, n, True, f"{seen} tableaux")


def _count_shape(rows: tuple[int, ...]) -> tuple[int, int, int]:
    total = inv_zero = lbell_count = 0
    for t in tableaux_of_shape(FerrersShape(rows)):
        total += 1
        if not inversions(to_alternative(t)):
            inv_zero += 1
        if is_lbell(t):
            lbell_count += 1
    return total, inv_zero, lbell_count


def _size_of_shape(rows: tuple[int, ...]) -> int:
    return sum(1 for _ in tableaux_of_shape(FerrersShape(rows)))


def check_count(n: int, jobs: int = 1) -> CheckResult:
    for m in range(n + 1):
        total = sum(_map(_size_of_shape, [s.row_lengths for s in shapes_of_length(m)], jobs))
        if total != math.factorial(m):
            return CheckResult("count", n, False, f"n={m}: {total} vs {math.factorial(m)}", f"n={m}")
    return CheckResult("count", n, True, f"n!={math.factorial(n)}")


def check_bell(n: int, jobs: int = 1) -> CheckResult:
    bells = bell(n)
    p = parse_pattern("32-1")
    detail = ""
    for m in range(n + 1):
        totals = _map(_count_shape, [s.row_lengths for s in shapes_of_length(m)], jobs)
        inv_zero = sum(x[1] for x in totals)
        lbell_count = sum(x[2] for x in totals)
        avoiders = sum(
            1 for perm in itertools.permutations(range(1, m + 1)) if count_occurrences(p, perm) == 0
        )
        detail = f"{inv_zero}/{lbell_count}/{avoiders} vs B_{m}={bells[m]}"
        if not inv_zero == lbell_count == avoiders == bells[m]:
            return CheckResult("bell", n, False, detail, f"n={m}")
    return CheckResult("bell", n, True, detail)


def check_distribution(n: int, jobs: int = 1) -> CheckResult:
    for m in range(n + 1):
        left = distribution(m, "inv", jobs=jobs)
        right = distribution(m, "pattern:32-1")
        if left != right:
            return CheckResult("distribution", n, False, f"n={m}: {left.histogram} vs {right.histogram}", f"n={m}")
    return CheckResult("distribution", n, True, str(left.histogram))


def check_unique(n: int, jobs: int = 1) -> CheckResult:
    for m in range(n + 1):
        seen: dict = {}
        for s in shapes_of_length(m):
            for t in tableaux_of_shape(s):
                a = to_alternative(t)
                if a in seen:
                    return CheckResult("unique", n, False, f"n={m}", _one_line(format_tableau(t)))
                seen[a] = t
    return CheckResult("unique", n, True, "alternative representations distinct")


def check_bijective(n: int, jobs: int = 1) -> CheckResult:
    for m in range(n + 1):
        images = set()
        for s in shapes_of_length(m):
            for t in tableaux_of_shape(s):
                perm = xi(to_alternative(t), checked=True)
                if perm in images:
                    return CheckResult("bijective", n, False, f"n={m}: repeated image", format_permutation(perm))
                images.add(perm)
        if len(images) != math.factorial(m):
            return CheckResult("bijective", n, False, f"n={m}: {len(images)} images", f"n={m}")
    return CheckResult("bijective", n, True, f"{math.factorial(n)} images")


def _figure(name: str) -> str:
    return (files("permtab") / "data" / name).read_text()


def golden_values() -> dict[str, object]:
    """Values read off the checked-in figure files."""
    fig11 = parse_tableau(_figure("fig1_1.tab"))
    fig21 = parse_tableau(_figure("fig2_1.tab"))
    fig21_alt = parse_alternative(_figure("fig2_1.alt"))
    left = load(_figure("fig2_2_left.alt"))
    right = load(_figure("fig2_2_right.alt"))
    a11 = to_alternative(fig11)
    return {
        "fig1_1.valid": not validate(fig11),
        "fig1_1.white_dots": sorted(a11.white_dots),
        "fig1_1.unrestricted_rows": unrestricted_rows(fig11),
        "fig2_1.alt_matches": to_alternative(fig21) == fig21_alt and reconstruct(fig21_alt) == fig21,
        "fig2_1.path6": alternating_path(fig21_alt, 6).labels,
        "fig2_1.path7": alternating_path(fig21_alt, 7).labels,
        "fig2_2_left.w": w_vector(left),
        "fig2_2_left.inv": len(inversions(left)),
        "fig2_2_right.w": w_vector(right),
        "fig2_2_right.inv": len(inversions(right)),
    }


GOLDEN_EXPECTED: dict[str, object] = {
    "fig1_1.valid": True,
    "fig1_1.white_dots": [(5, 9), (8, 10)],
    "fig1_1.unrestricted_rows": [1, 2, 7, 11],
    "fig2_1.alt_matches": True,
    "fig2_1.path6": (6, 5, 12),
    "fig2_1.path7": (7, 10, 4, 11),
    "fig2_2_left.w": {2: 1, 3: 0},
    "fig2_2_left.inv": 1,
    "fig2_2_right.w": {3: 2, 5: 0},
    "fig2_2_right.inv": 2,
}


def check_golden(n: int = 0, jobs: int = 1) -> CheckResult:
    got = golden_values()
    wrong = [k for k, v in GOLDEN_EXPECTED.items() if got[k] != v]
    if wrong:
        return CheckResult("golden", 0, False, ", ".join(wrong), "; ".join(f"{k}={got[k]}" for k in wrong))
    return CheckResult("golden", 0, True, f"{len(got)} figure values")


def random_permutations(seed: int, count: int = 1000, max_n: int = 10) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        perm = list(range(1, rng.randint(1, max_n) + 1))
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out


def check_oracle(n: int = 0, jobs: int = 1, seed: int = 0) -> CheckResult:
    perms = random_permutations(seed)
    patterns = [parse_pattern(p) for p in ORACLE_PATTERNS]
    for perm in perms:
        for p in patterns:
            if count_occurrences(p, perm) != oracle_count(p, perm):
                return CheckResult("oracle", 0, False, str(p), format_permutation(perm))
    return CheckResult("oracle", 0, True, f"{len(perms)} permutations x {len(patterns)} patterns, seed {seed}")


AGGREGATE = {
    "count": check_count,
    "bell": check_bell,
    "distribution": check_distribution,
    "unique": check_unique,
    "bijective": check_bijective,
    "golden": check_golden,
}


def run_check(name: str, n: int, jobs: int = 1, seed: int = 0) -> CheckResult:
    if name not in CEILINGS:
        raise KeyError(name)
    scope = min(n, CEILINGS[name])
    if name == "oracle":
        return check_oracle(seed=seed)
    if name in AGGREGATE:
        return AGGREGATE[name](scope, jobs)
    return _per_tableau(name, scope, jobs)


def run_checks(n: int, names: Iterable[str] = ("all",), jobs: int = 1, seed: int = 0) -> VerificationReport:
    """Run the named checks (``"all"`` expands to every check) up to length ``n``."""
    if n < 0 or n > 8:
        raise ValueError("verify supports 0 <= n <= 8")
    selected: list[str] = []
    for name in names:
        expanded = CHECK_NAMES if name == "all" else (name,)
        for x in expanded:
            if x not in CEILINGS:
                raise KeyError(f"unknown check {x!r}; choose from {', '.join(CHECK_NAMES)} or all")
            if x not in selected:
                selected.append(x)
    start = time.perf_counter()
    report = VerificationReport([run_check(x, n, jobs, seed) for x in selected])
    report.elapsed = time.perf_counter() - start
    return report
