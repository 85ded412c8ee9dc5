"""Cross-checks between search, morphic and closed-form tables."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, TextIO

import numpy as np

from . import formulas
from .solver import PTable
from .words import catalog, erase_letters, fixed_point, table_from_morphism, word_table

__all__ = [
    "Residual",
    "Eq1Report",
    "ScanResult",
    "check_equivalence",
    "check_eq1",
    "eq1_report",
    "closed_form_table",
    "queen_bee_residuals",
    "scan_queen_bee_residuals",
    "check_lemma3",
    "is_good_triple",
    "check_good_triples",
    "check_relation",
    "check_complementary",
    "RELATIONS",
    "spaced_power_sum",
    "write_residual_csv",
    "tribonacci_tables",
]


class Residual(NamedTuple):
    n: int
    r: int


def check_equivalence(t1: PTable, t2: PTable, count: int) -> int | None:
    """1-based index of the first differing pair, or None if the prefixes agree."""
    if len(t1) < count or len(t2) < count:
        raise ValueError(f"tables have {len(t1)} and {len(t2)} pairs, {count} requested")
    for n in range(1, count + 1):
        if t1[n] != t2[n]:
            return n
    return None


@dataclass
class Eq1Report:
    residuals: list[Residual]
    violations: list[Residual] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    @property
    def max_abs(self) -> int:
        return max((abs(r.r) for r in self.residuals), default=0)


def check_eq1(table: PTable, a_lookup: PTable | Callable[[int], int], n_max: int) -> Eq1Report:
    """Residuals r_n = a_{b_n} - a_n - b_n for n <= n_max; the identity
    a_{b_n} in {a_n + b_n, a_n + b_n - 1} fails wherever r is not 0 or -1."""
    lookup = a_lookup.a if isinstance(a_lookup, PTable) else a_lookup
    residuals = []
    for n in range(1, n_max + 1):
        a, b = table[n]
        try:
            r = lookup(b) - a - b
        except IndexError as exc:
            raise IndexError(f"a-lookup does not reach index b_{n} = {b}") from exc
        residuals.append(Residual(n, r))
    return Eq1Report(residuals, [x for x in residuals if x.r not in (0, -1)])


def closed_form_table(name: str, count: int) -> PTable:
    """Tables produced without search, keyed by game name."""
    key = name.lower()
    if key == "queen-bee":
        return formulas.queen_bee_pairs(count)
    if key == "2-queen-dee":
        return formulas.two_queen_dee_pairs(count)
    if key == "queen-dee":
        return formulas.queen_dee_pairs(count)
    if key in ("standard", "wythoff"):
        return formulas.holladay_pairs(1, count)
    if key in ("two-one", "widened:2,1"):
        return formulas.fraenkel_pairs(2, 2, count)
    kind, _, raw = key.partition(":")
    params = [int(p) for p in raw.split(",")] if raw else []
    if kind in ("holladay", "k-queen") and len(params) == 1:
        return formulas.holladay_pairs(params[0], count)
    if kind == "fraenkel" and len(params) == 2:
        return formulas.fraenkel_pairs(params[0], params[1], count)
    if kind == "restricted" and len(params) == 2:
        return formulas.restricted_pairs(params[0], params[1], count)
    raise ValueError(f"no closed form for {name!r}")


def eq1_report(name: str, n_max: int) -> Eq1Report:
    """Run the residual check for a closed-form game on n <= n_max.

    The a-lookup must reach index b_{n_max}, so a second, longer table is
    generated from the same source.
    """
    table = closed_form_table(name, n_max)
    longer = closed_form_table(name, max(table.b_values))
    return check_eq1(table, longer, n_max)


def queen_bee_residuals(n_max: int) -> np.ndarray:
    """Residuals for n = 1..n_max, using b_n = 2 a_n and the vile numbers."""
    a = formulas.vile_numbers(n_max)
    longer = formulas.vile_numbers(int(2 * a[-1]))
    return longer[2 * a - 1] - 3 * a


@dataclass
class ScanResult:
    residuals: np.ndarray
    first_by_value: dict[int, int]
    first_by_magnitude: dict[int, int]


def scan_queen_bee_residuals(n_max: int) -> ScanResult:
    """First index at which each residual value (and each |r|) occurs."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    r = queen_bee_residuals(n_max)
    values, first = np.unique(r, return_index=True)
    by_value = {int(v): int(i) + 1 for v, i in zip(values, first)}
    mags, first_m = np.unique(np.abs(r), return_index=True)
    by_mag = {int(v): int(i) + 1 for v, i in zip(mags, first_m)}
    return ScanResult(r, by_value, by_mag)


def write_residual_csv(stream: TextIO, residuals) -> None:
    """Write ``n,r`` rows, n counted from 1, LF line endings."""
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["n", "r"])
    for n, r in enumerate(residuals, 1):
        w.writerow([n, int(r)])


def check_lemma3(count: int, queen_dee: PTable | None = None, two_queen_dee: PTable | None = None) -> bool:
    """Check a_n = beta_n - alpha_n, b_n = beta_n + alpha_n, b_n - a_n = 2 alpha_n
    and b_n + a_n = 2 beta_n.

    By default the 2-Queen Dee table comes from the mex construction and the
    Queen Dee table from the Tribonacci word with all c's deleted, so the two
    sides are produced independently.
    """
    if two_queen_dee is None:
        two_queen_dee = formulas.two_queen_dee_pairs(count)
    if queen_dee is None:
        queen_dee = table_from_morphism(catalog("tribonacci"), count, "a", "b", erase="c")
    for n in range(1, count + 1):
        al, be = queen_dee[n]
        a, b = two_queen_dee[n]
        if not (a == be - al and b == be + al and b - a == 2 * al and b + a == 2 * be):
            return False
    return True


def _blocked(table: PTable, n: int, size: int) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates and differences ruled out by pairs 0..n-1, as masks over 0..size."""
    coord = np.zeros(size + 1, dtype=bool)
    diff = np.zeros(size + 1, dtype=bool)
    for k in range(n):
        a, b = table[k]
        for c in (a, b):
            if c <= size:
                coord[c] = True
        for e in (b - a, b + a):
            diff[max(0, e - 1) : min(size, e + 1) + 1] = True
    return coord, diff


def is_good_triple(table: PTable, n: int, x: int, y: int) -> bool:
    """(x, y) with x < y avoids every row, column and (anti-)diagonal band of
    the pairs k < n, the origin included."""
    if not x < y:
        return False
    for k in range(n):
        a, b = table[k]
        if x in (a, b) or y in (a, b):
            return False
        if abs((y - x) - (b - a)) <= 1 or abs((y - x) - (b + a)) <= 1:
            return False
    return True


def check_good_triples(count: int, table: PTable | None = None) -> bool:
    """For n <= count: (n, a_n, b_n) is good, no good (n, x, y) has x < a_n,
    and no good (n, a_n, y) has y < b_n."""
    if table is None:
        table = formulas.two_queen_dee_pairs(count)
    for n in range(1, count + 1):
        an, bn = table[n]
        coord, diff = _blocked(table, n, bn)
        xs = np.arange(an + 1)[:, None]
        ys = np.arange(bn + 1)[None, :]
        good = (xs < ys) & ~coord[xs] & ~coord[ys] & ~diff[np.clip(ys - xs, 0, bn)]
        if not good[an, bn]:
            return False
        if good[:an, :].any():
            return False
        if good[an, :bn].any():
            return False
    return True


RELATIONS = {
    "b=2a": lambda n, a, b, k, j: b == 2 * a,
    "b=a+kn": lambda n, a, b, k, j: b == a + k * n,
    "b=2a+n": lambda n, a, b, k, j: b == 2 * a + n,
    "b=a+kn-j": lambda n, a, b, k, j: b == a + k * n - j,
}


def check_relation(table: PTable, relation: str, count: int, k: int = 1, j: int = 0) -> bool:
    try:
        rel = RELATIONS[relation.replace(" ", "").replace("*", "").replace("·", "")]
    except KeyError:
        raise ValueError(f"unknown relation {relation!r}; choose from {sorted(RELATIONS)}") from None
    return all(rel(n, a, b, k, j) for n, (a, b) in enumerate(table.pairs[:count], 1))


def check_complementary(table: PTable, count: int) -> bool:
    """No value repeats among a_1..a_count, b_1..b_count, and every positive
    integer up to a_count occurs."""
    values = table.a_values[:count] + table.b_values[:count]
    seen = set(values)
    if len(seen) != len(values):
        return False
    top = table.a(count)
    return all(i in seen for i in range(1, top + 1))


def spaced_power_sum(terms: int, gap: int = 10, first: int = 1) -> int:
    """4^e1 + ... + 4^ek with exponents first, first + gap, ... ."""
    return sum(4 ** (first + i * gap) for i in range(terms))


def tribonacci_tables(count: int) -> dict[str, PTable]:
    """The three tables coded by the Tribonacci word with one letter erased."""
    length = 4 * count + 64
    while True:
        t = fixed_point(catalog("tribonacci"), "a", length)
        try:
            return {
                "erase-a": word_table(erase_letters(t, "a"), "b", "c", count),
                "erase-b": word_table(erase_letters(t, "b"), "a", "c", count),
                "erase-c": word_table(erase_letters(t, "c"), "a", "b", count),
            }
        except ValueError:
            length *= 2
