"""Exact retrograde P/N classification by increasing Manhattan level.

Every move strictly lowers x + y, so once all levels below L are settled a
position on level L is P exactly when none of the already known P-positions
is a legal target. Positions on one level cannot reach each other, which is
why newly found P-positions are only published after the level is done.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .game import (
    KQueen,
    KQueenDee,
    Position,
    QueenBee,
    QueenVariant,
    RestrictedStroll,
    Standard,
    WidenedQueen,
    legal_moves,
)

__all__ = [
    "CapacityError",
    "Outcome",
    "PTable",
    "ClassifiedRegion",
    "classify_region",
    "p_positions",
    "iter_p_positions",
]

DEFAULT_MAX_LEVEL = 200_000
DEFAULT_REGION_LIMIT = 500_000


class CapacityError(RuntimeError):
    """The requested computation exceeds the configured resource bound."""


class Outcome(str, enum.Enum):
    P = "P"
    N = "N"


@dataclass(frozen=True)
class PTable:
    """P-positions (a_n, b_n), n >= 1, with a_n <= b_n and a_n increasing.

    The origin is the implicit pair n = 0 and is never stored.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        prev = 0
        for n, (a, b) in enumerate(pairs, 1):
            if a > b:
                raise ValueError(f"pair {n} = {(a, b)} has a > b")
            if a <= prev:
                raise ValueError(f"a-values not strictly increasing at n = {n}")
            prev = a

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __getitem__(self, n: int) -> tuple[int, int]:
        """Pair number ``n`` (1-based); ``table[0]`` is the origin."""
        if n == 0:
            return (0, 0)
        if n < 0 or n > len(self.pairs):
            raise IndexError(f"pair index {n} outside 0..{len(self.pairs)}")
        return self.pairs[n - 1]

    def a(self, n: int) -> int:
        return self[n][0]

    def b(self, n: int) -> int:
        return self[n][1]

    @property
    def a_values(self) -> list[int]:
        return [a for a, _ in self.pairs]

    @property
    def b_values(self) -> list[int]:
        return [b for _, b in self.pairs]

    def prefix(self, count: int) -> "PTable":
        if count > len(self.pairs):
            raise ValueError(f"table has {len(self.pairs)} pairs, {count} requested")
        return PTable(self.pairs[:count])

    def rows(self) -> list[tuple[int, int, int]]:
        return [(n, a, b) for n, (a, b) in enumerate(self.pairs, 1)]


@dataclass
class ClassifiedRegion:
    max_level: int
    status: dict[Position, Outcome] = field(repr=False)

    def __getitem__(self, p) -> Outcome:
        return self.status[Position(*p)]

    def p_set(self) -> set[Position]:
        return {p for p, o in self.status.items() if o is Outcome.P}


def classify_region(
    variant: QueenVariant, max_level: int, limit: int = DEFAULT_REGION_LIMIT
) -> ClassifiedRegion:
    """Classify every square with x + y <= max_level by enumerating its moves.

    This is the textbook retrograde sweep; it is cubic in ``max_level`` and
    is meant for small regions and as a reference for the faster paths.
    """
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    size = (max_level + 1) * (max_level + 2) // 2
    if size > limit:
        raise CapacityError(f"region of {size} squares exceeds limit {limit}")
    status: dict[Position, Outcome] = {}
    p_set: set[Position] = set()
    for level in range(max_level + 1):
        found = []
        for x in range(level + 1):
            p = Position(x, level - x)
            if any(q in p_set for q in legal_moves(variant, p)):
                status[p] = Outcome.N
            else:
                status[p] = Outcome.P
                found.append(p)
        p_set.update(found)
    return ClassifiedRegion(max_level, status)


class _SlowLevels:
    """Tests each square of a level against every known P-position with the
    variant's legality predicate."""

    def __init__(self, variant: QueenVariant):
        self.variant = variant
        self.pu = np.zeros(1, dtype=np.int64)
        self.pv = np.zeros(1, dtype=np.int64)

    def level(self, level: int) -> list[tuple[int, int]]:
        xs = np.arange(level // 2 + 1, dtype=np.int64)[:, None]
        ys = level - xs
        hit = self.variant.reaches(xs, ys, self.pu[None, :], self.pv[None, :])
        free = np.flatnonzero(~np.asarray(hit).any(axis=1))
        return [(int(x), level - int(x)) for x in free]

    def publish(self, found: list[tuple[int, int]]) -> None:
        us = [c for a, b in found for c in (a, b)]
        vs = [c for a, b in found for c in (b, a)]
        self.pu = np.concatenate([self.pu, np.array(us, dtype=np.int64)])
        self.pv = np.concatenate([self.pv, np.array(vs, dtype=np.int64)])


class _LineIndex:
    """Occupancy of known P-positions along rows, columns, diagonals and
    anti-diagonals.

    Every catalog variant has row and column moves, so each coordinate value
    belongs to at most one P-position and ``partner`` is well defined.
    """

    def __init__(self, variant: QueenVariant):
        self.variant = variant
        self.partner = {0: 0}
        self.diag = {0: 0}  # signed difference v - u -> u
        self.sums = {0}
        self.cursor = 1  # every value below is a used coordinate
        self.pu = np.zeros(1, dtype=np.int64)
        self.pv = np.zeros(1, dtype=np.int64)
        self.check = _FAST_CHECKS[type(variant)]

    def level(self, level: int) -> list[tuple[int, int]]:
        partner = self.partner
        candidates = [
            x
            for x in range(self.cursor, level // 2 + 1)
            if x not in partner and level - x not in partner
        ]
        if self.check is None:
            return self._batch(level, candidates)
        return [(x, level - x) for x in candidates if not self.check(self, x, level - x)]

    def _batch(self, level: int, candidates: list[int]) -> list[tuple[int, int]]:
        # widened moves cover a wedge, not a line; test the level in one sweep
        if not candidates:
            return []
        xs = np.array(candidates, dtype=np.int64)[:, None]
        hit = self.variant.reaches(xs, level - xs, self.pu[None, :], self.pv[None, :])
        return [(x, level - x) for x, h in zip(candidates, hit.any(axis=1)) if not h]

    def publish(self, found: list[tuple[int, int]]) -> None:
        for a, b in found:
            self.partner[a] = b
            self.partner[b] = a
            self.diag[b - a] = a
            self.diag[a - b] = b
            self.sums.add(a + b)
        while self.cursor in self.partner:
            self.cursor += 1
        if isinstance(self.variant, WidenedQueen) and found:
            us = [c for a, b in found for c in (a, b)]
            vs = [c for a, b in found for c in (b, a)]
            self.pu = np.concatenate([self.pu, np.array(us, dtype=np.int64)])
            self.pv = np.concatenate([self.pv, np.array(vs, dtype=np.int64)])

    # each check assumes row and column moves were already ruled out

    def diagonal_below(self, x: int, y: int) -> bool:
        u = self.diag.get(y - x)
        return u is not None and u < x

    def stroll_band(self, x: int, y: int, k: int, skip_band: int = -1) -> bool:
        base = y - x
        for d in range(base - k + 1, base + k):
            if abs(d) <= skip_band:
                continue
            u = self.diag.get(d)
            if u is not None and u <= x and u + d <= y and (u, u + d) != (x, y):
                return True
        return False


def _fast_standard(idx: _LineIndex, x, y):
    return idx.diagonal_below(x, y)


def _fast_kqueen(idx: _LineIndex, x, y):
    return idx.stroll_band(x, y, idx.variant.k)


def _fast_queen_bee(idx: _LineIndex, x, y):
    if idx.diagonal_below(x, y):
        return True
    if x == y:
        return False
    c = idx.partner.get(y - x)
    return c is not None and 1 <= c <= 2 * x - 1


def _fast_dee(idx: _LineIndex, x, y):
    k = idx.variant.k
    for s in range(min(k, x + 1)):
        for t in range(min(k - s, y + 1)):
            xs, ys = x - s, y - t
            if idx.diagonal_below(xs, ys):
                return True
            if xs >= 1 and ys >= 1 and xs != ys and abs(ys - xs) in idx.sums:
                return True
    return False


def _fast_restricted(idx: _LineIndex, x, y):
    v = idx.variant
    skip = v.band if abs(x - y) > v.band else -1
    return idx.stroll_band(x, y, v.k, skip_band=skip)


_FAST_CHECKS = {
    Standard: _fast_standard,
    KQueen: _fast_kqueen,
    QueenBee: _fast_queen_bee,
    KQueenDee: _fast_dee,
    WidenedQueen: None,
    RestrictedStroll: _fast_restricted,
}


def iter_p_positions(
    variant: QueenVariant, fast: bool = True, max_level: int = DEFAULT_MAX_LEVEL
) -> Iterator[list[tuple[int, int]]]:
    """Yield, level by level, the P-positions (a, b) with 0 < a <= b."""
    engine = _LineIndex(variant) if fast else _SlowLevels(variant)
    for level in range(1, max_level + 1):
        found = engine.level(level)
        engine.publish(found)
        yield found
    raise CapacityError(f"no further P-positions below level {max_level}")


def p_positions(
    variant: QueenVariant,
    count: int,
    fast: bool = True,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> PTable:
    """The first ``count`` P-positions with a <= b, ordered by a.

    Levels are streamed until ``count`` pairs are known; the level holding
    the last one is always finished. For the catalog games b_n increases
    with n, so Manhattan order and a-order coincide.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    pairs: list[tuple[int, int]] = []
    for found in iter_p_positions(variant, fast=fast, max_level=max_level):
        pairs.extend(found)
        if len(pairs) >= count:
            break
    pairs.sort()
    return PTable(tuple(pairs[:count]))
