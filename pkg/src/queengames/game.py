"""Positions and move rules for the Queen variants.

Every variant provides two independent views of its move rule:

* ``moves(x, y)`` enumerates the target squares segment by segment, and
* ``reaches(x, y, u, v)`` is a closed-form legality predicate written with
  plain operators only, so it evaluates on Python ints and on broadcast
  numpy arrays alike.

The solver uses the predicate in bulk; the test suite checks that the two
views agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "Position",
    "ParameterError",
    "QueenVariant",
    "Standard",
    "KQueen",
    "QueenBee",
    "KQueenDee",
    "WidenedQueen",
    "RestrictedStroll",
    "legal_moves",
    "is_legal_move",
    "parse_variant",
    "variant_name",
]


class Position(NamedTuple):
    x: int
    y: int

    @property
    def manhattan(self) -> int:
        return self.x + self.y

    def swap(self) -> "Position":
        return Position(self.y, self.x)


class ParameterError(ValueError):
    """Invalid variant parameters."""


def _row_col(x, y, u, v):
    return ((u == x) & (v < y)) | ((v == y) & (u < x))


def _diagonal(x, y, u, v):
    return (x - u == y - v) & (u < x)


def _row_col_moves(x: int, y: int) -> set[tuple[int, int]]:
    out = {(u, y) for u in range(x)}
    out.update((x, v) for v in range(y))
    return out


def _diagonal_moves(x: int, y: int) -> set[tuple[int, int]]:
    return {(x - t, y - t) for t in range(1, min(x, y) + 1)}


class QueenVariant:
    """Base class; concrete variants are frozen dataclasses."""

    def moves(self, x: int, y: int) -> set[tuple[int, int]]:
        raise NotImplementedError

    def reaches(self, x, y, u, v):
        raise NotImplementedError


@dataclass(frozen=True)
class Standard(QueenVariant):
    def moves(self, x, y):
        return _row_col_moves(x, y) | _diagonal_moves(x, y)

    def reaches(self, x, y, u, v):
        return _row_col(x, y, u, v) | _diagonal(x, y, u, v)


@dataclass(frozen=True)
class KQueen(QueenVariant):
    """Holladay's Queen: remove s and t from the coordinates with |s - t| < k."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError(f"k-Queen needs k >= 1, got {self.k}")

    def moves(self, x, y):
        out = _row_col_moves(x, y)
        for s in range(x + 1):
            for t in range(max(0, s - self.k + 1), min(y, s + self.k - 1) + 1):
                if s or t:
                    out.add((x - s, y - t))
        return out

    def reaches(self, x, y, u, v):
        s = x - u
        t = y - v
        return (
            (s >= 0)
            & (t >= 0)
            & (s + t > 0)
            & ((s == 0) | (t == 0) | (abs(s - t) <= self.k - 1))
        )


@dataclass(frozen=True)
class QueenBee(QueenVariant):
    """Standard Queen that may bounce perpendicularly off the wall it hits."""

    def moves(self, x, y):
        out = _row_col_moves(x, y) | _diagonal_moves(x, y)
        # the bounce must still lower x + y, hence the 2x - 1 cap
        if x < y:
            out.update((u, y - x) for u in range(1, 2 * x))
        elif y < x:
            out.update((x - y, v) for v in range(1, 2 * y))
        return out

    def reaches(self, x, y, u, v):
        bounce_left = (x < y) & (v == y - x) & (u >= 1) & (u <= 2 * x - 1)
        bounce_down = (y < x) & (u == x - y) & (v >= 1) & (v <= 2 * y - 1)
        return _row_col(x, y, u, v) | _diagonal(x, y, u, v) | bounce_left | bounce_down


def _dee_moves(x: int, y: int) -> set[tuple[int, int]]:
    out = _diagonal_moves(x, y)
    if 1 <= x < y:
        d = y - x
        out.update((u, d - u) for u in range(d + 1))
    elif 1 <= y < x:
        d = x - y
        out.update((d - v, v) for v in range(d + 1))
    return out


def _dee_reaches(x, y, u, v):
    reflect_left = (x >= 1) & (x < y) & (u + v == y - x)
    reflect_down = (y >= 1) & (y < x) & (u + v == x - y)
    return _diagonal(x, y, u, v) | reflect_left | reflect_down


@dataclass(frozen=True)
class KQueenDee(QueenVariant):
    """k-Queen whose diagonal path may reflect once onto the anti-diagonal.

    The Queen first steps s left and t down with s + t < k, then moves
    diagonally, possibly reflecting off the wall. ``KQueenDee(1)`` is the
    Queen Dee and ``KQueenDee(2)`` the 2-Queen Dee.
    """

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError(f"k-Queen Dee needs k >= 1, got {self.k}")

    def _offsets(self):
        return [(s, t) for s in range(self.k) for t in range(self.k - s)]

    def moves(self, x, y):
        out = _row_col_moves(x, y)
        for s, t in self._offsets():
            if s > x or t > y:
                continue
            out.update(q for q in _dee_moves(x - s, y - t) if q[0] + q[1] < x + y)
        return out

    def reaches(self, x, y, u, v):
        hit = _row_col(x, y, u, v)
        below = u + v < x + y
        for s, t in self._offsets():
            xs = x - s
            ys = y - t
            hit = hit | ((xs >= 0) & (ys >= 0) & below & _dee_reaches(xs, ys, u, v))
        return hit


@dataclass(frozen=True)
class WidenedQueen(QueenVariant):
    """Queen with widened diagonal scope j and stroll m.

    Diagonal vectors (dx, dy) satisfy dx - (m - 1) <= dy <= j*dx + (m - 1),
    or the mirror. ``WidenedQueen(2, 1)`` is Fraenkel's (2,1)-Wythoff and
    ``WidenedQueen(1, k)`` coincides with ``KQueen(k)``.
    """

    scope: int
    stroll: int

    def __post_init__(self):
        if self.scope < 1 or self.stroll < 1:
            raise ParameterError(
                f"widened Queen needs scope, stroll >= 1, got ({self.scope}, {self.stroll})"
            )

    def moves(self, x, y):
        j, m = self.scope, self.stroll
        out = _row_col_moves(x, y)
        for dx in range(1, x + 1):
            for dy in range(max(1, dx - m + 1), min(y, j * dx + m - 1) + 1):
                out.add((x - dx, y - dy))
        for dy in range(1, y + 1):
            for dx in range(max(1, dy - m + 1), min(x, j * dy + m - 1) + 1):
                out.add((x - dx, y - dy))
        return out

    def reaches(self, x, y, u, v):
        j, m = self.scope, self.stroll
        s = x - u
        t = y - v
        wide = ((t >= s - (m - 1)) & (t <= j * s + m - 1)) | (
            (s >= t - (m - 1)) & (s <= j * t + m - 1)
        )
        return (s >= 0) & (t >= 0) & (s + t > 0) & ((s == 0) | (t == 0) | wide)


@dataclass(frozen=True)
class RestrictedStroll(QueenVariant):
    """k-Queen that can enter the band |u - v| <= j from outside only by a
    row or column move."""

    k: int
    band: int

    def __post_init__(self):
        if self.k < 1 or not 0 <= self.band < self.k:
            raise ParameterError(
                f"restricted stroll needs k > band >= 0, got ({self.k}, {self.band})"
            )

    def moves(self, x, y):
        out = KQueen(self.k).moves(x, y)
        if abs(x - y) <= self.band:
            return out
        return {
            (u, v) for u, v in out if u == x or v == y or abs(u - v) > self.band
        }

    def reaches(self, x, y, u, v):
        allowed = (u == x) | (v == y) | (abs(x - y) <= self.band) | (abs(u - v) > self.band)
        return KQueen(self.k).reaches(x, y, u, v) & allowed


def _check_position(p) -> Position:
    p = Position(*p)
    if p.x < 0 or p.y < 0:
        raise ValueError(f"position {tuple(p)} is outside the quadrant")
    return p


def legal_moves(variant: QueenVariant, p) -> list[Position]:
    """All squares reachable from ``p`` in one move, sorted by (x, y)."""
    p = _check_position(p)
    return list(map(Position._make, sorted(variant.moves(p.x, p.y))))


def is_legal_move(variant: QueenVariant, src, dst) -> bool:
    src = _check_position(src)
    dst = _check_position(dst)
    return bool(variant.reaches(src.x, src.y, dst.x, dst.y))


_VARIANT_RE = re.compile(r"^([a-z0-9-]+)(?::(\d+(?:,\d+)*))?$")


def parse_variant(text: str) -> QueenVariant:
    """Parse ``name[:p1,p2]``, e.g. ``queen-bee``, ``k-queen:2``, ``widened:2,1``."""
    m = _VARIANT_RE.match(text.strip().lower())
    if not m:
        raise ParameterError(f"cannot parse variant {text!r}")
    name, raw = m.groups()
    params = [int(p) for p in raw.split(",")] if raw else []

    def want(n):
        if len(params) != n:
            raise ParameterError(f"variant {name!r} takes {n} parameter(s), got {len(params)}")
        return params

    if name in ("standard", "queen", "wythoff"):
        want(0)
        return Standard()
    if name == "k-queen":
        return KQueen(*want(1))
    if name == "queen-bee":
        want(0)
        return QueenBee()
    if name == "queen-dee":
        want(0)
        return KQueenDee(1)
    if name == "2-queen-dee":
        want(0)
        return KQueenDee(2)
    if name == "k-queen-dee":
        return KQueenDee(*want(1))
    if name == "widened":
        return WidenedQueen(*want(2))
    if name == "restricted":
        return RestrictedStroll(*want(2))
    raise ParameterError(f"unknown variant {name!r}")


def variant_name(variant: QueenVariant) -> str:
    """Inverse of :func:`parse_variant`."""
    match variant:
        case Standard():
            return "standard"
        case KQueen(k=k):
            return f"k-queen:{k}"
        case QueenBee():
            return "queen-bee"
        case KQueenDee(k=1):
            return "queen-dee"
        case KQueenDee(k=2):
            return "2-queen-dee"
        case KQueenDee(k=k):
            return f"k-queen-dee:{k}"
        case WidenedQueen(scope=j, stroll=m):
            return f"widened:{j},{m}"
        case RestrictedStroll(k=k, band=j):
            return f"restricted:{k},{j}"
    raise TypeError(f"not a Queen variant: {variant!r}")
