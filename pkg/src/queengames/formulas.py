"""Direct generators for P-position tables, no game search involved.

All arithmetic is exact: Python integers, ``math.isqrt`` and ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np

from .solver import PTable
from .words import catalog, table_from_morphism

__all__ = [
    "mex",
    "mex2",
    "MexState",
    "is_vile",
    "vile",
    "dopey",
    "vile_numbers",
    "queen_bee_pair",
    "queen_bee_pairs",
    "two_queen_dee_pairs",
    "queen_dee_pairs",
    "queen_dee_from_two_queen_dee",
    "beatty_psi",
    "holladay_pairs",
    "f_queen_bee",
    "nearest",
    "h",
    "fraenkel_pairs",
    "restricted_pairs",
]


def mex(values) -> int:
    """Least nonnegative integer not in ``values``."""
    s = set(values)
    n = 0
    while n in s:
        n += 1
    return n


def mex2(values) -> int:
    """Least element of {2, 4, 6, ...} not in ``values`` (all must be even).

    Zero is accepted as a member but is never the answer.
    """
    s = set(values)
    if any(v % 2 for v in s):
        raise ValueError("mex2 is defined on sets of even numbers")
    n = 2
    while n in s:
        n += 2
    return n


class MexState:
    """Incremental 2-Queen Dee generator.

    Each step takes a = mex(A u B) and d = mex2(D u S) and emits (a, a + d).
    Both minima only ever move up, so each is tracked by a cursor over a
    membership bitmap. The initial state holds the origin: A = B = D = S = {0}.
    """

    def __init__(self):
        self.a_values = [0]
        self.b_values = [0]
        self.diffs = [0]
        self.sums = [0]
        self._coord = bytearray(64)
        self._coord[0] = 1
        self._even = bytearray(64)  # index d // 2
        self._even[0] = 1
        self._cursor = 1
        self._cursor2 = 1

    @property
    def n(self) -> int:
        return len(self.a_values) - 1

    @staticmethod
    def _mark(bits: bytearray, i: int) -> bytearray:
        if i >= len(bits):
            bits.extend(bytes(max(i + 1 - len(bits), len(bits))))
        if bits[i]:
            raise RuntimeError(f"value {i} generated twice")
        bits[i] = 1
        return bits

    def step(self) -> tuple[int, int]:
        coord, even = self._coord, self._even
        while self._cursor < len(coord) and coord[self._cursor]:
            self._cursor += 1
        while self._cursor2 < len(even) and even[self._cursor2]:
            self._cursor2 += 1
        a = self._cursor
        d = 2 * self._cursor2
        b = a + d
        self._coord = self._mark(self._mark(coord, a), b)
        self._even = self._mark(self._mark(even, d // 2), (a + b) // 2)
        self.a_values.append(a)
        self.b_values.append(b)
        self.diffs.append(d)
        self.sums.append(a + b)
        return a, b

    def check_invariants(self) -> None:
        """Raise AssertionError unless the induction hypothesis holds."""
        a_set, b_set = set(self.a_values), set(self.b_values)
        assert a_set & b_set == {0}, "a value occurs in both A and B"
        covered = a_set | b_set
        assert all(i in covered for i in range(max(a_set) + 1)), "A u B has a gap below max A"
        assert all(v % 2 == 0 for v in self.diffs + self.sums), "odd difference or sum"
        ds = set(self.diffs) | set(self.sums)
        assert all(e in ds for e in range(0, max(self.diffs) + 1, 2)), "D u S has an even gap"


def is_vile(n: int) -> bool:
    """True if the binary form of n ends in an even number of zeros."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return ((n & -n).bit_length() - 1) % 2 == 0


# lowest set bit sits at an even position
_EVEN_BITS = 0x5555555555555555


def vile_numbers(count: int) -> np.ndarray:
    """The first ``count`` vile numbers as an int64 array."""
    if count < 0:
        raise ValueError("count must be >= 0")
    limit = 3 * count // 2 + 64
    while True:
        x = np.arange(1, limit + 1, dtype=np.int64)
        v = x[((x & -x) & _EVEN_BITS) != 0]
        if len(v) >= count:
            return v[:count]
        limit *= 2


def vile(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return int(vile_numbers(n)[-1])


def dopey(n: int) -> int:
    return 2 * vile(n)


def queen_bee_pair(n: int) -> tuple[int, int]:
    a = vile(n)
    return a, 2 * a


def queen_bee_pairs(count: int) -> PTable:
    a = vile_numbers(count).tolist()
    return PTable(tuple((x, 2 * x) for x in a))


def two_queen_dee_pairs(count: int, check: bool = False) -> PTable:
    state = MexState()
    pairs = []
    for _ in range(count):
        pairs.append(state.step())
        if check:
            state.check_invariants()
    return PTable(tuple(pairs))


def queen_dee_from_two_queen_dee(table: PTable) -> PTable:
    out = []
    for n, (a, b) in enumerate(table, 1):
        if (b - a) % 2:
            raise RuntimeError(f"2-Queen Dee pair {n} = {(a, b)} has odd difference")
        out.append(((b - a) // 2, (b + a) // 2))
    return PTable(tuple(out))


def queen_dee_pairs(count: int) -> PTable:
    return queen_dee_from_two_queen_dee(two_queen_dee_pairs(count))


def beatty_psi(k: int, n: int) -> int:
    """floor(n * psi_k) with psi_k = (2 - k + sqrt(k^2 + 4)) / 2.

    sqrt(k^2 + 4) is irrational for k >= 1, so flooring the integer square
    root first does not change the result.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    return (n * (2 - k) + isqrt(n * n * (k * k + 4))) // 2


def holladay_pairs(k: int, count: int) -> PTable:
    return PTable(tuple((beatty_psi(k, n), beatty_psi(k, n) + k * n) for n in range(1, count + 1)))


def f_queen_bee(x):
    """Sum over j of [x / 2^(2j+1)], with [.] rounding halves up.

    Accepts an int or an integer numpy array; terms vanish once 4^j > x.
    """
    top = int(np.max(x)) if isinstance(x, np.ndarray) else int(x)
    total = 0 * x
    j = 0
    while 4**j <= top:
        total = total + (2 * x + 2 ** (2 * j + 1)) // 2 ** (2 * j + 2)
        j += 1
    return total


def nearest(q: Fraction) -> int:
    """Nearest integer, halves rounded up."""
    return (2 * q.numerator + q.denominator) // (2 * q.denominator)


def h(x) -> Fraction:
    """Sum over j >= 0 of {x / 4^j}, where {q} = q - [q].

    Terms with 4^j > 2x equal x / 4^j, so the tail is summed in closed form.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be >= 0")
    total = Fraction(0)
    j = 0
    while 4**j <= 2 * x:
        q = x / 4**j
        total += q - nearest(q)
        j += 1
    return total + x * Fraction(4, 3) / 4**j


def fraenkel_pairs(k: int, j: int, count: int) -> PTable:
    return table_from_morphism(catalog("fraenkel", k, j), count)


def restricted_pairs(k: int, j: int, count: int) -> PTable:
    return table_from_morphism(catalog("restricted", k, j), count)
