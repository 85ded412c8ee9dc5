"""Substitution morphisms, fixed points, codings and letter-position tables.

Words are plain ``str`` values over single-character letters; positions in a
word are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .solver import PTable

__all__ = [
    "MorphismError",
    "InsufficientLengthError",
    "Morphism",
    "Coding",
    "fixed_point",
    "erase_letters",
    "apply_coding",
    "occurrence_index",
    "occurrences",
    "word_table",
    "table_from_morphism",
    "catalog",
    "CATALOG_NAMES",
]


class MorphismError(ValueError):
    pass


class InsufficientLengthError(ValueError):
    """The word has too few occurrences of a letter; use a longer prefix."""


def _freeze(rules: Mapping[str, str]) -> tuple[tuple[str, str], ...]:
    return tuple((k, rules[k]) for k in rules)


@dataclass(frozen=True, init=False)
class Morphism:
    """A non-erasing substitution; letter order follows the rule order."""

    rules: tuple[tuple[str, str], ...]

    def __init__(self, rules: Mapping[str, str]):
        object.__setattr__(self, "rules", _freeze(rules))
        alphabet = set(self.alphabet)
        for letter, image in self.rules:
            if len(letter) != 1:
                raise MorphismError(f"letters are single characters, got {letter!r}")
            if not image:
                raise MorphismError(f"erasing rule {letter} -> empty word; use a Coding")
            stray = set(image) - alphabet
            if stray:
                raise MorphismError(f"image of {letter!r} uses letters {sorted(stray)} outside the alphabet")

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.rules)

    def image(self, letter: str) -> str:
        return dict(self.rules)[letter]

    def __call__(self, word: str) -> str:
        return word.translate(str.maketrans(dict(self.rules)))

    def __str__(self) -> str:
        return ", ".join(f"{k}->{v}" for k, v in self.rules)


@dataclass(frozen=True, init=False)
class Coding:
    """A letter-to-word map applied once; images may be empty."""

    mapping: tuple[tuple[str, str], ...]

    def __init__(self, mapping: Mapping[str, str]):
        object.__setattr__(self, "mapping", _freeze(mapping))

    def __call__(self, word: str) -> str:
        return apply_coding(word, self)


def fixed_point(m: Morphism, seed: str, length: int) -> str:
    """First ``length`` letters of the fixed point of ``m`` starting at ``seed``.

    The word is grown as a work queue: the letter at position i contributes
    its image once the prefix reaches it, so the cost is linear in ``length``.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    rules = dict(m.rules)
    if seed not in rules:
        raise MorphismError(f"seed {seed!r} not in alphabet")
    start = rules[seed]
    if not start.startswith(seed) or len(start) < 2:
        raise MorphismError(f"morphism is not prolongable at {seed!r}")
    parts = [start]
    size = len(start)
    # buf is a snapshot of the prefix, refreshed when the read head catches up
    buf = start
    i = 1
    while size < length:
        if i >= len(buf):
            buf = "".join(parts)
            parts = [buf]
        img = rules[buf[i]]
        parts.append(img)
        size += len(img)
        i += 1
    return "".join(parts)[:length]


def erase_letters(word: str, letters) -> str:
    return word.translate({ord(c): None for c in letters})


def apply_coding(word: str, coding: Coding | Mapping[str, str]) -> str:
    mapping = dict(coding.mapping) if isinstance(coding, Coding) else dict(coding)
    stray = set(word) - set(mapping)
    if stray:
        raise KeyError(f"letters {sorted(stray)} outside the coding domain")
    return word.translate({ord(k): v for k, v in mapping.items()})


def occurrences(word: str, letter: str) -> np.ndarray:
    """All 1-based positions of ``letter`` in ``word``."""
    if len(letter) != 1:
        raise ValueError("letter must be a single character")
    raw = np.frombuffer(word.encode("utf-32-le"), dtype=np.uint32)
    return np.flatnonzero(raw == ord(letter)) + 1


def occurrence_index(word: str, letter: str, n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    pos = -1
    for _ in range(n):
        pos = word.find(letter, pos + 1)
        if pos < 0:
            raise InsufficientLengthError(f"fewer than {n} occurrences of {letter!r}")
    return pos + 1


def word_table(word: str, la: str, lb: str, count: int) -> PTable:
    """Pairs (position of the n-th ``la``, position of the n-th ``lb``)."""
    pa = occurrences(word, la)
    pb = occurrences(word, lb)
    if len(pa) < count or len(pb) < count:
        raise InsufficientLengthError(
            f"need {count} of {la!r} and {lb!r}, word has {len(pa)} and {len(pb)}"
        )
    return PTable(tuple(zip(pa[:count].tolist(), pb[:count].tolist())))


def table_from_morphism(
    m: Morphism,
    count: int,
    la: str = "a",
    lb: str = "b",
    erase: str = "",
    seed: str = "a",
) -> PTable:
    """Table coded by the fixed point of ``m`` after deleting ``erase``;
    the prefix is doubled until it is long enough."""
    length = max(64, 4 * count)
    while True:
        word = erase_letters(fixed_point(m, seed, length), erase)
        try:
            return word_table(word, la, lb, count)
        except InsufficientLengthError:
            length *= 2


def _power(k: int, j: int) -> None:
    if k < 1 or j < 1:
        raise MorphismError(f"exponents must be >= 1, got k={k}, j={j}")


def catalog(name: str, *params: int) -> Morphism:
    """Named morphisms from the Corner-the-Queen family.

    ``holladay(k)``: a -> a^k b, b -> a; ``fraenkel(k, j)``: a -> a^k b,
    b -> a^j; ``restricted(k, j)``: a -> a^(k-j) b a^j, b -> a.
    """
    key = name.replace("-", "_").lower()
    n = len(params)

    def arity(want):
        if n != want:
            raise MorphismError(f"{name} takes {want} parameter(s), got {n}")

    if key == "fibonacci":
        arity(0)
        return Morphism({"a": "ab", "b": "a"})
    if key == "holladay":
        arity(1)
        (k,) = params
        _power(k, 1)
        return Morphism({"a": "a" * k + "b", "b": "a"})
    if key == "period_doubling":
        arity(0)
        return Morphism({"a": "ab", "b": "aa"})
    if key == "tribonacci":
        arity(0)
        return Morphism({"a": "ab", "b": "ac", "c": "a"})
    if key == "fourbonacci":
        arity(0)
        return Morphism({"a": "ab", "b": "ac", "c": "ad", "d": "a"})
    if key == "two_one":
        arity(0)
        return Morphism({"a": "aab", "b": "aa"})
    if key == "fraenkel":
        arity(2)
        k, j = params
        _power(k, j)
        return Morphism({"a": "a" * k + "b", "b": "a" * j})
    if key == "restricted":
        arity(2)
        k, j = params
        if not 0 <= j < k:
            raise MorphismError(f"restricted needs k > j >= 0, got k={k}, j={j}")
        return Morphism({"a": "a" * (k - j) + "b" + "a" * j, "b": "a"})
    raise MorphismError(f"unknown morphism {name!r}")


CATALOG_NAMES = (
    "fibonacci",
    "holladay",
    "period_doubling",
    "tribonacci",
    "fraenkel",
    "restricted",
    "two_one",
    "fourbonacci",
)
