"""Closed surfaces presented as polygon gluing words.

A word is a cyclic sequence of signed letters in which every letter occurs
exactly twice; it encodes a polygon whose sides are identified in pairs.
This module computes the Euler characteristic, orientability, the canonical
word from the classification of surfaces, and the mod-2 intersection form on
first homology for one-vertex words.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import islice
from typing import Iterable

from .f2 import F2Matrix

__all__ = [
    "GluingScheme",
    "SurfaceInfo",
    "IntersectionForm",
    "analyze",
    "normalize",
    "orientable_scheme",
    "nonorientable_scheme",
    "intersection_form",
    "random_scheme",
    "MalformedWord",
    "MultipleVertices",
]


class MalformedWord(ValueError):
    """Some letter does not occur exactly twice."""


class MultipleVertices(ValueError):
    """The scheme identifies the polygon corners to more than one vertex."""


class GluingScheme:
    """A closed connected surface as an edge-identification word.

    The word is a tuple of (letter, exponent) pairs with exponent +1 or -1.
    In text form an apostrophe marks the inverse: "a b a' b'".
    """

    __slots__ = ("_word",)

    def __init__(self, word: Iterable[tuple[str, int]]):
        w = tuple((str(letter), int(exp)) for letter, exp in word)
        counts: dict[str, int] = {}
        for letter, exp in w:
            if exp not in (1, -1):
                raise MalformedWord(f"exponent must be +1 or -1, got {exp}")
            if not letter:
                raise MalformedWord("empty letter id")
            counts[letter] = counts.get(letter, 0) + 1
        if not w:
            raise MalformedWord("word is empty")
        bad = [letter for letter, c in counts.items() if c != 2]
        if bad:
            raise MalformedWord(
                f"every letter must occur exactly twice; offending: {sorted(bad)}"
            )
        self._word = w

    @classmethod
    def from_text(cls, text: str) -> GluingScheme:
        """Parse a whitespace-separated word, apostrophe = inverse."""
        word = []
        for tok in text.split():
            if tok.endswith("'"):
                letter, exp = tok[:-1], -1
            else:
                letter, exp = tok, 1
            word.append((letter, exp))
        return cls(word)

    @property
    def word(self) -> tuple[tuple[str, int], ...]:
        return self._word

    @property
    def letters(self) -> tuple[str, ...]:
        """Distinct letter ids in order of first occurrence."""
        seen: dict[str, None] = {}
        for letter, _ in self._word:
            seen.setdefault(letter)
        return tuple(seen)

    def text(self) -> str:
        return " ".join(
            letter if exp == 1 else letter + "'" for letter, exp in self._word
        )

    def __len__(self) -> int:
        return len(self._word)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GluingScheme) and self._word == other._word

    def __hash__(self) -> int:
        return hash(self._word)

    def __repr__(self) -> str:
        return f"GluingScheme.from_text({self.text()!r})"


@dataclass(frozen=True)
class SurfaceInfo:
    euler_char: int
    orientable: bool
    betti1_mod2: int
    vertex_count: int


@dataclass(frozen=True)
class IntersectionForm:
    """The mod-2 intersection pairing on H_1, as a Gram matrix over GF(2)."""

    basis_labels: tuple[str, ...]
    gram: F2Matrix

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def label_index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise KeyError(label) from None


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)


def _vertex_count(s: GluingScheme) -> int:
    """Corners of the polygon identified by the side gluings."""
    word = s.word
    length = len(word)
    uf = _UnionFind(length)
    # side i runs from polygon corner i to corner i+1; +1 means the arrow
    # agrees with that direction, -1 means it is reversed
    occurrences: dict[str, list[int]] = {}
    for i, (letter, _) in enumerate(word):
        occurrences.setdefault(letter, []).append(i)
    for letter, (p, q) in occurrences.items():
        def tail(i: int) -> int:
            return i if word[i][1] == 1 else (i + 1) % length

        def head(i: int) -> int:
            return (i + 1) % length if word[i][1] == 1 else i

        uf.union(tail(p), tail(q))
        uf.union(head(p), head(q))
    return uf.count()


def analyze(s: GluingScheme) -> SurfaceInfo:
    """Euler characteristic, orientability, and mod-2 first Betti number."""
    n_letters = len(s.word) // 2
    vertices = _vertex_count(s)
    euler = vertices - n_letters + 1
    signs: dict[str, list[int]] = {}
    for letter, exp in s.word:
        signs.setdefault(letter, []).append(exp)
    orientable = all(sorted(v) == [-1, 1] for v in signs.values())
    return SurfaceInfo(
        euler_char=euler,
        orientable=orientable,
        betti1_mod2=2 - euler,
        vertex_count=vertices,
    )


def _letter_names() -> Iterable[str]:
    for ch in string.ascii_lowercase:
        yield ch
    i = 1
    while True:
        for ch in string.ascii_lowercase:
            yield f"{ch}{i}"
        i += 1


def orientable_scheme(genus: int) -> GluingScheme:
    """The canonical one-vertex word of the orientable genus-g surface.

    Genus 0 is the sphere word "a a'"; genus g >= 1 is the product of g
    commutators a_i b_i a_i' b_i'.
    """
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    names = _letter_names()
    if genus == 0:
        a = next(names)
        return GluingScheme([(a, 1), (a, -1)])
    word: list[tuple[str, int]] = []
    for _ in range(genus):
        a, b = next(names), next(names)
        word += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return GluingScheme(word)


def nonorientable_scheme(crosscaps: int) -> GluingScheme:
    """The canonical word a1 a1 a2 a2 ... with k >= 1 crosscaps."""
    if crosscaps < 1:
        raise ValueError("a non-orientable surface needs at least one crosscap")
    names = _letter_names()
    word: list[tuple[str, int]] = []
    for _ in range(crosscaps):
        a = next(names)
        word += [(a, 1), (a, 1)]
    return GluingScheme(word)


def normalize(s: GluingScheme) -> GluingScheme:
    """The canonical word of the homeomorphic surface.

    By the classification of closed surfaces the target word is determined
    by the Euler characteristic and orientability alone, so it is emitted
    directly; both invariants are preserved by construction and checked by
    tests.
    """
    info = analyze(s)
    if info.orientable:
        return orientable_scheme((2 - info.euler_char) // 2)
    return nonorientable_scheme(2 - info.euler_char)


def intersection_form(s: GluingScheme) -> IntersectionForm:
    """Mod-2 intersection form of a one-vertex scheme.

    Basis: the letters, in first-occurrence order.  Diagonal entry 1 iff the
    letter's two occurrences carry the same sign (a one-sided curve).
    Off-diagonal entry 1 iff the occurrences of the two letters interleave
    around the polygon.  For a sphere word (betti1 = 0) the empty form is
    returned, since H_1 = 0 leaves nothing to pair; other schemes must have
    exactly one vertex (normalize first).
    """
    info = analyze(s)
    if info.betti1_mod2 == 0:
        return IntersectionForm(basis_labels=(), gram=F2Matrix([], ncols=0))
    if info.vertex_count != 1:
        raise MultipleVertices(
            f"scheme has {info.vertex_count} vertices; normalize first"
        )
    labels = s.letters
    positions: dict[str, list[int]] = {}
    signs: dict[str, list[int]] = {}
    for i, (letter, exp) in enumerate(s.word):
        positions.setdefault(letter, []).append(i)
        signs.setdefault(letter, []).append(exp)
    dim = len(labels)
    gram = [[0] * dim for _ in range(dim)]
    for i, a in enumerate(labels):
        gram[i][i] = 1 if signs[a][0] == signs[a][1] else 0
        p1, p2 = positions[a]
        for j in range(i + 1, dim):
            b = labels[j]
            inside = sum(1 for q in positions[b] if p1 < q < p2)
            gram[i][j] = gram[j][i] = inside % 2
    return IntersectionForm(basis_labels=labels, gram=F2Matrix(gram))


def random_scheme(rng, n_letters: int) -> GluingScheme:
    """A uniformly shuffled valid word on n_letters letters (test helper)."""
    names = list(islice(_letter_names(), n_letters))
    slots = names * 2
    rng.shuffle(slots)
    word = [(letter, rng.choice((1, -1))) for letter in slots]
    return GluingScheme(word)
