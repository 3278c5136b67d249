"""Simple reflections, Weyl words, orbit enumeration, dominant representatives.

Orbits and dominant reduction work for the full base as well as for any
subset of simple indices (in particular the maximal-Levi subsets obtained
by deleting one index). Internally both run in pairing coordinates
lambda_i = <v, alpha_i^v>, where every simple reflection is an integer
update through the Cartan matrix; ambient vectors are reconstructed with
one exact reflection per discovered element. The public reflect/apply_word
operate directly on ambient vectors.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from .core import RootSystem
from .linalg import Vector, vector, vscale, vsub

Subset = Iterable[int]


@dataclass(frozen=True)
class WeylWord:
    """A finite sequence of simple-reflection indices.

    Words compose like the reflections they name: the word (a, b) acts as
    s_a after s_b, i.e. letters are applied last-to-first. No reduced-word
    normalization is performed or promised.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "WeylWord") -> "WeylWord":
        return WeylWord(self.letters + other.letters)

    def avoids(self, i: int) -> bool:
        return i not in self.letters


@dataclass(frozen=True)
class Orbit:
    """Closure of a seed vector under a set of simple reflections.

    ``elements`` are in breadth-first discovery order (seed first), which is
    deterministic for fixed inputs.
    """

    elements: tuple[Vector, ...]
    generator_subset: frozenset[int]

    @cached_property
    def _element_set(self) -> frozenset[Vector]:
        return frozenset(self.elements)

    def __contains__(self, v) -> bool:
        return vector(v) in self._element_set

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _checked_subset(s: RootSystem, subset: Subset) -> tuple[int, ...]:
    gens = sorted(set(subset))
    for i in gens:
        s.check_simple_index(i)
    return tuple(gens)


def full_base(s: RootSystem) -> frozenset[int]:
    return frozenset(range(s.rank))


def levi_subset(s: RootSystem, i: int) -> frozenset[int]:
    """All simple indices except i: the generator set of the maximal Levi."""
    s.check_simple_index(i)
    return frozenset(j for j in range(s.rank) if j != i)


def reflect(s: RootSystem, i: int, v) -> Vector:
    """Simple reflection: v - <v, alpha_i^v> alpha_i. Involutive."""
    s.check_simple_index(i)
    v = vector(v)
    return vsub(v, vscale(s.pair_simple(v, i), s.simples[i]))


def apply_word(s: RootSystem, word: WeylWord, v) -> Vector:
    """Apply a word's reflections, last letter first.

    apply_word(w1 + w2, v) == apply_word(w1, apply_word(w2, v)); the empty
    word is the identity.
    """
    v = vector(v)
    for i in reversed(word.letters):
        v = reflect(s, i, v)
    return v


def _pairing_state(s: RootSystem, v: Vector) -> tuple[tuple[int, ...], int]:
    """Integer pairing coordinates of v, with the denominator scaled out.

    Reflections act on pairing coordinates by integer Cartan-matrix updates
    and commute with scaling, so one common denominator up front keeps the
    whole orbit in integer tuples.
    """
    lam = [s.pair_simple(v, i) for i in range(s.rank)]
    den = lcm(*(x.denominator for x in lam)) if lam else 1
    return tuple(int(x * den) for x in lam), den


def orbit(s: RootSystem, v, subset: Subset) -> Orbit:
    """Breadth-first closure of {v} under the chosen simple reflections."""
    gens = _checked_subset(s, subset)
    v = vector(v)
    start, den = _pairing_state(s, v)
    a = s.cartan
    rng = range(s.rank)
    seen = {start}
    states = [start]
    elements = [v]
    head = 0
    while head < len(states):
        lam = states[head]
        base = elements[head]
        head += 1
        for i in gens:
            li = lam[i]
            if li == 0:
                continue  # s_i fixes this element
            new = tuple(lam[j] - li * a[i][j] for j in rng)
            if new not in seen:
                seen.add(new)
                states.append(new)
                # The stored state already knows <base, alpha_i^v> = li/den.
                elements.append(vsub(base, vscale(Fraction(li, den),
                                                  s.simples[i])))
    return Orbit(tuple(elements), frozenset(gens))


def is_dominant(s: RootSystem, v, subset: Subset) -> bool:
    """True iff <v, alpha_i^v> >= 0 for every i in the subset."""
    gens = _checked_subset(s, subset)
    v = vector(v)
    return all(s.pair_simple(v, i) >= 0 for i in gens)


def dominant_rep(s: RootSystem, v, subset: Subset) -> tuple[Vector, WeylWord]:
    """The unique subset-dominant conjugate of v, with a word that reaches it.

    Reduction strategy: repeatedly reflect at the lowest index in the subset
    whose pairing is negative. The resulting vector is independent of the
    strategy (the dominant representative is unique); the word is just one
    valid witness, with every letter in the subset, and is not reduced.
    """
    gens = _checked_subset(s, subset)
    v = vector(v)
    start, _ = _pairing_state(s, v)
    lam = list(start)
    a = s.cartan
    rng = range(s.rank)
    applied: list[int] = []
    limit = len(s.positives) + 8  # descent length is at most |positive roots|
    while True:
        i = next((i for i in gens if lam[i] < 0), None)
        if i is None:
            break
        li = lam[i]
        lam = [lam[j] - li * a[i][j] for j in rng]
        applied.append(i)
        if len(applied) > limit:
            raise RuntimeError("dominant reduction failed to terminate")
    word = WeylWord(tuple(reversed(applied)))
    return apply_word(s, word, v), word
