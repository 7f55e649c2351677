"""Partitions, conjugacy classes and irreducible characters of S_n.

Classes and irreducibles are both indexed by partitions of n and are
always listed in reverse-lexicographic order, so for n = 4 the order is
[4], [3,1], [2,2], [2,1,1], [1,1,1,1].  Characters are computed with the
Murnaghan-Nakayama rule on beta-sets (the abacus form of rim hook removal).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

MAX_PARTITION_N = 12
MAX_TABLE_N = 8


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def is_hook(self) -> bool:
        return len(self) <= 1 or all(p == 1 for p in self[1:])

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"


def _check_n(n: int, bound: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= bound:
        raise ValueError(f"n must be an integer in 1..{bound}, got {n!r}")


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    _check_n(n, MAX_PARTITION_N)
    return [Partition(p) for p in _partitions(n, n)]


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def centralizer_order(cycle_type: Sequence[int]) -> int:
    return math.prod(k ** m * math.factorial(m) for k, m in Counter(cycle_type).items())


def class_size(cycle_type: Sequence[int]) -> int:
    """Number of permutations of the given cycle type."""
    cycle_type = Partition(sorted(cycle_type, reverse=True))
    return math.factorial(cycle_type.n) // centralizer_order(cycle_type)


def power_cycle_type(cycle_type: Sequence[int], j: int) -> Partition:
    """Cycle type of ``sigma**j`` when ``sigma`` has the given cycle type.

    A cycle of length l splits into gcd(l, j) cycles of length l / gcd(l, j).
    """
    parts = []
    for length in cycle_type:
        g = math.gcd(length, j)
        parts += [length // g] * g
    return Partition(sorted(parts, reverse=True))


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    k = len(shape)
    return tuple(p + k - 1 - i for i, p in enumerate(shape))


def _shape_from_beta(beta: Sequence[int]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    k = len(b)
    return tuple(p for p in (x - (k - 1 - i) for i, x in enumerate(b)) if p > 0)


@lru_cache(maxsize=None)
def mn_character(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    """chi^shape evaluated at a permutation with cycle lengths ``cycles``.

    Strips a rim hook of length ``cycles[0]`` in every possible way; on the
    beta-set this moves one bead from b to b - r, and the leg length is the
    number of beads strictly between.
    """
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    beta = _beta_set(shape)
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in beads:
            leg = sum(1 for c in beta if b - r < c < b)
            new_beta = [c for c in beta if c != b] + [b - r]
            total += (-1) ** leg * mn_character(_shape_from_beta(new_beta), rest)
    return total


@dataclass(frozen=True)
class CharacterTable:
    n: int
    classes: tuple[Partition, ...]
    class_sizes: tuple[int, ...]
    irreps: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return math.factorial(self.n)

    @property
    def hooks(self) -> tuple[bool, ...]:
        """Which irreducibles are indexed by hook partitions."""
        return tuple(p.is_hook() for p in self.irreps)

    @property
    def dimensions(self) -> tuple[int, ...]:
        i = self.class_index(Partition([1] * self.n))
        return tuple(row[i] for row in self.values)

    def class_index(self, cycle_type: Sequence[int]) -> int:
        return self.classes.index(Partition(sorted(cycle_type, reverse=True)))

    def irrep_index(self, shape: Sequence[int]) -> int:
        return self.irreps.index(Partition(shape))

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Unnormalized inner product sum_C |C| a(C) b(C); divide by n! for <a, b>."""
        return sum(s * x * y for s, x, y in zip(self.class_sizes, a, b))

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": [list(c) for c in self.classes],
            "class_sizes": list(self.class_sizes),
            "irreps": [list(p) for p in self.irreps],
            "hooks": list(self.hooks),
            "values": [list(r) for r in self.values],
        }


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    _check_n(n, MAX_TABLE_N)
    parts = partitions(n)
    values = tuple(tuple(mn_character(tuple(lam), tuple(mu)) for mu in parts) for lam in parts)
    return CharacterTable(
        n=n,
        classes=tuple(parts),
        class_sizes=tuple(class_size(mu) for mu in parts),
        irreps=tuple(parts),
        values=values,
    )


S4_NAMES = ("1", "d1", "d2", "d3", "d1d3")

# the classes C1..C5 of the S4 literature: 1, (12), (123), (1234), (12)(34)
S4_CLASS_LABELS = {
    (1, 1, 1, 1): "C1",
    (2, 1, 1): "C2",
    (3, 1): "C3",
    (4,): "C4",
    (2, 2): "C5",
}


def s4_class_order(table: CharacterTable) -> list[int]:
    """Column indices of ``table`` in the order C1, C2, C3, C4, C5."""
    label_to_index = {S4_CLASS_LABELS[tuple(c)]: i for i, c in enumerate(table.classes)}
    return [label_to_index[f"C{k}"] for k in range(1, 6)]


def identify_s4_irreps(table: CharacterTable) -> dict[str, int]:
    """Match the rows of the S4 table with 1, d1, d2, d3 and d1d3."""
    if table.n != 4:
        raise ValueError("identify_s4_irreps needs the table of S4")
    dims = table.dimensions
    if sorted(dims) != [1, 1, 2, 3, 3]:
        raise ValueError(f"unexpected dimensions {dims}")
    ones = [i for i, row in enumerate(table.values) if all(x == 1 for x in row)]
    if len(ones) != 1:
        raise ValueError("no unique trivial character")
    trivial = ones[0]
    sign = next(i for i, d in enumerate(dims) if d == 1 and i != trivial)
    (two,) = [i for i, d in enumerate(dims) if d == 2]
    transposition = table.class_index((2, 1, 1))
    threes = [i for i, d in enumerate(dims) if d == 3]
    standard = [i for i in threes if table.values[i][transposition] == 1]
    if len(standard) != 1:
        raise ValueError("cannot single out the standard representation")
    (d3,) = standard
    (other,) = [i for i in threes if i != d3]
    twisted = tuple(a * b for a, b in zip(table.values[sign], table.values[d3]))
    if table.values[other] != twisted:
        raise ValueError("second 3-dimensional row is not sign times standard")
    return {"1": trivial, "d1": sign, "d2": two, "d3": d3, "d1d3": other}
