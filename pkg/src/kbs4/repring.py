"""The representation ring R(S_n) realized by integer class functions.

A :class:`VirtualCharacter` is a vector of character values over the
conjugacy classes of a :class:`~kbs4.symchars.CharacterTable`; sums and
products are pointwise.  Restriction to a cyclic subgroup is solved as an
exact integer system over the cyclotomic integers in the power basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import poly
from .intlinalg import hermite_normal_form
from .symchars import CharacterTable, Partition, character_table, identify_s4_irreps, power_cycle_type


class TableMismatch(ValueError):
    pass


class NotAVirtualCharacter(ValueError):
    pass


@dataclass(frozen=True)
class VirtualCharacter:
    table: CharacterTable
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.table.classes):
            raise ValueError(
                f"{len(self.values)} values for {len(self.table.classes)} classes"
            )

    @classmethod
    def irreducible(cls, table: CharacterTable, index: int) -> VirtualCharacter:
        return cls(table, table.values[index])

    @classmethod
    def scalar(cls, table: CharacterTable, c: int) -> VirtualCharacter:
        return cls(table, (c,) * len(table.classes))

    def _other(self, other) -> VirtualCharacter:
        if isinstance(other, int):
            return VirtualCharacter.scalar(self.table, other)
        if isinstance(other, VirtualCharacter):
            if other.table is not self.table and other.table != self.table:
                raise TableMismatch("characters belong to different groups")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return VirtualCharacter(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    __radd__ = __add__

    def __neg__(self):
        return VirtualCharacter(self.table, tuple(-a for a in self.values))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = VirtualCharacter.scalar(self.table, 1)
        for _ in range(k):
            out = out * self
        return out

    def dimension(self) -> int:
        return self.values[self.table.class_index([1] * self.table.n)]

    def at(self, cycle_type: Sequence[int]) -> int:
        return self.values[self.table.class_index(cycle_type)]

    def is_zero(self) -> bool:
        return not any(self.values)


def multiply(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    """Character of the tensor product."""
    if a.table != b.table:
        raise TableMismatch("characters belong to different groups")
    return VirtualCharacter(a.table, tuple(x * y for x, y in zip(a.values, b.values)))


def decompose(x: VirtualCharacter) -> tuple[int, ...]:
    """Multiplicities of the irreducibles in ``x``, in table order."""
    t = x.table
    coeffs = []
    for row in t.values:
        num = t.inner(x.values, row)
        if num % t.order:
            raise NotAVirtualCharacter(f"inner product {Fraction(num, t.order)} is not an integer")
        coeffs.append(num // t.order)
    rebuilt = [sum(c * row[k] for c, row in zip(coeffs, t.values)) for k in range(len(t.classes))]
    if tuple(rebuilt) != x.values:
        raise NotAVirtualCharacter("not an integer combination of irreducibles")
    return tuple(coeffs)


def from_coefficients(table: CharacterTable, coeffs: Sequence[int]) -> VirtualCharacter:
    return VirtualCharacter(
        table,
        tuple(sum(c * row[k] for c, row in zip(coeffs, table.values)) for k in range(len(table.classes))),
    )


def s4_irreducibles() -> dict[str, VirtualCharacter]:
    """1, d1, d2, d3 and d1d3 as characters of S4."""
    t = character_table(4)
    return {name: VirtualCharacter.irreducible(t, i) for name, i in identify_s4_irreps(t).items()}


def s4_elements() -> dict[str, VirtualCharacter]:
    """The irreducibles plus the reduced classes v, delta, phi and x = phi + v."""
    irr = s4_irreducibles()
    out = dict(irr)
    out["v"] = irr["d1"] - 1
    out["delta"] = irr["d2"] - 2
    out["phi"] = irr["d3"] - 3
    out["x"] = out["phi"] + out["v"]
    return out


S4_RELATIONS = (
    ("d1^2", "1"),
    ("d2^2", "1 + d1 + d2"),
    ("d3^2", "1 + d2 + d3 + d1d3"),
    ("d2*d3", "d3 + d1d3"),
    ("d1*d2", "d2"),
)

S4_REDUCED_RELATIONS = (
    ("2v", "-v^2"),
    ("3delta + delta^2", "v"),
    ("4phi + phi^2", "3v + delta + v*phi"),
    ("delta*phi", "3v + v*phi - 3delta"),
    ("v*delta", "v^2"),
)


def evaluate(expr: str | poly.Polynomial, bindings: Mapping[str, VirtualCharacter]) -> VirtualCharacter:
    """Evaluate a polynomial expression with names bound to characters."""
    if isinstance(expr, str):
        expr = poly.parse(expr, tuple(bindings))
    used = {name for m in expr.terms for name, e in zip(expr.variables, m) if e}
    unbound = sorted(used - set(bindings))
    if unbound:
        raise KeyError(f"unbound generator(s): {', '.join(unbound)}")
    table = next(iter(bindings.values())).table
    return expr.substitute(bindings, VirtualCharacter.scalar(table, 1))


def verify_relation(
    lhs: str | poly.Polynomial,
    rhs: str | poly.Polynomial,
    bindings: Mapping[str, VirtualCharacter] | None = None,
) -> bool:
    """True iff both sides have the same character."""
    bindings = s4_elements() if bindings is None else bindings
    return evaluate(lhs, bindings).values == evaluate(rhs, bindings).values


# -- cyclotomic integers --------------------------------------------------


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            q[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
    rem = num[:len(den) - 1]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


@dataclass(frozen=True)
class CyclotomicVector:
    """An element of Z[zeta_n] in the power basis 1, zeta, ..., zeta^(phi(n)-1)."""

    n: int
    coords: tuple[int, ...]

    @classmethod
    def from_coefficients(cls, n: int, coeffs: Sequence[int]) -> CyclotomicVector:
        """Reduce ``sum coeffs[k] * zeta^k`` modulo the cyclotomic polynomial."""
        phi = cyclotomic_polynomial(n)
        deg = len(phi) - 1
        if len(coeffs) < deg:
            return cls(n, tuple(coeffs) + (0,) * (deg - len(coeffs)))
        _, rem = _poly_divmod(list(coeffs), list(phi))
        return cls(n, tuple(rem) + (0,) * (deg - len(rem)))

    @classmethod
    def root_power(cls, n: int, k: int) -> CyclotomicVector:
        k %= n
        return cls.from_coefficients(n, [0] * k + [1])

    def __add__(self, other: CyclotomicVector) -> CyclotomicVector:
        return CyclotomicVector(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicVector(self.n, tuple(other * a for a in self.coords))
        prod = [0] * (len(self.coords) + len(other.coords) - 1)
        for i, a in enumerate(self.coords):
            for j, b in enumerate(other.coords):
                prod[i + j] += a * b
        return CyclotomicVector.from_coefficients(self.n, prod)

    __rmul__ = __mul__


# -- restriction to cyclic subgroups ---------------------------------------


@dataclass(frozen=True)
class CyclicDecomposition:
    """Multiplicities of eta^0, ..., eta^(n-1) in a representation of Z_n."""

    n: int
    multiplicities: tuple[int, ...]

    def __mul__(self, other: CyclicDecomposition) -> CyclicDecomposition:
        if self.n != other.n:
            raise ValueError("different cyclic groups")
        m = [0] * self.n
        for i, a in enumerate(self.multiplicities):
            for j, b in enumerate(other.multiplicities):
                m[(i + j) % self.n] += a * b
        return CyclicDecomposition(self.n, tuple(m))

    def dimension(self) -> int:
        return sum(self.multiplicities)

    def __str__(self):
        terms = []
        for k, m in enumerate(self.multiplicities):
            if not m:
                continue
            mono = "1" if k == 0 else ("eta" if k == 1 else f"eta^{k}")
            if m == 1:
                body = mono
            elif m == -1:
                body = "-" + mono
            else:
                body = f"{m}" if k == 0 else f"{m}*{mono}"
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _solve_exact(rows: list[list[int]], rhs: list[int], unknowns: int) -> list[Fraction]:
    """Gauss-Jordan over the rationals; raises if inconsistent or underdetermined."""
    a = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(unknowns):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] != 0 for row in a[r:]):
        raise NotAVirtualCharacter("restriction system is inconsistent")
    if len(piv_cols) != unknowns:
        raise NotAVirtualCharacter("restriction system is underdetermined")
    return [a[i][-1] for i in range(unknowns)]


def restrict_to_cyclic(x: VirtualCharacter, cycle_type: Sequence[int]) -> CyclicDecomposition:
    """Restrict ``x`` to the cyclic subgroup generated by a permutation of the given type.

    eta is the character sending the chosen generator to exp(2 pi i / n).
    Solves sum_k m_k zeta^(jk) = x(c^j) for all j, each equation expanded
    into integer equations in the power basis of Z[zeta_n].
    """
    c = Partition(sorted(cycle_type, reverse=True))
    if c.n != x.table.n:
        raise ValueError(f"cycle type {c} is not a permutation of {x.table.n} points")
    n = math.lcm(*c)
    deg = len(cyclotomic_polynomial(n)) - 1
    rows: list[list[int]] = [[] for _ in range(n * deg)]
    rhs: list[int] = []
    for j in range(n):
        target = x.at(power_cycle_type(c, j))
        cols = [CyclotomicVector.root_power(n, j * k).coords for k in range(n)]
        for t in range(deg):
            rows[j * deg + t] = [cols[k][t] for k in range(n)]
            rhs.append(target if t == 0 else 0)
    sol = _solve_exact(rows, rhs, n)
    if any(s.denominator != 1 for s in sol):
        raise NotAVirtualCharacter(f"non-integral multiplicities {sol}")
    return CyclicDecomposition(n, tuple(int(s) for s in sol))


# Z_2, Z_3, Z_4 inside S_4 generated by (12), (123), (1234)
S4_CYCLIC = {"C2": (2, 1, 1), "C3": (3, 1), "C4": (4,)}

# the restriction values recorded for S4: (subgroup, representation) -> multiplicities
S4_RESTRICTIONS = {
    ("C2", "d1"): (0, 1),
    ("C2", "d2"): (2, 0),
    ("C2", "d3"): (1, 2),
    ("C3", "d1"): (1, 0, 0),
    ("C3", "d2"): (0, 1, 1),
    ("C3", "d3"): (1, 1, 1),
    ("C4", "d1"): (0, 0, 1, 0),
    ("C4", "d2"): (1, 0, 1, 0),
    ("C4", "d3"): (0, 1, 1, 1),
}


# -- subring generation -----------------------------------------------------


def subring_lattice(gens: Sequence[VirtualCharacter]) -> list[list[int]]:
    """Hermite basis, in irreducible coordinates, of the unital subring generated by ``gens``."""
    if not gens:
        raise ValueError("need at least one generator")
    table = gens[0].table
    k = len(table.irreps)
    one = VirtualCharacter.scalar(table, 1)
    basis = hermite_normal_form([decompose(one)], k)
    while True:
        elems = [from_coefficients(table, b) for b in basis]
        new = [decompose(e * g) for e in elems for g in gens]
        grown = hermite_normal_form(basis + new, k)
        if grown == basis:
            return basis
        basis = grown


def subring_index(gens: Sequence[VirtualCharacter]) -> int:
    """Index of the generated subring in R(S_n); 0 when its rank is deficient."""
    basis = subring_lattice(gens)
    k = len(gens[0].table.irreps)
    if len(basis) < k:
        return 0
    return math.prod(basis[i][i] for i in range(k))


def generates_ring(gens: Sequence[VirtualCharacter]) -> bool:
    """True iff ``gens`` generate all of R(S_n) as a ring."""
    return subring_index(gens) == 1
