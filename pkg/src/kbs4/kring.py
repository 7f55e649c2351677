"""The ring Z[v, phi]/I modelling K(BS4), and its truncations.

Elements are rewritten in the coordinates (v, x) with x = phi + v.  The
filtration is by weighted degree, weight(v) = 2 and weight(x) = 4: the
subgroup F_2j is generated by the monomials of weight >= 2j.  Truncating
at weight 2N gives a finite abelian group standing in for the reduced
K-group of the 2N-skeleton.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from . import intlinalg as il
from .poly import Polynomial, format_polynomial, parse
from .repring import VirtualCharacter, evaluate, s4_elements

# symbols accepted in user expressions
SYMBOLS = ("v", "phi", "x", "delta")
BASIS_VARS = ("v", "x")
WEIGHTS = (2, 4)

THEOREM1_RELATIONS = (
    "2v + v^2",
    "12phi + 7phi^2 + phi^3 - 4v - v*phi",
    "24phi + 26phi^2 + 9phi^3 + phi^4",
    "2v*phi - 8v - 24phi^2 - 14phi^3 - 2phi^4 + v*phi^2",
)

# delta = d2 - 2 written through v and phi, using d2 = d3^2 - 1 - d3 - d1 d3
DELTA_IN_V_PHI = "phi^2 + 4phi - v*phi - 3v"


class NotReduced(ValueError):
    """The class has a nonzero constant term, so it is not in the reduced ring."""


_V = Polynomial.var(BASIS_VARS, "v")
_X = Polynomial.var(BASIS_VARS, "x")


def to_vx(expr: str | Polynomial) -> Polynomial:
    """Rewrite an expression in v, phi, x, delta as a polynomial in (v, x)."""
    if isinstance(expr, str):
        expr = parse(expr, SYMBOLS)
    if expr.variables == BASIS_VARS:
        return expr
    one = Polynomial.constant(BASIS_VARS, 1)
    phi = _X - _V
    delta = parse(DELTA_IN_V_PHI, ("v", "phi")).substitute({"v": _V, "phi": phi}, one)
    values = {"v": _V, "phi": phi, "x": _X, "delta": delta}
    return expr.substitute(values, one)


def to_character(expr: str | Polynomial) -> VirtualCharacter:
    """Image of a class under v -> d1 - 1, phi -> d3 - 3."""
    el = s4_elements()
    if isinstance(expr, str):
        expr = parse(expr, SYMBOLS)
    return evaluate(expr, {k: el[k] for k in expr.variables if k in el})


@dataclass(frozen=True)
class RingPresentation:
    generators: tuple[tuple[str, int], ...]
    relations: tuple[str, ...]

    def relation_polynomials(self) -> list[Polynomial]:
        return [to_vx(r) for r in self.relations]

    def check_relations(self) -> list[bool]:
        return [to_character(r).is_zero() for r in self.relations]


THEOREM1 = RingPresentation(generators=(("v", 2), ("x", 4)), relations=THEOREM1_RELATIONS)


def verify_theorem1() -> dict[str, bool]:
    """Each relation of the presentation vanishes as a character of S4."""
    return dict(zip(THEOREM1.relations, THEOREM1.check_relations()))


def monomials_up_to(weight: int) -> list[tuple[int, int]]:
    """Exponent pairs (a, b) with 2a + 4b <= weight, ordered by weight then a descending."""
    out = [
        (a, b)
        for b in range(weight // 4 + 1)
        for a in range((weight - 4 * b) // 2 + 1)
    ]
    out.sort(key=lambda m: (2 * m[0] + 4 * m[1], -m[0]))
    return out


def monomial_weight(m: Sequence[int]) -> int:
    return sum(a * w for a, w in zip(m, WEIGHTS))


@dataclass(frozen=True)
class Summand:
    order: int
    generator: str


@dataclass(frozen=True)
class FiltrationQuotient:
    degree: int
    summands: tuple[Summand, ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(s.order for s in self.summands)

    def __str__(self):
        return " + ".join(f"Z{s.order}" for s in self.summands) or "0"


class TruncatedKRing:
    """Z[v, x]/(I + monomials of weight > 2N), restricted to positive weight."""

    def __init__(self, presentation: RingPresentation, truncation_degree: int):
        if truncation_degree < 0 or truncation_degree % 2:
            raise ValueError("truncation degree must be a nonnegative even integer")
        self.presentation = presentation
        self.truncation_degree = truncation_degree
        self.basis: tuple[tuple[int, int], ...] = tuple(
            m for m in monomials_up_to(truncation_degree) if m != (0, 0)
        )
        self._index = {m: i for i, m in enumerate(self.basis)}
        rows = []
        rels = presentation.relation_polynomials()
        for r in rels:
            if r.constant_term():
                raise ValueError("relations must have zero constant term")
            for a, b in monomials_up_to(truncation_degree):
                row = self._vector(r * (_V ** a) * (_X ** b))
                if any(row):
                    rows.append(row)
        self.group = il.AbelianGroupPresentation.from_relations(
            len(self.basis), il.hermite_normal_form(rows, len(self.basis))
        )

    @property
    def N(self) -> int:
        return self.truncation_degree // 2

    def _vector(self, p: Polynomial) -> list[int]:
        vec = [0] * len(self.basis)
        for m, c in p.terms.items():
            if monomial_weight(m) <= self.truncation_degree and m != (0, 0):
                vec[self._index[m]] += c
        return vec

    def reduce(self, expr: str | Polynomial) -> tuple[int, ...]:
        """Coordinates of a reduced class on the monomial basis (not yet modulo relations)."""
        p = to_vx(expr)
        if p.constant_term():
            raise NotReduced(f"constant term {p.constant_term()} is nonzero")
        return tuple(self._vector(p))

    def multiply(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple(self._vector(self.polynomial(a) * self.polynomial(b)))

    def polynomial(self, vec: Sequence[int]) -> Polynomial:
        return Polynomial(BASIS_VARS, {m: c for m, c in zip(self.basis, vec)})

    def equal(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return il.is_zero(self.group, [x - y for x, y in zip(a, b)])

    def order(self, expr: str | Polynomial) -> int:
        return il.element_order(self.group, self.reduce(expr))

    @cached_property
    def structure(self) -> tuple[int, ...]:
        return il.group_structure(self.group)

    @cached_property
    def group_order(self) -> int:
        return il.group_order(self.group)

    def _unit_vectors(self, pred) -> list[list[int]]:
        n = len(self.basis)
        return [[int(i == k) for i in range(n)] for k, m in enumerate(self.basis) if pred(monomial_weight(m))]

    def filtration_quotient(self, j: int) -> il.AbelianGroupPresentation:
        """F_2j / F_2j+2 presented on the monomials of weight exactly 2j."""
        if not 1 <= j <= self.N:
            raise ValueError(f"degree 2j = {2 * j} outside 2..{self.truncation_degree}")
        gens = self._unit_vectors(lambda w: w == 2 * j)
        sub = self._unit_vectors(lambda w: w > 2 * j)
        return il.subgroup_quotient(self.group, gens, sub)

    def weight_monomials(self, j: int) -> list[tuple[int, int]]:
        return [m for m in self.basis if monomial_weight(m) == 2 * j]

    def einfinity(self, j: int) -> FiltrationQuotient:
        q = self.filtration_quotient(j)
        monos = self.weight_monomials(j)
        summands = []
        for order, vec in il.smith_generators(q):
            gen = Polynomial(BASIS_VARS, {m: c for m, c in zip(monos, vec)})
            summands.append(Summand(order, format_polynomial(gen, _label_order)))
        return FiltrationQuotient(2 * j, tuple(summands))

    def order_in_quotient(self, expr: str | Polynomial, j: int) -> int:
        """Order of a class in F_2j / F_2j+2; the class must lie in F_2j."""
        p = to_vx(expr)
        low = [m for m in p.terms if monomial_weight(m) < 2 * j]
        if low:
            raise ValueError(f"{format_polynomial(p)} is not in filtration degree {2 * j}")
        monos = self.weight_monomials(j)
        coords = [p.terms.get(m, 0) for m in monos]
        return il.element_order(self.filtration_quotient(j), coords)


def _label_order(m):
    # x-heavy terms last, matching how the generators are usually written
    return (m[1], -m[0])


@lru_cache(maxsize=64)
def build_truncation(N: int) -> TruncatedKRing:
    """The truncated model of the reduced K-group of the 2N-skeleton."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return TruncatedKRing(THEOREM1, 2 * N)


def element_order_in_skeleton(expr: str | Polynomial, N: int) -> int:
    return build_truncation(N).order(expr)


def einfinity(j: int, N: int | None = None) -> FiltrationQuotient:
    """E_infinity in degree 2j, computed in the truncation at 2N (default N = j + 2)."""
    N = j + 2 if N is None else N
    if j < 1:
        raise ValueError("j must be positive")
    if j > N:
        raise ValueError(f"degree 2j = {2 * j} exceeds the truncation 2N = {2 * N}")
    return build_truncation(N).einfinity(j)


def power_identity_check(j: int) -> bool:
    """v^j and (-2)^(j-1) v have the same character."""
    if j < 1:
        raise ValueError("j must be positive")
    el = s4_elements()
    return (el["v"] ** j).values == ((-2) ** (j - 1) * el["v"]).values

