"""Even-degree integral cohomology of BS4 and its comparison with E_infinity.

H*(BS4) is generated by a2, a3, a4, b4 (subscript = degree) with
2 a2 = 2 a3 = 4 a4 = 3 b4 = 0.  The additive structure of H^2j is given
by an explicit table with six small cases and six cases j = 6k + r.
The 3-primary generator is written b4 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg as il
from .kring import einfinity

GENERATORS = ("a2", "a3", "a4", "b4")
DEGREES = (2, 3, 4, 4)

IDEAL_GENERATORS = ("2a2", "2a3", "4a4", "3b4", "a2*a3^(2j) - a2^(j+1)*(a4 + a2^2)^j for j >= 1")


@dataclass(frozen=True)
class CohomologySummand:
    """Z_order generated by the monomial with the given exponents; order 0 means Z."""

    order: int
    exponents: tuple[int, int, int, int]

    @property
    def degree(self) -> int:
        return sum(e * d for e, d in zip(self.exponents, DEGREES))

    @property
    def label(self) -> str:
        parts = []
        for name, e in zip(GENERATORS, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def involves_a3(self) -> bool:
        return self.exponents[1] > 0

    def __str__(self):
        return "Z" if self.order == 0 else f"Z{self.order}({self.label})"


def _z2(a2=0, a3=0, a4=0):
    return CohomologySummand(2, (a2, a3, a4, 0))


def _z4(a4):
    return CohomologySummand(4, (0, 0, a4, 0))


def _z3(b4):
    return CohomologySummand(3, (0, 0, 0, b4))


_SMALL = {
    0: [CohomologySummand(0, (0, 0, 0, 0))],
    1: [_z2(a2=1)],
    2: [_z2(a2=2), _z4(1), _z3(1)],
    3: [_z2(a2=3), _z2(a2=1, a4=1), _z2(a3=2)],
    4: [_z2(a2=4), _z2(a2=2, a4=1), _z4(2), _z3(2)],
    5: [_z2(a2=5), _z2(a2=3, a4=1), _z2(a2=1, a4=2), _z2(a3=2, a4=1)],
}


def even_cohomology(j: int) -> list[CohomologySummand]:
    """The summands of H^2j(BS4), in the order the table lists them."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j in _SMALL:
        return list(_SMALL[j])
    k, r = divmod(j, 6)
    if r == 0:
        return (
            [_z2(a2=6 * k - 2 * i, a4=i) for i in range(3 * k)]
            + [_z2(a3=4 * k - 4 * i, a4=3 * i) for i in range(k)]
            + [_z4(3 * k), _z3(3 * k)]
        )
    if r == 1:
        return (
            [_z2(a2=6 * k + 1 - 2 * i, a4=i) for i in range(3 * k + 1)]
            + [_z2(a3=4 * k - 4 * i - 2, a4=3 * i + 2) for i in range(k)]
        )
    if r == 2:
        return (
            [_z2(a2=6 * k + 2 - 2 * i, a4=i) for i in range(3 * k + 1)]
            + [_z2(a3=4 * k - 4 * i, a4=3 * i + 1) for i in range(k)]
            + [_z4(3 * k + 1), _z3(3 * k + 1)]
        )
    if r == 3:
        return (
            [_z2(a2=6 * k + 3 - 2 * i, a4=i) for i in range(3 * k + 2)]
            + [_z2(a3=4 * k + 2 - 4 * i, a4=3 * i) for i in range(k + 1)]
        )
    if r == 4:
        return (
            [_z2(a2=6 * k + 4 - 2 * i, a4=i) for i in range(3 * k + 2)]
            + [_z2(a3=4 * k - 4 * i, a4=3 * i + 2) for i in range(k)]
            + [_z4(3 * k + 2), _z3(3 * k + 2)]
        )
    return (
        [_z2(a2=6 * k + 5 - 2 * i, a4=i) for i in range(3 * k + 3)]
        + [_z2(a3=4 * k + 2 - 4 * i, a4=3 * i + 1) for i in range(k + 1)]
    )


def format_summands(summands) -> str:
    return " + ".join(str(s) for s in summands) or "0"


def isomorphism_type(orders) -> tuple[int, ...]:
    """Invariant factors of a direct sum of cyclic groups (0 for Z)."""
    orders = list(orders)
    rows = [[o if i == k else 0 for i in range(len(orders))] for k, o in enumerate(orders)]
    return il.group_structure(il.AbelianGroupPresentation.from_relations(len(orders), rows))


@dataclass(frozen=True)
class SurvivalReport:
    degree: int
    surviving: tuple[CohomologySummand, ...]
    dying: tuple[CohomologySummand, ...]
    einf_orders: tuple[int, ...]
    einf_match: bool


def survival_compare(j: int, N: int | None = None) -> SurvivalReport:
    """Split H^2j into a3-classes (which die) and the rest, and compare the
    rest with E_infinity^(2j,-2j) up to isomorphism."""
    if not 1 <= j:
        raise ValueError("j must be positive")
    N = j + 2 if N is None else N
    if N < j + 2:
        raise ValueError("truncation must be at least j + 2")
    summands = even_cohomology(j)
    dying = tuple(s for s in summands if s.involves_a3())
    surviving = tuple(s for s in summands if not s.involves_a3())
    einf = einfinity(j, N)
    match = isomorphism_type(s.order for s in surviving) == isomorphism_type(einf.orders)
    return SurvivalReport(2 * j, surviving, dying, einf.orders, match)
