"""Truncated K-rings of lens spaces and pullbacks of S4 classes to them.

The reduced K-group of the 2m-skeleton of BZ_n is modelled as
Z[mu]/((1 + mu)^n - 1, mu^(m+1)) on the basis mu, ..., mu^m, where
mu = eta - 1.  A class of S4 pulls back along Z_n -> S4 by restricting
d1 and d3 to the cyclic subgroup and sending eta^k to (1 + mu)^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb

from . import intlinalg as il
from .kring import SYMBOLS, to_vx
from .poly import Polynomial, parse
from .repring import restrict_to_cyclic, s4_irreducibles

# generators of the cyclic subgroups of S4 used for pullbacks: (12), (123), (1234)
CYCLE_TYPES = {2: (2, 1, 1), 3: (3, 1), 4: (4,)}


@dataclass(frozen=True)
class LensRing:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 2 or self.m < 1:
            raise ValueError("need n >= 2 and m >= 1")

    @cached_property
    def relation_rows(self) -> list[list[int]]:
        # mu^k ((1 + mu)^n - 1), coefficients on mu^1..mu^m
        base = [comb(self.n, i) for i in range(1, self.n + 1)]
        rows = []
        for k in range(self.m):
            row = [0] * self.m
            for i, c in enumerate(base):
                if k + i < self.m:
                    row[k + i] = c
            rows.append(row)
        return il.hermite_normal_form(rows, self.m)

    @cached_property
    def group(self) -> il.AbelianGroupPresentation:
        return il.AbelianGroupPresentation.from_relations(self.m, self.relation_rows)

    def structure(self) -> tuple[int, ...]:
        return il.group_structure(self.group)

    def order(self) -> int:
        return il.group_order(self.group)

    def element(self, coeffs) -> LensElement:
        return LensElement(self, tuple(coeffs))

    def one_plus_mu_power(self, k: int) -> LensElement:
        """(1 + mu)^k - 1 expanded binomially and truncated."""
        return self.element(comb(k, i) if i <= k else 0 for i in range(1, self.m + 1))


@dataclass(frozen=True)
class LensElement:
    ring: LensRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ring.m:
            raise ValueError(f"expected {self.ring.m} coefficients")

    def __add__(self, other):
        if isinstance(other, int):
            if other:
                raise ValueError("only reduced classes (no constant term) live here")
            return self
        return LensElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return LensElement(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LensElement(self.ring, tuple(other * a for a in self.coeffs))
        m = self.ring.m
        out = [0] * m
        for i, a in enumerate(self.coeffs, start=1):
            for j, b in enumerate(other.coeffs, start=1):
                if i + j <= m:
                    out[i + j - 1] += a * b
        return LensElement(self.ring, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 1:
            raise ValueError("only positive powers stay in the reduced ring")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def reduced(self) -> LensElement:
        """Canonical representative modulo the ring relations."""
        return LensElement(self.ring, il.reduce_mod_lattice(self.coeffs, self.ring.relation_rows))

    def order(self) -> int:
        return il.element_order(self.ring.group, self.coeffs)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs, start=1):
            if not c:
                continue
            mono = "mu" if k == 1 else f"mu^{k}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) or "0"


@lru_cache(maxsize=None)
def build_lens(n: int, m: int) -> LensRing:
    if n > 12 or m > 12:
        raise ValueError("n and m are limited to 12")
    return LensRing(n, m)


def _restricted_generator(name: str, n: int, ring: LensRing) -> LensElement:
    """Pullback of the reduced class (rep - dim) to the lens ring."""
    rep = s4_irreducibles()[name]
    dec = restrict_to_cyclic(rep, CYCLE_TYPES[n])
    out = ring.element((0,) * ring.m)
    for k, mult in enumerate(dec.multiplicities):
        out = out + mult * ring.one_plus_mu_power(k)
    return out


def pullback_from_s4(expr: str | Polynomial, n: int, m: int) -> LensElement:
    """Raw pullback of a reduced class of S4 along Z_n -> S4 (not reduced)."""
    if n not in CYCLE_TYPES:
        raise ValueError("pullbacks are defined for n in {2, 3, 4}")
    ring = build_lens(n, m)
    if isinstance(expr, str):
        expr = parse(expr, SYMBOLS)
    p = to_vx(expr)
    if p.constant_term():
        raise ValueError("only reduced classes can be pulled back")
    v = _restricted_generator("d1", n, ring)
    phi = _restricted_generator("d3", n, ring)
    x = phi + v
    out = ring.element((0,) * ring.m)
    for (a, b), c in p.terms.items():
        factors = [f ** e for f, e in ((v, a), (x, b)) if e]
        term = factors[0]
        for f in factors[1:]:
            term = term * f
        out = out + c * term
    return out


def pullback_order(expr: str | Polynomial, n: int, m: int) -> int:
    return pullback_from_s4(expr, n, m).order()

