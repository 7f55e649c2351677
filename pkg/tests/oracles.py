"""Slow, independent reference computations used only by the tests.

None of these touch the Smith normal form or Murnaghan-Nakayama code
they are compared against.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from fractions import Fraction


# -- permutations -----------------------------------------------------------

def cycle_type(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        length, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def class_sizes_by_enumeration(n):
    counts = {}
    for p in itertools.permutations(range(n)):
        ct = cycle_type(p)
        counts[ct] = counts.get(ct, 0) + 1
    return counts


# -- characters from permutation modules on tabloids -------------------------

def _tabloids(shape, n):
    """All ordered set partitions of range(n) into rows of the given sizes."""
    def rec(remaining, rows):
        if not rows:
            yield ()
            return
        for row in itertools.combinations(sorted(remaining), rows[0]):
            for rest in rec(remaining - set(row), rows[1:]):
                yield (frozenset(row),) + rest
    return list(rec(set(range(n)), list(shape)))


def permutation_character(shape, representatives):
    n = sum(shape)
    tabs = _tabloids(shape, n)
    out = []
    for perm in representatives:
        fixed = sum(
            1 for t in tabs
            if all(frozenset(perm[i] for i in row) == row for row in t)
        )
        out.append(fixed)
    return out


def representative(ct):
    perm, start = [], 0
    for length in ct:
        block = list(range(start, start + length))
        perm += block[1:] + block[:1]
        start += length
    return tuple(perm)


def brute_force_table(n, shapes):
    """Irreducible characters by peeling permutation characters of tabloids.

    ``shapes`` must list partitions so that any partition dominating another
    comes first (reverse-lexicographic order does).  Classes are the same
    partitions, used as cycle types.
    """
    reps = [representative(ct) for ct in shapes]
    sizes = [math.factorial(n) // _centralizer(ct) for ct in shapes]
    order = math.factorial(n)

    def inner(a, b):
        return Fraction(sum(s * x * y for s, x, y in zip(sizes, a, b)), order)

    chars = []
    for shape in shapes:
        pi = permutation_character(shape, reps)
        for chi in chars:
            c = inner(pi, chi)
            assert c.denominator == 1
            pi = [a - int(c) * b for a, b in zip(pi, chi)]
        assert inner(pi, pi) == 1
        chars.append(pi)
    return chars


def _centralizer(ct):
    out = 1
    for k in set(ct):
        m = ct.count(k)
        out *= k ** m * math.factorial(m)
    return out


# -- lattices and cokernels -------------------------------------------------

def reduce(vec, basis):
    v = list(vec)
    for row in basis:
        c = next(i for i, a in enumerate(row) if a)
        q = v[c] // row[c]
        v = [x - q * y for x, y in zip(v, row)]
    return tuple(v)


class FiniteCokernel:
    """Z^n / L for a full-rank lattice L, enumerated element by element."""

    def __init__(self, rows, dim):
        self.dim = dim
        self.basis = lattice_basis(rows, dim)
        if len(self.basis) != dim:
            raise ValueError("lattice is not of full rank")

    def canon(self, vec):
        return reduce(vec, self.basis)

    @property
    def order(self):
        return math.prod(self.basis[i][i] for i in range(self.dim))

    def element_order(self, vec, limit=10 ** 6):
        zero = (0,) * self.dim
        for k in range(1, limit):
            if self.canon([k * a for a in vec]) == zero:
                return k
        raise AssertionError("order exceeds limit")

    def elements(self):
        zero = self.canon([0] * self.dim)
        gens = [self.canon([int(i == k) for i in range(self.dim)]) for k in range(self.dim)]
        seen = {zero}
        queue = deque([zero])
        while queue:
            g = queue.popleft()
            for h in gens:
                s = self.canon([a + b for a, b in zip(g, h)])
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
        return seen

    def count_killed_by(self, m):
        zero = self.canon([0] * self.dim)
        return sum(1 for g in self.elements() if self.canon([m * a for a in g]) == zero)


def lattice_basis(rows, dim):
    """Upper-triangular basis by column-wise Euclid (no Smith form)."""
    a = [list(r) for r in rows if any(r)]
    out = []
    for c in range(dim):
        while True:
            nz = [r for r in a if r[c] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[c]))
            p = nz[0]
            for r in nz[1:]:
                q = r[c] // p[c]
                for i in range(dim):
                    r[i] -= q * p[i]
        piv = next((r for r in a if r[c] != 0), None)
        if piv is not None:
            a.remove(piv)
            if piv[c] < 0:
                piv = [-x for x in piv]
            out.append(piv)
        a = [r for r in a if any(r)]
    return out


def killed_counts(group: FiniteCokernel):
    """Number of elements killed by each divisor of the order; fixes the isomorphism type."""
    n = group.order
    zero = group.canon([0] * group.dim)
    elements = group.elements()
    return {
        m: sum(1 for g in elements if group.canon([m * a for a in g]) == zero)
        for m in range(1, n + 1) if n % m == 0
    }


def predicted_counts(invariants, n):
    return {
        m: math.prod(math.gcd(m, d) for d in invariants)
        for m in range(1, n + 1) if n % m == 0
    }


def det_laplace(m):
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * det_laplace([row[:j] + row[j + 1:] for row in m[1:]])
        for j in range(len(m))
    )


def determinantal_divisor(rows, k):
    """gcd of all k x k minors."""
    g = 0
    r, c = len(rows), len(rows[0]) if rows else 0
    for ri in itertools.combinations(range(r), k):
        for ci in itertools.combinations(range(c), k):
            g = math.gcd(g, det_laplace([[rows[i][j] for j in ci] for i in ri]))
    return g
