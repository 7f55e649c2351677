"""Exact integer linear algebra.

Smith normal form with unimodular transforms, finitely generated abelian
groups given as cokernels of relation matrices, membership and element
order queries.  Everything is done with Python ints, so there is no
overflow no matter how large intermediate entries become.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

INFINITY = math.inf
"""Order of an element of infinite order."""


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionError("column count needed for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(int(a) for r in rows for a in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        a, b = self.to_rows(), other.to_rows()
        bt = list(zip(*b)) if b else [()] * other.cols
        out = [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]
        return IntMatrix.from_rows(out, other.cols)

    def is_diagonal(self) -> bool:
        return all(
            self[i, j] == 0
            for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    @classmethod
    def parse(cls, text: str) -> IntMatrix:
        """Read the plain-text exchange format.

        The first line holds ``rows cols``; each following non-blank line is
        one row of whitespace-separated integers.
        """
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines or len(lines[0]) != 2:
            raise ValueError("first line must be 'rows cols'")
        rows, cols = int(lines[0][0]), int(lines[0][1])
        body = lines[1:]
        if len(body) != rows:
            raise DimensionError(f"expected {rows} rows, got {len(body)}")
        return cls.from_rows([[int(t) for t in ln] for ln in body], cols)

    def format(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(a) for a in r) for r in self.to_rows()]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SmithDecomposition:
    """``left @ A @ right`` is diagonal with diagonal ``d``."""

    d: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    def diagonal_matrix(self) -> IntMatrix:
        m, n = self.left.rows, self.right.cols
        return IntMatrix.from_rows(
            [[self.d[i] if i == j and i < len(self.d) else 0 for j in range(n)] for i in range(m)],
            n,
        )

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x != 0)


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for r in a:
        r[i], r[j] = r[j], r[i]


def _add_row(a, src, dst, k):
    # row[dst] += k * row[src]
    rs, rd = a[src], a[dst]
    for c in range(len(rd)):
        rd[c] += k * rs[c]


def _add_col(a, src, dst, k):
    for r in a:
        r[dst] += k * r[src]


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms.

    Pivots on the entry of smallest absolute value in the remaining block,
    ties broken by the lowest (row, column) index, so the transforms are
    reproducible.
    """
    m, n = a.rows, a.cols
    s = a.to_rows()
    left = IntMatrix.identity(m).to_rows()
    # kept transposed so column operations become row operations
    right_t = IntMatrix.identity(n).to_rows()

    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] != 0 and (pivot is None or abs(s[i][j]) < abs(s[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            _swap_rows(s, t, pi)
            _swap_rows(left, t, pi)
        if pj != t:
            _swap_cols(s, t, pj)
            _swap_rows(right_t, t, pj)

        p = s[t][t]
        dirty = False
        for i in range(t + 1, m):
            if s[i][t]:
                q = s[i][t] // p
                _add_row(s, t, i, -q)
                _add_row(left, t, i, -q)
                dirty |= s[i][t] != 0
        for j in range(t + 1, n):
            if s[t][j]:
                q = s[t][j] // p
                _add_col(s, t, j, -q)
                _add_row(right_t, t, j, -q)
                dirty |= s[t][j] != 0
        if dirty:
            # a smaller remainder now exists in row or column t; re-pivot
            continue

        bad = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % p),
            None,
        )
        if bad is not None:
            _add_row(s, bad, t, 1)
            _add_row(left, bad, t, 1)
            continue

        if p < 0:
            s[t] = [-x for x in s[t]]
            left[t] = [-x for x in left[t]]
        t += 1

    d = tuple(s[i][i] for i in range(min(m, n)))
    return SmithDecomposition(
        d=d,
        left=IntMatrix.from_rows(left, m),
        right=IntMatrix.from_rows(right_t, n).transpose(),
    )


def hermite_normal_form(vectors: Iterable[Sequence[int]], dim: int) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Returns the nonzero rows: echelon form, positive pivots, entries above
    each pivot reduced into ``[0, pivot)``.  Two generating sets span the
    same lattice iff their Hermite forms agree.
    """
    a = [list(v) for v in vectors]
    for v in a:
        if len(v) != dim:
            raise DimensionError(f"vector of length {len(v)}, expected {dim}")
    r = 0
    for c in range(dim):
        # Euclid down column c among rows r..end
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(a[i][c]), i))
            a[r], a[i0] = a[i0], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    done &= a[i][c] == 0
            if done:
                break
        if r < len(a) and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    return a[:r]


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """The group ``Z^rank / (row span of relations)``."""

    rank: int
    relations: IntMatrix = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.relations is None:
            object.__setattr__(self, "relations", IntMatrix.zeros(0, self.rank))
        if self.relations.cols != self.rank:
            raise DimensionError(
                f"relations have {self.relations.cols} columns, rank is {self.rank}"
            )

    @classmethod
    def from_relations(cls, rank: int, rows: Iterable[Sequence[int]]) -> AbelianGroupPresentation:
        return cls(rank, IntMatrix.from_rows(list(rows), rank))

    def smith(self) -> SmithDecomposition:
        return _cached_smith(self)


_SMITH_CACHE: dict[AbelianGroupPresentation, SmithDecomposition] = {}


def _cached_smith(p: AbelianGroupPresentation) -> SmithDecomposition:
    # presentations are immutable, so a racing double computation is harmless
    dec = _SMITH_CACHE.get(p)
    if dec is None:
        dec = smith_normal_form(p.relations)
        if len(_SMITH_CACHE) > 4096:
            _SMITH_CACHE.clear()
        _SMITH_CACHE[p] = dec
    return dec


def group_structure(p: AbelianGroupPresentation) -> tuple[int, ...]:
    """Invariant factors of the cokernel.

    Trivial factors are dropped; each free summand is reported as ``0``
    and comes last, so the result is a divisibility chain.
    """
    d = p.smith().d
    torsion = [x for x in d if x > 1]
    free = p.rank - sum(1 for x in d if x != 0)
    return tuple(torsion) + (0,) * free


def group_order(p: AbelianGroupPresentation) -> int | float:
    inv = group_structure(p)
    if 0 in inv:
        return INFINITY
    return math.prod(inv)


def _check_len(p: AbelianGroupPresentation, e: Sequence[int]) -> None:
    if len(e) != p.rank:
        raise DimensionError(f"vector of length {len(e)} in a group of rank {p.rank}")


def _smith_coords(p: AbelianGroupPresentation, e: Sequence[int]) -> list[int]:
    r = p.smith().right
    return [sum(e[k] * r[k, i] for k in range(p.rank)) for i in range(p.rank)]


def element_order(p: AbelianGroupPresentation, e: Sequence[int]) -> int | float:
    """Least ``k >= 1`` with ``k*e`` in the relation lattice, or ``INFINITY``."""
    _check_len(p, e)
    d = p.smith().d
    order = 1
    for i, f in enumerate(_smith_coords(p, e)):
        di = d[i] if i < len(d) else 0
        if di == 0:
            if f != 0:
                return INFINITY
        else:
            order = math.lcm(order, di // math.gcd(di, f))
    return order


def is_zero(p: AbelianGroupPresentation, e: Sequence[int]) -> bool:
    return element_order(p, e) == 1


def canonical_coords(p: AbelianGroupPresentation, e: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of ``e`` on the invariant-factor generators.

    Entry ``i`` is reduced modulo the ``i``-th invariant factor (left as is
    on free summands); trivial factors are omitted.  Two vectors give the
    same coordinates iff they are equal in the group.
    """
    _check_len(p, e)
    d = p.smith().d
    out = []
    for i, f in enumerate(_smith_coords(p, e)):
        di = d[i] if i < len(d) else 0
        if di == 1:
            continue
        out.append(f % di if di else f)
    return tuple(out)


def smith_generators(p: AbelianGroupPresentation) -> list[tuple[int, tuple[int, ...]]]:
    """Pairs ``(order, vector)`` realizing the invariant-factor decomposition.

    The vectors are the rows of the inverse right transform; the group is
    the direct sum of the cyclic subgroups they generate.
    """
    dec = p.smith()
    inv = _unimodular_inverse(dec.right)
    out = []
    for i in range(p.rank):
        di = dec.d[i] if i < len(dec.d) else 0
        if di != 1:
            out.append((di, inv.row(i)))
    out.sort(key=lambda t: (t[0] == 0, t[0]))
    return out


def _unimodular_inverse(u: IntMatrix) -> IntMatrix:
    dec = smith_normal_form(u)
    if any(x != 1 for x in dec.d):
        raise ValueError("matrix is not unimodular")
    # left @ u @ right = I  =>  u^-1 = right @ left
    return dec.right @ dec.left


def integer_left_kernel(a: IntMatrix) -> list[tuple[int, ...]]:
    """A basis of ``{y : y @ a = 0}`` over the integers."""
    dec = smith_normal_form(a)
    return [dec.left.row(i) for i in range(dec.rank, a.rows)]


def subgroup_quotient(
    p: AbelianGroupPresentation,
    gens: Sequence[Sequence[int]],
    sub_gens: Sequence[Sequence[int]],
) -> AbelianGroupPresentation:
    """Present ``(<gens> + R) / (<sub_gens> + R)`` on the generators ``gens``.

    ``R`` is the relation lattice of ``p``.  The result has one generator per
    entry of ``gens``; its relations are the integer combinations of
    ``gens`` that fall into ``<sub_gens> + R``.
    """
    for v in list(gens) + list(sub_gens):
        _check_len(p, v)
    k = len(gens)
    stacked = [list(g) for g in gens] + [list(h) for h in sub_gens] + p.relations.to_rows()
    if not stacked:
        return AbelianGroupPresentation(0)
    kernel = integer_left_kernel(IntMatrix.from_rows(stacked, p.rank))
    rows = hermite_normal_form((y[:k] for y in kernel), k)
    return AbelianGroupPresentation.from_relations(k, rows)


def reduce_mod_lattice(vec: Sequence[int], hnf: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Canonical representative of ``vec`` modulo a lattice in Hermite form.

    At every pivot column the entry is brought into ``[0, pivot)``.
    """
    out = list(vec)
    for row in hnf:
        c = next(i for i, a in enumerate(row) if a)
        q = out[c] // row[c]
        if q:
            out = [x - q * y for x, y in zip(out, row)]
    return tuple(out)
