"""Exact integer and rational linear algebra.

Python ints are the unbounded integer scalar type and ``fractions.Fraction``
the rational type (always reduced, positive denominator), so every routine
here is exact at any input size.  Everything is pure and immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from .errors import DimensionMismatchError, InternalConsistencyError


class IntMatrix:
    """Immutable rectangular matrix of unbounded integers."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionMismatchError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("ragged rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.entries))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("matrix product shape mismatch")
        cols = list(zip(*other.entries))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]
        )

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.entries))})"


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise DimensionMismatchError("determinant needs a square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
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
                # exact division is guaranteed by the Bareiss identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_rational(m: IntMatrix, b) -> tuple[Fraction, ...] | None:
    """Solve m·x = b exactly; None when m is singular."""
    if m.rows != m.cols:
        raise DimensionMismatchError("solve needs a square matrix")
    if len(b) != m.rows:
        raise DimensionMismatchError("right-hand side length mismatch")
    n = m.rows
    aug = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(m.entries, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(row[n] for row in aug)


def rank(m: IntMatrix) -> int:
    """Rank over the rationals."""
    a = [[Fraction(x) for x in row] for row in m.entries]
    r = 0
    for col in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][col]
        a[r] = [x / pv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m.rows:
            break
    return r


def smith_decomposition(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (d, u, v) with d = u·m·v in Smith normal form.

    u and v are unimodular; the diagonal of d is nonnegative and each entry
    divides the next.
    """
    nrows, ncols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def add_row(dst, src, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(nrows, ncols)):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            stray = [(i, t) for i in range(t + 1, nrows) if a[i][t]]
            stray += [(t, j) for j in range(t + 1, ncols) if a[t][j]]
            if stray:
                # a remainder strictly smaller than the pivot appeared; promote it
                i, j = min(stray, key=lambda p: abs(a[p[0]][p[1]]))
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            if a[t][t] < 0:
                negate_row(t)
            p = a[t][t]
            bad = next(
                (
                    i
                    for i in range(t + 1, nrows)
                    if any(a[i][j] % p for j in range(t + 1, ncols))
                ),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
    return IntMatrix(a), IntMatrix(u), IntMatrix(v)


def smith_diagonal(m: IntMatrix) -> list[int]:
    """Diagonal of the Smith normal form (elementary divisors)."""
    d, _, _ = smith_decomposition(m)
    return [d.entries[i][i] for i in range(min(m.rows, m.cols))]


def invert_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant ±1."""
    if m.rows != m.cols:
        raise DimensionMismatchError("inverse needs a square matrix")
    n = m.rows
    cols = []
    for j in range(n):
        sol = solve_rational(m, [int(i == j) for i in range(n)])
        if sol is None:
            raise DimensionMismatchError("matrix is singular")
        if any(x.denominator != 1 for x in sol):
            raise InternalConsistencyError("matrix is not unimodular")
        cols.append([int(x) for x in sol])
    return IntMatrix(zip(*cols))


def rational_inverse(m: IntMatrix) -> list[list[Fraction]]:
    """Exact inverse of a nonsingular integer matrix, as Fraction rows."""
    if m.rows != m.cols:
        raise DimensionMismatchError("inverse needs a square matrix")
    n = m.rows
    cols = []
    for j in range(n):
        sol = solve_rational(m, [int(i == j) for i in range(n)])
        if sol is None:
            raise DimensionMismatchError("matrix is singular")
        cols.append(sol)
    return [list(row) for row in zip(*cols)]


def right_kernel_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of {x in Z^cols : m·x = 0}, one primitive vector per column."""
    d, _, v = smith_decomposition(m)
    r = sum(1 for i in range(min(m.rows, m.cols)) if d.entries[i][i] != 0)
    return [v.column(j) for j in range(r, m.cols)]


def solve_left_integer(m: IntMatrix, x, smith=None) -> tuple[int, ...] | None:
    """Solve z·m = x over the integers; None when x is outside the row lattice.

    Pass a precomputed smith_decomposition(m) triple to amortize repeated
    queries against the same matrix.
    """
    if len(x) != m.cols:
        raise DimensionMismatchError("vector length mismatch")
    d, u, v = smith if smith is not None else smith_decomposition(m)
    c = [sum(x[i] * v.entries[i][j] for i in range(m.cols)) for j in range(m.cols)]
    r = min(m.rows, m.cols)
    y = [0] * m.rows
    for i in range(m.cols):
        di = d.entries[i][i] if i < r else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di:
                return None
            y[i] = c[i] // di
    return tuple(
        sum(y[i] * u.entries[i][j] for i in range(m.rows)) for j in range(m.rows)
    )


def _primitive(vec) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in vec)


def has_nonneg_combination(vectors, target) -> bool:
    """Exact feasibility of sum(l_i · vectors[i]) = target with all l_i >= 0.

    Phase-one simplex with Bland's rule over Fractions; termination and
    exactness are unconditional.
    """
    m = len(target)
    vecs = [tuple(v) for v in vectors]
    for v in vecs:
        if len(v) != m:
            raise DimensionMismatchError("vector length mismatch")
    if not vecs:
        return all(x == 0 for x in target)
    n = len(vecs)
    tab = []
    for r in range(m):
        coeffs = [Fraction(v[r]) for v in vecs]
        b = Fraction(target[r])
        if b < 0:
            coeffs = [-c for c in coeffs]
            b = -b
        tab.append(coeffs + [Fraction(int(i == r)) for i in range(m)] + [b])
    basis = [n + r for r in range(m)]
    total = n + m
    while True:
        in_basis = set(basis)
        entering = None
        for j in range(total):
            if j in in_basis:
                continue
            z = sum(tab[r][j] for r in range(m) if basis[r] >= n)
            cost = 1 if j >= n else 0
            if cost - z < 0:
                entering = j
                break
        if entering is None:
            return sum(tab[r][-1] for r in range(m) if basis[r] >= n) == 0
        leave = None
        best = None
        for r in range(m):
            if tab[r][entering] > 0:
                ratio = tab[r][-1] / tab[r][entering]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave is None:
            # cannot happen in phase one (objective bounded below by zero)
            raise InternalConsistencyError("unbounded phase-one simplex")
        piv = tab[leave][entering]
        tab[leave] = [x / piv for x in tab[leave]]
        pivot_row = tab[leave]
        for r in range(m):
            if r != leave and tab[r][entering]:
                f = tab[r][entering]
                tab[r] = [x - f * y for x, y in zip(tab[r], pivot_row)]
        basis[leave] = entering


def has_convex_combination(points, target) -> bool:
    """Is target a convex combination of the given points?"""
    lifted = [tuple(p) + (1,) for p in points]
    return has_nonneg_combination(lifted, tuple(target) + (1,))


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention 0 for n < k or k < 0."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)
