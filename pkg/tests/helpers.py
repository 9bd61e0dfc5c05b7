"""Shared test fixtures and independent oracles.

The oracles here deliberately avoid the library's own fast paths: naive
full-box scans, cofactor determinants, minor-gcd elementary divisors and
subset-enumeration cone membership.  Tests compare library output against
these, never the other way round.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from ehrlev.geometry import LatticePolytope, Simplex, contains
from ehrlev.ehrhart import normalized_volume
from ehrlev.family import simplex_hn


def unit_simplex(d: int) -> Simplex:
    verts = [(0,) * d] + [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return Simplex(verts)


def reflexive_square() -> LatticePolytope:
    return LatticePolytope([(1, 0), (-1, 0), (0, 1), (0, -1)])


def unit_square() -> LatticePolytope:
    return LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])


def naive_lattice_points(p: LatticePolytope, n: int, open_: bool = False):
    """Full bounding-box scan with per-point half-space tests."""
    d = p.dim
    lows = [n * min(v[j] for v in p.vertices) for j in range(d)]
    highs = [n * max(v[j] for v in p.vertices) for j in range(d)]
    out = []
    for x in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if contains(p, x, n, open_):
            out.append(x)
    return tuple(out)


def cofactor_determinant(rows) -> int:
    """Recursive cofactor expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_determinant(minor)
    return total


def minor_gcd_divisors(rows) -> list[int]:
    """Elementary divisors via d_k = gcd(k-minors) / gcd((k−1)-minors)."""
    rows = [list(r) for r in rows]
    m, n = len(rows), len(rows[0])
    prev = 1
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, abs(cofactor_determinant(sub)))
        if g == 0:
            out.extend([0] * (min(m, n) - len(out)))
            return out
        out.append(g // prev)
        prev = g
    return out


def _solve_exact(columns, target):
    """Particular solution of sum(x_j·columns[j]) = target, or None."""
    m = len(target)
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(m)]
    pivots = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for row, c in enumerate(pivots):
        sol[c] = aug[row][k]
    return sol


def in_cone_caratheodory(vectors, target) -> bool:
    """Cone membership by enumerating small linearly independent subsets."""
    vectors = [tuple(v) for v in vectors]
    m = len(target)
    if all(x == 0 for x in target):
        return True
    for size in range(1, min(m, len(vectors)) + 1):
        for subset in combinations(vectors, size):
            sol = _solve_exact(subset, target)
            if sol is not None and all(x >= 0 for x in sol):
                # verify: the solver may have used dependent columns
                recon = [
                    sum(sol[j] * subset[j][i] for j in range(size)) for i in range(m)
                ]
                if all(a == b for a, b in zip(recon, target)):
                    return True
    return False


def random_simplex(rng: random.Random, dim: int, coord_bound: int, volume_cap: int) -> Simplex:
    while True:
        verts = [
            tuple(rng.randint(-coord_bound, coord_bound) for _ in range(dim))
            for _ in range(dim + 1)
        ]
        try:
            s = Simplex(verts)
        except ValueError:
            continue
        if normalized_volume(s) <= volume_cap:
            return s


def simplex_corpus(seed: int, total: int, volume_cap: int = 60):
    """Seeded mixed-dimension corpus: dims 2, 3 and 4 in rotation."""
    rng = random.Random(seed)
    bounds = {2: 6, 3: 4, 4: 3}
    out = []
    for i in range(total):
        dim = (2, 3, 4)[i % 3]
        out.append(random_simplex(rng, dim, bounds[dim], volume_cap))
    return out


def family_grid(limit: int = 5):
    return [simplex_hn(h, n) for h in range(1, limit + 1) for n in range(1, limit + 1)]
