"""h*-vectors, a-invariants and normalized volume of lattice polytopes.

Two independent h* computations are provided.  For a simplex, the lattice
points of the half-open fundamental parallelepiped of the cone over the
lifted vertices (v_i, 1) are enumerated; the histogram of their last
("height") coordinate is the h*-vector.  For any full-dimensional polytope,
the h*-vector is recovered from the dilation point counts L(0..d) by the
standard alternating binomial transform.  The two must agree on simplices,
and the test suite holds them to that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor

from .errors import InternalConsistencyError
from .geometry import (
    LatticePolytope,
    Point,
    Simplex,
    as_simplex,
    barycentric,
    edge_matrix,
    lattice_points,
)
from .intlinalg import (
    IntMatrix,
    binomial,
    determinant,
    invert_unimodular,
    rational_inverse,
    smith_decomposition,
)


@dataclass(frozen=True)
class BoxPoint:
    """A lattice point of the half-open parallelepiped over a simplex.

    ``point`` is the projection to Z^d, ``height`` the lifted last
    coordinate, and ``residues`` the vertex coefficients r_i with
    0 <= r_i < 1, sum r_i = height and sum r_i·v_i = point.  Distinct
    heights with equal projection are distinct box points.
    """

    point: Point
    height: int
    residues: tuple[Fraction, ...]


@dataclass(frozen=True)
class HStarVector:
    """Coefficients (h*_0, ..., h*_s) of the Ehrhart series numerator."""

    coeffs: tuple[int, ...]
    dim: int

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("h* must start with 1")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("h* coefficients must be nonnegative")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("trailing zeros must be stripped")
        if self.s > self.dim:
            raise ValueError("h* degree exceeds polytope dimension")

    @property
    def s(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Sum of the coefficients (the degree of the Ehrhart ring)."""
        return sum(self.coeffs)

    @property
    def normalized_volume(self) -> int:
        return sum(self.coeffs)


def cone_matrix(s: Simplex) -> IntMatrix:
    """Rows (v_i, 1) for the vertices of s."""
    return IntMatrix([v + (1,) for v in s.vertices])


def box_points(s: Simplex, method: str = "snf") -> tuple[BoxPoint, ...]:
    """All box points of s, sorted by (height, point).

    method="snf" enumerates one representative per residue class of
    Z^(d+1) modulo the row lattice of the cone matrix (classes given by the
    Smith normal form) and folds it into the parallelepiped.  method="scan"
    walks the closed dilations height = 0..d and keeps the points whose
    vertex coefficients all satisfy 0 <= r_i < 1.  Both return the same
    multiset; the cardinality is the normalized volume.
    """
    if method == "snf":
        pts = _box_points_snf(s)
    elif method == "scan":
        pts = _box_points_scan(s)
    else:
        raise ValueError(f"unknown method {method!r}")
    return tuple(sorted(pts, key=lambda b: (b.height, b.point)))


def _box_points_snf(s: Simplex) -> list[BoxPoint]:
    d = s.dim
    g = cone_matrix(s)
    diag_mat, _, v = smith_decomposition(g)
    diag = [diag_mat.entries[i][i] for i in range(d + 1)]
    vinv = invert_unimodular(v)
    g_t_inv = rational_inverse(g.transpose())
    out = []
    for rep in product(*(range(e) for e in diag)):
        x = [
            sum(rep[i] * vinv.entries[i][j] for i in range(d + 1))
            for j in range(d + 1)
        ]
        # coefficients of x over the cone generators, then reduce mod 1
        t = [sum(row[j] * x[j] for j in range(d + 1)) for row in g_t_inv]
        floors = [floor(c) for c in t]
        residues = tuple(c - f for c, f in zip(t, floors))
        p = tuple(
            x[j] - sum(floors[i] * g.entries[i][j] for i in range(d + 1))
            for j in range(d + 1)
        )
        height = p[d]
        assert sum(residues) == height
        out.append(BoxPoint(point=p[:d], height=height, residues=residues))
    expected = abs(determinant(g))
    if len(out) != expected or len(set((b.point, b.height) for b in out)) != expected:
        raise InternalConsistencyError("parallelepiped enumeration miscounted")
    return out


def _box_points_scan(s: Simplex) -> list[BoxPoint]:
    d = s.dim
    zero = (0,) * d
    out = [BoxPoint(point=zero, height=0, residues=(Fraction(0),) * (d + 1))]
    for height in range(1, d + 1):
        for x in lattice_points(s, height):
            r = barycentric(s, x, height)
            if all(0 <= c < 1 for c in r):
                out.append(BoxPoint(point=x, height=height, residues=r))
    return out


def hstar_simplex(s: Simplex) -> HStarVector:
    """h* of a simplex as the height histogram of its box points."""
    boxes = box_points(s)
    top = max(b.height for b in boxes)
    coeffs = [0] * (top + 1)
    for b in boxes:
        coeffs[b.height] += 1
    return HStarVector(tuple(coeffs), s.dim)


def hstar_from_counts(p: LatticePolytope) -> HStarVector:
    """h* of any full-dimensional polytope from its dilation point counts."""
    d = p.dim
    counts = [1] + [len(lattice_points(p, n)) for n in range(1, d + 1)]
    coeffs = []
    for i in range(d + 1):
        h = sum((-1) ** j * binomial(d + 1, j) * counts[i - j] for j in range(i + 1))
        if h < 0:
            raise InternalConsistencyError(
                f"negative h* coefficient h_{i} = {h}; enumeration is broken"
            )
        coeffs.append(h)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return HStarVector(tuple(coeffs), d)


def a_invariant(p: LatticePolytope) -> int:
    """−(least dilation whose open interior contains a lattice point)."""
    for n in range(1, p.dim + 2):
        if lattice_points(p, n, open_=True):
            return -n
    raise InternalConsistencyError("no interior point up to dilation dim+1")


def normalized_volume(s: Simplex) -> int:
    """|det of the edge matrix| = d!·(euclidean volume)."""
    return abs(determinant(edge_matrix(s.vertices)))


def interior_count_from_hstar(h: HStarVector, n: int) -> int:
    """Interior point count of the n-th dilation predicted by reversing h*.

    Coefficient of t^n in (sum_i h*_{s−i} t^{d+1−s+i}) / (1−t)^(d+1).
    """
    d, s = h.dim, h.s
    return sum(
        h.coeffs[s - i] * binomial(n - (d + 1 - s) - i + d, d) for i in range(s + 1)
    )


def structural_violations(p: LatticePolytope, h: HStarVector | None = None) -> list[str]:
    """Check the h* identities that hold for every full-dimensional polytope.

    Returns human-readable descriptions of any violations (empty list when
    all hold): h*_0 = 1, h*_1 = |P ∩ Z^d| − d − 1, nonnegativity, the
    a-invariant relation s = d + 1 + a, and the reciprocity identity tying
    interior counts of dilations 1..d+2 to the reversed h* series.
    """
    if h is None:
        simp = as_simplex(p)
        h = hstar_simplex(simp) if simp is not None else hstar_from_counts(p)
    d = p.dim
    bad = []
    if h.coeffs[0] != 1:
        bad.append(f"h*_0 = {h.coeffs[0]} != 1")
    h1 = h.coeffs[1] if len(h.coeffs) > 1 else 0
    pts1 = len(lattice_points(p, 1))
    if h1 != pts1 - d - 1:
        bad.append(f"h*_1 = {h1} but |P∩Z^d|−d−1 = {pts1 - d - 1}")
    if any(c < 0 for c in h.coeffs):
        bad.append("negative h* coefficient")
    a = a_invariant(p)
    if h.s != d + 1 + a:
        bad.append(f"s = {h.s} but d+1+a = {d + 1 + a}")
    for n in range(1, d + 3):
        expect = interior_count_from_hstar(h, n)
        actual = len(lattice_points(p, n, open_=True))
        if expect != actual:
            bad.append(
                f"reciprocity: |{n}P°∩Z^d| = {actual} but series predicts {expect}"
            )
    return bad
