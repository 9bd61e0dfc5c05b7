"""Lattice polytopes with exact facet descriptions and point enumeration.

Points are plain tuples of ints, always compared and reported in
lexicographic order.  A polytope stores its extreme vertices and derives a
half-space representation on demand; dilation enumeration walks the integer
bounding box, tightening the last coordinate per facet so only feasible
columns are visited.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from .errors import DegenerateGeometryError, DimensionMismatchError
from .intlinalg import (
    IntMatrix,
    determinant,
    has_convex_combination,
    rank,
    right_kernel_basis,
    smith_decomposition,
    solve_rational,
)

Point = tuple[int, ...]


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Halfspace:
    """The set {x : <normal, x> <= offset} with a primitive integer normal."""

    normal: Point
    offset: int

    def __post_init__(self):
        g = 0
        for x in self.normal:
            g = gcd(g, x)
        if g != 1:
            raise ValueError("halfspace normal must be primitive and nonzero")

    def slack(self, x: Point, scale: int = 1) -> int:
        """scale·offset − <normal, x>; nonnegative inside the scaled halfspace."""
        return scale * self.offset - _dot(self.normal, x)


def _affine_rank(points) -> int:
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
    return rank(IntMatrix(diffs))


class LatticePolytope:
    """Convex hull of integer points, stored by its extreme vertices.

    The constructor deduplicates the input and discards points that are
    convex combinations of the others, so ``vertices`` is always the exact
    vertex set.  Instances are immutable; facet and enumeration results are
    cached on first use.  ``was_normalized`` records that the instance was
    produced by re-expressing a lower-dimensional input in a lattice basis
    of its affine span.
    """

    def __init__(self, points, *, was_normalized: bool = False):
        pts = sorted(set(tuple(int(x) for x in p) for p in points))
        if not pts:
            raise ValueError("polytope needs at least one point")
        dim = len(pts[0])
        if dim == 0:
            raise DegenerateGeometryError("ambient dimension must be positive")
        if any(len(p) != dim for p in pts):
            raise DimensionMismatchError("points of mixed dimension")
        self.dim = dim
        self.vertices = tuple(self._extreme_subset(pts))
        self.was_normalized = was_normalized
        self._facets: tuple[Halfspace, ...] | None = None
        self._point_cache: dict[tuple[int, bool], tuple[Point, ...]] = {}
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False) and name not in ("_facets",):
            raise AttributeError("LatticePolytope is immutable")
        super().__setattr__(name, value)

    @staticmethod
    def _extreme_subset(pts):
        if len(pts) <= 2:
            return pts
        keep = []
        for i, p in enumerate(pts):
            others = pts[:i] + pts[i + 1 :]
            if not has_convex_combination(others, p):
                keep.append(p)
        return keep

    @property
    def facets(self) -> tuple[Halfspace, ...]:
        if self._facets is None:
            self._facets = facet_representation(self)
        return self._facets

    def is_full_dimensional(self) -> bool:
        return _affine_rank(self.vertices) == self.dim

    def __eq__(self, other):
        return (
            isinstance(other, LatticePolytope)
            and self.dim == other.dim
            and sorted(self.vertices) == sorted(other.vertices)
        )

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.vertices))))

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, vertices={list(self.vertices)})"


class Simplex(LatticePolytope):
    """A lattice polytope with exactly dim+1 affinely independent vertices.

    Vertex order is preserved: barycentric coordinates and box-point
    residues refer to it.
    """

    def __init__(self, vertices, *, was_normalized: bool = False):
        verts = tuple(tuple(int(x) for x in v) for v in vertices)
        if not verts:
            raise ValueError("simplex needs vertices")
        dim = len(verts[0])
        if len(verts) != dim + 1:
            raise DegenerateGeometryError(
                f"simplex in dimension {dim} needs exactly {dim + 1} vertices"
            )
        if any(len(v) != dim for v in verts):
            raise DimensionMismatchError("points of mixed dimension")
        if len(set(verts)) != len(verts):
            raise DegenerateGeometryError("repeated vertex")
        if determinant(edge_matrix(verts)) == 0:
            raise DegenerateGeometryError("vertices are affinely dependent")
        self.dim = dim
        self.vertices = verts
        self.was_normalized = was_normalized
        self._facets = None
        self._point_cache = {}
        self._frozen = True


def edge_matrix(vertices) -> IntMatrix:
    """Rows v_i − v_0 for i = 1..d."""
    verts = list(vertices)
    base = verts[0]
    return IntMatrix([tuple(a - b for a, b in zip(v, base)) for v in verts[1:]])


def as_simplex(p: LatticePolytope) -> Simplex | None:
    """View p as a Simplex when it has d+1 affinely independent vertices."""
    if isinstance(p, Simplex):
        return p
    if len(p.vertices) != p.dim + 1:
        return None
    try:
        return Simplex(p.vertices, was_normalized=p.was_normalized)
    except DegenerateGeometryError:
        return None


def facet_representation(p: LatticePolytope) -> tuple[Halfspace, ...]:
    """Minimal half-space description of a full-dimensional polytope.

    Candidate hyperplanes run through every d-subset of vertices; one is a
    facet exactly when all vertices lie weakly on one side and the tight
    vertices affinely span the hyperplane.
    """
    d = p.dim
    verts = p.vertices
    if not p.is_full_dimensional():
        raise DegenerateGeometryError(
            "polytope is not full-dimensional; normalize it first"
        )
    if d == 1:
        coords = [v[0] for v in verts]
        return (
            Halfspace((-1,), -min(coords)),
            Halfspace((1,), max(coords)),
        )
    found: set[tuple[Point, int]] = set()
    for subset in combinations(verts, d):
        base = subset[0]
        diffs = [tuple(a - b for a, b in zip(q, base)) for q in subset[1:]]
        kernel = right_kernel_basis(IntMatrix(diffs))
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        b = _dot(normal, base)
        values = [_dot(normal, v) for v in verts]
        if all(val <= b for val in values):
            pass
        elif all(val >= b for val in values):
            normal = tuple(-x for x in normal)
            b = -b
            values = [-v for v in values]
        else:
            continue
        tight = [v for v, val in zip(verts, values) if val == b]
        if _affine_rank(tight) != d - 1:
            continue
        found.add((normal, b))
    return tuple(Halfspace(n, b) for n, b in sorted(found))


def contains(p: LatticePolytope, x, n: int, open_: bool = False) -> bool:
    """Membership of x in the dilation n·p (strict interior when open_)."""
    if n <= 0:
        raise ValueError("dilation factor must be positive")
    if len(x) != p.dim:
        raise DimensionMismatchError("point has wrong dimension")
    if open_:
        return all(f.slack(x, n) > 0 for f in p.facets)
    return all(f.slack(x, n) >= 0 for f in p.facets)


def barycentric(s: Simplex, x, height: int) -> tuple[Fraction, ...]:
    """The unique (r_0..r_d) with sum r_i = height and sum r_i·v_i = x."""
    if len(x) != s.dim:
        raise DimensionMismatchError("point has wrong dimension")
    cols = s.vertices
    system = IntMatrix(
        [[cols[i][j] for i in range(len(cols))] for j in range(s.dim)]
        + [[1] * len(cols)]
    )
    sol = solve_rational(system, list(x) + [height])
    assert sol is not None  # nondegenerate simplex: system is nonsingular
    return sol


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def lattice_points(p: LatticePolytope, n: int, open_: bool = False) -> tuple[Point, ...]:
    """All lattice points of n·p (or its interior), lexicographically sorted.

    Scans the integer bounding box of n·p; for each prefix of the first d−1
    coordinates the facet inequalities pin the last coordinate to an exact
    integer interval, so no candidate outside n·p is ever visited.
    """
    if n <= 0:
        raise ValueError("dilation factor must be positive")
    key = (n, open_)
    cached = p._point_cache.get(key)
    if cached is not None:
        return cached
    d = p.dim
    facets = p.facets
    lows = [n * min(v[j] for v in p.vertices) for j in range(d)]
    highs = [n * max(v[j] for v in p.vertices) for j in range(d)]
    out: list[Point] = []
    prefix_ranges = [range(lows[j], highs[j] + 1) for j in range(d - 1)]
    for prefix in product(*prefix_ranges):
        lo, hi = lows[d - 1], highs[d - 1]
        feasible = True
        for f in facets:
            a = f.normal
            rhs = n * f.offset - sum(a[j] * prefix[j] for j in range(d - 1))
            ad = a[d - 1]
            if ad == 0:
                if rhs < 0 or (open_ and rhs == 0):
                    feasible = False
                    break
            elif ad > 0:
                hi = min(hi, (rhs - 1) // ad if open_ else rhs // ad)
            else:
                # a_d < 0: the inequality bounds x_d from below
                lo = max(lo, rhs // ad + 1 if open_ else _ceil_div(-rhs, -ad))
            if lo > hi:
                feasible = False
                break
        if not feasible:
            continue
        out.extend(prefix + (xd,) for xd in range(lo, hi + 1))
    result = tuple(out)
    p._point_cache[key] = result
    return result


def minkowski_sum_points(a, b) -> tuple[Point, ...]:
    """{x + y : x in a, y in b}, deduplicated and sorted."""
    aa = [tuple(p) for p in a]
    bb = [tuple(p) for p in b]
    if aa and bb and len(aa[0]) != len(bb[0]):
        raise DimensionMismatchError("summand dimensions differ")
    return tuple(sorted({tuple(x + y for x, y in zip(p, q)) for p in aa for q in bb}))


def normalize_points(points) -> tuple[tuple[Point, ...], bool]:
    """Re-express points in a lattice basis of their affine span.

    The span's lattice is the saturation — every point of Z^d lying on the
    real span of the differences — so dilation point counts, and with them
    every Ehrhart invariant, are preserved.  Returns the rewritten points
    plus a flag telling whether anything changed; full-dimensional inputs
    come back untouched.
    """
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if not pts:
        raise ValueError("need at least one point")
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
    ambient = len(base)
    if not diffs:
        raise DegenerateGeometryError("points span a single point")
    mat = IntMatrix(diffs)
    d, _, v = smith_decomposition(mat)
    r = sum(1 for i in range(min(mat.rows, mat.cols)) if d.entries[i][i] != 0)
    if r == 0:
        raise DegenerateGeometryError("points span a single point")
    if r == ambient:
        return tuple(pts), False
    new_pts = [(0,) * r]  # the base point itself
    for diff in diffs:
        coords = [
            sum(diff[i] * v.entries[i][j] for i in range(ambient)) for j in range(ambient)
        ]
        if any(coords[j] != 0 for j in range(r, ambient)):
            raise ValueError("point difference outside the affine span")
        new_pts.append(tuple(coords[:r]))
    return tuple(sorted(set(new_pts))), True


def polytope_to_json(p: LatticePolytope) -> dict:
    return {"schema": "1", "dim": p.dim, "vertices": [list(v) for v in p.vertices]}


def polytope_from_json(obj) -> LatticePolytope:
    """Build a polytope from {"dim": d, "vertices": [[...], ...]}.

    Lower-dimensional input is normalized into its affine span (the result
    carries was_normalized=True).
    """
    if not isinstance(obj, dict):
        raise ValueError("polytope JSON must be an object")
    dim = obj.get("dim")
    verts = obj.get("vertices")
    if not isinstance(dim, int) or dim < 1:
        raise ValueError("polytope JSON needs a positive integer 'dim'")
    if not isinstance(verts, list) or not verts:
        raise ValueError("polytope JSON needs a nonempty 'vertices' list")
    for v in verts:
        if not isinstance(v, list) or len(v) != dim or not all(isinstance(x, int) for x in v):
            raise ValueError(f"vertex {v!r} is not a length-{dim} integer vector")
    p = LatticePolytope(verts)
    if p.is_full_dimensional():
        return p
    normalized, _ = normalize_points(p.vertices)
    return LatticePolytope(normalized, was_normalized=True)
