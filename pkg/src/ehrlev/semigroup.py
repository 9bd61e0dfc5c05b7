"""Graded affine semigroups: pointedness, semi-standardness, normality.

A graded semigroup is given by generators in Z^(d+1) whose last coordinate
is a positive degree.  The module decides whether the cone over the
generators is pointed, whether every extreme ray lies in the cone of the
degree-one generators (semi-standardness), extracts the lattice polytope
spanned by the degree-one slice of the saturation, and checks normality
degree by degree up to a bound.

Cone membership uses the facet description of the cone when it is
full-dimensional, falling back to exact phase-one feasibility otherwise;
both routes are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import gcd
from typing import NamedTuple

from .errors import DimensionMismatchError
from .geometry import LatticePolytope, Point, lattice_points, normalize_points
from .intlinalg import (
    IntMatrix,
    has_nonneg_combination,
    rank,
    right_kernel_basis,
    smith_decomposition,
    solve_left_integer,
)


@dataclass(frozen=True)
class GradedSemigroup:
    """Generators in Z^(ambient_dim + 1); the last coordinate is the degree."""

    ambient_dim: int
    generators: tuple[Point, ...]

    def __init__(self, ambient_dim: int, generators):
        gens = tuple(sorted(set(tuple(int(x) for x in g) for g in generators)))
        if not gens:
            raise ValueError("semigroup needs at least one generator")
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        if any(len(g) != ambient_dim + 1 for g in gens):
            raise DimensionMismatchError(
                f"generators must have length {ambient_dim + 1} (coords plus degree)"
            )
        if any(g[-1] < 1 for g in gens):
            raise ValueError("every generator degree must be at least 1")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "generators", gens)

    @property
    def degree_one(self) -> tuple[Point, ...]:
        return tuple(g for g in self.generators if g[-1] == 1)


class SemistandardResult(NamedTuple):
    ok: bool
    violating_ray: Point | None
    reason: str


class NormalityResult(NamedTuple):
    normal_up_to_bound: bool
    witness: Point | None


def _primitive(v: Point) -> Point:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v)


@lru_cache(maxsize=None)
def _rays(c: GradedSemigroup) -> tuple[Point, ...]:
    return tuple(sorted({_primitive(g) for g in c.generators}))


@lru_cache(maxsize=None)
def _cone_facet_normals(c: GradedSemigroup) -> tuple[Point, ...] | None:
    """Inward facet normals of the cone, or None when it is not full-dimensional."""
    rays = _rays(c)
    m = c.ambient_dim + 1
    if rank(IntMatrix(rays)) < m:
        return None
    found = set()
    for subset in combinations(rays, m - 1):
        kernel = right_kernel_basis(IntMatrix(subset))
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        values = [sum(a * x for a, x in zip(normal, r)) for r in rays]
        if all(v >= 0 for v in values):
            pass
        elif all(v <= 0 for v in values):
            normal = tuple(-x for x in normal)
            values = [-v for v in values]
        else:
            continue
        tight = [r for r, v in zip(rays, values) if v == 0]
        if tight and rank(IntMatrix(tight)) == m - 1:
            found.add(normal)
    return tuple(sorted(found))


def in_cone(c: GradedSemigroup, point) -> bool:
    """Exact membership of a point in the real cone over the generators."""
    if len(point) != c.ambient_dim + 1:
        raise DimensionMismatchError("point has wrong dimension")
    normals = _cone_facet_normals(c) if is_pointed(c) else None
    if normals is not None:
        return all(sum(a * x for a, x in zip(n, point)) >= 0 for n in normals)
    return has_nonneg_combination(c.generators, point)


@lru_cache(maxsize=None)
def is_pointed(c: GradedSemigroup) -> bool:
    """True iff the cone over the generators contains no line.

    Equivalently no nonzero nonnegative combination of generators vanishes;
    positive degrees force this, but it is checked, not assumed.
    """
    k = c.ambient_dim + 1
    lifted = [g + (1,) for g in c.generators]
    return not has_nonneg_combination(lifted, (0,) * k + (1,))


def is_semistandard(c: GradedSemigroup) -> SemistandardResult:
    """Does every extreme ray of the cone lie in the cone of degree one?

    A generator spans an extreme ray iff its primitive direction is not a
    nonnegative combination of the other primitive directions.
    """
    c1 = c.degree_one
    if not c1:
        return SemistandardResult(False, None, "no degree-one generators")
    rays = _rays(c)
    for ray in rays:
        others = [r for r in rays if r != ray]
        if has_nonneg_combination(others, ray):
            continue  # not extreme
        if not has_nonneg_combination(c1, ray):
            return SemistandardResult(
                False, ray, f"extreme ray {ray} outside the degree-one cone"
            )
    return SemistandardResult(True, None, "")


@lru_cache(maxsize=None)
def _generator_matrix(c: GradedSemigroup) -> IntMatrix:
    return IntMatrix(c.generators)


@lru_cache(maxsize=None)
def _group_smith(c: GradedSemigroup):
    return smith_decomposition(_generator_matrix(c))


def in_group(c: GradedSemigroup, point) -> bool:
    """Membership in the lattice generated by the generators."""
    return (
        solve_left_integer(_generator_matrix(c), tuple(point), smith=_group_smith(c))
        is not None
    )


def saturation_slice(c: GradedSemigroup, degree: int) -> tuple[Point, ...]:
    """Lattice points of (cone over generators) ∩ (generated group) at a degree."""
    if degree < 1:
        raise ValueError("degree must be positive")
    d = c.ambient_dim
    bounds = [degree * max(abs(g[j]) for g in c.generators) for j in range(d)]
    out = []
    for coords in product(*(range(-b, b + 1) for b in bounds)):
        candidate = coords + (degree,)
        if in_group(c, candidate) and in_cone(c, candidate):
            out.append(candidate)
    return tuple(out)


def polytope_of(c: GradedSemigroup) -> LatticePolytope:
    """Lattice polytope spanned by the degree-one slice of the saturation.

    The degree coordinate is dropped; when the hull is lower-dimensional it
    is re-expressed in a lattice basis of its affine span (the result then
    carries was_normalized=True).
    """
    check = is_semistandard(c)
    if not check.ok:
        raise ValueError(f"semigroup is not semi-standard: {check.reason}")
    slice1 = saturation_slice(c, 1)
    if not slice1:
        raise ValueError("saturation has no degree-one points")
    alphas = [pt[:-1] for pt in slice1]
    if len(set(alphas)) == 1:
        raise ValueError("degree-one slice is a single point")
    hull = LatticePolytope(alphas)
    if hull.is_full_dimensional():
        return hull
    pts, _ = normalize_points(alphas)
    return LatticePolytope(pts, was_normalized=True)


def normality_check_bounded(c: GradedSemigroup, degree_bound: int) -> NormalityResult:
    """Is every saturation point up to degree_bound a sum of generators?

    Semigroup elements are accumulated degree by degree (dynamic
    programming); the witness is the lexicographically least uncovered
    point in the least failing degree.
    """
    if degree_bound < 1:
        raise ValueError("degree bound must be positive")
    d = c.ambient_dim
    reachable: dict[int, set[Point]] = {0: {(0,) * (d + 1)}}
    for n in range(1, degree_bound + 1):
        layer: set[Point] = set()
        for g in c.generators:
            prev = reachable.get(n - g[-1])
            if prev:
                layer.update(tuple(x + y for x, y in zip(p, g)) for p in prev)
        reachable[n] = layer
        for candidate in sorted(saturation_slice(c, n)):
            if candidate not in layer:
                return NormalityResult(False, candidate)
    return NormalityResult(True, None)


def lift_polytope(p: LatticePolytope) -> GradedSemigroup:
    """Degree-one lift: one generator (alpha, 1) per lattice point of p."""
    return GradedSemigroup(p.dim, [pt + (1,) for pt in lattice_points(p, 1)])


def semigroup_from_json(obj) -> GradedSemigroup:
    """Build a semigroup from {"ambient_dim": d, "generators": [[...], ...]}."""
    if not isinstance(obj, dict):
        raise ValueError("semigroup JSON must be an object")
    dim = obj.get("ambient_dim")
    gens = obj.get("generators")
    if not isinstance(dim, int) or dim < 1:
        raise ValueError("semigroup JSON needs a positive integer 'ambient_dim'")
    if not isinstance(gens, list) or not gens:
        raise ValueError("semigroup JSON needs a nonempty 'generators' list")
    for g in gens:
        if not isinstance(g, list) or len(g) != dim + 1 or not all(isinstance(x, int) for x in g):
            raise ValueError(f"generator {g!r} is not a length-{dim + 1} integer vector")
    return GradedSemigroup(dim, gens)
