"""A parametric family of non-level 3-simplices plus a search harness.

``simplex_hn(h, n)`` builds the 3-dimensional lattice simplex with vertices
(1,1,n), (0,1,0), (0,0,1), (1,−h,−nh).  Its invariants are known in closed
form: h* = (1, h, n(h+1)), a-invariant −2, h+4 lattice points, n(h+1)
interior points of the second dilation, Cohen–Macaulay type h + n(h+1),
and it is never level — the point (1,1,1) is a degree-3 generator.

``random_search`` samples lattice simplices, injects family instances and
unimodular perturbations of them (so non-level cases are guaranteed), and
evaluates two falsification targets on every record with s = 2: the
divisibility of h*_2 by h*_1 + 1 for non-level instances, and the
feasibility condition h*_1 <= 3·h*_2 + 3 or (h*_1, h*_2) = (7, 1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import InternalConsistencyError
from .ehrhart import HStarVector, normalized_volume, structural_violations
from .geometry import Point, Simplex, lattice_points
from .levelness import LevelnessReport, build_report, report_to_json

PASS = "pass"
VACUOUS = "vacuous"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class FamilyInstance:
    """One member of the family together with its closed-form data."""

    h: int
    n: int
    simplex: Simplex
    expected_hstar: HStarVector
    expected_closed_points: tuple[Point, ...]
    expected_interior2_points: tuple[Point, ...]
    expected_witness: Point


def simplex_hn(h: int, n: int) -> FamilyInstance:
    """Family member for parameters h, n >= 1."""
    if h < 1 or n < 1:
        raise ValueError("family parameters must be positive")
    v0 = (1, 1, n)
    v1 = (0, 1, 0)
    v2 = (0, 0, 1)
    v3 = (1, -h, -n * h)
    inner = (1, 0, 0)
    closed = [v0, v1, v2, v3, inner]
    # (i/h)·v3 + ((h−i)/h)·inner for i = 1..h−1
    closed += [(1, -i, -i * n) for i in range(1, h)]
    interior2 = [(1, 1, j) for j in range(1, n + 1)]
    interior2 += [
        (1, -q, 1 - n * q - r) for q in range(h) for r in range(1, n + 1)
    ]
    return FamilyInstance(
        h=h,
        n=n,
        simplex=Simplex([v0, v1, v2, v3]),
        expected_hstar=HStarVector((1, h, n * (h + 1)), 3),
        expected_closed_points=tuple(sorted(closed)),
        expected_interior2_points=tuple(sorted(interior2)),
        expected_witness=(1, 1, 1),
    )


@dataclass(frozen=True)
class FamilyDiff:
    """Outcome of re-deriving a family member's invariants from scratch."""

    h: int
    n: int
    passed: bool
    diffs: tuple[dict, ...]


def verify_family(h: int, n: int) -> FamilyDiff:
    """Recompute every invariant of the (h, n) member and diff the closed forms."""
    inst = simplex_hn(h, n)
    s = inst.simplex
    report = build_report(s)
    checks = [
        ("hstar", (1, h, n * (h + 1)), report.hstar.coeffs),
        ("normalized_volume", (n + 1) * (h + 1), normalized_volume(s)),
        ("closed_points", inst.expected_closed_points, lattice_points(s, 1)),
        ("closed_count", h + 4, len(lattice_points(s, 1))),
        (
            "interior2_points",
            inst.expected_interior2_points,
            lattice_points(s, 2, open_=True),
        ),
        ("interior2_count", n * (h + 1), len(lattice_points(s, 2, open_=True))),
        ("a_invariant", -2, report.a_invariant),
        ("level", False, report.is_level),
        (
            "witness_generates_degree_3",
            True,
            inst.expected_witness in report.witnesses.get(3, ()),
        ),
        ("cm_type", h + n * (h + 1), report.cm_type),
        (
            "generator_degrees",
            {2: n * (h + 1), 3: h},
            report.generator_degrees,
        ),
        ("no_generators_at_bound", (), report.witnesses.get(4, ())),
    ]
    diffs = tuple(
        {"field": name, "expected": exp, "actual": act}
        for name, exp, act in checks
        if exp != act
    )
    return FamilyDiff(h=h, n=n, passed=not diffs, diffs=diffs)


def divisibility_check(report: LevelnessReport) -> str:
    """Does h*_1 + 1 divide h*_2 whenever a non-level instance has s = 2?"""
    if report.s != 2 or report.is_level:
        return VACUOUS
    h1 = report.hstar.coeffs[1]
    h2 = report.hstar.coeffs[2]
    return PASS if h2 % (h1 + 1) == 0 else COUNTEREXAMPLE


def hstar_degree2_feasible(a: int, b: int) -> bool:
    """Can (1, a, b) be the h*-vector of some lattice polytope?"""
    if a < 0 or b < 1:
        raise ValueError("need a >= 0 and b >= 1")
    return a <= 3 * b + 3 or (a, b) == (7, 1)


@dataclass(frozen=True)
class SearchRecord:
    """One searched simplex, its report, and the two theorem checks."""

    record_id: str
    vertices: tuple[Point, ...]
    report: LevelnessReport
    divisibility: str
    divisibility_ok: bool
    feasibility_ok: bool


def _random_unimodular_image(s: Simplex, rng: random.Random) -> Simplex:
    """Apply a random determinant-±1 map plus translation to the vertices."""
    d = s.dim
    u = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(6):
        kind = rng.randrange(3)
        i, j = rng.sample(range(d), 2)
        if kind == 0:
            coef = rng.choice((-1, 1))
            for row in u:
                row[i] += coef * row[j]
        elif kind == 1:
            for row in u:
                row[i], row[j] = row[j], row[i]
        else:
            for row in u:
                row[i] = -row[i]
    shift = [rng.randint(-2, 2) for _ in range(d)]
    verts = [
        tuple(sum(v[k] * u[k][j] for k in range(d)) + shift[j] for j in range(d))
        for v in s.vertices
    ]
    return Simplex(verts)


def _sample_simplex(
    rng: random.Random, dim: int, coord_bound: int, volume_cap: int
) -> Simplex:
    for _ in range(10000):
        verts = [
            tuple(rng.randint(-coord_bound, coord_bound) for _ in range(dim))
            for _ in range(dim + 1)
        ]
        if len(set(verts)) != dim + 1:
            continue
        try:
            s = Simplex(verts)
        except ValueError:
            continue
        if normalized_volume(s) <= volume_cap:
            return s
    raise InternalConsistencyError("rejection sampling failed to find a simplex")


def random_search(
    seed: int,
    count: int,
    dim: int = 3,
    coord_bound: int = 4,
    volume_cap: int = 40,
    *,
    bound: int | None = None,
    check_structure: bool = True,
) -> Iterator[SearchRecord]:
    """Deterministic stream of searched simplices with their reports.

    Every tenth index (in dimension 3) is an injected family member: index 0
    is the untransformed (1, 1) instance, later injections are random
    unimodular images of grid members, cycling (h, n) over {1..5}².  All
    other indices are rejection-sampled simplices with coordinates in
    [−coord_bound, coord_bound] and normalized volume at most volume_cap.
    The stream is a pure function of the arguments.
    """
    if dim not in (2, 3, 4):
        raise ValueError("dimension must be 2, 3 or 4")
    if count < 0 or coord_bound < 1 or volume_cap < 1:
        raise ValueError("count, coord_bound and volume_cap must be positive")
    rng = random.Random(seed)
    grid = list(product(range(1, 6), repeat=2))
    inject = dim == 3
    for idx in range(count):
        if inject and idx % 10 == 0:
            h, n = grid[(idx // 10) % len(grid)]
            base = simplex_hn(h, n).simplex
            s = base if idx == 0 else _random_unimodular_image(base, rng)
        else:
            s = _sample_simplex(rng, dim, coord_bound, volume_cap)
        report = build_report(s, bound=bound)
        if check_structure:
            violations = structural_violations(s, report.hstar)
            if violations:
                raise InternalConsistencyError(
                    f"structural h* violation on record {seed}-{idx}: {violations}"
                )
        div = divisibility_check(report)
        if report.s == 2:
            feas = hstar_degree2_feasible(report.hstar.coeffs[1], report.hstar.coeffs[2])
        else:
            feas = True
        yield SearchRecord(
            record_id=f"{seed}-{idx}",
            vertices=s.vertices,
            report=report,
            divisibility=div,
            divisibility_ok=div != COUNTEREXAMPLE,
            feasibility_ok=feas,
        )


def record_to_json(rec: SearchRecord) -> dict:
    return {
        "schema": "1",
        "id": rec.record_id,
        "vertices": [list(v) for v in rec.vertices],
        "report": report_to_json(rec.report),
        "divisibility": rec.divisibility,
        "divisibility_ok": rec.divisibility_ok,
        "feasibility_ok": rec.feasibility_ok,
    }
