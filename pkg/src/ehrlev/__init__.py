"""Exact Ehrhart invariants of lattice polytopes.

h*-vectors by two independent algorithms, a-invariants, normalized volume,
canonical generator degrees with levelness verdicts and Cohen–Macaulay
type, a built-in family of non-level 3-simplices, a randomized divisibility
search harness, and graded affine semigroup analysis.  All arithmetic is
exact.
"""

from .errors import (
    DegenerateGeometryError,
    DimensionMismatchError,
    InternalConsistencyError,
)
from .intlinalg import (
    IntMatrix,
    determinant,
    smith_decomposition,
    smith_diagonal,
    solve_rational,
)
from .geometry import (
    Halfspace,
    LatticePolytope,
    Simplex,
    as_simplex,
    barycentric,
    contains,
    facet_representation,
    lattice_points,
    minkowski_sum_points,
    normalize_points,
    polytope_from_json,
    polytope_to_json,
)
from .ehrhart import (
    BoxPoint,
    HStarVector,
    a_invariant,
    box_points,
    hstar_from_counts,
    hstar_simplex,
    normalized_volume,
    structural_violations,
)
from .levelness import (
    DEGREE_ONE,
    SEMIGROUP,
    LevelnessReport,
    build_report,
    cm_type,
    is_level,
    is_level_degree_one_variant,
    omega_generators,
    report_to_json,
)
from .family import (
    COUNTEREXAMPLE,
    PASS,
    VACUOUS,
    FamilyInstance,
    SearchRecord,
    divisibility_check,
    hstar_degree2_feasible,
    random_search,
    record_to_json,
    simplex_hn,
    verify_family,
)
from .semigroup import (
    GradedSemigroup,
    NormalityResult,
    SemistandardResult,
    is_pointed,
    is_semistandard,
    lift_polytope,
    normality_check_bounded,
    polytope_of,
    semigroup_from_json,
)

__version__ = "0.1.0"
