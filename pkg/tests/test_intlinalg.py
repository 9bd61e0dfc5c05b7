import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ehrlev.errors import DimensionMismatchError
from ehrlev.intlinalg import (
    IntMatrix,
    determinant,
    has_convex_combination,
    has_nonneg_combination,
    invert_unimodular,
    rank,
    right_kernel_basis,
    smith_decomposition,
    smith_diagonal,
    solve_left_integer,
    solve_rational,
)
from helpers import cofactor_determinant, in_cone_caratheodory, minor_gcd_divisors

P11_EDGES = [(-1, 0, -1), (-1, -1, 0), (0, -2, -2)]
P11_CONE = [(1, 1, 1, 1), (0, 1, 0, 1), (0, 0, 1, 1), (1, -1, -1, 1)]


class TestDeterminant:
    def test_identity(self):
        assert determinant(IntMatrix.identity(3)) == 1

    def test_family_edge_matrix(self):
        # rows v1−v0, v2−v0, v3−v0 of the (1,1) family member
        assert abs(determinant(IntMatrix(P11_EDGES))) == 4

    def test_non_square_rejected(self):
        with pytest.raises(DimensionMismatchError):
            determinant(IntMatrix([[1, 2, 3], [4, 5, 6]]))

    def test_matches_cofactor_oracle(self):
        rng = random.Random(2024)
        for _ in range(120):
            n = rng.randint(1, 5)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert determinant(IntMatrix(rows)) == cofactor_determinant(rows)

    def test_big_entries_stay_exact(self):
        rows = [[10**20, 1], [1, 10**20]]
        assert determinant(IntMatrix(rows)) == 10**40 - 1


class TestSolveRational:
    def test_identity(self):
        assert solve_rational(IntMatrix.identity(2), [3, 5]) == (3, 5)

    def test_family_barycentric_system(self):
        # columns are the (1,1) vertices with an appended row of ones
        verts = [(1, 1, 1), (0, 1, 0), (0, 0, 1), (1, -1, -1)]
        system = IntMatrix([[v[j] for v in verts] for j in range(3)] + [[1] * 4])
        sol = solve_rational(system, [1, 0, 0, 1])
        assert sol == (Fraction(1, 2), 0, 0, Fraction(1, 2))

    def test_singular_returns_none(self):
        assert solve_rational(IntMatrix([[1, 1], [2, 2]]), [1, 3]) is None

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            solve_rational(IntMatrix.identity(2), [1, 2, 3])

    def test_random_solutions_verify(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(1, 4)
            rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            b = [rng.randint(-6, 6) for _ in range(n)]
            m = IntMatrix(rows)
            sol = solve_rational(m, b)
            if sol is None:
                assert determinant(m) == 0
            else:
                for i in range(n):
                    assert sum(Fraction(rows[i][j]) * sol[j] for j in range(n)) == b[i]


class TestSmith:
    def test_diag_2_3(self):
        assert smith_diagonal(IntMatrix([[2, 0], [0, 3]])) == [1, 6]

    def test_identity(self):
        assert smith_diagonal(IntMatrix.identity(4)) == [1, 1, 1, 1]

    def test_family_cone_divisor_product(self):
        divisors = smith_diagonal(IntMatrix(P11_CONE))
        prod = 1
        for d in divisors:
            prod *= d
        assert prod == abs(determinant(IntMatrix(P11_CONE))) == 4

    def test_random_decomposition_properties(self):
        rng = random.Random(11)
        for _ in range(80):
            m = rng.randint(1, 4)
            n = rng.randint(1, 4)
            rows = [[rng.randint(-8, 8) for _ in range(n)] for _ in range(m)]
            mat = IntMatrix(rows)
            d, u, v = smith_decomposition(mat)
            assert u.mul(mat).mul(v) == d
            assert abs(determinant(u)) == 1
            assert abs(determinant(v)) == 1
            diag = [d.entries[i][i] for i in range(min(m, n))]
            for i in range(m):
                for j in range(n):
                    if i != j:
                        assert d.entries[i][j] == 0
            for a, b in zip(diag, diag[1:]):
                assert a >= 0 and b >= 0
                if a == 0:
                    assert b == 0
                else:
                    assert b % a == 0
            assert diag == minor_gcd_divisors(rows)

    def test_nonsingular_product_equals_det(self):
        rng = random.Random(13)
        for _ in range(40):
            n = rng.randint(1, 4)
            rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            det = determinant(IntMatrix(rows))
            if det == 0:
                continue
            prod = 1
            for d in smith_diagonal(IntMatrix(rows)):
                prod *= d
            assert prod == abs(det)


class TestKernelAndLatticeSolve:
    def test_right_kernel_annihilates(self):
        rng = random.Random(17)
        for _ in range(40):
            m = rng.randint(1, 3)
            n = rng.randint(1, 4)
            rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
            mat = IntMatrix(rows)
            kernel = right_kernel_basis(mat)
            assert len(kernel) == n - rank(mat)
            for vec in kernel:
                assert all(sum(r[j] * vec[j] for j in range(n)) == 0 for r in rows)

    def test_solve_left_integer(self):
        m = IntMatrix([[2, 0], [0, 3]])
        assert solve_left_integer(m, (4, 3)) == (2, 1)
        assert solve_left_integer(m, (1, 0)) is None
        rng = random.Random(19)
        for _ in range(40):
            rowsn = rng.randint(1, 3)
            cols = rng.randint(1, 4)
            rows = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rowsn)]
            z = [rng.randint(-3, 3) for _ in range(rowsn)]
            x = tuple(sum(z[i] * rows[i][j] for i in range(rowsn)) for j in range(cols))
            sol = solve_left_integer(IntMatrix(rows), x)
            assert sol is not None
            assert tuple(
                sum(sol[i] * rows[i][j] for i in range(rowsn)) for j in range(cols)
            ) == x

    def test_invert_unimodular(self):
        u = IntMatrix([[1, 2], [0, 1]])
        assert invert_unimodular(u).mul(u) == IntMatrix.identity(2)


class TestNonnegCombination:
    def test_simple_cases(self):
        assert has_nonneg_combination([(1, 0), (0, 1)], (3, 5))
        assert not has_nonneg_combination([(1, 0), (0, 1)], (-1, 0))
        assert has_nonneg_combination([(1, 2)], (2, 4))
        assert not has_nonneg_combination([(1, 2)], (2, 5))
        assert has_nonneg_combination([], (0, 0))
        assert not has_nonneg_combination([], (1, 0))

    def test_matches_caratheodory_oracle(self):
        rng = random.Random(23)
        for _ in range(150):
            dim = rng.randint(1, 3)
            k = rng.randint(1, 5)
            vecs = [tuple(rng.randint(-4, 4) for _ in range(dim)) for _ in range(k)]
            target = tuple(rng.randint(-6, 6) for _ in range(dim))
            assert has_nonneg_combination(vecs, target) == in_cone_caratheodory(
                vecs, target
            ), (vecs, target)

    def test_convex_combination(self):
        square = [(0, 0), (2, 0), (0, 2), (2, 2)]
        assert has_convex_combination(square, (1, 1))
        assert has_convex_combination(square, (2, 2))
        assert not has_convex_combination(square, (3, 1))


class TestRationalArithmetic:
    @given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
    def test_stored_in_lowest_terms(self, p, q):
        from math import gcd

        f = Fraction(p, q)
        assert gcd(f.numerator, f.denominator) == 1
        assert f.denominator > 0

    @given(
        st.integers(-1000, 1000),
        st.integers(1, 1000),
        st.integers(-1000, 1000).filter(lambda k: k != 0),
    )
    def test_scaling_invariance(self, p, q, k):
        assert Fraction(p, q) == Fraction(k * p, k * q)

    @settings(max_examples=50)
    @given(
        st.fractions(max_denominator=1000),
        st.fractions(max_denominator=1000),
    )
    def test_sum_is_reduced(self, a, b):
        from math import gcd

        c = a + b
        assert gcd(c.numerator, c.denominator) == 1
