"""Exact matrix layer: Bareiss vs cofactor, polynomial evaluation, Sylvester."""
from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import random_matrix
from boxdet.exact_linalg import (
    COFACTOR_SIZE_LIMIT,
    IntMatrix,
    bareiss_det,
    cofactor_det,
    matrix_from_json,
    matrix_to_json,
    matpoly_eval,
    sylvester_matrix,
)
from boxdet.graphs import adjacency_matrix, box_product, path
from boxdet.polynomials import ONE, X, ZERO, IntPoly, path_charpoly, resultant


class TestIntMatrix:
    def test_constructors(self):
        eye = IntMatrix.identity(3)
        assert eye.size == 3
        assert eye.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert IntMatrix.zeros(2).rows == ((0, 0), (0, 0))
        assert IntMatrix.from_rows([[1, 2], [3, 4]]).rows == ((1, 2), (3, 4))

    def test_validation(self):
        with pytest.raises(ValueError):
            IntMatrix.from_rows([])
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])

    def test_arithmetic(self):
        a = IntMatrix.from_rows([[1, 2], [3, 4]])
        b = IntMatrix.from_rows([[0, 1], [1, 0]])
        eye = IntMatrix.identity(2)
        assert a + b == IntMatrix.from_rows([[1, 3], [4, 4]])
        assert a - a == IntMatrix.zeros(2)
        assert -a == IntMatrix.from_rows([[-1, -2], [-3, -4]])
        assert 2 * a == a + a
        assert a @ eye == a
        assert eye @ a == a
        assert a @ b == IntMatrix.from_rows([[2, 1], [4, 3]])

    def test_matmul_associativity_instance(self):
        rng = random.Random(7)
        a, b, c = (random_matrix(rng, 4) for _ in range(3))
        assert (a @ b) @ c == a @ (b @ c)


class TestDeterminants:
    def test_frozen_examples(self):
        assert bareiss_det(IntMatrix.identity(5)) == 1
        assert bareiss_det(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
        assert bareiss_det(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])) == -3
        four_cycle = IntMatrix.from_rows(
            [[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]]
        )
        assert bareiss_det(four_cycle) == 0
        assert cofactor_det(four_cycle) == 0
        assert cofactor_det(IntMatrix.from_rows([[-1]])) == -1
        two_by_three_grid = adjacency_matrix(box_product(path(2), path(3)))
        assert cofactor_det(two_by_three_grid) == -1

    def test_zero_pivot_needs_row_swap(self):
        m = IntMatrix.from_rows([[0, 2, 1], [0, 0, 3], [5, 0, 0]])
        assert bareiss_det(m) == cofactor_det(m) == 30
        assert bareiss_det(IntMatrix.zeros(3)) == 0

    def test_cofactor_validates_bareiss_on_random_matrices(self):
        rng = random.Random(20260815)
        for trial in range(200):
            size = 1 + trial % 7
            m = random_matrix(rng, size)
            assert cofactor_det(m) == bareiss_det(m)

    def test_determinant_is_multiplicative(self):
        rng = random.Random(99)
        for _ in range(50):
            size = rng.randint(1, 6)
            a = random_matrix(rng, size, -4, 4)
            b = random_matrix(rng, size, -4, 4)
            assert bareiss_det(a @ b) == bareiss_det(a) * bareiss_det(b)

    def test_scalar_scaling_law(self):
        rng = random.Random(3)
        for size in (1, 2, 3, 4):
            m = random_matrix(rng, size)
            assert bareiss_det(3 * m) == 3**size * bareiss_det(m)

    def test_cofactor_size_guard(self):
        big = IntMatrix.identity(COFACTOR_SIZE_LIMIT + 1)
        with pytest.raises(ValueError, match=str(COFACTOR_SIZE_LIMIT)):
            cofactor_det(big)

    @given(st.integers(1, 5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-6, 6), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    ))
    def test_bareiss_agrees_with_cofactor(self, rows):
        m = IntMatrix.from_rows(rows)
        assert bareiss_det(m) == cofactor_det(m)


class TestMatpolyEval:
    def test_frozen_examples(self):
        b = adjacency_matrix(path(2))
        # q_2 = x^2 - 1 at -A(P_2): (-A)^2 - I = 0
        assert matpoly_eval(path_charpoly(2), -b) == IntMatrix.zeros(2)
        # q_1 = -x at -A(P_2) gives A(P_2) back
        assert matpoly_eval(path_charpoly(1), -b) == b
        assert matpoly_eval(X, b) == b
        assert matpoly_eval(ONE, b) == IntMatrix.identity(2)
        assert matpoly_eval(ZERO, b) == IntMatrix.zeros(2)
        assert matpoly_eval(IntPoly((7,)), b) == 7 * IntMatrix.identity(2)

    def test_evaluation_is_a_ring_homomorphism(self):
        rng = random.Random(41)
        for _ in range(30):
            b = random_matrix(rng, rng.randint(1, 5), -3, 3)
            p = IntPoly(tuple(rng.randint(-4, 4) for _ in range(rng.randint(0, 6))))
            q = IntPoly(tuple(rng.randint(-4, 4) for _ in range(rng.randint(0, 6))))
            assert matpoly_eval(p + q, b) == matpoly_eval(p, b) + matpoly_eval(q, b)
            assert matpoly_eval(p * q, b) == matpoly_eval(p, b) @ matpoly_eval(q, b)

    def test_matches_scalar_evaluation_on_diagonal_input(self):
        d = IntMatrix.from_rows([[2, 0], [0, -3]])
        p = X**3 - 4 * X + 1
        assert matpoly_eval(p, d) == IntMatrix.from_rows([[p(2), 0], [0, p(-3)]])


class TestSylvester:
    def test_frozen_shape_and_value(self):
        s = sylvester_matrix(path_charpoly(1), path_charpoly(2))
        assert s.rows == ((-1, 0, 0), (0, -1, 0), (1, 0, -1))
        assert bareiss_det(s) == -1

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            sylvester_matrix(ZERO, X)
        with pytest.raises(ValueError):
            sylvester_matrix(X, ZERO)
        with pytest.raises(ValueError):
            sylvester_matrix(ONE, IntPoly((2,)))

    def test_determinant_equals_resultant(self):
        for n in range(1, 9):
            for m in range(1, 9):
                f, g = path_charpoly(n), path_charpoly(m)
                assert bareiss_det(sylvester_matrix(f, g)) == resultant(f, g)

    def test_determinant_equals_resultant_generic(self):
        f = 2 * X**3 - X + 4
        g = X**2 + 3 * X - 1
        assert bareiss_det(sylvester_matrix(f, g)) == resultant(f, g)


class TestJsonForms:
    def test_round_trip_frozen(self):
        m = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert matrix_from_json(matrix_to_json(m)) == m

    def test_round_trip_random(self):
        rng = random.Random(8)
        for _ in range(20):
            m = random_matrix(rng, rng.randint(1, 5), -(10**12), 10**12)
            assert matrix_from_json(matrix_to_json(m)) == m
