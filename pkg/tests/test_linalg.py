import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibniz_lab.linalg import (
    Matrix,
    NonSplit,
    Subspace,
    char_poly,
    kernel_basis,
    minor_rank,
    rational_eigensplit,
    rational_roots,
    rref,
    solve,
)

F = Fraction


def rand_fraction(rng, span=6):
    return F(rng.randint(-span, span), rng.randint(1, 4))


def rand_matrix(rng, rows, cols, span=6):
    return Matrix([[rand_fraction(rng, span) for _ in range(cols)] for _ in range(rows)])


class TestRref:
    def test_identity_is_fixed(self):
        m = Matrix.identity(3)
        red, pivots, rank = rref(m)
        assert red == m
        assert rank == 3
        assert pivots == (0, 1, 2)

    def test_proportional_rows(self):
        red, _, rank = rref(Matrix([[1, 2], [2, 4]]))
        assert red == Matrix([[1, 2], [0, 0]])
        assert rank == 1

    def test_rank_matches_minor_expansion_oracle(self):
        # Independent oracle: brute-force all maximal minors.
        rng = random.Random(20240517)
        for _ in range(8):
            m = rand_matrix(rng, 5, 7, span=3)
            assert rref(m)[2] == minor_rank(m)

    def test_rank_deficient_matches_oracle(self):
        rng = random.Random(7)
        base = rand_matrix(rng, 3, 6, span=3)
        rows = list(base.data)
        rows.append(tuple(a + b for a, b in zip(rows[0], rows[1])))
        rows.append(tuple(2 * a for a in rows[2]))
        m = Matrix(rows)
        assert rref(m)[2] == minor_rank(m)

    @given(st.integers(2, 5), st.integers(2, 5), st.integers(0, 10 ** 6))
    @settings(max_examples=40, deadline=None)
    def test_idempotent_and_rank_nullity(self, rows, cols, seed):
        rng = random.Random(seed)
        m = rand_matrix(rng, rows, cols, span=4)
        red, _, rank = rref(m)
        red2, _, rank2 = rref(red)
        assert red2 == red and rank2 == rank
        assert rank + kernel_basis(m).dim == cols


class TestKernel:
    def test_zero_matrix_full_kernel(self):
        assert kernel_basis(Matrix.zero(2, 2)) == Subspace.full(2)

    def test_identity_zero_kernel(self):
        ker = kernel_basis(Matrix.identity(3))
        assert ker.dim == 0

    def test_one_equation(self):
        ker = kernel_basis(Matrix([[1, 1]]))
        assert ker.basis == ((F(1), F(-1)),)

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=30, deadline=None)
    def test_kernel_vectors_annihilated(self, seed):
        rng = random.Random(seed)
        m = rand_matrix(rng, 3, 5, span=4)
        ker = kernel_basis(m)
        for v in ker.basis:
            assert not any(m.apply(v))


class TestSubspace:
    def test_equality_of_two_generations(self):
        rng = random.Random(99)
        for _ in range(10):
            v1 = tuple(rand_fraction(rng) for _ in range(6))
            v2 = tuple(rand_fraction(rng) for _ in range(6))
            a = Subspace.from_vectors(6, [v1, v2])
            b = Subspace.from_vectors(
                6,
                [
                    tuple(x + y for x, y in zip(v1, v2)),
                    tuple(x - y for x, y in zip(v1, v2)),
                ],
            )
            assert a == b

    def test_coords_roundtrip(self):
        s = Subspace.from_vectors(4, [(1, 2, 0, 0), (0, 0, 1, 5)])
        v = s.embed((F(3), F(-2)))
        assert s.contains(v)
        assert s.coords(v) == (F(3), F(-2))
        assert s.coords((1, 0, 0, 0)) is None

    def test_complement_coords(self):
        s = Subspace.from_vectors(4, [(1, 2, 0, 0), (0, 0, 1, 5)])
        assert s.complement_coords() == (1, 3)


class TestSolve:
    def test_exact_solution(self):
        m = Matrix([[1, 2], [3, 4]])
        x = solve(m, (F(5), F(11)))
        assert x is not None and m.apply(x) == (F(5), F(11))

    def test_inconsistent(self):
        m = Matrix([[1, 1], [1, 1]])
        assert solve(m, (F(0), F(1))) is None

    def test_underdetermined(self):
        m = Matrix([[1, 1, 1]])
        x = solve(m, (F(6),))
        assert x is not None and sum(x) == 6

    def test_inverse(self):
        m = Matrix([[2, 1], [1, 1]])
        assert m.inverse() == Matrix([[1, -1], [-1, 2]])
        with pytest.raises(ValueError):
            Matrix([[1, 2], [2, 4]]).inverse()


class TestCharPoly:
    def test_small_cases(self):
        m = Matrix([[2, 0], [0, 3]])
        assert char_poly(m) == [F(6), F(-5), F(1)]
        rot = Matrix([[0, -1], [1, 0]])
        assert char_poly(rot) == [F(1), F(0), F(1)]

    def test_matches_cayley_hamilton(self):
        rng = random.Random(5)
        for _ in range(6):
            m = rand_matrix(rng, 4, 4, span=3)
            coeffs = char_poly(m)
            acc = Matrix.zero(4, 4)
            power = Matrix.identity(4)
            for c in coeffs:
                acc = acc + power.scale(c)
                power = power.mul(m)
            assert acc.is_zero()

    def test_rational_entries(self):
        m = Matrix([[F(1, 2), 0], [0, F(1, 3)]])
        assert char_poly(m) == [F(1, 6), F(-5, 6), F(1)]


class TestRationalRoots:
    def test_cubic(self):
        # (x-1)(x-3)(x+2) = x^3 - 2x^2 - 5x + 6
        assert rational_roots([6, -5, -2, 1]) == [F(-2), F(1), F(3)]

    def test_no_rational_roots(self):
        assert rational_roots([1, 0, 1]) == []

    def test_zero_root_and_multiplicity(self):
        # x^2 (x - 5)^3
        p = [0, 0, -125, 75, -15, 1]
        assert rational_roots(p) == [F(0), F(5)]

    def test_non_monic(self):
        # (2x - 1)(3x + 2) = 6x^2 + x - 2
        assert rational_roots([-2, 1, 6]) == [F(-2, 3), F(1, 2)]


class TestEigensplit:
    def test_diagonal(self):
        result = rational_eigensplit(Matrix.diagonal([2, 2, 5]))
        assert [(lam, s.dim) for lam, s in result] == [(F(2), 2), (F(5), 1)]

    def test_rotation_nonsplit(self):
        result = rational_eigensplit(Matrix([[0, -1], [1, 0]]))
        assert isinstance(result, NonSplit)
        assert result.pairs == []

    def test_companion_matrix(self):
        # Companion of (x-1)(x-3)(x+2); oracle evaluated the char poly at the
        # rational-root candidates, giving roots {-2, 1, 3} (test above).
        p = [6, -5, -2]  # x^3 - 2x^2 - 5x + 6, trailing coeffs negated
        comp = Matrix([[0, 0, -p[0]], [1, 0, -p[1]], [0, 1, -p[2]]])
        result = rational_eigensplit(comp)
        assert [(lam, s.dim) for lam, s in result] == [(F(-2), 1), (F(1), 1), (F(3), 1)]

    def test_partial_split_reported(self):
        # One rational eigenvalue, one irrational pair: x(x^2 - 2)
        m = Matrix([[0, 0, 0], [0, 0, 2], [0, 1, 0]])
        result = rational_eigensplit(m)
        assert isinstance(result, NonSplit)
        assert [(lam, s.dim) for lam, s in result.pairs] == [(F(0), 1)]

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=25, deadline=None)
    def test_eigenspaces_invariant_and_independent(self, seed):
        rng = random.Random(seed)
        # Build a rationally split matrix: conjugate a diagonal by a unimodular.
        n = 4
        d = Matrix.diagonal([rng.randint(-3, 3) for _ in range(n)])
        u = Matrix.identity(n)
        for _ in range(5):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                rows = [list(r) for r in u.data]
                c = rng.randint(-2, 2)
                for k in range(n):
                    rows[i][k] += c * rows[j][k]
                u = Matrix(rows)
        m = u.mul(d).mul(u.inverse())
        result = rational_eigensplit(m)
        assert not isinstance(result, NonSplit)
        total = 0
        for lam, space in result:
            total += space.dim
            for v in space.basis:
                image = m.apply(v)
                assert space.contains(image)
                assert image == tuple(lam * x for x in v)
        assert total == n

    def test_rational_scaled(self):
        m = Matrix([[F(1, 2), 0], [0, F(1, 2)]])
        result = rational_eigensplit(m)
        assert [(lam, s.dim) for lam, s in result] == [(F(1, 2), 2)]
