"""Kernel, signature, minimal polynomial and factorization checks."""

import random
from fractions import Fraction

import pytest

from geoline.exactnum import (
    IrreducibleFactorTooLarge,
    RationalMatrix,
    RationalPolynomial,
    factor_low_degree,
    independent_subset,
    kernel_basis,
    min_poly,
    rank,
    signature,
    solve,
)

from oracles import kernel_naive, matvec_naive, rank_naive


def rand_matrix(rng, rows, cols, span=5, denoms=(1, 1, 1, 2, 3)):
    return RationalMatrix(rows, cols, [
        Fraction(rng.randint(-span, span), rng.choice(denoms))
        for _ in range(rows * cols)])


class TestKernelBasis:
    def test_identity_has_trivial_kernel(self):
        assert kernel_basis(RationalMatrix.identity(2)) == []

    def test_rank_one_row(self):
        A = RationalMatrix(1, 2, [1, -1])
        assert kernel_basis(A) == [(Fraction(1), Fraction(1))]

    def test_kernel_vectors_annihilate(self):
        rng = random.Random(11)
        for _ in range(25):
            A = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            for v in kernel_basis(A):
                assert A.apply(v) == (Fraction(0),) * A.rows

    def test_rank_nullity(self):
        rng = random.Random(23)
        for _ in range(25):
            A = rand_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
            assert A.cols == rank(A) + len(kernel_basis(A))

    def test_matches_naive_oracle(self):
        rng = random.Random(37)
        for _ in range(20):
            A = rand_matrix(rng, rng.randint(2, 6), rng.randint(2, 6))
            rows = A.to_rows()
            assert rank(A) == rank_naive(rows)
            ours = kernel_basis(A)
            theirs = kernel_naive(rows)
            assert len(ours) == len(theirs)
            for v in theirs:
                assert matvec_naive(rows, v) == (Fraction(0),) * A.rows


class TestSignature:
    def test_positive_definite_diag(self):
        assert signature(RationalMatrix.diagonal([1, 1])) == (2, 0, 0)

    def test_indefinite_degenerate_diag(self):
        assert signature(RationalMatrix.diagonal([1, -1, 0])) == (1, 1, 1)

    def test_hyperbolic_block(self):
        S = RationalMatrix(2, 2, [0, 1, 1, 0])
        assert signature(S) == (1, 1, 0)

    def test_rejects_non_symmetric(self):
        with pytest.raises(ValueError):
            signature(RationalMatrix(2, 2, [0, 1, 2, 0]))

    def test_congruence_invariance(self):
        rng = random.Random(5)
        for _ in range(20):
            n = rng.randint(2, 6)
            diag = [rng.choice([-2, -1, 0, 1, 3]) for _ in range(n)]
            expected = (sum(1 for d in diag if d > 0),
                        sum(1 for d in diag if d < 0),
                        sum(1 for d in diag if d == 0))
            D = RationalMatrix.diagonal(diag)
            while True:
                P = rand_matrix(rng, n, n, span=3, denoms=(1,))
                if rank(P) == n:
                    break
            S = P.transpose() @ D @ P
            assert signature(S) == expected


class TestMinPoly:
    def test_zero_matrix(self):
        assert min_poly(RationalMatrix.zeros(3, 3)) == RationalPolynomial([0, 1])

    def test_rotation_generator(self):
        A = RationalMatrix(2, 2, [0, -1, 1, 0])
        assert min_poly(A) == RationalPolynomial([1, 0, 1])

    def test_projector(self):
        A = RationalMatrix.diagonal([1, 1, 0])
        assert min_poly(A) == RationalPolynomial([0, -1, 1])

    def test_annihilates_matrix(self):
        rng = random.Random(71)
        for _ in range(15):
            n = rng.randint(1, 5)
            A = rand_matrix(rng, n, n)
            assert min_poly(A).evaluate_matrix(A).is_zero()


class TestFactorLowDegree:
    def test_difference_of_squares(self):
        got = factor_low_degree(RationalPolynomial([-1, 0, 1]))
        assert got == [(RationalPolynomial([-1, 1]), 1),
                       (RationalPolynomial([1, 1]), 1)]

    def test_cubic_with_zero_root(self):
        got = factor_low_degree(RationalPolynomial([0, 1, 0, 1]))
        assert got == [(RationalPolynomial([0, 1]), 1),
                       (RationalPolynomial([1, 0, 1]), 1)]

    def test_multiplicities(self):
        square = (RationalPolynomial([-1, 1]) * RationalPolynomial([-1, 1])
                  * RationalPolynomial([2, 0, 1]))
        got = factor_low_degree(square)
        assert (RationalPolynomial([-1, 1]), 2) in got
        assert (RationalPolynomial([2, 0, 1]), 1) in got

    def test_quadratic_pair_without_rational_roots(self):
        prod = RationalPolynomial([1, 1, 1]) * RationalPolynomial([1, -1, 1])
        got = factor_low_degree(prod)
        assert sorted(f.degree for f, _ in got) == [2, 2]
        back = RationalPolynomial([1])
        for f, m in got:
            for _ in range(m):
                back = back * f
        assert back == prod

    def test_multiplies_back_exactly(self):
        rng = random.Random(99)
        for _ in range(15):
            parts = []
            for _ in range(rng.randint(1, 3)):
                if rng.random() < 0.6:
                    parts.append(RationalPolynomial([rng.randint(-3, 3), 1]))
                else:
                    parts.append(RationalPolynomial([rng.randint(1, 4), 0, 1]))
            prod = RationalPolynomial([1])
            for q in parts:
                prod = prod * q
            back = RationalPolynomial([1])
            for f, m in factor_low_degree(prod):
                for _ in range(m):
                    back = back * f
            assert back == prod.monic()

    def test_irreducible_cubic_rejected(self):
        with pytest.raises(IrreducibleFactorTooLarge):
            factor_low_degree(RationalPolynomial([-2, 0, 0, 1]))

    def test_irreducible_quartic_rejected(self):
        with pytest.raises(IrreducibleFactorTooLarge):
            factor_low_degree(RationalPolynomial([1, 0, 0, 0, 1]))


class TestSolveHelpers:
    def test_solve_consistent(self):
        A = RationalMatrix.from_rows([[1, 2], [3, 4]])
        x = solve(A, [5, 6])
        assert x is not None and A.apply(x) == (Fraction(5), Fraction(6))

    def test_solve_inconsistent(self):
        A = RationalMatrix.from_rows([[1, 1], [1, 1]])
        assert solve(A, [0, 1]) is None

    def test_independent_subset(self):
        vecs = [(1, 0), (2, 0), (0, 1), (1, 1)]
        assert independent_subset(vecs) == [0, 2]
