"""The 52-dimensional derivation algebra and its rank-one split."""

import random
from fractions import Fraction
from math import lcm

import numpy as np
import pytest

from geoline.catalog.exceptional import build_f4, derivation_matrices
from geoline.catalog.jordan import DIM, JordanElement, basis, jordan_mul
from geoline.exactnum.matrix import RationalMatrix
from geoline.exactnum.signature import signature
from geoline.exactnum.poly import RationalPolynomial, min_poly
from geoline.liealg import adjoint, killing, validate

from oracles import kernel_naive, rank_naive

F = Fraction


def doubled_product_tensor():
    """2 * (e_a o e_b) for all basis pairs, recomputed from scratch."""
    bas = basis()
    t = np.zeros((DIM, DIM, DIM), dtype=np.int64)
    for a in range(DIM):
        for b in range(a, DIM):
            flat = jordan_mul(bas[a], bas[b]).flatten()
            for v, x in enumerate(flat):
                y = 2 * x
                assert y.denominator == 1
                t[a, b, v] = int(y)
                t[b, a, v] = int(y)
    return t


def int_rows(m: RationalMatrix) -> np.ndarray:
    rows = m.to_rows()
    return np.array([[int(x) for x in row] for row in rows], dtype=np.int64)


class TestDerivationSpace:
    def test_count(self):
        assert len(derivation_matrices()) == 52

    def test_product_rule_holds_for_every_matrix(self):
        t = doubled_product_tensor()
        for m in derivation_matrices():
            d = int_rows(m)
            lhs = np.einsum("abv,wv->abw", t, d)
            rhs = (np.einsum("ua,ubw->abw", d, t)
                   + np.einsum("ub,auw->abw", d, t))
            assert not (lhs - rhs).any()

    def test_product_rule_on_random_elements(self):
        rng = random.Random(107)
        mats = derivation_matrices()
        for _ in range(4):
            m = mats[rng.randrange(52)]
            x = JordanElement.from_flat([F(rng.randint(-2, 2)) for _ in range(DIM)])
            y = JordanElement.from_flat([F(rng.randint(-2, 2)) for _ in range(DIM)])
            dx = JordanElement.from_flat(m.apply(x.flatten()))
            dy = JordanElement.from_flat(m.apply(y.flatten()))
            lhs = JordanElement.from_flat(m.apply(jordan_mul(x, y).flatten()))
            rhs_flat = tuple(a + b for a, b in zip(jordan_mul(dx, y).flatten(),
                                                   jordan_mul(x, dy).flatten()))
            assert tuple(lhs.flatten()) == rhs_flat

    def test_matrices_are_independent(self):
        flat = [[x for row in m.to_rows() for x in row]
                for m in derivation_matrices()]
        assert rank_naive(flat) == 52


class TestAlgebra:
    def test_dim_and_identities(self):
        la = build_f4()
        assert la.algebra.dim == 52
        assert validate(la.algebra) == "ok"

    def test_build_is_cached(self):
        assert build_f4() is build_f4()

    def test_bracket_matches_matrix_commutator(self):
        rng = random.Random(109)
        la = build_f4()
        mats = [int_rows(m) for m in derivation_matrices()]
        stacked = np.stack(mats)
        for _ in range(4):
            x = np.array([rng.randint(-2, 2) for _ in range(52)], dtype=np.int64)
            y = np.array([rng.randint(-2, 2) for _ in range(52)], dtype=np.int64)
            mx = np.einsum("k,kij->ij", x, stacked)
            my = np.einsum("k,kij->ij", y, stacked)
            z = la.algebra.bracket(tuple(F(int(t)) for t in x),
                                   tuple(F(int(t)) for t in y))
            num = lcm(*[t.denominator for t in z]) if any(z) else 1
            mz = np.einsum("k,kij->ij",
                           np.array([int(t * num) for t in z], dtype=np.int64),
                           stacked)
            assert not (num * (mx @ my - my @ mx) - mz).any()

    def test_killing_form_is_negative_definite(self):
        la = build_f4()
        assert signature(killing(la.algebra)) == (0, 52, 0)


class TestStabilizerSplit:
    def test_h_matrices_kill_the_first_idempotent(self):
        la = build_f4()
        stacked = np.stack([int_rows(m) for m in derivation_matrices()])
        assert la.subspace("h").dim == 36
        for s in la.subspace("h").basis:
            num = lcm(*[t.denominator for t in s])
            coeffs = np.array([int(t * num) for t in s], dtype=np.int64)
            mat = np.einsum("k,kij->ij", coeffs, stacked)
            assert not mat[:, 0].any()

    def test_p_is_the_orthocomplement(self):
        la = build_f4()
        k = killing(la.algebra)
        assert la.subspace("p").dim == 16
        for pvec in la.subspace("p").basis:
            row = k.apply(pvec)
            for hvec in la.subspace("h").basis:
                assert sum(a * b for a, b in zip(row, hvec)) == 0

    def test_h_and_p_fill_the_algebra(self):
        la = build_f4()
        rows = [list(v) for v in la.subspace("h").basis]
        rows += [list(v) for v in la.subspace("p").basis]
        assert rank_naive(rows) == 52

    def test_h1_lies_in_p_and_has_the_right_centralizer(self):
        la = build_f4()
        h1 = la.element("h1")
        prows = [list(v) for v in la.subspace("p").basis]
        assert rank_naive(prows + [list(h1)]) == 16
        ad = adjoint(la.algebra, h1)
        assert len(kernel_naive(ad.to_rows())) == 22


class TestSquaredRotationSpectrum:
    """(ad h1)^2 is semisimple with rational spectrum {0, -4, -16}."""

    def make_m(self):
        la = build_f4()
        a = adjoint(la.algebra, la.element("h1"))
        return a @ a

    def test_minimal_polynomial(self):
        m = self.make_m()
        expected = RationalPolynomial([0, 64, 20, 1])
        assert min_poly(m) == expected
        ident = RationalMatrix.identity(52)
        shift4 = m + ident.scale(4)
        shift16 = m + ident.scale(16)
        assert (m @ shift4 @ shift16).is_zero()
        for partial in (m @ shift4, m @ shift16, shift4 @ shift16):
            assert not partial.is_zero()

    def test_eigenspace_dimensions(self):
        m = self.make_m()
        ident = RationalMatrix.identity(52)
        dims = {}
        for ev in (0, -4, -16):
            shifted = m + ident.scale(-ev)
            dims[ev] = len(kernel_naive(shifted.to_rows()))
        assert dims == {0: 22, -4: 16, -16: 14}
        assert sum(dims.values()) == 52
