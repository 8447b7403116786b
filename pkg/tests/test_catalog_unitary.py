"""Special-unitary builders: realified coordinates and bracket displays."""

import random
from fractions import Fraction

import pytest

from geoline.catalog.unitary import (
    build_su,
    su_block_indices,
    su_element,
    su_matrix,
)
from geoline.liealg import Subspace, adjoint, validate

F = Fraction


def cg(X, Y):
    """Real part of the Hermitian pairing of realified columns."""
    return sum(xr * yr + xi * yi for (xr, xi), (yr, yi) in zip(X, Y))


def crho(X, Y):
    """Imaginary part of the Hermitian pairing of realified columns."""
    return sum(xr * yi - xi * yr for (xr, xi), (yr, yi) in zip(X, Y))


def ci(X):
    """Multiply every realified column entry by i."""
    return [(-xi, xr) for (xr, xi) in X]


def cneg(X):
    return [(-xr, -xi) for (xr, xi) in X]


def cscale(s, X):
    return [(s * xr, s * xi) for (xr, xi) in X]


def rand_col(rng, m, span=3):
    return [(F(rng.randint(-span, span)), F(rng.randint(-span, span)))
            for _ in range(m)]


def drop_block(p, q, vec):
    blocked = set(su_block_indices(p, q))
    return tuple(x for i, x in enumerate(vec) if i not in blocked)


def combo(*pairs):
    """Sum of coeff * vector pairs."""
    n = len(pairs[0][1])
    out = [F(0)] * n
    for s, v in pairs:
        for i, x in enumerate(v):
            out[i] += s * x
    return tuple(out)


def cmat_mul(A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            re = F(0)
            im = F(0)
            for t in range(n):
                ar, ai = A[i][t]
                br, bi = B[t][j]
                re += ar * br - ai * bi
                im += ar * bi + ai * br
            row.append((re, im))
        out.append(tuple(row))
    return tuple(out)


def cmat_sub(A, B):
    return tuple(
        tuple((a[0] - b[0], a[1] - b[1]) for a, b in zip(ra, rb))
        for ra, rb in zip(A, B))


class TestParameters:
    @pytest.mark.parametrize("p,q,dim", [
        (2, 0, 3), (3, 0, 8), (4, 0, 15), (1, 1, 3), (1, 2, 8), (1, 3, 15)])
    def test_dimension_and_jacobi(self, p, q, dim):
        la = build_su(p, q)
        assert la.algebra.dim == dim
        assert validate(la.algebra) == "ok"

    @pytest.mark.parametrize("p,q", [(2, 1), (2, 2), (3, 1), (0, 2), (1, 0)])
    def test_unsupported_signatures_rejected(self, p, q):
        with pytest.raises(ValueError):
            build_su(p, q)

    def test_named_elements(self):
        compact = build_su(3, 0)
        assert {"h0", "h1", "E1", "E2"} <= set(compact.named_elements)
        assert "E+" not in compact.named_elements
        small = build_su(2, 0)
        assert "h0" not in small.named_elements
        lorentz = build_su(1, 3)
        assert {"E+", "E-"} <= set(lorentz.named_elements)
        assert lorentz.element("E+") == combo(
            (F(1), lorentz.element("E1")), (F(1), lorentz.element("E2")))

    @pytest.mark.parametrize("p,q", [(3, 0), (1, 3)])
    def test_carrier_matrices_are_faithful(self, p, q):
        rng = random.Random(29)
        la = build_su(p, q)
        d = la.algebra.dim
        for _ in range(6):
            x = tuple(F(rng.randint(-3, 3)) for _ in range(d))
            y = tuple(F(rng.randint(-3, 3)) for _ in range(d))
            A, B = su_matrix(p, q, x), su_matrix(p, q, y)
            got = su_matrix(p, q, la.algebra.bracket(x, y))
            assert got == cmat_sub(cmat_mul(A, B), cmat_mul(B, A))


class TestSharedDisplays:
    """Bracket identities that hold for both signature families."""

    @pytest.mark.parametrize("p,q", [(3, 0), (4, 0), (1, 2), (1, 3)])
    def test_e1_e2_close_onto_h1(self, p, q):
        la = build_su(p, q)
        got = la.algebra.bracket(la.element("E1"), la.element("E2"))
        assert got == combo((F(2), la.element("h1")))

    @pytest.mark.parametrize("p,q,eps", [(3, 0, 1), (4, 0, 1), (1, 3, -1)])
    def test_e1_e2_rotate_the_columns(self, p, q, eps):
        rng = random.Random(31)
        m = p + q - 2
        g = build_su(p, q).algebra
        for _ in range(5):
            X1, X2 = rand_col(rng, m), rand_col(rng, m)
            v = su_element(p, q, 0, 0, X1, X2)
            e1 = su_element(p, q, 1, 0, [(0, 0)] * m, [(0, 0)] * m)
            e2 = su_element(p, q, 0, 1, [(0, 0)] * m, [(0, 0)] * m)
            assert g.bracket(e1, v) == su_element(p, q, 0, 0, cneg(ci(X1)), ci(X2))
            assert g.bracket(e2, v) == su_element(
                p, q, 0, 0, cneg(ci(X2)), cscale(F(-eps), ci(X1)))

    @pytest.mark.parametrize("p,q,eps", [(3, 0, 1), (1, 2, -1), (1, 3, -1)])
    def test_h1_isotropy_action(self, p, q, eps):
        rng = random.Random(37)
        m = p + q - 2
        la = build_su(p, q)
        g = la.algebra
        for _ in range(5):
            x1, x2 = F(rng.randint(-3, 3)), F(rng.randint(-3, 3))
            X1, X2 = rand_col(rng, m), rand_col(rng, m)
            v = su_element(p, q, x1, x2, X1, X2)
            got = g.bracket(la.element("h1"), v)
            expected = su_element(p, q, -2 * eps * x2, 2 * x1,
                                  cneg(X2), cscale(F(eps), X1))
            assert got == expected

    @pytest.mark.parametrize("p,q,scalar", [(3, 0, -3), (4, 0, -2), (1, 2, -3), (1, 3, -2)])
    def test_h0_acts_by_an_imaginary_scalar_on_columns(self, p, q, scalar):
        """The scalar is -(n+1)/(n-1) i on the column part, n+1 = p+q."""
        rng = random.Random(41)
        m = p + q - 2
        la = build_su(p, q)
        g = la.algebra
        for _ in range(5):
            X1, X2 = rand_col(rng, m), rand_col(rng, m)
            v = su_element(p, q, 0, 0, X1, X2)
            got = g.bracket(la.element("h0"), v)
            expected = su_element(p, q, 0, 0,
                                  cscale(F(scalar), ci(X1)),
                                  cscale(F(scalar), ci(X2)))
            assert got == expected
            assert g.bracket(la.element("h0"), la.element("E1")) == (F(0),) * g.dim

    @pytest.mark.parametrize("p,q", [(4, 0), (1, 3)])
    def test_block_preserves_column_space(self, p, q):
        la = build_su(p, q)
        g = la.algebra
        vplus = la.subspace("V+")
        vminus = la.subspace("V-")
        span = Subspace(g, list(vplus.basis) + list(vminus.basis))
        for idx in su_block_indices(p, q):
            a = g.basis_vector(idx)
            for b in list(vplus.basis) + list(vminus.basis):
                assert span.contains(g.bracket(a, b))
            for name in ("h0", "h1", "E1", "E2"):
                assert g.bracket(a, la.element(name)) == (F(0),) * g.dim


class TestCompactColumnBrackets:
    """Column-column brackets in the definite case, diagonal pair labels."""

    @pytest.mark.parametrize("p,q", [(3, 0), (4, 0)])
    def test_equal_sign_pairs(self, p, q):
        rng = random.Random(43)
        m = p + q - 2
        la = build_su(p, q)
        g = la.algebra
        for _ in range(6):
            X, Y = rand_col(rng, m), rand_col(rng, m)
            for sign in (1, -1):
                xv = su_element(p, q, 0, 0, X, cscale(F(sign), X))
                yv = su_element(p, q, 0, 0, Y, cscale(F(sign), Y))
                r = crho(X, Y)
                expected = combo((-2 * r, la.element("h0")),
                                 (-2 * r * sign, la.element("E2")))
                assert drop_block(p, q, g.bracket(xv, yv)) == drop_block(p, q, expected)

    @pytest.mark.parametrize("p,q", [(3, 0), (4, 0)])
    def test_opposite_sign_pairs(self, p, q):
        rng = random.Random(47)
        m = p + q - 2
        la = build_su(p, q)
        g = la.algebra
        for _ in range(6):
            X, Y = rand_col(rng, m), rand_col(rng, m)
            xv = su_element(p, q, 0, 0, X, X)
            yv = su_element(p, q, 0, 0, Y, cneg(Y))
            expected = combo((-2 * crho(X, Y), la.element("E1")),
                             (-2 * cg(X, Y), la.element("h1")))
            assert drop_block(p, q, g.bracket(xv, yv)) == drop_block(p, q, expected)

    def test_eigencolumns_under_h1(self):
        """For the definite form h1 rotates (X, -iX) columns by +i."""
        p, q = 3, 0
        la = build_su(p, q)
        g = la.algebra
        rng = random.Random(53)
        for _ in range(5):
            X = rand_col(rng, 1)
            plus = su_element(p, q, 0, 0, X, cneg(ci(X)))
            minus = su_element(p, q, 0, 0, X, ci(X))
            assert g.bracket(la.element("h1"), plus) == su_element(
                p, q, 0, 0, ci(X), cneg(ci(ci(X))))
            assert g.bracket(la.element("h1"), minus) == su_element(
                p, q, 0, 0, cneg(ci(X)), cneg(ci(ci(X))))

    def test_named_eigenspaces_match_the_rotation(self):
        for p, q in ((3, 0), (4, 0)):
            la = build_su(p, q)
            g = la.algebra
            m = p + q - 2
            assert la.subspace("V+").dim == 2 * m
            assert la.subspace("V-").dim == 2 * m
            assert la.subspace("V0").dim == 2
            h1 = la.element("h1")
            for sign, name in ((1, "V+"), (-1, "V-")):
                for b in la.subspace(name).basis:
                    idx = {i for i, x in enumerate(b) if x}
                    rotated = g.bracket(h1, b)
                    # eigenvalue is the imaginary unit times sign
                    twice = g.bracket(h1, rotated)
                    assert twice == tuple(-x for x in b)


class TestLorentzColumnBrackets:
    """The indefinite family, where the ladder elements split the columns."""

    def test_ladder_brackets(self):
        la = build_su(1, 3)
        g = la.algebra
        ep, em = la.element("E+"), la.element("E-")
        assert g.bracket(ep, em) == combo((F(-4), la.element("h1")))
        assert g.bracket(la.element("h1"), ep) == combo((F(2), ep))
        assert g.bracket(la.element("h1"), em) == combo((F(-2), em))

    def test_ladder_annihilates_matching_eigencolumns(self):
        la = build_su(1, 3)
        g = la.algebra
        rng = random.Random(59)
        for _ in range(5):
            X = rand_col(rng, 2)
            plus = su_element(1, 3, 0, 0, X, cneg(X))
            minus = su_element(1, 3, 0, 0, X, X)
            assert g.bracket(la.element("E+"), plus) == (F(0),) * g.dim
            assert g.bracket(la.element("E-"), minus) == (F(0),) * g.dim

    def test_ladder_exchanges_opposite_eigencolumns(self):
        la = build_su(1, 3)
        g = la.algebra
        rng = random.Random(61)
        for _ in range(5):
            X = rand_col(rng, 2)
            minus = su_element(1, 3, 0, 0, X, X)
            plus = su_element(1, 3, 0, 0, X, cneg(X))
            got_p = g.bracket(la.element("E+"), minus)
            Z = cscale(F(-2), ci(X))
            assert got_p == su_element(1, 3, 0, 0, Z, cneg(Z))
            got_m = g.bracket(la.element("E-"), plus)
            assert got_m == su_element(1, 3, 0, 0, Z, Z)

    def test_equal_sign_columns_close_onto_the_ladder(self):
        la = build_su(1, 3)
        g = la.algebra
        rng = random.Random(67)
        for _ in range(6):
            X, Y = rand_col(rng, 2), rand_col(rng, 2)
            r = crho(X, Y)
            plus_pair = g.bracket(su_element(1, 3, 0, 0, X, cneg(X)),
                                  su_element(1, 3, 0, 0, Y, cneg(Y)))
            assert plus_pair == combo((2 * r, la.element("E+")))
            minus_pair = g.bracket(su_element(1, 3, 0, 0, X, X),
                                   su_element(1, 3, 0, 0, Y, Y))
            assert minus_pair == combo((2 * r, la.element("E-")))

    def test_opposite_sign_columns_reach_the_center_directions(self):
        la = build_su(1, 3)
        g = la.algebra
        rng = random.Random(71)
        for _ in range(6):
            X, Y = rand_col(rng, 2), rand_col(rng, 2)
            plus = su_element(1, 3, 0, 0, X, cneg(X))
            minus = su_element(1, 3, 0, 0, Y, Y)
            got = g.bracket(plus, minus)
            expected = combo((2 * crho(X, Y), la.element("h0")),
                             (2 * cg(X, Y), la.element("h1")))
            assert drop_block(1, 3, got) == drop_block(1, 3, expected)
            # reversed order flips the metric term only
            got_rev = g.bracket(su_element(1, 3, 0, 0, X, X),
                                su_element(1, 3, 0, 0, Y, cneg(Y)))
            expected_rev = combo((2 * crho(X, Y), la.element("h0")),
                                 (-2 * cg(X, Y), la.element("h1")))
            assert drop_block(1, 3, got_rev) == drop_block(1, 3, expected_rev)

    def test_named_eigenspaces(self):
        la = build_su(1, 3)
        g = la.algebra
        h1 = la.element("h1")
        assert la.subspace("V+").dim == 4
        assert la.subspace("V-").dim == 4
        for sign, name in ((1, "V+"), (-1, "V-")):
            for b in la.subspace(name).basis:
                assert g.bracket(h1, b) == tuple(sign * x for x in b)

    def test_h_m_split_dims(self):
        la = build_su(1, 3)
        assert la.subspace("h").dim == 5
        assert la.subspace("m").dim == 10
