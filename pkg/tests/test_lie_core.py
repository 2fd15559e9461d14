from fractions import Fraction as Q

import pytest

from lieslice.exact_linalg import Mat, min_poly
from lieslice.lie_core import (
    LieError,
    Subspace,
    bracket,
    centralizer,
    element,
    gl,
    jm_complete,
    jordan_decompose,
    nilpotent_representative,
    semisimple_polynomial_witness,
    sl,
    trace_form,
)
from lieslice.root_combinatorics import centralizer_dimension, partitions_of
from lieslice.sampling import SampleSource


def E(alg, i, j):
    return element(alg, Mat.unit(alg.n, i, j))


class TestBracket:
    def test_sl2_relation(self):
        g2 = gl(2)
        assert bracket(E(g2, 0, 1), E(g2, 1, 0)).mat == Mat.diag([1, -1])

    def test_antisymmetry_on_self(self):
        g2 = gl(2)
        x = element(g2, [[1, 2], [3, 4]])
        assert bracket(x, x).is_zero()

    def test_weight_vector(self):
        g2 = gl(2)
        h = element(g2, Mat.diag([1, 2]))
        assert bracket(h, E(g2, 0, 1)).mat == Mat.unit(2, 0, 1).scale(-1)

    def test_mismatched_algebras(self):
        with pytest.raises(LieError):
            bracket(E(gl(2), 0, 1), E(gl(3), 0, 1))

    def test_jacobi_identity_random(self):
        src = SampleSource(2)
        for alg in (gl(3), sl(3), gl(4)):
            for _ in range(25):
                if alg.family == "sl":
                    x, y, z = (element(alg, src.traceless_matrix(alg.n)) for _ in range(3))
                else:
                    x, y, z = (element(alg, src.matrix(alg.n)) for _ in range(3))
                total = (
                    bracket(x, bracket(y, z)).mat
                    + bracket(y, bracket(z, x)).mat
                    + bracket(z, bracket(x, y)).mat
                )
                assert total.is_zero()


class TestTraceForm:
    def test_values(self):
        g2 = gl(2)
        assert trace_form(E(g2, 0, 1), E(g2, 1, 0)) == 1
        assert trace_form(element(g2, Mat.diag([1, -1])), E(g2, 0, 1)) == 0
        g4 = gl(4)
        i4 = element(g4, Mat.identity(4))
        assert trace_form(i4, i4) == 4

    def test_invariance(self):
        src = SampleSource(9)
        g3 = gl(3)
        for _ in range(30):
            x = element(g3, src.matrix(3))
            y = element(g3, src.matrix(3))
            z = element(g3, src.matrix(3))
            assert trace_form(bracket(z, x), y) == -trace_form(x, bracket(z, y))


class TestCentralizer:
    def test_zero_element(self):
        assert centralizer(element(gl(3), Mat.zeros(3))).dim == 9

    def test_regular_nilpotent(self):
        e = nilpotent_representative(gl(3), (3,))
        cent = centralizer(e)
        assert cent.dim == 3
        # spanned by I, e, e^2
        assert cent.contains(element(gl(3), Mat.identity(3)))
        assert cent.contains(e)
        assert cent.contains(element(gl(3), e.mat * e.mat))

    def test_block_semisimple(self):
        assert centralizer(element(gl(3), Mat.diag([1, 1, 2]))).dim == 5

    def test_dimension_formula_all_partitions(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                e = nilpotent_representative(gl(n), lam.parts)
                assert centralizer(e).dim == centralizer_dimension(lam)


class TestJordan:
    def test_nilpotent_input(self):
        e = nilpotent_representative(gl(3), (2, 1))
        x_s, x_n = jordan_decompose(e)
        assert x_s.is_zero() and x_n.mat == e.mat

    def test_semisimple_input(self):
        x = element(gl(2), Mat.diag([1, 2]))
        x_s, x_n = jordan_decompose(x)
        assert x_s.mat == x.mat and x_n.is_zero()

    def test_mixed_fixture(self):
        x = element(gl(3), [[1, 1, 0], [0, 1, 0], [0, 0, 2]])
        x_s, x_n = jordan_decompose(x)
        assert x_s.mat == Mat.diag([1, 1, 2])
        assert x_n.mat == Mat.unit(3, 0, 1)
        assert min_poly(x_s.mat) == min_poly(x_s.mat).squarefree_part()
        assert x_n.mat.matpow(3).is_zero()

    def test_recompose_idempotent(self):
        src = SampleSource(4)
        for _ in range(15):
            m = src.jordan_test_matrix(4)
            x = element(gl(4), m)
            x_s, x_n = jordan_decompose(x)
            again_s, again_n = jordan_decompose(x_s + x_n)
            assert again_s.mat == x_s.mat and again_n.mat == x_n.mat

    def test_semisimple_part_commutes_with_centralizer(self):
        src = SampleSource(6)
        for _ in range(10):
            m = src.jordan_test_matrix(3)
            x = element(gl(3), m)
            x_s, _ = jordan_decompose(x)
            for c in centralizer(x).basis:
                assert bracket(x_s, c).is_zero()

    def test_witness(self):
        src = SampleSource(8)
        for _ in range(10):
            m = src.jordan_test_matrix(4)
            x = element(gl(4), m)
            x_s, _ = jordan_decompose(x)
            w = semisimple_polynomial_witness(x, x_s)
            assert w.eval_matrix(m) == x_s.mat


class TestJacobsonMorozov:
    def test_gl2_standard(self):
        t = jm_complete(E(gl(2), 0, 1))
        assert t.h.mat == Mat.diag([1, -1])
        assert t.f.mat == Mat.unit(2, 1, 0)

    def test_gl3_regular(self):
        t = jm_complete(nilpotent_representative(gl(3), (3,)))
        assert t.h.mat == Mat.diag([2, 0, -2])
        expected_f = Mat.unit(3, 1, 0).scale(2) + Mat.unit(3, 2, 1).scale(2)
        assert t.f.mat == expected_f

    def test_zero_rejected(self):
        with pytest.raises(LieError):
            jm_complete(element(gl(2), Mat.zeros(2)))

    def test_non_nilpotent_rejected(self):
        with pytest.raises(LieError):
            jm_complete(element(gl(2), Mat.diag([1, 2])))

    def test_triples_for_all_orbits(self):
        for n in range(2, 7):
            for lam in partitions_of(n):
                if lam.parts == (1,) * n:
                    continue
                t = jm_complete(nilpotent_representative(gl(n), lam.parts))
                t.verify()
                assert t.h.mat.trace() == 0 and t.f.mat.trace() == 0

    def test_triple_on_conjugated_nilpotent(self):
        src = SampleSource(12)
        e = src.nilpotent_conjugate(gl(4), (2, 2))
        t = jm_complete(e)
        t.verify()

    def test_within_subalgebra(self):
        from lieslice.decomp_classes import derived_centralizer

        x = element(gl(3), [[1, 1, 0], [0, 1, 0], [0, 0, 2]])
        x_s, x_n = jordan_decompose(x)
        derived = derived_centralizer(x_s)
        t = jm_complete(x_n, within=derived)
        t.verify()
        for part in (t.e, t.h, t.f):
            assert derived.contains(part)


def test_subspace_canonical_basis():
    g2 = gl(2)
    s = Subspace.from_elements(
        g2, [element(g2, [[1, 0], [0, 1]]), element(g2, [[2, 0], [0, 2]])]
    )
    assert s.dim == 1
    assert s.contains(element(g2, Mat.identity(2).scale(Q(7, 3))))


def test_sl_membership_validation():
    with pytest.raises(LieError):
        element(sl(2), [[1, 0], [0, 1]])
