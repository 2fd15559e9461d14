from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieslice.exact_linalg import (
    Mat,
    Poly,
    char_poly,
    companion,
    inverse,
    invariant_factors,
    min_poly,
    rank_kernel,
    rational_canonical_form,
    rational_roots,
    solve,
    squarefree_part,
)
from lieslice.sampling import SampleSource


def test_rank_kernel_identity():
    rank, ker = rank_kernel(Mat.identity(3))
    assert rank == 3 and ker == []


def test_rank_kernel_zero_matrix():
    rank, ker = rank_kernel(Mat.zeros(2, 3))
    assert rank == 0 and len(ker) == 3


def test_rank_kernel_hand_example():
    rank, ker = rank_kernel(Mat([[1, 2], [2, 4]]))
    assert rank == 1
    assert len(ker) == 1
    assert ker[0].flatten() == [Q(-2), Q(1)]


def test_rank_plus_nullity():
    src = SampleSource(3)
    for _ in range(30):
        m = src.matrix(4)
        rank, ker = rank_kernel(m)
        assert rank + len(ker) == 4
        for v in ker:
            assert (m * v).is_zero()


def test_row_scaling_leaves_rank_and_kernel_span():
    src = SampleSource(5)
    for _ in range(20):
        m = src.matrix(4)
        rank, ker = rank_kernel(m)
        scaled = Mat([[x * Q(3, 7) for x in m.data[0]]] + m.data[1:])
        rank2, ker2 = rank_kernel(scaled)
        assert rank2 == rank
        assert [v.flatten() for v in ker2] == [v.flatten() for v in ker]


def test_min_poly_examples():
    assert min_poly(Mat.diag([1, 1, 2])) == Poly([2, -3, 1])
    j3 = Mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert min_poly(j3) == Poly([0, 0, 0, 1])
    assert min_poly(Mat.identity(4)) == Poly([-1, 1])


def test_min_poly_divides_char_poly():
    src = SampleSource(11)
    for _ in range(25):
        m = src.jordan_test_matrix(4)
        q, r = char_poly(m).divmod(min_poly(m))
        assert r.is_zero()


def test_squarefree_part():
    assert squarefree_part(Poly([1, -2, 1])) == Poly([-1, 1])  # (t-1)^2
    assert squarefree_part(Poly([1, 0, 1])) == Poly([1, 0, 1])  # t^2+1
    assert squarefree_part(Poly([0, 0, -1, 1])) == Poly([0, -1, 1])  # t^2(t-1)
    with pytest.raises(ValueError):
        squarefree_part(Poly([]))


def test_rational_canonical_form_examples():
    c = companion(Poly([2, -3, 1]))
    assert rational_canonical_form(c) == c
    assert rational_canonical_form(Mat.diag([1, 2])) == c
    j2 = Mat([[0, 1], [0, 0]])
    assert rational_canonical_form(j2) == rational_canonical_form(j2.transpose())


def test_invariant_factors_divide():
    m = Mat.diag([1, 1, 2])
    factors = invariant_factors(m)
    assert factors == [Poly([-1, 1]), Poly([2, -3, 1])]
    prod = Poly([1])
    for f in factors:
        prod = prod * f
    assert prod == char_poly(m)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=4), st.integers())
def test_rcf_conjugation_invariant(n, seed):
    src = SampleSource(seed)
    m = src.jordan_test_matrix(n)
    conj, _ = src.conjugate(m)
    assert rational_canonical_form(conj) == rational_canonical_form(m)


def test_rcf_conjugation_invariant_n5():
    src = SampleSource(23)
    for _ in range(8):
        m = src.jordan_test_matrix(5)
        conj, _ = src.conjugate(m)
        assert rational_canonical_form(conj) == rational_canonical_form(m)


def test_solve_and_inverse():
    m = Mat([[2, 1], [1, 1]])
    inv = inverse(m)
    assert m * inv == Mat.identity(2)
    assert inverse(Mat([[1, 2], [2, 4]])) is None
    sol = solve(Mat([[1, 2], [2, 4]]), [1, 2])
    assert sol is not None and (Mat([[1, 2], [2, 4]]) * sol).flatten() == [Q(1), Q(2)]
    assert solve(Mat([[1, 2], [2, 4]]), [1, 3]) is None


def test_rational_roots():
    roots, rest = rational_roots(Poly([2, -3, 1]))
    assert sorted(roots) == [1, 2] and rest == Poly([1])
    roots, rest = rational_roots(Poly([1, 0, 1]))
    assert roots == [] and rest == Poly([1, 0, 1])
    roots, rest = rational_roots(Poly([Q(-1, 2), 1]) * Poly([1, 0, 1]))
    assert roots == [Q(1, 2)] and rest == Poly([1, 0, 1])
