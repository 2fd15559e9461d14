import pytest

from lieslice.exact_linalg import Mat
from lieslice.lie_core import (
    LieError,
    centralizer,
    element,
    gl,
    nilpotent_representative,
    sl,
)
from lieslice.decomp_classes import (
    ClassLabel,
    IrrationalSpectrum,
    class_dimension,
    class_dimension_rank_check,
    class_perp,
    class_representative,
    classify,
    enumerate_classes,
    generic_locus_member,
    orbit_equal_via_gamma,
    principal_class,
)
from lieslice.root_combinatorics import LeviSubset, Partition
from lieslice.sampling import SampleSource


class TestClassify:
    def test_regular_semisimple(self):
        label = classify(element(gl(3), Mat.diag([1, 2, 3])))
        assert label.pairs == ((1, Partition((1,))),) * 3

    def test_regular_nilpotent(self):
        label = classify(nilpotent_representative(gl(3), (3,)))
        assert label.pairs == ((3, Partition((3,))),)

    def test_mixed(self):
        label = classify(element(gl(3), [[1, 1, 0], [0, 1, 0], [0, 0, 2]]))
        assert label.pairs == ((2, Partition((2,))), (1, Partition((1,))))

    def test_irrational_spectrum(self):
        with pytest.raises(IrrationalSpectrum) as err:
            classify(element(gl(2), [[0, 1], [-1, 0]]))
        assert err.value.factor.degree == 2

    def test_conjugation_invariance(self):
        src = SampleSource(31)
        for n in (2, 3, 4):
            for _ in range(25):
                x, label = src.rational_spectrum_matrix(gl(n))
                assert classify(x) == label

    def test_scaling_invariance(self):
        src = SampleSource(17)
        for _ in range(25):
            x, _ = src.rational_spectrum_matrix(gl(3))
            c = src.nonzero_rational()
            assert classify(x.scale(c)) == classify(x)

    def test_representative_roundtrip(self):
        for algebra in (gl(3), sl(3), gl(4), sl(4)):
            for label in enumerate_classes(algebra):
                rep = class_representative(label)
                assert classify(rep) == label


class TestEnumerateAndDimensions:
    def test_gl1(self):
        assert len(enumerate_classes(gl(1))) == 1

    def test_gl2_fixture(self):
        labels = enumerate_classes(gl(2))
        assert len(labels) == 3
        dims = {label: class_dimension(label) for label in labels}
        regular_ss = ClassLabel(gl(2), ((1, Partition((1,))), (1, Partition((1,)))))
        nilp = ClassLabel(gl(2), ((2, Partition((2,))),))
        central = ClassLabel(gl(2), ((2, Partition((1, 1))),))
        assert dims[regular_ss] == 4
        assert dims[nilp] == 3
        assert dims[central] == 1

    def test_gl3_count(self):
        # multisets of (block, partition): 3 for Levi (3), 2 for (2,1), 1 for (1^3)
        assert len(enumerate_classes(gl(3))) == 6

    def test_dimension_formula_vs_rank(self):
        for algebra in (gl(2), gl(3), sl(3), gl(4)):
            for label in enumerate_classes(algebra):
                assert class_dimension(label) == class_dimension_rank_check(label)

    def test_unique_open_class(self):
        for algebra in (gl(2), gl(3), gl(4), sl(3)):
            open_ones = [
                lb
                for lb in enumerate_classes(algebra)
                if class_dimension(lb) == algebra.dim
            ]
            assert len(open_ones) == 1
            assert open_ones[0].is_regular_semisimple()

    def test_random_sampling_lands_in_enumeration(self):
        src = SampleSource(41)
        labels = set(enumerate_classes(gl(3)))
        seen = set()
        for _ in range(120):
            x, _ = src.rational_spectrum_matrix(gl(3))
            lb = classify(x)
            assert lb in labels
            seen.add(lb)
        assert len(seen) == len(labels)  # every class gets hit


class TestGenericLocus:
    def test_distinct_scalars(self):
        lev = LeviSubset(3, (2, 1))
        h = element(gl(3), Mat.diag([2, 2, 5]))
        assert generic_locus_member(h, lev)

    def test_collision(self):
        lev = LeviSubset(3, (2, 1))
        h = element(gl(3), Mat.diag([2, 2, 2]))
        assert not generic_locus_member(h, lev)
        lev2 = LeviSubset(2, (1, 1))
        assert not generic_locus_member(element(gl(2), Mat.diag([5, 5])), lev2)

    def test_not_blockwise_constant(self):
        lev = LeviSubset(3, (2, 1))
        with pytest.raises(LieError):
            generic_locus_member(element(gl(3), Mat.diag([1, 2, 3])), lev)

    def test_matches_centralizer_dimension(self):
        lev = LeviSubset(4, (2, 2))
        generic = element(gl(4), Mat.diag([1, 1, 3, 3]))
        degenerate = element(gl(4), Mat.diag([1, 1, 1, 1]))
        assert generic_locus_member(generic, lev)
        assert centralizer(generic).dim == 8  # = dim l
        assert not generic_locus_member(degenerate, lev)
        assert centralizer(degenerate).dim > 8


class TestGammaOrbits:
    def test_weyl_swap(self):
        e = element(gl(2), Mat.zeros(2))
        x = element(gl(2), Mat.diag([1, 2]))
        y = element(gl(2), Mat.diag([2, 1]))
        assert orbit_equal_via_gamma(e, x, y)

    def test_distinct_orbits(self):
        e = element(gl(2), Mat.zeros(2))
        x = element(gl(2), Mat.diag([1, 2]))
        y = element(gl(2), Mat.diag([1, 3]))
        assert not orbit_equal_via_gamma(e, x, y)

    def test_unequal_partitions_block_gamma(self):
        # blocks (2,1) with different nilpotent types: Gamma is trivial
        lev = LeviSubset(3, (2, 1))
        e = nilpotent_representative(gl(3), (2, 1))  # type (2) then (1)
        x = element(gl(3), Mat.diag([1, 1, 5]))
        y = element(gl(3), Mat.diag([5, 5, 1]))
        assert orbit_equal_via_gamma(e, x, x, levi=lev)
        assert not orbit_equal_via_gamma(e, x, y, levi=lev)

    def test_equal_pairs_can_swap(self):
        # blocks (1,1) inside gl_2 with zero nilpotent: swap allowed
        lev = LeviSubset(4, (2, 2))
        e = nilpotent_representative(gl(4), (2, 2))
        x = element(gl(4), Mat.diag([1, 1, 7, 7]))
        y = element(gl(4), Mat.diag([7, 7, 1, 1]))
        assert orbit_equal_via_gamma(e, x, y, levi=lev)


class TestClassPerp:
    def test_regular_semisimple_perp_zero(self):
        x = element(gl(3), Mat.diag([1, 2, 3]))
        assert class_perp(x).dim == 0

    def test_sl2_regular_nilpotent(self):
        e = nilpotent_representative(sl(2), (2,))
        perp = class_perp(e)
        assert perp.dim == 1
        assert perp.contains(e)

    def test_mixed_fixture(self):
        x = element(gl(3), [[1, 1, 0], [0, 1, 0], [0, 0, 2]])
        perp = class_perp(x)
        assert perp.dim == 1
        assert perp.contains(element(gl(3), Mat.unit(3, 0, 1)))


def test_principal_class_examples():
    from lieslice.hamiltonian_examples import CoadjointOrbitSpace, CotangentFlagSpace

    orbit = CoadjointOrbitSpace(element(gl(3), Mat.diag([1, 2, 3])))
    assert principal_class(orbit).is_regular_semisimple()
    flag = CotangentFlagSpace(gl(3), (1, 1, 1))
    assert principal_class(flag).pairs == ((3, Partition((3,))),)
    partial_flag = CotangentFlagSpace(gl(3), (2, 1))
    assert principal_class(partial_flag).pairs == ((3, Partition((2, 1))),)
