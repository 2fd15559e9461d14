from fractions import Fraction as Q

import pytest

from lieslice.exact_linalg import Mat
from lieslice.lie_core import element, gl, jm_complete, nilpotent_representative, sl
from lieslice.decomp_classes import enumerate_classes
from lieslice.root_combinatorics import Partition
from lieslice.atlas import atlas, atlas_dot, is_acyclic
from lieslice.serialization import (
    DocumentError,
    emit_algebra,
    emit_element,
    emit_label,
    emit_matrix,
    emit_partition,
    emit_rational,
    emit_triple,
    parse_algebra,
    parse_element,
    parse_label,
    parse_matrix,
    parse_partition,
    parse_rational,
    parse_triple,
)


class TestRoundTrips:
    def test_rational(self):
        for x in (Q(1), Q(-3), Q(1, 2), Q(-22, 7), Q(0)):
            assert parse_rational(emit_rational(x)) == x
        assert parse_rational(5) == Q(5)
        with pytest.raises(DocumentError):
            parse_rational(1.5)
        with pytest.raises(DocumentError):
            parse_rational("x/y")

    def test_matrix(self):
        m = Mat([[Q(1, 2), 2], [0, Q(-7, 3)]])
        assert parse_matrix(emit_matrix(m)) == m
        with pytest.raises(DocumentError):
            parse_matrix([[1], [2, 3]])
        with pytest.raises(DocumentError):
            parse_matrix("nope")

    def test_algebra_element_partition(self):
        for alg in (gl(3), sl(3)):
            assert parse_algebra(emit_algebra(alg)) == alg
        x = element(gl(2), [[1, Q(1, 2)], [0, 3]])
        assert parse_element(emit_element(x)) == x
        p = Partition((3, 1, 1))
        assert parse_partition(emit_partition(p)) == p

    def test_label(self):
        for label in enumerate_classes(gl(3)):
            assert parse_label(emit_label(label)) == label

    def test_triple(self):
        t = jm_complete(nilpotent_representative(gl(3), (2, 1)))
        parsed = parse_triple(emit_triple(t))
        assert parsed.e.mat == t.e.mat
        assert parsed.h.mat == t.h.mat
        assert parsed.f.mat == t.f.mat

    def test_corpus_round_trip(self):
        # a fixture corpus: every small class label and a few elements
        corpus = [emit_label(lb) for n in (2, 3, 4) for lb in enumerate_classes(gl(n))]
        for doc in corpus:
            assert emit_label(parse_label(doc)) == doc


class TestAtlas:
    def test_gl1(self):
        doc = atlas(gl(1))
        assert len(doc["nodes"]) == 1 and doc["edges"] == []

    def test_gl2_fixture(self):
        doc = atlas(gl(2))
        assert len(doc["nodes"]) == 3
        dims = sorted(n["dimension"] for n in doc["nodes"])
        assert dims == [1, 3, 4]
        labels = {tuple((p["size"],) + tuple(p["partition"]) for p in n["label"]["pairs"]): i for i, n in enumerate(doc["nodes"])}
        nilp = labels[((2, 2),)]
        rss = labels[((1, 1), (1, 1))]
        assert (nilp, rss) in set(map(tuple, doc["edges"]))

    def test_counts_match_enumeration(self):
        for n in range(1, 7):
            doc = atlas(gl(n))
            assert len(doc["nodes"]) == len(enumerate_classes(gl(n)))

    def test_acyclic(self):
        for n in (2, 3, 4):
            assert is_acyclic(atlas(gl(n)))

    def test_dot_output(self):
        text = atlas_dot(atlas(gl(2)))
        assert text.startswith("digraph")
        assert "certified subset" in text
        assert text.count("->") == 3

    def test_bound(self):
        with pytest.raises(ValueError):
            atlas(gl(7), bound=6)

    def test_edges_respect_dimension(self):
        # closure order implies strictly increasing class dimension
        doc = atlas(gl(3))
        dims = [n["dimension"] for n in doc["nodes"]]
        for a, b in doc["edges"]:
            assert dims[a] < dims[b]
