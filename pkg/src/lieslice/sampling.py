"""Seeded random generators for verification sweeps and tests.

Everything is driven by `random.Random(seed)` so every sweep is
reproducible from (seed, samples).  Conjugators are unimodular (integer
shear products), keeping entries small and inverses exact.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exact_linalg import Mat, ONE
from .lie_core import LieAlgebraSpec, LieElement, nilpotent_representative
from .root_combinatorics import partitions_of

Q = Fraction


class SampleSource:
    def __init__(self, seed=0):
        self.rng = random.Random(seed)

    def integer(self, lo=-4, hi=4):
        return self.rng.randint(lo, hi)

    def nonzero_rational(self, bound=5):
        num = 0
        while num == 0:
            num = self.rng.randint(-bound, bound)
        den = self.rng.randint(1, bound)
        return Q(num, den)

    def rational(self, bound=5):
        return Q(self.rng.randint(-bound, bound), self.rng.randint(1, bound))

    def matrix(self, n, lo=-4, hi=4):
        return Mat([[Q(self.rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)])

    def traceless_matrix(self, n, lo=-4, hi=4):
        m = self.matrix(n, lo, hi)
        m.data[n - 1][n - 1] -= m.trace()
        return m

    def unimodular(self, n, shears=None):
        """Product of elementary shears and a permutation; det = +-1."""
        shears = shears if shears is not None else 2 * n
        m = Mat.identity(n)
        for _ in range(shears):
            i = self.rng.randrange(n)
            j = self.rng.randrange(n)
            if i == j:
                continue
            c = self.rng.randint(-2, 2)
            if c == 0:
                continue
            shear = Mat.identity(n)
            shear.data[i][j] = Q(c)
            m = m * shear
        perm = list(range(n))
        self.rng.shuffle(perm)
        p = Mat.zeros(n)
        for i, j in enumerate(perm):
            p.data[i][j] = ONE
        return m * p

    def invertible(self, n):
        return self.unimodular(n)

    def conjugate(self, m: Mat, n=None):
        from .exact_linalg import inverse

        g = self.unimodular(m.rows)
        return g * m * inverse(g), g

    def rational_spectrum_matrix(self, algebra: LieAlgebraSpec):
        """Random conjugate of a random canonical class representative."""
        from .decomp_classes import class_representative, enumerate_classes

        labels = enumerate_classes(algebra)
        label = self.rng.choice(labels)
        rep = class_representative(label)
        conj, _ = self.conjugate(rep.mat)
        return LieElement(algebra, conj), label

    def jordan_test_matrix(self, n):
        """Mix of generic integer matrices and defective conjugated forms."""
        style = self.rng.randrange(3)
        if style == 0:
            return self.matrix(n)
        parts = self.rng.choice(partitions_of(n)).parts
        base = Mat.zeros(n)
        offset = 0
        for p in parts:
            ev = Q(self.rng.randint(-3, 3))
            for i in range(p):
                base.data[offset + i][offset + i] = ev
                if i + 1 < p:
                    base.data[offset + i][offset + i + 1] = ONE
            offset += p
        conj, _ = self.conjugate(base)
        if style == 2:
            conj = conj + Mat.identity(n).scale(self.rational(3))
        return conj

    def subspace_point(self, base: Mat, direction_rows, bound=4):
        """base + random rational combination of the direction rows."""
        n = base.rows
        m = Mat([row[:] for row in base.data])
        for row in direction_rows:
            c = self.rational(bound)
            if c == 0:
                continue
            for i in range(n):
                for j in range(n):
                    m.data[i][j] += c * row[i * n + j]
        return m

    def nilpotent_conjugate(self, algebra: LieAlgebraSpec, parts):
        rep = nilpotent_representative(algebra, parts)
        conj, _ = self.conjugate(rep.mat)
        return LieElement(algebra, conj)

    def distinct_rationals(self, count, bound=None):
        bound = bound if bound is not None else 3 * count
        pool = list(range(-bound, bound + 1))
        self.rng.shuffle(pool)
        return [Q(x) for x in pool[:count]]

    def sp_group_element(self, space, factors=4):
        """Random element of Sp_2n(Q) as a product of transvections."""
        from .hamiltonian_examples import sp_transvection

        d = space.dim
        g = Mat.identity(d)
        for _ in range(factors):
            u = [Q(self.rng.randint(-2, 2)) for _ in range(d)]
            if all(x == 0 for x in u):
                u[self.rng.randrange(d)] = ONE
            c = Q(self.rng.randint(-2, 2))
            g = g * sp_transvection(space, u, c)
        return g
