"""Decomposition classes of gl_n and sl_n.

A class is labeled by a multiset of (eigenvalue-block size, nilpotent
Jordan type) pairs: the Levi is the centralizer of the semisimple part and
the partitions record the nilpotent part on each eigenblock.  Conjugacy of
Levis forgets the order of the blocks, so labels are canonically sorted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import (
    Mat,
    ONE,
    ZERO,
    char_poly,
    rational_canonical_form,
    rational_roots,
    rank_kernel,
)
from .lie_core import (
    LieAlgebraSpec,
    LieElement,
    LieError,
    Subspace,
    bracket,
    centralizer,
    image_ad,
    jordan_decompose,
)
from .root_combinatorics import (
    LeviSubset,
    Partition,
    centralizer_dimension,
    partitions_of,
)

Q = Fraction


class IrrationalSpectrum(LieError):
    """The semisimple part does not split over Q."""

    def __init__(self, factor):
        self.factor = factor
        super().__init__(
            f"semisimple part has an irrational factor {factor!r}; "
            "classification is restricted to rational spectra"
        )


@dataclass(frozen=True)
class ClassLabel:
    algebra: LieAlgebraSpec
    pairs: tuple  # ((size, Partition), ...) canonically sorted

    def __post_init__(self):
        pairs = tuple(
            (int(s), p if isinstance(p, Partition) else Partition(tuple(p)))
            for s, p in self.pairs
        )
        if sum(s for s, _ in pairs) != self.algebra.n:
            raise LieError("block sizes must sum to n")
        for s, p in pairs:
            if p.size != s:
                raise LieError(f"partition {p} does not partition block {s}")
        object.__setattr__(self, "pairs", _canonical_pairs(pairs))

    @property
    def block_count(self):
        return len(self.pairs)

    def is_regular_semisimple(self):
        return all(s == 1 for s, _ in self.pairs)

    def __repr__(self):
        body = ", ".join(f"({s},{p.parts})" for s, p in self.pairs)
        return f"ClassLabel[{self.algebra.family}{self.algebra.n}: {body}]"


def _canonical_pairs(pairs):
    return tuple(sorted(pairs, key=lambda sp: (-sp[0], tuple(-x for x in sp[1].parts))))


def spectral_data(x: LieElement):
    """Sorted (eigenvalue, multiplicity, Jordan partition) triples of x.

    Raises IrrationalSpectrum when the semisimple part of x does not split
    over Q; the offending irreducible cofactor is attached to the error.
    """
    m = x.mat
    n = m.rows
    p = char_poly(m).squarefree_part()
    roots, remainder = rational_roots(p)
    if remainder.degree >= 1:
        raise IrrationalSpectrum(remainder)
    data = []
    for mu in sorted(roots):
        shifted = m - Mat.identity(n).scale(mu)
        nullities = [0]
        power = Mat.identity(n)
        while True:
            power = power * shifted
            _, ker = rank_kernel(power)
            nullities.append(len(ker))
            if nullities[-1] == nullities[-2]:
                nullities.pop()
                break
        diffs = [nullities[k] - nullities[k - 1] for k in range(1, len(nullities))]
        lam = Partition(tuple(diffs)).transpose()
        data.append((mu, lam.size, lam))
    if sum(mult for _, mult, _ in data) != n:
        raise IrrationalSpectrum(p)  # defensive; cannot happen once p splits
    return data


def classify(x: LieElement) -> ClassLabel:
    """Decomposition-class label of x (constant on GL_n(Q)-conjugates)."""
    data = spectral_data(x)
    return ClassLabel(x.algebra, tuple((mult, lam) for _, mult, lam in data))


def class_representative(label: ClassLabel) -> LieElement:
    """Blockwise canonical representative: c_i I + Jordan form, c_i distinct.

    For sl_n the scalars are chosen traceless; for a single block that
    forces c = 0 (the nilpotent classes).
    """
    pairs = label.pairs
    k = len(pairs)
    sizes = [s for s, _ in pairs]
    if label.algebra.family == "gl":
        scalars = [Q(i) for i in range(k)]
    else:
        if k == 1:
            scalars = [ZERO]
        else:
            scalars = None
            for offset in itertools.count():
                cand = [Q(offset + i) for i in range(k - 1)]
                last = -sum(Q(sizes[i]) * cand[i] for i in range(k - 1)) / sizes[-1]
                if last not in cand:
                    scalars = cand + [last]
                    break
    n = label.algebra.n
    m = Mat.zeros(n)
    offset = 0
    for (size, lam), c in zip(pairs, scalars):
        for i in range(size):
            m.data[offset + i][offset + i] = c
        pos = offset
        for part in lam.parts:
            for i in range(part - 1):
                m.data[pos + i][pos + i + 1] = ONE
            pos += part
        offset += size
    return LieElement(label.algebra, m)


def class_dimension(label: ClassLabel) -> int:
    """dim [g, x] + dim z(l) for any representative x of the class."""
    n = label.algebra.n
    cent = sum(centralizer_dimension(lam) for _, lam in label.pairs)
    k = label.block_count
    if label.algebra.family == "gl":
        return n * n - cent + k
    return n * n - cent + k - 1


def class_dimension_rank_check(label: ClassLabel) -> int:
    """Exact rank of (u, z) -> [u, x] + z at the canonical representative."""
    x = class_representative(label)
    tangent = class_tangent_space(x)
    return tangent.dim


def class_tangent_space(x: LieElement) -> Subspace:
    """T_x D = [g, x] + z(l), l the centralizer of x_s."""
    x_s, _ = jordan_decompose(x)
    rows = image_ad(x).basis + tuple(center_of_centralizer(x_s).basis)
    return Subspace.from_elements(x.algebra, list(rows))


def center_of_centralizer(x_s: LieElement) -> Subspace:
    """z(g_{x_s}): spanned by the spectral projectors of x_s (sl: traceless)."""
    data = spectral_data(x_s)
    n = x_s.algebra.n
    projectors = []
    for mu, _, _ in data:
        p = Mat.identity(n)
        for nu, _, _ in data:
            if nu == mu:
                continue
            p = p * (x_s.mat - Mat.identity(n).scale(nu)).scale(ONE / (mu - nu))
        projectors.append(p)
    if x_s.algebra.family == "gl":
        mats = projectors
    else:
        mats = []
        for i in range(len(projectors) - 1):
            a, b = projectors[i], projectors[i + 1]
            mats.append(a.scale(b.trace()) - b.scale(a.trace()))
    return Subspace.from_elements(
        x_s.algebra, [LieElement(x_s.algebra, m) for m in mats]
    )


def enumerate_classes(algebra: LieAlgebraSpec):
    """All class labels of the algebra; one of them is open (reg. semisimple)."""
    labels = []
    for sizes in partitions_of(algebra.n):
        groups = []
        for size in sorted(set(sizes.parts), reverse=True):
            count = sizes.parts.count(size)
            opts = list(
                itertools.combinations_with_replacement(partitions_of(size), count)
            )
            groups.append((size, opts))
        for combo in itertools.product(*(opts for _, opts in groups)):
            pairs = []
            for (size, _), chosen in zip(groups, combo):
                pairs.extend((size, lam) for lam in chosen)
            labels.append(ClassLabel(algebra, tuple(pairs)))
    return sorted(
        labels,
        key=lambda lb: tuple((-s, tuple(-x for x in p.parts)) for s, p in lb.pairs),
    )


def generic_locus_member(h: LieElement, levi: LeviSubset) -> bool:
    """True iff h in z(l)_gen: blockwise constant with distinct block scalars."""
    if h.algebra.n != levi.n:
        raise LieError("element size does not match the Levi")
    if not h.is_diagonal():
        raise LieError("h must be diagonal to lie in the standard z(l)")
    diag = [h.mat.data[i][i] for i in range(levi.n)]
    scalars = []
    for rng in levi.block_ranges():
        vals = {diag[i] for i in rng}
        if len(vals) != 1:
            raise LieError("h is not constant on the Levi blocks, so not in z(l)")
        scalars.append(vals.pop())
    return len(set(scalars)) == len(scalars)


def _blocks_from_generic_diagonal(x: LieElement):
    """Recover the Levi blocks (maximal constant runs) of a z(l)_gen diagonal."""
    diag = [x.mat.data[i][i] for i in range(x.algebra.n)]
    blocks = []
    start = 0
    for i in range(1, len(diag) + 1):
        if i == len(diag) or diag[i] != diag[start]:
            blocks.append(i - start)
            start = i
    return tuple(blocks)


def nilpotent_block_partitions(e: LieElement, levi: LeviSubset):
    """Jordan type of a block-diagonal nilpotent on each Levi block."""
    parts = []
    for rng in levi.block_ranges():
        idx = list(rng)
        sub = Mat([[e.mat.data[i][j] for j in idx] for i in idx])
        size = len(idx)
        nullities = [0]
        power = Mat.identity(size)
        while True:
            power = power * sub
            _, ker = rank_kernel(power)
            nullities.append(len(ker))
            if nullities[-1] == nullities[-2]:
                nullities.pop()
                break
        diffs = [nullities[k] - nullities[k - 1] for k in range(1, len(nullities))]
        parts.append(Partition(tuple(diffs)).transpose())
    return tuple(parts)


class GammaOracleDisagreement(LieError):
    """The block-permutation model and the conjugacy oracle disagree."""


def orbit_equal_via_gamma(e: LieElement, x: LieElement, y: LieElement, levi=None):
    """Adjoint-orbit equality of e+x and e+y for x, y in z(l)_gen.

    Gamma acts by permuting blocks with equal (size, partition); the verdict
    is cross-checked against equality of rational canonical forms and a
    disagreement raises GammaOracleDisagreement.
    """
    if levi is None:
        levi = LeviSubset(x.algebra.n, _blocks_from_generic_diagonal(x))
    if not generic_locus_member(x, levi) or not generic_locus_member(y, levi):
        raise LieError("x and y must lie in the generic locus of the Levi")
    parts = nilpotent_block_partitions(e, levi)
    xs = _block_scalars(x, levi)
    ys = _block_scalars(y, levi)
    groups = {}
    for size, lam, sx, sy in zip(levi.blocks, parts, xs, ys):
        key = (size, lam)
        groups.setdefault(key, ([], []))
        groups[key][0].append(sx)
        groups[key][1].append(sy)
    verdict = all(sorted(a) == sorted(b) for a, b in groups.values())
    oracle = rational_canonical_form(e.mat + x.mat) == rational_canonical_form(
        e.mat + y.mat
    )
    if verdict != oracle:
        raise GammaOracleDisagreement(
            f"Gamma model says {verdict}, canonical forms say {oracle}"
        )
    return verdict


def _block_scalars(x: LieElement, levi: LeviSubset):
    return [x.mat.data[rng[0]][rng[0]] for rng in levi.block_ranges()]


def derived_centralizer(x_s: LieElement) -> Subspace:
    """[g_{x_s}, g_{x_s}] as a subspace (blockwise sl of the Levi)."""
    cent = centralizer(x_s)
    mats = []
    basis = list(cent.basis)
    for i, a in enumerate(basis):
        for b in basis[i + 1 :]:
            mats.append(bracket(a, b))
    return Subspace.from_elements(x_s.algebra, mats)


def class_perp(x: LieElement) -> Subspace:
    """Trace-form annihilator of T_x D inside the algebra.

    Verified (rank tests in trivial_action_core) to equal the centralizer
    of x_n inside the derived algebra of g_{x_s}.
    """
    tangent = class_tangent_space(x)
    basis = x.algebra.basis()
    rows = []
    for t in tangent.basis:
        rows.append([(t.mat * b).trace() for b in basis])
    if not rows:
        return Subspace.from_elements(
            x.algebra, [LieElement(x.algebra, b) for b in basis]
        )
    _, ker = rank_kernel(Mat(rows))
    elements = []
    for v in ker:
        m = Mat.zeros(x.algebra.n)
        for c, b in zip(v.flatten(), basis):
            if c != 0:
                m = m + b.scale(c)
        elements.append(LieElement(x.algebra, m))
    return Subspace.from_elements(x.algebra, elements)


def nilpotent_centralizer_in_derived(x: LieElement) -> Subspace:
    """[g_{x_s}, g_{x_s}]_{x_n}: the derived-Levi centralizer of x_n."""
    x_s, x_n = jordan_decompose(x)
    derived = derived_centralizer(x_s)
    cent_n = centralizer(x_n)
    rows = _subspace_intersection(derived, cent_n)
    n = x.algebra.n
    return Subspace.from_elements(
        x.algebra,
        [
            LieElement(x.algebra, Mat([row[i * n : (i + 1) * n] for i in range(n)]))
            for row in rows
        ],
    )


def _subspace_intersection(a: Subspace, b: Subspace):
    from .exact_linalg import intersect_spans

    return intersect_spans(a.flat_rows(), b.flat_rows())


def principal_class(space) -> ClassLabel:
    """Principal decomposition class of an example Hamiltonian space."""
    from . import hamiltonian_examples as ham

    if isinstance(space, ham.CoadjointOrbitSpace):
        return classify(space.base_point)
    if isinstance(space, ham.CotangentFlagSpace):
        from .root_combinatorics import richardson

        rich = richardson(space.blocks)
        return ClassLabel(space.algebra, ((space.algebra.n, rich),))
    if isinstance(space, ham.SymplecticVectorSpace):
        raise LieError(
            "the Sp_2n defining space has principal class 'minimal nilpotent "
            "orbit of sp_2n', which is not a type-A label; see sp_moment"
        )
    raise LieError(f"unsupported example space {space!r}")
