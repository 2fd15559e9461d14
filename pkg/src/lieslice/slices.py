"""Slodowy slices, natural slices, complementary slices, and the exact
Poisson-slice verifier.

A slice is checked, never assumed: transversality is a rank statement
rank([g,x] + T_x S) = dim g, and the symplectic condition is the exact
nondegeneracy of the orbit pairing (u,v) -> tr(x [y_u, y_v]) on the
intersection [g,x] cap T_x S, with y_u any ad-preimage of u.
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
    in_span,
    intersect_spans,
    rank_kernel,
    rank_of_rows,
    solve,
    span_rank,
)
from .lie_core import (
    LieAlgebraSpec,
    LieElement,
    LieError,
    Sl2Triple,
    Subspace,
    bracket,
    centralizer,
    gl,
    image_ad,
    jm_complete,
    jordan_decompose,
    nilpotent_representative,
)
from .decomp_classes import (
    ClassLabel,
    center_of_centralizer,
    derived_centralizer,
    enumerate_classes,
    spectral_data,
)
from .root_combinatorics import (
    LeviOrbitPair,
    Partition,
    dominance_leq,
    ls_induce,
)

Q = Fraction


@dataclass(frozen=True)
class AffineSlice:
    """base + span(directions); membership is one linear solve."""

    base: LieElement
    directions: Subspace

    @property
    def algebra(self):
        return self.base.algebra

    @property
    def dim(self):
        return self.directions.dim

    def contains(self, y: LieElement) -> bool:
        diff = y.mat - self.base.mat
        return in_span(diff.flatten(), self.directions.flat_rows())

    def tangent_rows(self):
        return self.directions.flat_rows()


def slodowy_slice(triple: Sl2Triple, ambient: LieAlgebraSpec = None) -> AffineSlice:
    """S_T = e + g_f, with g_f the centralizer of f in the ambient algebra."""
    triple.verify()
    alg = ambient or triple.algebra
    f = LieElement(alg, triple.f.mat)
    e = LieElement(alg, triple.e.mat)
    return AffineSlice(e, centralizer(f))


def _operator_on_subspace(op_of, space: Subspace):
    """Matrix of a linear operator restricted to a subspace, in its basis."""
    rows = space.flat_rows()
    cols = []
    for b in space.basis:
        img = op_of(b).mat.flatten()
        coords = solve(
            Mat([[rows[k][i] for k in range(len(rows))] for i in range(len(img))]),
            img,
        )
        if coords is None:
            raise LieError("operator does not preserve the subspace")
        cols.append(coords.flatten())
    d = len(rows)
    return Mat([[cols[j][i] for j in range(d)] for i in range(d)])


def contracting_weights(triple: Sl2Triple, ambient: LieAlgebraSpec = None):
    """ad_h eigenvalues on g_f with multiplicity, ascending.

    All are nonpositive integers; the induced C*-weights on S_T - e are
    2 - m >= 2, which certifies lim_{t->0} t.x = e for the contraction.
    """
    triple.verify()
    alg = ambient or triple.algebra
    gf = centralizer(LieElement(alg, triple.f.mat))
    h = LieElement(alg, triple.h.mat)
    op = _operator_on_subspace(lambda b: bracket(h, b), gf)
    d = gf.dim
    weights = []
    for m in range(-2 * (alg.n - 1), 1):
        shifted = op - Mat.identity(d).scale(m)
        _, ker = rank_kernel(shifted)
        weights.extend([m] * len(ker))
    if len(weights) != d:
        raise LieError("ad_h is not integer-diagonalizable on g_f")
    return sorted(weights)


def principal_triple(algebra: LieAlgebraSpec) -> Sl2Triple:
    return jm_complete(nilpotent_representative(algebra, (algebra.n,)))


def principal_slice_basis(algebra: LieAlgebraSpec, triple: Sl2Triple):
    """Weight-ordered basis of g_f for the principal slice.

    Powers of f (and I for gl) span g_f; index j corresponds to the
    coefficient of t^(n-j-1) in the characteristic polynomial, which makes
    the matching system triangular.
    """
    n = algebra.n
    powers = [Mat.identity(n)]
    for _ in range(n - 1):
        powers.append(powers[-1] * triple.f.mat)
    if algebra.family == "gl":
        return powers  # I, f, ..., f^(n-1)
    return powers[1:]  # trace already pinned to zero


def fundamental_rep(x: LieElement) -> LieElement:
    """The unique point of the principal Slodowy slice conjugate to x.

    Requires x regular (centralizer dimension equals the rank).  The point
    is found by matching characteristic polynomials coefficient by
    coefficient; the system is triangular in the contraction weights, so
    each step is an affine solve in one unknown.
    """
    alg = x.algebra
    if centralizer(x).dim != alg.rank:
        raise LieError("fundamental_rep needs a regular element")
    target = char_poly(x.mat)
    triple = principal_triple(alg)
    basis = principal_slice_basis(alg, triple)
    n = alg.n

    def point(coeffs):
        m = Mat([row[:] for row in triple.e.mat.data])
        for c, b in zip(coeffs, basis):
            if c != 0:
                m = m + b.scale(c)
        return m

    coeffs = [ZERO] * len(basis)
    # unknown k controls the coefficient of t^(n-1-k-offset)
    offset = 0 if alg.family == "gl" else 1
    if alg.family == "sl" and target.coeffs[n - 1] != 0:
        raise LieError("traceless slice cannot match a nonzero trace")
    for k in range(len(basis)):
        degree = n - 1 - k - offset
        want = target.coeffs[degree]
        at_zero = char_poly(point(coeffs)).coeffs[degree]
        bumped = coeffs[:]
        bumped[k] = ONE
        at_one = char_poly(point(bumped)).coeffs[degree]
        slope = at_one - at_zero
        if slope == 0:
            raise LieError("principal slice system unexpectedly degenerate")
        coeffs[k] = (want - at_zero) / slope
    result = point(coeffs)
    if char_poly(result) != target:
        raise LieError("characteristic polynomial match failed")
    return LieElement(alg, result)


def poisson_slice_check(slice_or_tangent, x: LieElement):
    """Exact Poisson-slice verdict at a point x of a slice.

    Returns a dict with transversal_ok, symplectic_ok, and the dimension of
    the leaf intersection [g,x] cap T_x S.  x must lie on an affine slice;
    a Subspace argument is taken as the tangent model at x directly.
    """
    alg = x.algebra
    if isinstance(slice_or_tangent, AffineSlice):
        if not slice_or_tangent.contains(x):
            raise LieError("x does not lie on the slice")
        tangent_rows = slice_or_tangent.tangent_rows()
    elif isinstance(slice_or_tangent, Subspace):
        tangent_rows = slice_or_tangent.flat_rows()
    else:
        raise LieError("need an AffineSlice or a tangent Subspace")

    orbit = image_ad(x)
    orbit_rows = orbit.flat_rows()
    transversal_ok = span_rank(orbit_rows + tangent_rows) == alg.dim

    inter = intersect_spans(orbit_rows, tangent_rows)
    symplectic_ok = True
    if inter:
        n = alg.n
        basis = alg.basis()
        admat_cols = []
        for b in basis:
            admat_cols.append((b * x.mat - x.mat * b).flatten())
        admat = Mat(
            [[admat_cols[j][i] for j in range(len(basis))] for i in range(n * n)]
        )
        preimages = []
        for w in inter:
            y = solve(admat, list(w))
            if y is None:
                raise LieError("intersection vector has no ad-preimage")
            m = Mat.zeros(n)
            for c, b in zip(y.flatten(), basis):
                if c != 0:
                    m = m + b.scale(c)
            preimages.append(m)
        gram = []
        for yu in preimages:
            gram.append(
                [
                    (x.mat * (yu * yv - yv * yu)).trace()
                    for yv in preimages
                ]
            )
        symplectic_ok = rank_of_rows(gram) == len(inter)
    return {
        "transversal_ok": transversal_ok,
        "symplectic_ok": symplectic_ok,
        "intersection_dim": len(inter),
    }


# ---------------------------------------------------------------------------
# Natural slices
# ---------------------------------------------------------------------------


def _factor_label_admissible(label: ClassLabel, target: Partition) -> bool:
    """Ind_{levi(label)}^{gl_m}(orbits(label)) contains the target in closure."""
    sizes = tuple(s for s, _ in label.pairs)
    orbits = tuple(p for _, p in label.pairs)
    induced = ls_induce(LeviOrbitPair(sizes, orbits))
    return dominance_leq(target, induced)


@dataclass(frozen=True)
class NaturalSliceDescriptor:
    """Combinatorial description of the natural slice S_x inside g_{x_s}.

    eigenvalues/blocks/nilpotent_types record the Jordan data of x; entries
    lists, per G_{x_s}-conjugacy class, the admissible (Levi, orbit) pairs
    as one gl_{m_i} class label per eigenvalue factor.
    """

    x: LieElement
    x_s: LieElement
    x_n: LieElement
    eigenvalues: tuple
    blocks: tuple
    nilpotent_types: tuple
    entries: tuple  # tuple of (label_1, ..., label_k) tuples

    @property
    def factor_count(self):
        return len(self.blocks)

    def own_entry(self):
        return tuple(
            ClassLabel(gl(m), ((m, lam),))
            for m, lam in zip(self.blocks, self.nilpotent_types)
        )

    def lists(self, labels) -> bool:
        return tuple(labels) in set(self.entries)


def natural_slice(x: LieElement) -> NaturalSliceDescriptor:
    """Enumerate the (J, O) pairs of the natural slice at x.

    Blockwise in the eigenvalue factors gl_{m_i} of g_{x_s}: a pair is kept
    iff the induced orbit of its Levi dominates the Jordan type of x_n on
    that factor.  The pair (g_{x_s}, type of x_n) is always present.
    """
    data = spectral_data(x)
    eigenvalues = tuple(mu for mu, _, _ in data)
    blocks = tuple(mult for _, mult, _ in data)
    types = tuple(lam for _, _, lam in data)
    per_factor = []
    for m, lam in zip(blocks, types):
        admissible = tuple(
            lb for lb in enumerate_classes(gl(m)) if _factor_label_admissible(lb, lam)
        )
        per_factor.append(admissible)
    entries = tuple(itertools.product(*per_factor))
    x_s, x_n = jordan_decompose(x)
    desc = NaturalSliceDescriptor(
        x=x,
        x_s=x_s,
        x_n=x_n,
        eigenvalues=eigenvalues,
        blocks=blocks,
        nilpotent_types=types,
        entries=entries,
    )
    if not desc.lists(desc.own_entry()):
        raise LieError("descriptor must list the class of x itself")
    return desc


def cartan_membership(h: LieElement, x: LieElement) -> bool:
    """Root criterion for h in S_x cap t (x semisimple diagonal).

    True iff alpha(h) != 0 for every root alpha with alpha(x) != 0.
    """
    if not h.is_diagonal() or not x.is_diagonal():
        raise LieError("cartan_membership needs diagonal elements")
    n = x.algebra.n
    dx = [x.mat.data[i][i] for i in range(n)]
    dh = [h.mat.data[i][i] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and dx[i] != dx[j] and dh[i] == dh[j]:
                return False
    return True


def _eigenbasis(x_s: LieElement, mu):
    shifted = x_s.mat - Mat.identity(x_s.algebra.n).scale(mu)
    _, ker = rank_kernel(shifted)
    return ker  # list of column Mats


def _restrict_to_eigenspace(y: Mat, basis_cols):
    """Matrix of y on the span of basis_cols, exact."""
    n = y.rows
    m = len(basis_cols)
    bmat = Mat([[basis_cols[j].data[i][0] for j in range(m)] for i in range(n)])
    cols = []
    for j in range(m):
        image = y * basis_cols[j]
        coords = solve(bmat, image.flatten())
        if coords is None:
            raise LieError("y does not preserve the eigenspace")
        cols.append(coords.flatten())
    return Mat([[cols[j][i] for j in range(m)] for i in range(m)])


def membership_Sx_rank(y: LieElement, x: LieElement) -> bool:
    """Tauvel-Yu criterion (v): g = [g, y] + g_x, for x semisimple."""
    x_s, x_n = jordan_decompose(x)
    if not x_n.is_zero():
        raise LieError("the rank criterion applies to semisimple x only")
    rows = image_ad(y).flat_rows() + centralizer(x).flat_rows()
    return rank_of_rows(rows) == x.algebra.dim


def membership_Sx_descriptor(y: LieElement, x: LieElement, desc=None) -> bool:
    """Descriptor criterion: y belongs to a listed (Levi, orbit) locus.

    Checks in order: y centralizes x_s; the eigenvalues of y_s do not
    collide across distinct x_s-eigenblocks (so that the global centralizer
    of y_s stays inside g_{x_s}); and the blockwise class labels of y are
    listed in the descriptor.
    """
    if desc is None:
        desc = natural_slice(x)
    x_s = desc.x_s
    if not (y.mat * x_s.mat - x_s.mat * y.mat).is_zero():
        return False
    labels = []
    spectra = []
    for mu, m in zip(desc.eigenvalues, desc.blocks):
        basis_cols = _eigenbasis(x_s, mu)
        restricted = _restrict_to_eigenspace(y.mat, basis_cols)
        sub = LieElement(gl(m), restricted)
        data = spectral_data(sub)  # may raise IrrationalSpectrum
        spectra.append({ev for ev, _, _ in data})
        labels.append(ClassLabel(gl(m), tuple((mult, lam) for _, mult, lam in data)))
    for a, b in itertools.combinations(spectra, 2):
        if a & b:
            return False
    return desc.lists(tuple(labels))


def membership_Sx(y: LieElement, x: LieElement) -> bool:
    """Dual-path membership in the natural slice S_x.

    For semisimple x both the rank test and the descriptor test run and
    must agree; for general x only the descriptor path applies.
    """
    desc = natural_slice(x)
    verdict = membership_Sx_descriptor(y, x, desc)
    if desc.x_n.is_zero():
        rank_verdict = membership_Sx_rank(y, x)
        if rank_verdict != verdict:
            raise LieError(
                f"membership paths disagree: rank={rank_verdict} descriptor={verdict}"
            )
    return verdict


# ---------------------------------------------------------------------------
# Complementary slices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplementarySlice:
    """S_{x,T} = S_x cap S_T, with S_T the Slodowy slice of x_n in g_{x_s}."""

    descriptor: NaturalSliceDescriptor
    slodowy: AffineSlice
    triple: Sl2Triple

    @property
    def x(self):
        return self.descriptor.x

    def contains(self, y: LieElement) -> bool:
        return self.slodowy.contains(y) and membership_Sx_descriptor(
            y, self.x, self.descriptor
        )


def complementary_slice(x: LieElement, triple: Sl2Triple) -> ComplementarySlice:
    """Build S_{x,T} for an sl2-triple with e = x_n inside [g_{x_s}, g_{x_s}].

    For x_n = 0 the triple degenerates; the zero triple is accepted in that
    case only, and S_T is then the affine space x_s + z(g_{x_s}) (the
    continuity convention for the formulas).
    """
    desc = natural_slice(x)
    x_s, x_n = desc.x_s, desc.x_n
    alg = x.algebra
    if triple.is_zero_triple():
        if not x_n.is_zero():
            raise LieError("zero triple is only allowed when x_n = 0")
        directions = center_of_centralizer(x_s)
        slod = AffineSlice(x_s, directions)
        return ComplementarySlice(desc, slod, triple)
    if triple.e.mat != x_n.mat:
        raise LieError("triple.e must equal the nilpotent part of x")
    triple.verify()
    derived = derived_centralizer(x_s)
    for part in (triple.e, triple.h, triple.f):
        if not derived.contains(LieElement(alg, part.mat)):
            raise LieError("triple must lie in the derived algebra of g_{x_s}")
    # (g_{x_s})_f = centralizer of f intersected with g_{x_s}
    cent_f = centralizer(LieElement(alg, triple.f.mat))
    cent_s = centralizer(x_s)
    rows = intersect_spans(cent_f.flat_rows(), cent_s.flat_rows())
    n = alg.n
    directions = Subspace.from_elements(
        alg,
        [
            LieElement(alg, Mat([row[i * n : (i + 1) * n] for i in range(n)]))
            for row in rows
        ],
    )
    slod = AffineSlice(LieElement(alg, triple.e.mat), directions)
    if not slod.contains(x):
        raise LieError("x must lie on its own complementary slice")
    return ComplementarySlice(desc, slod, triple)
