"""The matrix Lie algebras gl_n and sl_n over Q.

Brackets, the trace form, centralizers, exact Jordan-Chevalley
decomposition, and Jacobson-Morozov completion of nilpotents to
sl_2-triples.  All operations are pure and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import (
    Mat,
    Poly,
    ONE,
    ZERO,
    char_poly,
    echelon_basis,
    in_span,
    min_poly,
    poly_bezout,
    rank_kernel,
    solve,
    span_rank,
)

Q = Fraction


class LieError(ValueError):
    """Domain error in a Lie-algebra operation."""


@dataclass(frozen=True)
class LieAlgebraSpec:
    """gl_n or sl_n as a matrix algebra."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in ("gl", "sl"):
            raise LieError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise LieError("n must be positive")

    @property
    def dim(self):
        return self.n * self.n if self.family == "gl" else self.n * self.n - 1

    @property
    def rank(self):
        return self.n if self.family == "gl" else self.n - 1

    def basis(self):
        """Standard basis: E_ij for gl; off-diagonal E_ij plus H_i for sl."""
        n = self.n
        if self.family == "gl":
            return [Mat.unit(n, i, j) for i in range(n) for j in range(n)]
        out = [Mat.unit(n, i, j) for i in range(n) for j in range(n) if i != j]
        for i in range(n - 1):
            h = Mat.zeros(n)
            h.data[i][i] = ONE
            h.data[i + 1][i + 1] = -ONE
            out.append(h)
        return out

    def contains(self, m: Mat):
        return m.is_square() and m.rows == self.n and (
            self.family == "gl" or m.trace() == 0
        )

    def coordinates(self, m: Mat):
        """Coordinates of m in basis(); closed form, no linear solve."""
        n = self.n
        if self.family == "gl":
            return m.flatten()
        if m.trace() != 0:
            raise LieError("matrix is not traceless, hence not in sl_n")
        coords = [m.data[i][j] for i in range(n) for j in range(n) if i != j]
        partial = ZERO
        for i in range(n - 1):
            partial += m.data[i][i]
            coords.append(partial)
        return coords


def gl(n):
    return LieAlgebraSpec("gl", n)


def sl(n):
    return LieAlgebraSpec("sl", n)


@dataclass(frozen=True)
class LieElement:
    algebra: LieAlgebraSpec
    mat: Mat

    def __post_init__(self):
        if self.mat.rows != self.algebra.n or self.mat.cols != self.algebra.n:
            raise LieError("matrix size does not match the algebra")
        if self.algebra.family == "sl" and self.mat.trace() != 0:
            raise LieError("sl element must be traceless")

    def __add__(self, other):
        _same_algebra(self, other)
        return LieElement(self.algebra, self.mat + other.mat)

    def __sub__(self, other):
        _same_algebra(self, other)
        return LieElement(self.algebra, self.mat - other.mat)

    def __neg__(self):
        return LieElement(self.algebra, -self.mat)

    def scale(self, c):
        return LieElement(self.algebra, self.mat.scale(c))

    def is_zero(self):
        return self.mat.is_zero()

    def is_nilpotent(self):
        return self.mat.matpow(self.algebra.n).is_zero()

    def is_semisimple(self):
        return min_poly(self.mat).squarefree_part() == min_poly(self.mat).monic()

    def is_diagonal(self):
        m = self.mat
        return all(m.data[i][j] == 0 for i in range(m.rows) for j in range(m.cols) if i != j)


def _same_algebra(x: LieElement, y: LieElement):
    if x.algebra != y.algebra:
        raise LieError("elements live in different algebras")


def element(algebra: LieAlgebraSpec, rows) -> LieElement:
    return LieElement(algebra, rows if isinstance(rows, Mat) else Mat(rows))


def bracket(x: LieElement, y: LieElement) -> LieElement:
    _same_algebra(x, y)
    return LieElement(x.algebra, x.mat * y.mat - y.mat * x.mat)


def trace_form(x: LieElement, y: LieElement) -> Fraction:
    """The invariant form tr(xy); on sl_n this is 1/(2n) times the Killing form."""
    _same_algebra(x, y)
    return (x.mat * y.mat).trace()


@dataclass(frozen=True)
class Subspace:
    """Subspace of a Lie algebra with a canonical (RREF) basis."""

    ambient: LieAlgebraSpec
    basis: tuple

    @staticmethod
    def from_elements(ambient: LieAlgebraSpec, elements):
        rows = echelon_basis([e.mat.flatten() for e in elements])
        n = ambient.n
        mats = tuple(
            LieElement(ambient, Mat([row[i * n : (i + 1) * n] for i in range(n)]))
            for row in rows
        )
        return Subspace(ambient, mats)

    @property
    def dim(self):
        return len(self.basis)

    def flat_rows(self):
        return [e.mat.flatten() for e in self.basis]

    def contains(self, x: LieElement):
        return in_span(x.mat.flatten(), self.flat_rows())

    def contains_subspace(self, other: "Subspace"):
        rows = self.flat_rows()
        return all(in_span(v, rows) for v in other.flat_rows())


def ad_matrix(x: LieElement):
    """Matrix of ad_x on the algebra's standard basis."""
    basis = x.algebra.basis()
    cols = []
    for b in basis:
        br = x.mat * b - b * x.mat
        cols.append(x.algebra.coordinates(br))
    return Mat([[cols[j][i] for j in range(len(basis))] for i in range(len(basis))])


def centralizer(x: LieElement) -> Subspace:
    """g_x = {y : [y, x] = 0}, computed as the kernel of ad_x."""
    basis = x.algebra.basis()
    _, ker = rank_kernel(ad_matrix(x))
    elements = []
    for v in ker:
        coords = v.flatten()
        m = Mat.zeros(x.algebra.n)
        for c, b in zip(coords, basis):
            if c != 0:
                m = m + b.scale(c)
        elements.append(LieElement(x.algebra, m))
    return Subspace.from_elements(x.algebra, elements)


def image_ad(x: LieElement) -> Subspace:
    """[g, x] as a subspace of the algebra."""
    basis = x.algebra.basis()
    return Subspace.from_elements(
        x.algebra,
        [LieElement(x.algebra, b * x.mat - x.mat * b) for b in basis],
    )


def jordan_decompose(x: LieElement):
    """Exact Jordan-Chevalley decomposition x = x_s + x_n.

    Newton iteration toward the squarefree part p of the characteristic
    polynomial: with u satisfying u * p' = 1 (mod p), the map
    a -> a - p(a) u(a) squares the ideal generated by p(a), so after at
    most ceil(log2 n) + 1 steps p(x_s) = 0 exactly.  Everything stays
    over Q; no eigenvalues are needed.
    """
    m = x.mat
    p = char_poly(m).squarefree_part()
    if p.degree == 0:
        raise LieError("unexpected constant squarefree part")
    g, _, u = poly_bezout(p, p.derivative())
    if g.degree != 0:
        raise LieError("squarefree part not coprime to its derivative")
    # scale so that u * p' = 1 (mod p) exactly
    u = u * Poly([ONE / g.coeffs[0]])
    a = m
    while True:
        pa = p.eval_matrix(a)
        if pa.is_zero():
            break
        a = a - pa * u.eval_matrix(a)
    x_s = LieElement(x.algebra, a)
    x_n = LieElement(x.algebra, m - a)
    return x_s, x_n


def semisimple_polynomial_witness(x: LieElement, x_s: LieElement) -> Poly:
    """Coefficients expressing x_s as a polynomial in x (Chevalley).

    Solves a linear system in the powers I, x, ..., x^(d-1) where d is the
    degree of the minimal polynomial of x; raises if no solution exists.
    """
    m = x.mat
    d = min_poly(m).degree
    n = m.rows
    powers = [Mat.identity(n)]
    for _ in range(d - 1):
        powers.append(powers[-1] * m)
    a = Mat(
        [
            [powers[k].flatten()[i] for k in range(d)]
            for i in range(n * n)
        ]
    )
    sol = solve(a, x_s.mat.flatten())
    if sol is None:
        raise LieError("semisimple part is not a polynomial in x")
    return Poly(sol.flatten())


@dataclass(frozen=True)
class Sl2Triple:
    e: LieElement
    h: LieElement
    f: LieElement

    def __post_init__(self):
        _same_algebra(self.e, self.h)
        _same_algebra(self.e, self.f)

    @property
    def algebra(self):
        return self.e.algebra

    def verify(self):
        ok = (
            bracket(self.e, self.f).mat == self.h.mat
            and bracket(self.h, self.e).mat == self.e.mat.scale(2)
            and bracket(self.h, self.f).mat == self.f.mat.scale(-2)
        )
        if not ok:
            raise LieError("sl2 bracket relations fail")
        return True

    def is_zero_triple(self):
        return self.e.is_zero() and self.h.is_zero() and self.f.is_zero()


def _least_norm_in_affine(point, directions):
    """Unique minimum-norm vector in point + span(directions), exactly.

    point and directions are flat Fraction vectors; uses the normal
    equations of the Euclidean form (positive definite, so the Gram matrix
    of an independent spanning set is invertible over Q).
    """
    dirs = echelon_basis(directions)
    if not dirs:
        return list(point)
    k = len(dirs)
    gram = Mat([[sum((a * b for a, b in zip(dirs[i], dirs[j])), ZERO) for j in range(k)] for i in range(k)])
    rhs = [-sum((a * b for a, b in zip(dirs[i], point)), ZERO) for i in range(k)]
    c = solve(gram, rhs)
    out = list(point)
    for i, ci in enumerate(c.flatten()):
        if ci != 0:
            out = [o + ci * d for o, d in zip(out, dirs[i])]
    return out


def jm_complete(e: LieElement, within: "Subspace | None" = None) -> Sl2Triple:
    """Jacobson-Morozov completion of a nonzero nilpotent e to (e, h, f).

    h is found by solving [[e, y], e] = 2e and taking the minimum-norm
    representative of the resulting affine family (well-defined and
    deterministic; on canonical Jordan representatives this reproduces the
    classical weighted-diagonal h).  f then solves [e, f] = h, [h, f] = -2f
    and is unique.

    With `within`, the system is solved inside that subalgebra (it must be
    closed under brackets and contain e), e.g. the derived algebra of a
    Levi; the whole triple then lies in it.
    """
    if e.is_zero():
        raise LieError("Jacobson-Morozov needs a nonzero nilpotent")
    if not e.is_nilpotent():
        raise LieError("element is not nilpotent")
    alg = e.algebra
    basis = [b.mat for b in within.basis] if within is not None else alg.basis()
    dim = len(basis)
    n = alg.n

    def flat(m):
        return m.flatten()

    # solve [[e, y], e] = 2e over y in g
    cols = []
    for b in basis:
        inner = e.mat * b - b * e.mat  # [e, b]
        outer = inner * e.mat - e.mat * inner  # [[e, b], e]
        cols.append(flat(outer))
    a = Mat([[cols[j][i] for j in range(dim)] for i in range(n * n)])
    rhs = flat(e.mat.scale(2))
    y0 = solve(a, rhs)
    if y0 is None:
        raise LieError("Jacobson-Morozov system is inconsistent")
    _, ker = rank_kernel(a)

    def combo(coords):
        m = Mat.zeros(n)
        for c, b in zip(coords, basis):
            if c != 0:
                m = m + b.scale(c)
        return m

    y0m = combo(y0.flatten())
    h0 = e.mat * y0m - y0m * e.mat
    dirs = []
    for v in ker:
        km = combo(v.flatten())
        d = e.mat * km - km * e.mat
        if not d.is_zero():
            dirs.append(flat(d))
    hflat = _least_norm_in_affine(flat(h0), dirs)
    h = Mat([hflat[i * n : (i + 1) * n] for i in range(n)])

    # solve [e, f] = h and [h, f] = -2f jointly
    rows = []
    rhs2 = []
    cols_e, cols_h = [], []
    for b in basis:
        cols_e.append(flat(e.mat * b - b * e.mat))
        cols_h.append(flat(h * b - b * h + b.scale(2)))
    stacked = Mat(
        [[cols_e[j][i] for j in range(dim)] for i in range(n * n)]
        + [[cols_h[j][i] for j in range(dim)] for i in range(n * n)]
    )
    target = flat(h) + [ZERO] * (n * n)
    fcoords = solve(stacked, target)
    if fcoords is None:
        raise LieError("no f completes the triple")
    f = combo(fcoords.flatten())

    triple = Sl2Triple(
        LieElement(alg, e.mat),
        LieElement(alg, h),
        LieElement(alg, f),
    )
    triple.verify()
    return triple


def nilpotent_representative(algebra: LieAlgebraSpec, parts) -> LieElement:
    """x_lambda: direct sum of Jordan blocks of sizes lambda_i, decreasing."""
    parts = tuple(sorted(parts, reverse=True))
    if sum(parts) != algebra.n:
        raise LieError("partition does not match the matrix size")
    m = Mat.zeros(algebra.n)
    offset = 0
    for p in parts:
        for i in range(p - 1):
            m.data[offset + i][offset + i + 1] = ONE
        offset += p
    return LieElement(algebra, m)


def subspace_sum_rank(a: Subspace, b: Subspace):
    return span_rank(a.flat_rows() + b.flat_rows())
