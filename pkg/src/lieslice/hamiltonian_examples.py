"""Concrete Hamiltonian example spaces and the cotangent groupoid of GL_n.

Coadjoint orbits (moment map = inclusion under the trace-form
identification of g with its dual), the defining Sp_2n-representation with
its quadratic moment map, and T*GL_n as a groupoid over gl_n with source
xi and target Ad_g(xi).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import Mat, ONE, ZERO, char_poly, inverse, intersect_spans, rank_of_rows
from .lie_core import (
    LieAlgebraSpec,
    LieElement,
    LieError,
    centralizer,
    gl,
    image_ad,
)
from .slices import AffineSlice, poisson_slice_check

Q = Fraction


@dataclass(frozen=True)
class CoadjointOrbitSpace:
    """Adjoint (= coadjoint) orbit of base_point; the moment map is inclusion."""

    base_point: LieElement

    @property
    def algebra(self):
        return self.base_point.algebra

    @property
    def dim(self):
        return image_ad(self.base_point).dim


@dataclass(frozen=True)
class CotangentFlagSpace:
    """T*(G/P) for the parabolic of gl_n with the given Levi block sizes."""

    algebra: LieAlgebraSpec
    blocks: tuple

    def __post_init__(self):
        if sum(self.blocks) != self.algebra.n:
            raise LieError("parabolic blocks must sum to n")

    @property
    def dim(self):
        n = self.algebra.n
        return n * n - sum(b * b for b in self.blocks)


def orbit_fiber_over_cartan(orbit: CoadjointOrbitSpace):
    """All diagonal points of a regular semisimple orbit: |W| = n! of them."""
    x = orbit.base_point
    if not x.is_diagonal():
        raise LieError("base point must be diagonal")
    n = x.algebra.n
    diag = [x.mat.data[i][i] for i in range(n)]
    if len(set(diag)) != n:
        raise LieError("base point must be regular (distinct eigenvalues)")
    import itertools

    out = []
    for perm in sorted(set(itertools.permutations(diag))):
        out.append(LieElement(x.algebra, Mat.diag(list(perm))))
    return out


# ---------------------------------------------------------------------------
# The defining representation of Sp_2n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymplecticVectorSpace:
    """Q^2n with the standard form omega(u, v) = u^T J v, J = [[0, I], [-I, 0]]."""

    n: int

    @property
    def dim(self):
        return 2 * self.n

    def form_matrix(self) -> Mat:
        n = self.n
        j = Mat.zeros(2 * n)
        for i in range(n):
            j.data[i][n + i] = ONE
            j.data[n + i][i] = -ONE
        return j

    def omega(self, u, v):
        j = self.form_matrix()
        return sum(
            (u[i] * j.data[i][k] * v[k] for i in range(2 * self.n) for k in range(2 * self.n)),
            ZERO,
        )

    def sp_contains(self, m: Mat) -> bool:
        j = self.form_matrix()
        return (m.transpose() * j + j * m).is_zero()

    def sp_basis(self):
        """Basis of sp_2n: [[A, B], [C, -A^T]] with B, C symmetric."""
        n = self.n
        out = []
        for i in range(n):
            for j in range(n):
                m = Mat.zeros(2 * n)
                m.data[i][j] = ONE
                m.data[n + j][n + i] = -ONE
                out.append(m)
        for i in range(n):
            for j in range(i, n):
                m = Mat.zeros(2 * n)
                m.data[i][n + j] = ONE
                m.data[j][n + i] = ONE
                out.append(m)
        for i in range(n):
            for j in range(i, n):
                m = Mat.zeros(2 * n)
                m.data[n + i][j] = ONE
                m.data[n + j][i] = ONE
                out.append(m)
        return out


def sp_moment(space: SymplecticVectorSpace, v) -> Mat:
    """Quadratic moment map mu(v) = (1/2) v (Jv)^T of the defining action.

    Normalized so that tr(mu(v) xi) = (1/2) omega(xi v, v) for all xi in
    sp_2n, which matches the Hamiltonian convention with generating vector
    fields d/dt exp(-t xi).  mu(v) is nilpotent of rank <= 1 and vanishes
    only at v = 0.
    """
    v = [Fraction(x) for x in v]
    if len(v) != space.dim:
        raise LieError("vector length must be 2n")
    j = space.form_matrix()
    jv = [
        sum((j.data[i][k] * v[k] for k in range(space.dim)), ZERO)
        for i in range(space.dim)
    ]
    m = Mat([[v[i] * jv[k] / 2 for k in range(space.dim)] for i in range(space.dim)])
    return m


def sp_vector_norm_identity(space: SymplecticVectorSpace, v):
    """tr(mu(v) J^T); equals -(1/2) sum v_i^2, forcing mu^{-1}(0) = {0}."""
    m = sp_moment(space, v)
    jt = space.form_matrix().transpose()
    return (m * jt).trace()


def sp_stabilizer_of_moment(space: SymplecticVectorSpace, v):
    """Basis of n(mu(v)) = centralizer of mu(v) inside sp_2n."""
    from .exact_linalg import rank_kernel

    x = sp_moment(space, v)
    basis = space.sp_basis()
    cols = [(b * x - x * b).flatten() for b in basis]
    d = space.dim
    stacked = Mat([[cols[j][i] for j in range(len(basis))] for i in range(d * d)])
    _, ker = rank_kernel(stacked)
    out = []
    for k in ker:
        m = Mat.zeros(d)
        for c, b in zip(k.flatten(), basis):
            if c != 0:
                m = m + b.scale(c)
        out.append(m)
    return out


def sp_transvection(space: SymplecticVectorSpace, u, c) -> Mat:
    """Symplectic transvection w -> w + c omega(w, u) u, exactly in Sp(Q)."""
    u = [Fraction(x) for x in u]
    c = Fraction(c)
    j = space.form_matrix()
    d = space.dim
    ju = [sum((j.data[i][k] * u[k] for k in range(d)), ZERO) for i in range(d)]
    m = Mat.identity(d)
    # w^T J u = (J^T w) . u, so the rank-one update is c * u (J^T u ... )
    for i in range(d):
        for k in range(d):
            m.data[i][k] += c * u[i] * (-ju[k])
    if not _is_symplectic(space, m):
        raise LieError("transvection construction failed")
    return m


def _is_symplectic(space: SymplecticVectorSpace, g: Mat) -> bool:
    j = space.form_matrix()
    return (g.transpose() * j * g) == j


# ---------------------------------------------------------------------------
# The cotangent groupoid of GL_n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CotangentGroupoid:
    """T*GL_n = GL_n x gl_n over gl_n, left trivialized."""

    n: int

    @property
    def algebra(self):
        return gl(self.n)

    def element(self, g: Mat, xi: LieElement):
        if inverse(g) is None:
            raise LieError("group component must be invertible")
        return (g, xi)

    def source(self, elt):
        return elt[1]

    def target(self, elt):
        g, xi = elt
        ginv = inverse(g)
        return LieElement(self.algebra, g * xi.mat * ginv)

    def composable(self, a, b):
        return self.source(a).mat == self.target(b).mat

    def multiply(self, a, b):
        if not self.composable(a, b):
            raise LieError("elements are not composable")
        return (a[0] * b[0], b[1])

    def identity_bisection(self, xi: LieElement):
        return (Mat.identity(self.n), xi)

    def inverse_element(self, elt):
        g, xi = elt
        return (inverse(g), self.target(elt))


def groupoid_axiom_suite(gpd: CotangentGroupoid, seed=0, samples=100):
    """Exact verification of groupoid axioms (i)-(vi) on seeded samples.

    Composable pairs are built by construction (eta = Ad_{h^{-1}} xi); all
    identities are checked entrywise over Q.  Failures are collected, not
    raised.
    """
    from .sampling import SampleSource

    src = SampleSource(seed)
    alg = gpd.algebra
    failures = []
    checks = 0

    def check(name, cond):
        nonlocal checks
        checks += 1
        if not cond:
            failures.append(name)

    for trial in range(samples):
        g = src.invertible(gpd.n)
        h = src.invertible(gpd.n)
        k = src.invertible(gpd.n)
        xi = LieElement(alg, src.matrix(gpd.n))
        a = (g, xi)
        ta = gpd.target(a)
        # (iii) identities
        one = gpd.identity_bisection(xi)
        check("source_of_identity", gpd.source(one).mat == xi.mat)
        check("target_of_identity", gpd.target(one).mat == xi.mat)
        # composable pair: b with target(b) = source(a)
        hinv = inverse(h)
        b = (h, LieElement(alg, hinv * xi.mat * h))
        check("composability", gpd.composable(a, b))
        ab = gpd.multiply(a, b)
        # (i) source/target of products
        check("source_of_product", gpd.source(ab).mat == gpd.source(b).mat)
        check("target_of_product", gpd.target(ab).mat == gpd.target(a).mat)
        # (ii) associativity on a composable triple
        kinv = inverse(k)
        c = (k, LieElement(alg, kinv * gpd.source(b).mat * k))
        check(
            "associativity",
            gpd.multiply(gpd.multiply(a, b), c) == gpd.multiply(a, gpd.multiply(b, c)),
        )
        # (iv) unit laws
        check("left_unit", gpd.multiply(gpd.identity_bisection(ta), a) == a)
        check("right_unit", gpd.multiply(a, gpd.identity_bisection(xi)) == a)
        # (v)-(vi) inversion
        ainv = gpd.inverse_element(a)
        check("inverse_source", gpd.source(ainv).mat == ta.mat)
        check("inverse_target", gpd.target(ainv).mat == xi.mat)
        check(
            "right_inverse",
            gpd.multiply(a, ainv) == gpd.identity_bisection(ta),
        )
        check(
            "left_inverse",
            gpd.multiply(ainv, a) == gpd.identity_bisection(xi),
        )
    return {"suite": "groupoid", "samples": samples, "checks": checks, "failures": failures, "pass": not failures}


def slice_theorem_tangent_check(space: CoadjointOrbitSpace, slice_: AffineSlice, x: LieElement):
    """Tangent-level bookkeeping of the groupoid slice theorem at x.

    At the identity-bisection point over x, T G_S and T G_S^S are the
    preimages of T S under ds(v, eta) = eta and dt(v, eta) = [v, x] + eta
    inside g x g.  The report records all dimensions, whether
    dim T G_S + dim T mu^{-1}(S) - dim T G_S^S = dim T M closes, and the
    Poisson-slice verdict at x; ok requires both.
    """
    alg = x.algebra
    if not slice_.contains(x):
        raise LieError("x does not lie on the slice")
    if char_poly(x.mat) != char_poly(space.base_point.mat):
        raise LieError("x does not lie on the orbit (characteristic polynomials differ)")
    orbit_rows = image_ad(x).flat_rows()
    slice_rows = slice_.tangent_rows()
    dim_m = rank_of_rows(orbit_rows)
    inter = intersect_spans(orbit_rows, slice_rows)
    dim_fiber = len(inter)
    dim_gs = alg.dim + len(slice_rows)
    dim_gx = centralizer(x).dim
    dim_gss = dim_gx + dim_fiber + len(slice_rows)
    closes = dim_gs + dim_fiber - dim_gss == dim_m
    verdict = poisson_slice_check(slice_, x)
    return {
        "dim_M": dim_m,
        "dim_T_G_S": dim_gs,
        "dim_T_fiber": dim_fiber,
        "dim_T_G_S_S": dim_gss,
        "identity_closes": closes,
        "poisson": verdict,
        "ok": closes and verdict["transversal_ok"] and verdict["symplectic_ok"],
    }
