"""Subquotients attached to an element x: L(x), L(x)', T(x), N(x), A(x), C(x).

Dimensions come from exact centralizer kernels; component data comes from
integer lattice computations (Smith normal form over Z).  In type A every
component group is a product of cyclic groups: C(x) is the product of
Z_{gcd lambda^(i)} over the eigenvalue blocks, and the torsion of A(x) is
cyclic of order gcd of all parts (trivial in gl_n, where centralizers are
connected).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exact_linalg import Mat, ONE, char_poly, rank_kernel
from .lie_core import (
    LieElement,
    LieError,
    centralizer,
    gl,
    jm_complete,
    jordan_decompose,
    nilpotent_representative,
)
from .decomp_classes import (
    class_perp,
    derived_centralizer,
    nilpotent_centralizer_in_derived,
    spectral_data,
)
from .root_combinatorics import Partition


def smith_invariants(rows):
    """Invariant factors (nonzero diagonal of the Smith form) of an integer
    matrix, in divisibility order.  Small matrices only."""
    if not rows or not rows[0]:
        return []
    m = [list(map(int, r)) for r in rows]
    nr, nc = len(m), len(m[0])
    out = []
    top = 0
    while top < min(nr, nc):
        pos = None
        for i in range(top, nr):
            for j in range(top, nc):
                if m[i][j] != 0 and (
                    pos is None or abs(m[i][j]) < abs(m[pos[0]][pos[1]])
                ):
                    pos = (i, j)
        if pos is None:
            break
        i0, j0 = pos
        m[top], m[i0] = m[i0], m[top]
        for row in m:
            row[top], row[j0] = row[j0], row[top]
        dirty = False
        piv = m[top][top]
        for i in range(top + 1, nr):
            if m[i][top] % piv:
                q = m[i][top] // piv
                m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                dirty = True
            elif m[i][top]:
                q = m[i][top] // piv
                m[i] = [a - q * b for a, b in zip(m[i], m[top])]
        for j in range(top + 1, nc):
            if m[top][j] % piv:
                q = m[top][j] // piv
                for row in m:
                    row[j] -= q * row[top]
                dirty = True
            elif m[top][j]:
                q = m[top][j] // piv
                for row in m:
                    row[j] -= q * row[top]
        if dirty:
            continue
        # divisibility sweep
        offender = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if m[i][j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            m[top] = [a + b for a, b in zip(m[top], m[offender])]
            continue
        out.append(abs(piv))
        top += 1
    return out


def abelian_quotient(generator_orders, relation_rows):
    """Invariant factors of Z^k / (order relations + extra relations).

    generator_orders[i] == 0 means a free generator.  Returns
    (free_rank, torsion_invariants).
    """
    k = len(generator_orders)
    rows = []
    for i, d in enumerate(generator_orders):
        if d:
            rows.append([d if j == i else 0 for j in range(k)])
    rows.extend(list(r) for r in relation_rows)
    if not rows:
        return k, ()
    inv = smith_invariants(rows)
    free_rank = k - len(inv)
    torsion = tuple(d for d in inv if d > 1)
    return free_rank, torsion


@dataclass(frozen=True)
class SubquotientData:
    dim_L: int
    dim_Lprime: int
    rank_T: int
    dim_N: int
    dim_A: int
    C_order: int
    C_structure: tuple  # invariant factors of C(x)
    A_rank: int
    A_torsion_order: int
    exact_sequence: tuple  # (C_order, rank_T)

    @property
    def C_is_cyclic(self):
        return len(self.C_structure) <= 1

    @property
    def C_is_abelian(self):
        return True  # product of cyclic groups by construction (type A)


def _block_data(x: LieElement):
    data = spectral_data(x)
    blocks = tuple(mult for _, mult, _ in data)
    types = tuple(lam for _, _, lam in data)
    return blocks, types


def subquotient_data(x: LieElement) -> SubquotientData:
    """Exact dimensions and component data of the subquotients at x."""
    alg = x.algebra
    blocks, types = _block_data(x)
    k = len(blocks)
    x_s, x_n = jordan_decompose(x)

    dim_L = centralizer(x_s).dim
    dim_Lprime = derived_centralizer(x_s).dim
    dim_N = nilpotent_centralizer_in_derived(x).dim
    dim_Gx = centralizer(x).dim
    dim_A = dim_Gx - dim_N

    rank_Lprime = sum(m - 1 for m in blocks)
    rank_T = alg.rank - rank_Lprime
    if rank_T != dim_A:
        raise LieError("rank bookkeeping failed: rank_T != dim_A")

    dvals = [_gcd_of_parts(lam) for lam in types]
    c_order = 1
    for d in dvals:
        c_order *= d
    _, c_struct = abelian_quotient([d for d in dvals], [])

    a_rank, a_torsion = _a_presentations(alg.family, blocks, dvals)

    return SubquotientData(
        dim_L=dim_L,
        dim_Lprime=dim_Lprime,
        rank_T=rank_T,
        dim_N=dim_N,
        dim_A=dim_A,
        C_order=c_order,
        C_structure=c_struct,
        A_rank=a_rank,
        A_torsion_order=a_torsion,
        exact_sequence=(c_order, rank_T),
    )


def _gcd_of_parts(lam: Partition):
    g = 0
    for p in lam.parts:
        g = gcd(g, p)
    return g if g else 1


def _a_presentations(family, blocks, dvals):
    """(rank, torsion order) of A(x), computed two independent ways.

    Direct route: rank = rank T(x); torsion = |pi_0(G_x)|, which is trivial
    for GL and Z_{gcd of all parts} for SL.  Fibered route: cokernel of the
    antidiagonal Z(L') relations on pi_0(Z(L)) x C(x) via Smith form.  The
    two must agree; disagreement raises.
    """
    k = len(blocks)
    if family == "gl":
        rank_direct = k
        torsion_direct = 1
    else:
        rank_direct = k - 1
        g_all = 0
        for d in dvals:
            g_all = gcd(g_all, d)
        torsion_direct = g_all if g_all else 1

    # fibered product route: generators (t, c_1..c_k)
    if family == "gl":
        g0 = 1
    else:
        g0 = 0
        for m in blocks:
            g0 = gcd(g0, m)
    orders = [g0] + list(dvals)
    relations = []
    s = 1 if family == "sl" else 0
    for i in range(k):
        row = [s] + [0] * k
        row[1 + i] = -1
        relations.append(row)
    _, torsion_inv = abelian_quotient(orders, relations)
    torsion_fibered = 1
    for d in torsion_inv:
        torsion_fibered *= d

    if torsion_fibered != torsion_direct:
        raise LieError(
            "A(x) presentations disagree: "
            f"direct torsion {torsion_direct}, fibered {torsion_fibered}"
        )
    return rank_direct, torsion_direct


def ax_presentation(x: LieElement):
    """The two descriptions of A(x) and their reconciliation, as a record."""
    alg = x.algebra
    blocks, types = _block_data(x)
    k = len(blocks)
    dvals = [_gcd_of_parts(lam) for lam in types]
    if alg.family == "gl":
        z_l_rank, z_l_pi0 = k, 1
    else:
        g0 = 0
        for m in blocks:
            g0 = gcd(g0, m)
        z_l_rank, z_l_pi0 = k - 1, g0 if g0 else 1
    z_lprime_order = 1
    for m in blocks:
        z_lprime_order *= m
    c_order = 1
    for d in dvals:
        c_order *= d
    a_rank, a_torsion = _a_presentations(alg.family, blocks, dvals)
    sq = subquotient_data(x)
    return {
        "Z_L_rank": z_l_rank,
        "Z_L_pi0_order": z_l_pi0,
        "Z_Lprime_order": z_lprime_order,
        "C_order": c_order,
        "A_rank": a_rank,
        "A_torsion_order": a_torsion,
        "rank_T": sq.rank_T,
        "consistent": a_rank == sq.rank_T,
    }


@dataclass(frozen=True)
class PerpCertificate:
    perp_dim: int
    derived_centralizer_dim: int
    perp_in_n: bool
    n_in_perp: bool

    @property
    def equal(self):
        return self.perp_in_n and self.n_in_perp and (
            self.perp_dim == self.derived_centralizer_dim
        )


def trivial_action_core(x: LieElement) -> PerpCertificate:
    """Certificate that (T_x D)^perp equals n(x) = [g_{x_s}, g_{x_s}]_{x_n}.

    Two independent computations (trace-form annihilator of the tangent
    space; intersection of the derived Levi with the x_n-centralizer) are
    compared by double inclusion, each a rank test.
    """
    perp = class_perp(x)
    n_x = nilpotent_centralizer_in_derived(x)
    return PerpCertificate(
        perp_dim=perp.dim,
        derived_centralizer_dim=n_x.dim,
        perp_in_n=n_x.contains_subspace(perp),
        n_in_perp=perp.contains_subspace(n_x),
    )


# ---------------------------------------------------------------------------
# Explicit component-group computation (desk-scale cross-check)
# ---------------------------------------------------------------------------


def component_group_explicit(lam: Partition):
    """pi_0 of the SL_m-stabilizer of a canonical nilpotent of type lam.

    Works directly with the stabilizer: computes the reductive part as the
    joint centralizer J of the sl2-triple through e (dim J must equal
    sum r_j^2 over part multiplicities), exhibits the per-Jordan-block
    projectors inside J, reads off the determinant weight of each one
    exactly (det(I + p) must be a power of 2), and returns the cokernel
    gcd of those weights, which is the number of components.
    """
    m = lam.size
    alg = gl(m)
    if lam.parts == (1,) * m:
        return 1, {"weights": [], "reductive_dim": m * m}
    e = nilpotent_representative(alg, lam.parts)
    triple = jm_complete(e)
    basis = alg.basis()
    # kernel of b -> ([b,e], [b,h], [b,f]) stacked
    cols = []
    for b in basis:
        col = []
        for t in (triple.e.mat, triple.h.mat, triple.f.mat):
            col.extend((b * t - t * b).flatten())
        cols.append(col)
    stacked = Mat([[cols[j][i] for j in range(len(basis))] for i in range(3 * m * m)])
    _, ker = rank_kernel(stacked)
    reductive_dim = len(ker)
    mult = {}
    for p in lam.parts:
        mult[p] = mult.get(p, 0) + 1
    expected = sum(r * r for r in mult.values())
    if reductive_dim != expected:
        raise LieError(
            f"reductive part has dim {reductive_dim}, expected {expected}"
        )
    # per-block projectors in the canonical basis
    weights = []
    offset = 0
    for p in sorted(lam.parts, reverse=True):
        proj = Mat.zeros(m)
        for i in range(p):
            proj.data[offset + i][offset + i] = ONE
        offset += p
        for t in (triple.e.mat, triple.h.mat, triple.f.mat):
            if not (proj * t - t * proj).is_zero():
                raise LieError("block projector does not centralize the triple")
        doubled = Mat.identity(m) + proj  # = 2 on the block, 1 elsewhere
        det = _determinant(doubled)
        w = det.numerator.bit_length() - 1
        if det != 2**w:
            raise LieError("projector determinant is not a power of two")
        weights.append(w)
    g = 0
    for w in weights:
        g = gcd(g, w)
    return (g if g else 1), {"weights": weights, "reductive_dim": reductive_dim}


def _determinant(m: Mat):
    p = char_poly(m)
    n = m.rows
    return p.coeffs[0] * (-1) ** n
