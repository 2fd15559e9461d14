"""Exact dense linear algebra over the rationals.

Everything downstream (centralizers, transversality verdicts, symplectic
Gram ranks) reduces to rank/kernel questions here, so this module performs
all arithmetic with `fractions.Fraction`.  Row reduction internally clears
denominators and works fraction-free over the integers (cross-multiply
updates, rows renormalized by their gcd, pivots chosen with minimal bit
length); results are converted back to reduced fractions at the end.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Q = Fraction

ZERO = Q(0)
ONE = Q(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, str):
        return Q(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class Mat:
    """Dense matrix of rationals, row-major, immutable by convention."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = [[_as_fraction(x) for x in row] for row in data]
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ValueError("ragged rows")
        self.rows = len(data)
        self.cols = cols
        self.data = data

    @staticmethod
    def zeros(rows, cols=None):
        cols = rows if cols is None else cols
        return Mat([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n):
        return Mat([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def diag(entries):
        entries = [_as_fraction(x) for x in entries]
        n = len(entries)
        m = [[ZERO] * n for _ in range(n)]
        for i, x in enumerate(entries):
            m[i][i] = x
        return Mat(m)

    @staticmethod
    def unit(n, i, j):
        """Elementary matrix E_ij (1-based indices are not used anywhere)."""
        m = [[ZERO] * n for _ in range(n)]
        m[i][j] = ONE
        return Mat(m)

    @staticmethod
    def column(entries):
        return Mat([[_as_fraction(x)] for x in entries])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Mat[{body}]"

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Mat(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Mat([[-x for x in row] for row in self.data])

    def scale(self, c):
        c = _as_fraction(c)
        return Mat([[c * x for x in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise ValueError("inner dimension mismatch")
            bt = list(zip(*other.data))
            return Mat(
                [
                    [
                        sum(a * b for a, b in zip(row, col))
                        for col in bt
                    ]
                    for row in self.data
                ]
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def matpow(self, k):
        if self.rows != self.cols:
            raise ValueError("matpow needs a square matrix")
        result = Mat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def transpose(self):
        return Mat([list(col) for col in zip(*self.data)])

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), ZERO)

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def flatten(self):
        """Row-major vector of entries."""
        return [x for row in self.data for x in row]

    def copy_rows(self):
        return [row[:] for row in self.data]


# ---------------------------------------------------------------------------
# Row reduction engine
# ---------------------------------------------------------------------------


def _int_row(row):
    """Clear denominators and divide out the content; returns a list of ints."""
    denom_lcm = 1
    for x in row:
        d = x.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(x * denom_lcm) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def rref(rows):
    """Reduced row echelon form of a list of Fraction rows.

    Returns (pivot_cols, reduced_rows) where reduced_rows are Fraction rows
    with unit pivots, zero rows dropped.  Deterministic: among candidate
    pivots the one of minimal bit length (then smallest row index) wins.
    """
    work = [r for r in (_int_row(row) for row in rows) if any(r)]
    if not work:
        return [], []
    cols = len(work[0])
    pivots = []
    r = 0
    for c in range(cols):
        best = None
        for i in range(r, len(work)):
            v = work[i][c]
            if v:
                if best is None or abs(v).bit_length() < abs(work[best][c]).bit_length():
                    best = i
        if best is None:
            continue
        work[r], work[best] = work[best], work[r]
        pv = work[r][c]
        for i in range(len(work)):
            if i == r:
                continue
            vi = work[i][c]
            if not vi:
                continue
            g = gcd(pv, vi)
            a, b = pv // g, vi // g
            row_i, row_r = work[i], work[r]
            for j in range(cols):
                row_i[j] = a * row_i[j] - b * row_r[j]
            g2 = 0
            for j in range(cols):
                g2 = gcd(g2, row_i[j])
                if g2 == 1:
                    break
            if g2 > 1:
                for j in range(cols):
                    row_i[j] //= g2
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    reduced = []
    for k, c in enumerate(pivots):
        pv = work[k][c]
        reduced.append([Q(v, pv) for v in work[k]])
    return pivots, reduced


def rank_of_rows(rows):
    return len(rref(rows)[0])


def rank_kernel(m: Mat):
    """Rank and a reduced-echelon-normalized kernel basis of m.

    Kernel vectors are returned as cols x 1 column matrices, one per free
    column, with a unit in the free coordinate.  rank + len(kernel) == cols.
    """
    pivots, reduced = rref(m.data)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for k, c in enumerate(pivots):
            v[c] = -reduced[k][f]
        basis.append(Mat.column(v))
    return len(pivots), basis


def solve(a: Mat, b):
    """One solution of a x = b, or None if inconsistent.

    Deterministic particular solution: free variables are set to zero.
    b may be a column Mat or a flat sequence.
    """
    bcol = b.flatten() if isinstance(b, Mat) else [_as_fraction(x) for x in b]
    if len(bcol) != a.rows:
        raise ValueError("right-hand side length mismatch")
    aug = [row[:] + [bcol[i]] for i, row in enumerate(a.data)]
    pivots, reduced = rref(aug)
    if a.cols in pivots:
        return None
    x = [ZERO] * a.cols
    for k, c in enumerate(pivots):
        x[c] = reduced[k][a.cols]
    return Mat.column(x)


def inverse(m: Mat):
    """Exact inverse, or None when m is singular."""
    if not m.is_square():
        raise ValueError("inverse needs a square matrix")
    n = m.rows
    aug = [row[:] + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m.data)]
    pivots, reduced = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return Mat([reduced[i][n:] for i in range(n)])


def span_rank(vectors):
    """Rank of the span of flat Fraction vectors."""
    return rank_of_rows([list(v) for v in vectors])


def echelon_basis(vectors):
    """Canonical (RREF) basis of the span of flat Fraction vectors."""
    _, reduced = rref([list(v) for v in vectors])
    return reduced


def in_span(vector, basis_rows):
    """Exact membership of a flat vector in the row span of basis_rows."""
    if not basis_rows:
        return all(x == 0 for x in vector)
    r0 = rank_of_rows(basis_rows)
    return rank_of_rows(basis_rows + [list(vector)]) == r0


def intersect_spans(basis_a, basis_b):
    """Basis (RREF rows) of the intersection of two spans of flat vectors."""
    if not basis_a or not basis_b:
        return []
    na, nb = len(basis_a), len(basis_b)
    cols = len(basis_a[0])
    # Solve sum c_i a_i = sum d_j b_j: kernel of [A^T | -B^T].
    stacked = Mat(
        [
            [basis_a[i][c] for i in range(na)] + [-basis_b[j][c] for j in range(nb)]
            for c in range(cols)
        ]
    )
    _, ker = rank_kernel(stacked)
    vecs = []
    for k in ker:
        coeffs = k.flatten()[:na]
        vecs.append(
            [sum((coeffs[i] * basis_a[i][c] for i in range(na)), ZERO) for c in range(cols)]
        )
    return echelon_basis(vecs)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero():
        return Poly([])

    @staticmethod
    def one():
        return Poly([1])

    @staticmethod
    def t():
        return Poly([0, 1])

    @staticmethod
    def from_roots(roots):
        p = Poly.one()
        for r in roots:
            p = p * Poly([-_as_fraction(r), 1])
        return p

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*t" if c != 1 else "t")
            else:
                terms.append(f"{c}*t^{k}" if c != 1 else f"t^{k}")
        return "Poly(" + " + ".join(terms) + ")"

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ZERO] * (n - len(self.coeffs))
        b = list(other.coeffs) + [ZERO] * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly.zero()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return Poly([_as_fraction(other) * c for c in self.coeffs])

    def __rmul__(self, other):
        return self * other

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            return Poly.zero(), Poly(rem)
        quot = [ZERO] * (dq + 1)
        inv_lead = ONE / div[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1] * inv_lead
            quot[k] = c
            if c != 0:
                for j, d in enumerate(div):
                    rem[k + j] -= c * d
        return Poly(quot), Poly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading()
        return Poly([c / lead for c in self.coeffs])

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def eval(self, x):
        x = _as_fraction(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: Mat) -> Mat:
        n = m.rows
        acc = Mat.zeros(n)
        for c in reversed(self.coeffs):
            acc = acc * m
            if c != 0:
                for i in range(n):
                    acc.data[i][i] += c
        return acc

    def squarefree_part(self):
        """p / gcd(p, p'); same roots, all simple."""
        if self.is_zero():
            raise ValueError("squarefree part of the zero polynomial")
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return (self // g).monic()


def squarefree_part(p: Poly) -> Poly:
    return p.squarefree_part()


def poly_bezout(a: Poly, b: Poly):
    """(g, u, v) with u*a + v*b = g = monic gcd(a, b)."""
    r0, r1 = a, b
    u0, u1 = Poly.one(), Poly.zero()
    v0, v1 = Poly.zero(), Poly.one()
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    lead = r0.leading()
    inv = Poly([ONE / lead])
    return r0.monic(), u0 * inv, v0 * inv


def char_poly(m: Mat) -> Poly:
    """Characteristic polynomial det(tI - m) by Faddeev-LeVerrier."""
    if not m.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    coeffs = [ONE]  # c_0 = 1 for t^n
    mk = Mat.zeros(n)
    for k in range(1, n + 1):
        # M_k = m (M_{k-1} + c_{k-1} I)
        shifted = Mat([row[:] for row in mk.data])
        for i in range(n):
            shifted.data[i][i] += coeffs[-1]
        mk = m * shifted
        ck = -mk.trace() / k
        coeffs.append(ck)
    # coeffs[k] multiplies t^(n-k)
    return Poly(list(reversed(coeffs)))


def min_poly(m: Mat) -> Poly:
    """Monic minimal polynomial: first linear dependence among powers of m."""
    if not m.is_square():
        raise ValueError("minimal polynomial needs a square matrix")
    n = m.rows
    powers = [Mat.identity(n)]
    vectors = [powers[0].flatten()]
    while True:
        nxt = powers[-1] * m
        target = nxt.flatten()
        a = Mat([[vectors[i][j] for i in range(len(vectors))] for j in range(n * n)])
        sol = solve(a, target)
        if sol is not None:
            cs = [-c for c in sol.flatten()]
            cs.append(ONE)
            return Poly(cs)
        powers.append(nxt)
        vectors.append(target)


def _poly_matrix_of(m: Mat):
    n = m.rows
    return [
        [
            Poly([-m.data[i][j], 1]) if i == j else Poly([-m.data[i][j]])
            for j in range(n)
        ]
        for i in range(n)
    ]


def invariant_factors(m: Mat):
    """Nonconstant invariant factors of tI - m (Smith form over Q[t]).

    Returned monic and in divisibility order d_1 | d_2 | ... | d_k; their
    product is the characteristic polynomial and d_k is the minimal
    polynomial.
    """
    if not m.is_square():
        raise ValueError("invariant factors need a square matrix")
    n = m.rows
    p = _poly_matrix_of(m)

    def find_pivot(k):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                if not p[i][j].is_zero():
                    if best is None or p[i][j].degree < p[best[0]][best[1]].degree:
                        best = (i, j)
        return best

    for k in range(n):
        while True:
            pos = find_pivot(k)
            if pos is None:
                break
            i0, j0 = pos
            if i0 != k:
                p[i0], p[k] = p[k], p[i0]
            if j0 != k:
                for row in p:
                    row[j0], row[k] = row[k], row[j0]
            pivot = p[k][k].monic()
            scale = Poly([ONE / p[k][k].leading()])
            p[k] = [scale * e for e in p[k]]
            dirty = False
            for i in range(k + 1, n):
                if not p[i][k].is_zero():
                    q = p[i][k] // pivot
                    p[i] = [p[i][j] - q * p[k][j] for j in range(n)]
                    if not p[i][k].is_zero():
                        dirty = True
            for j in range(k + 1, n):
                if not p[k][j].is_zero():
                    q = p[k][j] // pivot
                    for i in range(n):
                        p[i][j] = p[i][j] - q * p[i][k]
                    if not p[k][j].is_zero():
                        dirty = True
            if dirty:
                continue
            # here row/col k are clear; enforce divisibility of the rest
            offender = None
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if not (p[i][j] % pivot).is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            p[k] = [p[k][j] + p[offender][j] for j in range(n)]
    diag = [p[k][k].monic() for k in range(n)]
    return [d for d in diag if d.degree >= 1]


def companion(p: Poly) -> Mat:
    """Companion matrix of a monic polynomial, ones on the subdiagonal."""
    if p.is_zero() or p.leading() != 1:
        raise ValueError("companion matrix needs a monic polynomial")
    d = p.degree
    if d < 1:
        raise ValueError("companion matrix needs degree >= 1")
    m = Mat.zeros(d)
    for i in range(1, d):
        m.data[i][i - 1] = ONE
    for i in range(d):
        m.data[i][d - 1] = -p.coeffs[i]
    return m


def rational_canonical_form(m: Mat) -> Mat:
    """Canonical representative of the GL_n(Q)-conjugacy class of m.

    Block diagonal of companion matrices of the invariant factors; two
    matrices are conjugate over Q iff their forms agree entrywise.
    """
    factors = invariant_factors(m)
    n = m.rows
    out = Mat.zeros(n)
    offset = 0
    for f in factors:
        block = companion(f)
        d = block.rows
        for i in range(d):
            for j in range(d):
                out.data[offset + i][offset + j] = block.data[i][j]
        offset += d
    return out


def block_diag(mats):
    n = sum(m.rows for m in mats)
    out = Mat.zeros(n, sum(m.cols for m in mats))
    r = c = 0
    for m in mats:
        for i in range(m.rows):
            for j in range(m.cols):
                out.data[r + i][c + j] = m.data[i][j]
        r += m.rows
        c += m.cols
    return out


def rational_roots(p: Poly):
    """All rational roots of p with multiplicity, plus the rootless cofactor.

    Returns (roots, remainder) where remainder is the monic factor of p with
    no rational roots (Poly.one() when p splits over Q).
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    work = p.monic()
    roots = []
    while work.degree >= 1:
        root = _find_rational_root(work)
        if root is None:
            break
        roots.append(root)
        work = work // Poly([-root, 1])
    return roots, work


def _find_rational_root(p: Poly):
    # clear denominators to a primitive integer polynomial
    denom_lcm = 1
    for c in p.coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p.coeffs]
    if ints[0] == 0:
        return ZERO
    lead = abs(ints[-1])
    const = abs(ints[0])
    for num in sorted(_divisors(const)):
        for den in sorted(_divisors(lead)):
            for cand in (Q(num, den), Q(-num, den)):
                if p.eval(cand) == 0:
                    return cand
    return None


def _divisors(n):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out
