"""Seeded verification sweeps.

Each sweep instantiates one family of theorems as exact checks over seeded
random samples and returns a report dict: suite name, parameters, number
of checks, list of failure descriptions, and an overall pass flag.  The
acceptance suite, the CLI `verify` command, and the service `/verify`
endpoint all call these functions; defaults are the acceptance parameters.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact_linalg import (
    Mat,
    ONE,
    ZERO,
    char_poly,
    min_poly,
    rank_of_rows,
    rational_canonical_form,
)
from .lie_core import (
    LieElement,
    bracket,
    centralizer,
    element,
    gl,
    jm_complete,
    jordan_decompose,
    nilpotent_representative,
    semisimple_polynomial_witness,
    sl,
)
from .decomp_classes import (
    class_dimension,
    class_dimension_rank_check,
    class_representative,
    classify,
    enumerate_classes,
)
from .residual_groups import (
    ax_presentation,
    component_group_explicit,
    subquotient_data,
    trivial_action_core,
)
from .root_combinatorics import (
    LeviOrbitPair,
    Partition,
    compositions_of,
    dominance_leq,
    induced_orbit_dimension,
    ls_induce,
    orbit_dimension,
    partitions_of,
    richardson,
)
from .slices import (
    AffineSlice,
    cartan_membership,
    complementary_slice,
    contracting_weights,
    fundamental_rep,
    membership_Sx_descriptor,
    membership_Sx_rank,
    natural_slice,
    poisson_slice_check,
    principal_triple,
    slodowy_slice,
)
from .hamiltonian_examples import (
    CoadjointOrbitSpace,
    CotangentGroupoid,
    SymplecticVectorSpace,
    groupoid_axiom_suite,
    orbit_fiber_over_cartan,
    slice_theorem_tangent_check,
    sp_moment,
    sp_stabilizer_of_moment,
    sp_vector_norm_identity,
)
from .sampling import SampleSource
from .lie_core import Subspace

Q = Fraction


class _Report:
    def __init__(self, suite, **params):
        self.suite = suite
        self.params = params
        self.checks = 0
        self.failures = []

    def check(self, ok, describe):
        self.checks += 1
        if not ok:
            self.failures.append(describe() if callable(describe) else describe)

    def done(self, **extra):
        out = {
            "suite": self.suite,
            "parameters": self.params,
            "checks": self.checks,
            "failures": self.failures,
            "pass": not self.failures,
        }
        out.update(extra)
        return out


def jordan_sweep(seed=0, samples=100, n_max=6):
    """Jordan-Chevalley certificates on seeded random rational matrices."""
    rep = _Report("jordan", seed=seed, samples=samples, n_max=n_max)
    src = SampleSource(seed)
    for n in range(2, n_max + 1):
        alg = gl(n)
        for _ in range(samples):
            m = src.jordan_test_matrix(n)
            x = element(alg, m)
            x_s, x_n = jordan_decompose(x)
            rep.check(x_s.mat + x_n.mat == m, f"n={n}: sum fails")
            rep.check(
                (x_s.mat * x_n.mat - x_n.mat * x_s.mat).is_zero(),
                f"n={n}: parts do not commute",
            )
            mp = min_poly(x_s.mat)
            rep.check(mp == mp.squarefree_part(), f"n={n}: min poly of x_s not squarefree")
            rep.check(x_n.mat.matpow(n).is_zero(), f"n={n}: x_n not nilpotent")
            witness = semisimple_polynomial_witness(x, x_s)
            rep.check(
                witness.eval_matrix(m) == x_s.mat,
                f"n={n}: polynomial witness fails",
            )
    return rep.done()


def jm_sweep(n_max=6):
    """Triple relations and Slodowy dimension for every orbit, n <= n_max."""
    rep = _Report("jm", n_max=n_max)
    for n in range(2, n_max + 1):
        alg = gl(n)
        for lam in partitions_of(n):
            if lam.parts == (1,) * n:
                continue
            e = nilpotent_representative(alg, lam.parts)
            triple = jm_complete(e)
            rep.check(
                bracket(triple.e, triple.f).mat == triple.h.mat,
                f"n={n} {lam.parts}: [e,f] != h",
            )
            rep.check(
                bracket(triple.h, triple.e).mat == triple.e.mat.scale(2),
                f"n={n} {lam.parts}: [h,e] != 2e",
            )
            rep.check(
                bracket(triple.h, triple.f).mat == triple.f.mat.scale(-2),
                f"n={n} {lam.parts}: [h,f] != -2f",
            )
            slod = slodowy_slice(triple)
            rep.check(
                slod.dim == centralizer(e).dim,
                f"n={n} {lam.parts}: slice dim != centralizer dim",
            )
    return rep.done()


def slodowy_sweep(seed=0, samples=50, n_max=4, n=None):
    """Poisson transversality of S_T at random points, every orbit."""
    rep = _Report("slodowy", seed=seed, samples=samples, n_max=n_max)
    src = SampleSource(seed)
    ns = [n] if n else range(2, n_max + 1)
    for nn in ns:
        alg = gl(nn)
        for lam in partitions_of(nn):
            if lam.parts == (1,) * nn:
                continue
            triple = jm_complete(nilpotent_representative(alg, lam.parts))
            slod = slodowy_slice(triple)
            rows = slod.tangent_rows()
            for _ in range(samples):
                pt = element(alg, src.subspace_point(triple.e.mat, rows))
                verdict = poisson_slice_check(slod, pt)
                rep.check(
                    verdict["transversal_ok"] and verdict["symplectic_ok"],
                    f"n={nn} {lam.parts}: {verdict}",
                )
    return rep.done()


def fundamental_sweep(seed=0, samples=50, n_max=5):
    """Fundamental-domain property of the principal slice."""
    rep = _Report("fundamental", seed=seed, samples=samples, n_max=n_max)
    src = SampleSource(seed)
    for n in range(2, n_max + 1):
        alg = gl(n)
        points = {}
        produced = 0
        while produced < samples:
            m = src.jordan_test_matrix(n)
            x = element(alg, m)
            if centralizer(x).dim != n:
                continue
            produced += 1
            s = fundamental_rep(x)
            rep.check(
                char_poly(s.mat) == char_poly(m),
                f"n={n}: characteristic polynomial mismatch",
            )
            # regular => cyclic, so the canonical form is the companion matrix
            rep.check(
                rational_canonical_form(s.mat) == rational_canonical_form(m),
                f"n={n}: slice point not conjugate to input",
            )
            key = char_poly(m).coeffs
            if key in points:
                rep.check(
                    points[key] == s.mat,
                    f"n={n}: same char poly gave two slice points",
                )
            points[key] = s.mat
        # injectivity: distinct characteristic polynomials, distinct points
        seen = list(points.items())
        for i in range(len(seen)):
            for j in range(i + 1, len(seen)):
                rep.check(
                    seen[i][1] != seen[j][1],
                    f"n={n}: distinct char polys share a slice point",
                )
    return rep.done()


def contracting_sweep(n_max=6):
    """Weight nonpositivity on g_f, shifted weights >= 2, exhaustively."""
    rep = _Report("contracting", n_max=n_max)
    for n in range(2, n_max + 1):
        alg = gl(n)
        for lam in partitions_of(n):
            if lam.parts == (1,) * n:
                continue
            triple = jm_complete(nilpotent_representative(alg, lam.parts))
            weights = contracting_weights(triple)
            rep.check(
                all(w <= 0 for w in weights),
                f"n={n} {lam.parts}: positive weight in {weights}",
            )
            rep.check(
                all(2 - w >= 2 for w in weights),
                f"n={n} {lam.parts}: slice weight below 2",
            )
            rep.check(
                len(weights) == centralizer(LieElement(alg, triple.f.mat)).dim,
                f"n={n} {lam.parts}: weight multiplicities do not fill g_f",
            )
    return rep.done()


def induction_sweep(seed=0, samples=25, n_max=6, richardson_n_max=8):
    """Richardson transpose identity, dimension identity, Borel saturation."""
    rep = _Report(
        "induction", seed=seed, samples=samples, n_max=n_max, richardson_n_max=richardson_n_max
    )
    for n in range(1, richardson_n_max + 1):
        for blocks in compositions_of(n):
            rich = richardson(blocks)
            expected = Partition(tuple(sorted(blocks, reverse=True))).transpose()
            rep.check(
                rich == expected,
                f"richardson{blocks} = {rich.parts}, transpose says {expected.parts}",
            )
    for n in range(1, n_max + 1):
        for blocks in compositions_of(n):
            import itertools

            for orbits in itertools.product(*(partitions_of(b) for b in blocks)):
                pair = LeviOrbitPair(blocks, orbits)
                ind = ls_induce(pair)
                rep.check(
                    orbit_dimension(ind, n) == induced_orbit_dimension(pair),
                    f"dimension identity fails for {blocks} {orbits}",
                )
                rep.check(
                    dominance_leq(richardson(blocks), ind),
                    f"induction below Richardson for {blocks} {orbits}",
                )
    # Borel saturation oracle at n = 3: generic nilradical elements are regular
    src = SampleSource(seed)
    alg = gl(3)
    regular = nilpotent_representative(alg, (3,))
    target_form = rational_canonical_form(regular.mat)
    hits = 0
    for _ in range(samples):
        m = Mat.zeros(3)
        m.data[0][1] = Q(src.rng.randint(1, 4))
        m.data[1][2] = Q(src.rng.randint(1, 4))
        m.data[0][2] = Q(src.rng.randint(-4, 4))
        conj, _ = src.conjugate(m)
        if rational_canonical_form(conj) == target_form:
            hits += 1
    rep.check(hits == samples, f"Borel saturation: only {hits}/{samples} regular")
    rep.check(
        ls_induce(LeviOrbitPair((1, 1, 1), (Partition((1,)),) * 3)) == Partition((3,)),
        "Borel induction is not the regular orbit",
    )
    return rep.done()


def classes_sweep(seed=0, samples=1000, n_max=4):
    """Classification lands in the enumeration; conjugation/scaling invariant."""
    rep = _Report("classes", seed=seed, samples=samples, n_max=n_max)
    src = SampleSource(seed)
    labels2 = enumerate_classes(gl(2))
    rep.check(len(labels2) == 3, f"gl_2 has {len(labels2)} classes, expected 3")
    dims = sorted(class_dimension(lb) for lb in labels2)
    rep.check(dims == [1, 3, 4], f"gl_2 class dimensions {dims} != [1, 3, 4]")
    for lb in labels2:
        rep.check(
            class_dimension(lb) == class_dimension_rank_check(lb),
            f"dimension formula vs rank mismatch at {lb}",
        )
    enumerations = {n: set(enumerate_classes(gl(n))) for n in range(2, n_max + 1)}
    per_n = samples // (n_max - 1)
    for n in range(2, n_max + 1):
        alg = gl(n)
        for _ in range(per_n):
            x, label = src.rational_spectrum_matrix(alg)
            got = classify(x)
            rep.check(got == label, f"n={n}: classify broke conjugation invariance")
            rep.check(got in enumerations[n], f"n={n}: label not enumerated")
            c = src.nonzero_rational()
            rep.check(
                classify(x.scale(c)) == got,
                f"n={n}: classify broke scaling invariance",
            )
    # unique open class
    for n in range(2, n_max + 1):
        open_labels = [
            lb for lb in enumerations[n] if class_dimension(lb) == n * n
        ]
        rep.check(
            len(open_labels) == 1 and open_labels[0].is_regular_semisimple(),
            f"n={n}: open class is not unique regular semisimple",
        )
    return rep.done()


def perp_sweep(n_max=4):
    """(T_x D)^perp = n(x) for a representative of every class."""
    rep = _Report("perp", n_max=n_max)
    for family in (gl, sl):
        for n in range(2, n_max + 1):
            for label in enumerate_classes(family(n)):
                x = class_representative(label)
                cert = trivial_action_core(x)
                rep.check(cert.equal, f"{label}: perp certificate fails ({cert})")
    return rep.done()


def natural_sweep(seed=0, samples=100, n_max=4):
    """Root criterion vs rank test; descriptor agreement; the gl_3 fixture."""
    rep = _Report("natural", seed=seed, samples=samples, n_max=n_max)
    src = SampleSource(seed)
    for n in range(2, n_max + 1):
        alg = gl(n)
        for _ in range(samples):
            dx = [Q(src.rng.randint(-2, 2)) for _ in range(n)]
            dh = [Q(src.rng.randint(-2, 2)) for _ in range(n)]
            x = element(alg, Mat.diag(dx))
            h = element(alg, Mat.diag(dh))
            root_verdict = cartan_membership(h, x)
            rank_verdict = membership_Sx_rank(h, x)
            rep.check(
                root_verdict == rank_verdict,
                f"n={n}: root {root_verdict} vs rank {rank_verdict} at {dx},{dh}",
            )
            desc_verdict = membership_Sx_descriptor(h, x)
            rep.check(
                desc_verdict == rank_verdict,
                f"n={n}: descriptor {desc_verdict} vs rank {rank_verdict}",
            )
            c = src.nonzero_rational()
            rep.check(
                membership_Sx_descriptor(h.scale(c), x) == desc_verdict,
                f"n={n}: membership not scaling invariant",
            )
    # gl_3 regular nilpotent fixture
    desc = natural_slice(nilpotent_representative(gl(3), (3,)))
    got = sorted(tuple(lb.pairs for lb in entry) for entry in desc.entries)
    expected = sorted(
        [
            (((3, Partition((3,))),),),
            (((2, Partition((2,))), (1, Partition((1,)))),),
            (((1, Partition((1,))), (1, Partition((1,))), (1, Partition((1,)))),),
        ]
    )
    rep.check(got == expected, f"gl_3 fixture pairs differ: {got}")
    return rep.done()


def residual_sweep(n_max=5):
    """Sequence bookkeeping, explicit component groups, A(x) presentations."""
    rep = _Report("residual", n_max=n_max)
    for family in (gl, sl):
        for n in range(2, n_max + 1):
            for label in enumerate_classes(family(n)):
                x = class_representative(label)
                data = subquotient_data(x)
                rep.check(
                    data.rank_T == data.dim_A,
                    f"{label}: rank_T != dim_A",
                )
                rep.check(data.C_order >= 1, f"{label}: C not finite")
                pres = ax_presentation(x)
                rep.check(pres["consistent"], f"{label}: A(x) presentations differ")
                if family is gl:
                    rep.check(
                        data.A_torsion_order == 1,
                        f"{label}: gl ambient must give connected A(x)",
                    )
    # explicit stabilizer computations at small m
    for m in range(1, 4):
        for lam in partitions_of(m):
            order, info = component_group_explicit(lam)
            g = 0
            for p in lam.parts:
                from math import gcd as _gcd

                g = _gcd(g, p)
            rep.check(
                order == (g if g else 1),
                f"explicit component group of {lam.parts}: {order} != gcd",
            )
    # n <= 3: every class has cyclic C(x) and it matches the explicit orders
    for n in range(2, 4):
        for label in enumerate_classes(sl(n)):
            x = class_representative(label)
            data = subquotient_data(x)
            rep.check(
                len(data.C_structure) <= 1,
                f"{label}: C not cyclic at desk scale",
            )
            explicit = 1
            for _, lam in label.pairs:
                explicit *= component_group_explicit(lam)[0]
            rep.check(
                data.C_order == explicit,
                f"{label}: C order {data.C_order} != explicit {explicit}",
            )
    return rep.done()


def weyl_sweep(seed=0, n_max=4):
    """|W|-point fibers of regular semisimple orbits over the Cartan."""
    rep = _Report("weyl", seed=seed, n_max=n_max)
    src = SampleSource(seed)
    for n in range(2, n_max + 1):
        diag = src.distinct_rationals(n)
        orbit = CoadjointOrbitSpace(element(gl(n), Mat.diag(diag)))
        fiber = orbit_fiber_over_cartan(orbit)
        rep.check(
            len(fiber) == factorial(n),
            f"n={n}: fiber has {len(fiber)} points, expected {factorial(n)}",
        )
        target = char_poly(orbit.base_point.mat)
        rep.check(
            all(char_poly(p.mat) == target for p in fiber),
            f"n={n}: fiber point leaves the orbit",
        )
    return rep.done()


def sp_sweep(seed=0, samples=200, n_max=4):
    """The Sp_2n defining-representation moment map."""
    rep = _Report("sp", seed=seed, samples=samples, n_max=n_max)
    src = SampleSource(seed)
    for n in range(1, n_max + 1):
        space = SymplecticVectorSpace(n)
        d = space.dim
        # symbolic kernel triviality: tr(mu(v) J^T) and -(1/2)|v|^2 are
        # quadratic forms; equality on basis vectors and pairwise sums is
        # equality everywhere (polarization), which forces mu(v)=0 => v=0.
        basis_vecs = []
        for i in range(d):
            v = [ZERO] * d
            v[i] = ONE
            basis_vecs.append(v)
        for i in range(d):
            for j in range(i, d):
                v = [a + b for a, b in zip(basis_vecs[i], basis_vecs[j])]
                got = sp_vector_norm_identity(space, v)
                want = -sum((x * x for x in v), ZERO) / 2
                rep.check(got == want, f"n={n}: norm identity fails on e{i}+e{j}")
        rep.check(
            sp_moment(space, [0] * d).is_zero(), f"n={n}: mu(0) != 0"
        )
    space = SymplecticVectorSpace(2)
    d = space.dim
    for _ in range(samples):
        v = [Q(src.rng.randint(-4, 4)) for _ in range(d)]
        m = sp_moment(space, v)
        rep.check(space.sp_contains(m), "mu(v) not in sp")
        rep.check(rank_of_rows(m.data) <= 1, "rank > 1")
        rep.check((m * m).is_zero(), "mu(v) not nilpotent")
        if any(x != 0 for x in v):
            rep.check(not m.is_zero(), "mu(v) = 0 for v != 0")
    for _ in range(20):
        g = src.sp_group_element(space)
        v = [Q(src.rng.randint(-3, 3)) for _ in range(d)]
        gv = [
            sum((g.data[i][k] * v[k] for k in range(d)), ZERO) for i in range(d)
        ]
        from .exact_linalg import inverse

        rep.check(
            sp_moment(space, gv) == g * sp_moment(space, v) * inverse(g),
            "equivariance fails",
        )
    # trivial-action shadow and the -I witness
    v = [ONE, ZERO, Q(2), ONE]
    x = sp_moment(space, v)
    for xi in sp_stabilizer_of_moment(space, v):
        xv = [sum((xi.data[i][k] * v[k] for k in range(d)), ZERO) for i in range(d)]
        rep.check(all(c == 0 for c in xv), "n(x) moves a point of the fiber")
    minus = Mat.identity(d).scale(-1)
    rep.check(
        (minus.transpose() * space.form_matrix() * minus) == space.form_matrix(),
        "-I not symplectic",
    )
    rep.check(minus * x * minus == x, "-I does not stabilize mu(v)")
    rep.check(
        [
            sum((minus.data[i][k] * v[k] for k in range(d)), ZERO)
            for i in range(d)
        ]
        != v,
        "-I fixes a nonzero vector",
    )
    return rep.done()


def groupoid_sweep(seed=0, samples=100, n_max=3):
    """Groupoid axioms plus the three slice-theorem fixtures."""
    rep = _Report("groupoid", seed=seed, samples=samples, n_max=n_max)
    for n in range(2, n_max + 1):
        result = groupoid_axiom_suite(CotangentGroupoid(n), seed=seed, samples=samples)
        rep.check(result["pass"], f"n={n}: axiom failures {result['failures'][:3]}")
        rep.checks += result["checks"] - 1
    alg = gl(2)
    orbit = CoadjointOrbitSpace(element(alg, Mat.diag([1, 2])))
    triple = principal_triple(alg)
    slod = slodowy_slice(triple)
    x = fundamental_rep(orbit.base_point)
    r1 = slice_theorem_tangent_check(orbit, slod, x)
    rep.check(r1["ok"] and r1["dim_M"] == 2, f"principal-slice fixture: {r1}")
    whole = AffineSlice(
        element(alg, Mat.zeros(2)),
        Subspace.from_elements(alg, [element(alg, b) for b in alg.basis()]),
    )
    r2 = slice_theorem_tangent_check(orbit, whole, element(alg, Mat.diag([2, 1])))
    rep.check(r2["ok"], f"whole-algebra fixture: {r2}")
    e = nilpotent_representative(alg, (2,))
    cartan_at_e = AffineSlice(
        e,
        Subspace.from_elements(
            alg, [element(alg, Mat.diag([1, 0])), element(alg, Mat.diag([0, 1]))]
        ),
    )
    r3 = slice_theorem_tangent_check(CoadjointOrbitSpace(e), cartan_at_e, e)
    rep.check(
        not r3["ok"] and not r3["poisson"]["transversal_ok"],
        f"Cartan-at-nilpotent fixture should fail: {r3}",
    )
    return rep.done()


def saturation_probe(seed=0, samples=20):
    """Desk-scale look at G_{x_s} S_{x,T} = S_x (coverage, not a theorem).

    For x = diag(1,1,2) + E_12: samples points of S_T, records which listed
    classes of S_x they realize, and reports coverage plus the membership
    rate.  Conjugation witnesses over Q may not exist, so this reports
    statistics rather than asserting.
    """
    src = SampleSource(seed)
    alg = gl(3)
    x = element(alg, [[1, 1, 0], [0, 1, 0], [0, 0, 2]])
    _, xn = jordan_decompose(x)
    triple = jm_complete(xn)
    comp = complementary_slice(x, triple)
    desc = comp.descriptor
    from .decomp_classes import IrrationalSpectrum
    from .slices import _eigenbasis, _restrict_to_eigenspace

    realized = set()
    members = 0
    undecidable = 0
    for _ in range(samples):
        pt = element(alg, src.subspace_point(comp.slodowy.base.mat, comp.slodowy.tangent_rows(), bound=3))
        try:
            is_member = comp.contains(pt)
        except IrrationalSpectrum:
            undecidable += 1
            continue
        if is_member:
            members += 1
            labels = []
            for mu, m in zip(desc.eigenvalues, desc.blocks):
                cols = _eigenbasis(desc.x_s, mu)
                sub = element(gl(m), _restrict_to_eigenspace(pt.mat, cols))
                labels.append(classify(sub))
            realized.add(tuple(labels))
    return {
        "suite": "saturation",
        "parameters": {"seed": seed, "samples": samples},
        "listed_entries": len(desc.entries),
        "realized_entries": len(realized),
        "member_rate": f"{members}/{samples}",
        "undecidable_over_Q": undecidable,
        "pass": len(realized) >= 1,
        "checks": samples,
        "failures": [],
    }


SWEEPS = {
    "jordan": jordan_sweep,
    "jm": lambda seed=0, samples=None, n_max=6: jm_sweep(n_max=n_max),
    "slodowy": slodowy_sweep,
    "fundamental": fundamental_sweep,
    "contracting": lambda seed=0, samples=None, n_max=6: contracting_sweep(n_max=n_max),
    "induction": induction_sweep,
    "classes": classes_sweep,
    "perp": lambda seed=0, samples=None, n_max=4: perp_sweep(n_max=n_max),
    "natural": natural_sweep,
    "residual": lambda seed=0, samples=None, n_max=5: residual_sweep(n_max=n_max),
    "weyl": weyl_sweep,
    "sp": sp_sweep,
    "groupoid": groupoid_sweep,
    "saturation": saturation_probe,
}


def run_sweep(name, **kwargs):
    if name not in SWEEPS:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SWEEPS)}")
    fn = SWEEPS[name]
    import inspect

    accepted = set(inspect.signature(fn).parameters)
    kwargs = {k: v for k, v in kwargs.items() if k in accepted and v is not None}
    return fn(**kwargs)
