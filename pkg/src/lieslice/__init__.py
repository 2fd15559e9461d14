"""lieslice: exact-arithmetic computational Lie theory in type A.

Jordan-Chevalley decompositions, Jacobson-Morozov triples, Slodowy /
natural / complementary slices with exact Poisson-slice verdicts,
Borho-Kraft decomposition classes, residual groups A(x), and concrete
Hamiltonian example spaces, all over Q.
"""

from .exact_linalg import (
    Mat,
    Poly,
    char_poly,
    min_poly,
    rank_kernel,
    rational_canonical_form,
    squarefree_part,
)
from .lie_core import (
    LieAlgebraSpec,
    LieElement,
    LieError,
    Sl2Triple,
    Subspace,
    bracket,
    centralizer,
    element,
    gl,
    jm_complete,
    jordan_decompose,
    nilpotent_representative,
    sl,
    trace_form,
)
from .root_combinatorics import (
    LeviOrbitPair,
    LeviSubset,
    Partition,
    dominance_leq,
    ls_induce,
    orbit_dimension,
    richardson,
    weyl_orbit,
)
from .decomp_classes import (
    ClassLabel,
    IrrationalSpectrum,
    class_dimension,
    class_perp,
    class_representative,
    classify,
    enumerate_classes,
    generic_locus_member,
    orbit_equal_via_gamma,
    principal_class,
)
from .slices import (
    AffineSlice,
    ComplementarySlice,
    NaturalSliceDescriptor,
    cartan_membership,
    complementary_slice,
    contracting_weights,
    fundamental_rep,
    membership_Sx,
    natural_slice,
    poisson_slice_check,
    slodowy_slice,
)
from .residual_groups import (
    SubquotientData,
    ax_presentation,
    subquotient_data,
    trivial_action_core,
)
from .hamiltonian_examples import (
    CoadjointOrbitSpace,
    CotangentGroupoid,
    SymplecticVectorSpace,
    groupoid_axiom_suite,
    orbit_fiber_over_cartan,
    slice_theorem_tangent_check,
    sp_moment,
)
from .sweeps import SWEEPS, run_sweep

__version__ = "0.1.0"
