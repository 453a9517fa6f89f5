"""Exact polyhedral and monomial-ideal computations for simple hypergraphs.

The package decides the Koenig, Mengerian and Fulkersonian properties of a
clutter and compares ordinary powers, symbolic powers and integral closures
of its edge ideal, all in exact rational arithmetic.
"""

from clutterlab.exact_linalg import lcm_denominators, rank, solve_square
from clutterlab.hypergraph import (
    Hypergraph,
    HypergraphError,
    blocker,
    cover_order,
    incidence_matrix,
    is_cover_of_order,
    koenig,
    make_simple,
    minimalize,
)
from clutterlab.optimize import (
    IPResult,
    LinearProgram,
    LPResult,
    ip_cover_min,
    ip_pack_max,
    lp_dual_pair,
    lp_solve,
)
from clutterlab.polytope import (
    BlockingPolyhedron,
    Decomposition,
    InfeasibleDecomposition,
    VertexSet,
    caratheodory_decompose,
    extreme_points,
    hoffman_integrality_check,
    is_fulkersonian,
)
from clutterlab.ideals import (
    MembershipVerdict,
    MonomialIdeal,
    closure_gens,
    closure_membership,
    cover_ideal,
    edge_ideal,
    is_normal_up_to,
    power,
    power_membership,
    symbolic_membership,
    symbolic_power_gens,
)
from clutterlab.verify import (
    TheoremVerdict,
    VerificationReport,
    default_corpus,
    full_report,
    is_mengerian_bounded,
    verify_fulkerson,
    verify_gvv,
    verify_menger,
)

__version__ = "0.1.0"
