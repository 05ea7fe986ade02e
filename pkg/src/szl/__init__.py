"""Strong Z_l-connectivity of small multigraphs.

Decides whether a multigraph admits a beta-orientation for every Z_2l
boundary, builds orientations or bad-set certificates, and checks the
closed-form characterizations for graphs on at most four vertices against
exhaustive search.
"""
from szl.boundary import (
    BoundarySpec,
    GammaFunction,
    ResidueSet,
    corresponding_gamma,
    enumerate_boundaries,
    gamma_candidates,
    intersect,
    residue_interval,
    shift,
    validate_boundary,
)
from szl.decide import (
    Verdict,
    decide,
    decide_brute,
    decide_fast,
    exception_conditions_4v,
    failing_boundaries,
    szl_simplify,
)
from szl.graph import (
    W1,
    W2,
    Multigraph,
    aK2,
    build_family,
    canonical_code,
    contract,
    cut_degree,
    find_tree_preserving_lifts,
    is_isomorphic,
    lift_path,
    max_multiplicity,
    tree_packing_number,
    triangle,
)
from szl.kernels import BACKEND
from szl.orient import (
    BadSetWitness,
    Orientation,
    SolveOutcome,
    brute_force_beta_orientation,
    construct_orientation,
    find_beta_orientation,
    hakimi_check,
    imbalance,
    solve_three_vertex,
    verify_beta_orientation,
)
from szl.verify import FamilySpec, enumerate_graphs, verify_characterization

__version__ = "0.1.0"
