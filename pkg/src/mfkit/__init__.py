"""Exact-rational workbench for configurations of points on the projective
line, the rational normal curves that interpolate them, and the linear
systems on projective space that contract those curves onto the space of
stable configurations."""

from .brackets import (
    Stability,
    catalan,
    classify_stability,
    fit_linear_map,
    git_point,
    noncrossing_matchings,
)
from .cremona import (
    BirationalSystem,
    birational_system,
    cremona_involution,
    project_from_unit,
)
from .forgetful import (
    ForgetfulSystem,
    base_automorphism,
    config_of_point,
    forgetful_system,
    forgetful_system_generic,
    incidence_matrix,
    standard_base,
)
from .forms import HomogeneousForm, LinearSystem, linear_system_basis, multiplicity_conditions
from .linalg import Matrix
from .projective import (
    ProjectivePoint,
    projective_equal,
    projectivity_from_frames,
    standard_frame,
)
from .sampling import RationalSampler
from .suites import SUITE_NAMES, SuiteReport, verify_suite
from .trees import (
    BalancedSplit,
    CentralContraction,
    StableTree,
    central_vertex,
    contract,
    enumerate_stable_trees,
    enumerate_two_vertex,
    is_stable,
)
from .veronese import ParamCurve, rnc_through, standard_rnc

__version__ = "0.1.0"
