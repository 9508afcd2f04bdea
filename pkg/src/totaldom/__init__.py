"""Exact total domination toolkit: solvers, extremal families, recognition,
graph6 interchange, and an exhaustive verification harness."""

from .canon import (
    are_isomorphic,
    canonical_form,
    canonical_labeling,
    canonical_relabeled,
    isomorphism_map,
)
from .domination import (
    ATDCertificate,
    NoATDSetError,
    NoTDSetError,
    TDCertificate,
    gamma_t,
    gamma_t_almost,
    gamma_t_oracle,
    gamma_t_path_cycle,
    is_almost_total_dominating,
    is_total_dominating,
)
from .enumeration import (
    EnumerationSummary,
    ExtremalEntry,
    enumerate_connected,
    verify_enumerated,
    verify_theorem,
)
from .families import (
    FamilyMember,
    gen_complete,
    gen_cycle,
    gen_F,
    gen_G,
    gen_GP16,
    gen_H,
    gen_L,
    gen_path,
    two_corona,
)
from .graph import Graph
from .graph6 import Graph6Error, graph6_decode, graph6_encode, iter_graph6_lines
from .recognition import (
    BoundViolationError,
    Classification,
    ExtremalityReport,
    InternalCheckError,
    SpecialTwoPath,
    check_bound,
    classify,
    effective_delta,
    find_special_two_paths,
    is_in_Gcub,
    is_in_Gdone,
    is_in_Gdtwo,
    reduce_special,
)

__all__ = [
    "ATDCertificate",
    "BoundViolationError",
    "Classification",
    "EnumerationSummary",
    "ExtremalEntry",
    "ExtremalityReport",
    "FamilyMember",
    "Graph",
    "Graph6Error",
    "InternalCheckError",
    "NoATDSetError",
    "NoTDSetError",
    "SpecialTwoPath",
    "TDCertificate",
    "are_isomorphic",
    "canonical_form",
    "canonical_labeling",
    "canonical_relabeled",
    "check_bound",
    "classify",
    "effective_delta",
    "enumerate_connected",
    "find_special_two_paths",
    "gamma_t",
    "gamma_t_almost",
    "gamma_t_oracle",
    "gamma_t_path_cycle",
    "gen_F",
    "gen_G",
    "gen_GP16",
    "gen_H",
    "gen_L",
    "gen_complete",
    "gen_cycle",
    "gen_path",
    "graph6_decode",
    "graph6_encode",
    "is_almost_total_dominating",
    "is_in_Gcub",
    "is_in_Gdone",
    "is_in_Gdtwo",
    "is_total_dominating",
    "isomorphism_map",
    "iter_graph6_lines",
    "reduce_special",
    "two_corona",
    "verify_enumerated",
    "verify_theorem",
]

__version__ = "0.1.0"
