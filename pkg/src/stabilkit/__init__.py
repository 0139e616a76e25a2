"""Minimum fractional additive stabilizers for cooperative matching games."""

from .approx import solve_approx
from .certificate import Certificate, StabilizerSolution, parse_certificate, serialize_solution
from .errors import GraphParseError, InvalidSolutionError, PreconditionError, SizeBoundError, StabilkitError
from .factor_critical import is_factor_critical, solve_factor_critical
from .fpt import solve_exact, solve_tutte_all, tutte_all_guarantee
from .gallai_edmonds import GEDecomposition, decompose, is_stable
from .generators import gen_factor_critical, gen_mkec, gen_random, gen_setcover
from .graph import Graph, Matching, format_graph, parse_graph
from .lp import solve_lp_gm, tau_f
from .matching import matching_number, max_cardinality_matching
from .numeric import HalfInt
from .oracle import solve_oracle, verify_certificate

__all__ = [
    "Certificate",
    "GEDecomposition",
    "Graph",
    "GraphParseError",
    "HalfInt",
    "InvalidSolutionError",
    "Matching",
    "PreconditionError",
    "SizeBoundError",
    "StabilizerSolution",
    "StabilkitError",
    "decompose",
    "format_graph",
    "gen_factor_critical",
    "gen_mkec",
    "gen_random",
    "gen_setcover",
    "is_factor_critical",
    "is_stable",
    "matching_number",
    "max_cardinality_matching",
    "parse_certificate",
    "parse_graph",
    "serialize_solution",
    "solve_approx",
    "solve_exact",
    "solve_factor_critical",
    "solve_lp_gm",
    "solve_oracle",
    "solve_tutte_all",
    "tau_f",
    "tutte_all_guarantee",
    "verify_certificate",
]
