"""Exact restrained and restrained Italian domination on graphs and trees."""

from .certificates import Assignment, is_dominating, is_packing, is_rds, is_ridf
from .families import (
    ConstructionTrace,
    FamilyState,
    StarException,
    Step,
    canonical_ridf_f,
    recognize_f,
    recognize_h,
    replay,
    sample_trace,
)
from .graph import Graph, Tree, canonical_code
from .oracle import gamma_bruteforce, gamma_r_bruteforce, gamma_ri_bruteforce, rho_bruteforce
from .treedp import gamma_r_tree, gamma_ri_tree

__version__ = "0.1.0"
