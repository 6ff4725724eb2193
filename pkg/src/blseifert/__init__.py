"""Boundary link Seifert matrices realising a given multivariable Alexander polynomial."""

from .assemble import Assembly, build, build_seifert_from_plan, permutation_from_plan
from .laurent import LaurentPoly
from .ladder import LadderParams, build_B, twisted_det, twisted_det_formula
from .pathplan import BuildPlan, LatticePath, enumerate_paths, find_path, make_plan
from .polyparse import parse_poly, print_poly
from .seifert import (
    SeifertMatrix,
    SymmetricPresentation,
    alexander,
    decompose,
    reconstruct,
    validate_seifert,
)
from .sequiv import block_congruence, compare, enlarge, is_irreducible, reduce_once

__all__ = [
    "Assembly", "BuildPlan", "LadderParams", "LatticePath", "LaurentPoly", "SeifertMatrix",
    "SymmetricPresentation", "alexander", "block_congruence", "build", "build_B",
    "build_seifert_from_plan", "compare", "decompose", "enlarge", "enumerate_paths",
    "find_path", "is_irreducible", "make_plan", "parse_poly", "permutation_from_plan",
    "print_poly", "reconstruct", "reduce_once", "twisted_det", "twisted_det_formula",
    "validate_seifert",
]
