"""Permutation behaviour of reversed Dickson polynomials over finite fields."""

from .dickson import DicksonParams, dickson_eval, dickson_poly, result1_closed_form
from .gf import CapExceeded, FieldElement, FieldSpec, build_field, enumerate_elements, mu_subgroup
from .poly import Poly, evaluate, pow_mod, reduce_mod_qx
from .ppcheck import MultiplicativeForm, Verdict, Witness, brute_force_check, hermite_check, zieve_check
from .theorems import FamilyParams, TheoremReport, scan, verify_cell, verify_theorem

__all__ = [
    "CapExceeded", "DicksonParams", "FamilyParams", "FieldElement", "FieldSpec",
    "MultiplicativeForm", "Poly", "TheoremReport", "Verdict", "Witness",
    "brute_force_check", "build_field", "dickson_eval", "dickson_poly",
    "enumerate_elements", "evaluate", "hermite_check", "mu_subgroup", "pow_mod",
    "reduce_mod_qx", "result1_closed_form", "scan", "verify_cell",
    "verify_theorem", "zieve_check",
]
