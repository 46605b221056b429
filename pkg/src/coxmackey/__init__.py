"""Coxeter complexes of representations and exact checks of the cohomological Mackey formula."""

from .algebra import MVPoly, RatFunc, poly_parse, ratfunc_parse
from .arrangement import Arrangement, Cell, Flat, arrangement_of
from .operators import (ModuleElement, braiding, degree_shift, euler_class, induct, kernel,
                        mackey_check, mackey_lhs, mackey_rhs, mackey_terms, restrict)
from .repdata import (RepSpec, Weight, adjoint, attach_aux_torus, cotangent, direct_sum, dual,
                      is_weakly_symmetric, load_spec, rep_gl_standard, rep_torus, save_spec)

__all__ = [
    "MVPoly", "RatFunc", "poly_parse", "ratfunc_parse",
    "Arrangement", "Cell", "Flat", "arrangement_of",
    "ModuleElement", "braiding", "degree_shift", "euler_class", "induct", "kernel",
    "mackey_check", "mackey_lhs", "mackey_rhs", "mackey_terms", "restrict",
    "RepSpec", "Weight", "adjoint", "attach_aux_torus", "cotangent", "direct_sum", "dual",
    "is_weakly_symmetric", "load_spec", "rep_gl_standard", "rep_torus", "save_spec",
]
