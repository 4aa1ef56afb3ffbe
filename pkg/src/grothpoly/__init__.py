"""Exact Grothendieck / Schubert polynomial library.

Everything is integer arithmetic on packed monomials: the variables are
x1..x8, y1..y8, z1..z8, the deformation scalar b and the quantum
parameters q1..q7.  The classical families come from divided-difference
towers over a product of linear forms, the quantum ones from towers over
a product of tridiagonal determinants.
"""

from ._backend import kernel_name
from ._packing import N_MAX, Var
from .classical import (
    CLASSICAL_CHECKS,
    NormalFormContext,
    dual_grothendieck,
    dual_grothendieck_double,
    expand_dual_basis,
    grothendieck,
    grothendieck_double,
    monk_expansion,
    schubert,
    schubert_double,
    top_class,
    verify_classical,
)
from .perms import Permutation, all_perms, from_word, identity, longest
from .poly import MultiPoly, beta, qvar, xvar, yvar, zvar
from .quantum import (
    QUANTUM_CHECKS,
    bold_family,
    quantize,
    quantum_dual_grothendieck,
    quantum_dual_grothendieck_double,
    quantum_grothendieck,
    quantum_grothendieck_double,
    quantum_schubert,
    quantum_schubert_double,
    verify_quantum,
)

__version__ = "0.1.0"

__all__ = [
    "CLASSICAL_CHECKS",
    "MultiPoly",
    "N_MAX",
    "NormalFormContext",
    "Permutation",
    "QUANTUM_CHECKS",
    "Var",
    "all_perms",
    "beta",
    "bold_family",
    "dual_grothendieck",
    "dual_grothendieck_double",
    "expand_dual_basis",
    "from_word",
    "grothendieck",
    "grothendieck_double",
    "identity",
    "kernel_name",
    "longest",
    "monk_expansion",
    "quantize",
    "quantum_dual_grothendieck",
    "quantum_dual_grothendieck_double",
    "quantum_grothendieck",
    "quantum_grothendieck_double",
    "quantum_schubert",
    "quantum_schubert_double",
    "qvar",
    "schubert",
    "schubert_double",
    "top_class",
    "verify_classical",
    "verify_quantum",
    "xvar",
    "yvar",
    "zvar",
]
