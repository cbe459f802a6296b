"""Exact Schur calculus in the quotient of symmetric polynomials in k
variables by the deformed relations h_{n-k+1} = a_1, ..., h_n = a_k.

The quotient is free over Z[a_1..a_k] on the Schur classes s[lam] indexed by
partitions in the k x (n-k) box; setting all a_i = 0 gives the cohomology of
the Grassmannian Gr(k, n), and a_k = -(-1)^k q (others 0) its quantum
cohomology.
"""

from .apoly import (
    APoly, classical_specialization, parse_apoly, parse_specialization,
    quantum_specialization,
)
from .partitions import (
    check_partition, cmp_graded_dominance, cmp_size_antidominance, complement,
    conjugate, dominates, enumerate_pkn, in_box,
)
from .tableaux import (
    kostka, lr_coefficient, schur_product_expand, skew_schur_expand,
    uncancelled_pieri,
)
from .grobner import (
    XPoly, groebner_generators, monomial_basis, normal_form, parse_xpoly,
    schur_xpoly,
)
from .quotient import (
    QuotElem, coeff, multiply, pieri_h, positivity_scan, reduce_h_overflow,
    s3_report, specialize_elem, straighten_schur, structure_constant,
)
from .bases import (
    basis_table, change_of_basis_matrix, classify_family, expand_e_conj,
    expand_h, expand_h_conj, expand_m, expand_p, s_in_m,
    unitriangularity_check,
)

__version__ = "0.1.0"

__all__ = [
    "APoly", "QuotElem", "XPoly",
    "basis_table", "change_of_basis_matrix", "check_partition",
    "classical_specialization", "classify_family", "cmp_graded_dominance",
    "cmp_size_antidominance", "coeff", "complement", "conjugate", "dominates",
    "enumerate_pkn", "expand_e_conj", "expand_h", "expand_h_conj", "expand_m",
    "expand_p", "groebner_generators", "in_box", "kostka", "lr_coefficient",
    "monomial_basis", "multiply", "normal_form", "parse_apoly",
    "parse_specialization", "parse_xpoly", "pieri_h", "positivity_scan",
    "quantum_specialization", "reduce_h_overflow", "s3_report", "s_in_m",
    "schur_product_expand", "schur_xpoly", "skew_schur_expand",
    "specialize_elem", "straighten_schur", "structure_constant",
    "uncancelled_pieri", "unitriangularity_check",
]
