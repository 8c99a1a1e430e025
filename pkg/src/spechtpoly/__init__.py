"""Exact computations with higher Specht polynomials and coinvariant-type quotient rings."""

__version__ = "0.1.0"

from .polyring import (
    Poly,
    QQ,
    elementary,
    extend_variables,
    monomials_of_degree,
    permute_variables,
    vandermonde,
)
from .tableaux import (
    CochargeLabeling,
    Tableau,
    cocharge,
    cocharge_label_tableau,
    cocharge_labels,
    column_excess,
    conjugate,
    descent_stats,
    destandardize,
    enumerate_tableaux,
    format_partition,
    format_tableau,
    kbounded_decode,
    kbounded_encode,
    last_letter_compare,
    last_letter_key,
    mu_child,
    parse_partition,
    parse_tableau,
    partitions,
    reading_word,
    rsk,
    rsk_inverse,
    semistandard_descents,
    standard_count,
    standard_tableaux,
    standardize,
)
from .specht import (
    BasisElement,
    apply_symmetrizer,
    bilinear_form,
    build_basis_family,
    dual_specht,
    garnir_apply,
    higher_specht,
    specht_classical,
    straighten,
)
from .quotient import (
    GradedQuotient,
    IdealSpec,
    almost_lower_triangular,
    build_ideal,
    degree_slice,
    gp_recursion_family,
    graded_quotient,
    transition_matrix,
    verify_basis,
)
from .symfunc import (
    CharacterTable,
    GradedSchurExpansion,
    character_table,
    graded_frobenius,
    grfrob_formula_rnk,
    grfrob_formula_rnkmu,
    hall_littlewood_cocharge,
    irreducible_block_check,
    qbinomial,
)
