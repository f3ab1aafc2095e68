"""Per-degree parametric constructions of equal sums of like powers."""
from powersum.families.conic import ConicPoint, conic_line_parameterize, conic_norm
from powersum.families.deg2 import deg2_family, deg2_template
from powersum.families.deg3 import (
    DEG3_SHIFT_BASE,
    DEG3_SYMMETRIC_BASE,
    ShiftResult,
    deg3_shift_family,
    deg3_symmetric_condition,
    deg3_symmetric_family,
    deg3_symmetric_template,
)
from powersum.families.deg4 import deg4_family, deg4_template
from powersum.families.deg5 import (
    DEG5_BASES,
    Deg5Base,
    deg5_66_family,
    deg5_66_template,
    deg5_half_identity,
    deg5_half_identity_general,
    deg5_half_template,
    deg5_uvw,
)
from powersum.families.deg6 import (
    DEG6_CASES,
    DEG6_EXAMPLE_C,
    Deg6Case,
    Deg6CaseReport,
    deg6_case_report,
    deg6_case_residual,
    deg6_case_table,
    deg6_family,
    deg6_template,
)
from powersum.families.deg7 import deg7_conditions, deg7_family, deg7_search, deg7_template, piezas_identity
from powersum.families.deg8 import (
    DEG8_EXAMPLES,
    Deg8Triples,
    deg8_condition_f,
    deg8_condition_poly,
    deg8_discriminant,
    deg8_family,
    deg8_parameters_from_u,
    deg8_solve_ab,
    deg8_triples,
    deg8_triples_poly,
    sinha_lift,
)
from powersum.families.deg9 import (
    Deg9Params,
    deg9_condition,
    deg9_condition_polys,
    deg9_family,
    deg9_forms,
    deg9_params,
    deg9_quartic_poly,
    deg9_quartic_rhs,
    deg9_search,
    deg9_signed_power_sum,
    deg9_solve_mn,
    deg9_solve_w,
    deg9_template,
    deg9_w_polynomial,
)
from powersum.families.shift import odd_cancel, odd_cancel_poly, shift_extend, shift_extend_poly

__all__ = [
    "ConicPoint",
    "DEG3_SHIFT_BASE",
    "DEG3_SYMMETRIC_BASE",
    "DEG5_BASES",
    "DEG6_CASES",
    "DEG6_EXAMPLE_C",
    "DEG8_EXAMPLES",
    "Deg5Base",
    "Deg6Case",
    "Deg6CaseReport",
    "Deg8Triples",
    "Deg9Params",
    "ShiftResult",
    "conic_line_parameterize",
    "conic_norm",
    "deg2_family",
    "deg2_template",
    "deg3_shift_family",
    "deg3_symmetric_condition",
    "deg3_symmetric_family",
    "deg3_symmetric_template",
    "deg4_family",
    "deg4_template",
    "deg5_66_family",
    "deg5_66_template",
    "deg5_half_identity",
    "deg5_half_identity_general",
    "deg5_half_template",
    "deg5_uvw",
    "deg6_case_report",
    "deg6_case_residual",
    "deg6_case_table",
    "deg6_family",
    "deg6_template",
    "deg7_conditions",
    "deg7_family",
    "deg7_search",
    "deg7_template",
    "deg8_condition_f",
    "deg8_condition_poly",
    "deg8_discriminant",
    "deg8_family",
    "deg8_parameters_from_u",
    "deg8_solve_ab",
    "deg8_triples",
    "deg8_triples_poly",
    "deg9_condition",
    "deg9_condition_polys",
    "deg9_family",
    "deg9_forms",
    "deg9_params",
    "deg9_quartic_poly",
    "deg9_quartic_rhs",
    "deg9_search",
    "deg9_signed_power_sum",
    "deg9_solve_mn",
    "deg9_solve_w",
    "deg9_template",
    "deg9_w_polynomial",
    "odd_cancel",
    "odd_cancel_poly",
    "piezas_identity",
    "shift_extend",
    "shift_extend_poly",
    "sinha_lift",
]
