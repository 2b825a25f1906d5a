"""Indices of holomorphic 1-forms on determinantal singularities.

Exact computer algebra over the rationals: local standard bases and
colengths, the determinantal data model, closed-form index conversions,
and the algebraic (colength-style) indices of 1-forms, with a brute-force
truncated linear-algebra oracle for independent verification.
"""

from .rings import (
    EQ,
    GT,
    LT,
    LOCAL_ORDER,
    LocalOrder,
    ModP,
    Poly,
    PolyParseError,
    RingContext,
    monomial_compare,
    monomials_up_to,
    parse_poly,
    parse_polys,
    partial_derivative,
    poly_add,
    poly_mul,
)
from .standard_bases import (
    INFINITE,
    FreeModuleElement,
    Ideal,
    StandardBasis,
    colength,
    module_colength,
    module_standard_basis,
    normal_form,
    standard_basis,
)
from .determinantal import (
    DetSingularity,
    OneForm,
    SingularityClass,
    chi_singular_stratum,
    classify,
    minors,
    minors_indexed,
    stratum_dim,
    stratum_ideal,
)
from .conversions import (
    CoeffMatrices,
    StrataIndexData,
    chi_bar_hyperplane,
    chi_fiber,
    coeff_matrices,
    isolated_indices,
    ph_index,
    phn_from_radial,
    radial_from_phn,
    smoothable_index,
)
from .form_indices import (
    AugmentedJacobian,
    DifferentialFormPresentation,
    algebra_ideal,
    algebra_index,
    gmvs_ideal,
    gmvs_index,
    icis_ideal,
    icis_index,
    omega_quotient_dim,
    omega_quotient_generators,
)
from .truncation import (
    ORACLE_CEILING,
    ORACLE_START_CAP,
    TruncationReport,
    chi_bar_sum,
    stabilized_colength,
    stabilized_module_colength,
    truncated_colength_oracle,
    truncated_module_colength,
)

__version__ = "0.1.0"

__all__ = [
    "EQ",
    "GT",
    "LT",
    "LOCAL_ORDER",
    "INFINITE",
    "ORACLE_CEILING",
    "ORACLE_START_CAP",
    "AugmentedJacobian",
    "CoeffMatrices",
    "DetSingularity",
    "DifferentialFormPresentation",
    "FreeModuleElement",
    "Ideal",
    "LocalOrder",
    "ModP",
    "OneForm",
    "Poly",
    "PolyParseError",
    "RingContext",
    "SingularityClass",
    "StandardBasis",
    "StrataIndexData",
    "TruncationReport",
    "algebra_ideal",
    "algebra_index",
    "chi_bar_hyperplane",
    "chi_bar_sum",
    "chi_fiber",
    "chi_singular_stratum",
    "classify",
    "coeff_matrices",
    "colength",
    "gmvs_ideal",
    "gmvs_index",
    "icis_ideal",
    "icis_index",
    "isolated_indices",
    "minors",
    "minors_indexed",
    "module_colength",
    "module_standard_basis",
    "monomial_compare",
    "monomials_up_to",
    "normal_form",
    "omega_quotient_dim",
    "omega_quotient_generators",
    "parse_poly",
    "parse_polys",
    "partial_derivative",
    "ph_index",
    "phn_from_radial",
    "poly_add",
    "poly_mul",
    "radial_from_phn",
    "smoothable_index",
    "stabilized_colength",
    "stabilized_module_colength",
    "standard_basis",
    "stratum_dim",
    "stratum_ideal",
    "truncated_colength_oracle",
    "truncated_module_colength",
]
