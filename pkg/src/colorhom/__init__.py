"""Exact computations with color Lie algebras, their enveloping algebras and cohomology."""

from colorhom.ce_cohomology import (check_koszul_identities, ce_delta, homotopy_check, koszul_d,
                                    koszul_theta_sigma, lie_cohomology_dims, wedge_basis, wedge_normalize)
from colorhom.color_lie import ColorLieAlgebra, bracket, validate_color_lie
from colorhom.enveloping import (EnvelopingAlgebra, TensorUElement, UElement, antipode, check_hopf_axioms,
                                 coproduct, counit, lusztig_multiply, normal_form, psi_map, twisted_product,
                                 u_multiply)
from colorhom.gmodules import (GradedBimodule, GradedModule, adjoint_module, bimodule_twist, hom_dims, shift,
                               twisted_tensor_action, validate_module)
from colorhom.grading import Bicharacter, GroupSpec, chi_eval, group_op, validate_bicharacter
from colorhom.hochschild import (ComparisonReport, FiniteGradedAlgebra, compare_theorem5, hochschild_dims,
                                 truncate_enveloping)
from colorhom.reports import ValidationReport
from colorhom.scalars import ExactMatrix, Scalar, matrix_rank_kernel, parse_scalar, root_of_unity, scalar_arith
from colorhom.spec_io import ProblemSpec, SpecError, parse_spec, serialize_spec

__version__ = "0.1.0"

__all__ = [
    "Bicharacter", "ColorLieAlgebra", "ComparisonReport", "EnvelopingAlgebra", "ExactMatrix",
    "FiniteGradedAlgebra", "GradedBimodule", "GradedModule", "GroupSpec", "ProblemSpec", "Scalar", "SpecError",
    "TensorUElement", "UElement", "ValidationReport", "adjoint_module", "antipode", "bimodule_twist", "bracket",
    "ce_delta", "check_hopf_axioms", "check_koszul_identities", "chi_eval", "compare_theorem5", "coproduct",
    "counit", "group_op", "hochschild_dims", "hom_dims", "homotopy_check", "koszul_d", "koszul_theta_sigma",
    "lie_cohomology_dims", "lusztig_multiply", "matrix_rank_kernel", "normal_form", "parse_scalar", "parse_spec",
    "psi_map", "root_of_unity", "scalar_arith", "serialize_spec", "shift", "truncate_enveloping",
    "twisted_product", "twisted_tensor_action", "u_multiply", "validate_bicharacter", "validate_color_lie",
    "validate_module", "wedge_basis", "wedge_normalize",
]
