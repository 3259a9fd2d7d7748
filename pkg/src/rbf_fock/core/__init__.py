from .common import Basis, Convention, alpha_of, gamma_of
from .numerics import Quad1D, Quad2D, gauss_hermite, gauss_hermite_2d, integrate_c, integrate_r, log_basis_coeff
from .hermite import (L2Sig, fourier_l2, fourier_quadrature, hermite_expand, hermite_fit, hermite_fn,
                      hermite_functions, l2_inner, position_matrix, translate)
from .kernels import (GramReport, KernelParams, factorization_residual, fock_kernel, gram, mercer_partial,
                      normalized_fock_state, phi_norm, rbf_kernel, rbf_sb_kernel, sb_kernel)
from .spaces import (BoundCheck, HoloFun, SequentialNorm, bound_check, coherent_coeffs, convert, evaluate,
                     fock_norm, inner, norm_sequential, project, project_fock, reproduce, to_fock, to_rbf,
                     to_taylor)
from .transforms import (TransformContext, bargmann, bargmann_pointwise, compare_routes, feature_inner,
                         fourier_diagram_residual, fourier_fock, fourier_rbf, rbf_bargmann,
                         rbf_bargmann_inverse)
from .operators import (WeylParam, creation_identity_residual, displacement_matrix, ladder, ladder_matrix,
                        position_rbf_matrix, translation_rbf, weyl_fock, weyl_rbf, weyl_rbf_pointwise,
                        weyl_semigroup_phase)

__all__ = [
    "Basis",
    "Convention",
    "alpha_of",
    "gamma_of",
    "Quad1D",
    "Quad2D",
    "gauss_hermite",
    "gauss_hermite_2d",
    "integrate_r",
    "integrate_c",
    "log_basis_coeff",
    "L2Sig",
    "l2_inner",
    "hermite_functions",
    "hermite_fn",
    "hermite_expand",
    "hermite_fit",
    "position_matrix",
    "fourier_l2",
    "fourier_quadrature",
    "translate",
    "KernelParams",
    "GramReport",
    "fock_kernel",
    "normalized_fock_state",
    "rbf_kernel",
    "factorization_residual",
    "sb_kernel",
    "rbf_sb_kernel",
    "phi_norm",
    "mercer_partial",
    "gram",
    "HoloFun",
    "SequentialNorm",
    "BoundCheck",
    "to_fock",
    "to_rbf",
    "to_taylor",
    "convert",
    "evaluate",
    "norm_sequential",
    "inner",
    "fock_norm",
    "project",
    "project_fock",
    "reproduce",
    "coherent_coeffs",
    "bound_check",
    "TransformContext",
    "bargmann",
    "bargmann_pointwise",
    "rbf_bargmann",
    "compare_routes",
    "rbf_bargmann_inverse",
    "feature_inner",
    "fourier_fock",
    "fourier_rbf",
    "fourier_diagram_residual",
    "WeylParam",
    "weyl_fock",
    "displacement_matrix",
    "weyl_rbf",
    "weyl_rbf_pointwise",
    "weyl_semigroup_phase",
    "translation_rbf",
    "position_rbf_matrix",
    "creation_identity_residual",
    "ladder",
    "ladder_matrix",
]
