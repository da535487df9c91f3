"""Local and global 2-parity bookkeeping for E : y^2 = f(x) and Jac E' with E' : y^2 = x f(x)."""
from .arith import COMPLEX_PLACE, REAL_PLACE, Place, hilbert, is_square, legendre, valuation
from .clusters import cluster_picture, real_configuration, reduction_type
from .curves import RationalCubic, build_family, integralize, scale
from .globalparity import global_identity, global_product_H, relevant_places
from .local import error_term_H, infer_lambda, lambda_padic, lambda_real, local_report, root_numbers
from .sturm import count_roots, cubic_consistency, generalized_H, sturm_sequence
from .twotorsion import mobius_match, normal_form

__version__ = "0.1.0"
