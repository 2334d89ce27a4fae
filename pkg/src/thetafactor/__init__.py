"""Dimension formulas, label sets and identity checks for generalized theta
functions on Gieseker-type degenerations of SL_n / GL_n bundle moduli."""

from .cyclotomic import CycElt, det_exact
from .factorization import (
    IdentityReport,
    verify_beta_dim_compat,
    verify_degeneration,
    verify_main_theorem_dims,
    verify_unitarity,
    verify_zagier,
    verify_zagier_matrix,
)
from .gluing import build_graded_space, random_betas, reconstruct, verify_gluing
from .indexsets import (
    BundleExponents,
    LabelPair,
    StratumIndex,
    UnboundedIndexSetError,
    enumerate_A_delta,
    enumerate_A_double_prime,
    enumerate_A_general,
    enumerate_A_prime,
    enumerate_SA_prime,
)
from .lattice import AlcovePoint, Weight, enumerate_alcove
from .verlinde import DimensionResult, RoundingError, dim_gvb, dim_pb, dim_spb, dim_svb, dim_vb

__version__ = "0.1.0"
