"""Szego kernel of an annulus: q-series, four equivalent evaluators, and a
Kerzman-Stein Nystrom reference solver."""
from .errors import (
    ConvergenceRegionViolated,
    DivergentProduct,
    DivisionByZeroFactor,
    DomainViolation,
    InvalidArgument,
    LengthMismatch,
    PoleHit,
    SingularSystem,
    SzegoError,
)
from .kernel import (
    AnnulusDomain,
    ClosedFormExponents,
    GeneralAnnulusDomain,
    Method,
    TruncationSpec,
    WeightedKernelParams,
    closed_form_exponents,
    evaluate,
    general_annulus_kernel,
    general_zero_location,
    kernel_closed_form,
    kernel_product,
    kernel_series,
    kernel_series_alternating,
    weighted_kernel_closed_form,
    weighted_kernel_product,
    weighted_kernel_series,
    weighted_product_zeros,
    weighted_zero_condition,
    zero_location,
)
from .qseries import (
    INFINITY,
    cauchy_sum,
    psi11,
    q_gamma,
    q_pochhammer,
    q_pochhammer_ratio_identity_check,
    ramanujan_sum,
    theta_fn,
)

__version__ = "0.1.0"
