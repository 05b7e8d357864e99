"""spfkit: simple partial fractions (logarithmic derivatives of polynomials).

Interpolation (Pade, constants, generalized multi-node), best uniform
approximation with alternance certificates, exact metric identities on the
real line, and the h-sum / amplitude-frequency operator calculus with
Prony-based moment solving and analytic regularization.
"""

from .numkit import (
    ComplexPolynomial,
    PowerSeries,
    RootSet,
    PoleOnIntervalError,
    RootFindingError,
    find_roots,
    poly_from_power_sums,
    power_sums,
    series_exp,
    series_integrate,
    series_multiply,
    nullspace,
    sup_norm,
)
from .core import (
    SimpleFraction,
    DiffOperatorTower,
    build_tower,
    reduce_values,
    ode_residual,
)
from .interp import (
    InterpolationTable,
    GeneralizedSolution,
    InterpolationFamily,
    pade_spf,
    pade_spf_exp,
    pade_remainder,
    pade_error_bound,
    contact_epsilon,
    frequency_bound_check,
    interpolate_constant,
    constant_generating_polynomial,
    generalized_interp_simple,
    generalized_interp_multiple,
    classify_nodes,
)
from .best import (
    AlternanceReport,
    RemezResult,
    ExtremalFraction,
    CounterexampleReport,
    BorchardtReport,
    alternance_detect,
    remez_constant,
    alternance_criterion,
    vallee_poussin_bound,
    extremal_fraction,
    omega_from_delta,
    counterexample_2n_alternance,
    borchardt_identity,
    nonuniqueness_fraction,
    nonuniqueness_lambda_star,
)
from .metrics import (
    HalfPlanePoles,
    NotchSet,
    MetricCheck,
    blaschke,
    blaschke_argument,
    notch_points,
    l2_quadrature,
    lp_norm_real_line,
    sup_norm_real_line,
    lp_norm_segment,
    inequality_suite,
    derivative_suite,
)
from .hsums import (
    HSum,
    AFSum,
    PronySolution,
    RegExtrapReport,
    hsum_pade,
    diff_nodes,
    int_nodes,
    extrap_freqs,
    extrapolate,
    prony_solve,
    gauss_quadrature,
    reg_diff,
    reg_diff_generating,
    reg_extrap,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexPolynomial",
    "PowerSeries",
    "RootSet",
    "PoleOnIntervalError",
    "RootFindingError",
    "find_roots",
    "poly_from_power_sums",
    "power_sums",
    "series_exp",
    "series_integrate",
    "series_multiply",
    "nullspace",
    "sup_norm",
    "SimpleFraction",
    "DiffOperatorTower",
    "build_tower",
    "reduce_values",
    "ode_residual",
    "InterpolationTable",
    "GeneralizedSolution",
    "InterpolationFamily",
    "pade_spf",
    "pade_spf_exp",
    "pade_remainder",
    "pade_error_bound",
    "contact_epsilon",
    "frequency_bound_check",
    "interpolate_constant",
    "constant_generating_polynomial",
    "generalized_interp_simple",
    "generalized_interp_multiple",
    "classify_nodes",
    "AlternanceReport",
    "RemezResult",
    "ExtremalFraction",
    "CounterexampleReport",
    "BorchardtReport",
    "alternance_detect",
    "remez_constant",
    "alternance_criterion",
    "vallee_poussin_bound",
    "extremal_fraction",
    "omega_from_delta",
    "counterexample_2n_alternance",
    "borchardt_identity",
    "nonuniqueness_fraction",
    "nonuniqueness_lambda_star",
    "HalfPlanePoles",
    "NotchSet",
    "MetricCheck",
    "blaschke",
    "blaschke_argument",
    "notch_points",
    "l2_quadrature",
    "lp_norm_real_line",
    "sup_norm_real_line",
    "lp_norm_segment",
    "inequality_suite",
    "derivative_suite",
    "HSum",
    "AFSum",
    "PronySolution",
    "RegExtrapReport",
    "hsum_pade",
    "diff_nodes",
    "int_nodes",
    "extrap_freqs",
    "extrapolate",
    "prony_solve",
    "gauss_quadrature",
    "reg_diff",
    "reg_diff_generating",
    "reg_extrap",
    "__version__",
]
