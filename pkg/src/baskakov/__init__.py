"""Power sums of Baskakov-type basis functions: evaluation, integral
representations, complete-monotonicity checks and zero distributions."""

__version__ = "0.1.0"

from .basis import (
    K_CAP,
    BaskakovParams,
    LogSignedValue,
    basis_log_value,
    basis_value,
    binom_neg,
    log_weights,
    pochhammer,
    szasz_basis_value,
)
from .cmcheck import (
    CMReport,
    ConjectureRow,
    DecayReport,
    GrussReport,
    LogConvexReport,
    Verdict,
    alpha_power_sum_jet,
    closed_c1_jet,
    cm_check,
    cm_check_closed_c1,
    conjecture_harness,
    decay_check,
    elliptic_profile_jet,
    gruss_verify,
    logconvex_check,
    power_sum_jet,
    psi_target,
    taylor_basis_power,
)
from .errors import BaskakovError, CostCapError, DomainError, NonConvergenceError, PoleError
from .hypergeom import (
    RealPolynomial,
    binom_half,
    elliptic_cm_profile,
    elliptic_K_agm,
    gauss_2f1,
    pn_polynomial,
)
from .jets import TaylorJet
from .powersum import (
    ClosedFormC1R2,
    SeriesEval,
    SeriesStatus,
    alpha_alternating_sum,
    alpha_power_sum,
    closed_form_c1_r2,
    coeff_cnj,
    power_sum_closed_c1_r2,
    power_sum_closed_c1_r2_complex,
    power_sum_series,
    scaled_i0,
    szasz_sum,
)
from .quadrature import (
    MultiLaplaceResult,
    QuadratureSpec,
    gauss_laguerre,
    laplace_multi,
    laplace_multi_detailed,
    laplace_triple,
    parseval_integral,
    szasz_integral,
)
from .zeros import MeasureStats, ZeroSet, find_roots, measure_stats, psi_measure_stats, psi_zeros
