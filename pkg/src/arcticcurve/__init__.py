"""Arctic curves of the six-vertex model with domain-wall boundary conditions.

Submodules
----------
params     regimes, weights and the (Delta, t) <-> (lambda, eta) maps
specfun    theta functions, K and sn at arbitrary precision
finite_n   Hankel and one-inhomogeneity determinants, exact enumeration
arctic     resolvent, the curve function Psi and the parametric curve
output     CSV / JSON / SVG writers
cli        command-line interface
"""

from .arctic import (
    CurvePoint,
    CurvePortion,
    FullCurve,
    asymptotic_log_deriv,
    curve_point,
    curve_portion,
    full_curve,
    psi,
    w_forward,
    w_inverse,
)
from .errors import (
    ArcticError,
    BoundaryRegimeError,
    BranchError,
    CapacityError,
    ConsistencyError,
    DegeneratePointError,
    DegenerateWeightError,
    FerroelectricUnsupportedError,
    ParameterDomainError,
    PoleError,
    PrecisionExhaustedError,
)
from .finite_n import (
    InhomogeneousSpec,
    boundary_distribution,
    enumerate_partition,
    finite_log_deriv,
    h_generating,
    partition_hankel,
    partition_one_inhomogeneity,
)
from .params import (
    PhasePoint,
    Regime,
    SpectralParams,
    Weights,
    crossing_reflect,
    params_from_phase,
    phase_from_spectral,
    spectral_from_phase,
    weights_from_spectral,
    xi_max,
)
from .precision import PrecisionContext

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
