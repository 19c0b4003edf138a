"""quadbound: a-priori Simpson's-rule error bounds from integral-transform
derivative estimates, validated against actual quadrature error."""

from ._kernels import BACKEND
from .analysis import (
    FrullaniSpec,
    SimpsonReport,
    ZeroBracket,
    frullani_check,
    locate_error_zero,
    scan_ratio,
    simpson_report,
    table1,
)
from .bounds import BoundResult, family_bound, simpson_error_bound, taylor_bound
from .delay_ode import (
    LambdaGrid,
    QIntSpec,
    build_lambda_grid,
    laplace_check,
    q_derivative,
    qint_eval,
)
from .errors import (
    BracketError,
    ComputationError,
    DomainError,
    EvaluationError,
    ParameterError,
    QuadboundError,
)
from .quadrature import (
    PanelConfig,
    QuadratureRule,
    SemiInfiniteConfig,
    gauss_legendre_rule,
    integrate,
    integrate_semi_infinite,
    simpson_composite,
)
from .specfun import CONSTANTS, EULER_GAMMA, SpecialFn, eval_special, gamma_function
from .transforms import (
    ARCTAN_OVER_T,
    CIN_KERNEL,
    CIN_OVER_T2,
    COSH_KERNEL,
    EIN_KERNEL,
    KernelFamily,
    SINC,
    SINH_OVER_T,
    TAN_EVEN,
    TaylorKernelSpec,
    arctan_derivative,
    e1_moment,
    finite_difference_derivative,
    q_integrand,
    ratio_value,
    tan_even_derivative,
    transform_derivative,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ARCTAN_OVER_T",
    "BoundResult",
    "BracketError",
    "CIN_KERNEL",
    "CIN_OVER_T2",
    "CONSTANTS",
    "COSH_KERNEL",
    "ComputationError",
    "DomainError",
    "EIN_KERNEL",
    "EULER_GAMMA",
    "EvaluationError",
    "FrullaniSpec",
    "KernelFamily",
    "LambdaGrid",
    "PanelConfig",
    "ParameterError",
    "QIntSpec",
    "QuadboundError",
    "QuadratureRule",
    "SINC",
    "SINH_OVER_T",
    "SemiInfiniteConfig",
    "SimpsonReport",
    "SpecialFn",
    "TAN_EVEN",
    "TaylorKernelSpec",
    "ZeroBracket",
    "arctan_derivative",
    "build_lambda_grid",
    "e1_moment",
    "eval_special",
    "family_bound",
    "finite_difference_derivative",
    "frullani_check",
    "gamma_function",
    "gauss_legendre_rule",
    "integrate",
    "integrate_semi_infinite",
    "laplace_check",
    "locate_error_zero",
    "q_derivative",
    "q_integrand",
    "qint_eval",
    "ratio_value",
    "scan_ratio",
    "simpson_composite",
    "simpson_report",
    "table1",
    "taylor_bound",
    "transform_derivative",
]
