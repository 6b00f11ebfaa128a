"""Riemann zeta functional-relation toolkit.

A complex-plane zeta engine (Euler-Maclaurin plus reflection, with error
bounds), a machine-readable catalogue of functional equations and
recursion relations, a grid verifier that certifies each relation as
HOLDS/FAILS/INCONCLUSIVE, and recursion-ladder evaluators with
half-integer link tables.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .errors import (
    ConfigError,
    DomainError,
    ParamError,
    PoleError,
    PrecisionError,
    SingularityError,
    ZrcError,
)
from .identities import (
    AffineArg,
    Identity,
    LadderIndex,
    ResidualSample,
    TermSpec,
    alpha_coeff,
    catalogue,
    catalogue_metadata,
    get_identity,
    identity_ids,
    residual,
    singular_distance,
)
from .recursion import (
    HalfIntegerRow,
    half_integer_table,
    ratio_eq315,
    ratio_eq320,
    zeta_ladder_eq300,
    zeta_via_eq30,
)
from .special_functions import (
    cgamma,
    clog_gamma,
    cos_pi_half,
    cpow,
    sin_pi_half,
    tan_pi_half,
    tanh_pi_half,
)
from .verifier import (
    GridSpec,
    SampleRecord,
    ScanReport,
    VerdictRow,
    export,
    scan,
    standard_grid,
    verdict_all,
)
from .zeta import (
    EmParameters,
    EvalResult,
    ZetaEngine,
    choose_parameters,
    default_engine,
    em_error_bound,
    xi,
    zeta,
    zeta_em_raw,
)

__version__ = "0.1.0"

__all__ = [
    "AffineArg",
    "ConfigError",
    "DomainError",
    "EmParameters",
    "EvalResult",
    "GridSpec",
    "HalfIntegerRow",
    "Identity",
    "KERNEL_BACKEND",
    "LadderIndex",
    "ParamError",
    "PoleError",
    "PrecisionError",
    "ResidualSample",
    "SampleRecord",
    "ScanReport",
    "SingularityError",
    "TermSpec",
    "VerdictRow",
    "ZetaEngine",
    "ZrcError",
    "alpha_coeff",
    "catalogue",
    "catalogue_metadata",
    "cgamma",
    "choose_parameters",
    "clog_gamma",
    "cos_pi_half",
    "cpow",
    "default_engine",
    "em_error_bound",
    "export",
    "get_identity",
    "half_integer_table",
    "identity_ids",
    "ratio_eq315",
    "ratio_eq320",
    "residual",
    "scan",
    "sin_pi_half",
    "singular_distance",
    "standard_grid",
    "tan_pi_half",
    "tanh_pi_half",
    "verdict_all",
    "xi",
    "zeta",
    "zeta_em_raw",
    "zeta_ladder_eq300",
    "zeta_via_eq30",
]
