"""Certified verification of parametrized Wilker-type inequalities.

The package verifies the two-parameter trigonometric and hyperbolic
inequality families, recovers their sharp exponent thresholds, searches for
falsification witnesses just outside the sharp regions, and exposes the
associated bivariate-mean bounds.
"""

__version__ = "0.1.0"

from .certify import (
    Certificate,
    CertifyConfig,
    CertStatus,
    certify_sign,
    prove_sign,
    sample_sign,
    verify_statement,
    wilker_problem,
)
from .errors import (
    BracketError,
    ConfigError,
    DegenerateParams,
    DivisionByZeroInterval,
    DomainError,
    GuardUnavailable,
    NumericalLossOfSignificance,
    ParamsOutOfStatementRange,
    WilkercertError,
)
from .interval import Interval, iv_elem, iv_pow
from .kernels import (
    KERNELS,
    Params,
    abc_efg,
    proof_aux,
    ratio_D,
    ratio_H,
    ratio_func,
    series_info,
    sinc,
    sinhc,
    tanc,
    tanhc,
    wilker_hyp_u,
    wilker_trig_f,
)
from .statements import STATEMENTS, StatementId, get_statement

__all__ = [
    "Certificate",
    "CertifyConfig",
    "CertStatus",
    "Interval",
    "KERNELS",
    "Params",
    "STATEMENTS",
    "StatementId",
    "WilkercertError",
    "BracketError",
    "ConfigError",
    "DegenerateParams",
    "DivisionByZeroInterval",
    "DomainError",
    "GuardUnavailable",
    "NumericalLossOfSignificance",
    "ParamsOutOfStatementRange",
    "abc_efg",
    "certify_sign",
    "get_statement",
    "iv_elem",
    "iv_pow",
    "proof_aux",
    "prove_sign",
    "ratio_D",
    "ratio_H",
    "ratio_func",
    "sample_sign",
    "series_info",
    "sinc",
    "sinhc",
    "tanc",
    "tanhc",
    "verify_statement",
    "wilker_hyp_u",
    "wilker_problem",
    "wilker_trig_f",
]
