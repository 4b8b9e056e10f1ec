"""Bivariate means and the mean-inequality corollaries.

The means are evaluated through the symmetric variable d = (a-b)/(a+b): every
difference-over-inverse-function mean is A*d/phi(d) for an odd phi, which is
numerically stable and makes the removable a = b singularity explicit (series
below |d| = 1e-8, value a at d = 0).

`bound_check` probes the corollary bounds on geometric grids.  A sample only
counts as a violation when the margin clears a 1e-13 noise floor, because at
the sharp exponent the true margin decays like x^6 near the origin and dips
below double rounding there; raw worst margins are still reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, ParamsOutOfStatementRange
from .kernels import sinc, sinhc
from .statements import trig_threshold

_EPS_D = 1e-8
_NOISE = 1e-13

SIMPLE_MEANS = (
    "arithmetic",
    "geometric",
    "quadratic",
    "logarithmic",
    "seiffert_p",
    "seiffert_t",
    "neuman_sandor",
)


def _dmean(a: float, b: float, phi, series_c2: float) -> float:
    """A * d / phi(d) with a quadratic series takeover near a = b."""
    am = 0.5 * (a + b)
    d = (a - b) / (a + b)
    if abs(d) < _EPS_D:
        return am * (1.0 + series_c2 * d * d)
    return am * d / phi(d)


def power_mean(a: float, b: float, r: float, w: float) -> float:
    """r-th weighted power mean; geometric-weighted at r = 0."""
    if not 0.0 < w < 1.0:
        raise DomainError(f"power mean weight must lie in (0, 1), got {w}")
    if a <= 0 or b <= 0:
        raise DomainError("means require positive arguments")
    if r == 0.0:
        return a**w * b ** (1.0 - w)
    return (w * a**r + (1.0 - w) * b**r) ** (1.0 / r)


def hfun(t: float, r: float) -> float:
    """((sqrt(8 + t^(2r)) + t^r)/4)^(1/r); cube root at r = 0; fixes t = 1."""
    if t <= 0:
        raise DomainError(f"hfun requires t > 0, got {t}")
    if r == 0.0:
        return t ** (1.0 / 3.0)
    tr = t**r
    return ((math.sqrt(8.0 + tr * tr) + tr) / 4.0) ** (1.0 / r)


def mean_eval(kind, a: float, b: Optional[float] = None) -> float:
    """Evaluate a mean by kind; kind is a name, ('power', r, w) or ('hfun', r).

    For ('hfun', r) the single argument rides in the first slot and b is
    ignored, matching its one-variable definition.
    """
    if isinstance(kind, tuple):
        tag = kind[0]
        if tag == "power":
            _, r, w = kind
            if b is None:
                raise DomainError("power mean needs two arguments")
            return power_mean(a, b, float(r), float(w))
        if tag == "hfun":
            return hfun(a, float(kind[1]))
        raise DomainError(f"unknown mean kind {kind!r}")
    if b is None:
        raise DomainError(f"mean {kind!r} needs two arguments")
    if a <= 0 or b <= 0:
        raise DomainError("means require positive arguments")
    if kind == "arithmetic":
        return 0.5 * (a + b)
    if kind == "geometric":
        return math.sqrt(a * b)
    if kind == "quadratic":
        return math.sqrt(0.5 * (a * a + b * b))
    if kind == "logarithmic":
        return _dmean(a, b, math.atanh, -1.0 / 3.0)
    if kind == "seiffert_p":
        return _dmean(a, b, math.asin, -1.0 / 6.0)
    if kind == "seiffert_t":
        return _dmean(a, b, math.atan, +1.0 / 3.0)
    if kind == "neuman_sandor":
        return _dmean(a, b, math.asinh, +1.0 / 6.0)
    raise DomainError(f"unknown mean kind {kind!r}")


def classical_chain(a: float, b: float) -> list:
    """(name, value) pairs in the classical order G, L, P, A, NS, T, Q."""
    order = (
        "geometric",
        "logarithmic",
        "seiffert_p",
        "arithmetic",
        "neuman_sandor",
        "seiffert_t",
        "quadratic",
    )
    return [(name, mean_eval(name, a, b)) for name in order]


# -- substitution identities -----------------------------------------------------

_IDENTITIES = ("arcsin", "arctan", "log", "arcsinh")


def substitution_check(identity: str, a: float, b: float) -> float:
    """Max residual of the change-of-variables identity linking x to (a, b).

    arcsin:  x = arcsin d,  sin x/x = P/A,   cos x = G/A
    arctan:  x = arctan d,  sin x/x = T/Q,   cos x = A/Q
    log:     x = ln sqrt(a/b), sinh x/x = L/G, cosh x = A/G
    arcsinh: x = arcsinh d, sinh x/x = NS/A, cosh x = Q/A
    """
    if not a > b > 0:
        raise DomainError(f"substitution identities need a > b > 0, got ({a}, {b})")
    d = (a - b) / (a + b)
    A = mean_eval("arithmetic", a, b)
    G = mean_eval("geometric", a, b)
    Q = mean_eval("quadratic", a, b)
    if identity == "arcsin":
        x = math.asin(d)
        r1, r2 = mean_eval("seiffert_p", a, b) / A, G / A
        return max(abs(sinc(x) - r1), abs(math.cos(x) - r2))
    if identity == "arctan":
        x = math.atan(d)
        r1, r2 = mean_eval("seiffert_t", a, b) / Q, A / Q
        return max(abs(sinc(x) - r1), abs(math.cos(x) - r2))
    if identity == "log":
        x = 0.5 * math.log(a / b)
        r1, r2 = mean_eval("logarithmic", a, b) / G, A / G
        return max(abs(sinhc(x) - r1), abs(math.cosh(x) - r2))
    if identity == "arcsinh":
        x = math.asinh(d)
        r1, r2 = mean_eval("neuman_sandor", a, b) / A, Q / A
        return max(abs(sinhc(x) - r1), abs(math.cosh(x) - r2))
    raise DomainError(f"unknown identity {identity!r}; expected one of {_IDENTITIES}")


# -- corollary bound checks --------------------------------------------------------


@dataclass(frozen=True)
class BoundCheckResult:
    which: str
    exponent: float
    side: str
    holds: bool
    worst_margin: float
    worst_at: float
    samples: int


def _x_grid(family: str, n: int) -> np.ndarray:
    hi = math.pi / 2 - 1e-6 if family == "trig" else 20.0
    return np.unique(
        np.concatenate([np.geomspace(1e-3, hi, n // 2), np.linspace(1e-3, hi, n - n // 2)])
    )


def _ab_grid(n: int) -> np.ndarray:
    """Ratios a/b probing both the a ~ b and the skewed regimes (b = 1)."""
    return np.unique(np.concatenate([1.0 + np.geomspace(1e-6, 1e-1, n // 2),
                                     np.geomspace(1.1, 200.0, n - n // 2)]))


_MEAN_FORMS = {
    # which: (target mean, first slot mean, second slot mean); weight 2/3 on first
    "P_AG": ("seiffert_p", "arithmetic", "geometric"),
    "T_AQ": ("seiffert_t", "quadratic", "arithmetic"),
    "L_AG": ("logarithmic", "geometric", "arithmetic"),
    "NS_AQ": ("neuman_sandor", "arithmetic", "quadratic"),
}

_YANG_FORMS = {
    # which: (family, bound builder)
    "Yang1t": ("trig", lambda x, e: power_mean(1.0, math.cos(x), e, 2.0 / 3.0)),
    "Yang2t": ("trig", lambda x, e: hfun(math.cos(x), e)),
    "Yang1h": ("hyp", lambda x, e: power_mean(1.0, math.cosh(x), e, 2.0 / 3.0)),
    "Yang2h": ("hyp", lambda x, e: hfun(math.cosh(x), e)),
}


def _hyp_lower_fails_in_limit(which: str, exponent: float, side: str) -> bool:
    """Far-end failure of the hyperbolic lower bounds, decided analytically.

    For any exponent e > 0 the candidate lower bound grows like a constant
    multiple of cosh x (power mean ~ (1/3)^(1/e) cosh x, quadratic form
    ~ 2^(-1/e) cosh x) while sinh x/x ~ cosh x / x, so the bound eventually
    crosses above the target.  The crossover sits near 3^(1/e), far beyond
    any feasible grid for small e, hence the analytic rule.
    """
    return side == "lower" and exponent > 0 and which in ("Yang1h", "Yang2h", "L_AG", "NS_AQ")


def bound_check(which: str, exponent: float, side: str, samples: int = 1000) -> BoundCheckResult:
    """Check one side of a corollary bound across a sample grid.

    side 'lower': the mean expression at `exponent` must stay below the
    target (sin x/x, sinh x/x, or the matching Seiffert-type mean);
    side 'upper': above it.  Margins are signed so positive means the bound
    holds at that sample.  The hyperbolic lower forms additionally run an
    analytic far-end test (see `_hyp_lower_fails_in_limit`); a failure found
    there is reported with worst_at = inf.
    """
    if samples < 2:
        raise DomainError("need at least two samples")
    if side not in ("lower", "upper"):
        raise DomainError(f"side must be 'lower' or 'upper', got {side!r}")
    if _hyp_lower_fails_in_limit(which, exponent, side):
        return BoundCheckResult(which, exponent, side, False, -math.inf, math.inf, 0)
    sgn = 1.0 if side == "lower" else -1.0
    worst = math.inf
    worst_at = math.nan
    count = 0
    if which in _YANG_FORMS:
        family, bound_fn = _YANG_FORMS[which]
        target_fn = sinc if family == "trig" else sinhc
        for x in _x_grid(family, samples):
            x = float(x)
            margin = sgn * (target_fn(x) - bound_fn(x, exponent))
            count += 1
            if margin < worst:
                worst, worst_at = margin, x
    elif which in _MEAN_FORMS:
        target, first, second = _MEAN_FORMS[which]
        for r in _ab_grid(samples):
            a, b = float(r), 1.0
            bound = power_mean(mean_eval(first, a, b), mean_eval(second, a, b), exponent, 2.0 / 3.0)
            margin = sgn * (mean_eval(target, a, b) - bound)
            count += 1
            if margin < worst:
                worst, worst_at = margin, a
    else:
        raise DomainError(f"unknown bound check {which!r}")
    return BoundCheckResult(which, exponent, side, worst >= -_NOISE, worst, worst_at, count)


# -- the chain-statement parameter region -------------------------------------------


@dataclass(frozen=True)
class OmegaRegion:
    omega1: bool
    omega2: bool
    omega3: bool
    chain_holds: bool


def omega_region(k: float, p: float) -> OmegaRegion:
    """Region bookkeeping for the chain statements, encoded as stated.

    chain_holds is the conjunction and coincides with
    k >= 2 and p >= (ln(k+2) - ln 2)/(k (ln pi - ln 2)).
    """
    if k < 1:
        raise ParamsOutOfStatementRange(f"chain regions are stated for k >= 1, got k = {k}")
    omega1 = (k >= 2 and p > 0) or (1 <= k <= 2 and p < 0)
    omega2 = k >= 2 and p >= 0
    omega3 = p < 0 or p >= -trig_threshold(k)
    return OmegaRegion(omega1, omega2, omega3, omega1 and omega2 and omega3)
