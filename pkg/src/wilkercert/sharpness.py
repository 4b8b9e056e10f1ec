"""Sharp constants and their empirical recovery.

Closed forms:

    trig threshold    -(ln(k+2) - ln 2) / (k (ln pi - ln 2))      (k >= 1)
    series threshold  -12 / (5 (k+2))

The ordering 1 > (ln(k+2) - ln 2)/(k(ln pi - ln 2)) > 12/(5(k+2)) for k >= 1
is checked numerically alongside.  Empirical recovery bisects on p between a
holding and a failing parameter, deciding each probe by dense sampled
verification (which includes the origin-series sign); the transition is
monotone along each branch, so bisection is justified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath
import numpy as np
from scipy.optimize import brentq

from .certify import CertifyConfig, CertStatus, sample_grid, statement_problems, verify_statement, _point_violates
from .errors import BracketError, DegenerateParams, ParamsOutOfStatementRange
from .kernels import Params, wilker_hyp_u, wilker_hyp_u_mp
from .statements import (
    LN_PI_OVER_2,
    StatementId,
    get_statement,
    series_threshold,
    trig_threshold,
)


@dataclass(frozen=True)
class SharpConstants:
    k: float
    trig_threshold: float          # NaN when k < -2 (log undefined)
    series_threshold: float
    lemma3_ok: Optional[bool]      # ordering check, only meaningful for k >= 1


def lemma3_holds(k: float) -> bool:
    """1 > (ln(k+2) - ln 2)/(k(ln pi - ln 2)) > 12/(5(k+2)), strictly."""
    mid = (math.log(k + 2) - math.log(2)) / (k * LN_PI_OVER_2)
    return 12.0 / (5.0 * (k + 2.0)) < mid < 1.0


def closed_thresholds(k) -> SharpConstants:
    kf = float(k)
    if kf * (kf + 2.0) == 0.0:
        raise DegenerateParams(f"k(k+2) must be nonzero, got k = {k}")
    s_thr = series_threshold(kf)
    if kf > -2.0:
        t_thr = trig_threshold(kf)
    else:
        t_thr = math.nan
    ok = lemma3_holds(kf) if kf >= 1.0 else None
    return SharpConstants(kf, t_thr, s_thr, ok)


# -- empirical threshold recovery ----------------------------------------------

# (statement family, branch): bracket builder around the expected transition.
def _bracket(stmt_id: StatementId, k: float) -> tuple[float, float]:
    s_thr = series_threshold(k)
    if stmt_id in (StatementId.MAIN1, StatementId.PT_K1, StatementId.PT_K2,
                   StatementId.PT_K3, StatementId.PT_K4):
        return (-1.5, -1e-6)
    if stmt_id == StatementId.MAIN2:
        return (s_thr - 0.5, s_thr + min(0.3, abs(s_thr) / 2))
    if stmt_id in (StatementId.MAIN3, StatementId.PH_K1, StatementId.PH_K2):
        return (s_thr - 1.0, -1e-6)
    if stmt_id in (StatementId.MAIN4, StatementId.PH_KM3, StatementId.PH_KM4):
        return (max(1e-6, s_thr - 1.0), s_thr + 1.0)
    raise ParamsOutOfStatementRange(f"{stmt_id.value} has no one-sided p-boundary to recover")


def empirical_threshold(stmt, k, tol: float = 1e-4,
                        config: Optional[CertifyConfig] = None) -> float:
    """Recover a sharp p-boundary by bisection on sampled verification."""
    if tol <= 0:
        raise BracketError("tol must be positive")
    spec = get_statement(stmt)
    config = config or CertifyConfig()

    def holds(p: float) -> bool:
        cert = verify_statement(spec, Params(k, p), mode="sampled", config=config)
        return cert.status is CertStatus.PROVED

    lo, hi = _bracket(spec.id, float(k))
    h_lo, h_hi = holds(lo), holds(hi)
    if h_lo == h_hi:
        raise BracketError(
            f"bracket [{lo}, {hi}] does not straddle the boundary of {spec.id.value} at k = {k}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if holds(mid) == h_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# -- falsification witnesses --------------------------------------------------


def falsify(stmt, params: Params, config: Optional[CertifyConfig] = None) -> Optional[float]:
    """Smallest interval-confirmed witness where the statement fails, if any.

    Absence of a witness within the search budget is a normal None return,
    not a proof that the statement holds.
    """
    spec = get_statement(stmt)
    spec.validate(params)
    config = config or CertifyConfig()
    if spec.family == "trig":
        hi = config.window_hi or (math.pi / 2 - 1e-9)
    else:
        hi = config.window_hi or 60.0
    best: Optional[float] = None
    for _name, prob, claim in statement_problems(spec, params):
        xs = np.unique(np.concatenate([
            np.logspace(-6, math.log10(hi), 400),
            sample_grid(config.window_lo, hi, 600),
        ]))
        vals = prob.point_eval(xs)
        bad = (vals <= 0) if claim > 0 else (vals >= 0)
        if prob.identically_zero and prob.strict:
            bad = np.ones_like(bad)
        for x in xs[bad]:
            x = float(x)
            if best is not None and x >= best:
                break
            if _point_violates(prob, x, claim):
                best = x
                break
    return best


# -- the unique sign-change point of the hyperbolic functional ------------------


def crossing_point(k, p, tol: float = 1e-12, grid_points: int = 0) -> float:
    """Root x0 of u(.; k, p) = 0 for k >= 1 and -12/(5(k+2)) < p < 0.

    In this parameter strip u is negative near the origin and tends to +inf,
    with (per the source material, proof omitted there) a single sign change;
    uniqueness is checked on a grid by `crossing_sign_pattern`, not proved.
    """
    params = Params(k, p)
    kf, pf = params.k, params.p
    if kf < 1:
        raise ParamsOutOfStatementRange(f"crossing point needs k >= 1, got {k}")
    if not series_threshold(kf) < pf < 0:
        raise ParamsOutOfStatementRange(
            f"crossing point needs {series_threshold(kf):.6g} < p < 0, got p = {p}"
        )

    def u(x: float) -> float:
        return wilker_hyp_u(x, params)

    a = 0.5
    while u(a) >= 0 and a > 1e-6:
        a /= 2
    if u(a) >= 0:
        raise BracketError("no negative value found near the origin")
    b = max(1.0, 2 * a)
    while u(b) <= 0:
        b *= 2
        if b > 1e6:
            raise BracketError("no positive value found before the cutoff")
    x0 = brentq(u, a, b, xtol=max(tol, 1e-15), rtol=8.9e-16)
    return float(x0)


def crossing_sign_pattern(k, p, cutoff: Optional[float] = None, n: int = 10_000) -> int:
    """Number of sign changes of u on a geometric grid over (0, cutoff]."""
    params = Params(k, p)
    if cutoff is None:
        cutoff = 2.0 * crossing_point(k, p, tol=1e-10)
    xs = np.geomspace(1e-3, cutoff, n)
    from .certify import _vectorized_wilker

    vals = _vectorized_wilker("hyp", xs, params)
    signs = np.sign(vals)
    signs = signs[signs != 0]
    return int(np.count_nonzero(np.diff(signs)))


def confirm_crossing(k, p, x0: float, dps: int = 40) -> float:
    """|u(x0)| in extended precision; independent check of the root quality."""
    with mpmath.workdps(dps):
        return float(abs(wilker_hyp_u_mp(x0, Params(k, p))))
