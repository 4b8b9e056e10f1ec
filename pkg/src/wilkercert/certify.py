"""Certified sign verification: interval subdivision plus endpoint guards.

A claim "f > 0 on (0, pi/2)" (or its hyperbolic twin on (0, inf)) is
decomposed into three machine-checked pieces:

  * an origin guard: the exact series of the functional in y = x^2 is
    sign-determined on (0, delta] by rational interval evaluation, escalating
    to the next series order when a leading coefficient vanishes exactly;
  * adaptive bisection with sound interval enclosures on a compact window;
  * a far-end guard: a monotone dominance bound valid on [cutoff, endpoint).

Soundness over completeness: a Proved certificate requires every subinterval
enclosure to carry the claimed sign and both guards to pass; exhausting the
subdivision depth yields Inconclusive, never a false Proved.  Falsified
certificates carry a witness point whose own interval enclosure lies strictly
on the wrong side (the single exception is p = 0, where the functional is
identically zero and the strict claim fails with margin zero).

Chain statements verify every link through the same pipeline and report
per-link verdicts.  Subinterval verification is order-independent and the
worklist order deterministic, so verdicts are reproducible and the work is
safe to parallelize.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .errors import ConfigError
from .interval import PI, PI_HALF, Interval, iv_cosh, iv_log, iv_sinh
from .kernels import (
    Params,
    _sinc_at,
    _sinhc_at,
    _tanc_at,
    _tanhc_at,
    iv_pow_iv,
    ratio_func,
    wilker_series,
    wilker_trig_f,
    wilker_hyp_u,
)
from .series import SWITCH_RADIUS, F, SeriesBound, log_combo_series, weighted_power_series
from .statements import StatementSpec, get_statement

PI_HALF_LO = PI_HALF.lo


class CertStatus(str, Enum):
    PROVED = "Proved"
    FALSIFIED = "Falsified"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class GuardReport:
    status: str = "unused"           # 'pass' | 'fail' | 'unused'
    justification: str = ""
    cutoff: Optional[float] = None
    witness: Optional[float] = None


@dataclass
class CertifyConfig:
    max_depth: int = 40
    window_lo: float = 1e-3
    window_hi: Optional[float] = None    # None: pi/2 - 1e-3 (trig) or far cutoff (hyp)
    min_width: float = 1e-12
    precision: str = "float64-outward"
    sample_points: int = 10_000

    def validate(self):
        if self.max_depth < 1:
            raise ConfigError("max_depth must be >= 1")
        if self.window_hi is not None and self.window_hi <= self.window_lo:
            raise ConfigError("empty certification window")
        if self.window_lo <= 0:
            raise ConfigError("window must start strictly above zero")


@dataclass
class Certificate:
    status: CertStatus
    window: tuple
    guards: dict = field(default_factory=lambda: {"origin": GuardReport(), "far_end": GuardReport()})
    witness: Optional[float] = None
    subintervals: int = 0
    min_margin: float = math.inf
    precision_used: str = "float64-outward"
    mode: str = "certified"
    statement: Optional[str] = None
    params: Optional[tuple] = None
    links: Optional[list] = None
    notes: list = field(default_factory=list)

    @property
    def proved(self) -> bool:
        return self.status is CertStatus.PROVED


# ---------------------------------------------------------------------------
# sign problems: one pipeline for the functionals and every chain link
# ---------------------------------------------------------------------------


@dataclass
class SignProblem:
    """A function on an open interval whose sign is to be certified."""

    name: str
    family: str                                  # 'trig' | 'hyp'
    iv_eval: Callable[[Interval], Interval]
    point_eval: Callable[[np.ndarray], np.ndarray]
    series: SeriesBound                          # in y = x^2, constant term 0
    far_guard: Callable[[int, "CertifyConfig"], GuardReport]
    strict: bool = True                          # '>' claim vs '>='
    identically_zero: bool = False


# -- origin guard ---------------------------------------------------------------


def _series_sign_outcome(sb: SeriesBound, claim: int, y_hi: Fraction, max_depth: int = 80):
    """Sign of the series on (0, y_hi] by exact rational interval evaluation.

    Returns (status, order, witness_y): 'pass' when the claimed sign is
    certified on the whole range; 'falsified' when the opposite strict sign is
    certified on some subrange (witness_y inside it); 'zero' when the series
    is identically zero; 'undecided' otherwise.  `order` is the power of x of
    the deciding coefficient.
    """
    coeffs = sb.coeffs
    shift = 0
    while shift <= sb.order and coeffs[shift] == 0:
        shift += 1
    if shift > sb.order:
        if sb.tail == 0:
            return "zero", None, None
        return "undecided", None, None
    q = sb.shift_down(shift)
    order = 2 * shift

    def recurse(lo: Fraction, hi: Fraction, depth: int):
        vlo, vhi = q.eval_frac(lo, hi)
        if claim > 0 and vlo > 0:
            return "pass", None
        if claim < 0 and vhi < 0:
            return "pass", None
        if (claim > 0 and vhi < 0) or (claim < 0 and vlo > 0):
            mid = (lo + hi) / 2
            return "falsified", mid if mid > 0 else hi
        if depth >= max_depth:
            return "undecided", None
        mid = (lo + hi) / 2
        right, w = recurse(mid, hi, depth + 1)
        if right != "pass":
            return right, w
        return recurse(lo, mid, depth + 1)

    status, wy = recurse(F(0), F(y_hi), 0)
    return status, order, wy


def guard_origin(prob: SignProblem, claim: int, delta: float) -> GuardReport:
    """Certify the claimed sign on (0, delta] from the exact series."""
    if delta <= 0 or delta > SWITCH_RADIUS:
        raise ConfigError(f"origin guard delta must lie in (0, {SWITCH_RADIUS}], got {delta}")
    status, order, wy = _series_sign_outcome(prob.series, claim, Fraction(delta) ** 2)
    if status == "pass":
        return GuardReport(
            "pass",
            f"series sign certified on (0, {delta:g}] at order x^{order}",
            cutoff=delta,
        )
    if status == "zero":
        if prob.strict:
            return GuardReport("fail", "series identically zero; strict sign fails")
        return GuardReport("pass", "series identically zero; non-strict claim holds with equality", cutoff=delta)
    if status == "falsified":
        w = math.sqrt(float(wy))
        return GuardReport("fail", f"series certifies the opposite sign near x = {w:.3g}", witness=w)
    return GuardReport("fail", "series enclosure does not resolve the sign near the origin")


# -- far-end guards ---------------------------------------------------------------

_TRIG_PROBE = [PI_HALF_LO - 10.0**-j for j in range(3, 13)]
_HYP_PROBE = [2.0**j for j in range(1, 11)]

_TWO_OVER_PI = Interval(2.0, 2.0) / PI


def _wilker_far_guard(family: str, params: Params):
    kp_iv = Interval.from_fraction(params.kp_exact)
    p_iv = Interval.from_fraction(params.p_exact)
    k2 = Interval.from_fraction(params.k_exact + 2)
    ws = Interval(2.0, 2.0) / k2
    wt = Interval.from_fraction(params.k_exact) / k2

    def trig_guard(claim: int, config: CertifyConfig) -> GuardReport:
        p = params.p
        if p > 0:
            if claim < 0:
                return GuardReport("fail", "functional diverges to +inf at pi/2; negative claim fails there")
            need = (Interval(1.0, 1.0) + ws.abs()).hi
            for x in _TRIG_PROBE:
                val = wt * iv_pow_iv(_tanc_at(x), p_iv)
                if val.lo >= need:
                    return GuardReport(
                        "pass",
                        "tan term dominates: k/(k+2) (tan x/x)^p >= 1 + 2/(k+2) from the cutoff on, "
                        "with tan x/x increasing",
                        cutoff=x,
                    )
            return GuardReport("fail", "no probe point reached the tan-dominance threshold")
        endpoint = ws * iv_pow_iv(_TWO_OVER_PI, kp_iv) - 1.0
        if claim > 0:
            if endpoint.lo > 0:
                for x in _TRIG_PROBE:
                    bound = ws * iv_pow_iv(_sinc_at(x), kp_iv) - 1.0
                    if bound.lo > 0:
                        return GuardReport(
                            "pass",
                            "sin-term lower bound 2/(k+2) (sin x/x)^(kp) - 1 stays positive on the tail "
                            f"(endpoint value in [{endpoint.lo:.3e}, {endpoint.hi:.3e}])",
                            cutoff=x,
                        )
                return GuardReport("fail", "endpoint value positive but no probe certified the margin")
            if abs(endpoint.mid()) <= 1e-9:
                x = _TRIG_PROBE[-1]
                bound = ws * iv_pow_iv(_sinc_at(x), kp_iv) - 1.0
                return GuardReport(
                    "pass",
                    "boundary parameter: endpoint limit vanishes to 1e-9; certified non-strict "
                    f"(tail lower bound {bound.lo:.3e} from x = {x:.12g} on)",
                    cutoff=x,
                )
            return GuardReport("fail", f"endpoint value {endpoint.mid():.3e} has the wrong sign")
        # claim < 0, p < 0: endpoint sup for the sin term, decaying tan term
        if not endpoint.strictly_negative():
            return GuardReport("fail", f"endpoint value {endpoint.mid():.3e} not strictly negative")
        sup_sin = ws * iv_pow_iv(_TWO_OVER_PI, kp_iv)
        for x in _TRIG_PROBE:
            ub = sup_sin + wt * iv_pow_iv(_tanc_at(x), p_iv) - 1.0
            if ub.hi < 0:
                return GuardReport(
                    "pass",
                    "upper bound 2/(k+2) (2/pi)^(kp) + k/(k+2) (tan x/x)^p - 1 < 0 from the cutoff on "
                    "(tan term decreasing for p < 0)",
                    cutoff=x,
                )
        return GuardReport("fail", "tan-term decay did not absorb the endpoint margin at any probe")

    def hyp_guard(claim: int, config: CertifyConfig) -> GuardReport:
        p = params.p
        if params.k >= 1:
            if claim < 0:
                return GuardReport("fail", "functional tends to +inf; negative claim fails far out")
            if p > 0:
                for x in _HYP_PROBE:
                    val = ws * iv_pow_iv(_sinhc_at(x), kp_iv)
                    if val.lo >= 2.0:
                        return GuardReport(
                            "pass",
                            "sinh term dominates: 2/(k+2) (sinh X/X)^(kp) > 2 at the cutoff, increasing beyond",
                            cutoff=x,
                        )
                return GuardReport("fail", "sinh-dominance threshold not reached")
            for x in _HYP_PROBE:
                inv_tanhc = Interval(1.0, 1.0) / _tanhc_at(x)       # x / tanh x
                val = wt * iv_pow_iv(inv_tanhc, -p_iv)
                if val.lo >= 2.0:
                    return GuardReport(
                        "pass",
                        "tanh term dominates: k/(k+2) (X/tanh X)^|p| > 2 at the cutoff, increasing beyond",
                        cutoff=x,
                    )
            return GuardReport("fail", "x/tanh x dominance threshold not reached")
        # k < -2: weights are (negative, positive); only negative claims have guards.
        if claim > 0:
            return GuardReport("fail", "functional tends below zero; positive claim fails far out")
        if p > 0:
            for x in _HYP_PROBE:
                ub = wt * iv_pow_iv(_tanhc_at(x), p_iv) - 1.0
                if ub.hi < 0:
                    return GuardReport(
                        "pass",
                        "tanh-term decay: k/(k+2) (tanh X/X)^p < 1 at the cutoff, decreasing beyond; "
                        "the sinh term carries a negative weight",
                        cutoff=x,
                    )
            return GuardReport("fail", "tanh decay did not certify a negative upper bound")
        # p < 0: sinh x/x >= x/tanh x beyond a certified crossover, so the
        # negative-weight sinh term dominates the growing tanh term.
        expo_iv = Interval.from_fraction(params.kp_exact + params.p_exact)   # kp - |p| > 0
        for x in (3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0, 32.0):
            pt = Interval.point(x)
            crossover = iv_sinh(pt) * iv_sinh(pt) / (pt * pt * iv_cosh(pt))
            if crossover.lo < 1.0:
                continue
            inv_tanhc = Interval(1.0, 1.0) / _tanhc_at(x)
            bracket = ws * iv_pow_iv(inv_tanhc, expo_iv) + wt
            if bracket.hi < 0:
                return GuardReport(
                    "pass",
                    "beyond a certified crossover sinh x/x >= x/tanh x (sinh^2 x/(x^2 cosh x) >= 1, "
                    "increasing for x > 2), the negative-weight sinh term dominates",
                    cutoff=x,
                )
        return GuardReport("fail", "crossover dominance not certified at any probe")

    return trig_guard if family == "trig" else hyp_guard


# -- problem builders ---------------------------------------------------------------


def wilker_problem(family: str, params: Params) -> SignProblem:
    kern = wilker_trig_f if family == "trig" else wilker_hyp_u
    return SignProblem(
        name=f"wilker_{family}",
        family=family,
        iv_eval=lambda X: kern(X, params),
        point_eval=lambda xs: _vectorized_wilker(family, xs, params),
        series=wilker_series(family, params),
        far_guard=_wilker_far_guard(family, params),
        identically_zero=(params.p_exact == 0),
    )


def _vectorized_wilker(family: str, xs, params: Params) -> np.ndarray:
    """Grid evaluation: exact-coefficient series below the switch radius,
    direct formula above.  The series path keeps tiny near-origin values out
    of the float noise floor."""
    xs = np.asarray(xs, dtype=float)
    out = np.empty_like(xs)
    near = xs <= SWITCH_RADIUS
    if near.any():
        coeffs, _ = wilker_series(family, params).shift_down(2).float_coeffs()
        y = xs[near] ** 2
        acc = np.zeros_like(y)
        for c in reversed(coeffs):
            acc = acc * y + c
        out[near] = acc * y * y
    far = ~near
    if far.any():
        x = xs[far]
        k, p, kp = params.k, params.p, params.k * params.p
        if family == "trig":
            s = np.sin(x) / x
            t = np.tan(x) / x
        else:
            s = np.sinh(x) / x
            t = np.tanh(x) / x
        with np.errstate(over="ignore"):
            out[far] = 2.0 / (k + 2.0) * s**kp + k / (k + 2.0) * t**p - 1.0
    return out


def _series_point_eval(sb: SeriesBound, xs, direct) -> np.ndarray:
    xs = np.asarray(xs, dtype=float)
    out = np.empty_like(xs)
    near = xs <= SWITCH_RADIUS
    if near.any():
        coeffs, _ = sb.float_coeffs()
        y = xs[near] ** 2
        acc = np.zeros_like(y)
        for c in reversed(coeffs):
            acc = acc * y + c
        out[near] = acc
    if (~near).any():
        out[~near] = direct(xs[~near])
    return out


def log_combo_problem(a: Fraction, b: Fraction, family: str, name: str) -> SignProblem:
    """a*ln(sin x/x) + b*ln(tan x/x) (or hyperbolic); the chains' product link."""
    a, b = F(a), F(b)
    sb = log_combo_series(a, b, family)
    af, bf = float(a), float(b)
    a_iv = Interval.from_fraction(a)
    b_iv = Interval.from_fraction(b)

    def iv_eval(X: Interval) -> Interval:
        if X.hi <= SWITCH_RADIUS:
            return sb.eval_interval(X * X)
        if X.lo < SWITCH_RADIUS:
            return Interval.hull(
                iv_eval(Interval(X.lo, SWITCH_RADIUS)), iv_eval(Interval(SWITCH_RADIUS, X.hi))
            )
        s = ratio_func("sinc" if family == "trig" else "sinhc", X)
        t = ratio_func("tanc" if family == "trig" else "tanhc", X)
        return a_iv * iv_log(s) + b_iv * iv_log(t)

    def direct(x):
        if family == "trig":
            return af * np.log(np.sin(x) / x) + bf * np.log(np.tan(x) / x)
        return af * np.log(np.sinh(x) / x) + bf * np.log(np.tanh(x) / x)

    def far_guard(claim: int, config: CertifyConfig) -> GuardReport:
        if family == "trig":
            if claim < 0 or b <= 0:
                return GuardReport("fail", "no dominance pattern for this sign/weight combination")
            floor_sin = a_iv * iv_log(_TWO_OVER_PI) if a > 0 else Interval(0.0, 0.0)
            for x in _TRIG_PROBE:
                val = floor_sin + b_iv * iv_log(_tanc_at(x))
                if val.lo > 0:
                    return GuardReport(
                        "pass",
                        "ln(tan x/x) grows without bound while ln(sin x/x) >= ln(2/pi)",
                        cutoff=x,
                    )
            return GuardReport("fail", "log-dominance threshold not reached")
        if claim < 0 or b <= 0 or a < 2 * b:
            return GuardReport("fail", "no dominance pattern for this sign/weight combination")
        # a/b >= 2: write as b[(a/b - 2) ln(sinh x/x) + ln(sinh^2 x tanh x / x^3)],
        # both factors positive and increasing from x = 2 on.
        x = 2.0
        excess = Interval.from_fraction(a - 2 * b)
        lead = iv_log(_sinhc_at(x))
        rr = excess * lead + b_iv * (lead * 2.0 + iv_log(_tanhc_at(x)))
        if rr.lo > 0:
            return GuardReport(
                "pass",
                "certified at x = 2: (a - 2b) ln(sinh x/x) + b ln(sinh^2 x tanh x/x^3) > 0, "
                "both terms increasing beyond (the second for x > 2 via coth x >= 1 >= tanh x)",
                cutoff=x,
            )
        return GuardReport("fail", "hyperbolic log-dominance not certified at the crossover")

    return SignProblem(
        name=name,
        family=family,
        iv_eval=iv_eval,
        point_eval=lambda xs: _series_point_eval(sb, xs, direct),
        series=sb,
        far_guard=far_guard,
        identically_zero=(a == 0 and b == 0),
    )


def weight_swap_problem(params: Params, reciprocal: bool, name: str) -> SignProblem:
    """(k-2)((tan x/x)^p - (sin x/x)^(kp)) or its reciprocal-exponent twin.

    Identically zero at k = 2, where the chain uses a non-strict link.
    """
    k, p, kp = params.k_exact, params.p_exact, params.kp_exact
    c = k - 2
    if reciprocal:
        terms = ((c, -kp, F(0)), (-c, F(0), -p))     # (k-2)(s^-kp - t^-p)
        e_sin, e_tan = -kp, -p
    else:
        terms = ((c, F(0), p), (-c, kp, F(0)))       # (k-2)(t^p - s^kp)
        e_sin, e_tan = kp, p
    sb = weighted_power_series(terms, "trig")
    c_iv = Interval.from_fraction(c)
    es_iv = Interval.from_fraction(e_sin)
    et_iv = Interval.from_fraction(e_tan)

    def iv_eval(X: Interval) -> Interval:
        if X.hi <= SWITCH_RADIUS:
            return sb.eval_interval(X * X)
        if X.lo < SWITCH_RADIUS:
            return Interval.hull(
                iv_eval(Interval(X.lo, SWITCH_RADIUS)), iv_eval(Interval(SWITCH_RADIUS, X.hi))
            )
        s = iv_pow_iv(ratio_func("sinc", X), es_iv)
        t = iv_pow_iv(ratio_func("tanc", X), et_iv)
        return c_iv * (s - t) if reciprocal else c_iv * (t - s)

    cf, kpf, pf = float(c), float(kp), float(p)

    def direct(x):
        s = np.sin(x) / x
        t = np.tan(x) / x
        if reciprocal:
            return cf * (s**-kpf - t**-pf)
        return cf * (t**pf - s**kpf)

    def far_guard(claim: int, config: CertifyConfig) -> GuardReport:
        if c == 0:
            return GuardReport("pass", "identically zero at k = 2; non-strict link holds with equality",
                               cutoff=_TRIG_PROBE[0])
        if claim < 0 or c < 0 or p <= 0:
            return GuardReport("fail", "no dominance pattern for this sign/weight combination")
        for x in _TRIG_PROBE:
            if reciprocal:
                # s^-kp >= 1 and t^-p decreasing through the probe value
                val = c_iv * (Interval(1.0, 1.0) - iv_pow_iv(_tanc_at(x), Interval.from_fraction(-p)))
            else:
                # t^p increasing through the probe value, s^kp <= 1
                val = c_iv * (iv_pow_iv(_tanc_at(x), Interval.from_fraction(p)) - 1.0)
            if val.lo > 0:
                return GuardReport("pass", "tan-ratio term strictly past the unit barrier at the cutoff, "
                                           "monotone beyond", cutoff=x)
        return GuardReport("fail", "unit-barrier margin not certified at any probe")

    return SignProblem(
        name=name,
        family="trig",
        iv_eval=iv_eval,
        point_eval=lambda xs: _series_point_eval(sb, xs, direct),
        series=sb,
        far_guard=far_guard,
        strict=False,
        identically_zero=(c == 0 or p == 0),
    )


def nueman_refinement_problem() -> SignProblem:
    """2 sin x/x + tan x/x - 2 x/sin x - x/tan x on (0, pi/2)."""
    one = F(1)
    terms = ((F(2), one, F(0)), (one, F(0), one), (F(-2), -one, F(0)), (-one, F(0), -one))
    sb = weighted_power_series(terms, "trig")

    def iv_eval(X: Interval) -> Interval:
        if X.hi <= SWITCH_RADIUS:
            return sb.eval_interval(X * X)
        if X.lo < SWITCH_RADIUS:
            return Interval.hull(
                iv_eval(Interval(X.lo, SWITCH_RADIUS)), iv_eval(Interval(SWITCH_RADIUS, X.hi))
            )
        s = ratio_func("sinc", X)
        t = ratio_func("tanc", X)
        two = Interval(2.0, 2.0)
        return two * s + t - two / s - Interval(1.0, 1.0) / t

    def direct(x):
        s = np.sin(x) / x
        t = np.tan(x) / x
        return 2 * s + t - 2 / s - 1 / t

    def far_guard(claim: int, config: CertifyConfig) -> GuardReport:
        if claim < 0:
            return GuardReport("fail", "expression diverges to +inf at pi/2")
        for x in _TRIG_PROBE:
            t = _tanc_at(x)
            val = Interval(4.0, 4.0) / PI + t - PI - Interval(1.0, 1.0) / t
            if val.lo > 0:
                return GuardReport(
                    "pass",
                    "tan x/x past the dominance barrier: 2 sin x/x > 4/pi, 2 x/sin x < pi, "
                    "x/tan x < 1/(tan x/x)",
                    cutoff=x,
                )
        return GuardReport("fail", "dominance barrier not reached")

    return SignProblem(
        name="nueman_refinement",
        family="trig",
        iv_eval=iv_eval,
        point_eval=lambda xs: _series_point_eval(sb, xs, direct),
        series=sb,
        far_guard=far_guard,
    )


def chain_links(chain: str, params: Params) -> list[tuple[str, SignProblem]]:
    """The ordered inequality links of a chain statement, as sign problems."""
    k, p = params.k_exact, params.p_exact
    recip = Params(k, -p) if p != 0 else None
    if chain == "yang3t":
        links = [
            ("weight_swap", weight_swap_problem(params, reciprocal=False, name="weight_swap")),
            ("power_product", log_combo_problem(k * p, p, "trig", "power_product")),
        ]
        if recip is not None:
            links.append(("reciprocal_form", wilker_problem("trig", recip)))
        return links
    if chain == "yang4t":
        links = [
            ("power_product", log_combo_problem(k * p, p, "trig", "power_product")),
            ("weight_swap_reciprocal", weight_swap_problem(params, reciprocal=True,
                                                           name="weight_swap_reciprocal")),
        ]
        if recip is not None:
            links.append(("reciprocal_form", wilker_problem("trig", recip)))
        return links
    if chain == "yang3h":
        links = [("power_product", log_combo_problem(k * p, p, "hyp", "power_product"))]
        if recip is not None:
            links.append(("reciprocal_form", wilker_problem("hyp", recip)))
        return links
    if chain == "nueman":
        return [
            ("refined_upper", nueman_refinement_problem()),
            ("reciprocal_form", wilker_problem("trig", Params(1, -1))),
        ]
    raise ConfigError(f"unknown chain {chain!r}")


# ---------------------------------------------------------------------------
# the bisection engine
# ---------------------------------------------------------------------------


def _point_violates(prob: SignProblem, x: float, claim: int) -> bool:
    try:
        enc = prob.iv_eval(Interval(x, x))
    except Exception:
        return False
    if prob.strict and prob.identically_zero:
        return enc.hi <= 0 if claim > 0 else enc.lo >= 0
    return enc.hi < 0 if claim > 0 else enc.lo > 0


def prove_sign(
    prob: SignProblem,
    claim: int,
    window: tuple,
    config: Optional[CertifyConfig] = None,
) -> Certificate:
    """Adaptive bisection over a compact window; guards are not consulted."""
    config = config or CertifyConfig()
    config.validate()
    lo, hi = window
    if not (0 < lo < hi):
        raise ConfigError(f"empty or invalid window [{lo}, {hi}]")
    cert = Certificate(
        status=CertStatus.INCONCLUSIVE,
        window=(lo, hi),
        precision_used=config.precision,
        mode="certified",
    )
    if prob.identically_zero:
        mid = 0.5 * (lo + hi)
        if prob.strict:
            cert.status = CertStatus.FALSIFIED
            cert.witness = mid
            cert.min_margin = 0.0
            cert.notes.append("identically zero; strict claim fails everywhere")
        else:
            cert.status = CertStatus.PROVED
            cert.min_margin = 0.0
            cert.notes.append("identically zero; non-strict claim holds with equality")
        return cert
    ok_lo = (lambda e: e.lo > 0) if prob.strict else (lambda e: e.lo >= 0)
    ok_hi = (lambda e: e.hi < 0) if prob.strict else (lambda e: e.hi <= 0)
    stack = [(lo, hi, 0)]
    n_accepted = 0
    margin = math.inf
    undecided = 0
    while stack:
        a, b, depth = stack.pop()
        enc = prob.iv_eval(Interval(a, b))
        if claim > 0 and ok_lo(enc):
            n_accepted += 1
            margin = min(margin, enc.lo)
            continue
        if claim < 0 and ok_hi(enc):
            n_accepted += 1
            margin = min(margin, -enc.hi)
            continue
        limit = depth >= config.max_depth or (b - a) <= config.min_width
        if (claim > 0 and enc.hi < 0) or (claim < 0 and enc.lo > 0) or limit:
            mid = 0.5 * (a + b)
            if _point_violates(prob, mid, claim):
                cert.status = CertStatus.FALSIFIED
                cert.witness = mid
                cert.subintervals = n_accepted
                cert.min_margin = 0.0
                return cert
            if limit:
                undecided += 1
                continue
        mid = 0.5 * (a + b)
        stack.append((mid, b, depth + 1))
        stack.append((a, mid, depth + 1))
    cert.subintervals = n_accepted
    cert.min_margin = margin if n_accepted else 0.0
    cert.status = CertStatus.INCONCLUSIVE if undecided else CertStatus.PROVED
    if undecided:
        cert.notes.append(f"{undecided} subinterval(s) undecided at max depth")
    return cert


def _hunt_far_witness(prob: SignProblem, claim: int) -> Optional[float]:
    if prob.family == "trig":
        probes = _TRIG_PROBE
    else:
        # decade probes catch failures whose crossover is exponentially far out
        probes = _HYP_PROBE + [10.0**j for j in range(3, 301, 25)]
    for x in probes:
        if _point_violates(prob, x, claim):
            return x
    return None


def certify_sign(
    prob: SignProblem,
    claim: int,
    config: Optional[CertifyConfig] = None,
) -> Certificate:
    """Full-domain certification: origin guard + window bisection + far guard."""
    config = config or CertifyConfig()
    config.validate()
    guards = {"origin": GuardReport(), "far_end": GuardReport()}

    if prob.identically_zero:
        cert = prove_sign(prob, claim, (config.window_lo, config.window_lo * 2 + 1e-9), config)
        cert.window = (0.0, math.inf if prob.family == "hyp" else PI_HALF_LO)
        for g in guards.values():
            g.status = "pass" if cert.proved else "unused"
            g.justification = "identically zero"
        cert.guards = guards
        return cert

    origin = guard_origin(prob, claim, min(config.window_lo, SWITCH_RADIUS))
    guards["origin"] = origin
    if origin.witness is not None and _point_violates(prob, origin.witness, claim):
        return Certificate(
            CertStatus.FALSIFIED,
            (config.window_lo, config.window_hi or math.nan),
            guards,
            witness=origin.witness,
            precision_used=config.precision,
            notes=["falsified by the origin series"],
        )

    far = prob.far_guard(claim, config)
    guards["far_end"] = far

    default_hi = (PI_HALF_LO - 1e-3) if prob.family == "trig" else 50.0
    hi = config.window_hi
    if hi is None:
        hi = far.cutoff if (far.status == "pass" and far.cutoff) else default_hi
    cert = prove_sign(prob, claim, (config.window_lo, hi), config)
    cert.guards = guards
    if cert.status is CertStatus.FALSIFIED:
        return cert
    if far.status == "fail":
        w = _hunt_far_witness(prob, claim)
        if w is not None:
            cert.status = CertStatus.FALSIFIED
            cert.witness = w
            cert.notes.append("falsified near the far end")
            return cert
    if cert.status is CertStatus.PROVED and origin.status == "pass" and far.status == "pass":
        if "non-strict" in far.justification or "non-strict" in origin.justification:
            cert.min_margin = 0.0
            cert.notes.append("boundary parameter: non-strict at an endpoint")
        return cert
    if cert.status is CertStatus.PROVED:
        cert.status = CertStatus.INCONCLUSIVE
        cert.notes.append("window certified but a guard did not pass")
    return cert


# ---------------------------------------------------------------------------
# sampled verification
# ---------------------------------------------------------------------------


def sample_grid(lo: float, hi: float, n: int, endpoint: Optional[float] = None) -> np.ndarray:
    """Uniform core plus geometric tails toward both open endpoints.

    `endpoint` is the open domain end beyond the window (pi/2 for the trig
    family, +inf for the hyperbolic one); tail points approach it without
    ever sampling it, which is what resolves failures that live in a
    shrinking neighborhood of the endpoint.
    """
    core = np.linspace(lo, hi, n)
    span = hi - lo
    tails_lo = lo * np.array([10.0**-j for j in range(1, 10)])
    tails_hi = hi - span * np.array([10.0**-j for j in range(1, 13)])
    parts = [tails_lo, core, tails_hi]
    if endpoint is not None and math.isfinite(endpoint) and endpoint > hi:
        parts.append(endpoint - np.array([10.0**-j for j in range(3, 15)]))
    elif endpoint is not None and math.isinf(endpoint):
        parts.append(np.minimum(hi * np.array([2.0, 4.0, 8.0, 16.0]), 600.0))
    return np.unique(np.concatenate(parts))


def sample_sign(
    prob: SignProblem,
    claim: int,
    config: Optional[CertifyConfig] = None,
) -> Certificate:
    """Dense-grid check plus the origin-series sign; violations are only
    counted once their own interval enclosure confirms them."""
    config = config or CertifyConfig()
    config.validate()
    if prob.family == "trig":
        hi = config.window_hi or (PI_HALF_LO - 1e-3)
    else:
        far = prob.far_guard(claim, config)
        hi = config.window_hi or (far.cutoff if far.status == "pass" and far.cutoff else 50.0)
    lo = config.window_lo
    cert = Certificate(
        status=CertStatus.INCONCLUSIVE,
        window=(lo, hi),
        precision_used=config.precision + "+grid",
        mode="sampled",
    )
    if prob.identically_zero:
        if prob.strict:
            cert.status = CertStatus.FALSIFIED
            cert.witness = 0.1
            cert.notes.append("identically zero; strict claim fails everywhere")
        else:
            cert.status = CertStatus.PROVED
            cert.notes.append("identically zero; non-strict claim holds with equality")
        cert.min_margin = 0.0
        return cert

    status, order, wy = _series_sign_outcome(prob.series, claim, F(1, 64))
    if status == "falsified":
        w = math.sqrt(float(wy))
        if _point_violates(prob, w, claim):
            cert.status = CertStatus.FALSIFIED
            cert.witness = w
            cert.notes.append("origin series certifies the opposite sign")
            return cert
    origin_ok = status == "pass" or (status == "zero" and not prob.strict)
    cert.guards["origin"] = GuardReport("pass" if origin_ok else "fail",
                                        f"origin series sign check ({status})")

    endpoint = PI_HALF_LO if prob.family == "trig" else math.inf
    xs = sample_grid(lo, hi, config.sample_points, endpoint=endpoint)
    vals = prob.point_eval(xs)
    bad = (vals <= 0) if (claim > 0 and prob.strict) else (vals < 0) if claim > 0 else (vals >= 0)
    noise = 1e-13
    suspicious = np.flatnonzero(bad & (np.abs(vals) > noise))
    for idx in suspicious[:32]:
        x = float(xs[idx])
        if _point_violates(prob, x, claim):
            cert.status = CertStatus.FALSIFIED
            cert.witness = x
            cert.min_margin = 0.0
            return cert
    if suspicious.size:
        cert.notes.append("grid violations found but none interval-confirmed")
        return cert
    n_noise = int(bad.sum())
    if n_noise:
        cert.notes.append(f"{n_noise} grid point(s) inside the noise band; logged, not counted")
    if not origin_ok:
        cert.notes.append("origin series sign unresolved")
        return cert
    cert.status = CertStatus.PROVED
    cert.subintervals = len(xs)
    finite = np.abs(vals[np.isfinite(vals)])
    cert.min_margin = float(finite.min()) if finite.size else 0.0
    return cert


# ---------------------------------------------------------------------------
# statement-level dispatch
# ---------------------------------------------------------------------------


def _verify_chain(spec: StatementSpec, params: Params, mode: str, config: CertifyConfig) -> Certificate:
    links = chain_links(spec.chain, params)
    reports = []
    worst: Optional[Certificate] = None
    margin = math.inf
    witness = None
    status = CertStatus.PROVED
    for name, prob in links:
        sub = (certify_sign if mode == "certified" else sample_sign)(prob, +1, config)
        reports.append(
            {
                "link": name,
                "status": sub.status.value,
                "witness": sub.witness,
                "min_margin": None if math.isinf(sub.min_margin) else sub.min_margin,
            }
        )
        margin = min(margin, sub.min_margin)
        if sub.status is CertStatus.FALSIFIED and status is not CertStatus.FALSIFIED:
            status = CertStatus.FALSIFIED
            witness = sub.witness
            worst = sub
        elif sub.status is CertStatus.INCONCLUSIVE and status is CertStatus.PROVED:
            status = CertStatus.INCONCLUSIVE
            worst = sub
    cert = Certificate(
        status=status,
        window=(config.window_lo, config.window_hi or math.nan),
        witness=witness,
        min_margin=margin,
        precision_used=config.precision,
        mode=mode,
        links=reports,
    )
    if worst is not None:
        cert.guards = worst.guards
        cert.notes.extend(worst.notes)
    return cert


def _verify_mean_lower(spec: StatementSpec, params: Params, mode: str, config: CertifyConfig) -> Certificate:
    alpha = params.p_exact
    k_pin = spec.pinned_k
    if alpha == 0:
        prob = log_combo_problem(F(2), F(1), spec.family, "cube_root_bound")
        claim = +1
        note = "exponent 0: reduces to the cube-root bound (2 ln s + ln t > 0)"
    else:
        prob = wilker_problem(spec.family, Params(k_pin, -alpha))
        claim = +1 if alpha < 0 else -1
        note = (
            f"lower mean bound at exponent {params.p:g} reduces to the "
            f"{'positive' if claim > 0 else 'negative'} sign of the two-term functional at p = {-params.p:g}"
        )
    cert = (certify_sign if mode == "certified" else sample_sign)(prob, claim, config)
    cert.notes.append(note)
    return cert


def statement_problems(spec: StatementSpec, params: Params) -> list:
    """(name, SignProblem, claim) triples whose conjunction is the statement."""
    if spec.kind == "sign":
        return [(spec.id.value, wilker_problem(spec.family, params), spec.claim)]
    if spec.kind == "chain":
        return [(name, prob, +1) for name, prob in chain_links(spec.chain, params)]
    if spec.kind == "mean_lower":
        alpha = params.p_exact
        if alpha == 0:
            return [("cube_root_bound", log_combo_problem(F(2), F(1), spec.family, "cube_root_bound"), +1)]
        prob = wilker_problem(spec.family, Params(spec.pinned_k, -alpha))
        return [(spec.id.value, prob, +1 if alpha < 0 else -1)]
    raise ConfigError(f"unknown statement kind {spec.kind!r}")


def verify_statement(stmt, params: Params, mode: str = "certified",
                     config: Optional[CertifyConfig] = None) -> Certificate:
    """Verify a registered statement at given parameters.

    mode 'certified' runs guards plus interval bisection; 'sampled' runs the
    dense-grid check.  Falsified results are sound in both modes (the witness
    is always interval-confirmed); a sampled Proved is a no-counterexample
    report, not a proof, and says so in `mode`.
    """
    spec = get_statement(stmt)
    spec.validate(params)
    config = config or CertifyConfig()
    if mode not in ("certified", "sampled"):
        raise ConfigError(f"unknown mode {mode!r}")
    if spec.kind == "sign":
        prob = wilker_problem(spec.family, params)
        runner = certify_sign if mode == "certified" else sample_sign
        cert = runner(prob, spec.claim, config)
    elif spec.kind == "chain":
        cert = _verify_chain(spec, params, mode, config)
    elif spec.kind == "mean_lower":
        cert = _verify_mean_lower(spec, params, mode, config)
    else:
        raise ConfigError(f"unknown statement kind {spec.kind!r}")
    cert.statement = spec.id.value
    cert.params = (params.k, params.p)
    expected = spec.expected_holds(params)
    if expected is not None:
        cert.notes.append(
            "stated parameter region %s (k, p)" % ("contains" if expected else "excludes")
        )
    return cert
