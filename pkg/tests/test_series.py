"""Series machinery: exact coefficients, sound tails."""

from fractions import Fraction as F

import mpmath
import pytest

from wilkercert.interval import Interval
from wilkercert import series as S

from conftest import mpf_to_fraction


def _contains(sb, y, ref):
    """Exact-rational containment of an mpmath reference at a point."""
    yq = F(y)
    lo, hi = sb.eval_frac(yq, yq)
    rq = mpf_to_fraction(ref)
    # the mpf reference itself carries ~1e-38 rounding at dps 40
    slack = abs(rq) * F(1, 10**38) + F(1, 10**60)
    return lo - slack <= rq <= hi + slack


def test_zeta_table_matches_mpmath():
    mpmath.mp.dps = 50
    for m, q in S.ZETA_OVER_PI.items():
        ref = mpmath.zeta(2 * m) / mpmath.pi ** (2 * m)
        val = mpmath.mpf(q.numerator) / q.denominator
        assert abs(val - ref) < mpmath.mpf(10) ** -45, m


LOG_RATIO_REFS = {
    "lnsinc": lambda x: mpmath.log(mpmath.sin(x) / x),
    "lncos": lambda x: mpmath.log(mpmath.cos(x)),
    "lntanc": lambda x: mpmath.log(mpmath.tan(x) / x),
    "lnsinhc": lambda x: mpmath.log(mpmath.sinh(x) / x),
    "lncosh": lambda x: mpmath.log(mpmath.cosh(x)),
    "lntanhc": lambda x: mpmath.log(mpmath.tanh(x) / x),
}


@pytest.mark.parametrize("kind", sorted(LOG_RATIO_REFS))
def test_log_ratio_series_contains_truth(kind):
    mpmath.mp.dps = 40
    sb = S.log_ratio_series(kind)
    for xf in (0.01, 0.05, 0.1, 0.2, 0.25):
        ref = LOG_RATIO_REFS[kind](mpmath.mpf(xf))     # mpf(float) is exact
        assert _contains(sb, F(xf) ** 2, ref), (kind, xf)


@pytest.mark.parametrize("kind", ["sin", "cos", "sinh", "cosh"])
def test_entire_series_contains_truth(kind):
    mpmath.mp.dps = 40
    sb = S.entire_series(kind)
    fn = {"sin": mpmath.sin, "cos": mpmath.cos, "sinh": mpmath.sinh, "cosh": mpmath.cosh}[kind]
    for xf in (1e-4, 0.03, 0.125, 0.25):
        assert _contains(sb, F(xf), fn(mpmath.mpf(xf))), (kind, xf)


def test_abc_series_leading_coefficients():
    abc = S.abc_series()
    efg = S.efg_series()
    # the products vanish to ninth order with these exact leading terms
    assert abc["A"].coeffs[:9] == (F(0),) * 9 and abc["A"].coeffs[9] == F(2, 27)
    assert abc["B"].coeffs[9] == F(4, 27)
    assert abc["C"].coeffs[9] == F(8, 45)
    assert efg["E"].coeffs[9] == F(-2, 27)
    assert efg["F"].coeffs[9] == F(-4, 27)
    assert efg["G"].coeffs[9] == F(-8, 45)


def test_ratio_series_limits():
    for k in (1, 2, F(3, 2)):
        num, den = S.ratio_series("trig", k)
        assert num.coeffs[0] / den.coeffs[0] == F(12, 1) / (5 * (F(k) + 2))
        num, den = S.ratio_series("hyp", k)
        assert num.coeffs[0] / den.coeffs[0] == F(12, 1) / (5 * (F(k) + 2))


def test_weighted_power_series_shares_c4():
    # the x^4 coefficient (kp/36)(p + 12/(5(k+2))) is common to both families
    for k, p in ((F(2), F(1)), (F(1), F(-4, 5)), (F(-3), F(3)), (F(7, 2), F(-1, 3))):
        w = (F(2) / (k + 2), k * p, F(0)), (k / (k + 2), F(0), p)
        expected = k * p / 36 * (p + F(12) / (5 * (k + 2)))
        for fam in ("trig", "hyp"):
            sb = S.weighted_power_series(w, fam)
            assert sb.coeffs[0] == 0 and sb.coeffs[1] == 0
            assert sb.coeffs[2] == expected, (k, p, fam)


def test_exp_m1_containment():
    mpmath.mp.dps = 40
    base = S.log_ratio_series("lntanc")
    em1 = base.scaled(F(3, 7)).exp_m1()
    for xf in (0.05, 0.2, 0.25):
        x = mpmath.mpf(xf)
        ref = mpmath.exp(mpmath.mpf(3) / 7 * mpmath.log(mpmath.tan(x) / x)) - 1
        assert _contains(em1, F(xf) ** 2, ref), xf


def test_eval_interval_matches_eval_frac():
    sb = S.log_ratio_series("lnsinc")
    y = Interval(0.001, 0.002)
    iv = sb.eval_interval(y)
    lo, hi = sb.eval_frac(F(1, 1000), F(1, 500))
    assert iv.lo <= lo and hi <= iv.hi


def test_shift_down_requires_exact_zeros():
    sb = S.log_ratio_series("lnsinc")
    assert sb.shift_down(1).coeffs[0] == F(-1, 6)
    with pytest.raises(ValueError):
        sb.shift_down(2)   # c_1 = -1/6 != 0
