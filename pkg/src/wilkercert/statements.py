"""Registry of every statement the tool can verify.

Each entry records what is actually checked (which functional, which claimed
sign, or which chain of links), the admissible k-range, pinned parameters for
the specialized propositions, and the closed-form parameter region in which
the statement is asserted to hold.  The region predicate reflects the source
material as stated; verification is always independent of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

from .errors import ParamsOutOfStatementRange
from .kernels import Params

LN_PI_OVER_2 = math.log(math.pi) - math.log(2)


def trig_threshold(k: float) -> float:
    """-(ln(k+2) - ln 2)/(k (ln pi - ln 2)), the sharp trig exponent."""
    return -(math.log(k + 2) - math.log(2)) / (k * LN_PI_OVER_2)


def series_threshold(k: float) -> float:
    """-12/(5(k+2)), the shared x^4-coefficient root (positive for k < -2)."""
    return -12.0 / (5.0 * (k + 2.0))


def series_threshold_exact(k: Fraction) -> Fraction:
    return Fraction(-12, 1) / (5 * (k + 2))


class StatementId(str, Enum):
    MAIN1 = "main1"
    MAIN2 = "main2"
    MAIN3 = "main3"
    MAIN4 = "main4"
    PT_K1 = "pt_k1"
    PT_K2 = "pt_k2"
    PT_K3 = "pt_k3"
    PT_K4 = "pt_k4"
    PH_K1 = "ph_k1"
    PH_K2 = "ph_k2"
    PH_KM3 = "ph_km3"
    PH_KM4 = "ph_km4"
    CHAIN_YANG3T = "chain_yang3t"
    CHAIN_YANG4T = "chain_yang4t"
    CHAIN_YANG3H = "chain_yang3h"
    COR_YANG1T = "cor_yang1t"
    COR_YANG2T = "cor_yang2t"
    COR_YANG1H = "cor_yang1h"
    COR_YANG2H = "cor_yang2h"
    COR_ZHWT = "cor_zhwt"
    COR_ZHWH = "cor_zhwh"
    SANITY_W = "sanity_w"
    SANITY_WU1 = "sanity_wu1"
    SANITY_H = "sanity_h"
    SANITY_NUEMAN = "sanity_nueman"


@dataclass(frozen=True)
class StatementSpec:
    id: StatementId
    kind: str                 # 'sign' | 'chain' | 'mean_lower'
    family: str               # 'trig' | 'hyp'
    claim: int                # +1: functional > 0, -1: functional < 0
    k_min: float = -math.inf  # admissible k-range (closed at k_min)
    k_max: float = math.inf
    pinned_k: Optional[Fraction] = None
    pinned_p: Optional[Fraction] = None
    chain: Optional[str] = None      # chain id for kind == 'chain'
    region: Optional[Callable[[float, float], bool]] = None
    description: str = ""

    def validate(self, params: Params) -> None:
        k = params.k
        if not (self.k_min <= k <= self.k_max):
            raise ParamsOutOfStatementRange(
                f"{self.id.value} requires k in [{self.k_min}, {self.k_max}], got k = {k}"
            )
        if self.pinned_k is not None and params.k_exact != self.pinned_k:
            raise ParamsOutOfStatementRange(
                f"{self.id.value} is stated for k = {self.pinned_k}, got k = {k}"
            )
        if self.pinned_p is not None and params.p_exact != self.pinned_p:
            raise ParamsOutOfStatementRange(
                f"{self.id.value} is stated for p = {self.pinned_p}, got p = {params.p}"
            )

    def expected_holds(self, params: Params) -> Optional[bool]:
        if self.region is None:
            return None
        return self.region(params.k, params.p)


def _r_main1(k, p):
    return p > 0 or p <= trig_threshold(k)


def _r_main2(k, p):
    return series_threshold(k) <= p < 0


def _r_main3(k, p):
    return p > 0 or p <= series_threshold(k)


def _r_main4(k, p):
    return p < 0 or p >= series_threshold(k)


def _r_chain_t(k, p):
    return k >= 2 and p >= -trig_threshold(k)


def _r_chain_h(k, p):
    return k >= 2 and p >= -series_threshold(k)


def _r_true(k, p):
    return True


_S = StatementSpec
_F4_5 = Fraction(4, 5)
_F3_5 = Fraction(3, 5)

STATEMENTS: dict[StatementId, StatementSpec] = {}


def _add(spec: StatementSpec) -> None:
    STATEMENTS[spec.id] = spec


_add(_S(StatementId.MAIN1, "sign", "trig", +1, k_min=1, region=_r_main1,
        description="two-term trig power combination exceeds one on (0, pi/2)"))
_add(_S(StatementId.MAIN2, "sign", "trig", -1, k_min=1, region=_r_main2,
        description="reverse of the trig combination on (0, pi/2)"))
_add(_S(StatementId.MAIN3, "sign", "hyp", +1, k_min=1, region=_r_main3,
        description="hyperbolic combination exceeds one on (0, inf)"))
_add(_S(StatementId.MAIN4, "sign", "hyp", -1, k_max=-2, region=_r_main4,
        description="reverse hyperbolic combination on (0, inf), k < -2"))

for _i, _sid in enumerate(
    (StatementId.PT_K1, StatementId.PT_K2, StatementId.PT_K3, StatementId.PT_K4), start=1
):
    _add(_S(_sid, "sign", "trig", +1, k_min=1, pinned_k=Fraction(_i), region=_r_main1,
            description=f"trig combination at k = {_i}"))

_add(_S(StatementId.PH_K1, "sign", "hyp", +1, k_min=1, pinned_k=Fraction(1), region=_r_main3))
_add(_S(StatementId.PH_K2, "sign", "hyp", +1, k_min=1, pinned_k=Fraction(2), region=_r_main3))
_add(_S(StatementId.PH_KM3, "sign", "hyp", -1, k_max=-2, pinned_k=Fraction(-3), region=_r_main4))
_add(_S(StatementId.PH_KM4, "sign", "hyp", -1, k_max=-2, pinned_k=Fraction(-4), region=_r_main4))

_add(_S(StatementId.CHAIN_YANG3T, "chain", "trig", +1, k_min=1, chain="yang3t", region=_r_chain_t,
        description="three-link trig chain with swapped weights"))
_add(_S(StatementId.CHAIN_YANG4T, "chain", "trig", +1, k_min=1, chain="yang4t", region=_r_chain_t))
_add(_S(StatementId.CHAIN_YANG3H, "chain", "hyp", +1, k_min=1, chain="yang3h", region=_r_chain_h))

_add(_S(StatementId.COR_ZHWT, "chain", "trig", +1, k_min=1, pinned_k=Fraction(2), chain="yang3t",
        region=_r_chain_t, description="k = 2 trig chain (the classical power form)"))
_add(_S(StatementId.COR_ZHWH, "chain", "hyp", +1, k_min=1, pinned_k=Fraction(2), chain="yang3h",
        region=_r_chain_h, description="k = 2 hyperbolic chain"))

# Mean corollaries: verified on their lower-bound side at exponent p.  The
# upper-bound side at exponent b is the k-matching 'sign' statement at -b and
# is available through means.bound_check as well.
_add(_S(StatementId.COR_YANG1T, "mean_lower", "trig", +1, pinned_k=Fraction(1),
        region=lambda k, p: p <= 4 / 5,
        description="weighted power mean of 1 and cos x below sin x/x"))
_add(_S(StatementId.COR_YANG2T, "mean_lower", "trig", +1, pinned_k=Fraction(2),
        region=lambda k, p: p <= 3 / 5,
        description="quadratic-form mean of cos x below sin x/x"))
_add(_S(StatementId.COR_YANG1H, "mean_lower", "hyp", +1, pinned_k=Fraction(1),
        region=lambda k, p: p <= 0,
        description="weighted power mean of 1 and cosh x below sinh x/x"))
_add(_S(StatementId.COR_YANG2H, "mean_lower", "hyp", +1, pinned_k=Fraction(2),
        region=lambda k, p: p <= 0,
        description="quadratic-form mean of cosh x below sinh x/x"))

_add(_S(StatementId.SANITY_W, "sign", "trig", +1, k_min=1,
        pinned_k=Fraction(2), pinned_p=Fraction(1), region=_r_true,
        description="the original quadratic trig inequality"))
_add(_S(StatementId.SANITY_WU1, "sign", "trig", +1, k_min=1,
        pinned_k=Fraction(2), pinned_p=Fraction(-1), region=_r_true,
        description="the reciprocal quadratic trig inequality"))
_add(_S(StatementId.SANITY_H, "sign", "trig", +1, k_min=1,
        pinned_k=Fraction(1), pinned_p=Fraction(1), region=_r_true,
        description="the 2:1 linear trig inequality"))
_add(_S(StatementId.SANITY_NUEMAN, "chain", "trig", +1, k_min=1,
        pinned_k=Fraction(1), pinned_p=Fraction(1), chain="nueman", region=_r_true,
        description="refined 2:1 chain through the reciprocal form"))


def get_statement(ident) -> StatementSpec:
    if isinstance(ident, StatementSpec):
        return ident
    if isinstance(ident, StatementId):
        return STATEMENTS[ident]
    key = str(ident).strip().lower().replace("-", "_")
    try:
        return STATEMENTS[StatementId(key)]
    except ValueError:
        raise ParamsOutOfStatementRange(f"unknown statement id {ident!r}") from None
