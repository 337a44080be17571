"""Explicit volume and spectral-gap estimates for double coil knots.

Every number produced here is a certified bound, never a computed
geometric quantity.  The chain of estimates:

* the 3-component parent link of slope p/q (continued-fraction length k)
  is hyperbolic with  4*k*v3 - 1.3536 <= vol <= 4*k*v8;
* filling the two crossing circles with 1/n1, 1/n2 keeps hyperbolicity
  whenever each |n_i| >= 4 or each k*|n_i| >= 80, because then each
  filling slope is longer than 2*pi; the volume then drops by at most the
  factor (1 - 4*pi^2/ell)^(3/2) with ell from the two slope-length
  estimates;
* lambda_1 of any finite-volume hyperbolic 3-manifold is at least
  (pi^2/2^50)/vol^2 and, via the Cheeger constant and a Heegaard surface
  of genus g, at most 32*pi*(g-1)/vol + 640*pi^2*(g-1)^2/vol^2; double
  coil complements have Heegaard genus at most 3, and plugging in the
  figure-8 volume floor 2*v3 packages the upper bound as 12650/vol.

Intervals substitute the volume *bound* endpoints for the unknown true
volume (lower uses the volume upper bound, upper uses the volume lower
bound); both substituted functions are decreasing in vol, so the interval
remains valid.  Method tags record the provenance of every number.

Thresholds on integers (|n| >= 4, k|n| >= 80, the >12 disk obstruction)
are decided in exact integer arithmetic; only the bound values themselves
are floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import (
    NoHyperbolicityCertificate,
    SlopeTooShort,
    VolumeBelowFloor,
)
from .generators import CoilSpec
from .slopes import Slope, canonical_coil_slope, cfrac_expand

__all__ = [
    "Constants",
    "CONSTANTS",
    "VolumeInterval",
    "SpectralInterval",
    "Condition",
    "HyperbolicityCertificate",
    "parent_volume_interval",
    "ell_param",
    "dehn_filling_factor",
    "slope_length_lower",
    "cusp_slope_length_lower",
    "coil_hyperbolicity_certificate",
    "coil_volume_interval",
    "lambda_lower",
    "cheeger_upper",
    "buser_upper",
    "lambda_upper",
    "coil_lambda_interval",
    "disk_obstruction_check",
    "bound_report",
]


@dataclass(frozen=True)
class Constants:
    """Fixed constants of the estimates, stored to full double precision.

    ``v3`` and ``v8`` are the volumes of the regular ideal tetrahedron and
    octahedron (v3 = 2*Lob(pi/6), v8 = 8*Lob(pi/4) = 4*Catalan); the usual
    4-digit renderings 1.0149 and 3.6638 are display truncations.
    """

    v3: float = 1.0149416064096536
    v8: float = 3.6638623767088760
    parent_deficit: float = 1.3536
    cusp_arc_coefficient: float = 4.0 * math.sqrt(6.0 * math.sqrt(2.0)) / 147.0
    ell_coefficient: float = 32.0 * math.sqrt(2.0) / 7203.0
    lambda_floor_numerator: float = math.pi**2 / 2**50  # A1
    lambda_ceiling_coefficient: float = 12650.0  # A2
    volume_floor: float = math.pi / 2**25

    @property
    def figure8_volume(self) -> float:
        return 2.0 * self.v3


CONSTANTS = Constants()

_TWO_PI = 2.0 * math.pi
_FOUR_PI_SQ = 4.0 * math.pi**2


@dataclass(frozen=True)
class VolumeInterval:
    lower: float
    upper: float
    strict_upper: bool = False
    methods: tuple[str, ...] = ()

    def __post_init__(self):
        if not (0.0 <= self.lower <= self.upper):
            raise ValueError(f"bad volume interval [{self.lower}, {self.upper}]")

    def intersects(self, other: "VolumeInterval") -> bool:
        return max(self.lower, other.lower) <= min(self.upper, other.upper)


@dataclass(frozen=True)
class SpectralInterval:
    lower: float
    upper: float
    methods: tuple[str, ...] = ()

    def __post_init__(self):
        if not (0.0 < self.lower <= self.upper):
            raise ValueError(f"bad spectral interval [{self.lower}, {self.upper}]")


class Condition(enum.Enum):
    TWISTS_AT_LEAST_4 = "TwistsAtLeast4"
    K_TIMES_N_AT_LEAST_80 = "KTimesNAtLeast80"
    BOTH = "Both"
    NONE = "None"


@dataclass(frozen=True)
class HyperbolicityCertificate:
    condition: Condition
    witnesses: dict = field(default_factory=dict)

    @property
    def satisfied(self) -> bool:
        return self.condition is not Condition.NONE


def parent_volume_interval(s: Slope) -> VolumeInterval:
    """Two-sided volume bounds for the 3-component parent link of slope s.

    The slope is brought to its canonical class 0 < p < q first; classes 0
    and infinity raise ``NonHyperbolicSlope``.
    """
    s = canonical_coil_slope(s)
    k = cfrac_expand(s).length
    c = CONSTANTS
    return VolumeInterval(
        lower=4.0 * k * c.v3 - c.parent_deficit,
        upper=4.0 * k * c.v8,
        strict_upper=False,
        methods=(f"parent-volume(k={k})",),
    )


def ell_param(k: int, n1: int, n2: int) -> float:
    """The slope-length-squared parameter: max of the two length estimates.

    With n = min(|n1|, |n2|) this is max(1/4 + 4n^2, 32*sqrt(2)*k^2*n^2/7203).
    The right-hand term generically takes over around k = 26; the maximum
    is always computed directly.
    """
    if n1 == 0 or n2 == 0:
        raise ValueError("full-twist counts must be non-zero")
    n = min(abs(n1), abs(n2))
    return max(0.25 + 4.0 * n * n, CONSTANTS.ell_coefficient * k * k * n * n)


def dehn_filling_factor(ell_min: float) -> float:
    """Volume decay factor (1 - (2*pi/ell_min)^2)^(3/2) for filling slopes
    of length at least ell_min > 2*pi."""
    if ell_min <= _TWO_PI:
        raise SlopeTooShort(f"slope length {ell_min} is not greater than 2*pi")
    return (1.0 - (_TWO_PI / ell_min) ** 2) ** 1.5


def slope_length_lower(n: int) -> float:
    """Length lower bound sqrt(1/4 + 4n^2) for the slope 1/n on a crossing
    circle cusp of the reflection-symmetric parent diagram."""
    return math.sqrt(0.25 + 4.0 * n * n)


def cusp_slope_length_lower(k: int, n: int) -> float:
    """Length lower bound (4*sqrt(6*sqrt(2))/147) * k * |n|, from the
    maximal-cusp area estimate of 2-bridge knots with k+1 twist regions."""
    return CONSTANTS.cusp_arc_coefficient * k * abs(n)


def coil_hyperbolicity_certificate(k: int, n1: int, n2: int) -> HyperbolicityCertificate:
    """Check the two integer conditions guaranteeing filling slopes longer
    than 2*pi: |n_i| >= 4 for both i, or k*|n_i| >= 80 for both i."""
    if n1 == 0 or n2 == 0:
        raise ValueError("full-twist counts must be non-zero")
    cond1 = abs(n1) >= 4 and abs(n2) >= 4
    cond2 = k * abs(n1) >= 80 and k * abs(n2) >= 80
    condition = {
        (True, True): Condition.BOTH,
        (True, False): Condition.TWISTS_AT_LEAST_4,
        (False, True): Condition.K_TIMES_N_AT_LEAST_80,
        (False, False): Condition.NONE,
    }[(cond1, cond2)]
    witnesses = {
        "k": k,
        "n1": n1,
        "n2": n2,
        "slope_length_lower": (slope_length_lower(n1), slope_length_lower(n2)),
        "cusp_slope_length_lower": (
            cusp_slope_length_lower(k, n1),
            cusp_slope_length_lower(k, n2),
        ),
    }
    return HyperbolicityCertificate(condition, witnesses)


def coil_volume_interval(spec: CoilSpec) -> VolumeInterval:
    """Certified volume interval for the (p, q, n1, n2) double coil knot.

    Raises ``NoHyperbolicityCertificate`` unless one of the two twist
    conditions holds; the estimates are conditional and this module never
    emits an uncertified interval.
    """
    k = cfrac_expand(spec.slope).length
    cert = coil_hyperbolicity_certificate(k, spec.n1, spec.n2)
    if not cert.satisfied:
        raise NoHyperbolicityCertificate(
            f"(p,q,n1,n2)=({spec.p},{spec.q},{spec.n1},{spec.n2}) with k={k}: "
            "neither |n_i|>=4 nor k|n_i|>=80 holds for both regions"
        )
    ell = ell_param(k, spec.n1, spec.n2)
    if ell <= _FOUR_PI_SQ:  # unreachable given a certificate
        raise SlopeTooShort(f"ell={ell} not greater than 4*pi^2")
    c = CONSTANTS
    factor = (1.0 - _FOUR_PI_SQ / ell) ** 1.5
    return VolumeInterval(
        lower=factor * (4.0 * k * c.v3 - c.parent_deficit),
        upper=4.0 * c.v8 * k,
        strict_upper=True,
        methods=(
            f"parent-volume(k={k})",
            f"dehn-filling-decay(ell={ell:.6g})",
            f"certificate:{cert.condition.value}",
        ),
    )


def lambda_lower(vol: float) -> float:
    """Spectral gap lower bound (pi^2/2^50)/vol^2, valid for any oriented
    finite-volume hyperbolic 3-manifold; such volumes exceed pi/2^25."""
    if vol <= CONSTANTS.volume_floor:
        raise VolumeBelowFloor(
            f"vol={vol} is not above the universal floor pi/2^25"
        )
    return CONSTANTS.lambda_floor_numerator / (vol * vol)


def cheeger_upper(g: int, vol: float) -> float:
    """Cheeger constant bound 8*pi*(g-1)/vol from a genus-g Heegaard surface."""
    if g < 1:
        raise ValueError("Heegaard genus must be at least 1")
    if vol <= 0:
        raise ValueError("volume must be positive")
    return 8.0 * math.pi * (g - 1) / vol

def buser_upper(h: float) -> float:
    """lambda_1 <= 4h + 10h^2 in terms of the Cheeger constant h."""
    if h < 0:
        raise ValueError("Cheeger constant must be non-negative")
    return 4.0 * h + 10.0 * h * h


def lambda_upper(g: int, vol: float) -> float:
    """lambda_1 <= 32*pi*(g-1)/vol + 640*pi^2*(g-1)^2/vol^2.

    Algebraically this is ``buser_upper(cheeger_upper(g, vol))``; it is
    written out so that the composition identity is a real cross-check.
    """
    if g < 1:
        raise ValueError("Heegaard genus must be at least 1")
    if vol <= 0:
        raise ValueError("volume must be positive")
    gm1 = g - 1
    return 32.0 * math.pi * gm1 / vol + 640.0 * math.pi**2 * gm1 * gm1 / (vol * vol)


def coil_lambda_interval(spec: CoilSpec) -> SpectralInterval:
    """Certified lambda_1 interval for a double coil knot.

    Uses A1 = pi^2/2^50 and A2 = 12650 with the Heegaard genus at most 3;
    the unknown true volume is replaced by the certified volume interval's
    endpoints (lower bound evaluated at the volume upper bound and vice
    versa, both substitutions sound by monotonicity).
    """
    vol = coil_volume_interval(spec)
    c = CONSTANTS
    return SpectralInterval(
        lower=lambda_lower(vol.upper),
        upper=c.lambda_ceiling_coefficient / vol.lower,
        methods=vol.methods
        + (
            "heegaard-genus<=3",
            "A1=pi^2/2^50",
            "A2=12650",
            "volume-endpoint-substitution",
        ),
    )


def disk_obstruction_check(n2: int) -> bool:
    """True when 1/n2 filling forces slope length above 12, defeating the
    punctured-disk case: sqrt(1/4 + 4*n2^2) > 12, i.e. |n2| >= 6.

    Decided in exact integers: 1 + 16*n2^2 > 576.
    """
    return 1 + 16 * n2 * n2 > 576


def bound_report(spec: CoilSpec) -> dict:
    """Complete JSON-ready report: certificate, volume, and lambda_1."""
    k = cfrac_expand(spec.slope).length
    cert = coil_hyperbolicity_certificate(k, spec.n1, spec.n2)
    vol = coil_volume_interval(spec)
    lam = coil_lambda_interval(spec)
    return {
        "spec": {"p": spec.p, "q": spec.q, "n1": spec.n1, "n2": spec.n2},
        "k": k,
        "ell": ell_param(k, spec.n1, spec.n2),
        "certificate": {
            "condition": cert.condition.value,
            "witnesses": {
                "slope_length_lower": list(cert.witnesses["slope_length_lower"]),
                "cusp_slope_length_lower": list(
                    cert.witnesses["cusp_slope_length_lower"]
                ),
            },
        },
        "volume": {
            "lower": vol.lower,
            "upper": vol.upper,
            "strictUpper": vol.strict_upper,
        },
        "lambda": {"lower": lam.lower, "upper": lam.upper},
        "methods": list(lam.methods),
    }
