"""Exact slope arithmetic and canonical continued fractions.

A slope is a reduced rational p/q in Q union {1/0}; it names an isotopy
class of simple closed curve on the framed 4-punctured sphere.  All
arithmetic here is exact integer arithmetic: the continued-fraction length
k feeds the volume and spectral bounds, and a certificate must not inherit
rounding error from combinatorics.

The canonical continued fraction of a slope 0 < p < q is the unique
positive expansion

    p/q = 1 / (a1 + 1 / (a2 + ... + 1 / ak))

with every a_i >= 1 and a_k >= 2 (positive expansions come in pairs
[..., a] and [..., a-1, 1]; requiring a_k >= 2 picks one of them).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NonHyperbolicSlope, ZeroOverZero

__all__ = [
    "Slope",
    "ContinuedFraction",
    "reduce_slope",
    "canonical_coil_slope",
    "cfrac_expand",
    "cfrac_eval",
    "mirror_slope",
]

INFINITY_NUMERATOR = 1


@dataclass(frozen=True, order=False)
class Slope:
    """A reduced rational p/q with q >= 0; q == 0 encodes the slope 1/0."""

    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise ZeroOverZero("0/0 is not a slope")
        if self.q < 0:
            raise ValueError("denominator must be normalized non-negative")
        if self.q == 0 and self.p != INFINITY_NUMERATOR:
            raise ValueError("the infinite slope must be written 1/0")
        if gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'p/q' (also accepts a bare integer and 'inf')."""
        text = text.strip()
        if text in ("inf", "infinity", "1/0"):
            return cls(1, 0)
        if "/" in text:
            num, _, den = text.partition("/")
            return reduce_slope(int(num), int(den))
        return reduce_slope(int(text), 1)


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical positive expansion; ``len(terms)`` is the length k."""

    terms: tuple[int, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("continued fraction needs at least one term")
        if any(a < 1 for a in self.terms):
            raise ValueError("terms must be positive")
        if len(self.terms) > 1 and self.terms[-1] < 2:
            raise ValueError("canonical form requires final term >= 2")

    @property
    def length(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.terms) + "]"

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        body = text.strip().removeprefix("[").removesuffix("]")
        return cls(tuple(int(a) for a in body.split(",")))


def reduce_slope(numerator: int, denominator: int) -> Slope:
    """Reduce and sign-normalize a rational so the denominator is >= 0."""
    if numerator == 0 and denominator == 0:
        raise ZeroOverZero("0/0 is not a slope")
    if denominator == 0:
        return Slope(INFINITY_NUMERATOR, 0)
    if denominator < 0:
        numerator, denominator = -numerator, -denominator
    g = gcd(abs(numerator), denominator)
    return Slope(numerator // g, denominator // g)


def canonical_coil_slope(s: Slope) -> Slope:
    """The representative of s mod 1 with 0 < p < q.

    Adding an integer to a slope moves the curve by full Dehn twists about
    the slope-1/0 curve, which is an isotopy of the associated link that
    preserves the projection plane; so every slope class not equal to 0 or
    infinity has a unique representative with 0 < p < q.  The classes 0 and
    infinity do not give hyperbolic links and are rejected.
    """
    if s.is_infinite or s.q == 1:
        raise NonHyperbolicSlope(f"slope {s} is in the class of 0 or infinity")
    return Slope(s.p % s.q, s.q)


def cfrac_expand(s: Slope) -> ContinuedFraction:
    """Canonical expansion of a slope with 0 < p < q.

    Runs the Euclidean algorithm on q/p; the floor-quotient sequence always
    ends with a term >= 2, which is exactly the canonical form.
    """
    if s.is_infinite or not 0 < s.p < s.q:
        raise ValueError(f"cfrac_expand needs 0 < p < q, got {s}")
    terms = []
    num, den = s.q, s.p
    while den:
        a, r = divmod(num, den)
        terms.append(a)
        num, den = den, r
    return ContinuedFraction(tuple(terms))


def cfrac_eval(c: ContinuedFraction) -> Slope:
    """Exact value of 1/(a1 + 1/(a2 + ... + 1/ak)), a slope in (0, 1)."""
    num, den = c.terms[-1], 1
    for a in reversed(c.terms[:-1]):
        num, den = a * num + den, num
    return Slope(den, num)


def mirror_slope(s: Slope) -> Slope:
    """(q-p)/q, the canonical representative of -p/q.

    Viewing the projection plane from the other side carries the curve of
    slope p/q to the curve of slope -p/q, whose canonical class is 1 - p/q.
    """
    if s.is_infinite or not 0 < s.p < s.q:
        raise ValueError(f"mirror_slope needs 0 < p < q, got {s}")
    return Slope(s.q - s.p, s.q)
