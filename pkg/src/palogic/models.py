"""The two numeric built-in models.

Model "two": the two-element chain {0, 1} with 0*0 = 0*1 = 0, 1*1 = 1 and
i swapping the bounds.  Model "real": the closed real interval [0, 1] with
the ordinary numerical product and i(p) = 1 - p.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

from .algebra import ProbabilityAlgebra
from .chains import FiniteChainModel, chain_model

Real = Union[float, Fraction]


def two_element_model() -> FiniteChainModel:
    return chain_model(2, [[0, 0], [0, 1]])


class RealIntervalModel(ProbabilityAlgebra):
    """Reals in [0, 1] under multiplication, with i(p) = 1 - p.

    Equality comparisons absorb rounding of composite expressions via
    `tolerance`; the order itself is the exact numeric order.  Values may
    be floats or Fractions (exact arithmetic works unchanged).
    """

    name = "real"

    def __init__(self, tolerance: float = 1e-12):
        if tolerance < 0:
            raise ValueError("tolerance must be >= 0")
        self.tolerance = tolerance

    @property
    def zero(self) -> Real:
        return 0.0

    @property
    def one(self) -> Real:
        return 1.0

    def le(self, p: Real, q: Real) -> bool:
        return p <= q or self.eq(p, q)

    def h(self, p: Real, q: Real) -> Real:
        return p * q

    def i(self, p: Real) -> Real:
        return 1 - p

    def eq(self, p: Real, q: Real) -> bool:
        return abs(p - q) <= self.tolerance

    def sample(self, rng) -> float:
        # endpoints get explicit mass so bound-sensitive laws are exercised
        u = rng.random()
        if u < 0.02:
            return 0.0
        if u < 0.04:
            return 1.0
        return rng.random()

    def divide(self, q: Real, p: Real) -> Optional[Real]:
        """r with p * r = q for q <= p (exact on the nose for q = p = 0)."""
        if p == 0:
            return self.one if q == 0 else None
        r = q / p
        if 0 <= r <= 1:
            return r
        return None

    def parse_value(self, text: str) -> Real:
        if "/" in text:
            return Fraction(text)
        return float(text)

    def format_value(self, p: Real) -> str:
        if isinstance(p, Fraction):
            return str(p)
        return repr(p)
