"""Abstract probability algebras.

An algebra is a structure (P, <=, h, i, 0, 1): a partially ordered carrier
with a binary product ``h``, a unary negation map ``i``, and distinguished
bounds ``zero`` and ``one``.  Carriers may be finite (enumerable), sampled
(uncountable, checked statistically) or symbolic (order decided by an
inference closure).

Order comparisons are tri-state: ``le(p, q)`` returns True, False, or None,
where None means the pair is not known to be comparable.  Incomparability is
an answer, not an error.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Iterable, Optional

Element = Any
TriState = Optional[bool]


class ProbabilityAlgebra(ABC):
    """Interface shared by all carriers of belief values."""

    name: str = "algebra"

    @property
    @abstractmethod
    def zero(self) -> Element: ...

    @property
    @abstractmethod
    def one(self) -> Element: ...

    @abstractmethod
    def le(self, p: Element, q: Element) -> TriState:
        """Tri-state partial order: True / False / None (unknown)."""

    @abstractmethod
    def h(self, p: Element, q: Element) -> Element:
        """The product (total)."""

    @abstractmethod
    def i(self, p: Element) -> Element:
        """The negation map (total)."""

    def eq(self, p: Element, q: Element) -> bool:
        return p == q

    def lt(self, p: Element, q: Element) -> TriState:
        a = self.le(p, q)
        if a is None:
            return None
        return a and not self.eq(p, q)

    # -- optional capabilities -------------------------------------------

    def carrier(self) -> Iterable[Element]:
        """Deterministic enumeration of a finite carrier, rank order."""
        raise NotImplementedError(f"{self.name}: carrier is not enumerable")

    @property
    def is_finite(self) -> bool:
        try:
            self.carrier()
        except NotImplementedError:
            return False
        return True

    def sample(self, rng) -> Element:
        """Pseudo-random element; required for sampled law checks."""
        raise NotImplementedError(f"{self.name}: no sampler")

    # -- value I/O (KB files, CLI) ---------------------------------------

    def parse_value(self, text: str) -> Element:
        raise NotImplementedError(f"{self.name}: no value syntax")

    def format_value(self, p: Element) -> str:
        return str(p)
