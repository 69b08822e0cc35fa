"""Rank-one local systems: transport along geodesic galleries and the skein operator.

Crossing hyperplane ``H_i`` in the positive direction multiplies the fiber
by ``q_i``; the local monodromy around ``H_i`` is then ``q_i^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .faces import separating_set
from .geometry import SignVector
from .laurent import LaurentPoly, ZeroWeightError


def transport_plus(C: SignVector, D: SignVector) -> LaurentPoly:
    """Monomial ``prod_{i in sep(C, D)} q_i`` carried by the positive geodesic class."""
    n = len(C)
    sep = separating_set(C, D)
    return LaurentPoly.monomial(n, [int(i in sep) for i in range(1, n + 1)])


def transport_minus(C: SignVector, D: SignVector) -> LaurentPoly:
    return transport_plus(C, D).inverse()


def skein(C: SignVector, D: SignVector) -> LaurentPoly:
    """``q_S - q_S^-1`` for the separating set ``S`` of ``C`` and ``D``."""
    return transport_plus(C, D) - transport_minus(C, D)


@dataclass(frozen=True)
class RankOneSystem:
    """Weights ``q_1..q_n``; ``values`` is None for the symbolic system."""

    n: int
    values: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.values is not None:
            vals = tuple(Fraction(v) for v in self.values)
            if len(vals) != self.n:
                raise ValueError(f"expected {self.n} weights, got {len(vals)}")
            if any(v == 0 for v in vals):
                raise ZeroWeightError("weights must be nonzero")
            object.__setattr__(self, "values", vals)

    @property
    def is_symbolic(self) -> bool:
        return self.values is None

    def monodromy(self, i: int) -> LaurentPoly:
        q = LaurentPoly.variable(self.n, i)
        return q * q


def evaluate(elem: LaurentPoly, assignment: Sequence) -> Fraction:
    return elem.evaluate(assignment)
