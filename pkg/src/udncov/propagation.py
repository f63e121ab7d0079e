"""Pathloss and distance-dependent LOS probability models.

Links attenuate as (r^2 + h^2)^(-alpha/2) where r is the horizontal distance
and h the BS elevation above the user plane.  Whether a link uses the LOS or
NLOS exponent is decided by a LOS probability model: random roadside
buildings of fixed height, a sharp critical-distance step, or a constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError


@dataclass(frozen=True)
class PathlossParams:
    """Dual-slope pathloss exponents and BS height (meters)."""

    alpha_los: float
    alpha_nlos: float
    height: float = 0.0

    def __post_init__(self) -> None:
        if not self.alpha_nlos > self.alpha_los > 2.0:
            raise DomainError(
                f"need alpha_nlos > alpha_los > 2, got "
                f"({self.alpha_los}, {self.alpha_nlos})"
            )
        if self.height < 0.0:
            raise DomainError(f"height must be >= 0, got {self.height}")


@dataclass(frozen=True)
class BlockageParams:
    """Roadside building process: density in buildings/m, height in m."""

    building_density: float
    building_height: float

    def __post_init__(self) -> None:
        if self.building_density < 0.0 or self.building_height < 0.0:
            raise DomainError("building density and height must be >= 0")

    def tau(self, bs_height: float) -> float:
        """Fraction of the link segment a building can block, min(h~/h, 1).

        Defined as 1 in the h -> 0 limit (any building blocks a ground-level
        link) and 0 when the buildings have zero height.
        """
        if self.building_height == 0.0:
            return 0.0
        if bs_height <= 0.0:
            return 1.0
        return min(self.building_height / bs_height, 1.0)


@dataclass(frozen=True)
class BuildingsLos:
    """LOS iff no building falls in the blockable segment: p = exp(-ld * tau * r)."""

    params: BlockageParams

    def p_los(self, r: float, h: float) -> float:
        return math.exp(-self.params.building_density * self.params.tau(h) * r)


@dataclass(frozen=True)
class StepLos:
    """LOS within the critical distance, NLOS beyond it."""

    critical_distance: float

    def __post_init__(self) -> None:
        if self.critical_distance < 0.0:
            raise DomainError("critical distance must be >= 0")

    def p_los(self, r: float, h: float) -> float:
        return 1.0 if r <= self.critical_distance else 0.0


@dataclass(frozen=True)
class ConstantLos:
    """Distance-independent LOS probability; 1 and 0 give the pure-LOS and
    pure-NLOS single-slope networks."""

    p: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise DomainError(f"LOS probability must lie in [0, 1], got {self.p}")

    def p_los(self, r: float, h: float) -> float:
        return self.p


LosModel = Union[BuildingsLos, StepLos, ConstantLos]


def pathloss(r: float, h: float, alpha: float) -> float:
    """Power pathloss (r^2 + h^2)^(-alpha/2); bounded by h^-alpha when h > 0."""
    if alpha <= 2.0:
        raise DomainError(f"alpha must exceed 2, got {alpha}")
    if r < 0.0 or h < 0.0:
        raise DomainError("distances must be >= 0")
    d2 = r * r + h * h
    if d2 == 0.0:
        raise DomainError("pathloss is singular at r = h = 0")
    return d2 ** (-0.5 * alpha)


def los_probability(model: LosModel, r: float, h: float) -> float:
    """Probability that a link of horizontal length r to a BS at height h is LOS."""
    if r < 0.0:
        raise DomainError(f"distance must be >= 0, got {r}")
    return model.p_los(r, h)
