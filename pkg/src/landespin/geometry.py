"""Measurement axes on the unit sphere."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Direction:
    """A unit vector given by its polar angles, in radians.

    ``theta`` lies in [0, pi] and ``phi`` in [0, 2*pi). ``phi`` is kept as
    given at the poles: (0, 0) and (0, pi) are different values and the
    generalized amplitudes depend on the difference.
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError(f"non-finite angle in {self!r}")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta={self.theta} outside [0, pi]; use make_direction")
        if not 0.0 <= self.phi < TWO_PI:
            raise ValueError(f"phi={self.phi} outside [0, 2pi); use make_direction")


def make_direction(theta_raw: float, phi_raw: float) -> Direction:
    """Build a Direction from arbitrary finite angles.

    A polar angle outside [0, pi] is reflected through the pole, which
    shifts the azimuth by pi; the point on the sphere is unchanged.
    """
    theta_raw = float(theta_raw)
    phi_raw = float(phi_raw)
    if not (math.isfinite(theta_raw) and math.isfinite(phi_raw)):
        raise ValueError(f"angles must be finite, got ({theta_raw}, {phi_raw})")

    theta = theta_raw % TWO_PI
    phi = phi_raw
    if theta > math.pi:
        theta = TWO_PI - theta
        phi += math.pi
    phi %= TWO_PI
    # x % 2pi can round up to 2pi for tiny negative x
    if phi >= TWO_PI:
        phi = 0.0
    return Direction(theta, phi)


def to_cartesian(d: Direction) -> np.ndarray:
    st = math.sin(d.theta)
    return np.array([st * math.cos(d.phi), st * math.sin(d.phi), math.cos(d.theta)])


def cos_angle(a: Direction, c: Direction) -> float:
    """Cosine of the angle between two axes, clamped to [-1, 1]."""
    value = math.cos(a.theta) * math.cos(c.theta) + math.sin(a.theta) * math.sin(
        c.theta
    ) * math.cos(a.phi - c.phi)
    return min(1.0, max(-1.0, value))


def angle_between(a: Direction, c: Direction) -> float:
    """Angle between two axes in [0, pi].

    Computed from the half-chord, 2*atan2(|a - c|, |a + c|), because arccos
    of the dot product loses half the significant digits near 0 and pi.
    """
    u, v = to_cartesian(a), to_cartesian(c)
    return 2.0 * math.atan2(float(np.linalg.norm(u - v)), float(np.linalg.norm(u + v)))


def antipode(d: Direction) -> Direction:
    return make_direction(math.pi - d.theta, d.phi + math.pi)
