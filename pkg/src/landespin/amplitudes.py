"""Two-direction spin-1/2 probability amplitudes.

An amplitude is labelled by an initial projection along one axis and a
final projection along another. The same function serves for every such
factor, whether it plays the role of a full transition a -> c or one leg
of an expansion a -> b -> c.
"""

from __future__ import annotations

import cmath
import math
from enum import IntEnum
from typing import Callable

from landespin.geometry import Direction


class Projection(IntEnum):
    """Spin projection along an axis; the value is the eigenvalue in units of hbar/2."""

    UP = 1
    DOWN = -1

    def eigenvalue(self) -> float:
        return float(self.value)

    @property
    def symbol(self) -> str:
        return "+" if self is Projection.UP else "-"

    def flipped(self) -> Projection:
        return Projection.DOWN if self is Projection.UP else Projection.UP

    @classmethod
    def parse(cls, text: str) -> Projection:
        key = text.strip().lower()
        if key in ("+", "up", "+1", "1", "+1/2"):
            return cls.UP
        if key in ("-", "down", "-1", "-1/2"):
            return cls.DOWN
        raise ValueError(f"not a spin projection: {text!r}")


PROJECTIONS = (Projection.UP, Projection.DOWN)

# (mi, theta, phi, mf, theta', phi') -> complex
AmplitudeKernel = Callable[[int, float, float, int, float, float], complex]


def _half_angle_kernel(mi, theta, phi, mf, theta_f, phi_f):
    ca, sa = math.cos(theta / 2), math.sin(theta / 2)
    cc, sc = math.cos(theta_f / 2), math.sin(theta_f / 2)
    phase = cmath.exp(1j * (phi - phi_f))
    if mi > 0:
        if mf > 0:
            return ca * cc + phase * sa * sc
        return ca * sc - phase * sa * cc
    if mf > 0:
        return sa * cc - phase * ca * sc
    return sa * sc + phase * ca * cc


# Other phase conventions can be registered here. Only "half-angle" is known
# to satisfy the composition law checked by `expand`.
KERNELS: dict[str, AmplitudeKernel] = {"half-angle": _half_angle_kernel}
DEFAULT_CONVENTION = "half-angle"


def amplitude(
    mi: Projection,
    a: Direction,
    mf: Projection,
    c: Direction,
    *,
    convention: str = DEFAULT_CONVENTION,
) -> complex:
    """Amplitude for projection ``mi`` along ``a`` to be found as ``mf`` along ``c``.

    With ``a == c`` this is exactly 1 for ``mf == mi`` and exactly 0 otherwise.
    """
    if a == c:
        return 1 + 0j if mi == mf else 0j
    kernel = KERNELS[convention]
    return complex(kernel(int(mi), a.theta, a.phi, int(mf), c.theta, c.phi))


def transition_probability(
    mi: Projection, a: Direction, mf: Projection, c: Direction
) -> float:
    """Born probability of outcome ``mf`` along ``c`` given ``mi`` along ``a``."""
    amp = amplitude(mi, a, mf, c)
    return amp.real * amp.real + amp.imag * amp.imag


def expand(
    mi: Projection, a: Direction, mf: Projection, c: Direction, b: Direction
) -> complex:
    """Amplitude a -> c rebuilt as a sum over the two projections along ``b``."""
    return sum(
        (amplitude(mi, a, k, b) * amplitude(k, b, mf, c) for k in PROJECTIONS),
        0j,
    )
