"""Generalized spin states, the spin operator in a b-basis, and its eigenvectors.

Everything is represented in the basis of the two projection states along
an arbitrary axis ``b``. Vector components and matrix entries are ordered
(+, -).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from landespin.amplitudes import Projection, amplitude
from landespin.geometry import Direction

UP, DOWN = Projection.UP, Projection.DOWN


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class SpinState:
    """Projection ``mi`` along ``a``, written in the ``b`` basis."""

    components: np.ndarray
    a: Direction
    mi: Projection
    b: Direction

    def __post_init__(self):
        object.__setattr__(self, "components", _frozen(self.components))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.components))


@dataclass(frozen=True, eq=False)
class SpinOperator:
    """Spin component along ``c``, written in the ``b`` basis."""

    entries: np.ndarray
    c: Direction
    b: Direction
    source: str = field(default="amplitudes")

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen(self.entries))

    def invariant_residuals(self) -> dict[str, float]:
        """Worst deviation from each algebraic property of a spin component."""
        m = self.entries
        return {
            "hermitian": float(np.max(np.abs(m - m.conj().T))),
            "traceless": abs(complex(np.trace(m))),
            "involutory": float(np.max(np.abs(m @ m - np.eye(2)))),
            "det": abs(complex(np.linalg.det(m)) + 1.0),
        }


def spin_state(mi: Projection, a: Direction, b: Direction) -> SpinState:
    comps = [amplitude(mi, a, UP, b), amplitude(mi, a, DOWN, b)]
    return SpinState(comps, a, Projection(mi), b)


def spin_operator(c: Direction, b: Direction) -> SpinOperator:
    """Operator for measuring along ``c`` in the ``b`` basis, built from b -> c amplitudes.

    Entry (m, n) is sum_k k * conj(A(m,b;k,c)) * A(n,b;k,c).
    """
    pp = amplitude(UP, b, UP, c)
    pm = amplitude(UP, b, DOWN, c)
    mp = amplitude(DOWN, b, UP, c)
    mm = amplitude(DOWN, b, DOWN, c)

    def sq(z: complex) -> float:
        return z.real * z.real + z.imag * z.imag

    m11 = sq(pp) - sq(pm)
    m12 = pp.conjugate() * mp - pm.conjugate() * mm
    m21 = mp.conjugate() * pp - mm.conjugate() * pm
    m22 = sq(mp) - sq(mm)
    return SpinOperator([[m11, m12], [m21, m22]], c, b)


def spin_operator_trig(c: Direction, b: Direction) -> SpinOperator:
    """Closed trigonometric entries for the same operator, transcribed as published.

    The published off-diagonal entries carry a self-cancelling pair of terms
    and agree with :func:`spin_operator` only at special axes such as
    b = (0, pi). The last entry is taken as the (2,2) element. Kept so the
    mismatch can be measured, see :func:`trig_discrepancy`.
    """
    tc, pc = c.theta, c.phi
    tb, pb = b.theta, b.phi
    delta = pb - pc
    diag = math.cos(tb) * math.cos(tc) + math.sin(tb) * math.sin(tc) * math.cos(delta)
    cancel = math.sin(tb) * math.cos(tc) - math.sin(tb) * math.cos(tc)
    m12 = cancel - math.sin(tc) * (math.cos(tb) * math.cos(delta) + 1j * math.sin(delta))
    m21 = cancel - math.sin(tc) * (math.cos(tb) * math.cos(delta) - 1j * math.sin(delta))
    m22 = -math.cos(tb) * math.cos(tc) - math.sin(tb) * math.sin(tc) * math.cos(delta)
    return SpinOperator([[diag, m12], [m21, m22]], c, b, source="trig")


def trig_discrepancy(c: Direction, b: Direction) -> float:
    """Max entrywise |trig - amplitude-built| for the operator along ``c`` in basis ``b``."""
    diff = spin_operator_trig(c, b).entries - spin_operator(c, b).entries
    return float(np.max(np.abs(diff)))


def eigenvectors(c: Direction, b: Direction) -> tuple[SpinState, SpinState]:
    """(+1, -1) eigenvectors of ``spin_operator(c, b)``.

    They are the spin states prepared along ``c`` itself, expressed in ``b``.
    """
    return spin_state(UP, c, b), spin_state(DOWN, c, b)


def states_equal_up_to_phase(u, v, tol: float) -> bool:
    """True iff ||u - lam*v|| < tol for some |lam| = 1.

    Accepts SpinState instances or raw 2-vectors.
    """
    u = np.asarray(getattr(u, "components", u), dtype=complex)
    v = np.asarray(getattr(v, "components", v), dtype=complex)
    overlap = complex(np.vdot(v, u))
    if overlap == 0:
        return bool(math.hypot(np.linalg.norm(u), np.linalg.norm(v)) < tol)
    lam = overlap / abs(overlap)
    return bool(np.linalg.norm(u - lam * v) < tol)
