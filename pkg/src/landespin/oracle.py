"""Textbook Pauli-matrix spin-1/2 formalism, used as ground truth.

Nothing here may import from the amplitude, state or expectation modules;
a reference that shares code with what it checks proves nothing. Projections
are accepted as anything convertible to +1/-1.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

import numpy as np

from landespin.geometry import Direction, to_cartesian


class PauliTriple(NamedTuple):
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray


PAULI = PauliTriple(
    x=np.array([[0, 1], [1, 0]], dtype=complex),
    y=np.array([[0, -1j], [1j, 0]], dtype=complex),
    z=np.array([[1, 0], [0, -1]], dtype=complex),
)
for _m in PAULI:
    _m.setflags(write=False)


def sigma_n(n: Direction) -> np.ndarray:
    """Spin component along ``n`` as a 2x2 matrix, n . sigma."""
    ct, st = math.cos(n.theta), math.sin(n.theta)
    e = cmath.exp(1j * n.phi)
    return np.array([[ct, st * e.conjugate()], [st * e, -ct]], dtype=complex)


def sigma_dot(n: Direction) -> np.ndarray:
    """n . sigma assembled from the Pauli triple and the Cartesian axis."""
    nx, ny, nz = to_cartesian(n)
    return nx * PAULI.x + ny * PAULI.y + nz * PAULI.z


def oracle_eigenvectors(n: Direction) -> tuple[np.ndarray, np.ndarray]:
    """(+1, -1) eigenvectors of sigma_n(n) in the standard phase convention."""
    c, s = math.cos(n.theta / 2), math.sin(n.theta / 2)
    e = cmath.exp(1j * n.phi)
    up = np.array([c, s * e], dtype=complex)
    down = np.array([s, -c * e], dtype=complex)
    return up, down


def _vec(n: Direction, m) -> np.ndarray:
    up, down = oracle_eigenvectors(n)
    return up if int(m) > 0 else down


def oracle_amplitude(mi, a: Direction, mf, c: Direction) -> complex:
    """<xi_c^mf | xi_a^mi>."""
    return complex(np.vdot(_vec(c, mf), _vec(a, mi)))


def oracle_operator_in_basis(c: Direction, b: Direction) -> np.ndarray:
    """Matrix of sigma_n(c) in the eigenbasis of sigma_n(b), rows/cols ordered (+, -)."""
    basis = np.column_stack(oracle_eigenvectors(b))
    return basis.conj().T @ sigma_n(c) @ basis


def oracle_expectation(mi, a: Direction, c: Direction) -> float:
    v = _vec(a, mi)
    return float(np.vdot(v, sigma_n(c) @ v).real)
