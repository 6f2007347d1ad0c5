"""Expectation values of the spin projection along a final axis.

Two routes are provided: the Born-rule sum over outcomes, and the
state/operator sandwich in an arbitrary basis axis ``b``. They agree for
every ``b``. ``case_configuration`` builds the (state, operator) pair for
the five ways the basis, initial and final axes can coincide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from landespin.amplitudes import Projection, transition_probability
from landespin.geometry import Direction, cos_angle
from landespin.states import (
    SpinOperator,
    SpinState,
    spin_operator,
    spin_state,
)

IMAG_RESIDUE_LIMIT = 1e-12


@dataclass(frozen=True)
class MeasurementContext:
    a: Direction
    c: Direction
    b: Direction
    mi: Projection


class CaseId(enum.Enum):
    A = "b != a, c != a"
    B = "b = a"
    C = "b = c"
    D = "c = a"
    E = "b = a, c = a"

    @classmethod
    def parse(cls, text: str) -> CaseId:
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown case {text!r}, expected one of A-E") from None


def expectation_direct(mi: Projection, a: Direction, c: Direction) -> float:
    return transition_probability(mi, a, Projection.UP, c) - transition_probability(
        mi, a, Projection.DOWN, c
    )


def expectation_analytic(mi: Projection, a: Direction, c: Direction) -> float:
    """+-cos of the angle between the initial and final axes."""
    return int(mi) * cos_angle(a, c)


def sandwich(state: SpinState, op: SpinOperator) -> float:
    """psi^dagger M psi, checked to be real."""
    psi = state.components
    value = complex(np.vdot(psi, op.entries @ psi))
    if abs(value.imag) > IMAG_RESIDUE_LIMIT:
        raise ArithmeticError(
            f"expectation has imaginary part {value.imag:.3e}; operator not Hermitian?"
        )
    return value.real


def expectation_sandwich(ctx: MeasurementContext) -> float:
    return sandwich(spin_state(ctx.mi, ctx.a, ctx.b), spin_operator(ctx.c, ctx.b))


_PAULI_Z = [[1, 0], [0, -1]]


def _basis_state(mi: Projection, a: Direction) -> SpinState:
    comps = [1, 0] if mi is Projection.UP else [0, 1]
    return SpinState(comps, a, mi, a)


def case_configuration(
    case: CaseId,
    mi: Projection,
    a: Direction,
    c: Direction | None = None,
    b: Direction | None = None,
) -> tuple[SpinState, SpinOperator]:
    """State and operator for one arrangement of the reference axes.

    Cases A and D take the basis axis ``b`` explicitly; B, C and E fix it
    (to ``a``, ``c`` and ``a``) and reject an explicit one. D and E measure
    along the initial axis, so ``c`` is replaced by ``a`` there. Where the
    arrangement makes a vector or matrix trivial (the basis state in B and E,
    diag(1, -1) in C and E), the trivial form is returned literally.
    """
    case = CaseId(case)
    mi = Projection(mi)
    if case in (CaseId.A, CaseId.D):
        if b is None:
            raise ValueError(f"case {case.name} needs an explicit basis axis b")
    elif b is not None:
        raise ValueError(f"case {case.name} fixes the basis axis; do not pass b")
    if case in (CaseId.D, CaseId.E):
        c = a
    elif c is None:
        raise ValueError(f"case {case.name} needs a final axis c")

    if case is CaseId.A:
        return spin_state(mi, a, b), spin_operator(c, b)
    if case is CaseId.B:
        return _basis_state(mi, a), spin_operator(c, a)
    if case is CaseId.C:
        return spin_state(mi, a, c), SpinOperator(_PAULI_Z, c, c, source="diagonal")
    if case is CaseId.D:
        return spin_state(mi, a, b), spin_operator(a, b)
    return _basis_state(mi, a), SpinOperator(_PAULI_Z, a, a, source="diagonal")
