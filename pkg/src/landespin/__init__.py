"""Generalized spin-1/2 measurement: two-direction amplitudes, basis-dependent
states and operators, expectation values, and a sequential-measurement sampler."""

__version__ = "0.1.0"

from landespin.amplitudes import (
    Projection,
    amplitude,
    expand,
    transition_probability,
)
from landespin.expectation import (
    CaseId,
    MeasurementContext,
    case_configuration,
    expectation_analytic,
    expectation_direct,
    expectation_sandwich,
)
from landespin.geometry import Direction, angle_between, antipode, make_direction, to_cartesian
from landespin.simulator import (
    ChainResult,
    MeasurementChain,
    PathLimitError,
    enumerate_paths,
    run_chain,
)
from landespin.states import (
    SpinOperator,
    SpinState,
    eigenvectors,
    spin_operator,
    spin_operator_trig,
    spin_state,
    states_equal_up_to_phase,
)

__all__ = [
    "CaseId",
    "ChainResult",
    "Direction",
    "MeasurementChain",
    "MeasurementContext",
    "PathLimitError",
    "Projection",
    "SpinOperator",
    "SpinState",
    "amplitude",
    "angle_between",
    "antipode",
    "case_configuration",
    "eigenvectors",
    "enumerate_paths",
    "expand",
    "expectation_analytic",
    "expectation_direct",
    "expectation_sandwich",
    "make_direction",
    "run_chain",
    "spin_operator",
    "spin_operator_trig",
    "spin_state",
    "states_equal_up_to_phase",
    "to_cartesian",
    "transition_probability",
]
