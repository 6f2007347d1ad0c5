"""Randomized sweeps of the algebraic identities, checked against the oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from landespin.amplitudes import PROJECTIONS, amplitude, expand
from landespin.expectation import (
    CaseId,
    MeasurementContext,
    case_configuration,
    expectation_analytic,
    expectation_direct,
    expectation_sandwich,
    sandwich,
)
from landespin.geometry import Direction, make_direction
from landespin.oracle import (
    oracle_amplitude,
    oracle_expectation,
    oracle_operator_in_basis,
)
from landespin.states import eigenvectors, spin_operator, spin_state

INVARIANTS = (
    "normalization",
    "composition",
    "eigen-equation",
    "operator-algebra",
    "b-invariance",
    "oracle-equivalence",
    "master-identity",
    "case-coherence",
)


def random_directions(
    rng: np.random.Generator, n: int, pole_fraction: float = 0.1
) -> list[Direction]:
    """Isotropic axes, with a share placed exactly on a pole at a random azimuth."""
    theta = np.arccos(rng.uniform(-1.0, 1.0, n))
    phi = rng.uniform(0.0, 2 * math.pi, n)
    poles = rng.uniform(size=n) < pole_fraction
    theta[poles] = np.where(rng.uniform(size=int(poles.sum())) < 0.5, 0.0, math.pi)
    return [make_direction(t, p) for t, p in zip(theta, phi)]


@dataclass
class InvariantReport:
    name: str
    worst: float = 0.0
    worst_case: dict = field(default_factory=dict)
    checked: int = 0

    def record(self, residual: float, **case):
        self.checked += 1
        if residual > self.worst or not self.worst_case:
            self.worst = float(residual)
            self.worst_case = case

    def passed(self, tol: float) -> bool:
        return self.worst <= tol


def _dir(d: Direction) -> list[float]:
    return [d.theta, d.phi]


def run_invariant_suite(trials: int, seed: int) -> dict[str, InvariantReport]:
    """Evaluate every invariant over ``trials`` random (mi, a, b, c) tuples.

    Returns the worst residual per invariant together with its inputs;
    deciding pass/fail against a tolerance is left to the caller.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    dirs = random_directions(rng, 4 * trials)
    signs = rng.integers(0, 2, trials)
    reports = {name: InvariantReport(name) for name in INVARIANTS}

    for t in range(trials):
        a, b, c, b2 = dirs[4 * t : 4 * t + 4]
        mi = PROJECTIONS[int(signs[t])]
        case = {"mi": mi.symbol, "a": _dir(a), "b": _dir(b), "c": _dir(c)}

        total = sum(abs(amplitude(mi, a, mf, c)) ** 2 for mf in PROJECTIONS)
        reports["normalization"].record(abs(total - 1.0), **case)

        for mf in PROJECTIONS:
            direct = amplitude(mi, a, mf, c)
            reports["composition"].record(
                abs(expand(mi, a, mf, c, b) - direct), mf=mf.symbol, **case
            )
            reports["oracle-equivalence"].record(
                abs(direct - oracle_amplitude(mi, a, mf, c)), mf=mf.symbol, **case
            )

        op = spin_operator(c, b)
        reports["oracle-equivalence"].record(
            float(np.max(np.abs(op.entries - oracle_operator_in_basis(c, b)))),
            what="operator",
            **case,
        )
        reports["operator-algebra"].record(max(op.invariant_residuals().values()), **case)
        for sign, vec in zip((1, -1), eigenvectors(c, b)):
            psi = vec.components
            reports["eigen-equation"].record(
                float(np.linalg.norm(op.entries @ psi - sign * psi)), eig=sign, **case
            )
        # the prepared state is an eigenvector of the operator for its own axis
        own = spin_state(mi, a, b)
        psi = own.components
        reports["eigen-equation"].record(
            float(np.linalg.norm(spin_operator(a, b).entries @ psi - int(mi) * psi)),
            what="state",
            **case,
        )

        analytic = expectation_analytic(mi, a, c)
        e1 = expectation_sandwich(MeasurementContext(a, c, b, mi))
        e2 = expectation_sandwich(MeasurementContext(a, c, b2, mi))
        reports["b-invariance"].record(abs(e1 - e2), b2=_dir(b2), **case)
        reports["master-identity"].record(
            max(abs(e1 - analytic), abs(expectation_direct(mi, a, c) - analytic)), **case
        )
        reports["oracle-equivalence"].record(
            abs(oracle_expectation(mi, a, c) - analytic), what="expectation", **case
        )

        for cid in CaseId:
            if cid in (CaseId.A, CaseId.D):
                state, cop = case_configuration(cid, mi, a, c, b)
            else:
                state, cop = case_configuration(cid, mi, a, c)
            target = int(mi) if cid in (CaseId.D, CaseId.E) else analytic
            reports["case-coherence"].record(
                abs(sandwich(state, cop) - target), case_id=cid.name, **case
            )

    return reports


def failing(reports: dict[str, InvariantReport], tol: float) -> list[InvariantReport]:
    return [r for r in reports.values() if not r.passed(tol)]


def summarize(reports: dict[str, InvariantReport], tol: float) -> list[dict]:
    return [
        {
            "invariant": r.name,
            "checked": r.checked,
            "worst_residual": r.worst,
            "passed": r.passed(tol),
            "worst_case": r.worst_case,
        }
        for r in reports.values()
    ]

