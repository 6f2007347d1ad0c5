"""Exit criteria for the package, one test per criterion.

Each test logs a PASS/FAIL line; the lines are repeated in the pytest
terminal summary under "acceptance criteria". Random inputs are drawn here
with their own generator so nothing is shared with the library's sweeps.
"""

import cmath
import io
import json
import math
import time

import numpy as np

from landespin.amplitudes import PROJECTIONS, Projection, amplitude, expand
from landespin.cli import main as cli_main
from landespin.expectation import (
    CaseId,
    MeasurementContext,
    case_configuration,
    expectation_direct,
    expectation_sandwich,
    sandwich,
)
from landespin.geometry import Direction, make_direction
from landespin.oracle import oracle_amplitude, oracle_operator_in_basis
from landespin.simulator import MeasurementChain, enumerate_paths, run_chain
from landespin.states import (
    eigenvectors,
    spin_operator,
    spin_state,
    states_equal_up_to_phase,
)

TOL = 1e-12
N = 1000
Z = make_direction(0, 0)
Z_PI = make_direction(0, math.pi)


def draw(rng, n, poles=0.0):
    """n random axes; a fraction ``poles`` sits exactly on theta = 0 or pi."""
    out = []
    for _ in range(n):
        phi = rng.uniform(0, 2 * math.pi)
        if rng.uniform() < poles:
            out.append(make_direction(rng.choice([0.0, math.pi]), phi))
        else:
            out.append(make_direction(math.acos(rng.uniform(-1, 1)), phi))
    return out


def cos_big_theta(a: Direction, c: Direction) -> float:
    return math.cos(a.theta) * math.cos(c.theta) + math.sin(a.theta) * math.sin(c.theta) * math.cos(
        a.phi - c.phi
    )


def one_axis_operator(d: Direction) -> np.ndarray:
    ct, st = math.cos(d.theta), math.sin(d.theta)
    return np.array([[ct, st * cmath.exp(-1j * d.phi)], [st * cmath.exp(1j * d.phi), -ct]])


def check(log, number, title, ok, detail):
    log.append(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}")
    assert ok, f"criterion {number} ({title}) failed: {detail}"


def cli_json(*argv):
    buf = io.StringIO()
    code = cli_main(list(argv) + ["--format", "json"], stdout=buf)
    return code, buf.getvalue()


def test_01_master_identity(acceptance_log):
    rng = np.random.default_rng(101)
    dirs = draw(rng, 3 * N, poles=0.05)
    signs = rng.choice([1, -1], N)
    t0 = time.perf_counter()
    worst = 0.0
    for i in range(N):
        a, c, b = dirs[3 * i : 3 * i + 3]
        mi = Projection(int(signs[i]))
        e = expectation_sandwich(MeasurementContext(a, c, b, mi))
        worst = max(worst, abs(e - int(mi) * cos_big_theta(a, c)))
    elapsed = time.perf_counter() - t0
    check(
        acceptance_log, 1, "sandwich = +-cos(Theta)",
        worst < TOL and elapsed < 1.0,
        f"worst {worst:.2e} < {TOL:g} over {N} tuples, {elapsed:.3f}s < 1s",
    )


def test_02_standard_results(acceptance_log):
    rng = np.random.default_rng(102)
    worst_same, worst_z = 0.0, 0.0
    for d in draw(rng, N, poles=0.05):
        for mi in PROJECTIONS:
            worst_same = max(worst_same, abs(expectation_direct(mi, d, d) - int(mi)))
            worst_same = max(
                worst_same, abs(expectation_sandwich(MeasurementContext(d, d, Z_PI, mi)) - int(mi))
            )
            target = int(mi) * math.cos(d.theta)
            worst_z = max(worst_z, abs(expectation_direct(mi, Z, d) - target))
            worst_z = max(worst_z, abs(expectation_sandwich(MeasurementContext(Z, d, Z_PI, mi)) - target))
    check(
        acceptance_log, 2, "c = a gives +-1; a = z gives +-cos(theta')",
        worst_same < TOL and worst_z < TOL,
        f"c=a worst {worst_same:.2e}, a=z worst {worst_z:.2e}",
    )


def test_03_composition_law(acceptance_log):
    rng = np.random.default_rng(103)
    dirs = draw(rng, 3 * N, poles=0.2)
    n_poles = sum(d.theta in (0.0, math.pi) for d in dirs)
    worst = 0.0
    for i in range(N):
        a, b, c = dirs[3 * i : 3 * i + 3]
        mi, mf = PROJECTIONS[i % 2], PROJECTIONS[(i // 2) % 2]
        worst = max(worst, abs(expand(mi, a, mf, c, b) - amplitude(mi, a, mf, c)))
    check(
        acceptance_log, 3, "composition through an intermediate axis",
        worst < TOL and n_poles > 0,
        f"worst {worst:.2e} over {N} tuples ({n_poles} pole axes)",
    )


def test_04_oracle_equivalence(acceptance_log):
    rng = np.random.default_rng(104)
    dirs = draw(rng, 2 * N, poles=0.05)
    worst_amp, worst_op = 0.0, 0.0
    for i in range(N):
        a, c = dirs[2 * i : 2 * i + 2]
        for mi in PROJECTIONS:
            for mf in PROJECTIONS:
                worst_amp = max(worst_amp, abs(amplitude(mi, a, mf, c) - oracle_amplitude(int(mi), a, int(mf), c)))
        diff = spin_operator(c, a).entries - oracle_operator_in_basis(c, a)
        worst_op = max(worst_op, float(np.max(np.abs(diff))))
    check(
        acceptance_log, 4, "amplitudes and operator equal the Pauli oracle",
        worst_amp < TOL and worst_op < TOL,
        f"amplitude worst {worst_amp:.2e}, operator worst {worst_op:.2e}",
    )


def test_05_eigen_structure(acceptance_log):
    rng = np.random.default_rng(105)
    dirs = draw(rng, 2 * N, poles=0.05)
    worst_eig, worst_alg, mismatches = 0.0, 0.0, 0
    for i in range(N):
        c, b = dirs[2 * i : 2 * i + 2]
        op = spin_operator(c, b)
        m = op.entries
        plus, minus = eigenvectors(c, b)
        worst_eig = max(
            worst_eig,
            float(np.linalg.norm(m @ plus.components - plus.components)),
            float(np.linalg.norm(m @ minus.components + minus.components)),
        )
        mismatches += not np.array_equal(plus.components, spin_state(Projection.UP, c, b).components)
        mismatches += not np.array_equal(minus.components, spin_state(Projection.DOWN, c, b).components)
        worst_alg = max(
            worst_alg,
            float(np.max(np.abs(m - m.conj().T))),
            abs(complex(np.trace(m))),
            float(np.max(np.abs(m @ m - np.eye(2)))),
            abs(complex(np.linalg.det(m)) + 1),
        )
    check(
        acceptance_log, 5, "eigenvectors and operator algebra",
        worst_eig < TOL and worst_alg < TOL and mismatches == 0,
        f"eigen residual {worst_eig:.2e}, algebra {worst_alg:.2e}, state mismatches {mismatches}",
    )


def test_06_standard_basis_reductions(acceptance_log):
    rng = np.random.default_rng(106)
    worst_op, worst_up, phase_fail = 0.0, 0.0, 0
    for d in draw(rng, N, poles=0.05):
        worst_op = max(worst_op, float(np.max(np.abs(spin_operator(d, Z_PI).entries - one_axis_operator(d)))))
        h, e = d.theta / 2, cmath.exp(1j * d.phi)
        up = np.array([math.cos(h), math.sin(h) * e])
        down_with_i = 1j * np.array([math.sin(h), -math.cos(h) * e])
        worst_up = max(worst_up, float(np.max(np.abs(spin_state(Projection.UP, d, Z_PI).components - up))))
        phase_fail += not states_equal_up_to_phase(spin_state(Projection.DOWN, d, Z_PI), down_with_i, TOL)
    # "exactly" for the up state is read as agreement to rounding (1e-15)
    check(
        acceptance_log, 6, "b = (0, pi) reproduces the one-axis forms",
        worst_op < TOL and worst_up < 1e-15 and phase_fail == 0,
        f"operator {worst_op:.2e}, up state {worst_up:.2e}, down-state phase failures {phase_fail}",
    )


def test_07_case_coherence(acceptance_log):
    rng = np.random.default_rng(107)
    a, c = make_direction(0.7, 1.9), make_direction(2.1, 4.4)
    worst_abc, worst_de = 0.0, 0.0
    for mi in PROJECTIONS:
        target = int(mi) * cos_big_theta(a, c)
        for b in draw(rng, 100, poles=0.05):
            for case in CaseId:
                explicit_b = b if case in (CaseId.A, CaseId.D) else None
                value = sandwich(*case_configuration(case, mi, a, c, explicit_b))
                if case in (CaseId.D, CaseId.E):
                    worst_de = max(worst_de, abs(value - int(mi)))
                else:
                    worst_abc = max(worst_abc, abs(value - target))
    check(
        acceptance_log, 7, "cases A-C give +-cos(Theta), D-E give +-1",
        worst_abc < TOL and worst_de < TOL,
        f"A-C worst {worst_abc:.2e}, D-E worst {worst_de:.2e} over 100 random b",
    )


def test_08_trig_erratum_report(acceptance_log):
    rng = np.random.default_rng(108)
    general = []
    for _ in range(20):
        c, b = draw(rng, 2)
        _, out = cli_json(
            "operator", "--radians", "--compare-trig",
            f"--c={c.theta!r},{c.phi!r}", f"--b={b.theta!r},{b.phi!r}",
        )
        general.append(json.loads(out)["results"]["max_difference"])
    special = []
    for c in draw(rng, 20):
        _, out = cli_json(
            "operator", "--radians", "--compare-trig", f"--c={c.theta!r},{c.phi!r}", f"--b=0,{math.pi!r}"
        )
        special.append(json.loads(out)["results"]["max_difference"])
    check(
        acceptance_log, 8, "operator --compare-trig discrepancy",
        max(general) > TOL and max(special) < TOL,
        f"random pairs max {max(general):.3f} (nonzero), at b=(0,pi) max {max(special):.2e}",
    )


def test_09_monte_carlo_single_stage(acceptance_log):
    chain = MeasurementChain(Z, Projection.UP, (make_direction(math.radians(60), 0),))
    t0 = time.perf_counter()
    res = run_chain(chain, 1_000_000, seed=2024)
    elapsed = time.perf_counter() - t0
    z = abs(res.estimate - 0.5) / res.std_error
    argv = ("simulate", "--start", "0,0,+", "--stage", "60,0", "--shots", "1000000", "--seed", "2024")
    first, second = cli_json(*argv), cli_json(*argv)
    check(
        acceptance_log, 9, "10^6-shot estimate of cos(60 deg)",
        z <= 5 and elapsed < 10 and first == second,
        f"estimate {res.estimate:.5f} (+-{res.std_error:.5f}, {z:.2f} SE), {elapsed:.2f}s, "
        f"repeat byte-identical={first == second}",
    )


def test_10_path_enumeration(acceptance_log):
    rng = np.random.default_rng(110)
    shots = 100_000
    worst_z, worst_sum = 0.0, 0.0
    for trial in range(5):
        start, *stages = draw(rng, 4)
        chain = MeasurementChain(start, PROJECTIONS[trial % 2], tuple(stages))
        exact = enumerate_paths(chain)
        worst_sum = max(worst_sum, abs(sum(exact.values()) - 1))
        res = run_chain(chain, shots, seed=1000 + trial)
        for path, p in exact.items():
            se = math.sqrt(p * (1 - p) / shots)
            freq = res.path_counts[path] / shots
            worst_z = max(worst_z, abs(freq - p) / se if se > 0 else (0.0 if freq == p else math.inf))
    check(
        acceptance_log, 10, "3-stage path frequencies vs enumeration",
        worst_z <= 5 and worst_sum < TOL,
        f"worst deviation {worst_z:.2f} SE over 5 chains x 8 paths, probability sum error {worst_sum:.2e}",
    )
