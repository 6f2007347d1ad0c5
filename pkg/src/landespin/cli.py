"""Command-line interface.

Axes are given as ``theta,phi`` in degrees (or radians with ``--radians``).
Negative angles need the ``--flag=value`` form, e.g. ``--a=-30,0``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.

CSV columns per command:

    amplitude  mi,a_theta,a_phi,mf,c_theta,c_phi,re,im,probability,oracle_re,oracle_im,difference
    state      component,re,im
    eigvec     eigenvalue,component,re,im,residual
    operator   source,row,col,re,im
    expect     method,value,difference
    cases      case,b_theta,b_phi,c_theta,c_phi,state_up_re,state_up_im,state_down_re,state_down_im,expectation,expected,difference
    simulate   stage,theta,phi,n_up,n_down,up_fraction,exact_up_probability
    verify     invariant,checked,worst_residual,passed
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Callable

import numpy as np

from landespin import __version__
from landespin.amplitudes import Projection, amplitude, transition_probability
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
from landespin.oracle import oracle_amplitude, oracle_expectation
from landespin.simulator import (
    RNG_ALGORITHM,
    MAX_ENUMERATED_STAGES,
    MeasurementChain,
    enumerate_paths,
    last_stage_probability,
    run_chain,
)
from landespin.states import (
    eigenvectors,
    spin_operator,
    spin_operator_trig,
    spin_state,
)
from landespin.verify import failing, run_invariant_suite, summarize

TOLERANCE = 1e-12
DEFAULT_BASIS = (0.0, 180.0)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Outcome:
    """What a command produces: the JSON envelope plus a flat table."""

    def __init__(self, command, inputs, results, headers, rows, *, ok=True, rng=None, tol=TOLERANCE):
        self.envelope = {
            "command": command,
            "inputs": inputs,
            "results": results,
            "metadata": {"version": __version__, "tolerance": tol},
        }
        if rng is not None:
            self.envelope["metadata"]["rng"] = rng
        self.headers = headers
        self.rows = rows
        self.ok = ok
        self.notes: list[str] = []


def cplx(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def cmatrix(m) -> list[list[dict]]:
    return [[cplx(x) for x in row] for row in np.asarray(m)]


def _pair(text: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected theta,phi but got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"angles must be numbers: {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError(f"angles must be finite: {text!r}")
    return vals


def _start(text: str) -> list:
    parts = text.rsplit(",", 1)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected theta,phi,+/- but got {text!r}")
    return _pair(parts[0]) + [_projection(parts[1]).symbol]


def _projection(text: str) -> Projection:
    try:
        return Projection.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _to_dir(pair, radians: bool) -> Direction:
    theta, phi = pair
    if not radians:
        theta, phi = math.radians(theta), math.radians(phi)
    return make_direction(theta, phi)


# ---------------------------------------------------------------- commands


def cmd_amplitude(args) -> Outcome:
    a, c = _to_dir(args.a, args.radians), _to_dir(args.c, args.radians)
    amp = amplitude(args.mi, a, args.mf, c)
    ora = oracle_amplitude(args.mi, a, args.mf, c)
    prob = transition_probability(args.mi, a, args.mf, c)
    diff = abs(amp - ora)
    results = {
        "amplitude": cplx(amp),
        "probability": prob,
        "oracle": cplx(ora),
        "difference": diff,
    }
    row = [args.mi.symbol, *args.a, args.mf.symbol, *args.c, amp.real, amp.imag, prob, ora.real, ora.imag, diff]
    headers = "mi,a_theta,a_phi,mf,c_theta,c_phi,re,im,probability,oracle_re,oracle_im,difference".split(",")
    return Outcome("amplitude", _inputs(args, "mi", "a", "mf", "c"), results, headers, [row])


def cmd_state(args) -> Outcome:
    a, b = _to_dir(args.a, args.radians), _to_dir(args.b, args.radians)
    st = spin_state(args.mi, a, b)
    results = {"components": [cplx(x) for x in st.components], "norm": st.norm}
    rows = [[label, x.real, x.imag] for label, x in zip("+-", st.components)]
    return Outcome("state", _inputs(args, "mi", "a", "b"), results, ["component", "re", "im"], rows)


def cmd_eigvec(args) -> Outcome:
    c, b = _to_dir(args.c, args.radians), _to_dir(args.b, args.radians)
    op = spin_operator(c, b).entries
    results, rows = {}, []
    for sign, vec in zip((1, -1), eigenvectors(c, b)):
        psi = vec.components
        residual = float(np.linalg.norm(op @ psi - sign * psi))
        results["plus" if sign > 0 else "minus"] = {
            "eigenvalue": sign,
            "components": [cplx(x) for x in psi],
            "residual": residual,
        }
        rows += [[sign, label, x.real, x.imag, residual] for label, x in zip("+-", psi)]
    return Outcome(
        "eigvec", _inputs(args, "c", "b"), results,
        ["eigenvalue", "component", "re", "im", "residual"], rows,
    )


def cmd_operator(args) -> Outcome:
    c, b = _to_dir(args.c, args.radians), _to_dir(args.b, args.radians)
    op = spin_operator(c, b)
    results = {"matrix": cmatrix(op.entries), "invariants": op.invariant_residuals()}
    rows = _matrix_rows("amplitudes", op.entries)
    if args.compare_trig:
        trig = spin_operator_trig(c, b).entries
        diff = trig - op.entries
        results["trig_matrix"] = cmatrix(trig)
        results["difference"] = cmatrix(diff)
        results["max_difference"] = float(np.max(np.abs(diff)))
        rows += _matrix_rows("trig", trig) + _matrix_rows("difference", diff)
    inputs = _inputs(args, "c", "b")
    inputs["compare_trig"] = args.compare_trig
    return Outcome("operator", inputs, results, ["source", "row", "col", "re", "im"], rows)


def _matrix_rows(source, m):
    return [[source, i + 1, j + 1, complex(m[i, j]).real, complex(m[i, j]).imag] for i in range(2) for j in range(2)]


def _expect_axes(args):
    """Resolve (a, c, b, case) for the expect command, enforcing case constraints."""
    a = _to_dir(args.a, args.radians)
    case = CaseId.parse(args.case) if args.case else None
    c = _to_dir(args.c, args.radians) if args.c is not None else None
    b = _to_dir(args.b, args.radians) if args.b is not None else None

    if case in (CaseId.D, CaseId.E):
        if c is not None and c != a:
            raise UsageError(f"case {case.name} measures along a; --c must be omitted or equal --a")
        c = a
    elif c is None:
        raise UsageError("--c is required")

    if case in (CaseId.B, CaseId.C, CaseId.E) and b is not None:
        raise UsageError(f"case {case.name} fixes the basis axis; drop --b")
    if case is None and b is None:
        b = _to_dir(DEFAULT_BASIS, False)
    if case in (CaseId.A, CaseId.D) and b is None:
        raise UsageError(f"case {case.name} needs --b")
    return a, c, b, case


def cmd_expect(args) -> Outcome:
    a, c, b, case = _expect_axes(args)
    if case is None:
        sandwiched = expectation_sandwich(MeasurementContext(a, c, b, args.mi))
        basis = b
    else:
        passed_b = b if case in (CaseId.A, CaseId.D) else None
        state, op = case_configuration(case, args.mi, a, c, passed_b)
        sandwiched = sandwich(state, op)
        basis = state.b
    values = {
        "direct": expectation_direct(args.mi, a, c),
        "sandwich": sandwiched,
        "analytic": expectation_analytic(args.mi, a, c),
        "oracle": oracle_expectation(args.mi, a, c),
    }
    spread = max(values.values()) - min(values.values())
    results = dict(values)
    results["max_difference"] = spread
    results["basis"] = [basis.theta, basis.phi]
    results["case"] = case.name if case else None
    rows = [[k, v, v - values["analytic"]] for k, v in values.items()]
    inputs = _inputs(args, "mi", "a", "c", "b")
    inputs["case"] = args.case
    return Outcome(
        "expect", inputs, results, ["method", "value", "difference"], rows,
        ok=spread <= TOLERANCE,
    )


def cmd_cases(args) -> Outcome:
    a, c = _to_dir(args.a, args.radians), _to_dir(args.c, args.radians)
    b = _to_dir(args.b, args.radians) if args.b is not None else _to_dir(DEFAULT_BASIS, False)
    analytic = expectation_analytic(args.mi, a, c)
    table, rows, worst = [], [], 0.0
    for cid in CaseId:
        passed_b = b if cid in (CaseId.A, CaseId.D) else None
        state, op = case_configuration(cid, args.mi, a, c, passed_b)
        value = sandwich(state, op)
        expected = int(args.mi) if cid in (CaseId.D, CaseId.E) else analytic
        worst = max(worst, abs(value - expected))
        table.append({
            "case": cid.name,
            "arrangement": cid.value,
            "basis": [state.b.theta, state.b.phi],
            "final": [op.c.theta, op.c.phi],
            "state": [cplx(x) for x in state.components],
            "operator": cmatrix(op.entries),
            "expectation": value,
            "expected": expected,
        })
        s = state.components
        rows.append([
            cid.name, state.b.theta, state.b.phi, op.c.theta, op.c.phi,
            s[0].real, s[0].imag, s[1].real, s[1].imag, value, expected, value - expected,
        ])
    headers = [
        "case", "b_theta", "b_phi", "c_theta", "c_phi", "state_up_re", "state_up_im",
        "state_down_re", "state_down_im", "expectation", "expected", "difference",
    ]
    results = {"cases": table, "max_difference": worst, "agree": worst <= TOLERANCE}
    return Outcome("cases", _inputs(args, "mi", "a", "c", "b"), results, headers, rows, ok=worst <= TOLERANCE)


def cmd_simulate(args) -> Outcome:
    theta, phi, sym = args.start
    start = _to_dir((theta, phi), args.radians)
    stages = tuple(_to_dir(s, args.radians) for s in args.stage)
    chain = MeasurementChain(start, Projection.parse(sym), stages)
    res = run_chain(chain, args.shots, args.seed)

    results = {
        "shots": res.shots,
        "stage_counts": [list(x) for x in res.stage_counts],
        "estimate": res.estimate,
        "std_error": res.std_error,
    }
    exact_up = [None] * len(stages)
    if len(stages) <= MAX_ENUMERATED_STAGES:
        exact = enumerate_paths(chain)
        for j in range(len(stages)):
            exact_up[j] = sum(p for path, p in exact.items() if path[j] is Projection.UP)
        results["exact_expectation"] = 2.0 * last_stage_probability(exact, Projection.UP) - 1.0
        results["paths"] = [
            {
                "outcomes": "".join(m.symbol for m in path),
                "probability": p,
                "count": res.path_counts[path],
            }
            for path, p in exact.items()
        ]
    rows = [
        [j + 1, *args.stage[j], n_up, n_down, n_up / res.shots, exact_up[j]]
        for j, (n_up, n_down) in enumerate(res.stage_counts)
    ]
    inputs = {
        "start": args.start,
        "stage": args.stage,
        "shots": args.shots,
        "seed": args.seed,
        "radians": args.radians,
    }
    headers = ["stage", "theta", "phi", "n_up", "n_down", "up_fraction", "exact_up_probability"]
    return Outcome("simulate", inputs, results, headers, rows, rng=RNG_ALGORITHM)


def cmd_verify(args) -> Outcome:
    reports = run_invariant_suite(args.trials, args.seed)
    summary = summarize(reports, args.tol)
    bad = failing(reports, args.tol)
    results = {"passed": not bad, "invariants": summary}
    rows = [[s["invariant"], s["checked"], s["worst_residual"], s["passed"]] for s in summary]
    inputs = {"trials": args.trials, "seed": args.seed, "tol": args.tol}
    outcome = Outcome(
        "verify", inputs, results, ["invariant", "checked", "worst_residual", "passed"], rows,
        ok=not bad, rng="PCG64 (numpy default_rng)", tol=args.tol,
    )
    outcome.notes = [
        f"FAIL {r.name}: residual {r.worst:.3e} > {args.tol:g} at {json.dumps(r.worst_case)}"
        for r in bad
    ]
    return outcome


def _inputs(args, *names) -> dict:
    out = {}
    for n in names:
        v = getattr(args, n)
        out[n] = v.symbol if isinstance(v, Projection) else v
    out["radians"] = args.radians
    return out


# ---------------------------------------------------------------- output


def _fmt(x) -> str:
    if isinstance(x, (float, np.floating)):
        return f"{x:.15g}"
    return "" if x is None else str(x)


def render(outcome: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(outcome.envelope, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(outcome.headers)
        for row in outcome.rows:
            writer.writerow([repr(float(x)) if isinstance(x, (float, np.floating)) else _fmt(x) for x in row])
        return buf.getvalue()
    cells = [outcome.headers] + [[_fmt(x) for x in row] for row in outcome.rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(outcome.headers))]
    lines = [outcome.envelope["command"]]
    for k, r in enumerate(cells):
        lines.append("  ".join(s.rjust(w) for s, w in zip(r, widths)))
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    extras = {
        k: v for k, v in outcome.envelope["results"].items()
        if isinstance(v, (int, float, bool, str)) and not isinstance(v, dict)
    }
    for k, v in extras.items():
        lines.append(f"{k}: {_fmt(v)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--radians", action="store_true", help="angles are radians, not degrees")

    parser = argparse.ArgumentParser(
        prog="landespin",
        description="Two-direction spin-1/2 amplitudes, states, operators and expectation values.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func: Callable, help_: str):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("amplitude", cmd_amplitude, "amplitude for mi along a to be found as mf along c")
    p.add_argument("--mi", type=_projection, required=True)
    p.add_argument("--a", type=_pair, required=True, metavar="THETA,PHI")
    p.add_argument("--mf", type=_projection, required=True)
    p.add_argument("--c", type=_pair, required=True, metavar="THETA,PHI")

    p = add("state", cmd_state, "spin state prepared along a, in the b basis")
    p.add_argument("--mi", type=_projection, required=True)
    p.add_argument("--a", type=_pair, required=True, metavar="THETA,PHI")
    p.add_argument("--b", type=_pair, default=list(DEFAULT_BASIS), metavar="THETA,PHI")

    p = add("operator", cmd_operator, "spin component along c in the b basis")
    p.add_argument("--c", type=_pair, required=True, metavar="THETA,PHI")
    p.add_argument("--b", type=_pair, default=list(DEFAULT_BASIS), metavar="THETA,PHI")
    p.add_argument("--compare-trig", action="store_true", help="also show the closed trig form and differences")

    p = add("eigvec", cmd_eigvec, "eigenvectors of the operator along c in the b basis")
    p.add_argument("--c", type=_pair, required=True, metavar="THETA,PHI")
    p.add_argument("--b", type=_pair, default=list(DEFAULT_BASIS), metavar="THETA,PHI")

    p = add("expect", cmd_expect, "expectation value by every available route")
    p.add_argument("--mi", type=_projection, required=True)
    p.add_argument("--a", type=_pair, required=True, metavar="THETA,PHI")
    p.add_argument("--c", type=_pair, metavar="THETA,PHI")
    p.add_argument("--b", type=_pair, metavar="THETA,PHI")
    p.add_argument("--case", choices=[c.name for c in CaseId] + [c.name.lower() for c in CaseId])

    p = add("cases", cmd_cases, "state, operator and expectation for cases A-E")
    p.add_argument("--mi", type=_projection, default=Projection.UP)
    p.add_argument("--a", type=_pair, default=[0.0, 0.0], metavar="THETA,PHI")
    p.add_argument("--c", type=_pair, default=[60.0, 0.0], metavar="THETA,PHI")
    p.add_argument("--b", type=_pair, metavar="THETA,PHI", help="basis axis for cases A and D (default 0,180)")

    p = add("simulate", cmd_simulate, "Monte Carlo of sequential measurements")
    p.add_argument("--start", type=_start, required=True, metavar="THETA,PHI,+/-")
    p.add_argument("--stage", type=_pair, action="append", required=True, metavar="THETA,PHI")
    p.add_argument("--shots", type=_positive_int, default=100_000)
    p.add_argument("--seed", type=_seed, default=0)

    p = add("verify", cmd_verify, "randomized sweep of every invariant")
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--seed", type=_seed, default=1)
    p.add_argument("--tol", type=float, default=TOLERANCE)

    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    stdout.write(render(outcome, args.format))
    for note in outcome.notes:
        print(note, file=sys.stderr)
    return EXIT_OK if outcome.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
