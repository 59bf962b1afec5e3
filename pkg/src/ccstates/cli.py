"""Command-line front end.

Subcommands::

    ccstates state (--alpha A | --tau TAU | --temperature T)
    ccstates sweep --t-min 0 --t-max 2 --steps 21
    ccstates verify [--alpha-max 1.4]
    ccstates plot-data T1 [T2 ...]

Shared options (``--omega``, ``--gamma``, ``--hbar``, ``--kb``, ``--format``,
``--tol``, ``--config``, ``--output``) go after the subcommand.  A config
file holds ``key = value`` lines with the same keys; flags override it.

Exit codes: 0 success, 1 failed verification, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import moments, states, verification
from .states import AlphaState, Constants, ThermalSpec

SWEEP_COLUMNS = (
    "T", "alpha", "tau", "var_q", "var_p", "cov_pq", "correlator",
    "sur_lhs", "sur_rhs", "planck_energy", "effective_action", "square_area",
)
PLOT_COLUMNS = ("T", "side", "area", "Q1", "P1", "Q2", "P2", "Q3", "P3", "Q4", "P4")

_DEFAULTS = {"omega": 1.0, "gamma": None, "hbar": 1.0, "kb": 1.0, "format": "csv", "tol": None}
_FLOAT_KEYS = {"omega", "gamma", "hbar", "kb", "tol"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    omega: float = 1.0
    gamma: float = 1.0
    hbar: float = 1.0
    k_B: float = 1.0
    tol: float | None = None
    output_format: str = "csv"

    @property
    def constants(self) -> Constants:
        return Constants(self.hbar, self.k_B)

    def require_identified(self):
        if not math.isclose(self.gamma, self.omega, rel_tol=1e-12):
            raise UsageError(f"this command needs gamma == omega (got gamma={self.gamma}, omega={self.omega})")


@dataclass(frozen=True)
class SweepRow:
    T: float
    alpha: float
    tau: float
    var_q: float
    var_p: float
    cov_pq: float
    correlator: float
    sur_lhs: float
    sur_rhs: float
    planck_energy: float
    effective_action: float
    square_area: float


def read_config(path: str) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip().lower().replace("-", "_")
            if key == "k_b":
                key = "kb"
            if not sep or key not in _DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unrecognized line {raw.strip()!r}")
            value = value.strip()
            try:
                values[key] = float(value) if key in _FLOAT_KEYS else value
            except ValueError:
                raise UsageError(f"{path}:{lineno}: {key} needs a number, got {value!r}") from None
    return values


def build_config(args: argparse.Namespace) -> RunConfig:
    merged = dict(_DEFAULTS)
    if args.config:
        merged.update(read_config(args.config))
    for key in _DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    if merged["format"] not in ("csv", "json"):
        raise UsageError(f"format must be csv or json, got {merged['format']!r}")
    for key in ("omega", "hbar", "kb"):
        if not (math.isfinite(merged[key]) and merged[key] > 0):
            raise UsageError(f"--{key} must be positive")
    gamma = merged["gamma"] if merged["gamma"] is not None else merged["omega"]
    if not (math.isfinite(gamma) and gamma > 0):
        raise UsageError("--gamma must be positive")
    return RunConfig(merged["omega"], gamma, merged["hbar"], merged["kb"], merged["tol"], merged["format"])


# ----------------------------------------------------------------------------
# formatting

def fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ----------------------------------------------------------------------------
# commands

def _temperature_of(state: AlphaState) -> float:
    return 0.0 if state.alpha == 0 else states.temperature_from_alpha(state)


def state_report(state: AlphaState) -> dict:
    """Every closed-form quantity for one state, grouped by kind."""
    spec = states.to_thermal(state)
    return {
        "parameters": {
            "alpha": state.alpha,
            "tau": states.tau_from_alpha(state.alpha),
            "temperature": _temperature_of(state),
            "omega": spec.omega,
            "gamma": state.gamma,
            "hbar": state.constants.hbar,
            "k_B": state.constants.k_B,
        },
        "moments": asdict(moments.moment_set(state)),
        "uncertainty": asdict(moments.sur_report(state)),
        "thermal": {
            "planck_energy": moments.planck_energy(spec),
            "square_area": moments.phase_plane_square(spec).area,
        },
    }


def cmd_state(args, cfg: RunConfig) -> str:
    cfg.require_identified()
    if args.alpha is not None:
        state = AlphaState(args.alpha, cfg.gamma, cfg.constants)
    elif args.tau is not None:
        if not args.tau >= 0:
            raise UsageError("tau must be >= 0")
        state = states.from_bogoliubov(states.BogoliubovState(args.tau, 0.25 * math.pi, cfg.omega, cfg.constants))
    else:
        if not args.temperature >= 0:
            raise UsageError("temperature must be >= 0")
        state = states.from_thermal(ThermalSpec(args.temperature, cfg.omega, cfg.constants))
    moments.variance_q(state)  # rejects alpha too close to pi/2 before any output
    report = state_report(state)
    if cfg.output_format == "json":
        return to_json(report)
    flat = [(f"{group}.{key}", value) for group, block in report.items() for key, value in block.items()]
    return to_csv(("quantity", "value"), flat)


def sweep_row(temperature: float, cfg: RunConfig) -> SweepRow:
    spec = ThermalSpec(temperature, cfg.omega, cfg.constants)
    state = states.from_thermal(spec)
    ms = moments.moment_set(state)
    rep = moments.sur_report(state)
    return SweepRow(
        T=temperature,
        alpha=state.alpha,
        tau=states.tau_from_alpha(state.alpha),
        var_q=ms.var_q,
        var_p=ms.var_p,
        cov_pq=ms.cov_pq,
        correlator=ms.correlator_mag,
        sur_lhs=rep.sur_lhs,
        sur_rhs=rep.sur_rhs,
        planck_energy=moments.planck_energy(spec),
        effective_action=rep.effective_action,
        square_area=moments.phase_plane_square(spec).area,
    )


def cmd_sweep(args, cfg: RunConfig) -> str:
    cfg.require_identified()
    if not (0 <= args.t_min < args.t_max) or not math.isfinite(args.t_max):
        raise UsageError("need 0 <= t_min < t_max")
    if args.steps < 2:
        raise UsageError("steps must be >= 2")
    temperatures = np.linspace(args.t_min, args.t_max, args.steps)
    rows = [sweep_row(float(T), cfg) for T in temperatures]
    if cfg.output_format == "json":
        return to_json([asdict(r) for r in rows])
    names = [f.name for f in fields(SweepRow)]
    return to_csv(SWEEP_COLUMNS, ([getattr(r, n) for n in names] for r in rows))


def cmd_verify(args, cfg: RunConfig) -> tuple[str, int]:
    if not 0 <= args.alpha_max <= moments.ALPHA_LIMIT:
        raise UsageError("alpha-max must lie in [0, pi/2 - 1e-6]")
    results = verification.run_checks(cfg.constants, args.alpha_max, cfg.tol)
    failed = [r for r in results if not r.passed]
    if cfg.output_format == "json":
        text = to_json({
            "passed": not failed,
            "checks": [
                {"name": r.name, "observed": r.observed, "tolerance": r.tolerance, "kind": r.kind, "passed": r.passed}
                for r in results
            ],
        })
    else:
        text = to_csv(
            ("check", "observed", "tolerance", "kind", "status"),
            ((r.name, r.observed, r.tolerance, r.kind, "pass" if r.passed else "FAIL") for r in results),
        )
    for r in failed:
        bound = ">" if r.kind == "min" else "<="
        print(f"FAILED {r.name}: observed {r.observed:.3e}, required {bound} {r.tolerance:.1e}", file=sys.stderr)
    return text, 1 if failed else 0


def cmd_plot_data(args, cfg: RunConfig) -> str:
    rows = []
    for T in args.temperatures:
        if not (math.isfinite(T) and T >= 0):
            raise UsageError(f"temperatures must be >= 0, got {T}")
        sq = moments.phase_plane_square(ThermalSpec(T, cfg.omega, cfg.constants))
        h = 0.5 * sq.side_Q
        corners = (-h, -h, h, -h, h, h, -h, h)
        rows.append((T, sq.side_Q, sq.area, *corners))
    if cfg.output_format == "json":
        return to_json([dict(zip(PLOT_COLUMNS, row)) for row in rows])
    return to_csv(PLOT_COLUMNS, rows)


# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--omega", type=float, help="oscillator frequency (default 1)")
    common.add_argument("--gamma", type=float, help="stiffness of the alpha state (default: omega)")
    common.add_argument("--hbar", type=float, help="Planck constant (default 1)")
    common.add_argument("--kb", type=float, help="Boltzmann constant (default 1)")
    common.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
    common.add_argument("--tol", type=float, help="override every verification tolerance")
    common.add_argument("--config", help="key = value file with defaults for the options above")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="ccstates", description="Correlated coherent state toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("state", parents=[common], help="full report for one state")
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--alpha", type=float)
    sel.add_argument("--tau", type=float)
    sel.add_argument("--temperature", type=float)

    p = sub.add_parser("sweep", parents=[common], help="table of observables over a temperature range")
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=11)

    p = sub.add_parser("verify", parents=[common], help="run the numerical oracle checks")
    p.add_argument("--alpha-max", type=float, default=1.4)

    p = sub.add_parser("plot-data", parents=[common], help="phase-plane squares for a list of temperatures")
    p.add_argument("temperatures", type=float, nargs="+")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = 0
    try:
        cfg = build_config(args)
        if args.command == "state":
            text = cmd_state(args, cfg)
        elif args.command == "sweep":
            text = cmd_sweep(args, cfg)
        elif args.command == "verify":
            text, status = cmd_verify(args, cfg)
        else:
            text = cmd_plot_data(args, cfg)
    except (UsageError, ValueError, OSError) as exc:
        print(f"ccstates {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
