"""Batch front end: lemma audits, invariant suites, and cycle experiments.

Exit codes: 0 all checks passed, 1 a scientific check failed (an inequality
or the second law was violated beyond tolerance), 2 usage or config error.
Same command plus same seed always produces byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace

import numpy as np

from .composite import Partition
from .dynamics import CycleConfig, Trajectory, run_cycle_experiment, verify_second_law
from .errors import ConfigParse, EntroflowError
from .rng import RngSeed
from .states import validate_density
from .suites import lemma_audit, quantum_checks

SECOND_LAW_TOL = 1e-8

ENV_SEED = "ENTROFLOW_SEED"


@dataclass(frozen=True, eq=False)
class RunConfig:
    """A cycle experiment plus the batch fields the CLI layers on top:
    trial count, output format, and destination."""

    template: CycleConfig
    trials: int = 1
    fmt: str = "csv"
    out: str | None = None

    def __post_init__(self):
        if self.fmt not in ("csv", "json"):
            raise ConfigParse(f"format must be csv or json, got {self.fmt!r}")
        if self.trials < 1:
            raise ConfigParse(f"trials must be >= 1, got {self.trials}")

    def cycle_config(self, trial_index: int) -> CycleConfig:
        """Trial t runs on sub-stream base_stream + t of the base seed."""
        if self.trials == 1:
            return self.template
        seed = self.template.seed
        return replace(self.template, seed=RngSeed(seed.seed, seed.stream + trial_index))


def _fmt(x) -> str:
    """Serialize one scalar; floats carry 17 significant digits."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


# -- report serialization (lemmas / check) -----------------------------------

def _flatten(report: dict, prefix: str = ""):
    for key, value in report.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, prefix=f"{name}.")
        elif isinstance(value, (list, tuple)):
            yield name, ";".join(_fmt(v) for v in value)
        else:
            yield name, _fmt(value)


def _report_text(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = ["metric,value"]
    lines += [f"{k},{v}" for k, v in _flatten(report)]
    return "\n".join(lines) + "\n"


# -- trajectory serialization -------------------------------------------------

def _step_row(step, parts: int) -> list[str]:
    assert len(step.entropy_parts) == parts
    row = [str(step.cycle), _fmt(step.time), _fmt(step.information_nats),
           _fmt(step.entropy_total)]
    row += [_fmt(s) for s in step.entropy_parts]
    row.append(_fmt(step.correlation_surrendered))
    return row


def trajectories_to_csv(trajectories: list[Trajectory]) -> str:
    """Fixed schema: cycle,time,information_nats,entropy_total,
    entropy_part_<i>...,correlation_surrendered. Runs with more than one
    trial prepend a `trial` column."""
    parts = trajectories[0].partition.parts
    header = (["cycle", "time", "information_nats", "entropy_total"]
              + [f"entropy_part_{i}" for i in range(parts)]
              + ["correlation_surrendered"])
    multi = len(trajectories) > 1
    if multi:
        header = ["trial"] + header
    lines = [",".join(header)]
    for t_index, traj in enumerate(trajectories):
        for step in traj.steps:
            row = _step_row(step, parts)
            if multi:
                row = [str(t_index)] + row
            lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def trajectories_to_json(trajectories: list[Trajectory], run_meta: dict) -> str:
    parts = trajectories[0].partition.parts
    payload = dict(run_meta)
    payload["trajectories"] = [
        {
            "trial": t_index,
            "steps": [
                {
                    "cycle": step.cycle,
                    "time": step.time,
                    "information_nats": step.information_nats,
                    "entropy_total": step.entropy_total,
                    **{f"entropy_part_{i}": step.entropy_parts[i] for i in range(parts)},
                    "correlation_surrendered": step.correlation_surrendered,
                }
                for step in traj.steps
            ],
        }
        for t_index, traj in enumerate(trajectories)
    ]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _write(text: str, out_path: str | None):
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# -- config parsing -----------------------------------------------------------

_SCALAR_KEYS = {
    "cycles": int, "seed": int, "stream": int, "trials": int, "initial_rank": int,
    "dt": float, "local_strength": float, "coupling_strength": float, "k_B": float,
    "initial_state": str, "format": str, "out": str,
    "fixed_hamiltonian": bool,
}


def _parse_flat_value(key: str, raw: str, lineno: int):
    kind = _SCALAR_KEYS.get(key)
    if key == "partition":
        try:
            return [int(tok) for tok in raw.replace(" ", "").split(",") if tok]
        except ValueError:
            raise ConfigParse(f"line {lineno}: partition must be comma-separated integers")
    if kind is None:
        raise ConfigParse(f"line {lineno}: unknown key {key!r}")
    if kind is bool:
        if raw.lower() in ("true", "1", "yes"):
            return True
        if raw.lower() in ("false", "0", "no"):
            return False
        raise ConfigParse(f"line {lineno}: field {key!r} expects true/false, got {raw!r}")
    try:
        return kind(raw)
    except ValueError:
        raise ConfigParse(f"line {lineno}: field {key!r} expects {kind.__name__}, got {raw!r}")


def parse_config(text: str) -> dict:
    """Parse a run config: JSON if it begins with '{', else `key = value`
    lines with '#' comments."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigParse(f"JSON error at line {exc.lineno}, column {exc.colno}: {exc.msg}")
        if not isinstance(data, dict):
            raise ConfigParse("top-level JSON value must be an object")
        unknown = set(data) - set(_SCALAR_KEYS) - {"partition", "initial_matrix"}
        if unknown:
            raise ConfigParse(f"unknown keys: {sorted(unknown)}")
        return data

    data = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParse(f"line {lineno}: expected `key = value`, got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        data[key] = _parse_flat_value(key, raw, lineno)
    return data


def _matrix_from_json(rows) -> np.ndarray:
    try:
        arr = np.array([[complex(entry[0], entry[1]) for entry in row] for row in rows])
    except (TypeError, IndexError):
        raise ConfigParse("initial_matrix must be rows of [re, im] pairs")
    return arr


def build_cycle_config(data: dict, base_seed: RngSeed) -> CycleConfig:
    if "partition" not in data:
        raise ConfigParse("missing required key `partition`")
    if "cycles" not in data:
        raise ConfigParse("missing required key `cycles`")
    initial_matrix = data.get("initial_matrix")
    if initial_matrix is not None:
        initial_matrix = _matrix_from_json(initial_matrix)
    try:
        cfg = CycleConfig(
            partition=Partition(tuple(data["partition"])),
            cycles=int(data["cycles"]),
            seed=base_seed,
            dt=float(data.get("dt", 1.0)),
            local_strength=float(data.get("local_strength", 1.0)),
            coupling_strength=float(data.get("coupling_strength", 1.0)),
            k_B=float(data.get("k_B", 1.0)),
            initial_state=data.get("initial_state", "pure-random"),
            initial_rank=data.get("initial_rank"),
            initial_matrix=initial_matrix,
            fixed_hamiltonian=bool(data.get("fixed_hamiltonian", False)),
        )
    except (ValueError, TypeError, EntroflowError) as exc:
        raise ConfigParse(f"invalid cycle configuration: {exc}")
    if cfg.initial_state == "explicit":
        try:
            validate_density(cfg.initial_matrix)
        except EntroflowError as exc:
            raise ConfigParse(f"initial_matrix is not a valid density matrix: {exc}")
    return cfg


# -- seed resolution ----------------------------------------------------------

def _resolve_seed(parser, flag_seed, config_seed=None, config_stream=None) -> RngSeed:
    if flag_seed is not None:
        return RngSeed(flag_seed, 0)
    if config_seed is not None:
        try:
            return RngSeed(int(config_seed), int(config_stream or 0))
        except (TypeError, ValueError) as exc:
            raise ConfigParse(f"bad seed/stream in config: {exc}")
    env = os.environ.get(ENV_SEED)
    if env is not None:
        try:
            return RngSeed(int(env), 0)
        except ValueError:
            parser.error(f"{ENV_SEED} must be an integer, got {env!r}")
    parser.error(f"no seed given: pass --seed, set it in the config, or export {ENV_SEED}")


# -- subcommands --------------------------------------------------------------

def _cmd_lemmas(parser, args) -> int:
    seed = _resolve_seed(parser, args.seed)
    report = lemma_audit(args.samples, args.max_size, seed)
    _write(_report_text(report, args.format), args.out)
    if not report["passed"]:
        print("lemma audit failed; see report for worst gaps", file=sys.stderr)
        return 1
    return 0


def _cmd_check(parser, args) -> int:
    seed = _resolve_seed(parser, args.seed)
    report = quantum_checks(args.max_dim, args.trials, seed)
    _write(_report_text(report, args.format), args.out)
    if not report["passed"]:
        failed = [k for k, v in report.items()
                  if isinstance(v, dict) and not v.get("passed", True)]
        print(f"invariant checks failed: {', '.join(failed)} (seed {seed.seed})",
              file=sys.stderr)
        return 1
    return 0


def _cmd_cycle(parser, args) -> int:
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return 2

    data = parse_config(text)
    seed = _resolve_seed(parser, args.seed, data.get("seed"), data.get("stream"))
    try:
        trials = int(data.get("trials", 1))
    except (TypeError, ValueError):
        raise ConfigParse(f"trials must be an integer, got {data.get('trials')!r}")
    out = args.out if args.out is not None else data.get("out")
    if out is not None and not isinstance(out, str):
        raise ConfigParse(f"out must be a path string, got {out!r}")
    run = RunConfig(
        template=build_cycle_config(data, seed),
        trials=trials,
        fmt=args.format or data.get("format", "csv"),
        out=out,
    )

    trajectories = [run_cycle_experiment(run.cycle_config(t)) for t in range(run.trials)]

    if run.fmt == "csv":
        text_out = trajectories_to_csv(trajectories)
    else:
        meta = {
            "partition": list(trajectories[0].partition.dims),
            "k_B": trajectories[0].k_B,
            "cycles": len(trajectories[0].steps),
            "seed": seed.seed,
            "stream": seed.stream,
            "trials": run.trials,
        }
        text_out = trajectories_to_json(trajectories, meta)
    _write(text_out, run.out)

    status = 0
    for t_index, traj in enumerate(trajectories):
        if len(traj.steps) < 2:
            continue
        report = verify_second_law(traj, tol=SECOND_LAW_TOL)
        if not report.passed:
            print(
                f"second law violated in trial {t_index}: increment "
                f"{report.worst_increment:.3e} at measurement {report.worst_index}",
                file=sys.stderr,
            )
            status = 1
    return status


def _positive_int(name):
    def convert(raw):
        value = int(raw)
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be a positive integer")
        return value
    return convert


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entroflow",
        description="Audit information conservation, entropy subadditivity, "
                    "and second-law entropy growth in entangle-collapse cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lemmas = sub.add_parser("lemmas", help="randomized audit of the classical inequalities")
    lemmas.add_argument("--samples", type=_positive_int("samples"), default=1000)
    lemmas.add_argument("--max-size", type=_positive_int("max-size"), default=16)
    lemmas.add_argument("--seed", type=int, default=None)
    lemmas.add_argument("--format", choices=("csv", "json"), default="json")
    lemmas.add_argument("--out", default=None, help="output path (default stdout)")

    cycle = sub.add_parser("cycle", help="run entangle-collapse cycles from a config file")
    cycle.add_argument("config", help="JSON or `key = value` config file")
    cycle.add_argument("--seed", type=int, default=None, help="override the config seed")
    cycle.add_argument("--format", choices=("csv", "json"), default=None)
    cycle.add_argument("--out", default=None, help="output path (default stdout)")

    check = sub.add_parser("check", help="quantum invariant suites")
    check.add_argument("--max-dim", type=_positive_int("max-dim"), default=16)
    check.add_argument("--trials", type=_positive_int("trials"), default=200)
    check.add_argument("--seed", type=int, default=None)
    check.add_argument("--format", choices=("csv", "json"), default="json")
    check.add_argument("--out", default=None, help="output path (default stdout)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "lemmas":
            return _cmd_lemmas(parser, args)
        if args.command == "check":
            return _cmd_check(parser, args)
        return _cmd_cycle(parser, args)
    except ConfigParse as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except EntroflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
