"""Command-line entry point.

Subcommands:
  solve        end-to-end run over a load profile, with reports and traces
  dispatch     exact dispatch of one commitment at one load
  oracle       enumeration optimum for one load or a whole profile
  ansatz-info  gate/parameter counts of the circuit family
  inference    pipeline suffix from a stored parameter file

Exit codes: 0 success, 1 usage/validation error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import vqa
from .dispatch import (
    Commitment,
    DispatchError,
    brute_force_optimum,
    solve_rqp,
)
from .grid import (
    BUILTIN_NAMES,
    GridError,
    GridInstance,
    LoadProfile,
    builtin_instance,
    load_instance,
    load_profile,
)
from .qsim import AnsatzSpec, butterfly_stages, circuit_listing
from .qubo import InfeasibleRelaxationError
from .vqa import HorizonReport, VqaConfig

REPORT_SCHEMA_VERSION = 1

# Penalty weights used by the benchmark runs; custom instances must set one.
_DEFAULT_LAMBDA = {"uc3": 450_000.0, "uc10": 450_000.0, "uc26": 700_000.0}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise UsageError(message)


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--instance", choices=BUILTIN_NAMES,
                   help="builtin benchmark instance")
    p.add_argument("--generators", metavar="CSV",
                   help="generator table (header: unit,pmin,pmax,c,b,a)")
    p.add_argument("--loads", metavar="CSV",
                   help="load profile (header: period,load)")


def _resolve_instance(args) -> tuple[GridInstance, LoadProfile | None]:
    if args.instance and args.generators:
        raise UsageError("give either --instance or --generators, not both")
    if args.instance:
        instance, profile = builtin_instance(args.instance)
        if args.loads:
            profile = load_profile(args.loads)
        return instance, profile
    if args.generators:
        instance = load_instance(args.generators, name=Path(args.generators).stem)
        profile = load_profile(args.loads) if args.loads else None
        return instance, profile
    raise UsageError("an instance is required (--instance or --generators)")


def _resolve_lambda(args, instance: GridInstance) -> float:
    if args.lam is not None:
        return args.lam
    if instance.name in _DEFAULT_LAMBDA:
        return _DEFAULT_LAMBDA[instance.name]
    raise UsageError("--lambda is required for custom instances")


def _resolve_error_mode(flag: bool | None, instance: GridInstance) -> bool:
    if flag is not None:
        return flag
    return instance.n <= 10


def _json_default(obj):
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    raise TypeError(f"not JSON serializable: {type(obj)}")


def _dump_json(data) -> str:
    return json.dumps(data, indent=2, default=_json_default) + "\n"


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def _config_echo(config: VqaConfig, instance_name: str, threads: int,
                 compute_error: bool) -> dict:
    return {
        "instance": instance_name,
        "layers": config.layers,
        "lambda": config.lam,
        "shots_train": config.shots_train,
        "shots_final": config.shots_final,
        "max_candidates": config.max_candidates,
        "trials": config.trials,
        "seed": config.seed,
        "epsilon_warm": config.epsilon_warm,
        "rho_begin": config.rho_begin,
        "rho_end": config.rho_end,
        "max_iterations": config.max_iterations,
        "threads": threads,
        "compute_error": compute_error,
    }


def _solution_entry(sol: vqa.HourlySolution, trial: int) -> dict:
    return {
        "trial": trial,
        "assignment": str(sol.commitment),
        "powers": [float(p) for p in sol.dispatch.powers],
        "total_cost": float(sol.dispatch.total_cost),
        "marginal_price": float(sol.dispatch.marginal_price),
        "iterations": sol.iterations,
        "candidates_evaluated": sol.candidates_evaluated,
        "fallback_used": sol.fallback_used,
        "exact_cost": None if sol.exact_cost is None else float(sol.exact_cost),
        "error_pct": None if sol.error_pct is None else float(sol.error_pct),
    }


def _report_body(report: HorizonReport, echo: dict) -> dict:
    periods = []
    best = report.best_per_period()
    for period, row in enumerate(report.solutions):
        trials = [
            _solution_entry(s, t) for t, s in enumerate(row) if s is not None
        ]
        periods.append({
            "period": period,
            "load": float(report.loads[period]),
            "trials": trials,
            "best": _solution_entry(best[period], row.index(best[period])),
        })
    aggregates = {
        "periods": len(report.solutions),
        "trials": report.config.trials,
        "total_cost_best": float(report.total_cost_best),
        "mean_iterations": float(report.mean_iterations),
        "mean_error_pct": (None if report.mean_error_pct is None
                           else float(report.mean_error_pct)),
        "failures": [
            {"period": p, "trial": t, "error": msg} for p, t, msg in report.failures
        ],
    }
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "instance": report.instance_name,
        "config": echo,
        "periods": periods,
        "aggregates": aggregates,
    }


def summary_csv(report: HorizonReport) -> str:
    """Per-period best solutions in CSV form (deterministic for a fixed run)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["period", "load", "assignment", "cost", "exact", "error_pct"])
    for period, sol in enumerate(report.best_per_period()):
        writer.writerow([
            period,
            repr(float(sol.load)),
            str(sol.commitment),
            repr(float(sol.dispatch.total_cost)),
            "" if sol.exact_cost is None else repr(float(sol.exact_cost)),
            "" if sol.error_pct is None else repr(float(sol.error_pct)),
        ])
    return out.getvalue()


def _trace_csv(trace: vqa.OptimizerTrace) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["iteration", "energy", "best_energy"])
    best = trace.best_energy_so_far()
    for i, (e, be) in enumerate(zip(trace.energies, best)):
        writer.writerow([i, repr(float(e)), repr(float(be))])
    return out.getvalue()


def _write_outputs(report: HorizonReport, body: dict, timings: dict,
                   out_dir: str) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    full = dict(body)
    full["timings"] = timings
    (out / "report.json").write_text(_dump_json(full))
    (out / "summary.csv").write_text(summary_csv(report))
    best = report.best_per_period()
    for period, row in enumerate(report.solutions):
        for trial, sol in enumerate(row):
            if sol is not None and sol.trace is not None:
                (out / f"trace_p{period}_t{trial}.csv").write_text(
                    _trace_csv(sol.trace))
        sol = best[period]
        if sol.trace is not None:
            vqa.save_params(
                out / f"params_p{period}.json",
                n_qubits=len(sol.commitment),
                layers=report.config.layers,
                params=sol.trace.parameters[sol.trace.best_index],
                epsilon_warm=report.config.epsilon_warm,
                lam=report.config.lam,
                load=sol.load,
                period=period,
            )


def _print_summary(report: HorizonReport) -> None:
    print(f"{'period':>6} {'load':>9} {'assignment':>28} {'cost':>13} "
          f"{'exact':>13} {'error%':>8}")
    for period, sol in enumerate(report.best_per_period()):
        exact = "-" if sol.exact_cost is None else f"{sol.exact_cost:.2f}"
        err = "-" if sol.error_pct is None else f"{sol.error_pct:.3f}"
        print(f"{period:>6} {sol.load:>9.1f} {str(sol.commitment):>28} "
              f"{sol.dispatch.total_cost:>13.2f} {exact:>13} {err:>8}")
    agg = [f"total_cost={report.total_cost_best:.2f}",
           f"mean_iterations={report.mean_iterations:.2f}"]
    if report.mean_error_pct is not None:
        agg.append(f"mean_error_pct={report.mean_error_pct:.4f}")
    if report.failures:
        agg.append(f"failures={len(report.failures)}")
    print("  ".join(agg))


def cmd_solve(args) -> int:
    instance, profile = _resolve_instance(args)
    if profile is None:
        raise UsageError("solve needs a load profile (--loads)")
    lam = _resolve_lambda(args, instance)
    compute_error = _resolve_error_mode(args.error, instance)
    threads = args.threads if args.threads else (os.cpu_count() or 1)
    config = VqaConfig(
        layers=args.layers,
        shots_train=args.shots_train,
        shots_final=args.shots_final,
        max_candidates=args.max_candidates,
        lam=lam,
        epsilon_warm=args.epsilon_warm,
        rho_end=args.tol,
        max_iterations=args.max_iterations,
        seed=args.seed,
        trials=args.trials,
    )
    t0 = time.perf_counter()
    report = vqa.solve_uc(
        instance, profile, config,
        compute_error=compute_error, threads=threads,
        keep_traces=True,
    )
    wall = time.perf_counter() - t0
    echo = _config_echo(config, instance.name, threads, compute_error)
    body = _report_body(report, echo)
    timings = _aggregate_timings(report, wall)
    if args.json:
        print(_dump_json(body), end="")
    else:
        _print_summary(report)
    if args.out:
        _write_outputs(report, body, timings, args.out)
    return 0 if not report.failures else 2


def _aggregate_timings(report: HorizonReport, wall: float) -> dict:
    optimize = sum(s.timings.get("optimize_s", 0.0) for s in report.all_solutions())
    tail = sum(s.timings.get("sample_refine_s", 0.0) for s in report.all_solutions())
    return {
        "optimize_s": optimize,
        "sample_refine_s": tail,
        "oracle_s": report.oracle_s,
        "wall_s": wall,
    }


# ---------------------------------------------------------------------------
# dispatch / oracle / ansatz-info / inference
# ---------------------------------------------------------------------------

def _parse_commitment(text: str, n: int) -> Commitment:
    try:
        u = Commitment.from_string(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(u) != n:
        raise UsageError(f"commitment length {len(u)} != instance size {n}")
    return u


def cmd_dispatch(args) -> int:
    instance, _ = _resolve_instance(args)
    u = _parse_commitment(args.u, instance.n)
    result = solve_rqp(instance, u, args.load)
    if args.json:
        print(_dump_json({
            "assignment": str(u),
            "load": args.load,
            "status": result.status,
            "powers": [float(p) for p in result.powers],
            "total_cost": float(result.total_cost) if result.feasible else None,
            "marginal_price": float(result.marginal_price) if result.feasible else None,
        }), end="")
    elif result.feasible:
        print(f"assignment {u}  load {args.load:g}")
        print("powers: " + " ".join(f"{p:g}" for p in result.powers))
        print(f"marginal_price {result.marginal_price:.6f}")
        print(f"total_cost {result.total_cost:.4f}")
    else:
        print(f"assignment {u}  load {args.load:g}")
        print("status infeasible")
    return 0


def cmd_oracle(args) -> int:
    instance, profile = _resolve_instance(args)
    if args.load is not None:
        loads = [args.load]
    elif profile is not None:
        loads = list(profile.loads)
    else:
        raise UsageError("oracle needs --load or a load profile")
    rows = []
    for t, load in enumerate(loads):
        u, result = brute_force_optimum(instance, load)
        rows.append({
            "period": t,
            "load": load,
            "assignment": str(u),
            "total_cost": float(result.total_cost),
        })
    if args.json:
        print(_dump_json(rows), end="")
    else:
        for r in rows:
            print(f"load {r['load']:g}: assignment {r['assignment']} "
                  f"cost {r['total_cost']:.4f}")
    return 0


def cmd_ansatz_info(args) -> int:
    stages = butterfly_stages(args.qubits)
    sizes = [len(s) for s in stages]
    rows = []
    for layers in range(1, args.layers + 1):
        rows.append({
            "layers": layers,
            "two_qubit_gates": layers * sum(sizes),
            "parameters": layers * (len(sizes) + 1),
        })
    if args.json:
        print(_dump_json({"qubits": args.qubits, "stage_sizes": sizes, "rows": rows}),
              end="")
    else:
        print(f"qubits {args.qubits}  stages {len(sizes)}  sizes {sizes}")
        print(f"{'layers':>6} {'TQG':>6} {'params':>7}")
        for r in rows:
            print(f"{r['layers']:>6} {r['two_qubit_gates']:>6} {r['parameters']:>7}")
    if args.dump:
        spec = AnsatzSpec(n_qubits=args.qubits, layers=args.layers,
                          stages=stages, init_angles=(0.0,) * args.qubits)
        print(circuit_listing(spec), end="")
    return 0


def cmd_inference(args) -> int:
    instance, profile = _resolve_instance(args)
    payload = vqa.load_params(args.params)
    if payload["n_qubits"] != instance.n:
        raise UsageError(
            f"params file is for {payload['n_qubits']} units but instance "
            f"{instance.name!r} has {instance.n}"
        )
    expected_sizes = [len(s) for s in butterfly_stages(instance.n)]
    if payload["stage_sizes"] != expected_sizes:
        raise UsageError(
            f"params file stage sizes {payload['stage_sizes']} do not match "
            f"{expected_sizes}"
        )
    period = args.period if args.period is not None else int(payload["period"])
    if profile is not None and 0 <= period < profile.n_periods:
        load = profile.loads[period]
    else:
        load = float(payload["load"])
    config = VqaConfig(
        layers=int(payload["layers"]),
        shots_final=args.shots,
        max_candidates=args.max_candidates,
        lam=float(payload["lambda"]),
        epsilon_warm=float(payload["epsilon_warm"]),
        seed=args.seed,
    )
    params = np.array(payload["params"], dtype=float)
    if params.shape[0] != config.layers * (len(expected_sizes) + 1):
        raise UsageError(
            f"params file holds {params.shape[0]} angles; expected "
            f"{config.layers * (len(expected_sizes) + 1)}"
        )
    compute_error = _resolve_error_mode(args.error, instance)
    sol = vqa.inference(instance, load, params, config,
                        period=period, compute_error=compute_error)
    if args.json:
        print(_dump_json({
            "period": period,
            "load": load,
            **_solution_entry(sol, 0),
        }), end="")
    else:
        exact = "-" if sol.exact_cost is None else f"{sol.exact_cost:.4f}"
        err = "-" if sol.error_pct is None else f"{sol.error_pct:.3f}"
        print(f"period {period}  load {load:g}")
        print(f"assignment {sol.commitment}  cost {sol.dispatch.total_cost:.4f}  "
              f"exact {exact}  error% {err}")
        print(f"candidates_evaluated {sol.candidates_evaluated}  "
              f"fallback {sol.fallback_used}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="ucsieve",
                     description="hybrid quantum-classical unit commitment solver")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a whole load profile")
    _add_instance_args(p)
    p.add_argument("--layers", type=int, default=1)
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="constraint penalty weight")
    p.add_argument("--shots-train", type=int, default=512)
    p.add_argument("--shots-final", type=int, default=5000)
    p.add_argument("--max-candidates", type=int, default=128)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon-warm", type=float, default=0.1)
    p.add_argument("--tol", type=float, default=1e-6,
                   help="final trust-region radius")
    p.add_argument("--max-iterations", type=int, default=10_000)
    p.add_argument("--error", action=argparse.BooleanOptionalAction, default=None,
                   help="compare against the enumeration oracle "
                        "(default: on for instances up to 10 units)")
    p.add_argument("--threads", type=int, default=0,
                   help="worker processes over (period, trial) tasks; "
                        "0 = all cores")
    p.add_argument("--out", metavar="DIR", help="write report.json, summary.csv, "
                   "trace and parameter files here")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("dispatch", help="dispatch one commitment at one load")
    _add_instance_args(p)
    p.add_argument("--u", required=True, help="commitment string, unit 0 leftmost")
    p.add_argument("--load", type=float, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dispatch)

    p = sub.add_parser("oracle", help="enumeration optimum per load")
    _add_instance_args(p)
    p.add_argument("--load", type=float, default=None,
                   help="single load (default: every period of the profile)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("ansatz-info", help="gate and parameter counts")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--layers", type=int, default=10)
    p.add_argument("--dump", action="store_true",
                   help="also print the gate listing (via the API)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ansatz_info)

    p = sub.add_parser("inference", help="re-run sampling/refinement from "
                       "stored parameters")
    _add_instance_args(p)
    p.add_argument("--params", required=True, metavar="JSON")
    p.add_argument("--period", type=int, default=None)
    p.add_argument("--shots", type=int, default=2000)
    p.add_argument("--max-candidates", type=int, default=128)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--error", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_inference)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GridError, DispatchError, InfeasibleRelaxationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - stable exit-code contract
        print(f"runtime error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
