"""Hybrid driver: train the circuit against the sampled objective, sieve the
measured bitstrings into a candidate set, and refine each candidate with an
exact dispatch solve.

Per hourly problem the pipeline is

    relax -> build ansatz -> derivative-free training (sampled energies)
          -> final sampling -> keep cheapest coverage-feasible bitstrings
          -> dispatch each candidate -> report the cheapest.

Every random draw is seeded through a splittable hash of (seed, stream,
index) so runs are reproducible bit-for-bit, including across worker counts.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
from scipy.optimize import minimize

from . import qsim
from .dispatch import (
    Commitment,
    DispatchResult,
    approximation_error,
    brute_force_optimum,
    solve_rqp,
)
from .grid import GridInstance, LoadProfile
from .qubo import QuboProblem, greedy_round_up, relax

__all__ = [
    "VqaConfig",
    "OptimizerTrace",
    "HourlySolution",
    "HorizonReport",
    "EmptyCandidateError",
    "derive_seed",
    "optimize_parameters",
    "collect_candidates",
    "candidates_from_state",
    "solve_hourly",
    "solve_uc",
    "inference",
    "save_params",
    "load_params",
]

logger = logging.getLogger(__name__)

# Seed streams keep training draws, final sampling, and anything else on
# non-overlapping substreams of the run seed.
_STREAM_TRAIN = 0
_STREAM_FINAL = 1


class EmptyCandidateError(RuntimeError):
    """No sampled bitstring (nor the rounding fallback) was dispatchable."""


def derive_seed(*parts: int) -> int:
    """Deterministic child seed from integer components (splittable hash)."""
    if any(p < 0 for p in parts):
        raise ValueError(f"seed components must be nonnegative, got {parts}")
    return int(np.random.SeedSequence(list(parts)).generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class VqaConfig:
    """Pipeline settings; defaults mirror the benchmark protocol."""

    layers: int = 1
    shots_train: int = 512
    shots_final: int = 5000
    max_candidates: int = 128
    lam: float = 450_000.0
    epsilon_warm: float = 0.1
    rho_begin: float = 0.5
    rho_end: float = 1e-6
    max_iterations: int = 10_000
    seed: int = 0
    trials: int = 1

    def __post_init__(self) -> None:
        if self.layers < 1:
            raise ValueError(f"layers must be >= 1, got {self.layers}")
        for name in ("shots_train", "shots_final", "max_candidates", "trials"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        if not 0.0 < self.rho_end < self.rho_begin:
            raise ValueError(
                f"need 0 < rho_end < rho_begin, got {self.rho_end}, {self.rho_begin}"
            )
        if not self.lam > 0.0:
            raise ValueError(f"penalty weight must be positive, got {self.lam}")
        if not 0.0 < self.epsilon_warm < 0.5:
            raise ValueError(f"epsilon_warm must be in (0, 0.5), got {self.epsilon_warm}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.seed < 0:
            raise ValueError(f"seed must be nonnegative, got {self.seed}")


@dataclass
class OptimizerTrace:
    """One record per objective evaluation, in evaluation order."""

    energies: np.ndarray
    parameters: np.ndarray
    final_params: np.ndarray
    iterations_used: int
    best_index: int

    def best_energy_so_far(self) -> np.ndarray:
        return np.minimum.accumulate(self.energies)


@dataclass
class HourlySolution:
    """Feasible answer for one period: commitment, dispatch, and diagnostics."""

    period: int
    load: float
    commitment: Commitment
    dispatch: DispatchResult
    candidates_evaluated: int
    iterations: int
    fallback_used: bool = False
    exact_cost: float | None = None
    error_pct: float | None = None
    trace: OptimizerTrace | None = None
    timings: dict = field(default_factory=dict)


def _minimize_trust_region(fun, x0: np.ndarray, rho_begin: float, rho_end: float,
                           max_iterations: int):
    """Derivative-free linear-approximation trust-region descent.

    Steps stay within the current radius, which only shrinks, from rho_begin
    until it reaches rho_end (or the evaluation budget runs out).
    """
    return minimize(
        fun,
        x0,
        method="COBYLA",
        tol=rho_end,
        options={"rhobeg": rho_begin, "maxiter": max_iterations},
    )


def optimize_parameters(problem: QuboProblem, spec: qsim.AnsatzSpec,
                        config: VqaConfig) -> tuple[np.ndarray, OptimizerTrace]:
    """Train the circuit parameters from zero against the sampled objective.

    One iteration = one objective evaluation; each evaluation draws
    config.shots_train measurements under a seed derived from (config.seed,
    evaluation index), so reruns retrace the identical trajectory.  Returns
    the best parameters seen (the objective is noisy, so the last iterate is
    not necessarily the best) together with the full trace.
    """
    if spec.n_qubits != problem.instance.n:
        raise ValueError(
            f"ansatz spans {spec.n_qubits} qubits but instance has {problem.instance.n} units"
        )
    init = qsim.initial_state(spec)
    work = init.copy()
    prob_buf = np.empty(1 << spec.n_qubits, dtype=np.float64)
    energies: list[float] = []
    history: list[np.ndarray] = []

    def objective(x: np.ndarray) -> float:
        eval_index = len(energies)
        np.copyto(work.amplitudes, init.amplitudes)
        qsim.apply_layers(spec, x, work)
        energy = qsim.estimate_energy(
            problem, work, config.shots_train,
            derive_seed(config.seed, _STREAM_TRAIN, eval_index),
            workspace=prob_buf,
        )
        energies.append(energy)
        history.append(np.array(x, dtype=float))
        return energy

    result = _minimize_trust_region(
        objective, np.zeros(spec.n_parameters),
        config.rho_begin, config.rho_end, config.max_iterations,
    )
    best = int(np.argmin(energies))
    trace = OptimizerTrace(
        energies=np.array(energies),
        parameters=np.array(history),
        final_params=np.array(result.x, dtype=float),
        iterations_used=len(energies),
        best_index=best,
    )
    return history[best].copy(), trace


def candidates_from_state(problem: QuboProblem, state: qsim.StateVector,
                          config: VqaConfig) -> list[Commitment]:
    """Measure, deduplicate, drop bitstrings that cannot cover the load, rank
    the rest by minimum-power cost (ties toward the smaller big-endian
    value), and truncate to the candidate budget."""
    indices = qsim.sample(state, config.shots_final,
                          derive_seed(config.seed, _STREAM_FINAL))
    unique = np.unique(indices)
    inst = problem.instance
    bits = (unique[:, None] >> np.arange(inst.n)) & 1
    capacity = bits @ inst.p_max
    keep = capacity >= problem.load
    if not keep.any():
        raise EmptyCandidateError(
            f"none of {unique.size} distinct sampled bitstrings covers load {problem.load}"
        )
    unique = unique[keep]
    bits = bits[keep]
    cmin = bits @ inst.min_power_cost
    bigend = bits @ (1 << (inst.n - 1 - np.arange(inst.n, dtype=np.int64)))
    order = np.lexsort((bigend, cmin))
    chosen = unique[order][: config.max_candidates]
    return [Commitment.from_index(int(i), inst.n) for i in chosen]


def collect_candidates(problem: QuboProblem, spec: qsim.AnsatzSpec,
                       params: np.ndarray, config: VqaConfig) -> list[Commitment]:
    """Run the trained circuit and sieve its measurements into candidates."""
    state = qsim.run_circuit(spec, params)
    return candidates_from_state(problem, state, config)


def _refine(instance: GridInstance, load: float,
            candidates: list[Commitment]) -> tuple[Commitment, DispatchResult] | None:
    """Dispatch every candidate and keep the cheapest; dispatch-infeasible
    candidates are skipped, ties break to the smaller big-endian value."""
    best_key = None
    best = None
    for u in candidates:
        result = solve_rqp(instance, u, load)
        if not result.feasible:
            continue
        key = (result.total_cost, u.as_int())
        if best_key is None or key < best_key:
            best_key = key
            best = (u, result)
    return best


def _pipeline_tail(problem: QuboProblem, spec: qsim.AnsatzSpec, params: np.ndarray,
                   config: VqaConfig) -> tuple[Commitment, DispatchResult, int, bool]:
    """Candidate collection plus refinement, with the rounding fallback."""
    instance = problem.instance
    fallback_used = False
    try:
        candidates = collect_candidates(problem, spec, params, config)
    except EmptyCandidateError:
        logger.warning(
            "no coverage-feasible samples for %s load=%s; falling back to "
            "rounded relaxation", instance.name, problem.load,
        )
        candidates = [greedy_round_up(problem)]
        fallback_used = True
    n_evaluated = len(candidates)
    best = _refine(instance, problem.load, candidates)
    if best is None and not fallback_used:
        logger.warning(
            "all %d candidates dispatch-infeasible for %s load=%s; falling back "
            "to rounded relaxation", n_evaluated, instance.name, problem.load,
        )
        fallback = greedy_round_up(problem)
        n_evaluated += 1
        best = _refine(instance, problem.load, [fallback])
        fallback_used = True
    if best is None:
        raise EmptyCandidateError(
            f"no dispatchable commitment found for load {problem.load} "
            f"(fallback exhausted)"
        )
    return best[0], best[1], n_evaluated, fallback_used


def solve_hourly(instance: GridInstance, load: float, config: VqaConfig, *,
                 period: int = 0, exact_cost: float | None = None,
                 compute_error: bool = False, keep_trace: bool = True) -> HourlySolution:
    """Full pipeline for one period; see module docstring for the stages.

    If `exact_cost` is given (or `compute_error` is set and the instance is
    small enough to enumerate) the result carries the percentage gap to the
    enumeration optimum.
    """
    t0 = time.perf_counter()
    problem = QuboProblem(instance=instance, load=load, lam=config.lam)
    warm = relax(problem, config.epsilon_warm)
    spec = qsim.build_ansatz(instance.n, config.layers, warm)
    params, trace = optimize_parameters(problem, spec, config)
    t1 = time.perf_counter()
    commitment, dispatch_result, n_eval, fallback_used = _pipeline_tail(
        problem, spec, params, config)
    t2 = time.perf_counter()

    if exact_cost is None and compute_error:
        exact_cost = brute_force_optimum(instance, load)[1].total_cost
    error_pct = None
    if exact_cost is not None:
        error_pct = approximation_error(dispatch_result.total_cost, exact_cost)
    t3 = time.perf_counter()
    return HourlySolution(
        period=period,
        load=load,
        commitment=commitment,
        dispatch=dispatch_result,
        candidates_evaluated=n_eval,
        iterations=trace.iterations_used,
        fallback_used=fallback_used,
        exact_cost=exact_cost,
        error_pct=error_pct,
        trace=trace if keep_trace else None,
        timings={"optimize_s": t1 - t0, "sample_refine_s": t2 - t1, "oracle_s": t3 - t2},
    )


def inference(instance: GridInstance, load: float, params: np.ndarray,
              config: VqaConfig, *, period: int = 0,
              exact_cost: float | None = None,
              compute_error: bool = False) -> HourlySolution:
    """Pipeline suffix for pre-trained parameters: sample, sieve, refine."""
    t0 = time.perf_counter()
    problem = QuboProblem(instance=instance, load=load, lam=config.lam)
    warm = relax(problem, config.epsilon_warm)
    spec = qsim.build_ansatz(instance.n, config.layers, warm)
    params = np.asarray(params, dtype=float)
    commitment, dispatch_result, n_eval, fallback_used = _pipeline_tail(
        problem, spec, params, config)
    t1 = time.perf_counter()
    if exact_cost is None and compute_error:
        exact_cost = brute_force_optimum(instance, load)[1].total_cost
    error_pct = None
    if exact_cost is not None:
        error_pct = approximation_error(dispatch_result.total_cost, exact_cost)
    return HourlySolution(
        period=period,
        load=load,
        commitment=commitment,
        dispatch=dispatch_result,
        candidates_evaluated=n_eval,
        iterations=0,
        fallback_used=fallback_used,
        exact_cost=exact_cost,
        error_pct=error_pct,
        trace=None,
        timings={"optimize_s": 0.0, "sample_refine_s": t1 - t0, "oracle_s": 0.0},
    )


@dataclass
class HorizonReport:
    """All per-period, per-trial solutions plus aggregate statistics."""

    instance_name: str
    config: VqaConfig
    loads: tuple[float, ...]
    solutions: list[list[HourlySolution | None]]
    failures: list[tuple[int, int, str]]
    oracle_s: float = 0.0

    def best_per_period(self) -> list[HourlySolution]:
        best = []
        for period, period_solutions in enumerate(self.solutions):
            ranked = [
                (s.dispatch.total_cost, s.commitment.as_int(), t)
                for t, s in enumerate(period_solutions)
                if s is not None
            ]
            if not ranked:
                raise EmptyCandidateError(f"no successful trial for period {period}")
            best.append(period_solutions[min(ranked)[2]])
        return best

    def all_solutions(self) -> list[HourlySolution]:
        return [s for row in self.solutions for s in row if s is not None]

    @property
    def total_cost_best(self) -> float:
        return sum(s.dispatch.total_cost for s in self.best_per_period())

    @property
    def mean_iterations(self) -> float:
        sols = self.all_solutions()
        return float(np.mean([s.iterations for s in sols])) if sols else float("nan")

    @property
    def mean_error_pct(self) -> float | None:
        errors = [s.error_pct for s in self.all_solutions() if s.error_pct is not None]
        if not errors:
            return None
        return float(np.mean(errors))


def _solve_task(args) -> HourlySolution:
    instance, load, task_config, period, exact_cost, keep_trace = args
    return solve_hourly(
        instance, load, task_config,
        period=period, exact_cost=exact_cost, keep_trace=keep_trace,
    )


def solve_uc(instance: GridInstance, profile: LoadProfile, config: VqaConfig, *,
             compute_error: bool = False, threads: int = 1,
             keep_traces: bool = True) -> HorizonReport:
    """Independent hourly solves over the whole profile and all trials.

    Each (trial, period) task runs under seed derived from (config.seed,
    trial, period), so results are identical however the tasks are scheduled.
    Per-task failures are recorded and the run continues.
    """
    if profile.n_periods == 0:
        raise ValueError("load profile is empty")
    profile.validate_against(instance)

    t_oracle = time.perf_counter()
    exact_by_load: dict[float, float] = {}
    if compute_error:
        for load in profile.loads:
            if load not in exact_by_load:
                exact_by_load[load] = brute_force_optimum(instance, load)[1].total_cost
    oracle_s = time.perf_counter() - t_oracle

    tasks = []
    for period, load in enumerate(profile.loads):
        for trial in range(config.trials):
            task_config = replace(
                config, seed=derive_seed(config.seed, trial, period), trials=1)
            tasks.append(
                (instance, load, task_config, period,
                 exact_by_load.get(load), keep_traces)
            )

    solutions: list[list[HourlySolution | None]] = [
        [None] * config.trials for _ in range(profile.n_periods)
    ]
    failures: list[tuple[int, int, str]] = []

    def record(task_index: int, outcome, error: str | None) -> None:
        period, trial = divmod(task_index, config.trials)
        if error is None:
            solutions[period][trial] = outcome
        else:
            failures.append((period, trial, error))
            logger.error("period %d trial %d failed: %s", period, trial, error)

    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_solve_task, t) for t in tasks]
            for i, fut in enumerate(futures):
                try:
                    record(i, fut.result(), None)
                except Exception as exc:  # noqa: BLE001 - per-task isolation
                    record(i, None, str(exc))
    else:
        for i, task in enumerate(tasks):
            try:
                record(i, _solve_task(task), None)
            except Exception as exc:  # noqa: BLE001 - per-task isolation
                record(i, None, str(exc))

    return HorizonReport(
        instance_name=instance.name,
        config=config,
        loads=profile.loads,
        solutions=solutions,
        failures=failures,
        oracle_s=oracle_s,
    )


# ---------------------------------------------------------------------------
# Trained-parameter files (JSON) for inference runs
# ---------------------------------------------------------------------------

PARAMS_SCHEMA_VERSION = 1


def save_params(path: str | Path, *, n_qubits: int, layers: int,
                params: np.ndarray, epsilon_warm: float, lam: float,
                load: float, period: int) -> None:
    stages = qsim.butterfly_stages(n_qubits)
    payload = {
        "schema_version": PARAMS_SCHEMA_VERSION,
        "n_qubits": n_qubits,
        "layers": layers,
        "stage_sizes": [len(s) for s in stages],
        "epsilon_warm": epsilon_warm,
        "lambda": lam,
        "load": load,
        "period": period,
        "params": [float(x) for x in np.asarray(params).ravel()],
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def load_params(path: str | Path) -> dict:
    payload = json.loads(Path(path).read_text())
    if payload.get("schema_version") != PARAMS_SCHEMA_VERSION:
        raise ValueError(
            f"unsupported params schema {payload.get('schema_version')!r}"
        )
    return payload
