"""Hybrid quantum-classical unit commitment solver.

A three-stage heuristic per hourly problem: a simulated variational circuit
sieves the 2^N commitment space for cheap, coverage-feasible candidates;
each candidate's dispatch subproblem is solved exactly; the cheapest
feasible answer is reported.  An exhaustive enumeration oracle provides the
baseline for approximation-error measurements.
"""

from .dispatch import (
    Commitment,
    DispatchResult,
    approximation_error,
    brute_force_optimum,
    c_min,
    is_sieve_feasible,
    solve_rqp,
)
from .grid import (
    GeneratorSpec,
    GridInstance,
    LoadProfile,
    builtin_instance,
    cost,
    load_instance,
    load_profile,
)
from .qsim import AnsatzSpec, StateVector, build_ansatz, run_circuit, sample
from .qubo import QuboProblem, WarmStart, penalty, qubo_value, relax, warm_start_angles
from .vqa import (
    HourlySolution,
    HorizonReport,
    VqaConfig,
    collect_candidates,
    inference,
    optimize_parameters,
    solve_hourly,
    solve_uc,
)

__version__ = "0.1.0"

__all__ = [
    "Commitment",
    "DispatchResult",
    "approximation_error",
    "brute_force_optimum",
    "c_min",
    "is_sieve_feasible",
    "solve_rqp",
    "GeneratorSpec",
    "GridInstance",
    "LoadProfile",
    "builtin_instance",
    "cost",
    "load_instance",
    "load_profile",
    "AnsatzSpec",
    "StateVector",
    "build_ansatz",
    "run_circuit",
    "sample",
    "QuboProblem",
    "WarmStart",
    "penalty",
    "qubo_value",
    "relax",
    "warm_start_angles",
    "HourlySolution",
    "HorizonReport",
    "VqaConfig",
    "collect_candidates",
    "inference",
    "optimize_parameters",
    "solve_hourly",
    "solve_uc",
    "__version__",
]
