"""Hourly binary objective with a saturating capacity penalty, plus warm start.

The objective for an on/off vector u is

    Q(u) = c_min(u) + lam * erf(max(load - u . p_max, 0))

so any commitment whose capacity covers the load pays no penalty, and a
shortfall of even a few MW saturates the penalty to ~lam.  Values are
computed lazily per bitstring and memoized; no 2^N table is materialized.

The warm start solves the continuous relaxation of

    minimize c_min(u)  subject to  u . p_max >= load,  u in [0,1]^N

by the greedy fractional-covering rule (sort by cost-to-capacity ratio),
then maps the fractions to single-qubit rotation angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import erf

from .dispatch import Commitment
from .grid import GridInstance

__all__ = [
    "QuboProblem",
    "WarmStart",
    "InfeasibleRelaxationError",
    "penalty",
    "qubo_value",
    "qubo_values_by_index",
    "relax",
    "warm_start_angles",
    "DEFAULT_EPSILON",
]

# Clamp keeping warm-start qubits away from the poles so they stay trainable.
DEFAULT_EPSILON = 0.1


class InfeasibleRelaxationError(Exception):
    """Total capacity cannot cover the load; no relaxation exists."""


@dataclass(frozen=True)
class QuboProblem:
    """Binds an instance and hourly load to the penalized objective.

    `lam` trades off operating cost against meeting the load; it must
    dominate feasible c_min values for the minimizer to be feasible.
    """

    instance: GridInstance
    load: float
    lam: float
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.load > 0.0:
            raise ValueError(f"load must be positive, got {self.load}")
        if not self.lam > 0.0:
            raise ValueError(f"penalty weight must be positive, got {self.lam}")

    def clear_cache(self) -> None:
        self._memo.clear()


def _values_for_indices(problem: QuboProblem, indices: np.ndarray) -> np.ndarray:
    """Q(u) for an array of basis-state indices (bit j of index = unit j)."""
    inst = problem.instance
    bits = (indices[:, None] >> np.arange(inst.n)) & 1
    cmin = bits @ inst.min_power_cost
    cap = bits @ inst.p_max
    shortfall = np.maximum(problem.load - cap, 0.0)
    return cmin + problem.lam * erf(shortfall)


def qubo_values_by_index(problem: QuboProblem, indices: np.ndarray) -> np.ndarray:
    """Memoized vector evaluation keyed by basis-state index."""
    indices = np.asarray(indices, dtype=np.int64)
    memo = problem._memo
    missing = [i for i, idx in enumerate(indices) if int(idx) not in memo]
    if missing:
        fresh = _values_for_indices(problem, indices[missing])
        for i, v in zip(missing, fresh):
            memo[int(indices[i])] = float(v)
    return np.array([memo[int(idx)] for idx in indices])


def penalty(problem: QuboProblem, u: Commitment) -> float:
    """Saturating constraint penalty in [0, 1); exactly 0 iff capacity covers load."""
    if len(u) != problem.instance.n:
        raise ValueError(f"commitment length {len(u)} != instance size {problem.instance.n}")
    cap = 0.0
    pmax = problem.instance.p_max
    for j, b in enumerate(u.bits):
        if b:
            cap += pmax[j]
    shortfall = problem.load - cap
    if shortfall <= 0.0:
        return 0.0
    return float(erf(shortfall))


def qubo_value(problem: QuboProblem, u: Commitment) -> float:
    """Objective value for one commitment (memoized per problem and bitstring)."""
    if len(u) != problem.instance.n:
        raise ValueError(f"commitment length {len(u)} != instance size {problem.instance.n}")
    idx = u.to_index()
    memo = problem._memo
    if idx not in memo:
        memo[idx] = float(_values_for_indices(problem, np.array([idx], dtype=np.int64))[0])
    return memo[idx]


def warm_start_angles(relaxed: np.ndarray, epsilon: float = DEFAULT_EPSILON) -> np.ndarray:
    """Rotation angles 2*arcsin(sqrt(r)) with r clamped to [epsilon, 1-epsilon]."""
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must be in (0, 0.5), got {epsilon}")
    clamped = np.clip(np.asarray(relaxed, dtype=float), epsilon, 1.0 - epsilon)
    return 2.0 * np.arcsin(np.sqrt(clamped))


@dataclass(frozen=True)
class WarmStart:
    """Fractional covering solution and the angles that encode it."""

    relaxed: tuple[float, ...]
    angles: tuple[float, ...]
    epsilon: float


def relax(problem: QuboProblem, epsilon: float = DEFAULT_EPSILON) -> WarmStart:
    """Greedy fractional cover: cheapest cost-per-MW capacity first.

    Units are committed in ascending order of F_j(p_min_j) / p_max_j until
    capacity covers the load; the marginal unit takes the exact fraction
    needed.  This is the closed-form optimum of the continuous relaxation.
    """
    inst = problem.instance
    load = problem.load
    cap_total = inst.total_capacity
    if cap_total < load:
        raise InfeasibleRelaxationError(
            f"total capacity {cap_total} cannot cover load {load}"
        )
    ratios = inst.min_power_cost / inst.p_max
    order = sorted(range(inst.n), key=lambda j: (ratios[j], j))
    relaxed = [0.0] * inst.n
    remaining = load
    for j in order:
        if remaining <= 0.0:
            break
        pmax = inst.p_max[j]
        if pmax <= remaining:
            relaxed[j] = 1.0
            remaining -= pmax
        else:
            relaxed[j] = remaining / pmax
            remaining = 0.0
    angles = warm_start_angles(np.array(relaxed), epsilon)
    return WarmStart(relaxed=tuple(relaxed), angles=tuple(float(t) for t in angles),
                     epsilon=epsilon)


def greedy_round_up(problem: QuboProblem) -> Commitment:
    """Deterministic rounding of the relaxation: commit in greedy-ratio order
    until capacity covers the load.  Fallback when sampling yields no
    coverage-feasible bitstring."""
    inst = problem.instance
    if inst.total_capacity < problem.load:
        raise InfeasibleRelaxationError(
            f"total capacity {inst.total_capacity} cannot cover load {problem.load}"
        )
    ratios = inst.min_power_cost / inst.p_max
    order = sorted(range(inst.n), key=lambda j: (ratios[j], j))
    bits = [0] * inst.n
    cap = 0.0
    for j in order:
        if cap >= problem.load:
            break
        bits[j] = 1
        cap += inst.p_max[j]
    return Commitment(tuple(bits))
