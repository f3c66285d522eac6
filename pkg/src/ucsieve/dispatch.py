"""Exact economic dispatch for a fixed commitment, plus the enumeration oracle.

For a committed subset of units the hourly subproblem is a strictly convex,
separable QP with a single power-balance equality; its optimum is found by
bisection on the balance multiplier (the marginal price): each committed
unit responds with p_j(lam) = clamp((lam - b_j) / (2 a_j), p_min_j, p_max_j)
and total output is nondecreasing in lam.

The oracle enumerates all 2^N commitments, skipping ones that cannot meet
the load and pruning on the minimum-power cost lower bound; it is the
baseline that approximation errors are measured against.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .grid import GridInstance

__all__ = [
    "Commitment",
    "DispatchResult",
    "DispatchError",
    "EnumerationGuardError",
    "NoFeasibleCommitmentError",
    "OPTIMAL",
    "INFEASIBLE",
    "c_min",
    "is_sieve_feasible",
    "solve_rqp",
    "brute_force_optimum",
    "approximation_error",
    "ENUMERATION_GUARD",
]

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"

ENUMERATION_GUARD = 26

# Power balance must close to this relative tolerance at the optimum.
BALANCE_RTOL = 1e-9
_MAX_BISECTIONS = 200


class DispatchError(Exception):
    pass


class EnumerationGuardError(DispatchError):
    """Instance too large for exhaustive enumeration."""


class NoFeasibleCommitmentError(DispatchError):
    """No commitment can meet the requested load."""


@dataclass(frozen=True)
class Commitment:
    """An on/off assignment over units; bit j is 1 iff unit j runs.

    The canonical text form puts unit 0 leftmost.  Basis-state indices used
    by the simulator are little-endian (bit j of the index is unit j), so
    the string form is the bit-reversal of the index.
    """

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"commitment bits must be 0/1, got {self.bits}")

    @classmethod
    def from_string(cls, s: str) -> "Commitment":
        if not s or any(ch not in "01" for ch in s):
            raise ValueError(f"commitment string must be nonempty 0/1, got {s!r}")
        return cls(tuple(int(ch) for ch in s))

    @classmethod
    def from_index(cls, index: int, n: int) -> "Commitment":
        return cls(tuple((index >> j) & 1 for j in range(n)))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def n_committed(self) -> int:
        return sum(self.bits)

    def as_int(self) -> int:
        """Canonical string read as a big-endian binary number (tie-break key)."""
        return int(str(self), 2)

    def to_index(self) -> int:
        """Little-endian basis-state index (unit j at bit j)."""
        idx = 0
        for j, b in enumerate(self.bits):
            idx |= b << j
        return idx


@dataclass(frozen=True)
class DispatchResult:
    """Optimal power split for a fixed commitment, or an infeasibility marker.

    powers[j] is 0 for uncommitted units; marginal_price is the power-balance
    multiplier at the optimum.
    """

    powers: tuple[float, ...]
    total_cost: float
    marginal_price: float
    status: str

    @property
    def feasible(self) -> bool:
        return self.status == OPTIMAL


def _check_length(instance: GridInstance, u: Commitment) -> None:
    if len(u) != instance.n:
        raise ValueError(f"commitment length {len(u)} != instance size {instance.n}")


def c_min(instance: GridInstance, u: Commitment) -> float:
    """Lower bound on operating cost: committed units at minimum power."""
    _check_length(instance, u)
    total = 0.0
    fmin = instance.min_power_cost
    for j, b in enumerate(u.bits):
        if b:
            total += fmin[j]
    return total


def is_sieve_feasible(instance: GridInstance, u: Commitment, load: float) -> bool:
    """Necessary condition for dispatchability: committed capacity covers the load.

    The complementary lower-capacity condition (committed minimums not
    exceeding the load) is checked by solve_rqp, not here.
    """
    _check_length(instance, u)
    cap = 0.0
    pmax = instance.p_max
    for j, b in enumerate(u.bits):
        if b:
            cap += pmax[j]
    return cap >= load


def _infeasible(n: int) -> DispatchResult:
    return DispatchResult(powers=(0.0,) * n, total_cost=float("inf"),
                          marginal_price=float("nan"), status=INFEASIBLE)


def solve_rqp(instance: GridInstance, u: Commitment, load: float) -> DispatchResult:
    """Exact dispatch of `load` across the units committed by `u`.

    Infeasibility (committed minimums above the load, or committed capacity
    below it) is reported through the status field so candidate loops can
    skip without exception handling.
    """
    _check_length(instance, u)
    n = instance.n
    committed = [j for j, b in enumerate(u.bits) if b]
    units = instance.units

    if not committed:
        if load == 0.0:
            return DispatchResult((0.0,) * n, 0.0, 0.0, OPTIMAL)
        return _infeasible(n)

    low = 0.0
    cap = 0.0
    for j in committed:
        low += units[j].p_min
        cap += units[j].p_max
    if low > load or cap < load:
        return _infeasible(n)

    powers = [0.0] * n

    if low == load:
        for j in committed:
            powers[j] = units[j].p_min
        lam = min(units[j].b for j in committed)
    elif cap == load:
        for j in committed:
            powers[j] = units[j].p_max
        lam = max(2.0 * units[j].a * units[j].p_max + units[j].b for j in committed)
    else:
        lo = min(units[j].b for j in committed)
        hi = max(2.0 * units[j].a * units[j].p_max + units[j].b for j in committed)
        tol = BALANCE_RTOL * max(load, 1.0)
        lam = 0.5 * (lo + hi)
        for _ in range(_MAX_BISECTIONS):
            lam = 0.5 * (lo + hi)
            total = 0.0
            for j in committed:
                g = units[j]
                p = (lam - g.b) / (2.0 * g.a)
                if p < g.p_min:
                    p = g.p_min
                elif p > g.p_max:
                    p = g.p_max
                total += p
            residual = total - load
            if -tol <= residual <= tol:
                break
            if residual < 0.0:
                lo = lam
            else:
                hi = lam
        for j in committed:
            g = units[j]
            p = (lam - g.b) / (2.0 * g.a)
            if p < g.p_min:
                p = g.p_min
            elif p > g.p_max:
                p = g.p_max
            powers[j] = p

    cost = 0.0
    for j in committed:
        g = units[j]
        p = powers[j]
        cost += g.a * p * p + g.b * p + g.c
    return DispatchResult(tuple(powers), cost, lam, OPTIMAL)


def _scan_python(instance: GridInstance, load: float) -> tuple[int, float, int]:
    """Reference enumeration used for small instances; shares solve_rqp."""
    n = instance.n
    fmin = instance.min_power_cost
    best_cost = float("inf")
    best_key = 1 << 62
    best_mask = -1
    n_solved = 0
    for mask in range(1 << n):
        u = Commitment.from_index(mask, n)
        bound = 0.0
        for j, b in enumerate(u.bits):
            if b:
                bound += fmin[j]
        if bound > best_cost:
            continue
        result = solve_rqp(instance, u, load)
        if not result.feasible:
            continue
        n_solved += 1
        if result.total_cost <= best_cost:
            key = u.as_int()
            if result.total_cost < best_cost or key < best_key:
                best_cost = result.total_cost
                best_key = key
                best_mask = mask
    return best_mask, best_cost, n_solved


def _scan_numba(instance: GridInstance, load: float) -> tuple[int, float, int]:
    n = instance.n
    tol = BALANCE_RTOL * max(load, 1.0)
    best_cost, best_key, best_mask = 1e300, 1 << 62, -1
    n_solved = 0
    chunk = 1 << 22
    for start in range(0, 1 << n, chunk):
        stop = min(start + chunk, 1 << n)
        best_cost, best_key, best_mask, solved = _kernels.dispatch_scan(
            start, stop, n, load,
            instance.p_min, instance.p_max,
            instance.coeff_a, instance.coeff_b, instance.coeff_c,
            instance.min_power_cost,
            best_cost, best_key, best_mask, tol, _MAX_BISECTIONS,
        )
        n_solved += solved
    return best_mask, best_cost, n_solved


def brute_force_optimum(instance: GridInstance, load: float) -> tuple[Commitment, DispatchResult]:
    """Globally optimal commitment and dispatch by exhaustive enumeration.

    Prunes commitments whose minimum-power cost bound exceeds the incumbent;
    ties break toward the smaller big-endian commitment value.  Refuses
    instances larger than ENUMERATION_GUARD units.
    """
    n = instance.n
    if n > ENUMERATION_GUARD:
        raise EnumerationGuardError(
            f"{n} units exceeds the enumeration guard ({ENUMERATION_GUARD})"
        )
    if n <= 16:
        best_mask, _, n_solved = _scan_python(instance, load)
    else:
        best_mask, _, n_solved = _scan_numba(instance, load)
    if best_mask < 0:
        raise NoFeasibleCommitmentError(
            f"no commitment of {instance.name!r} can meet load {load}"
        )
    logger.debug("oracle %s load=%s solved %d residual problems", instance.name, load, n_solved)
    u = Commitment.from_index(best_mask, n)
    # Re-solve through the public path so the reported result is identical to
    # what any caller would compute for the winning commitment.
    return u, solve_rqp(instance, u, load)


def approximation_error(approx_cost: float, exact_cost: float) -> float:
    """Percentage gap of an approximate cost over the exact optimum.

    A materially negative gap signals a solver or oracle bug and raises.
    """
    if not exact_cost > 0.0:
        raise ValueError(f"exact cost must be positive, got {exact_cost}")
    if approx_cost < exact_cost - 1e-6 * exact_cost:
        raise ValueError(
            f"approximate cost {approx_cost} is below the exact optimum {exact_cost}"
        )
    return 100.0 * (approx_cost - exact_cost) / exact_cost
