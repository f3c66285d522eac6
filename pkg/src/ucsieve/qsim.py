"""Dense statevector simulator and the layered butterfly/mixer circuit family.

Conventions (fixed; all pinned values in the test suite derive from them):

* Basis-state index bit j encodes unit j, LSB-first.  The canonical
  commitment string (unit 0 leftmost) is therefore the bit-reversal of the
  index.
* The two-qubit entangler on a pair (q_a, q_b) is exp(-i*theta/2 * Z_a Y_b)
  with the first listed qubit carrying Z.  Within each amplitude pair whose
  q_b bit differs this is a real rotation whose sign is conditioned on the
  q_a bit.
* The mixer rotates every qubit j by angle 2*beta about the Bloch axis
  (sin t_j, 0, cos t_j), t_j being its warm-start angle; equivalently
  Ry(t_j) Rz(2*beta) Ry(-t_j).  The warm-start product state is an
  eigenstate of the mixer for every beta.

Entangling layers follow the butterfly pattern: stage k couples index pairs
differing in bit k (both indices < N, no padding), one shared angle per
stage.  A circuit with L layers over ceil(log2 N) stages has
L * (ceil(log2 N) + 1) trainable parameters; the initial rotation layer is
fixed by the warm start.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import _kernels
from .dispatch import Commitment
from .qubo import QuboProblem, WarmStart, qubo_values_by_index, _values_for_indices

__all__ = [
    "StateVector",
    "AnsatzSpec",
    "butterfly_stages",
    "build_ansatz",
    "apply_ry",
    "apply_1q",
    "apply_zy",
    "apply_mixer",
    "initial_state",
    "apply_layers",
    "run_circuit",
    "sample",
    "sample_commitments",
    "estimate_energy",
    "circuit_listing",
]


@dataclass
class StateVector:
    """2^n complex amplitudes; gates mutate the array in place."""

    amplitudes: np.ndarray
    n_qubits: int

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"amplitude array of shape {self.amplitudes.shape} does not match "
                f"{self.n_qubits} qubits"
            )
        if self.amplitudes.dtype != np.complex128:
            raise ValueError(f"amplitudes must be complex128, got {self.amplitudes.dtype}")

    @classmethod
    def zero(cls, n_qubits: int) -> "StateVector":
        amps = np.zeros(1 << n_qubits, dtype=np.complex128)
        amps[0] = 1.0
        return cls(amps, n_qubits)

    @classmethod
    def basis(cls, index: int, n_qubits: int) -> "StateVector":
        amps = np.zeros(1 << n_qubits, dtype=np.complex128)
        amps[index] = 1.0
        return cls(amps, n_qubits)

    def copy(self) -> "StateVector":
        return StateVector(self.amplitudes.copy(), self.n_qubits)

    def probabilities(self, out: np.ndarray | None = None) -> np.ndarray:
        if out is None:
            out = np.empty(self.amplitudes.shape[0], dtype=np.float64)
        _kernels.probabilities(self.amplitudes, out)
        return out

    def norm_error(self) -> float:
        return abs(float(np.vdot(self.amplitudes, self.amplitudes).real) - 1.0)


def butterfly_stages(n_qubits: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Stage k holds all pairs (i, i ^ 2^k) with i < i ^ 2^k, both < n_qubits."""
    if n_qubits < 2:
        raise ValueError(f"need at least 2 qubits, got {n_qubits}")
    n_stages = math.ceil(math.log2(n_qubits))
    stages = []
    for k in range(n_stages):
        bit = 1 << k
        stage = tuple(
            (i, i | bit) for i in range(n_qubits) if not i & bit and (i | bit) < n_qubits
        )
        stages.append(stage)
    return tuple(stages)


@dataclass(frozen=True)
class AnsatzSpec:
    """Circuit description: fixed init rotations plus L entangler/mixer layers."""

    n_qubits: int
    layers: int
    stages: tuple[tuple[tuple[int, int], ...], ...]
    init_angles: tuple[float, ...]

    @property
    def n_stages(self) -> int:
        return len(self.stages)

    @property
    def stage_sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.stages)

    @property
    def params_per_layer(self) -> int:
        return self.n_stages + 1

    @property
    def n_parameters(self) -> int:
        return self.layers * self.params_per_layer

    @property
    def gates_per_layer(self) -> int:
        return sum(self.stage_sizes)

    @property
    def two_qubit_gate_count(self) -> int:
        return self.layers * self.gates_per_layer


def build_ansatz(n_qubits: int, layers: int, warm_start: WarmStart) -> AnsatzSpec:
    if n_qubits < 2:
        raise ValueError(f"need at least 2 qubits, got {n_qubits}")
    if layers < 1:
        raise ValueError(f"need at least 1 layer, got {layers}")
    if len(warm_start.angles) != n_qubits:
        raise ValueError(
            f"warm start has {len(warm_start.angles)} angles for {n_qubits} qubits"
        )
    return AnsatzSpec(
        n_qubits=n_qubits,
        layers=layers,
        stages=butterfly_stages(n_qubits),
        init_angles=tuple(warm_start.angles),
    )


def apply_ry(state: StateVector, qubit: int, angle: float) -> StateVector:
    """Standard y-rotation exp(-i*angle/2 * Y) on one qubit, in place."""
    c = math.cos(0.5 * angle)
    s = math.sin(0.5 * angle)
    _kernels.apply_1q(state.amplitudes, qubit,
                      complex(c), complex(-s), complex(s), complex(c))
    return state


def apply_1q(state: StateVector, qubit: int, u: np.ndarray) -> StateVector:
    """Arbitrary 2x2 unitary on one qubit, in place."""
    _kernels.apply_1q(state.amplitudes, qubit,
                      complex(u[0, 0]), complex(u[0, 1]),
                      complex(u[1, 0]), complex(u[1, 1]))
    return state


def apply_zy(state: StateVector, pair: tuple[int, int], angle: float) -> StateVector:
    """Entangler exp(-i*angle/2 * Z_a Y_b) on pair = (q_a, q_b), in place."""
    qa, qb = pair
    if qa == qb:
        raise ValueError("entangler needs two distinct qubits")
    c = math.cos(0.5 * angle)
    s = math.sin(0.5 * angle)
    _kernels.apply_zy(state.amplitudes, qa, qb, c, s)
    return state


def mixer_unitary(theta: float, beta: float) -> np.ndarray:
    """Rotation by 2*beta about the axis (sin theta, 0, cos theta).

    Closed form cos(beta)*I - i*sin(beta)*(cos(theta)*Z + sin(theta)*X),
    i.e. Ry(theta) Rz(2*beta) Ry(-theta).
    """
    cb, sb = math.cos(beta), math.sin(beta)
    ct, st = math.cos(theta), math.sin(theta)
    return np.array(
        [[cb - 1j * sb * ct, -1j * sb * st],
         [-1j * sb * st, cb + 1j * sb * ct]],
        dtype=np.complex128,
    )


def apply_mixer(state: StateVector, beta: float,
                init_angles: Sequence[float]) -> StateVector:
    """Per-qubit warm-start-axis rotation; the warm-start product state is a
    fixed point (up to global phase) for every beta."""
    if len(init_angles) != state.n_qubits:
        raise ValueError(
            f"{len(init_angles)} mixer angles for {state.n_qubits} qubits"
        )
    for q, theta in enumerate(init_angles):
        apply_1q(state, q, mixer_unitary(theta, beta))
    return state


def initial_state(spec: AnsatzSpec) -> StateVector:
    """Warm-start product state: Ry(init_angles[j]) on each qubit of |0...0>."""
    state = StateVector.zero(spec.n_qubits)
    for q, theta in enumerate(spec.init_angles):
        apply_ry(state, q, theta)
    return state


def apply_layers(spec: AnsatzSpec, params: np.ndarray, state: StateVector) -> StateVector:
    """Apply the L trainable blocks to `state` in place.

    Parameter layout: per layer, one angle per butterfly stage followed by
    the mixer angle: (g_0 .. g_{K-1}, beta) repeated L times.
    """
    params = np.asarray(params, dtype=float)
    if params.shape != (spec.n_parameters,):
        raise ValueError(
            f"expected {spec.n_parameters} parameters, got shape {params.shape}"
        )
    per = spec.params_per_layer
    for layer in range(spec.layers):
        block = params[layer * per:(layer + 1) * per]
        for k, stage in enumerate(spec.stages):
            gamma = block[k]
            for pair in stage:
                apply_zy(state, pair, gamma)
        apply_mixer(state, block[-1], spec.init_angles)
    return state


def run_circuit(spec: AnsatzSpec, params: np.ndarray) -> StateVector:
    """Full circuit from |0...0>: init rotations then L alternating blocks."""
    state = initial_state(spec)
    return apply_layers(spec, params, state)


def sample(state: StateVector, shots: int, rng_seed: int,
           workspace: np.ndarray | None = None) -> np.ndarray:
    """Draw `shots` basis-state indices from |amplitude|^2.

    Identical seed gives an identical draw sequence.  `workspace`, if given,
    must hold 2^n float64 and is clobbered (it ends up holding the running
    probability totals).
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    cum = state.probabilities(out=workspace)
    _kernels.inclusive_cumsum(cum)
    rng = np.random.default_rng(rng_seed)
    draws = rng.random(shots)
    idx = np.searchsorted(cum, draws, side="right")
    return np.minimum(idx, cum.shape[0] - 1).astype(np.int64)


def sample_commitments(state: StateVector, shots: int, rng_seed: int) -> list[Commitment]:
    """Measurement outcomes as commitment vectors (multiset, draw order)."""
    return [Commitment.from_index(int(i), state.n_qubits)
            for i in sample(state, shots, rng_seed)]


def estimate_energy(problem: QuboProblem, state: StateVector,
                    shots: int | float | None, rng_seed: int = 0,
                    workspace: np.ndarray | None = None) -> float:
    """Shot-averaged objective of the sampled state.

    With shots=None (or inf) returns the exact expectation by a full sweep
    over basis states instead of sampling.
    """
    if problem.instance.n != state.n_qubits:
        raise ValueError(
            f"problem has {problem.instance.n} units but state has "
            f"{state.n_qubits} qubits"
        )
    if shots is None or (isinstance(shots, float) and math.isinf(shots)):
        probs = state.probabilities(out=workspace)
        total = 0.0
        chunk = 1 << 16
        for start in range(0, probs.shape[0], chunk):
            stop = min(start + chunk, probs.shape[0])
            idx = np.arange(start, stop, dtype=np.int64)
            total += float(np.dot(probs[start:stop], _values_for_indices(problem, idx)))
        return total
    indices = sample(state, int(shots), rng_seed, workspace=workspace)
    unique, counts = np.unique(indices, return_counts=True)
    values = qubo_values_by_index(problem, unique)
    return float(np.dot(counts.astype(float), values) / float(int(shots)))


def circuit_listing(spec: AnsatzSpec) -> str:
    """Text dump of the gate sequence (name, qubits, parameter index)."""
    lines = [f"# qubits={spec.n_qubits} layers={spec.layers} "
             f"stages={list(spec.stage_sizes)} params={spec.n_parameters}"]
    for q, theta in enumerate(spec.init_angles):
        lines.append(f"ry q{q} angle={theta!r} (fixed init)")
    per = spec.params_per_layer
    for layer in range(spec.layers):
        for k, stage in enumerate(spec.stages):
            pidx = layer * per + k
            for qa, qb in stage:
                lines.append(f"zy q{qa},q{qb} param[{pidx}] (layer {layer} stage {k})")
        lines.append(f"mixer q0..q{spec.n_qubits - 1} param[{layer * per + per - 1}] "
                     f"(layer {layer})")
    return "\n".join(lines) + "\n"
