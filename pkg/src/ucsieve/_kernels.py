"""Numba kernels: in-place statevector updates and the large-N dispatch scan.

All statevector kernels mutate `amps` (complex128, length 2^n) in place.
Basis index bit j encodes unit j (LSB-first), so qubit q pairs indices
(i, i | 1 << q).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def apply_1q(amps, q, u00, u01, u10, u11):
    """General single-qubit unitary on qubit q."""
    stride = 1 << q
    n = amps.shape[0]
    for base in range(0, n, stride << 1):
        for i0 in range(base, base + stride):
            i1 = i0 | stride
            a0 = amps[i0]
            a1 = amps[i1]
            amps[i0] = u00 * a0 + u01 * a1
            amps[i1] = u10 * a0 + u11 * a1


@njit(cache=True)
def _apply_zy_zlow(amps, qz, qy, c, s):
    # qz < qy: rotation sign flips with bit qz inside each contiguous run.
    sy = 1 << qy
    sz = 1 << qz
    n = amps.shape[0]
    for base in range(0, n, sy << 1):
        for off in range(0, sy, sz << 1):
            b0 = base + off
            for i0 in range(b0, b0 + sz):
                i1 = i0 | sy
                a0 = amps[i0]
                a1 = amps[i1]
                amps[i0] = c * a0 - s * a1
                amps[i1] = s * a0 + c * a1
            for i0 in range(b0 + sz, b0 + (sz << 1)):
                i1 = i0 | sy
                a0 = amps[i0]
                a1 = amps[i1]
                amps[i0] = c * a0 + s * a1
                amps[i1] = -s * a0 + c * a1


@njit(cache=True)
def _apply_zy_zhigh(amps, qz, qy, c, s):
    # qz > qy: rotation sign is constant within each contiguous run.
    sy = 1 << qy
    sz = 1 << qz
    n = amps.shape[0]
    for base in range(0, n, sy << 1):
        sgn = -s if (base & sz) else s
        for i0 in range(base, base + sy):
            i1 = i0 | sy
            a0 = amps[i0]
            a1 = amps[i1]
            amps[i0] = c * a0 - sgn * a1
            amps[i1] = sgn * a0 + c * a1


def apply_zy(amps, qz, qy, c, s):
    """exp(-i*theta/2 * Z_qz Y_qy) with c = cos(theta/2), s = sin(theta/2)."""
    if qz < qy:
        _apply_zy_zlow(amps, qz, qy, c, s)
    else:
        _apply_zy_zhigh(amps, qz, qy, c, s)


@njit(cache=True)
def probabilities(amps, out):
    for i in range(amps.shape[0]):
        re = amps[i].real
        im = amps[i].imag
        out[i] = re * re + im * im


@njit(cache=True)
def inclusive_cumsum(x):
    acc = 0.0
    for i in range(x.shape[0]):
        acc += x[i]
        x[i] = acc


@njit(cache=True)
def dispatch_scan(mask_lo, mask_hi, n, load, p_min, p_max, a, b, c, fmin,
                  best_cost, best_key, best_mask, tol, max_iter):
    """Enumerate commitment masks in [mask_lo, mask_hi) and return the best.

    Skips masks that cannot cover the load (or cannot run that low) and masks
    whose minimum-power cost bound already exceeds the incumbent; otherwise
    solves the dispatch subproblem by bisection on the shadow price.  Ties
    break toward the smaller big-endian key so the result is independent of
    chunking.  Returns (best_cost, best_key, best_mask, n_solved).
    """
    n_solved = 0
    for mask in range(mask_lo, mask_hi):
        cap = 0.0
        low = 0.0
        cmin = 0.0
        m = mask
        j = 0
        while m:
            if m & 1:
                cap += p_max[j]
                low += p_min[j]
                cmin += fmin[j]
            m >>= 1
            j += 1
        if cap < load or low > load or cmin > best_cost:
            continue
        lo_l = 1e300
        hi_l = -1e300
        for j in range(n):
            if (mask >> j) & 1:
                if b[j] < lo_l:
                    lo_l = b[j]
                h = 2.0 * a[j] * p_max[j] + b[j]
                if h > hi_l:
                    hi_l = h
        lam = 0.5 * (lo_l + hi_l)
        for _ in range(max_iter):
            lam = 0.5 * (lo_l + hi_l)
            tot = 0.0
            for j in range(n):
                if (mask >> j) & 1:
                    p = (lam - b[j]) / (2.0 * a[j])
                    if p < p_min[j]:
                        p = p_min[j]
                    elif p > p_max[j]:
                        p = p_max[j]
                    tot += p
            r = tot - load
            if -tol <= r <= tol:
                break
            if r < 0.0:
                lo_l = lam
            else:
                hi_l = lam
        cost = 0.0
        for j in range(n):
            if (mask >> j) & 1:
                p = (lam - b[j]) / (2.0 * a[j])
                if p < p_min[j]:
                    p = p_min[j]
                elif p > p_max[j]:
                    p = p_max[j]
                cost += a[j] * p * p + b[j] * p + c[j]
        n_solved += 1
        if cost <= best_cost:
            key = 0
            for j in range(n):
                if (mask >> j) & 1:
                    key |= 1 << (n - 1 - j)
            if cost < best_cost or key < best_key:
                best_cost = cost
                best_key = key
                best_mask = mask
    return best_cost, best_key, best_mask, n_solved
