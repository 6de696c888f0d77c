"""NumPy fallback for the box sweep: vectorized meet in the middle.

The box splits into the first four and last four coefficients.  Each half
is enumerated as a grid, filtered against the functionals supported
entirely inside it, and the surviving halves are crossed against the mixed
functionals.  Every candidate in the box is accounted for, so the result
matches the compiled kernel's exactly.
"""

from __future__ import annotations

import itertools

import numpy as np


def _grid(los, his):
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(los, his)]
    if any(a.size == 0 for a in axes):
        return np.empty((0, len(axes)), dtype=np.int64)
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


def sweep(rows, lower, upper, box_lo, box_hi, prune=True):
    """Same contract as the compiled kernel; prune is accepted and ignored
    (the vectorized strategy always covers the box exactly)."""
    R = np.asarray(rows, dtype=np.int64)
    if R.shape != (27, 8):
        raise ValueError("need a 27x8 coefficient array")
    L = np.asarray(lower, dtype=np.int64)
    U = np.asarray(upper, dtype=np.int64)

    out_cols = slice(0, 4)
    in_cols = slice(4, 8)
    has_out = np.any(R[:, out_cols] != 0, axis=1)
    has_in = np.any(R[:, in_cols] != 0, axis=1)
    pure_out = np.where(has_out & ~has_in)[0]
    pure_in = np.where(has_in & ~has_out)[0]
    mixed = np.where(has_out & has_in)[0]
    constant = np.where(~has_out & ~has_in)[0]
    if any(not (L[i] <= 0 <= U[i]) for i in constant):
        return []

    outer = _grid(box_lo[:4], box_hi[:4])
    inner = _grid(box_lo[4:], box_hi[4:])
    if outer.size == 0 or inner.size == 0:
        return []

    vo = outer @ R[:, out_cols].T  # per-candidate functional parts, all 27
    vi = inner @ R[:, in_cols].T
    keep_o = np.all((vo[:, pure_out] >= L[pure_out]) & (vo[:, pure_out] <= U[pure_out]), axis=1)
    keep_i = np.all((vi[:, pure_in] >= L[pure_in]) & (vi[:, pure_in] <= U[pure_in]), axis=1)
    outer, vo = outer[keep_o], vo[keep_o]
    inner, vi = inner[keep_i], vi[keep_i]

    results = []
    vim = vi[:, mixed]
    lm, um = L[mixed], U[mixed]
    for o_row, o_val in zip(outer, vo):
        tot = vim + o_val[mixed]
        good = np.where(np.all((tot >= lm) & (tot <= um), axis=1))[0]
        for idx in good:
            results.append(tuple(int(v) for v in itertools.chain(o_row, inner[idx])))
    results.sort()
    return results
