"""Backend selection for the box-sweep oracle.

The compiled kernel is preferred when its extension module built; the
NumPy meet-in-the-middle fallback is picked up transparently otherwise.
Both implement the same exhaustive semantics over the coefficient box, by
deliberately different strategies, so comparing them is itself a check.
"""

from __future__ import annotations

from . import blocks, constraints as cons_mod, drg, lattice, solver

try:
    from . import _sweep_kernel as _compiled
except ImportError:  # extension not built; source tree or fallback install
    _compiled = None
from . import _sweep_fallback as _fallback

BACKEND = "compiled" if _compiled is not None else "fallback"

#: Sentinel passed to backends for "no upper bound".
NO_UPPER = 2**62

DEFAULT_RADIUS = 6


def available_backends() -> list[str]:
    out = []
    if _compiled is not None:
        out.append("compiled")
    out.append("fallback")
    return out


def _impl(backend: str | None):
    if backend in (None, BACKEND):
        return _compiled if BACKEND == "compiled" else _fallback
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled sweep kernel is not available")
        return _compiled
    if backend == "fallback":
        return _fallback
    raise ValueError(f"unknown backend {backend!r}")


def sweep_box(base, lo, hi, radius: int = DEFAULT_RADIUS, prune: bool = True,
              backend: str | None = None, center=None) -> list:
    """All x = base + lattice vector with coefficients in the box
    [center - radius, center + radius]^8 and lo <= x <= hi entrywise
    (hi entries may be None).  center defaults to the origin.

    Returns the solution vectors sorted lexicographically.
    """
    rows = lattice.functional_rows()
    lower = [lo[i] - base[i] for i in range(27)]
    upper = [NO_UPPER if hi[i] is None else hi[i] - base[i] for i in range(27)]
    mid = [0] * 8 if center is None else list(center)
    if len(mid) != 8:
        raise ValueError("center needs 8 entries")
    coeffs = _impl(backend).sweep(
        [list(r) for r in rows],
        lower,
        upper,
        [m - radius for m in mid],
        [m + radius for m in mid],
        prune,
    )
    xs = [
        tuple(base[i] + sum(rows[i][j] * n[j] for j in range(8)) for i in range(27))
        for n in coeffs
    ]
    xs.sort()
    return xs


def sweep_block(block, pnums=None, base=None, radius: int = DEFAULT_RADIUS,
                prune: bool = True, backend: str | None = None,
                center=None) -> list:
    """Box sweep of one canonical block, anchored at its particular solution.

    With center="auto" the window is placed over the midpoints of the
    propagated coefficient ranges, so a width-13 window provably covers
    them (the dependent coefficient d' spans 0..7 on block 222, which a
    zero-centered radius-6 window would clip).
    """
    if pnums is None:
        pnums = drg.intersection_numbers(drg.MOORE57_ARRAY)
    system = blocks.build_system(block, pnums)
    cons = cons_mod.assemble(block)
    if base is None:
        base = solver.particular_solution(system, cons)
    lo, hi = cons.bounds()
    for i in system.forced_zero:
        hi[i - 1] = 0 if hi[i - 1] is None else min(hi[i - 1], 0)
    if center == "auto":
        nlo, nhi = solver.propagate_intervals(base, lo, hi)
        if any(a is None or b is None for a, b in zip(nlo, nhi)):
            raise RuntimeError("cannot auto-center: propagation left a range open")
        if any(b - a + 1 > 2 * radius + 1 for a, b in zip(nlo, nhi)):
            raise RuntimeError("window too small for the propagated ranges")
        center = [(a + b) // 2 for a, b in zip(nlo, nhi)]
    return sweep_box(base, lo, hi, radius=radius, prune=prune, backend=backend,
                     center=center)
