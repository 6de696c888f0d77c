#!/usr/bin/env python3
"""Benchmark the box-sweep backends against each other.

Runs the width-13 coefficient-box sweep over the canonical blocks with the
compiled kernel (prefix-pruned and fully unpruned) and the NumPy
meet-in-the-middle fallback, checks that all strategies return identical
solution sets, and prints the timings.

Usage: python benchmarks/bench_sweep.py [--blocks 222,333] [--repeat N]
"""

import argparse
import time

from moore57 import blocks, sweep


def time_once(fn):
    t0 = time.perf_counter()
    out = fn()
    return time.perf_counter() - t0, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--blocks", default="all", help="comma-separated labels or 'all'")
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--skip-unpruned", action="store_true",
                    help="omit the slow full 13^8 leaf sweep")
    args = ap.parse_args()

    labels = (
        [blocks.block_label(b) for b in blocks.canonical_blocks()]
        if args.blocks == "all"
        else args.blocks.split(",")
    )
    modes = []
    if "compiled" in sweep.available_backends():
        modes.append(("compiled pruned", dict(backend="compiled", prune=True)))
        if not args.skip_unpruned:
            modes.append(("compiled unpruned", dict(backend="compiled", prune=False)))
    modes.append(("numpy fallback", dict(backend="fallback")))

    print(f"selected backend at import: {sweep.BACKEND}")
    header = f"{'block':>6} " + " ".join(f"{name:>18}" for name, _ in modes) + "  solutions"
    print(header)
    for label in labels:
        block = blocks.parse_block(label)
        cells = []
        reference = None
        for _, kw in modes:
            best = None
            for _ in range(args.repeat):
                dt, out = time_once(lambda: sweep.sweep_block(block, center="auto", **kw))
                best = dt if best is None else min(best, dt)
            if reference is None:
                reference = out
            elif out != reference:
                raise SystemExit(f"backend disagreement on block {label}")
            cells.append(f"{best * 1000:>15.1f} ms")
        print(f"{label:>6} " + " ".join(cells) + f"  {len(reference):>9}")


if __name__ == "__main__":
    main()
