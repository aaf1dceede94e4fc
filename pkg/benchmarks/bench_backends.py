"""Throughput comparison of the compiled and pure-Python engine kernels.

Run as ``python3 benchmarks/bench_backends.py [--rounds N] [--samples N]``.
Both kernels are driven with identical seeds, so the outputs are checked for
bit equality while timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from cbandit import engine
from cbandit.generators import generate_walkthrough_instance


def load_kernels():
    from cbandit import _engine_py

    kernels = [("python", _engine_py)]
    try:
        from cbandit import _engine_c

        kernels.append(("compiled", _engine_c))
    except ImportError:
        pass
    return kernels


def tables_args(tables):
    return (
        tables.order,
        tables.domains,
        tables.parent_offsets,
        tables.parents_flat,
        tables.table_offsets,
        tables.tables_cum,
        tables.reward_node,
        tables.means,
    )


def bench(label, fn, per_call):
    start = time.perf_counter()
    out = fn()
    elapsed = time.perf_counter() - start
    rate = per_call / elapsed
    print(f"  {label:>10}: {elapsed * 1e3:9.1f} ms  ({rate / 1e6:6.2f} M/s)")
    return out, elapsed


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200_000)
    parser.add_argument("--rounds", type=int, default=200_000)
    args = parser.parse_args()

    inst = generate_walkthrough_instance()
    tables = engine.build_tables(inst)
    kernels = load_kernels()
    if len(kernels) == 1:
        print("compiled backend not built; timing the python kernel only")

    print(f"sample_batch, {args.samples} samples of {inst.node_count} nodes:")
    sample_times = {}
    sample_out = {}
    for name, impl in kernels:
        out, elapsed = bench(
            name,
            lambda impl=impl: impl.sample_batch(
                *tables_args(tables), -1, -1, args.samples, np.random.default_rng(0)
            ),
            args.samples,
        )
        sample_out[name], sample_times[name] = out, elapsed

    nodes = np.array([2, 2, 6, 6], dtype=np.int32)
    values = np.array([0, 1, 0, 1], dtype=np.int32)
    print(f"ucb_run, {args.rounds} rounds over {len(nodes)} arms:")
    ucb_times = {}
    ucb_out = {}
    for name, impl in kernels:
        out, elapsed = bench(
            name,
            lambda impl=impl: impl.ucb_run(
                *tables_args(tables), nodes, values, args.rounds,
                np.random.default_rng(1),
            ),
            args.rounds,
        )
        ucb_out[name], ucb_times[name] = out, elapsed

    if len(kernels) == 2:
        for label, outs in (("sample_batch", sample_out), ("ucb_run", ucb_out)):
            a, b = outs["python"], outs["compiled"]
            equal = np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
            print(f"{label}: outputs bit-identical: {equal}")
            if not equal:
                return 1
        print(
            "speedup compiled/python: "
            f"sample_batch {sample_times['python'] / sample_times['compiled']:.1f}x, "
            f"ucb_run {ucb_times['python'] / ucb_times['compiled']:.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
