#!/usr/bin/env python3
"""Benchmark the compiled Viterbi kernel against the NumPy fallback.

Checks output agreement on every case before timing, then reports decode
throughput per (sentence length, label count) configuration. Optionally
times end-to-end training on the shipped synthetic corpus under each
kernel (``--train``).
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

import numpy as np

from nerkit._kernel import available_kernels, get_kernel

SHAPES = [(10, 5), (40, 9), (40, 25), (80, 51)]


def bench_decodes(repeats: int) -> None:
    kernels = {name: get_kernel(name) for name in available_kernels()}
    if "cython" not in kernels:
        print("compiled kernel not built; benchmarking the fallback only")

    rng = np.random.default_rng(0)
    print(f"{'shape (n x L)':>14} | " + " | ".join(f"{k:>12}" for k in kernels) + " | speedup")
    print("-" * (18 + 15 * len(kernels) + 10))
    for n, n_labels in SHAPES:
        cases = []
        for _ in range(repeats):
            scores = rng.normal(size=(n, n_labels))
            start_ok = np.ones(n_labels, dtype=np.uint8)
            trans_ok = (rng.random((n_labels, n_labels)) < 0.8).astype(np.uint8)
            trans_ok[:, 0] = 1  # keep a valid path
            cases.append((scores, start_ok, trans_ok))

        reference = [kernels["python"].viterbi_path(*case).tolist() for case in cases]
        timings = {}
        for name, kernel in kernels.items():
            outputs = [kernel.viterbi_path(*case).tolist() for case in cases]  # warm-up
            if outputs != reference:
                raise SystemExit(f"kernel {name} disagrees with the fallback")
            started = time.perf_counter()
            for case in cases:
                kernel.viterbi_path(*case)
            timings[name] = (time.perf_counter() - started) / repeats

        row = " | ".join(f"{timings[k] * 1e6:>9.1f} us" for k in kernels)
        speedup = (
            f"{timings['python'] / timings['cython']:.1f}x" if "cython" in timings else "-"
        )
        print(f"{f'{n} x {n_labels}':>14} | {row} | {speedup}")


def bench_training(epochs: int) -> None:
    import os
    import subprocess
    import sys

    corpus = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "synth-news"
    if not corpus.exists():
        raise SystemExit(f"fixture corpus missing: {corpus}")
    snippet = (
        "import time; from nerkit import load_dataset, train, TrainConfig; "
        f"d = load_dataset({str(corpus)!r}); t = time.perf_counter(); "
        f"train([d], TrainConfig(epochs={epochs})); "
        "print(f'{time.perf_counter() - t:.3f}s')"
    )
    print(f"\nend-to-end training, {epochs} epochs on synth-news:")
    for kernel in available_kernels():
        env = dict(os.environ, NERKIT_KERNEL=kernel)
        out = subprocess.run(
            [sys.executable, "-c", snippet], env=env, capture_output=True, text=True
        )
        print(f"  {kernel:>7}: {out.stdout.strip() or out.stderr.strip()}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=300, help="decodes per shape")
    parser.add_argument("--train", action="store_true", help="also time training runs")
    parser.add_argument("--epochs", type=int, default=30)
    args = parser.parse_args()
    bench_decodes(args.repeats)
    if args.train:
        bench_training(args.epochs)


if __name__ == "__main__":
    main()
