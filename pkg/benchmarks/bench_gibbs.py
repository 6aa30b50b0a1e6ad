"""Benchmark the compiled Gibbs kernel against the pure-Python fallback.

Both kernels consume the same uniform stream and must produce identical
assignments; this script times them on the same synthetic corpus and verifies
that equivalence on the way.

Usage: python benchmarks/bench_gibbs.py [--docs N] [--iterations N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from pubineq.topics import _gibbs_py

try:
    from pubineq.topics import _gibbs
except ImportError:
    _gibbs = None


def build_problem(n_docs: int, n_topics: int, vocab: int, tokens_per_doc: int, seed: int):
    rng = np.random.default_rng(seed)
    n_tokens = n_docs * tokens_per_doc
    doc_ids = np.repeat(np.arange(n_docs, dtype=np.int32), tokens_per_doc)
    word_ids = rng.integers(0, vocab, n_tokens).astype(np.int32)
    z = rng.integers(0, n_topics, n_tokens).astype(np.int32)
    return doc_ids, word_ids, z


def run(kernel, problem, n_topics: int, vocab: int, iterations: int, seed: int):
    doc_ids, word_ids, z0 = problem
    z = z0.copy()
    n_docs = int(doc_ids[-1]) + 1
    n_dk = np.zeros((n_docs, n_topics), np.int32)
    n_kw = np.zeros((n_topics, vocab), np.int32)
    n_k = np.zeros(n_topics, np.int32)
    np.add.at(n_dk, (doc_ids, z), 1)
    np.add.at(n_kw, (z, word_ids), 1)
    np.add.at(n_k, z, 1)

    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    for _ in range(iterations):
        uniforms = rng.random(len(z))
        kernel.sweep(doc_ids, word_ids, z, n_dk, n_kw, n_k, 0.5, 0.01, uniforms)
    elapsed = time.perf_counter() - start
    return elapsed, z


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=200)
    parser.add_argument("--topics", type=int, default=5)
    parser.add_argument("--vocab", type=int, default=500)
    parser.add_argument("--tokens-per-doc", type=int, default=40)
    parser.add_argument("--iterations", type=int, default=100)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    problem = build_problem(args.docs, args.topics, args.vocab, args.tokens_per_doc, args.seed)
    n_tokens = len(problem[0])
    updates = n_tokens * args.iterations
    print(
        f"{args.docs} docs x {args.tokens_per_doc} tokens, K={args.topics}, "
        f"V={args.vocab}, {args.iterations} sweeps ({updates:,} token updates)"
    )

    py_time, py_z = run(_gibbs_py, problem, args.topics, args.vocab, args.iterations, args.seed)
    print(f"python kernel: {py_time:8.3f}s  ({updates / py_time / 1e6:6.2f} M updates/s)")

    if _gibbs is None:
        print("cython kernel: not built (pip install -e . with a C compiler)")
        return

    cy_time, cy_z = run(_gibbs, problem, args.topics, args.vocab, args.iterations, args.seed)
    print(f"cython kernel: {cy_time:8.3f}s  ({updates / cy_time / 1e6:6.2f} M updates/s)")
    print(f"speedup: {py_time / cy_time:.1f}x")
    print("identical trajectories:", "yes" if np.array_equal(py_z, cy_z) else "NO (BUG)")


if __name__ == "__main__":
    main()
