# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled collapsed-Gibbs sweep.

Must stay arithmetic-identical to ``_gibbs_py.sweep``: same operation order,
plain double precision, no reassociation, so that both kernels walk the same
sampling trajectory for the same uniform stream.
"""

import numpy as np


def sweep(int[::1] doc_ids, int[::1] word_ids, int[::1] z,
          int[:, ::1] n_dk, int[:, ::1] n_kw, int[::1] n_k,
          double alpha, double beta, double[::1] uniforms):
    """One full pass reassigning every token's topic, counts updated in place."""
    cdef Py_ssize_t n_tokens = doc_ids.shape[0]
    cdef Py_ssize_t n_topics = n_kw.shape[0]
    cdef Py_ssize_t vocab_size = n_kw.shape[1]
    cdef double vbeta = vocab_size * beta
    cdef double[::1] cum = np.empty(n_topics, dtype=np.float64)
    cdef Py_ssize_t t, k, d, w, old, new
    cdef double total, target, p

    for t in range(n_tokens):
        d = doc_ids[t]
        w = word_ids[t]
        old = z[t]
        n_dk[d, old] -= 1
        n_kw[old, w] -= 1
        n_k[old] -= 1

        total = 0.0
        for k in range(n_topics):
            p = (n_kw[k, w] + beta) * (n_dk[d, k] + alpha) / (n_k[k] + vbeta)
            total += p
            cum[k] = total

        target = uniforms[t] * total
        new = 0
        while new < n_topics - 1 and target >= cum[new]:
            new += 1

        z[t] = new
        n_dk[d, new] += 1
        n_kw[new, w] += 1
        n_k[new] += 1
