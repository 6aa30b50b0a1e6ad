"""Pure-Python collapsed-Gibbs sweep, the fallback for the Cython kernel.

Keeps the exact operation order of ``_gibbs.pyx`` (Python floats are the same
IEEE doubles), so both kernels produce identical assignments for identical
uniform streams. The arrays are flattened to plain lists for the duration of
the sweep; element access on lists is several times faster than numpy scalar
indexing.
"""

from __future__ import annotations

import numpy as np


def sweep(doc_ids, word_ids, z, n_dk, n_kw, n_k, alpha, beta, uniforms):
    """One full pass reassigning every token's topic, counts updated in place."""
    n_topics, vocab_size = n_kw.shape
    vbeta = vocab_size * beta
    di = doc_ids.tolist()
    wi = word_ids.tolist()
    zz = z.tolist()
    dk = n_dk.ravel().tolist()
    kw = n_kw.ravel().tolist()
    nk = n_k.tolist()
    u = uniforms.tolist()
    cum = [0.0] * n_topics
    last = n_topics - 1

    for t in range(len(zz)):
        d = di[t]
        w = wi[t]
        old = zz[t]
        dk[d * n_topics + old] -= 1
        kw[old * vocab_size + w] -= 1
        nk[old] -= 1

        total = 0.0
        for k in range(n_topics):
            p = (kw[k * vocab_size + w] + beta) * (dk[d * n_topics + k] + alpha) / (nk[k] + vbeta)
            total += p
            cum[k] = total

        target = u[t] * total
        new = 0
        while new < last and target >= cum[new]:
            new += 1

        zz[t] = new
        dk[d * n_topics + new] += 1
        kw[new * vocab_size + w] += 1
        nk[new] += 1

    z[:] = np.asarray(zz, dtype=z.dtype)
    n_dk[:] = np.asarray(dk, dtype=n_dk.dtype).reshape(n_dk.shape)
    n_kw[:] = np.asarray(kw, dtype=n_kw.dtype).reshape(n_kw.shape)
    n_k[:] = np.asarray(nk, dtype=n_k.dtype)
