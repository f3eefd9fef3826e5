"""Pure NumPy fallback for the agreement kernels (no JIT required).

Same contract as `_kernels_numba.agreement_matrix`. The `workers` argument
is accepted but ignored: CPython threads cannot speed up this loop.
"""

from __future__ import annotations

import numpy as np

from .strsim import jaro_winkler

NAME = "numpy"


def _sim_matrix(vocab: list[str]) -> np.ndarray:
    v = len(vocab)
    sim = np.eye(v, dtype=np.float64)
    for i in range(v):
        a = vocab[i]
        for j in range(i + 1, v):
            s = jaro_winkler(a, vocab[j])
            sim[i, j] = s
            sim[j, i] = s
    return sim


def _soft_dir(ti, wi, tj, wj, sim, theta):
    if ti.size == 0 or tj.size == 0:
        return 0.0
    sub = sim[ti[:, None], tj[None, :]]
    best_idx = sub.argmax(axis=1)  # first max: lowest token id wins ties
    best = sub[np.arange(ti.size), best_idx]
    mask = best > theta
    if not mask.any():
        return 0.0
    return float(np.sum(wi[mask] * wj[best_idx[mask]] * best[mask]))


def agreement_matrix(vocab, doc_tokens, doc_weights, theta, workers=None):
    sim = _sim_matrix(vocab)
    n = len(doc_tokens)
    out = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            fwd = _soft_dir(doc_tokens[i], doc_weights[i], doc_tokens[j], doc_weights[j], sim, theta)
            rev = _soft_dir(doc_tokens[j], doc_weights[j], doc_tokens[i], doc_weights[i], sim, theta)
            mean = 0.5 * (fwd + rev)
            out[i, j] = mean
            out[j, i] = mean
    return out
