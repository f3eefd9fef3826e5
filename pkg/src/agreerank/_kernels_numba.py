"""Numba-compiled kernels for the all-pairs agreement hot path.

Tokens are encoded once as rows of Unicode code points; Jaro-Winkler runs
on the code arrays, first across the vocabulary (one similarity matrix),
then the document-pair loop is pure lookups. Serial and parallel variants
are compiled separately so a single-worker run carries no threading
overhead.
"""

from __future__ import annotations

import numba
import numpy as np
from numba import njit, prange

# the bundled TBB is too old on some images; OMP/workqueue behave identically here
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

NAME = "numba"


@njit(cache=True)
def _jw_codes(codes, lens, ia, ib, a_flags, b_flags):
    la = lens[ia]
    lb = lens[ib]
    if la == 0 and lb == 0:
        return 1.0
    if la == 0 or lb == 0:
        return 0.0
    maxlen = la if la > lb else lb
    window = maxlen // 2 - 1
    if window < 0:
        window = 0
    for i in range(la):
        a_flags[i] = False
    for j in range(lb):
        b_flags[j] = False
    m = 0
    for i in range(la):
        lo = i - window
        if lo < 0:
            lo = 0
        hi = i + window + 1
        if hi > lb:
            hi = lb
        ch = codes[ia, i]
        for j in range(lo, hi):
            if not b_flags[j] and codes[ib, j] == ch:
                a_flags[i] = True
                b_flags[j] = True
                m += 1
                break
    if m == 0:
        return 0.0
    half_transpositions = 0
    j = 0
    for i in range(la):
        if a_flags[i]:
            while not b_flags[j]:
                j += 1
            if codes[ia, i] != codes[ib, j]:
                half_transpositions += 1
            j += 1
    t = half_transpositions * 0.5
    jv = (m / la + m / lb + (m - t) / m) / 3.0
    plimit = la if la < lb else lb
    if plimit > 4:
        plimit = 4
    prefix = 0
    for i in range(plimit):
        if codes[ia, i] != codes[ib, i]:
            break
        prefix += 1
    return jv + prefix * 0.1 * (1.0 - jv)


@njit(cache=True)
def _sim_matrix_serial(codes, lens, out):
    v = lens.shape[0]
    lmax = codes.shape[1]
    a_flags = np.zeros(lmax, np.bool_)
    b_flags = np.zeros(lmax, np.bool_)
    for i in range(v):
        out[i, i] = 1.0
        for j in range(i + 1, v):
            s = _jw_codes(codes, lens, i, j, a_flags, b_flags)
            out[i, j] = s
            out[j, i] = s


@njit(cache=True, parallel=True)
def _sim_matrix_parallel(codes, lens, out):
    v = lens.shape[0]
    lmax = codes.shape[1]
    for i in prange(v):
        a_flags = np.zeros(lmax, np.bool_)
        b_flags = np.zeros(lmax, np.bool_)
        out[i, i] = 1.0
        for j in range(i + 1, v):
            s = _jw_codes(codes, lens, i, j, a_flags, b_flags)
            out[i, j] = s
            out[j, i] = s


@njit(cache=True)
def _soft_dir(tok, wgt, lo_i, hi_i, lo_j, hi_j, sim, theta):
    total = 0.0
    for p in range(lo_i, hi_i):
        w = tok[p]
        best = -1.0
        best_q = -1
        for q in range(lo_j, hi_j):
            s = sim[w, tok[q]]
            if s > best:
                best = s
                best_q = q
        if best_q >= 0 and best > theta:
            total += wgt[p] * wgt[best_q] * best
    return total


@njit(cache=True)
def _pair_matrix_serial(indptr, tok, wgt, sim, theta, out):
    n = indptr.shape[0] - 1
    for i in range(n):
        for j in range(i + 1, n):
            fwd = _soft_dir(tok, wgt, indptr[i], indptr[i + 1], indptr[j], indptr[j + 1], sim, theta)
            rev = _soft_dir(tok, wgt, indptr[j], indptr[j + 1], indptr[i], indptr[i + 1], sim, theta)
            mean = 0.5 * (fwd + rev)
            out[i, j] = mean
            out[j, i] = mean


@njit(cache=True, parallel=True)
def _pair_matrix_parallel(indptr, tok, wgt, sim, theta, out):
    n = indptr.shape[0] - 1
    for i in prange(n):
        for j in range(i + 1, n):
            fwd = _soft_dir(tok, wgt, indptr[i], indptr[i + 1], indptr[j], indptr[j + 1], sim, theta)
            rev = _soft_dir(tok, wgt, indptr[j], indptr[j + 1], indptr[i], indptr[i + 1], sim, theta)
            mean = 0.5 * (fwd + rev)
            out[i, j] = mean
            out[j, i] = mean


def _encode_vocab(vocab: list[str]) -> tuple[np.ndarray, np.ndarray]:
    lmax = max((len(t) for t in vocab), default=0)
    codes = np.zeros((len(vocab), max(lmax, 1)), dtype=np.int32)
    lens = np.zeros(len(vocab), dtype=np.int64)
    for i, tok in enumerate(vocab):
        lens[i] = len(tok)
        for p, ch in enumerate(tok):
            codes[i, p] = ord(ch)
    return codes, lens


def _pack_docs(doc_tokens, doc_weights) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    indptr = np.zeros(len(doc_tokens) + 1, dtype=np.int64)
    for i, ids in enumerate(doc_tokens):
        indptr[i + 1] = indptr[i] + len(ids)
    total = int(indptr[-1])
    tok = np.zeros(total, dtype=np.int32)
    wgt = np.zeros(total, dtype=np.float64)
    for i, (ids, ws) in enumerate(zip(doc_tokens, doc_weights)):
        tok[indptr[i] : indptr[i + 1]] = ids
        wgt[indptr[i] : indptr[i + 1]] = ws
    return indptr, tok, wgt


def agreement_matrix(vocab, doc_tokens, doc_weights, theta, workers=None):
    """Symmetric mean-of-directions agreement weights for a candidate set.

    `doc_tokens[i]` holds ascending indices into `vocab`, `doc_weights[i]`
    the matching vector weights. `workers=1` runs the serial kernels;
    anything else uses the parallel kernels capped at `workers` threads
    (default: all available).
    """
    codes, lens = _encode_vocab(vocab)
    indptr, tok, wgt = _pack_docs(doc_tokens, doc_weights)
    sim = np.zeros((len(vocab), len(vocab)), dtype=np.float64)
    out = np.zeros((len(doc_tokens), len(doc_tokens)), dtype=np.float64)
    if workers == 1:
        _sim_matrix_serial(codes, lens, sim)
        _pair_matrix_serial(indptr, tok, wgt, sim, float(theta), out)
    else:
        limit = numba.config.NUMBA_NUM_THREADS
        numba.set_num_threads(min(workers, limit) if workers else limit)
        _sim_matrix_parallel(codes, lens, sim)
        _pair_matrix_parallel(indptr, tok, wgt, sim, float(theta), out)
    return out
