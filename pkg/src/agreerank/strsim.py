"""Jaro and Jaro-Winkler similarity over Unicode scalar values.

This is the reference scalar implementation; the batched kernels under
`_kernels_numba` / `_kernels_numpy` reimplement the same definition for the
all-pairs hot path and are tested for agreement with it.
"""

from __future__ import annotations

_WINKLER_SCALE = 0.1
_MAX_PREFIX = 4


def jaro(a: str, b: str) -> float:
    """Jaro similarity in [0, 1].

    Match window is floor(max(|a|,|b|)/2) - 1 (at least 0); transpositions
    are counted as half the mismatched positions among matched characters.
    Two empty strings score 1, one empty string scores 0.
    """
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    window = max(max(len(a), len(b)) // 2 - 1, 0)
    taken = [False] * len(b)
    a_matched: list[str] = []
    b_indices: list[int] = []
    for i, ch in enumerate(a):
        lo = max(0, i - window)
        hi = min(len(b), i + window + 1)
        for j in range(lo, hi):
            if not taken[j] and b[j] == ch:
                taken[j] = True
                a_matched.append(ch)
                b_indices.append(j)
                break
    m = len(a_matched)
    if m == 0:
        return 0.0
    b_matched = [b[j] for j in sorted(b_indices)]
    half_transpositions = sum(x != y for x, y in zip(a_matched, b_matched))
    t = half_transpositions / 2.0
    return (m / len(a) + m / len(b) + (m - t) / m) / 3.0


def jaro_winkler(a: str, b: str) -> float:
    """Jaro plus the common-prefix bonus: j + l * 0.1 * (1 - j), prefix
    length capped at 4, applied unconditionally."""
    j = jaro(a, b)
    prefix = 0
    for ca, cb in zip(a, b):
        if ca != cb or prefix == _MAX_PREFIX:
            break
        prefix += 1
    return j + prefix * _WINKLER_SCALE * (1.0 - j)
