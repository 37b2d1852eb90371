"""Pure-Python (NumPy) constrained Viterbi kernel.

Fallback for environments without the compiled extension. Must stay
bit-for-bit equivalent to ``_viterbi.pyx``: same arithmetic, same
smallest-id tie-break (np.argmax returns the first maximum, matching the
strict-greater scan of the C loop).
"""

from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"


def viterbi_path(
    scores: np.ndarray, start_ok: np.ndarray, trans_ok: np.ndarray
) -> np.ndarray:
    """Highest-scoring label sequence under per-position scores and a hard
    transition mask.

    scores: (n, L) float64; start_ok: (L,) uint8; trans_ok: (L, L) uint8
    indexed [previous, current]. Returns (n,) int64 label ids. Ties break
    toward the smaller label id.
    """
    scores = np.ascontiguousarray(scores, dtype=np.float64)
    n, n_labels = scores.shape
    neg = -np.inf

    best = np.where(start_ok.astype(bool), scores[0], neg)
    back = np.empty((n, n_labels), dtype=np.int64)
    back[0] = -1
    blocked = trans_ok == 0  # (prev, cur)

    for i in range(1, n):
        cand = np.where(blocked, neg, best[:, None])
        prev_ids = np.argmax(cand, axis=0)
        prev_best = cand[prev_ids, np.arange(n_labels)]
        back[i] = np.where(prev_best == neg, -1, prev_ids)
        best = prev_best + scores[i]

    last = int(np.argmax(best))
    if best[last] == neg:
        raise RuntimeError("no valid label sequence under the transition constraints")
    path = np.empty(n, dtype=np.int64)
    path[n - 1] = last
    for i in range(n - 1, 0, -1):
        path[i - 1] = back[i, path[i]]
    return path
