# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled constrained Viterbi kernel.

Semantics are pinned by ``_viterbi_py.viterbi_path``: identical arithmetic
and the same smallest-id tie-break, so either implementation can back the
tagger without changing a single output byte.
"""

import numpy as np

from libc.math cimport INFINITY

IMPLEMENTATION = "cython"


def viterbi_path(scores, start_ok, trans_ok):
    """See ``nerkit._kernel._viterbi_py.viterbi_path``."""
    scores_arr = np.ascontiguousarray(scores, dtype=np.float64)
    start_arr = np.ascontiguousarray(start_ok, dtype=np.uint8)
    trans_arr = np.ascontiguousarray(trans_ok, dtype=np.uint8)

    cdef double[:, ::1] sc = scores_arr
    cdef unsigned char[::1] st = start_arr
    cdef unsigned char[:, ::1] tr = trans_arr
    cdef Py_ssize_t n = sc.shape[0]
    cdef Py_ssize_t n_labels = sc.shape[1]

    best_arr = np.empty(n_labels, dtype=np.float64)
    prev_arr = np.empty(n_labels, dtype=np.float64)
    back_arr = np.empty((n, n_labels), dtype=np.int64)
    path_arr = np.empty(n, dtype=np.int64)
    cdef double[::1] best = best_arr
    cdef double[::1] prev = prev_arr
    cdef long long[:, ::1] back = back_arr
    cdef long long[::1] path = path_arr

    cdef Py_ssize_t i, y, p
    cdef long long bp
    cdef double bs

    for y in range(n_labels):
        best[y] = sc[0, y] if st[y] else -INFINITY
        back[0, y] = -1

    for i in range(1, n):
        for y in range(n_labels):
            prev[y] = best[y]
        for y in range(n_labels):
            bp = -1
            bs = -INFINITY
            for p in range(n_labels):
                if tr[p, y] and prev[p] > bs:
                    bs = prev[p]
                    bp = p
            back[i, y] = bp
            best[y] = bs + sc[i, y]

    cdef long long last = 0
    cdef double last_score = -INFINITY
    for y in range(n_labels):
        if best[y] > last_score:
            last_score = best[y]
            last = y
    if last_score == -INFINITY:
        raise RuntimeError("no valid label sequence under the transition constraints")

    path[n - 1] = last
    for i in range(n - 1, 0, -1):
        path[i - 1] = back[i, path[i]]
    return path_arr
