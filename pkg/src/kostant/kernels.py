"""Hot loops over Weyl group orbits of a regular dominant vector.

Both kernels work on integer epsilon-model coordinates.  A type A element is
an arrangement of the entries of ``x``; a type B element is a signed
arrangement.  Root coordinate ``k`` of an epsilon vector is its ``k``-th
prefix sum (up to a shift and a scale that the caller folds into ``thr``),
so a group element survives exactly when every prefix sum of the arranged
vector clears the matching threshold.

Set ``KOSTANT_NO_NUMBA=1`` to run the plain Python versions.  The jitted
dispatchers keep the originals on ``.py_func`` for benchmarking.
"""

from __future__ import annotations

import os

import numpy as np

NUMBA_DISABLED = os.environ.get("KOSTANT_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if NUMBA_DISABLED:
        raise ImportError("disabled by KOSTANT_NO_NUMBA")
    from numba import njit as _njit
    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise the identity decorator."""
    if HAVE_NUMBA:
        return _njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


def python_impl(func):
    """The undecorated Python function behind a (possibly) jitted kernel."""
    return getattr(func, "py_func", func)


@njit(cache=True, nogil=True)
def prune_search(x, thr, signed, lo, hi, out_codes, out_gap):
    """Depth-first search over (signed) arrangements of ``x`` with exact
    prefix pruning.

    ``x`` must be strictly decreasing (and positive when ``signed``).  The
    choice code at a position is the index into ``x`` for unsigned runs and
    ``2*index + negated`` for signed runs; only top-level codes in
    ``[lo, hi)`` are explored.  Survivors are written to ``out_codes`` and
    their prefix surpluses to ``out_gap``.  Returns the number of survivors,
    which exceeds the capacity of the output arrays on overflow.
    """
    n = x.shape[0]
    m = thr.shape[0]
    width = 2 * n if signed else n
    cap = out_codes.shape[0]
    used = np.zeros(n, np.bool_)
    placed = np.full(n, -1, np.int64)
    choice = np.full(n, -1, np.int64)
    prefix = np.zeros(n + 1, np.int64)
    count = 0
    depth = 0
    choice[0] = lo - 1
    while depth >= 0:
        if placed[depth] >= 0:
            used[placed[depth]] = False
            placed[depth] = -1
        limit = hi if depth == 0 else width
        c = choice[depth] + 1
        found = False
        idx = 0
        s = 0
        while c < limit:
            idx = c >> 1 if signed else c
            if not used[idx]:
                v = x[idx]
                if signed and (c & 1) == 1:
                    v = -v
                s = prefix[depth] + v
                if depth >= m or s >= thr[depth]:
                    # best case for the rest: remaining entries, largest first, all positive
                    acc = s
                    t = depth + 1
                    ok = True
                    for j in range(n):
                        if t >= m:
                            break
                        if used[j] or j == idx:
                            continue
                        acc += x[j]
                        if acc < thr[t]:
                            ok = False
                            break
                        t += 1
                    if ok:
                        found = True
                        break
            c += 1
        choice[depth] = c
        if not found:
            depth -= 1
            continue
        used[idx] = True
        placed[depth] = idx
        prefix[depth + 1] = s
        if depth == n - 1:
            if count < cap:
                for k in range(n):
                    out_codes[count, k] = choice[k]
                for k in range(m):
                    out_gap[count, k] = prefix[k + 1] - thr[k]
            count += 1
        else:
            depth += 1
            choice[depth] = -1
    return count


@njit(cache=True, nogil=True)
def _next_permutation(p):
    n = p.shape[0]
    i = n - 2
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    p[i], p[j] = p[j], p[i]
    a = i + 1
    b = n - 1
    while a < b:
        p[a], p[b] = p[b], p[a]
        a += 1
        b -= 1
    return True


@njit(cache=True, nogil=True)
def full_scan(x, thr, signed, out_codes, out_gap):
    """Brute-force counterpart of :func:`prune_search`: visit every group
    element in lexicographic order and test all prefixes.  Output codes use
    the same convention."""
    n = x.shape[0]
    m = thr.shape[0]
    cap = out_codes.shape[0]
    p = np.arange(n)
    y = np.zeros(n, np.int64)
    count = 0
    nmask = 1 << n if signed else 1
    while True:
        for mask in range(nmask):
            s = 0
            ok = True
            for k in range(n):
                v = x[p[k]]
                if (mask >> k) & 1:
                    v = -v
                y[k] = v
                s += v
                if k < m and s < thr[k]:
                    ok = False
                    break
            if ok:
                if count < cap:
                    s = 0
                    for k in range(n):
                        if signed:
                            out_codes[count, k] = 2 * p[k] + ((mask >> k) & 1)
                        else:
                            out_codes[count, k] = p[k]
                        s += y[k]
                        if k < m:
                            out_gap[count, k] = s - thr[k]
                count += 1
        if not _next_permutation(p):
            break
    return count
