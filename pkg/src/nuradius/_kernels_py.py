"""Pure numpy implementation of the profile kernels.

Used when the compiled ``_kernels_c`` extension is unavailable, and as the
reference the compiled path is tested against.
"""

import numpy as np

_CHUNK = 4096


def profile_value(a, b, lam):
    """max_i |a_i + lam * b_i|."""
    return float(np.max(np.abs(np.asarray(a) + lam * np.asarray(b))))


def profile_candidates(a, b):
    """Breakpoints of lam -> max_i |a_i + lam b_i|, plus lam = 0."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    i, j = np.triu_indices(len(a))
    out = [np.zeros(1)]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        # a_i + lam b_i = a_j + lam b_j  (i < j)
        off = i != j
        den = b[i[off]] - b[j[off]]
        out.append((a[j[off]] - a[i[off]]) / den)
        # a_i + lam b_i = -(a_j + lam b_j), including each zero crossing
        den = b[i] + b[j]
        out.append(-(a[i] + a[j]) / den)
    lam = np.concatenate(out)
    return lam[np.isfinite(lam)]


def profile_min(a, b, tol):
    """Exact minimizer of the convex piecewise-linear profile.

    Returns ``(lam, value)`` where ``lam`` is the smallest breakpoint whose
    value is within ``tol`` of the minimum.
    """
    a = np.ascontiguousarray(a, dtype=float)
    b = np.ascontiguousarray(b, dtype=float)
    lam = profile_candidates(a, b)
    vals = np.empty(len(lam))
    with np.errstate(over="ignore"):  # huge breakpoints evaluate to inf and never win
        for s in range(0, len(lam), _CHUNK):
            L = lam[s:s + _CHUNK]
            vals[s:s + _CHUNK] = np.max(np.abs(a[None, :] + L[:, None] * b[None, :]), axis=1)
    best = vals.min()
    pick = lam[vals <= best + tol].min()
    return float(pick), float(best)
