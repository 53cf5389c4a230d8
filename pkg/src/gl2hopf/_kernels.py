"""Hot loops of the points oracle: batched polynomial evaluation mod n and
closure of a finite matrix group under multiplication.

Two implementations with identical signatures live here. The numba one is
used unless numba is missing or GL2HOPF_DISABLE_NUMBA is set to a true value.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

_FLAG = os.environ.get("GL2HOPF_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:  # pragma: no cover - depends on the environment
    import numba
except ImportError:  # pragma: no cover
    numba = None


# ---------------------------------------------------------------------------
# numpy
# ---------------------------------------------------------------------------


def _np_eval_terms(exps, coeffs, vals, n):
    """sum_t coeffs[t] * prod_v vals[:, v] ** exps[t, v] mod n, for every row of vals."""
    npts, nvars = vals.shape
    out = np.zeros(npts, dtype=np.int64)
    if exps.shape[0] == 0:
        return out
    top = int(exps.max()) if exps.size else 0
    # powers[v][k] = vals[:, v] ** k mod n
    powers = np.ones((nvars, top + 1, npts), dtype=np.int64)
    for k in range(1, top + 1):
        powers[:, k, :] = powers[:, k - 1, :] * vals.T % n
    for t in range(exps.shape[0]):
        acc = np.full(npts, coeffs[t] % n, dtype=np.int64)
        for v in range(nvars):
            e = exps[t, v]
            if e:
                acc = acc * powers[v, e] % n
        out = (out + acc) % n
    return out


def _np_mat_codes(mats, n):
    m = mats.reshape(-1, 4) % n
    return ((m[:, 0] * n + m[:, 1]) * n + m[:, 2]) * n + m[:, 3]


def _np_closure_misses(mats, member, n):
    """Number of ordered pairs (a, b) whose product a b is not flagged in ``member``."""
    misses = 0
    chunk = max(1, 200_000 // max(1, len(mats)))
    for s in range(0, len(mats), chunk):
        a = mats[s:s + chunk]
        prod = np.einsum("aij,bjk->abik", a, mats) % n
        codes = _np_mat_codes(prod, n)
        misses += int(np.count_nonzero(~member[codes]))
    return misses


numpy_impl = SimpleNamespace(
    name="numpy",
    eval_terms=_np_eval_terms,
    mat_codes=_np_mat_codes,
    closure_misses=_np_closure_misses,
)


# ---------------------------------------------------------------------------
# numba
# ---------------------------------------------------------------------------

if numba is not None:

    @numba.njit(cache=True)
    def _nb_eval_terms(exps, coeffs, vals, n):
        npts, nvars = vals.shape
        out = np.zeros(npts, dtype=np.int64)
        for p in range(npts):
            s = 0
            for t in range(exps.shape[0]):
                acc = coeffs[t] % n
                for v in range(nvars):
                    x = vals[p, v] % n
                    for _ in range(exps[t, v]):
                        acc = acc * x % n
                s = (s + acc) % n
            out[p] = s
        return out

    @numba.njit(cache=True)
    def _nb_mat_codes(mats, n):
        m = mats.reshape(-1, 4)
        out = np.empty(m.shape[0], dtype=np.int64)
        for i in range(m.shape[0]):
            out[i] = (((m[i, 0] % n) * n + m[i, 1] % n) * n + m[i, 2] % n) * n + m[i, 3] % n
        return out

    @numba.njit(cache=True)
    def _nb_closure_misses(mats, member, n):
        misses = 0
        k = mats.shape[0]
        for a in range(k):
            for b in range(k):
                c00 = (mats[a, 0, 0] * mats[b, 0, 0] + mats[a, 0, 1] * mats[b, 1, 0]) % n
                c01 = (mats[a, 0, 0] * mats[b, 0, 1] + mats[a, 0, 1] * mats[b, 1, 1]) % n
                c10 = (mats[a, 1, 0] * mats[b, 0, 0] + mats[a, 1, 1] * mats[b, 1, 0]) % n
                c11 = (mats[a, 1, 0] * mats[b, 0, 1] + mats[a, 1, 1] * mats[b, 1, 1]) % n
                if not member[((c00 * n + c01) * n + c10) * n + c11]:
                    misses += 1
        return misses

    numba_impl = SimpleNamespace(
        name="numba",
        eval_terms=_nb_eval_terms,
        mat_codes=_nb_mat_codes,
        closure_misses=_nb_closure_misses,
    )
else:  # pragma: no cover
    numba_impl = None


def active():
    """The implementation selected by the environment."""
    if _FLAG or numba_impl is None:
        return numpy_impl
    return numba_impl


BACKEND = active().name
