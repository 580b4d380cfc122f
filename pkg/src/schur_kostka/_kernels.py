"""Integer hot loops: partition-function Weyl sums and 2-D histogram binning.

Two interchangeable backends share one calling convention:

* ``numba``: scalar loops compiled with ``@njit``;
* ``numpy``: vectorised broadcasting, no compilation.

The numba path is used when numba imports and the environment variable
``SCHUR_KOSTKA_NO_NUMBA`` is unset (or ``0``).  Arguments to the partition
sums are Kac labels multiplied by a common integer ``denom``; rows that are
not divisible by ``denom`` lie off the root lattice and contribute zero.

Algebra codes: 0 = A1, 1 = A2, 2 = A3, 3 = B2.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

CODES = {"A1": 0, "A2": 1, "A3": 2, "B2": 3}

# int64 headroom: P_A3 grows like k^3/6 and sums hold at most 576 terms
SAFE_KAC_BOUND = 100_000


def _want_numba() -> bool:
    return os.environ.get("SCHUR_KOSTKA_NO_NUMBA", "0").strip().lower() in ("", "0", "false", "no")


try:
    import numba as _numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _numba = None
    HAVE_NUMBA = False


# ---------------------------------------------------------------------------
# numpy backend


def _b_np(x):
    h = (x + 1) // 2
    return np.where(x < 0, 0, (x + 1 - h) * (h + 1))


def partition_np(code: int, k: np.ndarray) -> np.ndarray:
    """Vectorised partition function; ``k`` has shape (m, rank)."""
    k = np.asarray(k, dtype=np.int64)
    neg = (k < 0).any(axis=1)
    if code == 0:
        out = np.ones(k.shape[0], dtype=np.int64)
    elif code == 1:
        out = np.minimum(k[:, 0], k[:, 1]) + 1
    elif code == 2:
        k1, k2, k3 = k[:, 0], k[:, 1], k[:, 2]
        m = k1 - k2 + k3 + 2
        binom = m * (m - 1) * (m - 2) // 6
        c2 = (k2 + 1) * (k2 + 2) * (k2 + 3) // 6
        c3 = (k1 + 1) * (k1 + 2) * (-2 * k1 + 3 * k2 + 3) // 6
        c4 = (k1 + 1) * (k1 + 2) * (-k1 + 3 * k3 + 3) // 6
        c6 = (k3 + 1) * (k3 + 2) * (3 * k2 - 2 * k3 + 3) // 6
        c7 = (k3 + 1) * (k3 + 2) * (3 * k1 - k3 + 3) // 6
        out = np.select(
            [
                (k2 <= k1) & (k2 <= k3),
                (k1 <= k2) & (k2 <= k3),
                (k1 <= k3) & (k1 + k3 <= k2),
                (k1 <= k3) & (k3 <= k2) & (k2 <= k1 + k3),
                (k3 <= k2) & (k2 <= k1),
                (k3 <= k1) & (k1 + k3 <= k2),
                (k3 <= k1) & (k1 <= k2) & (k2 <= k1 + k3),
            ],
            [c2, c3, c4, c4 - binom, c6, c7, c7 - binom],
            default=0,
        )
    elif code == 3:
        k1, k2 = k[:, 0], k[:, 1]
        tri = (k1 + 1) * (k1 + 2) // 2
        out = np.select(
            [k2 <= k1, 2 * k1 <= k2],
            [_b_np(k2), tri],
            default=tri - _b_np(2 * k1 - k2 - 1),
        )
    else:
        raise ValueError(f"unknown algebra code {code}")
    return np.where(neg, 0, out).astype(np.int64)


def alt_sum_np(terms, signs, denom, code):
    terms = np.asarray(terms, dtype=np.int64)
    signs = np.asarray(signs, dtype=np.int64)
    ok = (terms % denom == 0).all(axis=1)
    if not ok.any():
        return 0
    vals = partition_np(code, terms[ok] // denom)
    return int(np.dot(signs[ok], vals))


def double_alt_sum_np(a, sa, b, sb, target, denom, code):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    t = np.asarray(target, dtype=np.int64)
    terms = (a[:, None, :] + b[None, :, :] - t).reshape(-1, a.shape[1])
    signs = (np.asarray(sa, dtype=np.int64)[:, None] * np.asarray(sb, dtype=np.int64)[None, :]).ravel()
    return alt_sum_np(terms, signs, denom, code)


def hist2d_np(x, y, x0, y0, width, nbins):
    ix = np.floor((np.asarray(x) - x0) / width).astype(np.int64)
    iy = np.floor((np.asarray(y) - y0) / width).astype(np.int64)
    keep = (ix >= 0) & (ix < nbins) & (iy >= 0) & (iy < nbins)
    flat = ix[keep] * nbins + iy[keep]
    return np.bincount(flat, minlength=nbins * nbins).reshape(nbins, nbins).astype(np.int64)


numpy_backend = SimpleNamespace(
    name="numpy",
    partition=partition_np,
    alt_sum=alt_sum_np,
    double_alt_sum=double_alt_sum_np,
    hist2d=hist2d_np,
)


# ---------------------------------------------------------------------------
# numba backend


def _build_numba():
    njit = _numba.njit

    @njit(cache=True)
    def _b(x):
        if x < 0:
            return 0
        h = (x + 1) // 2
        return (x + 1 - h) * (h + 1)

    @njit(cache=True)
    def _p(code, k):
        for i in range(k.shape[0]):
            if k[i] < 0:
                return 0
        if code == 0:
            return 1
        if code == 1:
            return min(k[0], k[1]) + 1
        if code == 2:
            k1, k2, k3 = k[0], k[1], k[2]
            m = k1 - k2 + k3 + 2
            binom = m * (m - 1) * (m - 2) // 6
            if k2 <= k1 and k2 <= k3:
                return (k2 + 1) * (k2 + 2) * (k2 + 3) // 6
            if k1 <= k2 and k2 <= k3:
                return (k1 + 1) * (k1 + 2) * (-2 * k1 + 3 * k2 + 3) // 6
            if k1 <= k3 and k1 + k3 <= k2:
                return (k1 + 1) * (k1 + 2) * (-k1 + 3 * k3 + 3) // 6
            if k1 <= k3 and k3 <= k2 and k2 <= k1 + k3:
                return (k1 + 1) * (k1 + 2) * (-k1 + 3 * k3 + 3) // 6 - binom
            if k3 <= k2 and k2 <= k1:
                return (k3 + 1) * (k3 + 2) * (3 * k2 - 2 * k3 + 3) // 6
            if k3 <= k1 and k1 + k3 <= k2:
                return (k3 + 1) * (k3 + 2) * (3 * k1 - k3 + 3) // 6
            if k3 <= k1 and k1 <= k2 and k2 <= k1 + k3:
                return (k3 + 1) * (k3 + 2) * (3 * k1 - k3 + 3) // 6 - binom
            return 0
        # B2
        k1, k2 = k[0], k[1]
        if k2 <= k1:
            return _b(k2)
        tri = (k1 + 1) * (k1 + 2) // 2
        if 2 * k1 <= k2:
            return tri
        return tri - _b(2 * k1 - k2 - 1)

    @njit(cache=True)
    def partition_nb(code, k):
        out = np.empty(k.shape[0], dtype=np.int64)
        for i in range(k.shape[0]):
            out[i] = _p(code, k[i])
        return out

    @njit(cache=True)
    def alt_sum_nb(terms, signs, denom, code):
        r = terms.shape[1]
        buf = np.empty(r, dtype=np.int64)
        total = 0
        for i in range(terms.shape[0]):
            ok = True
            for j in range(r):
                if terms[i, j] % denom != 0:
                    ok = False
                    break
                buf[j] = terms[i, j] // denom
            if ok:
                total += signs[i] * _p(code, buf)
        return total

    @njit(cache=True)
    def double_alt_sum_nb(a, sa, b, sb, target, denom, code):
        r = a.shape[1]
        buf = np.empty(r, dtype=np.int64)
        total = 0
        for i in range(a.shape[0]):
            for j in range(b.shape[0]):
                ok = True
                for c in range(r):
                    v = a[i, c] + b[j, c] - target[c]
                    if v % denom != 0:
                        ok = False
                        break
                    buf[c] = v // denom
                if ok:
                    total += sa[i] * sb[j] * _p(code, buf)
        return total

    @njit(cache=True)
    def hist2d_nb(x, y, x0, y0, width, nbins):
        out = np.zeros((nbins, nbins), dtype=np.int64)
        for i in range(x.shape[0]):
            ix = int(np.floor((x[i] - x0) / width))
            iy = int(np.floor((y[i] - y0) / width))
            if 0 <= ix < nbins and 0 <= iy < nbins:
                out[ix, iy] += 1
        return out

    def _i64(a):
        return np.ascontiguousarray(a, dtype=np.int64)

    def _f64(a):
        return np.ascontiguousarray(a, dtype=np.float64)

    return SimpleNamespace(
        name="numba",
        partition=lambda code, k: partition_nb(code, _i64(np.atleast_2d(k))),
        alt_sum=lambda terms, signs, denom, code: int(alt_sum_nb(_i64(terms), _i64(signs), denom, code)),
        double_alt_sum=lambda a, sa, b, sb, t, denom, code: int(
            double_alt_sum_nb(_i64(a), _i64(sa), _i64(b), _i64(sb), _i64(t), denom, code)
        ),
        hist2d=lambda x, y, x0, y0, width, nbins: hist2d_nb(_f64(x), _f64(y), float(x0), float(y0), float(width), int(nbins)),
    )


_numba_backend = None


def numba_backend():
    """The compiled backend, or None when numba is unavailable."""
    global _numba_backend
    if not HAVE_NUMBA:
        return None
    if _numba_backend is None:
        _numba_backend = _build_numba()
    return _numba_backend


def active():
    """Backend selected by the environment flag."""
    if _want_numba():
        nb = numba_backend()
        if nb is not None:
            return nb
    return numpy_backend


def backends() -> dict:
    out = {"numpy": numpy_backend}
    nb = numba_backend()
    if nb is not None:
        out["numba"] = nb
    return out
