"""Numeric kernels for octonion arithmetic and series evaluation.

Every kernel exists twice: a pure-numpy implementation and a numba-compiled
one.  ``ACTIVE`` holds the namespace selected by OCTOBOHR_BACKEND (see
``_backend``).  Both implementations are exercised against each other in the
test suite and compared in ``benchmarks/bench_kernels.py``.

The multiplication table is generated from the quaternion-pair doubling
construction: writing an element as (a, b) with quaternions a, b,

    (a, b) * (c, d) = (a c - d * conj(b), conj(a) * d + c * b)

which places the basis in the order (1, i, j, k, l, li, lj, lk).
"""

from types import SimpleNamespace

import numpy as np

from . import _backend


def _qmul(a, b):
    """Hamilton product of quaternions given as 4-sequences (w, x, y, z)."""
    w1, x1, y1, z1 = a
    w2, x2, y2, z2 = b
    return (
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )


def _qconj(a):
    w, x, y, z = a
    return (w, -x, -y, -z)


def _pair_mul(x, y):
    """Doubling-construction product of two 8-sequences."""
    a, b = x[:4], x[4:]
    c, d = y[:4], y[4:]
    first = tuple(
        p - q for p, q in zip(_qmul(a, c), _qmul(d, _qconj(b)))
    )
    second = tuple(
        p + q for p, q in zip(_qmul(_qconj(a), d), _qmul(c, b))
    )
    return first + second


def _build_table():
    table = np.zeros((8, 8, 8), dtype=np.float64)
    for p in range(8):
        ep = tuple(1.0 if t == p else 0.0 for t in range(8))
        for q in range(8):
            eq = tuple(1.0 if t == q else 0.0 for t in range(8))
            table[p, q, :] = _pair_mul(ep, eq)
    return table


TABLE = _build_table()
TABLE.setflags(write=False)

# Each basis product is a signed basis element, so the dense table compresses
# to an index array and a sign array with one entry per (p, q) pair.
_IDX = np.abs(TABLE).argmax(axis=2).astype(np.int64)
_SGN = np.take_along_axis(TABLE, _IDX[:, :, None], axis=2)[:, :, 0].copy()
_IDX.setflags(write=False)
_SGN.setflags(write=False)


# ---------------------------------------------------------------------------
# numpy implementation
# ---------------------------------------------------------------------------

def _np_mul_batch(x, y):
    """Componentwise table product of (n, 8) arrays."""
    return np.einsum("np,nq,pqr->nr", x, y, TABLE, optimize=True)


def _np_conv(a, b, n_out):
    """Convolution c[n] = sum_k a[k] * b[n-k] of (na, 8) and (nb, 8) arrays."""
    na, nb = a.shape[0], b.shape[0]
    pair = np.einsum("ip,jq,pqr->ijr", a, b, TABLE, optimize=True)
    idx = (np.arange(na)[:, None] + np.arange(nb)[None, :]).ravel()
    out = np.zeros((n_out, 8), dtype=np.float64)
    keep = idx < n_out
    idx = idx[keep]
    flat = pair.reshape(-1, 8)[keep]
    for comp in range(8):
        out[:, comp] = np.bincount(idx, weights=flat[:, comp], minlength=n_out)
    return out


def _np_eval_points(coeffs, icoeffs, alpha, beta):
    """Evaluate sum_k z^k a_k at slice points z = alpha + i beta.

    ``coeffs`` holds the a_k as (n, 8) rows and ``icoeffs`` the products
    I * a_k for the slice unit I shared by all the points.  Returns (m, 8).
    """
    n = coeffs.shape[0]
    z = alpha + 1j * beta
    powers = np.vander(z, n, increasing=True)
    return powers.real @ coeffs + powers.imag @ icoeffs


def _np_real_reciprocal(series, n_out):
    """Coefficients of 1 / sum_k series[k] t^k for a real series."""
    out = np.zeros(n_out, dtype=np.float64)
    lead = series[0]
    out[0] = 1.0 / lead
    for m in range(1, n_out):
        top = min(m, series.shape[0] - 1)
        acc = np.dot(series[1 : top + 1], out[m - 1 :: -1][:top])
        out[m] = -acc / lead
    return out


NUMPY_IMPL = SimpleNamespace(
    name="numpy",
    mul_batch=_np_mul_batch,
    conv=_np_conv,
    eval_points=_np_eval_points,
    real_reciprocal=_np_real_reciprocal,
)


# ---------------------------------------------------------------------------
# numba implementation
# ---------------------------------------------------------------------------

def _build_numba_impl():
    import numba

    njit = numba.njit
    prange = numba.prange

    @njit(cache=True, parallel=True)
    def mul_batch_raw(x, y, idx, sgn):
        n = x.shape[0]
        out = np.zeros((n, 8), dtype=np.float64)
        for i in prange(n):
            for p in range(8):
                xp = x[i, p]
                if xp == 0.0:
                    continue
                for q in range(8):
                    out[i, idx[p, q]] += sgn[p, q] * xp * y[i, q]
        return out

    @njit(cache=True)
    def conv_raw(a, b, n_out, idx, sgn):
        na = a.shape[0]
        nb = b.shape[0]
        out = np.zeros((n_out, 8), dtype=np.float64)
        for i in range(na):
            top = min(nb, n_out - i)
            for j in range(top):
                n = i + j
                for p in range(8):
                    ap = a[i, p]
                    if ap == 0.0:
                        continue
                    for q in range(8):
                        out[n, idx[p, q]] += sgn[p, q] * ap * b[j, q]
        return out

    @njit(cache=True, parallel=True)
    def eval_points_raw(coeffs, icoeffs, alpha, beta):
        n = coeffs.shape[0]
        m = alpha.shape[0]
        out = np.zeros((m, 8), dtype=np.float64)
        for i in prange(m):
            ar = alpha[i]
            ai = beta[i]
            zr = 1.0
            zi = 0.0
            for k in range(n):
                for comp in range(8):
                    out[i, comp] += zr * coeffs[k, comp] + zi * icoeffs[k, comp]
                tr = zr * ar - zi * ai
                zi = zr * ai + zi * ar
                zr = tr
        return out

    @njit(cache=True)
    def real_reciprocal_raw(series, n_out):
        out = np.zeros(n_out, dtype=np.float64)
        lead = series[0]
        out[0] = 1.0 / lead
        for m in range(1, n_out):
            top = min(m, series.shape[0] - 1)
            acc = 0.0
            for k in range(1, top + 1):
                acc += series[k] * out[m - k]
            out[m] = -acc / lead
        return out

    def mul_batch(x, y):
        return mul_batch_raw(
            np.ascontiguousarray(x), np.ascontiguousarray(y), _IDX, _SGN
        )

    def conv(a, b, n_out):
        return conv_raw(
            np.ascontiguousarray(a), np.ascontiguousarray(b), n_out, _IDX, _SGN
        )

    def eval_points(coeffs, icoeffs, alpha, beta):
        return eval_points_raw(
            np.ascontiguousarray(coeffs),
            np.ascontiguousarray(icoeffs),
            np.ascontiguousarray(alpha),
            np.ascontiguousarray(beta),
        )

    def real_reciprocal(series, n_out):
        return real_reciprocal_raw(np.ascontiguousarray(series), n_out)

    return SimpleNamespace(
        name="numba",
        mul_batch=mul_batch,
        conv=conv,
        eval_points=eval_points,
        real_reciprocal=real_reciprocal,
    )


def load_impl(name):
    """Return the kernel namespace for an explicit backend name."""
    if name == "numpy":
        return NUMPY_IMPL
    if name == "numba":
        return _build_numba_impl()
    raise ValueError("unknown backend %r" % name)


ACTIVE = load_impl(_backend.resolve_backend())


def active_backend_name():
    return ACTIVE.name
