"""Numba kernels for the fiber-profile census.

One scalar loop per point t0: evaluate the fiber polynomial, monicize,
test squarefreeness, then classical distinct-degree splitting with the
factors divided out as they are found.  All coefficients live in
int64; p < 2**31 keeps every product below 2**63.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True, nogil=True, inline="always")
def _powmod(base, e, p):
    r = 1
    b = base % p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


@njit(cache=True, nogil=True)
def _deg(a, upto):
    d = upto
    while d >= 0 and a[d] == 0:
        d -= 1
    return d


@njit(cache=True, nogil=True)
def _rem_inplace(a, da, b, db, p):
    """a <- a mod b; returns the new degree.  b need not be monic."""
    inv = _powmod(b[db], p - 2, p)
    for i in range(da - db, -1, -1):
        c = a[i + db]
        if c:
            c = c * inv % p
            for j in range(db + 1):
                a[i + j] = (a[i + j] - c * b[j]) % p
    return _deg(a, db - 1)


@njit(cache=True, nogil=True)
def _gcd_into(a, da, b, db, p):
    """gcd of a and b left in one of the two buffers; returns (which, deg).

    which == 0 means the gcd sits in a, 1 in b.  Both inputs are destroyed.
    """
    which = 0
    while db >= 0:
        da = _rem_inplace(a, da, b, db, p)
        t = a
        a = b
        b = t
        tmp = da
        da = db
        db = tmp
        which = 1 - which
    return which, da


@njit(cache=True, nogil=True)
def _mulmod(a, da, b, db, m, dm, p, tmp):
    """tmp <- a*b mod m (m monic of degree dm); returns degree of tmp."""
    for i in range(max(da + db, dm - 1) + 1):
        tmp[i] = 0
    for i in range(da + 1):
        ai = a[i]
        if ai:
            for j in range(db + 1):
                tmp[i + j] = (tmp[i + j] + ai * b[j]) % p
    for i in range(da + db, dm - 1, -1):
        c = tmp[i]
        if c:
            tmp[i] = 0
            for j in range(dm):
                tmp[i - dm + j] = (tmp[i - dm + j] - c * m[j]) % p
    return _deg(tmp, dm - 1)


@njit(cache=True, nogil=True)
def _pow_y_mod(w, dw, e, m, dm, p, acc, tmp):
    """acc <- w^e mod m; returns degree of acc.  w is preserved."""
    for i in range(dm + 1):
        acc[i] = 0
    acc[0] = 1
    dacc = 0
    base = np.empty_like(acc)
    for i in range(dm + 1):
        base[i] = 0
    for i in range(dw + 1):
        base[i] = w[i]
    dbase = dw
    while e:
        if e & 1:
            dacc = _mulmod(acc, dacc, base, dbase, m, dm, p, tmp)
            for i in range(dacc + 1):
                acc[i] = tmp[i]
            for i in range(dacc + 1, dm + 1):
                acc[i] = 0
        e >>= 1
        if e:
            dbase = _mulmod(base, dbase, base, dbase, m, dm, p, tmp)
            for i in range(dbase + 1):
                base[i] = tmp[i]
            for i in range(dbase + 1, dm + 1):
                base[i] = 0
    return dacc


@njit(cache=True, nogil=True)
def _divexact_inplace(h, dh, g, dg, p, q):
    """q <- h / g (exact, g monic not required); returns degree of q."""
    inv = _powmod(g[dg], p - 2, p)
    dq = dh - dg
    for i in range(dq + 1):
        q[i] = 0
    for i in range(dq, -1, -1):
        c = h[i + dg] * inv % p
        q[i] = c
        if c:
            for j in range(dg + 1):
                h[i + j] = (h[i + j] - c * g[j]) % p
    return _deg(q, dq)


@njit(cache=True, nogil=True)
def profile_codes_range(coeffs, p, start, stop):
    """Profile codes for fibers at t0 in [start, stop).

    coeffs is the (deg_T + 1, n + 1) int64 coefficient matrix of the
    cover, already reduced mod p.  Entry k of the result describes the
    fiber at t0 = start + k: -1 for a ramified or degenerate fiber,
    otherwise the base-(n+1) packed multiset of factor degrees.
    """
    n_rows = coeffs.shape[0]
    n = coeffs.shape[1] - 1
    out = np.empty(stop - start, dtype=np.int64)

    size = 2 * n + 2
    f = np.zeros(size, dtype=np.int64)
    df_ = np.zeros(size, dtype=np.int64)
    h = np.zeros(size, dtype=np.int64)
    g = np.zeros(size, dtype=np.int64)
    w = np.zeros(size, dtype=np.int64)
    acc = np.zeros(size, dtype=np.int64)
    tmp = np.zeros(size, dtype=np.int64)
    quo = np.zeros(size, dtype=np.int64)
    beta = np.zeros(n + 1, dtype=np.int64)

    for idx in range(start, stop):
        t0 = idx % p
        for j in range(n + 1):
            a = 0
            for i in range(n_rows - 1, -1, -1):
                a = (a * t0 + coeffs[i, j]) % p
            f[j] = a
        if f[n] == 0:
            out[idx - start] = -1
            continue
        inv = _powmod(f[n], p - 2, p)
        for j in range(n + 1):
            f[j] = f[j] * inv % p

        # squarefree test: derivative nonzero and gcd(f, f') constant
        for j in range(n):
            df_[j] = (j + 1) * f[j + 1] % p
        ddf = _deg(df_, n - 1)
        if ddf < 0:
            out[idx - start] = -1
            continue
        for j in range(n + 1):
            h[j] = f[j]
        for j in range(ddf + 1):
            g[j] = df_[j]
        _, dgcd = _gcd_into(h, n, g, ddf, p)
        if dgcd != 0:
            out[idx - start] = -1
            continue

        # distinct-degree splitting on h = f, dividing out each part
        for j in range(n + 1):
            h[j] = f[j]
        dh = n
        for j in range(n + 1):
            beta[j] = 0
        w[0] = 0
        w[1] = 1
        dw = 1
        d = 0
        while dh > 0:
            d += 1
            if 2 * d > dh:
                beta[dh] += 1
                break
            dw = _pow_y_mod(w, dw, p, h, dh, p, acc, tmp)
            for j in range(dw + 1):
                w[j] = acc[j]
            for j in range(dw + 1, dh + 1):
                w[j] = 0
            # g <- w - Y, h preserved into tmp for gcd
            for j in range(dh + 1):
                g[j] = 0
            for j in range(dw + 1):
                g[j] = w[j]
            g[1] = (g[1] - 1) % p
            dg = _deg(g, max(dw, 1))
            for j in range(dh + 1):
                tmp[j] = h[j]
            if dg < 0:
                # w == Y: everything left splits into degree-d parts
                beta[d] += dh // d
                dh = 0
                break
            which, dgcd = _gcd_into(tmp, dh, g, dg, p)
            if dgcd > 0:
                beta[d] += dgcd // d
                src = tmp if which == 0 else g
                # divide h by the gcd (monicize the gcd first)
                invl = _powmod(src[dgcd], p - 2, p)
                for j in range(dgcd + 1):
                    src[j] = src[j] * invl % p
                dh2 = _divexact_inplace(h, dh, src, dgcd, p, quo)
                for j in range(dh2 + 1):
                    h[j] = quo[j]
                for j in range(dh2 + 1, dh + 1):
                    h[j] = 0
                dh = dh2
                if dh > 0:
                    dw = _rem_inplace(w, dw, h, dh, p)
        code = 0
        mult = 1
        for j in range(1, n + 1):
            code += beta[j] * mult
            mult *= n + 1
        out[idx - start] = code
    return out
