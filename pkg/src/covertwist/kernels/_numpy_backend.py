"""Pure-numpy census kernels, vectorized across the fiber points.

Instead of dividing factors out (which would give every row a different
degree), this backend keeps the fiber polynomial fixed and reads the
multiplicity of degree-d factors from deg gcd(f, Y^{p^d} - Y) via the
inclusion relation G_d = sum_{e | d} e * beta_e.  All rows then share
the same shapes and every step is a masked array operation.
"""

import numpy as np

NAME = "numpy"


def _degvec(a):
    """Degree of each row, -1 for zero rows."""
    nz = a != 0
    deg = a.shape[1] - 1 - nz[:, ::-1].argmax(axis=1)
    deg[~nz.any(axis=1)] = -1
    return deg


def _powmod_vec(base, e, p):
    r = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def _mulmod_vec(A, B, F, p):
    """Rowwise A*B mod F for A, B of width n, F monic of degree n."""
    N, n = A.shape
    C = np.zeros((N, 2 * n - 1), dtype=np.int64)
    for j in range(n):
        C[:, j:j + n] = (C[:, j:j + n] + A[:, j:j + 1] * B) % p
    for i in range(2 * n - 2, n - 1, -1):
        c = C[:, i]
        C[:, i - n:i] = (C[:, i - n:i] - c[:, None] * F[:, :n]) % p
    return C[:, :n]


def _pow_vec(W, e, F, p):
    """Rowwise W^e mod F."""
    R = np.zeros_like(W)
    R[:, 0] = 1
    B = W % p
    while e:
        if e & 1:
            R = _mulmod_vec(R, B, F, p)
        e >>= 1
        if e:
            B = _mulmod_vec(B, B, F, p)
    return R


def _gcd_deg(A0, B0, p, active):
    """Rowwise deg gcd(A0, B0) for the active rows (junk elsewhere).

    Follows Euclid with per-row masks; gcd(x, 0) = x by convention, so
    rows whose second argument is zero report deg(A0).
    """
    W = max(A0.shape[1], B0.shape[1])
    N = A0.shape[0]
    a = np.zeros((N, W), dtype=np.int64)
    b = np.zeros((N, W), dtype=np.int64)
    a[:, :A0.shape[1]] = A0
    b[:, :B0.shape[1]] = B0
    da = _degvec(a)
    db = _degvec(b)
    cols = np.arange(W, dtype=np.int64)[None, :]
    while True:
        rows = active & (db >= 0)
        if not rows.any():
            break
        while True:
            sub = rows & (da >= db) & (da >= 0)
            if not sub.any():
                break
            idx = np.nonzero(sub)[0]
            inv = _powmod_vec(b[idx, db[idx]], p - 2, p)
            coef = a[idx, da[idx]] * inv % p
            shift = (da[idx] - db[idx])[:, None]
            K = cols - shift
            bsh = np.where(K >= 0, b[idx[:, None], np.clip(K, 0, W - 1)], 0)
            a[idx] = (a[idx] - coef[:, None] * bsh) % p
            da[idx] = _degvec(a[idx])
        idx = np.nonzero(rows)[0]
        tmp = a[idx].copy()
        a[idx] = b[idx]
        b[idx] = tmp
        tdeg = da[idx].copy()
        da[idx] = db[idx]
        db[idx] = tdeg
    return da


def profile_codes_range(coeffs, p, start, stop):
    """Vectorized twin of the numba kernel; same inputs, same codes."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    n = coeffs.shape[1] - 1
    N = stop - start
    if N <= 0:
        return np.empty(0, dtype=np.int64)
    t = np.arange(start, stop, dtype=np.int64) % p

    F = np.empty((N, n + 1), dtype=np.int64)
    for j in range(n + 1):
        acc = np.zeros(N, dtype=np.int64)
        for i in range(coeffs.shape[0] - 1, -1, -1):
            acc = (acc * t + coeffs[i, j]) % p
        F[:, j] = acc

    codes = np.full(N, -1, dtype=np.int64)
    ok = F[:, n] != 0
    inv = _powmod_vec(np.where(ok, F[:, n], 1), p - 2, p)
    F = F * inv[:, None] % p

    D = (np.arange(1, n + 1, dtype=np.int64)[None, :] * F[:, 1:]) % p
    ok &= _degvec(D) >= 0
    ok &= _gcd_deg(F, D, p, ok) == 0
    if not ok.any():
        return codes

    beta = np.zeros((N, n + 1), dtype=np.int64)
    remaining = np.where(ok, n, 0).astype(np.int64)
    W = np.zeros((N, n), dtype=np.int64)
    W[:, 1] = 1
    for d in range(1, n + 1):
        need = ok & (2 * d <= remaining)
        if not need.any():
            break
        W = _pow_vec(W, p, F, p)
        WY = W.copy()
        WY[:, 1] = (WY[:, 1] - 1) % p
        Gd = _gcd_deg(F, WY, p, need)
        counted = np.zeros(N, dtype=np.int64)
        for e in range(1, d):
            if d % e == 0:
                counted += e * beta[:, e]
        newb = np.where(need, (Gd - counted) // d, 0)
        beta[:, d] += newb
        remaining -= d * newb

    left = np.nonzero(ok & (remaining > 0))[0]
    beta[left, remaining[left]] += 1

    mult = np.int64(1)
    packed = np.zeros(N, dtype=np.int64)
    for d in range(1, n + 1):
        packed += beta[:, d] * mult
        mult *= n + 1
    codes[ok] = packed[ok]
    return codes
