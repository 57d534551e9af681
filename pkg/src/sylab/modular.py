"""Linear algebra over the prime field F_l with numpy int64 arrays (l < 2**31)."""

from __future__ import annotations

import numpy as np


def _inv(a, l):
    return pow(int(a), l - 2, l)


def rref(A, l):
    """Reduced row echelon form of A mod l and the list of pivot columns."""
    R = np.array(A, dtype=np.int64) % l
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = R[r] * _inv(R[r, c], l) % l
        col = R[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if len(nzr):
            R[nzr] = (R[nzr] - np.outer(col[nzr], R[r])) % l
        pivots.append(c)
        r += 1
    return R, pivots


def nullspace(A, l):
    """Columns spanning {x : A x = 0 mod l}."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    R, pivots = rref(A, l)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, c in enumerate(pivots):
            basis[c, j] = (-R[i, f]) % l
    return basis


def inverse(A, l):
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    R, pivots = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), l)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return R[:, n:]


def matmul(A, B, l):
    """A @ B mod l without int64 overflow for l < 2**31 and moderate sizes."""
    A = np.asarray(A, dtype=np.int64) % l
    B = np.asarray(B, dtype=np.int64) % l
    if A.shape[1] * (l - 1) ** 2 < 2**62:
        return (A @ B) % l
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = (out + np.outer(A[:, k], B[k]) % l) % l
    return out


def restrict(M, B, l):
    """Matrix R with M B = B R for a basis B (columns) of an M-invariant subspace."""
    _, piv_rows = rref(B.T, l)
    MB = matmul(M, B, l)
    return matmul(inverse(B[piv_rows], l), MB[piv_rows], l)


def charpoly(A, l):
    """Characteristic polynomial of A mod l, coefficients low to high (monic)."""
    H = [[int(x) % l for x in row] for row in np.asarray(A)]
    n = len(H)
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        t_inv = _inv(H[m][m - 1], l)
        for i in range(m + 1, n):
            u = H[i][m - 1] * t_inv % l
            if not u:
                continue
            Hi, Hm = H[i], H[m]
            for j in range(n):
                Hi[j] = (Hi[j] - u * Hm[j]) % l
            for row in H:
                row[m] = (row[m] + u * row[i]) % l
    polys = [[1]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        pm = [0] + prev                        # x * p_{m-1}
        h = H[m - 1][m - 1]
        for j, c in enumerate(prev):
            pm[j] = (pm[j] - h * c) % l
        t = 1
        for i in range(1, m):
            t = t * H[m - i][m - i - 1] % l
            coef = t * H[m - i - 1][m - 1] % l
            if coef:
                for j, c in enumerate(polys[m - i - 1]):
                    pm[j] = (pm[j] - coef * c) % l
        polys.append(pm)
    return polys[n]


def roots(poly, l):
    """All roots in F_l of a polynomial (coefficients low to high), by evaluation."""
    xs = np.arange(l, dtype=np.int64)
    vals = np.zeros(l, dtype=np.int64)
    for c in reversed(poly):
        vals = (vals * xs + c) % l
    return [int(x) for x in np.nonzero(vals == 0)[0]]
