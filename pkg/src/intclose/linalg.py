"""Dense linear algebra over prime fields (numpy-backed)."""

from __future__ import annotations

import numpy as np


def nullspace_mod(rows: list[list[int]], ncols: int, q: int) -> list[list[int]]:
    """Basis of the right nullspace of the matrix over Z_q.

    ``rows`` may be empty (nullspace = identity).  Entries are reduced mod q.
    """
    if ncols == 0:
        return []
    # int64 products overflow once q^2 exceeds 2^63; fall back to objects
    dtype = np.int64 if q < (1 << 31) else object
    if not rows:
        a = np.zeros((0, ncols), dtype=dtype)
    else:
        a = np.array(rows, dtype=dtype) % q
        if a.shape[1] != ncols:
            raise ValueError("row length mismatch")
    nrows = a.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hit = None
        for rr in range(r, nrows):
            if a[rr, c] % q:
                hit = rr
                break
        if hit is None:
            continue
        if hit != r:
            a[[r, hit]] = a[[hit, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, q) % q
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % q
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = int(-a[i, fc]) % q
        basis.append(v)
    return basis
