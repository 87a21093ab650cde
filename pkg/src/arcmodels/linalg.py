"""Dense exact linear algebra over a FieldSpec (row reduction, rank, kernel, solve)."""

from __future__ import annotations


def rref(rows, F):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    M = [list(r) for r in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                Mi, Mr = M[i], M[r]
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(Mi, Mr)]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(rows, F) -> int:
    if not rows:
        return 0
    return len(rref(rows, F)[1])


def kernel(rows, ncols: int, F):
    """Basis of {v : rows . v = 0} as a list of vectors."""
    if not rows:
        return [[F.one() if i == j else F.zero() for i in range(ncols)] for j in range(ncols)]
    M, pivots = rref(rows, F)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [F.zero()] * ncols
        v[fcol] = F.one()
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(M[r][fcol])
        basis.append(v)
    return basis


def solve(rows, rhs, F):
    """One solution of rows . v = rhs, or None if the system is inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    M, pivots = rref(aug, F)
    if ncols in pivots:
        return None
    v = [F.zero()] * ncols
    for r, pc in enumerate(pivots):
        v[pc] = M[r][ncols]
    return v
