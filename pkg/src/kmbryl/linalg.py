"""Exact dense linear algebra over the rationals.

Matrices are sequences of rows; entries are ints or Fractions.  Functions
never mutate their arguments.  Sizes here are small (tens of rows), so
plain fraction-based Gaussian elimination is the right tool.
"""

from fractions import Fraction


def _copy(mat):
    return [[Fraction(x) for x in row] for row in mat]


def row_echelon(mat):
    """Return (echelon rows, pivot column indices)."""
    m = _copy(mat)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(mat):
    return len(row_echelon(mat)[1])


def nullspace(mat):
    """Basis of the right kernel, as tuples of Fractions."""
    if not mat:
        return []
    ncols = len(mat[0])
    m, pivots = row_echelon(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(tuple(v))
    return basis


def solve(mat, rhs):
    """One solution x of mat*x = rhs, or None if inconsistent."""
    if not mat:
        return () if not any(rhs) else None
    ncols = len(mat[0])
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    m, pivots = row_echelon(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return tuple(x)


def signature(sym):
    """Inertia (n_pos, n_neg, n_zero) of a symmetric rational matrix.

    Symmetric elimination (Sylvester's law); a zero diagonal with a
    nonzero off-diagonal entry is handled by a hyperbolic 2x2 pivot.
    """
    n = len(sym)
    s = _copy(sym)
    active = list(range(n))
    pos = neg = zero = 0
    while active:
        k = next((i for i in active if s[i][i] != 0), None)
        if k is not None:
            d = s[k][k]
            if d > 0:
                pos += 1
            else:
                neg += 1
            active.remove(k)
            for r in active:
                if s[r][k] == 0:
                    continue
                f = s[r][k] / d
                for c in active:
                    s[r][c] -= f * s[k][c]
            continue
        pair = next(
            ((i, j) for i in active for j in active if i < j and s[i][j] != 0),
            None,
        )
        if pair is None:
            zero += len(active)
            break
        i, j = pair
        pos += 1
        neg += 1
        b = s[i][j]
        active.remove(i)
        active.remove(j)
        for r in active:
            ci, cj = s[r][i], s[r][j]
            if ci == 0 and cj == 0:
                continue
            for c in active:
                s[r][c] -= (ci * s[j][c] + cj * s[i][c]) / b
    return pos, neg, zero
