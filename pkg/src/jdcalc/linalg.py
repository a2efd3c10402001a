"""Exact linear algebra over Q.

Matrices are lists of lists of Fractions.  Elimination uses the first
nonzero pivot in row-major order, so results are deterministic.
"""

from fractions import Fraction

Rat = Fraction


class InconsistentSystem(ValueError):
    pass


def _copy(m):
    return [row[:] for row in m]


def rref(matrix):
    """Reduced row echelon form; returns (rref_matrix, pivot_columns)."""
    m = _copy(matrix)
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix):
    return len(rref(matrix)[1])


def kernel_basis(matrix):
    """Basis of the right kernel, deterministic order."""
    if not matrix:
        return []
    cols = len(matrix[0])
    red, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Rat(0)] * cols
        v[f] = Rat(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """Solve M x = rhs exactly.

    Returns dict with kind in {'unique', 'underdetermined', 'inconsistent'};
    for solvable systems carries a particular solution and a kernel basis.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return {"kind": "inconsistent"}
    x = [Rat(0)] * cols
    for r, p in enumerate(pivots):
        x[p] = red[r][cols]
    kern = kernel_basis(matrix)
    kind = "unique" if not kern else "underdetermined"
    return {"kind": kind, "solution": x, "kernel": kern}


def det(matrix):
    """Determinant by exact Gaussian elimination."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    m = _copy(matrix)
    d = Rat(1)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            return Rat(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def intersect_rowspaces(a, b):
    """Basis of the intersection of the row spaces of a and b."""
    if not a or not b:
        return []
    cols = len(a[0])
    # rows of a stacked with rows of b; kernel combos give intersections
    stacked = [list(ra) + [Rat(0)] * len(b) for ra in a]
    # build matrix whose kernel encodes lambda.a - mu.b = 0
    m = []
    for c in range(cols):
        m.append([a[i][c] for i in range(len(a))] + [-b[j][c] for j in range(len(b))])
    combos = kernel_basis(m)
    vecs = []
    for combo in combos:
        v = [Rat(0)] * cols
        for i in range(len(a)):
            if combo[i]:
                v = [x + combo[i] * y for x, y in zip(v, a[i])]
        vecs.append(v)
    red, pivots = rref(vecs) if vecs else ([], [])
    return [red[i] for i in range(len(pivots))]
