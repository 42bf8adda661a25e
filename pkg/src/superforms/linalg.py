"""Exact dense linear algebra over any field-like scalar (GaussScalar,
Fraction).  Matrices are lists of lists; nothing here ever rounds.

Zero testing uses truthiness; the multiplicative unit is recovered as
pivot/pivot, so the routines are generic over the coefficient field.
"""

from __future__ import annotations


def mat_copy(rows):
    return [list(r) for r in rows]


def rref(rows):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns)."""
    m = mat_copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols=None, one=None):
    """Basis of the right nullspace as a list of vectors (lists).

    `one` is only consulted when the matrix is identically zero."""
    if not rows:
        return []
    ncols = ncols if ncols is not None else len(rows[0])
    red, pivots = rref(rows)
    for row in red:
        for x in row:
            if x:
                one = x / x
                break
        else:
            continue
        break
    if one is None:
        raise ValueError("nullspace of a zero matrix: pass one=unit scalar")
    zero = one - one
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve(rows, rhs):
    """One solution x of rows @ x = rhs, or None if inconsistent.

    rows is a list of m rows of length n; rhs has length m."""
    if not rows:
        return []
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    # pivot in the last column means inconsistency
    if n in pivots:
        return None
    # synthesize zero/one from the matrix content
    nz = None
    for row in red:
        for x in row:
            if x:
                nz = x
                break
        if nz:
            break
    if nz is None:
        nz = rhs[0] if any(rhs) else rows[0][0]
        if not nz:
            # zero system, zero rhs: the zero vector works
            probe = rows[0][0]
            return [probe] * n
    one = nz / nz
    zero = one - one
    x = [zero] * n
    for r, pc in enumerate(pivots):
        if pc < n:
            x[pc] = red[r][n]
    return x


def matmul(a, b):
    if not a or not b:
        return []
    n = len(b)
    out = []
    for row in a:
        acc = []
        for j in range(len(b[0])):
            s = row[0] * b[0][j]
            for k in range(1, n):
                s = s + row[k] * b[k][j]
            acc.append(s)
        out.append(acc)
    return out


def identity_like(n, one):
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def inverse(rows):
    """Inverse of a square matrix; returns None when singular."""
    n = len(rows)
    if n == 0:
        return []
    probe = None
    for r in rows:
        for x in r:
            if x:
                probe = x
                break
        if probe is not None:
            break
    if probe is None:
        return None
    one = probe / probe
    aug = [list(r) + list(i_row) for r, i_row in zip(rows, identity_like(n, one))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


def det(rows):
    """Determinant by fraction-free-style Gaussian elimination with division
    (valid over a field)."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    m = mat_copy(rows)
    probe = None
    for r in m:
        for x in r:
            if x:
                probe = x
                break
        if probe is not None:
            break
    if probe is None:
        return m[0][0]  # the zero scalar
    one = probe / probe
    sign = one
    acc = one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            return one - one
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        pv = m[c][c]
        acc = acc * pv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * acc


def column_span_equal(a_rows, b_rows) -> bool:
    """True when the row spans of the two matrices coincide."""
    ra = rank(a_rows)
    rb = rank(b_rows)
    if ra != rb:
        return False
    return rank(a_rows + b_rows) == ra
