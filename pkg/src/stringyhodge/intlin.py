"""Exact integer and rational linear algebra on small dense matrices.

Everything here works on plain Python ints / Fractions, so results are
exact for arbitrary magnitudes.  Matrices are lists of row lists.  The
sizes that occur in this library are tiny (dimension <= 9), so the
quadratic/cubic classical algorithms are the right tool; no attempt is
made to be clever about asymptotics.
"""

from fractions import Fraction
from math import gcd


def mat_vec(m, v):
    return [sum(mi * vi for mi, vi in zip(row, v)) for row in m]


def mat_mul(a, b):
    n = len(b[0])
    return [[sum(row[k] * b[k][j] for k in range(len(b))) for j in range(n)]
            for row in a]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = vec_gcd(v)
    if g <= 1:
        return list(v)
    return [x // g for x in v]


def det(m):
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_solve(a, b):
    """Solve a x = b exactly over Q.

    Returns a list of Fractions, or None if the system is inconsistent.
    For underdetermined consistent systems an arbitrary solution (free
    variables set to 0) is returned.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if m[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][cols]
    return x


def inverse_rational(m):
    """Exact inverse of a square matrix, as Fractions."""
    n = len(m)
    cols = transpose([rational_solve(m, [1 if i == j else 0 for i in range(n)])
                      for j in range(n)])
    if any(c is None for c in cols):
        raise ZeroDivisionError("matrix is singular")
    return cols


def adjugate(m):
    """Integer adjugate, so that m @ adj = det(m) * I."""
    d = det(m)
    if d == 0:
        raise ZeroDivisionError("adjugate of singular matrix not supported")
    inv = inverse_rational(m)
    adj = [[x * d for x in row] for row in inv]
    out = []
    for row in adj:
        irow = []
        for x in row:
            assert x.denominator == 1
            irow.append(int(x))
        out.append(irow)
    return out


def kernel_basis(m, ncols=None):
    """Basis of the integer kernel {x in Z^n : m x = 0}.

    Works by integer column elimination on m while mirroring the column
    operations on an identity block; the operations are unimodular, so
    the surviving identity columns form a basis of the full (saturated)
    kernel lattice, not merely of a finite-index sublattice.
    """
    rows = len(m)
    n = ncols if ncols is not None else (len(m[0]) if rows else 0)
    if rows == 0:
        return identity(n)
    work = [list(col) for col in zip(*m)]          # columns of m
    track = identity(n)                            # track[j] = j-th column op image
    lead = 0
    for r in range(rows):
        live = [j for j in range(lead, n) if work[j][r] != 0]
        while len(live) > 1:
            live.sort(key=lambda j: abs(work[j][r]))
            j0 = live[0]
            for j in live[1:]:
                q = work[j][r] // work[j0][r]
                work[j] = [a - q * b for a, b in zip(work[j], work[j0])]
                track[j] = [a - q * b for a, b in zip(track[j], track[j0])]
            live = [j for j in live if work[j][r] != 0]
        if live:
            j0 = live[0]
            work[lead], work[j0] = work[j0], work[lead]
            track[lead], track[j0] = track[j0], track[lead]
            lead += 1
    return [track[j] for j in range(lead, n)]


def row_hnf(m):
    """Row-style Hermite reduction; returns a basis (list of nonzero rows)
    of the lattice generated by the rows of the integer matrix m."""
    rows = [list(r) for r in m if any(r)]
    if not rows:
        return []
    n = len(rows[0])
    basis = []
    col = 0
    while rows and col < n:
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            r0 = live[0]
            new_live = [r0]
            for r in live[1:]:
                q = r[col] // r0[col]
                rr = [a - q * b for a, b in zip(r, r0)]
                if rr[col] != 0:
                    new_live.append(rr)
                elif any(rr):
                    rest.append(rr)
            live = new_live
        if live:
            pivot = live[0] if live[0][col] > 0 else [-x for x in live[0]]
            # reduce earlier pivots above this column for a canonical form
            basis.append(pivot)
        rows = rest
        col += 1
    # back-reduce so entries above each pivot are in [0, pivot)
    for i in range(len(basis) - 1, -1, -1):
        c = next(j for j in range(n) if basis[i][j] != 0)
        for k in range(i):
            q = basis[k][c] // basis[i][c]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return basis


def diagonalize(m):
    """Bring an integer square matrix to diagonal form D = L m R with
    unimodular L, R (Smith-style reduction without the divisibility chain,
    which nothing here needs).

    Returns (diag, left) where diag is the list of nonnegative diagonal
    entries and left is the unimodular matrix L.
    """
    n = len(m)
    a = [list(row) for row in m]
    left = identity(n)

    def row_op(i, j, q):       # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        left[i] = [x - q * y for x, y in zip(left[i], left[j])]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    for t in range(n):
        while True:
            entries = [(abs(a[i][j]), i, j)
                       for i in range(t, n) for j in range(t, n) if a[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            row_swap(t, pi)
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty and all(a[i][t] == 0 for i in range(t + 1, n)) \
                    and all(a[t][j] == 0 for j in range(t + 1, n)):
                break
        if t < n and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
    return [a[i][i] for i in range(n)], left


def inverse_unimodular(m):
    """Exact integer inverse of a matrix with determinant +-1."""
    d = det(m)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    adj = adjugate(m)
    if d == 1:
        return adj
    return [[-x for x in row] for row in adj]
