"""Integer linear algebra: Smith normal form, kernels, and bigraded homology.

All arithmetic is arbitrary-precision (plain Python ints); pivots are chosen
by minimal absolute value to contain coefficient growth.  Matrices are dense
lists of row lists; the sizes reached at desk scale stay small.
"""

from __future__ import annotations


def xgcd(a, b):
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    n, k, m = len(A), len(B), len(B[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    if Bt[j]:
                        row[j] += a * Bt[j]
    return out


def det(A):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A, rows=None, cols=None):
    """Return (D, U, V) with U*A*V = D, U and V unimodular, D diagonal with
    each diagonal entry dividing the next.
    """
    m = len(A) if rows is None else rows
    n = (len(A[0]) if A else 0) if cols is None else cols
    D = [row[:] for row in A]
    U = identity_matrix(m)
    V = identity_matrix(n)

    def row_op(i1, i2, j):
        # zero out D[i2][j] using D[i1][j]
        a, b = D[i1][j], D[i2][j]
        if b == 0:
            return
        if a == 0:
            D[i1], D[i2] = D[i2], D[i1]
            U[i1], U[i2] = U[i2], U[i1]
            return
        if b % a == 0:
            q = -(b // a)
            for jj in range(n):
                D[i2][jj] += q * D[i1][jj]
            for jj in range(m):
                U[i2][jj] += q * U[i1][jj]
            return
        x, y, g = xgcd(a, b)
        ag, mbg = a // g, -(b // g)
        for jj in range(n):
            u, v = D[i1][jj], D[i2][jj]
            D[i1][jj] = x * u + y * v
            D[i2][jj] = mbg * u + ag * v
        for jj in range(m):
            u, v = U[i1][jj], U[i2][jj]
            U[i1][jj] = x * u + y * v
            U[i2][jj] = mbg * u + ag * v

    def col_op(j1, j2, i):
        a, b = D[i][j1], D[i][j2]
        if b == 0:
            return
        if a == 0:
            for row in D:
                row[j1], row[j2] = row[j2], row[j1]
            for row in V:
                row[j1], row[j2] = row[j2], row[j1]
            return
        if b % a == 0:
            q = -(b // a)
            for row in D:
                row[j2] += q * row[j1]
            for row in V:
                row[j2] += q * row[j1]
            return
        x, y, g = xgcd(a, b)
        ag, mbg = a // g, -(b // g)
        for row in D:
            u, v = row[j1], row[j2]
            row[j1] = x * u + y * v
            row[j2] = mbg * u + ag * v
        for row in V:
            u, v = row[j1], row[j2]
            row[j1] = x * u + y * v
            row[j2] = mbg * u + ag * v

    for k in range(min(m, n)):
        # pull a minimal-absolute-value nonzero entry into the pivot slot
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if D[i][j] and (best is None or abs(D[i][j]) < best[0]):
                    best = (abs(D[i][j]), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != k:
            D[k], D[bi] = D[bi], D[k]
            U[k], U[bi] = U[bi], U[k]
        if bj != k:
            for row in D:
                row[k], row[bj] = row[bj], row[k]
            for row in V:
                row[k], row[bj] = row[bj], row[k]
        while True:
            for i in range(k + 1, m):
                row_op(k, i, k)
            if all(D[k][j] == 0 for j in range(k + 1, n)):
                break
            for j in range(k + 1, n):
                col_op(k, j, k)
            if all(D[i][k] == 0 for i in range(k + 1, m)):
                break

    # fix divisibility chain
    r = min(m, n)
    changed = True
    while changed:
        changed = False
        for k in range(r - 1):
            a, b = D[k][k], D[k + 1][k + 1]
            if b and (a == 0 or b % a):
                # fold entry k+1 into column k and re-reduce
                for row in V:
                    row[k] += row[k + 1]
                D[k + 1][k] = b
                while True:
                    row_op(k, k + 1, k)
                    if D[k][k + 1] == 0 and D[k + 1][k] == 0:
                        break
                    col_op(k, k + 1, k)
                    if D[k + 1][k] == 0 and D[k][k + 1] == 0:
                        break
                changed = True
    for k in range(r):
        if D[k][k] < 0:
            for jj in range(n):
                D[k][jj] = -D[k][jj]
            for jj in range(m):
                U[k][jj] = -U[k][jj]
    return D, U, V


def elementary_divisors(A, rows=None, cols=None):
    D, _, _ = smith_normal_form(A, rows, cols)
    r = min(len(D), len(D[0]) if D else 0)
    return [D[k][k] for k in range(r) if D[k][k]]


def rank(A, rows=None, cols=None):
    return len(elementary_divisors(A, rows, cols))


def kernel_basis(A, num_cols):
    """Basis (list of column vectors) of the integer kernel of A."""
    m = len(A)
    if m == 0:
        return [[1 if i == j else 0 for i in range(num_cols)] for j in range(num_cols)]
    D, _, V = smith_normal_form(A, m, num_cols)
    ker = []
    for j in range(num_cols):
        if j >= m or D[j][j] == 0:
            ker.append([V[i][j] for i in range(num_cols)])
    return ker


def homology_of_pair(d_in, d_out, dim):
    """Betti number and torsion of ker(d_out) / im(d_in).

    ``d_out``: matrix of the differential leaving the middle group (rows =
    next group, cols = dim); ``d_in``: matrix entering it (rows = dim).
    Either may be None for a zero map.
    """
    rank_out = rank(d_out) if d_out else 0
    if d_in:
        divisors = elementary_divisors(d_in)
    else:
        divisors = []
    rank_in = len(divisors)
    betti = dim - rank_out - rank_in
    torsion = [d for d in divisors if d not in (0, 1)]
    return betti, sorted(torsion)


class HomologyTable:
    """Map (homological degree, grading key) -> (betti, sorted torsion list)."""

    def __init__(self):
        self.table = {}

    def set(self, deg, grading, betti, torsion):
        if betti or torsion:
            self.table[(deg, grading)] = (betti, list(torsion))

    def get(self, deg, grading):
        return self.table.get((deg, grading), (0, []))

    def __eq__(self, other):
        return isinstance(other, HomologyTable) and self.table == other.table

    def __repr__(self):
        return "HomologyTable(%r)" % (self.table,)

    def to_json(self):
        out = {}
        for (deg, grading), (betti, torsion) in sorted(
            self.table.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))
        ):
            out["(%s, %s)" % (deg, grading)] = {"betti": betti, "torsion": torsion}
        return out
