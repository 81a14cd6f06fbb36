"""Exact dense linear algebra over a commutative field.

Matrices are lists of rows.  Entries only need ring operators,
``is_zero`` and (for solving) ``inverse``.
"""
from __future__ import annotations

from .errors import NotInvertible


def _zero_like(x):
    return x - x


def identity(n, one):
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for k in range(m):
                a = A[i][k]
                if a.is_zero():
                    continue
                b = B[k][j]
                if b.is_zero():
                    continue
                t = a * b
                acc = t if acc is None else acc + t
            row.append(acc if acc is not None else _zero_like(A[i][0]))
        out.append(row)
    return out


def transpose(A):
    return [list(r) for r in zip(*A)]


def bareiss_det(A):
    """Determinant by fraction-free elimination (exact divisions only)."""
    n = len(A)
    if n == 0:
        return None
    M = [list(r) for r in A]
    sign = 1
    prev = None
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return _zero_like(M[0][0])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num if prev is None else num / prev
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


def solve(A, b):
    """Solve ``A x = b`` for square nonsingular ``A``; ``b`` is a list.

    Forward elimination is fraction-free (Bareiss); back substitution
    divides.  Raises NotInvertible for singular ``A``.
    """
    n = len(A)
    M = [list(A[i]) + [b[i]] for i in range(n)]
    prev = None
    for k in range(n):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    break
            else:
                raise NotInvertible("singular matrix")
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num if prev is None else num / prev
            M[i][k] = _zero_like(M[i][k])
        prev = M[k][k]
    x = [None] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n]
        for j in range(i + 1, n):
            if not M[i][j].is_zero():
                acc = acc - M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return x


def inverse(A):
    n = len(A)
    one = A[0][0] ** 0 if hasattr(A[0][0], "__pow__") else 1
    I = identity(n, one)
    cols = [solve(A, [I[i][j] for i in range(n)]) for j in range(n)]
    return transpose(cols)


def rank(rows):
    """Rank of a list of row vectors."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    r = 0
    ncols = len(M[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if not M[i][c].is_zero()), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        for i in range(r + 1, len(M)):
            if not M[i][c].is_zero():
                f = M[i][c] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def solve_in_span(cols, target):
    """Coefficients ``c`` with ``sum_k c_k cols[k] == target``, or None.

    ``cols`` are equal-length vectors assumed linearly independent.
    """
    m = len(cols)
    rows = [[cols[k][r] for k in range(m)] + [target[r]] for r in range(len(target))]
    piv_cols = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            return None
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(not rows[i][m].is_zero() for i in range(r, len(rows))):
        return None
    return [rows[i][m] for i in range(m)]
