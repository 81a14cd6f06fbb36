"""Congruence diagonalization of eps-hermitian matrices over a field with
involution.

``diagonalize_hermitian`` returns ``P`` with ``P* A P`` block diagonal:
1x1 blocks ``[a]`` and, only when eps = -1 and the involution is trivial,
2x2 blocks ``[[0, b], [-b, 0]]``; trailing zero rows are collected last.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import NotHermitian, WrongCase
from ..matrix import Matrix


def _conj_fn(K, conj):
    return conj or K.conj


def is_eps_hermitian(A, eps=1, conj=None):
    conj = _conj_fn(A.field, conj)
    e = A.field(eps)
    n = A.n
    return all(e * conj(A[j, i]) == A[i, j] for i in range(n) for j in range(n))


def involution_is_trivial(K, conj=None):
    conj = _conj_fn(K, conj)
    return all(conj(g) == g for g in K.all_gens().values())


def _non_symmetric_element(K, conj):
    for g in K.all_gens().values():
        if conj(g) != g:
            return g
    return None


@dataclass
class CongruenceResult:
    P: Matrix
    blocks: list
    null_dim: int = 0
    eps: object = 1
    verified: bool = field(default=False)

    @property
    def diagonal(self):
        return [b[0][0] for b in self.blocks if len(b) == 1]

    @property
    def hyperbolic(self):
        return [b for b in self.blocks if len(b) == 2]

    @property
    def entries(self):
        """Diagonal of the block matrix, zeros included."""
        return [self.block_matrix()[i, i] for i in range(self.P.n)]

    def block_matrix(self):
        K = self.P.field
        n = self.P.n
        M = Matrix.zero(K, n)
        r = 0
        for b in self.blocks:
            for i, row in enumerate(b):
                for j, v in enumerate(row):
                    M.rows[r + i][r + j] = K(v)
            r += len(b)
        return M

    def is_diagonal(self):
        return not self.hyperbolic


def _swap(M, P, i, j):
    if i == j:
        return
    M.rows[i], M.rows[j] = M.rows[j], M.rows[i]
    for r in M.rows:
        r[i], r[j] = r[j], r[i]
    for r in P.rows:
        r[i], r[j] = r[j], r[i]


def _apply_columns(M, P, E, conj):
    """``M <- E* M E`` and ``P <- P E``."""
    Ms = E.star(conj) * M * E
    M.rows = Ms.rows
    P.rows = (P * E).rows


def diagonalize_hermitian(A, eps=1, conj=None, check=True):
    """Exact congruence ``P* A P`` to block-diagonal form."""
    K = A.field
    conj = _conj_fn(K, conj)
    eps = K(eps)
    if check and not is_eps_hermitian(A, eps, conj):
        raise NotHermitian("matrix is not eps-hermitian")
    n = A.n
    M = A.copy()
    P = Matrix.identity(K, n)
    degenerate = eps == K(-1) and involution_is_trivial(K, conj)
    t = _non_symmetric_element(K, conj)
    half = K(Fraction(1, 2))
    blocks = []
    r = 0
    while r < n:
        piv = next((i for i in range(r, n) if not M[i, i].is_zero()), None)
        if piv is None:
            pair = next(((i, j) for i in range(r, n) for j in range(i + 1, n)
                         if not M[i, j].is_zero()), None)
            if pair is None:
                break
            i, j = pair
            beta = M[i, j]
            if degenerate:
                _swap(M, P, r, i)
                j = j if j != r else i
                _swap(M, P, r + 1, j)
                B = M[r, r + 1]
                E = Matrix.identity(K, n)
                # Schur step against the invertible block [[0, B], [-B, 0]]
                for k in range(r + 2, n):
                    E.rows[r][k] = M[r + 1, k] / B
                    E.rows[r + 1][k] = -M[r, k] / B
                _apply_columns(M, P, E, conj)
                blocks.append([[M[r, r], M[r, r + 1]], [M[r + 1, r], M[r + 1, r + 1]]])
                r += 2
                continue
            cands = [K.one, beta.inverse()]
            if t is not None:
                cands.append(beta.inverse() * t)
            for c in cands:
                w = beta * c
                if not (w + eps * conj(w)).is_zero():
                    break
            else:  # pragma: no cover - unreachable unless degenerate
                raise WrongCase("no repair vector found")
            E = Matrix.identity(K, n)
            E.rows[i][i] = K.one
            E.rows[j][i] = -half * c
            E.rows[i][j] = K.one
            E.rows[j][j] = half * c
            _apply_columns(M, P, E, conj)
            continue
        _swap(M, P, r, piv)
        a = M[r, r]
        ainv = a.inverse()
        E = Matrix.identity(K, n)
        for k in range(r + 1, n):
            if not M[r, k].is_zero():
                E.rows[r][k] = -ainv * M[r, k]
        _apply_columns(M, P, E, conj)
        blocks.append([[a]])
        r += 1
    res = CongruenceResult(P, blocks, n - r, eps)
    res.verified = P.star(conj) * A * P == res.block_matrix()
    return res


def alternating_degenerate_witness(C, conj=None):
    """``(Q, P)`` with ``Q* (P* C P) Q = -(P* C P)`` for eps = -1 and a
    trivial involution.  Returns the diagonalization result as well."""
    K = C.field
    conj = _conj_fn(K, conj)
    if not involution_is_trivial(K, conj):
        raise WrongCase("involution is not trivial")
    res = diagonalize_hermitian(C, -1, conj)
    n = C.n
    Q = Matrix.identity(K, n)
    r = 0
    for b in res.blocks:
        if len(b) == 2:
            Q.rows[r][r] = K.zero
            Q.rows[r + 1][r + 1] = K.zero
            Q.rows[r][r + 1] = K.one
            Q.rows[r + 1][r] = K.one
        r += len(b)
    return Q, res


def congruent_scalars(a, b, conj=None, pool=None):
    """A scalar ``d`` with ``d a d* = b`` from ``pool``, or None."""
    K = a.field if hasattr(a, "field") else b.field
    conj = _conj_fn(K, conj)
    a, b = K(a), K(b)
    if a.is_zero() or b.is_zero():
        return K.one if a == b else None
    pool = pool if pool is not None else default_scalar_pool(K)
    for d in pool:
        if d * a * conj(d) == b:
            return d
    return None


def default_scalar_pool(K, bound=3):
    out = []
    gens = list(K.all_gens().values())
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            out.append(K(Fraction(p, q)))
            out.append(K(Fraction(-p, q)))
    for g in gens:
        out.extend([g, g.inverse(), g + 1, g - 1])
    return out


def same_congruence_classes(xs, ys, conj=None, pool=None):
    """Match entries up to permutation and ``d a d*`` scaling (bounded search).

    Returns the list of scalars ``d`` in the order of ``xs`` or None.
    """
    ys = list(ys)
    if len(xs) != len(ys):
        return None
    used = [False] * len(ys)
    out = []
    for x in xs:
        for k, y in enumerate(ys):
            if used[k]:
                continue
            d = congruent_scalars(x, y, conj, pool)
            if d is not None:
                used[k] = True
                out.append(d)
                break
        else:
            return None
    return out
