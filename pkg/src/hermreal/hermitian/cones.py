"""Membership oracles for eps-hermitian cones and the operations between them.

Every oracle answers ``member(e)`` with MEMBER, NONMEMBER or UNKNOWN.
Orderings and leading-term cones are total; closure searches may only
answer MEMBER or UNKNOWN.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import HypothesisViolated, NotHermitian, SingularTwist
from ..matrix import Matrix
from ..scalars.extension import sign_at
from .congruence import diagonalize_hermitian, is_eps_hermitian


class Membership(enum.Enum):
    MEMBER = "member"
    NONMEMBER = "nonmember"
    UNKNOWN = "unknown"

    def __bool__(self):
        return self is Membership.MEMBER


MEMBER, NONMEMBER, UNKNOWN = Membership.MEMBER, Membership.NONMEMBER, Membership.UNKNOWN


def _all(results):
    results = list(results)
    if any(r is NONMEMBER for r in results):
        return NONMEMBER
    if all(r is MEMBER for r in results):
        return MEMBER
    return UNKNOWN


class ConeOracle:
    """Base class; subclasses implement ``_member`` on hermitian input."""

    eps = 1

    def star(self, e):
        raise NotImplementedError

    def is_hermitian(self, e):
        return self.star(e) * self.eps == e

    def member(self, e):
        if not self.is_hermitian(e):
            raise NotHermitian(f"{e} is not {self.eps}-hermitian")
        if e.is_zero():
            return MEMBER
        return self._member(e)

    def __call__(self, e):
        return self.member(e)

    def _member(self, e):
        raise NotImplementedError


# --- scalar cones on a field K ---------------------------------------------------

class FieldCone(ConeOracle):
    def __init__(self, K, conj=None, eps=1):
        self.K = K
        self.conj = conj or K.conj
        self.eps = K(eps)

    def star(self, e):
        return self.conj(self.K(e))

    def is_hermitian(self, e):
        e = self.K(e)
        return self.eps * self.conj(e) == e

    def member(self, e):
        return super().member(self.K(e))


class EmbeddingOrdering(FieldCone):
    """Nonnegative symmetric elements under a real embedding (or any object
    with a ``sign`` method)."""

    def __init__(self, K, oracle, conj=None):
        super().__init__(K, conj)
        self.oracle = oracle

    def sign(self, e):
        return sign_at(self.K(e), self.oracle)

    def _member(self, e):
        return MEMBER if self.sign(e) >= 0 else NONMEMBER

    def __repr__(self):
        desc = getattr(self.oracle, "describe", lambda: repr(self.oracle))()
        return f"EmbeddingOrdering({desc})"


class MonomialSignOrdering:
    """Sign on a rational function field: the sign of the graded-lex leading
    coefficient of numerator times denominator (variables infinitely large
    and positive).  Coefficient signs come from ``base_oracle``."""

    def __init__(self, F, base_oracle=None):
        self.F = F
        self.base_oracle = base_oracle

    def _lc_sign(self, p):
        _, c = p.leading()
        return sign_at(c, self.base_oracle)

    def sign(self, e):
        e = self.F(e)
        if e.is_zero():
            return 0
        return self._lc_sign(e.num) * self._lc_sign(e.den)

    def describe(self):
        return f"leading-coefficient ordering of {self.F}"


class Intersection(ConeOracle):
    def __init__(self, cones):
        self.cones = list(cones)
        self.eps = self.cones[0].eps

    def star(self, e):
        return self.cones[0].star(e)

    def is_hermitian(self, e):
        return self.cones[0].is_hermitian(e)

    def _member(self, e):
        return _all(c.member(e) for c in self.cones)


class Acted(FieldCone):
    """``N_g = {k : a_g k^g in N}`` for a field automorphism ``g``."""

    def __init__(self, base, action, a_g, check=True):
        super().__init__(base.K, base.conj, base.eps)
        self.base = base
        self.action = action
        self.a_g = base.K(a_g)
        if check:
            for x in base.K.all_gens().values():
                if self.action(self.conj(x)) != self.conj(self.action(x)):
                    raise HypothesisViolated("automorphism does not commute with the involution")

    def _member(self, e):
        return self.base.member(self.a_g * self.action(e))


class Contracted(FieldCone):
    """``M^c``: membership of the subfield element inside a cone on the algebra."""

    def __init__(self, base, presentation, conj):
        super().__init__(presentation.K, conj, 1)
        self.base = base
        self.presentation = presentation

    def _member(self, e):
        return self.base.member(self.presentation.embed(e))


# --- cones on matrices -----------------------------------------------------------

class MatrixCone(ConeOracle):
    def __init__(self, K, conj=None, eps=1):
        self.K = K
        self.conj = conj or K.conj
        self.eps = K(eps)

    def star(self, X):
        return X.star(self.conj)

    def is_hermitian(self, X):
        return is_eps_hermitian(X, self.eps, self.conj)

    def member(self, X):
        if not self.is_hermitian(X):
            raise NotHermitian("matrix is not eps-hermitian")
        if all(v.is_zero() for r in X.rows for v in r):
            return MEMBER
        return self._member(X)


class Lifted(MatrixCone):
    """``F(N)``: diagonalize and test the diagonal entries in ``N``."""

    def __init__(self, base):
        super().__init__(base.K, base.conj, base.eps)
        self.base = base

    def diagnose(self, X):
        """``(verdict, result, index)``; ``index`` points at a failing entry."""
        res = diagonalize_hermitian(X, self.eps, self.conj, check=False)
        if res.hyperbolic:
            # only the zero cone exists in the alternating case
            return NONMEMBER, res, None
        verdicts = [self.base.member(d) for d in res.diagonal]
        for k, v in enumerate(verdicts):
            if v is NONMEMBER:
                return NONMEMBER, res, k
        return _all(verdicts), res, None

    def _member(self, X):
        return self.diagnose(X)[0]


class Restricted(FieldCone):
    """``G(M) = {c : c E_11 in M}``."""

    def __init__(self, base, n):
        super().__init__(base.K, base.conj, base.eps)
        self.base = base
        self.n = n

    def _member(self, c):
        X = Matrix.zero(self.K, self.n)
        X.rows[0][0] = self.K(c)
        return self.base.member(X)


class Twisted(MatrixCone):
    """Cone for ``X -> A^-1 X* A`` pulled back from a cone for ``*``:
    ``X`` is a member iff ``A X`` is."""

    def __init__(self, base, A, eta=1):
        K = base.K
        if A.det().is_zero():
            raise SingularTwist("twisting matrix is singular")
        self.base = base
        self.A = A
        self.eta = K(eta)
        self.K = K
        self.conj = base.conj
        self.eps = base.eps / self.eta
        self.A_inv = A.inverse()

    def star(self, X):
        return self.A_inv * X.star(self.conj) * self.A

    def is_hermitian(self, X):
        return self.eps * self.star(X) == X

    def phi(self, X):
        return self.A * X

    def _member(self, X):
        return self.base.member(self.phi(X))


# --- cones on an algebra ----------------------------------------------------------

class AlgebraCone(ConeOracle):
    def __init__(self, involution, eps=1):
        self.involution = involution
        self.algebra = involution.algebra
        self.eps = eps

    def star(self, u):
        return self.involution(u)

    def is_hermitian(self, u):
        u = self.algebra(u)
        return self.star(u) * self.eps == u


class LeadingTermCone(AlgebraCone):
    """``{s : weight(m, n) * c >= 0}`` where ``c x^m y^n`` is the graded-lex
    leading term of ``s``; the weighted coefficient must be rational or
    carry a sign under ``oracle``."""

    def __init__(self, involution, weight, oracle=None, label=None):
        super().__init__(involution)
        self.weight = weight
        self.oracle = oracle
        self.label = label

    def _member(self, s):
        from ..algebra.ore import leading_term

        c, (m, n) = leading_term(s)
        return MEMBER if sign_at(c * self.weight(m, n), self.oracle) >= 0 else NONMEMBER

    def __repr__(self):
        return f"LeadingTermCone({self.label or self.weight})"


class Extended(AlgebraCone):
    """``N^e``: ``u`` is a member iff ``A lambda(u)`` lies in ``F(N)``.

    A failing diagonal entry ``d_i`` of ``P* A lambda(u) P`` yields the
    witness ``d = sum_j e_j P[j][i]`` with ``f(d* u d) = d_i``.
    """

    def __init__(self, base, ctx):
        super().__init__(ctx.involution)
        self.base = base
        self.ctx = ctx
        self.lifted = Lifted(base)

    def twisted_matrix(self, u):
        return self.ctx.gram * self.ctx.lambda_rep(u)

    def diagnose(self, u):
        verdict, res, k = self.lifted.diagnose(self.twisted_matrix(u))
        witness = None
        if k is not None:
            idx = [i for i, b in enumerate(_block_starts(res)) if b is not None][k]
            col = res.P.column(idx)
            witness = self.ctx.from_coords(col)
        return verdict, witness

    def _member(self, u):
        return self.diagnose(u)[0]

    def refute(self, u, pool):
        """Search ``d`` in ``pool`` with ``f(d* u d)`` outside ``N``."""
        from ..projection import projection_f

        p = self.ctx.presentation
        for d in pool:
            val = projection_f(self.star(d) * u * d, p)
            if self.base.member(val) is NONMEMBER:
                return d, val
        return None


def _block_starts(res):
    """Per row of the block matrix: the 1x1 block index or None."""
    out = []
    for b in res.blocks:
        if len(b) == 1:
            out.append(True)
        else:
            out.extend([None, None])
    return out


@dataclass
class ClosureCertificate:
    """``target = s * r* g r`` with ``s = sum q_k^2``."""

    generator: object
    multiplier: object
    scale: Fraction
    squares: tuple

    def terms(self):
        return [(self.multiplier * q) for q in self.squares]

    def evaluate(self, star):
        acc = None
        for r in self.terms():
            t = star(r) * self.generator * r
            acc = t if acc is None else acc + t
        return acc


class SOHSClosure(AlgebraCone):
    """Closure of generators under ``r* (.) r`` for ``r`` in a pool and
    positive rational scaling.  Members are certified; otherwise UNKNOWN."""

    def __init__(self, involution, generators, pool, eps=1):
        super().__init__(involution, eps)
        self.generators = [self.algebra(g) for g in generators] + [self.algebra.one]
        self.pool = [self.algebra(r) for r in pool]
        self._elements = None

    def elements(self):
        if self._elements is None:
            out = []
            for g in self.generators:
                out.append((g, self.algebra.one, g))
                for r in self.pool:
                    v = self.star(r) * g * r
                    if not v.is_zero():
                        out.append((g, r, v))
            self._elements = out
        return self._elements

    def certify(self, target):
        target = self.algebra(target)
        for g, r, v in self.elements():
            s = positive_ratio(target, v)
            if s is not None:
                return ClosureCertificate(g, r, s, four_squares(s))
        return None

    def _member(self, u):
        return MEMBER if self.certify(u) is not None else UNKNOWN

    def improper_pair(self):
        """Two closure elements ``v`` and ``-s v`` (s > 0), or None."""
        els = self.elements()
        for (g1, r1, v1), (g2, r2, v2) in itertools.combinations(els, 2):
            s = positive_ratio(-v2, v1)
            if s is not None:
                return (g1, r1, v1), (g2, r2, v2), s
        return None


def positive_ratio(u, v):
    """Positive rational ``s`` with ``u == s * v`` or None."""
    if v.is_zero() or set(u.coeffs) != set(v.coeffs):
        return None
    k = next(iter(v.coeffs))
    ratio = u.coeffs[k] / v.coeffs[k]
    q = ratio.as_rational()
    if q is None or q <= 0:
        return None
    if u != v * q:
        return None
    return q


def four_squares(s):
    """Rationals ``q_1..q_4`` with ``sum q_k^2 = s`` for ``s >= 0``."""
    from sympy.solvers.diophantine.diophantine import sum_of_four_squares

    s = Fraction(s)
    if s < 0:
        raise ValueError("negative number is not a sum of squares")
    n = s.numerator * s.denominator
    parts = sum_of_four_squares(n) if n else (0, 0, 0, 0)
    return tuple(Fraction(int(p), s.denominator) for p in parts)
