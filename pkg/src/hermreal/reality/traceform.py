"""Hermitian trace forms ``a -> tr(a* a)`` and related sampled oracles."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import NotRealEmbeddable
from ..hermitian.cones import MEMBER, NONMEMBER, FieldCone
from ..hermitian.congruence import diagonalize_hermitian
from ..matrix import Matrix
from ..matrixrep import RepresentationContext
from ..projection import reduced_trace
from ..sampling import random_algebra_element, random_element, rng_for
from .core import default_orderings


@dataclass
class TraceFormReport:
    basis: list
    gram: Matrix
    lambda_gram: Matrix
    diagonalization: object
    signs: dict = field(default_factory=dict)
    psd: dict = field(default_factory=dict)

    @property
    def routes_agree(self):
        return self.gram == self.lambda_gram

    @property
    def is_psd(self):
        """True/False when every ordering agrees, None otherwise."""
        vals = set(self.psd.values())
        return vals.pop() if len(vals) == 1 else None


def trace_value(z, ctx):
    """``tr(z)`` through the subfield projection."""
    return reduced_trace(z, ctx.presentation)


def lambda_trace(z, ctx):
    """``tr(z)`` as the matrix trace of the regular representation."""
    t = ctx.lambda_rep(z).trace()
    b = t.in_base() if hasattr(t, "in_base") else t
    return ctx.algebra.F(b if b is not None else t)


def trace_form_report(algebra, involution, basis=None, orderings=None, ctx=None):
    ctx = ctx or RepresentationContext(algebra, involution)
    F = algebra.F
    basis = list(basis) if basis is not None else algebra.basis()
    stars = [involution(g) for g in basis]
    prods = [[s * g for g in basis] for s in stars]
    gram = Matrix(F, [[trace_value(p, ctx) for p in row] for row in prods])
    lgram = Matrix(F, [[lambda_trace(p, ctx) for p in row] for row in prods])
    res = diagonalize_hermitian(gram, 1, F.conj)
    rep = TraceFormReport(basis, gram, lgram, res)
    orderings = default_orderings(F) if orderings is None else orderings
    for o in orderings:
        try:
            signs = [o.sign(d) for d in res.diagonal]
        except NotRealEmbeddable:
            continue
        rep.signs[repr(o)] = signs
        rep.psd[repr(o)] = all(s >= 0 for s in signs)
    return rep


def star_ordering_check(P, algebra=None, involution=None, generators=(), samples=20, seed=0):
    """Sampled test that ``P`` is multiplicatively closed and contains the
    trace-form values ``tr(a* a)`` (and any explicit generators).

    Returns ``(ok, witness)``; the witness is the first failing value.
    """
    rng = rng_for(seed)
    F = P.K
    for g in generators:
        if P.member(g) is not MEMBER:
            return False, g
    members = []
    for _ in range(samples):
        e = random_element(F, rng)
        if P.is_hermitian(e) and P.member(e) is MEMBER:
            members.append(e)
    for u, v in zip(members, members[1:]):
        if P.member(u * v) is not MEMBER:
            return False, u * v
    if algebra is not None:
        ctx = RepresentationContext(algebra, involution)
        for _ in range(samples):
            a = random_algebra_element(algebra, rng)
            t = trace_value(involution(a) * a, ctx)
            if P.member(t) is not MEMBER:
                return False, t
    return True, None


class TraceTestCone(FieldCone):
    """``{c in sym(K) : tr(k* c k) in target for all k}`` with the universal
    quantifier replaced by a finite pool: a refuting ``k`` gives NONMEMBER,
    otherwise MEMBER.  This is a semi-decision."""

    semi_decision = True

    def __init__(self, K, conj, target, trace, pool):
        super().__init__(K, conj)
        self.target = target
        self.trace = trace
        self.pool = list(pool)

    def refute(self, c):
        for k in self.pool:
            t = self.trace(self.conj(k) * c * k)
            if self.target.member(t) is NONMEMBER:
                return k
        return None

    def _member(self, c):
        return NONMEMBER if self.refute(c) is not None else MEMBER


def sampled_trace_cone(ctx, target, samples=12, seed=0):
    """M_P (or M_N) for the subfield of ``ctx`` with a sampled pool."""
    rng = rng_for(seed)
    K = ctx.K
    pool = [K.one] + [random_element(K, rng) for _ in range(samples)]
    pool = [k for k in pool if not k.is_zero()]
    return TraceTestCone(K, ctx.kconj, target, K.trace, pool)
