"""Formal-reality verdicts for central simple algebras with involution."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from ..hermitian.congruence import diagonalize_hermitian, involution_is_trivial
from ..hermitian.cones import MEMBER, EmbeddingOrdering, MonomialSignOrdering, four_squares
from ..matrixrep import RepresentationContext
from ..projection import projection_f_crossed
from ..scalars.extension import NumberField
from ..scalars.funcfield import FunctionField
from ..scalars.rationals import QQ


class Status(enum.Enum):
    FORMALLY_REAL = "FORMALLY_REAL"
    NOT_FORMALLY_REAL = "NOT_FORMALLY_REAL"
    UNKNOWN = "UNKNOWN"


@dataclass
class OppositePair:
    """``c`` and ``-c`` both in the cone generated by ``gens``:
    ``c = g1 * n1`` and ``-c = g2 * n2`` with ``n_i`` sums of norms
    ``r r*`` (``r`` listed in ``norms_i``)."""

    c: object
    g1: object
    norms1: tuple
    g2: object
    norms2: tuple

    def verify(self, conj):
        def total(g, rs):
            acc = None
            for r in rs:
                t = r * g * conj(r)
                acc = t if acc is None else acc + t
            return acc

        return (not self.c.is_zero() and total(self.g1, self.norms1) == self.c
                and total(self.g2, self.norms2) == -self.c)


@dataclass
class RealityVerdict:
    status: Status
    witness: object = None
    certificate: object = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def is_real(self):
        return self.status is Status.FORMALLY_REAL


def default_orderings(K, conj=None):
    """Orderings known for ``K``: every isolating-interval embedding of a
    number field, the leading-coefficient ordering of a function field, and
    the order of Q."""
    if K is QQ:
        return [EmbeddingOrdering(QQ, None)]
    if isinstance(K, NumberField):
        if not K.embeddings and not involution_is_trivial(K, conj):
            # symmetric elements are rational for an imaginary quadratic field
            return [EmbeddingOrdering(K, None, conj)]
        return [EmbeddingOrdering(K, o, conj) for o in K.embeddings]
    if isinstance(K, FunctionField):
        base = default_orderings(K.base) if K.base is not QQ else [None]
        out = []
        for b in base:
            oracle = MonomialSignOrdering(K, None if b is None else b.oracle)
            out.append(EmbeddingOrdering(K, oracle, conj))
        return out
    return []


def _norm_pool(K, conj, bound=2):
    pool = [K.one]
    gens = list(K.all_gens().values())
    for g in gens:
        pool.extend([g, g + 1, g - 1])
    for q in range(2, bound + 1):
        pool.append(K(q))
    return pool


def _as_sum_of_norms(q, K, conj, pool):
    """Elements ``r_k`` with ``sum r_k r_k* = q``, or None (bounded search)."""
    qr = q.as_rational()
    if qr is not None:
        if qr <= 0:
            return None
        return tuple(K(v) for v in four_squares(qr) if v)
    for r in pool:
        n = r * conj(r)
        if n.is_zero():
            continue
        s = (q / n).as_rational()
        if s is not None and s > 0:
            return tuple(r * K(v) for v in four_squares(s) if v)
    return None


def cone_existence(gens, K, conj=None, orderings=None, norm_pool=None):
    """YES (an ordering contains every generator), NO (two generators are
    opposite up to sums of norms), or UNKNOWN."""
    conj = conj or K.conj
    gens = [K(g) for g in gens]
    if K.one not in gens:
        gens = [K.one] + gens
    orderings = default_orderings(K, conj) if orderings is None else orderings
    diag = {"generators": [str(g) for g in gens], "orderings": [repr(o) for o in orderings]}
    pool = norm_pool or _norm_pool(K, conj)
    nz = [g for g in gens if not g.is_zero()]
    found = []
    for g1, g2 in itertools.permutations(nz, 2):
        rs = _as_sum_of_norms(-g1 / g2, K, conj, pool)
        if rs is not None:
            cert = OppositePair(g1, g1, (K.one,), g2, rs)
            if cert.verify(conj):
                found.append(cert)
    if found:
        # report the certificate with the most readable c (no leading sign)
        found.sort(key=lambda c: str(c.c).startswith("-"))
        return RealityVerdict(Status.NOT_FORMALLY_REAL, certificate=found[0], diagnostics=diag)
    for o in orderings:
        try:
            if all(o.member(g) is MEMBER for g in gens):
                return RealityVerdict(Status.FORMALLY_REAL, witness=o, diagnostics=diag)
        except Exception as exc:  # an ordering that cannot decide is skipped
            diag.setdefault("skipped", []).append(f"{o!r}: {exc}")
    return RealityVerdict(Status.UNKNOWN, diagnostics=diag)


def formal_reality_check(A, conj=None, eta=1, orderings=None):
    """Is ``X -> A^-1 X* A`` formally real on ``M_n(K)``?"""
    K = A.field
    conj = conj or K.conj
    if K(eta) == K(-1) and involution_is_trivial(K, conj):
        return RealityVerdict(Status.NOT_FORMALLY_REAL,
                              certificate="eta = -1 with trivial involution",
                              diagnostics={"degenerate": True})
    res = diagonalize_hermitian(A, eta, conj)
    verdict = cone_existence(res.diagonal, K, conj, orderings)
    verdict.diagnostics["diagonal"] = [str(d) for d in res.diagonal]
    verdict.diagnostics["congruence_verified"] = res.verified
    return verdict


def context_reality(ctx: RepresentationContext, orderings=None):
    return formal_reality_check(ctx.gram, ctx.kconj, 1, orderings)


# --- crossed products ------------------------------------------------------------

def check_commuting_action(C, inv):
    """``(k*)^g == (k^g)*`` on every tower generator of K and every g."""
    gens = list(C.K.all_gens().values())
    return all(C.act(g, inv.k_conj(k)) == inv.k_conj(C.act(g, k))
               for g in C.group for k in gens)


def norms(C, inv):
    return {g: inv(C.e(g)) * C.e(g) for g in C.group}


def check_norms_central(C, inv):
    """``e_g* e_g`` lies in K for every g."""
    return all(set(a.coeffs) <= {C.identity} for a in norms(C, inv).values())


def check_gram_offdiag(C, inv):
    """``f(e_t* e_s) == 0`` for ``s != t``."""
    return all(projection_f_crossed(inv(C.e(t)) * C.e(s)).is_zero()
               for s in C.group for t in C.group if s != t)


def exti_predicates(C, inv):
    return (check_commuting_action(C, inv), check_norms_central(C, inv),
            check_gram_offdiag(C, inv))


def extension_formally_real(C, inv, orderings=None):
    """Formal reality of ``D (x) K`` for a crossed product ``D``."""
    preds = exti_predicates(C, inv)
    report = {"commuting_action": preds[0], "norms_central": preds[1],
              "gram_offdiagonal_zero": preds[2]}
    if not all(preds):
        ctx = RepresentationContext(C, inv)
        v = context_reality(ctx, orderings)
        cert = v.certificate if v.status is Status.NOT_FORMALLY_REAL else None
        failed = [k for k, ok in report.items() if not ok]
        return RealityVerdict(Status.NOT_FORMALLY_REAL, certificate=cert,
                              diagnostics={**report, "failed_clause": failed[0],
                                           "gram_diagonal": v.diagnostics.get("diagonal")})
    a = [C.to_K(n) for n in norms(C, inv).values()]
    v = cone_existence(a, C.K, inv.k_conj, orderings)
    v.diagnostics.update(report)
    v.diagnostics["norms"] = [str(x) for x in a]
    if v.status is not Status.FORMALLY_REAL:
        v.diagnostics["failed_clause"] = "cone_existence"
    return v


# --- sums of hermitian squares ---------------------------------------------------

@dataclass
class SOHSCertificate:
    elements: list
    target: object = 0


def verify_sohs(cert: SOHSCertificate, inv):
    """``(ok, residual)`` for ``sum d* d - target``."""
    D = inv.algebra
    acc = D(0)
    for d in cert.elements:
        d = D(d)
        acc = acc + inv(d) * d
    residual = acc - D(cert.target)
    return residual.is_zero(), residual
