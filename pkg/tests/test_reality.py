"""Formal-reality verdicts, crossed-product criteria and trace forms."""


from hermreal.algebra import SymbolAlgebra, crossed_from_symbol, quaternion
from hermreal.hermitian import MEMBER, NONMEMBER, EmbeddingOrdering
from hermreal.matrix import Matrix
from hermreal.matrixrep import RepresentationContext
from hermreal.reality import (OppositePair, SOHSCertificate, Status, TraceTestCone,
                              context_reality, cone_existence, exti_predicates,
                              extension_formally_real, formal_reality_check,
                              sampled_trace_cone, star_ordering_check, trace_form_report,
                              verify_sohs)
from hermreal.scalars import QQ, FunctionField, NumberField, SimpleExtension


def scalar_part(u):
    return u.coeffs.get((0, 0), u.algebra.F.zero)


def oracle_trace_gram(D, inv, basis):
    """``n * (constant coefficient of g_i* g_j)``: tr kills every other monomial."""
    return [[scalar_part(inv(g) * h) * D.n for h in basis] for g in basis]


def test_sohs_identity(D3var):
    D, inv = D3var
    e = D(D.F.gen)
    x, y = D.x, D.y
    ds = [e.algebra.inverse(e) * x + x * x + y * 2, 1 - D.inverse(e) * x * y - x * x * y * y,
          x * 2 - x * x + x * y * y, 3 - x - x * x]
    ok, residual = verify_sohs(SOHSCertificate(ds), inv)
    assert ok and residual.is_zero()
    total = sum((inv(d) * d for d in ds), D(0))
    assert total.is_zero()


def test_sohs_perturbed_fails():
    from hermreal.scalars import cyclotomic3

    K = cyclotomic3()
    D = SymbolAlgebra(K, 3, 3, 3, K.gen)
    inv = D.involution(D.x, D.y)
    e = D(K.gen)
    x, y = D.x, D.y
    ds = [D.inverse(e) * x + x * x + y * 2, 1 - D.inverse(e) * x * y - x * x * y * y,
          x * 2 - x * x + x * y * y, 3 - x - x * x]
    ok, residual = verify_sohs(SOHSCertificate(ds), inv)
    assert not ok and not residual.is_zero()


def test_symbol_algebra_not_formally_real(D3):
    D, inv = D3
    ctx = RepresentationContext(D, inv)
    v = context_reality(ctx)
    assert v.status is Status.NOT_FORMALLY_REAL
    cert = v.certificate
    assert isinstance(cert, OppositePair) and cert.verify(ctx.kconj)
    assert cert.c == ctx.K(D.b)


def test_quaternion_formally_real(quat23):
    Q, inv = quat23
    ctx = RepresentationContext(Q, inv)
    v = context_reality(ctx)
    assert v.status is Status.FORMALLY_REAL
    assert all(v.witness(g) is MEMBER for g in (ctx.K.one, ctx.K(3)))


def test_degenerate_case_is_not_real():
    A = Matrix(QQ, [[0, 1], [-1, 0]])
    v = formal_reality_check(A, eta=-1)
    assert v.status is Status.NOT_FORMALLY_REAL


def test_cone_existence_over_function_field_subfield():
    F = FunctionField(QQ, ["a", "b"])
    K = SimpleExtension(F, "i", [-F.var("a"), 0, 1])
    b = K(F.var("b"))
    v = cone_existence([1, b, -b], K)
    assert v.status is Status.NOT_FORMALLY_REAL and v.certificate.verify(K.conj)
    assert cone_existence([1, b], K).status is Status.UNKNOWN


def test_cone_existence_with_orderings(sqrt2):
    r = sqrt2.gen
    assert cone_existence([1, 3], sqrt2).status is Status.FORMALLY_REAL
    v = cone_existence([r], sqrt2)
    assert v.status is Status.FORMALLY_REAL and repr(v.witness).startswith("EmbeddingOrdering(i in (1")
    assert cone_existence([r, -3 * r], sqrt2).status is Status.NOT_FORMALLY_REAL


def test_crossed_product_predicates_and_verdicts(quat23, D3, crossed_quat):
    C, cinv, _ = crossed_quat
    assert exti_predicates(C, cinv) == (True, True, True)
    v = extension_formally_real(C, cinv)
    assert v.status is Status.FORMALLY_REAL and v.witness is not None
    D, inv = D3
    C3, i3, _ = crossed_from_symbol(D, inv)
    assert exti_predicates(C3, i3) == (False, False, False)
    v3 = extension_formally_real(C3, i3)
    assert v3.status is Status.NOT_FORMALLY_REAL
    assert v3.diagnostics["failed_clause"] == "commuting_action"


# --- trace forms -----------------------------------------------------------------

def test_quaternion_hermitian_trace_form(quat_ab):
    Q, inv = quat_ab
    basis = [Q.one, Q.x, Q.y, Q.x * Q.y]
    rep = trace_form_report(Q, inv, basis=basis)
    a, b = Q.a, Q.b
    assert rep.routes_agree
    assert rep.gram.rows == oracle_trace_gram(Q, inv, basis)
    assert rep.gram == Matrix.diag(Q.F, [2, 2 * a, 2 * b, 2 * a * b])


def test_trace_form_psd_pattern(quat23):
    Q, inv = quat23
    assert trace_form_report(Q, inv).is_psd is True
    std = Q.involution(-Q.x, -Q.y)
    assert trace_form_report(Q, std).is_psd is False


def test_d3_variant_trace_form_not_psd(D3var):
    D, inv = D3var
    rep = trace_form_report(D, inv)
    assert rep.routes_agree
    assert rep.gram.rows == oracle_trace_gram(D, inv, D.basis())
    assert rep.is_psd is False


def test_star_ordering_cases():
    P = EmbeddingOrdering(QQ, None)
    q = quaternion(QQ, 2, 3)
    assert star_ordering_check(P, q, q.involution(q.x, q.y))[0]
    h = quaternion(QQ, -1, -1)
    assert star_ordering_check(P, h, h.involution(-h.x, -h.y))[0]
    ok, witness = star_ordering_check(P, q, q.involution(-q.x, -q.y))
    assert not ok and P(witness) is NONMEMBER


def test_star_ordering_rejects_generator():
    K = NumberField("s", [-2, 0, 1], embeddings=[(-2, -1)])
    P = EmbeddingOrdering(K, K.embeddings[0])
    ok, witness = star_ordering_check(P, generators=[K.gen])
    assert not ok and witness == K.gen


def test_sampled_trace_cone(quat23):
    Q, inv = quat23
    ctx = RepresentationContext(Q, inv)
    P = EmbeddingOrdering(QQ, None)
    M = sampled_trace_cone(ctx, P, samples=12, seed=1)
    assert isinstance(M, TraceTestCone) and M.semi_decision
    K = ctx.K
    assert M(K.one) is MEMBER and M(K(-1)) is NONMEMBER
    assert M(K.gen) is NONMEMBER  # tr(k^2 sqrt 2) changes sign
    assert M(K(3) + K.gen) is MEMBER  # 3 + sqrt 2 is totally positive


def test_trace_psd_implies_extension_not_refuted(quat23, D3var):
    """Never a psd trace form next to a definite NOT_FORMALLY_REAL verdict."""
    Q, inv = quat23
    cases = [(Q, inv), (Q, Q.involution(-Q.x, -Q.y)), D3var]
    for D, star in cases:
        psd = trace_form_report(D, star).is_psd
        verdict = context_reality(RepresentationContext(D, star)).status
        if psd is True:
            assert verdict is not Status.NOT_FORMALLY_REAL
