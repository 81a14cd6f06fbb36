"""Acceptance criteria 1-10; each test prints one PASS/FAIL line."""
import contextlib
import importlib
import io
import json
import os
import random
import tempfile
import time

import jsonschema
import pytest

from hermreal.algebra import QuantumPlane, SymbolAlgebra, crossed_from_symbol, quaternion
from hermreal.cli.main import fixture_names, read_spec_source
from hermreal.cli.report import REPORT_SCHEMA
from hermreal.cli.specfile import parse_spec
from hermreal.hermitian import (MEMBER, NONMEMBER, Contracted, EmbeddingOrdering, Extended,
                                FieldCone, LeadingTermCone, Lifted, Restricted, SOHSClosure,
                                Twisted, alternating_degenerate_witness, diagonalize_hermitian,
                                extension_contraction, intersection_of_actions,
                                norm_cocycle_failures, norm_values, same_congruence_classes,
                                shift_law_holds)
from hermreal.hermitian.cones import Acted
from hermreal.matrix import Matrix
from hermreal.matrixrep import RepresentationContext, extend_involution, lambda_rep
from hermreal.projection import default_presentation, projection_f
from hermreal.reality import (OppositePair, SOHSCertificate, Status, cone_existence,
                              context_reality, exti_predicates, extension_formally_real,
                              formal_reality_check, lambda_trace, trace_form_report,
                              trace_value, verify_sohs)
from hermreal.sampling import (random_algebra_element, random_alternating_matrix, random_element,
                               random_hermitian_matrix, random_matrix)
from hermreal.scalars import QQ, NumberField, cyclotomic3

cli_main = importlib.import_module("hermreal.cli.main")


@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def record(number, title, seconds):
        t0 = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - t0
            assert elapsed < seconds, f"took {elapsed:.2f}s, bound {seconds}s"
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - t0
            with capsys.disabled():
                print(f"\ncriterion {number:>2}: {status}  {title} ({elapsed:.2f}s)")
    return record


def _d3(a, b):
    K = cyclotomic3()
    D = SymbolAlgebra(K, 3, a, b, K.gen)
    return D, D.involution(D.x, D.y)


def _sohs_elements(D):
    e = D(D.F.gen)
    x, y = D.x, D.y
    ie = D.inverse(e)
    return [ie * x + x * x + y * 2, 1 - ie * x * y - x * x * y * y,
            x * 2 - x * x + x * y * y, 3 - x - x * x]


def test_criterion_01_sohs_identity(criterion):
    with criterion(1, "sum of hermitian squares vanishes at a = b = 2", 1.0):
        D, inv = _d3(2, 2)
        ok, residual = verify_sohs(SOHSCertificate(_sohs_elements(D)), inv)
        assert ok and residual.is_zero()
        D3, inv3 = _d3(3, 3)
        ok3, residual3 = verify_sohs(SOHSCertificate(_sohs_elements(D3)), inv3)
        assert not ok3 and not residual3.is_zero()


def test_criterion_02_gram_and_diagonalization(criterion, D3):
    with criterion(2, "symbol-algebra Gram matrix, diagonal (1, b, -b), verdict", 5.0):
        D, inv = D3
        ctx = RepresentationContext(D, inv)
        p = ctx.presentation
        K, b = ctx.K, ctx.K(D.b)
        y = D.y
        assert projection_f(D.one, p) == K.one
        for k in (1, 2, 4):
            assert projection_f(y ** k, p).is_zero()
        assert projection_f(y ** 3, p) == b
        assert ctx.gram == Matrix(K, [[1, 0, 0], [0, 0, b], [0, b, 0]])
        res = diagonalize_hermitian(ctx.gram, 1, ctx.kconj)
        assert res.verified
        assert same_congruence_classes(res.diagonal, [K.one, b, -b], ctx.kconj) is not None
        v = context_reality(ctx)
        assert v.status is Status.NOT_FORMALLY_REAL
        assert isinstance(v.certificate, OppositePair) and v.certificate.verify(ctx.kconj)
        assert v.certificate.c == b


def test_criterion_03_quaternion_extension(criterion, quat_ab):
    with criterion(3, "quaternion Gram, regular representation, extended involution", 5.0):
        Q, inv = quat_ab
        ctx = RepresentationContext(Q, inv)
        F, K, c = Q.F, ctx.K, ctx.kconj
        b, i = K(Q.b), K.gen
        assert ctx.gram == Matrix.diag(K, [1, b])
        rng = random.Random(30)
        for _ in range(20):
            al, be, ga, de = (random_element(F, rng) for _ in range(4))
            z = Q(al) + Q.x * be + Q.y * ga + Q.x * Q.y * de
            shown = Matrix(K, [[al + be * i, b * (ga + de * i)], [ga - de * i, al - be * i]])
            assert lambda_rep(z, ctx) == shown
        for _ in range(20):
            X = random_matrix(K, 2, rng)
            x, y, u, v = X[0, 0], X[0, 1], X[1, 0], X[1, 1]
            assert extend_involution(X, ctx) == Matrix(K, [[c(x), b * c(u)], [c(y) / b, c(v)]])
        for _ in range(50):
            a = random_algebra_element(Q, rng)
            assert ctx.lambda_rep(inv(a)) == ctx.sharp(ctx.lambda_rep(a))


def _right_k0(u):
    return u.algebra.right_coords(u)[0]


def test_criterion_04_projection_laws(criterion, quat23, D3, D3var, quat_ab):
    with criterion(4, "projection laws and the two trace routes", 10.0):
        rng = random.Random(40)
        for D, inv in (quat23, D3var, quat_ab, D3):
            p = default_presentation(D, inv)
            ctx = RepresentationContext(D, inv, p)
            conj = ctx.kconj
            assert projection_f(D.one, p) == p.K.one
            for _ in range(100):
                z = random_algebra_element(D, rng)
                fz = projection_f(z, p)
                assert fz == _right_k0(z)
                assert projection_f(inv(z), p) == conj(fz)
                k1, k2 = random_element(p.K, rng), random_element(p.K, rng)
                assert projection_f(p.embed(k1) * z * p.embed(k2), p) == k1 * fz * k2
                assert p.x * p.embed(fz) == p.embed(fz) * p.x
            for _ in range(50):
                z = random_algebra_element(D, rng)
                assert trace_value(z, ctx) == lambda_trace(z, ctx)


def test_criterion_05_cone_calculus(criterion, sqrt2):
    with criterion(5, "lift/restrict inverse, twist, degenerate alternating case", 10.0):
        rng = random.Random(50)
        for emb in sqrt2.embeddings:
            N = EmbeddingOrdering(sqrt2, emb)
            L = Lifted(N)
            G = Restricted(L, 3)
            FG = Lifted(Restricted(L, 2))
            for _ in range(50):
                c = random_element(sqrt2, rng)
                assert G(c) is N(c)
                X = random_hermitian_matrix(sqrt2, 2, rng)
                assert FG(X) is L(X)
        K = cyclotomic3()
        for eta in (1, -1):
            base = Lifted(FieldCone(K, None, eta))
            checked = 0
            while checked < 50:
                A = random_hermitian_matrix(K, 2, rng, eps=eta)
                if A.det().is_zero():
                    continue
                T = Twisted(base, A, eta)
                X = random_matrix(K, 2, rng)
                Xh = X + T.star(X)
                assert T.is_hermitian(Xh) and base.is_hermitian(A * Xh)
                if not T.is_hermitian(X):
                    assert not base.is_hermitian(A * X)
                checked += 1
        assert formal_reality_check(Matrix(QQ, [[0, 1], [-1, 0]]), eta=-1).status \
            is Status.NOT_FORMALLY_REAL
        for seed in range(10):
            C = random_alternating_matrix(2 + seed % 4, seed)
            Qw, res = alternating_degenerate_witness(C)
            B = res.block_matrix()
            assert Qw.transpose() * B * Qw == -B


def test_criterion_06_crossed_product_criteria(criterion, D3, crossed_quat):
    with criterion(6, "crossed-product predicates and verdicts", 5.0):
        for name in fixture_names():
            label, text = read_spec_source(name)
            doc = parse_spec(text, name=label)
            C, cinv, _ = crossed_from_symbol(doc.algebra, doc.involution)
            assert len(set(exti_predicates(C, cinv))) == 1, name
        D, inv = D3
        C3, i3, _ = crossed_from_symbol(D, inv)
        assert exti_predicates(C3, i3) == (False, False, False)
        assert extension_formally_real(C3, i3).status is Status.NOT_FORMALLY_REAL
        C, cinv, _ = crossed_quat
        assert exti_predicates(C, cinv) == (True, True, True)
        v = extension_formally_real(C, cinv)
        assert v.status is Status.FORMALLY_REAL
        assert isinstance(v.witness, EmbeddingOrdering)


def test_criterion_07_extension_identities(criterion, crossed_quat):
    with criterion(7, "norm cocycle, shift law, extension-contraction identities", 20.0):
        C, inv, _ = crossed_quat
        assert norm_cocycle_failures(C, inv) == []
        rng = random.Random(70)
        group = list(C.group)
        for _ in range(30):
            u, d = random_algebra_element(C, rng), random_algebra_element(C, rng)
            assert shift_law_holds(C, inv, u, d, rng.choice(group))
        ctx = RepresentationContext(C, inv)
        a = norm_values(C, inv)
        for emb in C.K.embeddings:
            N = EmbeddingOrdering(C.K, emb, inv.k_conj)
            assert all(N(x) is MEMBER for x in a.values())
            ec = extension_contraction(N, ctx)
            inter = intersection_of_actions(N, C, inv)
            Mc = Contracted(Extended(N, ctx), ctx.presentation, ctx.kconj)
            cec = extension_contraction(Mc, ctx)
            for _ in range(50):
                k = random_element(C.K, rng)
                k = k + inv.k_conj(k)
                assert ec(k) is inter(k)
                assert cec(k) is Mc(k)
                for g in group:
                    assert Acted(Mc, C.actions[g], a[g])(k) is Mc(k)


def test_criterion_08_counterexamples(criterion, quat_ab):
    with criterion(8, "cones that contain b but do not extend", 30.0):
        Q = quaternion(QQ, 2, 5, K=NumberField("i", [-2, 0, 1], embeddings=[(1, 2), (-2, -1)]))
        inv = Q.involution(Q.x, Q.y)
        i, j = Q.x, Q.y
        assert inv(j) * i * j == -5 * i
        ctx = RepresentationContext(Q, inv)
        K = ctx.K
        orderings = [EmbeddingOrdering(K, e) for e in K.embeddings]
        assert len(orderings) == 2
        assert all(N(K.one) is MEMBER and N(K(5)) is MEMBER for N in orderings)
        S = SOHSClosure(inv, [i], [j, i, Q.one])
        cert = S.certify(-i)
        assert cert is not None and cert.evaluate(inv) == -i
        # function-field version: the same obstruction and the lambda(j) refutation
        P, pinv = quat_ab
        assert pinv(P.y) * P.x * P.y == -P.x * P.b
        pctx = RepresentationContext(P, pinv)
        Kp, b = pctx.K, pctx.K(P.b)
        M = pctx.gram * pctx.lambda_rep(P.y)
        res = diagonalize_hermitian(M, 1, pctx.kconj)
        assert same_congruence_classes(res.diagonal, [-b, b], pctx.kconj) is not None
        gens = list(res.diagonal) + [b]
        assert cone_existence(gens, Kp, pctx.kconj).status is Status.NOT_FORMALLY_REAL
        # leading-term cones on the plane with j i = -i j
        plane = QuantumPlane(QQ, -1, names=("i", "j"))
        star = plane.involution(plane.x, plane.y)
        M1 = LeadingTermCone(star, lambda m, n: (-1) ** ((m * n) // 2), label="M1")
        M2 = LeadingTermCone(star, lambda m, n: (-1) ** ((m * n) // 2 + n), label="M2")
        rng = random.Random(80)

        def sample(even=False):
            u = plane(0)
            for _ in range(rng.randint(1, 3)):
                m, n = rng.randint(0, 3), rng.randint(0, 3)
                u = u + plane.monomial(m, 2 * (n // 2) if even else n, rng.randint(-4, 4) or 1)
            return u + star(u)

        for _ in range(100):
            s, t, r = sample(), sample(), sample()
            for Mk in (M1, M2):
                if s.is_zero():
                    continue
                assert not (Mk(s) is MEMBER and Mk(-s) is MEMBER)
                if Mk(s) is MEMBER:
                    assert Mk(star(r) * s * r) is MEMBER
                    if not t.is_zero() and Mk(t) is MEMBER:
                        assert Mk(s + t) is MEMBER
            e = sample(even=True)
            if not e.is_zero():
                assert M1(e) is M2(e)
        assert M1(plane.y) is MEMBER and M2(plane.y) is NONMEMBER


def test_criterion_09_trace_forms(criterion, quat_ab, D3var):
    with criterion(9, "quaternion trace-form Gram and the symbol-algebra trace form", 5.0):
        Q, inv = quat_ab
        a, b = Q.a, Q.b
        rep = trace_form_report(Q, inv, basis=[Q.one, Q.x, Q.y, Q.x * Q.y])
        D, dinv = D3var
        drep = trace_form_report(D, dinv)
        assert drep.routes_agree and drep.is_psd is False
        assert verify_sohs(SOHSCertificate(_sohs_elements(D)), dinv)[0]
        assert rep.lambda_gram == Matrix.diag(Q.F, [2, 2 * a, 2 * b, -2 * a * b])


def test_criterion_10_cli(criterion):
    with criterion(10, "shipped fixtures through the command line", 60.0):
        names = fixture_names()
        assert len(names) == 5
        outs = []
        for _ in range(2):
            buf = io.BytesIO()
            assert cli_main.main(["check", *names, "--json", "--seed", "7"], out=buf) == 0
            report = json.loads(buf.getvalue())
            jsonschema.validate(report, REPORT_SCHEMA)
            for rec in report["records"]:
                rec.pop("timing")
            outs.append(report)
        assert outs[0] == outs[1]
        bad = "[field]\n[algebra]\nkind = quaternion\na = 2\nb = 3\n[involution]\ni = z\nj = j\n"
        with contextlib.redirect_stderr(io.StringIO()):
            with tempfile.TemporaryDirectory() as d:
                path = os.path.join(d, "bad.spec")
                with open(path, "w") as fh:
                    fh.write(bad)
                assert cli_main.main(["check", path], out=io.BytesIO()) == 2
                with open(path, "w") as fh:
                    fh.write(bad.replace("i = z", "i = i") + "[checks]\nreality expect=NOT_FORMALLY_REAL\n")
                assert cli_main.main(["check", path], out=io.BytesIO()) == 1
