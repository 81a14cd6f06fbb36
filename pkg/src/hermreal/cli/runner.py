"""Run the checks named in a spec document and collect report records."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property

from ..algebra import CrossedProduct, crossed_from_symbol
from ..errors import HermrealError
from ..hermitian import (MEMBER, Contracted, Extended, diagonalize_hermitian,
                         extension_contraction, intersection_of_actions, norm_cocycle_failures,
                         norm_values, shift_law_holds)
from ..hermitian.cones import Acted
from ..matrixrep import RepresentationContext
from ..reality import (OppositePair, SOHSCertificate, Status, exti_predicates,
                       extension_formally_real, trace_form_report, verify_sohs)
from ..reality.core import _norm_pool, cone_existence, default_orderings, formal_reality_check
from ..sampling import random_algebra_element, random_element, rng_for
from .expr import ParseError
from .specfile import Entry, ValidationError, _expr

DEFAULT_BOUNDS = {"degree_bound": 6, "witness_pool": 20}


@dataclass
class ReportRecord:
    fixture: str
    check: str
    status: str
    ok: bool
    line: int = 0
    witness: object = None
    certificate: object = None
    values: dict = field(default_factory=dict)
    seed: int = 0
    bounds: dict = field(default_factory=dict)
    timing: float = 0.0
    error: str = None

    def to_json(self):
        return {
            "fixture": self.fixture, "check": self.check, "status": self.status,
            "ok": self.ok, "line": self.line, "witness": self.witness,
            "certificate": self.certificate, "values": self.values, "seed": self.seed,
            "bounds": dict(self.bounds), "timing": round(self.timing, 6), "error": self.error,
        }


# --- serialization of exact values -------------------------------------------------

def s(x):
    return str(x)


def matrix_json(M):
    return [[s(v) for v in row] for row in M.rows]


def ordering_json(o):
    return None if o is None else {"kind": "ordering", "description": repr(o)}


def certificate_json(c):
    if c is None:
        return None
    if isinstance(c, OppositePair):
        return {"kind": "opposite-pair", "c": s(c.c), "g1": s(c.g1),
                "norms1": [s(r) for r in c.norms1], "g2": s(c.g2),
                "norms2": [s(r) for r in c.norms2]}
    return {"kind": "note", "text": s(c)}


def _bool(b):
    return "true" if b else "false"


# --- per-document state --------------------------------------------------------

class Session:
    def __init__(self, doc, seed=0, bounds=None):
        self.doc = doc
        self.seed = seed
        self.bounds = {**DEFAULT_BOUNDS, **(bounds or {})}

    @cached_property
    def ctx(self):
        return RepresentationContext(self.doc.algebra, self.doc.involution, basis=self.doc.basis)

    @cached_property
    def crossed(self):
        D = self.doc.algebra
        if isinstance(D, CrossedProduct):
            return D, self.doc.involution
        C, inv, _ = crossed_from_symbol(D, self.doc.involution)
        return C, inv

    def element(self, text, line):
        return self.doc.algebra(_expr(Entry("element", text, line, 1), self.doc.namespace, "checks"))

    def norm_pool(self, K, conj):
        return _norm_pool(K, conj, self.bounds["degree_bound"])

    def samples(self, spec):
        return int(spec.options.get("samples", self.bounds["witness_pool"]))


# --- checks --------------------------------------------------------------------

def check_validate_involution(ses, spec):
    failures = ses.doc.involution.validate()
    return _bool(not failures), {"values": {"failures": [list(map(str, f)) for f in failures[:5]]}}


def check_validate_cocycle(ses, spec):
    C, _ = ses.crossed
    failures = C.validate_cocycle()
    return _bool(not failures), {"values": {"failures": [list(map(str, f)) for f in failures[:5]]}}


def check_gram(ses, spec):
    ctx = ses.ctx
    return "ok", {"values": {"basis": [s(e) for e in ctx.basis], "gram": matrix_json(ctx.gram)}}


def check_diagonalize(ses, spec):
    ctx = ses.ctx
    M = ctx.gram
    values = {}
    if "element" in spec.options:
        u = ses.element(spec.options["element"], spec.line)
        M = ctx.gram * ctx.lambda_rep(u)
        values["element"] = s(u)
    res = diagonalize_hermitian(M, 1, ctx.kconj)
    v = cone_existence(res.diagonal, ctx.K, ctx.kconj, norm_pool=ses.norm_pool(ctx.K, ctx.kconj))
    values.update({"matrix": matrix_json(M), "diagonal": [s(d) for d in res.diagonal],
                   "P": matrix_json(res.P), "verified": res.verified})
    return v.status.value, {"values": values, "witness": ordering_json(v.witness),
                            "certificate": certificate_json(v.certificate)}


def check_reality(ses, spec):
    ctx = ses.ctx
    v = formal_reality_check(ctx.gram, ctx.kconj, 1)
    return v.status.value, {"values": {"gram": matrix_json(ctx.gram), **v.diagnostics},
                            "witness": ordering_json(v.witness),
                            "certificate": certificate_json(v.certificate)}


def check_crossinvo(ses, spec):
    C, inv = ses.crossed
    v = extension_formally_real(C, inv)
    return v.status.value, {"values": dict(v.diagnostics), "witness": ordering_json(v.witness),
                            "certificate": certificate_json(v.certificate)}


def check_exti(ses, spec):
    C, inv = ses.crossed
    preds = exti_predicates(C, inv)
    status = _bool(preds[0]) if len(set(preds)) == 1 else "inconsistent"
    names = ("commuting_action", "norms_central", "gram_offdiagonal_zero")
    return status, {"values": dict(zip(names, preds))}


def check_sohs_verify(ses, spec):
    cert = ses.doc.certificate
    if cert is None:
        raise ValidationError("certificate", "sohs-verify needs a [certificate] section", spec.line)
    ok, residual = verify_sohs(SOHSCertificate([v for _, v in cert["elements"]], cert["target"]),
                               ses.doc.involution)
    return _bool(ok), {"values": {"residual": s(residual)},
                       "certificate": {"kind": "sohs", "target": s(cert["target"]),
                                       "elements": {k: s(v) for k, v in cert["elements"]}}}


def check_trace_form(ses, spec):
    rep = trace_form_report(ses.doc.algebra, ses.doc.involution, ctx=ses.ctx)
    psd = rep.is_psd
    status = "unknown" if psd is None else _bool(psd)
    values = {"gram": matrix_json(rep.gram), "lambda_gram": matrix_json(rep.lambda_gram),
              "routes_agree": rep.routes_agree,
              "diagonal": [s(d) for d in rep.diagonalization.diagonal],
              "signs": {k: list(v) for k, v in rep.signs.items()}}
    if not rep.routes_agree:
        return "inconsistent", {"values": values}
    return status, {"values": values}


def check_mainext_sample(ses, spec):
    C, inv = ses.crossed
    if not all(exti_predicates(C, inv)):
        return "hypothesis-failed", {"values": {"reason": "e_g* e_g not in K or action does not commute"}}
    rng = rng_for(ses.seed)
    n = ses.samples(spec)
    values = {"norm_cocycle_failures": [list(p) for p in norm_cocycle_failures(C, inv)]}
    shift_ok = 0
    for _ in range(n):
        u, d = random_algebra_element(C, rng), random_algebra_element(C, rng)
        shift_ok += all(shift_law_holds(C, inv, u, d, g) for g in C.group)
    values["shift_law"] = f"{shift_ok}/{n}"
    a = norm_values(C, inv)
    ctx = RepresentationContext(C, inv)
    cones = []
    for o in default_orderings(C.K, inv.k_conj):
        if all(o.member(x) is MEMBER for x in a.values()):
            cones.append(o)
    agree = total = 0
    for N in cones:
        ec = extension_contraction(N, ctx)
        inter = intersection_of_actions(N, C, inv)
        Mc = Contracted(Extended(N, ctx), ctx.presentation, ctx.kconj)
        cec = extension_contraction(Mc, ctx)
        for _ in range(n):
            k = random_element(C.K, rng)
            k = k + inv.k_conj(k)
            checks = [ec.member(k) == inter.member(k), cec.member(k) == Mc.member(k)]
            checks += [Acted(Mc, C.actions[g], a[g]).member(k) == Mc.member(k) for g in C.group]
            agree += all(checks)
            total += 1
    values["cones"] = [repr(o) for o in cones]
    values["cone_identities"] = f"{agree}/{total}"
    ok = not values["norm_cocycle_failures"] and shift_ok == n and agree == total
    return _bool(ok), {"values": values}


CHECK_FUNCTIONS = {
    "validate-involution": check_validate_involution,
    "validate-cocycle": check_validate_cocycle,
    "gram": check_gram,
    "diagonalize": check_diagonalize,
    "reality": check_reality,
    "crossinvo": check_crossinvo,
    "exti": check_exti,
    "sohs-verify": check_sohs_verify,
    "trace-form": check_trace_form,
    "mainext-sample": check_mainext_sample,
}

# statuses that count as success when no ``expect=`` is given
_DEFAULT_OK = {
    "validate-involution": {"true"}, "validate-cocycle": {"true"}, "gram": {"ok"},
    "exti": {"true", "false"}, "sohs-verify": {"true"}, "trace-form": {"true", "false", "unknown"},
    "mainext-sample": {"true"},
}
_VERDICTS = {st.value for st in Status}


def run_check(ses, spec):
    t0 = time.perf_counter()
    rec = ReportRecord(ses.doc.name, spec.name, "ERROR", False, spec.line, seed=ses.seed,
                       bounds=dict(ses.bounds))
    try:
        status, extra = CHECK_FUNCTIONS[spec.name](ses, spec)
        rec.status = status
        for k, v in extra.items():
            setattr(rec, k, v)
        expect = spec.options.get("expect")
        if expect is not None:
            rec.ok = status == expect
        else:
            rec.ok = status in _DEFAULT_OK.get(spec.name, _VERDICTS)
    except (HermrealError, ValidationError, ParseError, ArithmeticError) as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
    rec.timing = time.perf_counter() - t0
    return rec


def run_checks(doc, seed=0, bounds=None):
    """One record per declared check, in declaration order."""
    ses = Session(doc, seed, bounds)
    return [run_check(ses, spec) for spec in doc.checks]
