"""Extension and contraction of cones along a crossed product ``D = (K/F, Phi)``.

Scalars move across basis elements by ``c e_t = e_t c^t``.
"""
from __future__ import annotations

from ..projection import projection_f_crossed
from .cones import Acted, Contracted, Extended, Intersection


def norm_values(C, inv):
    """``a_g = e_g* e_g`` as elements of K (None where it leaves K)."""
    out = {}
    for g in C.group:
        n = inv(C.e(g)) * C.e(g)
        out[g] = C.to_K(n) if set(n.coeffs) <= {C.identity} else None
    return out


def norm_cocycle_failures(C, inv):
    """Pairs ``(s, t)`` where ``a_s a_t^s != Phi(t,s)* a_ts Phi(t,s)``."""
    a = norm_values(C, inv)
    conj = inv.k_conj
    bad = []
    for s in C.group:
        for t in C.group:
            phi = C.cocycle[(t, s)]
            lhs = a[s] * C.act(s, a[t])
            rhs = conj(phi) * a[C.mult(t, s)] * phi
            if lhs != rhs:
                bad.append((s, t))
    return bad


def shift_by(C, d, s):
    """``d_s = sum_g e_{gs} Phi(g, s) k_g^s`` for ``d = sum_g e_g k_g``."""
    acc = C(0)
    for g, k in C(d).coeffs.items():
        acc = acc + C.e(C.mult(g, s), C.cocycle[(g, s)] * C.act(s, k))
    return acc


def shift_law_holds(C, inv, u, d, s):
    """``f(d_s* u d_s) == a_s f(d* u d)^s``."""
    a_s = norm_values(C, inv)[s]
    ds = shift_by(C, d, s)
    lhs = projection_f_crossed(inv(ds) * u * ds)
    rhs = a_s * C.act(s, projection_f_crossed(inv(d) * u * d))
    return lhs == rhs


def acted_family(N, C, inv):
    """``{g: N_g}`` for every group element."""
    a = norm_values(C, inv)
    return {g: Acted(N, C.actions[g], a[g]) for g in C.group}


def extension_contraction(N, ctx):
    """``N^ec`` as a cone on K."""
    return Contracted(Extended(N, ctx), ctx.presentation, ctx.kconj)


def intersection_of_actions(N, C, inv):
    return Intersection(list(acted_family(N, C, inv).values()))
