"""Eps-hermitian matrices, congruence diagonalization and cone oracles."""
from .congruence import (CongruenceResult, alternating_degenerate_witness, congruent_scalars,
                         diagonalize_hermitian, involution_is_trivial, is_eps_hermitian,
                         same_congruence_classes)
from .cones import (MEMBER, NONMEMBER, UNKNOWN, Acted, ClosureCertificate, ConeOracle,
                    Contracted, EmbeddingOrdering, Extended, FieldCone, Intersection,
                    LeadingTermCone, Lifted, Membership, MonomialSignOrdering, Restricted,
                    SOHSClosure, Twisted, four_squares, positive_ratio)
from .extension import (acted_family, extension_contraction, intersection_of_actions,
                        norm_cocycle_failures, norm_values, shift_by, shift_law_holds)


def cone_membership(e, cone):
    return cone.member(e)


def lift_cone(N):
    return Lifted(N)


def restrict_cone(M, n):
    return Restricted(M, n)


def twist_cone(M, A, eta=1):
    return Twisted(M, A, eta)


def cone_act(N, action, a_g):
    return Acted(N, action, a_g)


def cone_extend(N, ctx):
    return Extended(N, ctx)


def cone_restrict(M, ctx):
    return Contracted(M, ctx.presentation, ctx.kconj)


__all__ = [
    "CongruenceResult", "alternating_degenerate_witness", "congruent_scalars",
    "diagonalize_hermitian", "involution_is_trivial", "is_eps_hermitian",
    "same_congruence_classes", "MEMBER", "NONMEMBER", "UNKNOWN", "Acted",
    "ClosureCertificate", "ConeOracle", "Contracted", "EmbeddingOrdering", "Extended",
    "FieldCone", "Intersection", "LeadingTermCone", "Lifted", "Membership",
    "MonomialSignOrdering", "Restricted", "SOHSClosure", "Twisted", "four_squares",
    "positive_ratio", "cone_membership", "lift_cone", "restrict_cone", "twist_cone",
    "cone_act", "cone_extend", "cone_restrict", "acted_family", "extension_contraction",
    "intersection_of_actions", "norm_cocycle_failures", "norm_values", "shift_by",
    "shift_law_holds",
]
