"""Formal-reality verdicts, crossed-product criteria and trace forms."""
from .core import (OppositePair, RealityVerdict, SOHSCertificate, Status, check_commuting_action,
                   check_gram_offdiag, check_norms_central, cone_existence, context_reality,
                   default_orderings, exti_predicates, extension_formally_real,
                   formal_reality_check, norms, verify_sohs)
from .traceform import (TraceFormReport, TraceTestCone, lambda_trace, sampled_trace_cone,
                        star_ordering_check, trace_form_report, trace_value)

__all__ = [
    "TraceFormReport", "TraceTestCone", "lambda_trace", "sampled_trace_cone",
    "star_ordering_check", "trace_form_report", "trace_value",
    "OppositePair", "RealityVerdict", "SOHSCertificate", "Status", "check_commuting_action",
    "check_gram_offdiag", "check_norms_central", "cone_existence", "context_reality",
    "default_orderings", "exti_predicates", "extension_formally_real", "formal_reality_check",
    "norms", "verify_sohs",
]
