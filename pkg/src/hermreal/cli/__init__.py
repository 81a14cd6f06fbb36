"""Spec-file driven checks and reports."""
from .expr import ParseError, eval_expr, parse_expr
from .main import main
from .report import REPORT_SCHEMA, emit_report, report_object
from .runner import ReportRecord, run_checks
from .specfile import SpecDocument, ValidationError, load_spec, parse_spec

__all__ = [
    "ParseError", "eval_expr", "parse_expr", "main", "REPORT_SCHEMA", "emit_report",
    "report_object", "ReportRecord", "run_checks", "SpecDocument", "ValidationError",
    "load_spec", "parse_spec",
]
