"""Exact symbolic verification workbench for the coloured deformation of GL(2)."""

from ._core import (
    ParseError,
    ReportEntry,
    SuiteConfig,
    ValidationError,
    VerificationReport,
    config_hash,
    emit_report,
    parse_config,
    render_relations,
    render_tables,
    run_suite,
    suite_names,
)

__all__ = [
    "ParseError",
    "ReportEntry",
    "SuiteConfig",
    "ValidationError",
    "VerificationReport",
    "config_hash",
    "emit_report",
    "parse_config",
    "render_relations",
    "render_tables",
    "run_suite",
    "suite_names",
]
