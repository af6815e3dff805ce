"""Command-line front end and the text-to-report pipeline behind it."""

from .evaluation import EvalReport, run_error_injection_eval
from .pipeline import (
    CorpusStats, LineReport, Report, RunConfig, VerseReport,
    process_file, process_text, split_lines,
)
from .render import emit_compact, emit_detailed, emit_table, render_report

__all__ = [
    "CorpusStats", "EvalReport", "LineReport", "Report", "RunConfig", "VerseReport",
    "emit_compact", "emit_detailed", "emit_table", "process_file", "process_text",
    "render_report", "run_error_injection_eval", "split_lines",
]
