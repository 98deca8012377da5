"""Connection files, analysis runs and reports."""

from .fileformat import AnalysisRequest, parse_batch, parse_connection_file, parse_point
from .main import main
from .report import dumps_machine, machine_document, render_text, run, run_batch

__all__ = [
    "AnalysisRequest", "parse_batch", "parse_connection_file", "parse_point",
    "run", "run_batch", "machine_document", "dumps_machine", "render_text", "main",
]
