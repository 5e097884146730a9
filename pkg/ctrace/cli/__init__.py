from .report import Report
from .commands import (
    COMMANDS,
    cmd_cohomology,
    cmd_endo,
    cmd_ktheory,
    cmd_pi,
    cmd_sigma,
    cmd_split,
)
from .main import build_parser, main, run
from .report_runner import ReportRunner

__all__ = [
    "Report",
    "COMMANDS",
    "cmd_cohomology",
    "cmd_endo",
    "cmd_ktheory",
    "cmd_pi",
    "cmd_sigma",
    "cmd_split",
    "build_parser",
    "main",
    "run",
    "ReportRunner",
]
