from .complexes import (
    conjugation_cp2_endo,
    cp2_profile_data,
    doubling_s3_endo,
    s3_builtin_data,
    s3_data,
    triangle_data,
    two_edges_data,
    unknown_vertex_data,
    wrong_shape_endo,
)
from .report_run_config import ReportRunConfig
from .report_configs import report_configs

__all__ = [
    "conjugation_cp2_endo",
    "cp2_profile_data",
    "doubling_s3_endo",
    "s3_builtin_data",
    "s3_data",
    "triangle_data",
    "two_edges_data",
    "unknown_vertex_data",
    "wrong_shape_endo",
    "ReportRunConfig",
    "report_configs",
]
