"""
实验结果导出
"""

from .stats_exporter import (
    TABLE_COLUMNS,
    ExportedFiles,
    StatsExporter,
    export_stats,
    format_table,
    load_stats,
    reference_name,
    stats_to_document,
)

__all__ = [
    "TABLE_COLUMNS",
    "ExportedFiles",
    "StatsExporter",
    "export_stats",
    "format_table",
    "load_stats",
    "reference_name",
    "stats_to_document",
]
