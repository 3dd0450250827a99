"""
文件格式：场景读取与结果编码
"""

from .allocation_codec import (
    allocation_to_dict,
    decomposition_to_dict,
    deltas_to_dict,
    divisible_to_dict,
    dumps,
    format_trace,
    fraction_text,
    pdrf_to_dict,
    profile_to_dict,
    schedule_to_dict,
    trace_to_dict,
    with_schema,
)
from .scenario_file import STDIN_PATH, ScenarioFileException, ScenarioReader, parse_scenario

__all__ = [
    "STDIN_PATH",
    "ScenarioFileException",
    "ScenarioReader",
    "parse_scenario",
    "allocation_to_dict",
    "decomposition_to_dict",
    "deltas_to_dict",
    "divisible_to_dict",
    "dumps",
    "format_trace",
    "fraction_text",
    "pdrf_to_dict",
    "profile_to_dict",
    "schedule_to_dict",
    "trace_to_dict",
    "with_schema",
]
