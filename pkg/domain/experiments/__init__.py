"""
随机实验子领域：场景生成、DRF 与 PDRF 的偏差统计
"""

from .harness import (
    PRESETS,
    bucket_deltas,
    compare,
    generate_scenario,
    run_experiment,
    run_trial,
    user_id_for,
)
from .value_objects import STAT_COLUMNS, DeviationStats, ExperimentConfig, TrialStats

__all__ = [
    "PRESETS",
    "STAT_COLUMNS",
    "DeviationStats",
    "ExperimentConfig",
    "TrialStats",
    "bucket_deltas",
    "compare",
    "generate_scenario",
    "run_experiment",
    "run_trial",
    "user_id_for",
]
