"""
实验的值对象：配置、单次试验统计与跨试验聚合
"""

from dataclasses import dataclass, field, replace
from typing import Dict, Optional, Tuple

import numpy as np

from domain.allocation import DrfOptions
from domain.common import BaseValueObject


@dataclass(frozen=True)
class ExperimentConfig(BaseValueObject):
    """一组随机实验的配置。

    demand_interval / reserve_interval 为闭区间 [lo, hi]。
    需求下界允许为 0，此时全零需求向量会被重新抽样。
    """

    n_users: int
    n_resources: int
    demand_interval: Tuple[int, int]
    reserve_interval: Tuple[int, int]
    trials: int
    seed: int
    drf_options: DrfOptions = field(default_factory=lambda: DrfOptions(collect_trace=False))
    apply_finishing_pass: bool = False
    float_study: bool = False

    def __post_init__(self):
        object.__setattr__(self, "demand_interval", tuple(self.demand_interval))
        object.__setattr__(self, "reserve_interval", tuple(self.reserve_interval))
        super().__post_init__()

    def validate(self) -> None:
        if self.n_users < 1:
            self._reject(self.n_users, "n_users must be positive")
        if self.n_resources < 1:
            self._reject(self.n_resources, "n_resources must be positive")
        if self.trials < 1:
            self._reject(self.trials, "trials must be positive")
        if self.seed < 0:
            self._reject(self.seed, "seed must be non-negative")

        lo, hi = self.demand_interval
        if lo < 0 or lo > hi or hi == 0:
            self._reject(self.demand_interval, "demand interval must satisfy 0 <= lo <= hi, hi > 0")
        lo, hi = self.reserve_interval
        if lo < 1 or lo > hi:
            self._reject(self.reserve_interval, "reserve interval must satisfy 1 <= lo <= hi")

    def with_trials(self, trials: int) -> "ExperimentConfig":
        return replace(self, trials=trials)


@dataclass(frozen=True)
class TrialStats:
    """单次试验：按偏差大小分桶的用户数，以及参考性的计数与耗时。

    耗时字段不参与相等比较，串行与并行调度的结果因此可以直接比较。
    """

    trial_index: int
    under_1: int
    under_2: int
    under_gt2: int
    over_1: int
    over_2: int
    over_gt2: int
    unchanged: int
    max_under: int
    max_over: int
    drf_iterations: int = 0
    pdrf_operations: int = 0
    float_mismatches: Optional[int] = None
    drf_seconds: float = field(default=0.0, compare=False)
    pdrf_seconds: float = field(default=0.0, compare=False)

    @property
    def under_total(self) -> int:
        return self.under_1 + self.under_2 + self.under_gt2

    @property
    def over_total(self) -> int:
        return self.over_1 + self.over_2 + self.over_gt2

    @property
    def n_users(self) -> int:
        return self.under_total + self.over_total + self.unchanged


STAT_COLUMNS: Tuple[str, ...] = (
    "under_1", "under_2", "under_gt2", "under_max", "under_avg", "under_std",
    "over_1", "over_2", "over_gt2", "over_max", "over_avg", "over_std",
)


def _mean(values) -> float:
    return float(np.mean(values)) if len(values) else 0.0


def _sample_std(values) -> float:
    # 少于两次试验时样本标准差无定义，按 0 报告
    return float(np.std(values, ddof=1)) if len(values) >= 2 else 0.0


@dataclass(frozen=True)
class DeviationStats:
    """跨试验聚合。

    x_1 / x_2 / x_gt2 为每次试验偏差恰为 1、恰为 2、大于 2 的用户数的均值；
    x_avg 为每次试验偏差用户总数的均值，x_std 为其样本标准差（n-1）；
    x_max 为所有试验中单个用户的最大偏差任务数。
    """

    config: ExperimentConfig
    trials: Tuple[TrialStats, ...]
    std_kind: str = "sample"

    def summary(self) -> Dict[str, float]:
        under_totals = [t.under_total for t in self.trials]
        over_totals = [t.over_total for t in self.trials]
        return {
            "under_1": _mean([t.under_1 for t in self.trials]),
            "under_2": _mean([t.under_2 for t in self.trials]),
            "under_gt2": _mean([t.under_gt2 for t in self.trials]),
            "under_max": self.max_under,
            "under_avg": _mean(under_totals),
            "under_std": _sample_std(under_totals),
            "over_1": _mean([t.over_1 for t in self.trials]),
            "over_2": _mean([t.over_2 for t in self.trials]),
            "over_gt2": _mean([t.over_gt2 for t in self.trials]),
            "over_max": self.max_over,
            "over_avg": _mean(over_totals),
            "over_std": _sample_std(over_totals),
        }

    @property
    def max_under(self) -> int:
        return max((t.max_under for t in self.trials), default=0)

    @property
    def max_over(self) -> int:
        return max((t.max_over for t in self.trials), default=0)
