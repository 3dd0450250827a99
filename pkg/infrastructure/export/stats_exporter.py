"""
实验统计导出

两个文件：
- <stem>.csv  表格，每个预设一行，区间下/上界在前
- <stem>.json 结构化文档：配置回显、种子、DRF 选项、汇总与逐次试验数组

同一配置重复导出得到逐字节相同的文件（耗时字段只在 include_timings=True 时写出）。
"""

import csv
import io
import json
from dataclasses import asdict, fields
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional

from domain.allocation import DrfOptions
from domain.experiments import STAT_COLUMNS, DeviationStats, ExperimentConfig, TrialStats
from infrastructure.config import Settings, get_settings
from infrastructure.logging import get_logger

logger = get_logger(__name__)

TABLE_COLUMNS = ("interval_lo", "interval_hi") + STAT_COLUMNS

AVG_DEFINITION = "mean per-trial count of users whose task count deviates (any magnitude)"

_TRIAL_ARRAYS = tuple(
    f.name for f in fields(TrialStats) if f.name not in ("drf_seconds", "pdrf_seconds")
)


class ExportedFiles(NamedTuple):
    table: Path
    document: Path


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def reference_name(options: DrfOptions) -> str:
    """与 compare 的分配器名一致"""
    return "drf" if options.remove_saturated else "drf-strict"


def format_table(stats: DeviationStats, delimiter: Optional[str] = None) -> str:
    """表头 + 一行汇总；没有试验时只有表头"""
    delimiter = delimiter or get_settings().stats_delimiter
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=delimiter, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    if stats.trials:
        lo, hi = stats.config.demand_interval
        summary = stats.summary()
        writer.writerow([lo, hi] + [_cell(summary[c]) for c in STAT_COLUMNS])
    return buffer.getvalue()


def stats_to_document(stats: DeviationStats, include_timings: bool = False) -> Dict[str, Any]:
    config = stats.config
    per_trial: Dict[str, List[Any]] = {
        name: [getattr(t, name) for t in stats.trials] for name in _TRIAL_ARRAYS
    }
    if not config.float_study:
        per_trial.pop("float_mismatches")
    if include_timings:
        per_trial["drf_seconds"] = [t.drf_seconds for t in stats.trials]
        per_trial["pdrf_seconds"] = [t.pdrf_seconds for t in stats.trials]

    return {
        "schema_version": get_settings().schema_version,
        "config": {
            "n_users": config.n_users,
            "n_resources": config.n_resources,
            "demand_interval": list(config.demand_interval),
            "reserve_interval": list(config.reserve_interval),
            "trials": config.trials,
            "apply_finishing_pass": config.apply_finishing_pass,
            "float_study": config.float_study,
        },
        "seed": config.seed,
        "drf_options": asdict(config.drf_options),
        "metadata": {
            "std_kind": stats.std_kind,
            "avg_definition": AVG_DEFINITION,
            "delta": "pdrf tasks minus reference drf tasks",
            "reference": reference_name(config.drf_options),
        },
        "summary": stats.summary(),
        "per_trial": per_trial,
    }


def export_stats(
    stats: DeviationStats,
    out_dir: str | Path,
    stem: str = "stats",
    include_timings: bool = False,
    delimiter: Optional[str] = None,
) -> ExportedFiles:
    """写出表格与结构化文档，返回两个文件的路径；delimiter 缺省取全局 Settings"""
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)

    table_path = directory / f"{stem}.csv"
    document_path = directory / f"{stem}.json"
    table_path.write_text(format_table(stats, delimiter), encoding="utf-8")
    document_path.write_text(
        json.dumps(stats_to_document(stats, include_timings), indent=2) + "\n",
        encoding="utf-8",
    )
    logger.info(f"exported {len(stats.trials)} trial(s) to {table_path} and {document_path}")
    return ExportedFiles(table_path, document_path)


def load_stats(path: str | Path) -> DeviationStats:
    """读回结构化文档并重建 DeviationStats，用于重新聚合"""
    document = json.loads(Path(path).read_text(encoding="utf-8"))
    raw = document["config"]
    config = ExperimentConfig(
        n_users=raw["n_users"],
        n_resources=raw["n_resources"],
        demand_interval=tuple(raw["demand_interval"]),
        reserve_interval=tuple(raw["reserve_interval"]),
        trials=raw["trials"],
        seed=document["seed"],
        drf_options=DrfOptions(**document["drf_options"]),
        apply_finishing_pass=raw["apply_finishing_pass"],
        float_study=raw["float_study"],
    )

    arrays = document["per_trial"]
    count = len(arrays["trial_index"])
    trials = tuple(
        TrialStats(**{name: values[i] for name, values in arrays.items()})
        for i in range(count)
    )
    return DeviationStats(config=config, trials=trials, std_kind=document["metadata"]["std_kind"])


class StatsExporter:
    """带默认输出目录的导出服务，由 InfraContainer 注入到 handler"""

    def __init__(self, settings: Settings):
        self.settings = settings

    def export(
        self,
        stats: DeviationStats,
        out_dir: Optional[str] = None,
        stem: str = "stats",
        include_timings: bool = False,
    ) -> ExportedFiles:
        return export_stats(
            stats,
            out_dir or self.settings.bench_output_dir,
            stem,
            include_timings,
            delimiter=self.settings.stats_delimiter,
        )
