"""
运行一组随机实验并导出统计

preset 给出基本配置，显式给出的字段覆盖 preset；
不用 preset 时，未给出的 trials / seed 取 Settings 中的默认值。
"""

from dataclasses import dataclass, replace
from typing import Optional, Tuple

from mediatr import Mediator
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from domain.allocation import DrfOptions
from domain.experiments import PRESETS, DeviationStats, ExperimentConfig, run_experiment
from infrastructure.config import Settings
from infrastructure.export import ExportedFiles, StatsExporter
from infrastructure.logging import get_logger

logger = get_logger(__name__)


class RunBenchmarkCommand(BaseModel):
    model_config = ConfigDict(frozen=True)

    preset: Optional[str] = None
    users: Optional[int] = Field(default=None, ge=1)
    resources: Optional[int] = Field(default=None, ge=1)
    demands: Optional[Tuple[int, int]] = None
    reserves: Optional[Tuple[int, int]] = None
    trials: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = Field(default=None, ge=0)
    # None: preset 自带的参考；无 preset 时为移除模式
    strict_paper: Optional[bool] = None
    finishing_pass: bool = False
    float_study: bool = False
    workers: Optional[int] = Field(default=None, ge=1)
    out_dir: Optional[str] = None
    stem: Optional[str] = None
    include_timings: bool = False

    @field_validator("preset")
    @classmethod
    def _known_preset(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in PRESETS:
            raise ValueError(f"unknown preset '{value}', expected one of {', '.join(PRESETS)}")
        return value

    @model_validator(mode="after")
    def _shape_given(self) -> "RunBenchmarkCommand":
        if self.preset is None:
            missing = [
                name for name in ("users", "resources", "demands", "reserves")
                if getattr(self, name) is None
            ]
            if missing:
                raise ValueError(f"without a preset, {', '.join(missing)} must be given")
        return self


@dataclass(frozen=True)
class BenchmarkOutcome:
    stats: DeviationStats
    files: ExportedFiles


def _reference_options(strict_paper: Optional[bool], default: DrfOptions) -> DrfOptions:
    if strict_paper is None:
        return default
    return DrfOptions(strict_paper_mode=strict_paper, collect_trace=False)


def build_config(request: RunBenchmarkCommand, settings: Settings) -> ExperimentConfig:
    if request.preset is not None:
        base = PRESETS[request.preset]
        options = _reference_options(request.strict_paper, base.drf_options)
        overrides = {
            "n_users": request.users,
            "n_resources": request.resources,
            "demand_interval": request.demands,
            "reserve_interval": request.reserves,
            "trials": request.trials,
            "seed": request.seed,
        }
        return replace(
            base,
            **{k: v for k, v in overrides.items() if v is not None},
            drf_options=options,
            apply_finishing_pass=request.finishing_pass,
            float_study=request.float_study,
        )

    options = _reference_options(request.strict_paper, DrfOptions(collect_trace=False))
    return ExperimentConfig(
        n_users=request.users,
        n_resources=request.resources,
        demand_interval=request.demands,
        reserve_interval=request.reserves,
        trials=request.trials or settings.bench_default_trials,
        seed=request.seed if request.seed is not None else settings.bench_default_seed,
        drf_options=options,
        apply_finishing_pass=request.finishing_pass,
        float_study=request.float_study,
    )


@Mediator.handler
class RunBenchmarkHandler:
    def __init__(self, settings: Settings, stats_exporter: StatsExporter):
        self.settings = settings
        self.stats_exporter = stats_exporter

    async def handle(self, request: RunBenchmarkCommand) -> BenchmarkOutcome:
        config = build_config(request, self.settings)
        workers = request.workers or self.settings.bench_workers
        logger.info(
            f"running {config.trials} trial(s): {config.n_users} users, {config.n_resources} resources, "
            f"demands {list(config.demand_interval)}, reserves {list(config.reserve_interval)}, "
            f"seed {config.seed}, workers {workers}"
        )

        stats = run_experiment(config, workers=workers)
        summary = stats.summary()
        logger.info(
            f"under_avg {summary['under_avg']:.3f} (max {summary['under_max']}), "
            f"over_avg {summary['over_avg']:.3f} (max {summary['over_max']})"
        )

        stem = request.stem or (request.preset.lower() if request.preset else "stats")
        files = self.stats_exporter.export(stats, request.out_dir, stem, request.include_timings)
        return BenchmarkOutcome(stats, files)
