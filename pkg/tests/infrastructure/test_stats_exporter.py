import csv
import json
from dataclasses import replace

import pytest

from domain.allocation import DrfOptions
from domain.experiments import DeviationStats, ExperimentConfig, run_experiment
from infrastructure.config import Settings
from infrastructure.export import TABLE_COLUMNS, StatsExporter, export_stats, format_table, load_stats


@pytest.fixture
def config() -> ExperimentConfig:
    return ExperimentConfig(
        n_users=12, n_resources=2, demand_interval=(1, 20), reserve_interval=(100, 200), trials=3, seed=5,
    )


@pytest.fixture
def stats(config) -> DeviationStats:
    return run_experiment(config)


def test_table_header_and_row(stats):
    rows = list(csv.reader(format_table(stats, delimiter=",").splitlines()))
    assert tuple(rows[0]) == TABLE_COLUMNS
    assert rows[1][:2] == ["1", "20"]
    assert len(rows) == 2
    assert rows[1][TABLE_COLUMNS.index("under_avg")].count(".") == 1


def test_empty_stats_write_header_only(config):
    text = format_table(DeviationStats(config=config, trials=()), delimiter="\t")
    assert text == "\t".join(TABLE_COLUMNS) + "\n"


def test_round_trip_through_the_document(stats, tmp_path):
    files = export_stats(stats, tmp_path, "run")
    reloaded = load_stats(files.document)
    assert reloaded.config == stats.config
    assert reloaded.trials == stats.trials
    assert reloaded.summary() == stats.summary()


def test_reexport_is_byte_identical(stats, tmp_path):
    first = export_stats(stats, tmp_path / "a", "run")
    second = export_stats(load_stats(first.document), tmp_path / "b", "run")
    assert first.table.read_bytes() == second.table.read_bytes()
    assert first.document.read_bytes() == second.document.read_bytes()


def test_timings_only_on_request(stats, tmp_path):
    without = export_stats(stats, tmp_path, "plain")
    with_timings = export_stats(stats, tmp_path, "timed", include_timings=True)
    assert "drf_seconds" not in without.document.read_text(encoding="utf-8")
    assert "pdrf_seconds" in with_timings.document.read_text(encoding="utf-8")
    reloaded = load_stats(with_timings.document)
    assert [t.drf_seconds for t in reloaded.trials] == [t.drf_seconds for t in stats.trials]


def test_exporter_defaults_to_configured_directory(stats, tmp_path):
    exporter = StatsExporter(Settings(bench_output_dir=str(tmp_path / "results")))
    files = exporter.export(stats)
    assert files.table == tmp_path / "results" / "stats.csv"
    assert files.document.exists()


def test_document_names_the_reference(config, tmp_path):
    strict = replace(config, trials=1, drf_options=DrfOptions(strict_paper_mode=True, collect_trace=False))
    files = export_stats(run_experiment(strict), tmp_path, "strict")
    document = json.loads(files.document.read_text(encoding="utf-8"))
    assert document["metadata"]["reference"] == "drf-strict"
    assert document["drf_options"]["remove_saturated"] is False
    assert load_stats(files.document).config.drf_options == strict.drf_options


def test_exporter_uses_its_own_delimiter(stats, tmp_path):
    # 注入的 Settings 与全局 Settings 不同
    exporter = StatsExporter(Settings(bench_output_dir=str(tmp_path), stats_delimiter=";"))
    files = exporter.export(stats, stem="semi")
    header = files.table.read_text(encoding="utf-8").splitlines()[0]
    assert header == ";".join(TABLE_COLUMNS)
