import io
import json

import pytest

from infrastructure.containers import bootstrap
from interfaces.cli.main import interval, main


@pytest.fixture(autouse=True)
def fresh_container():
    bootstrap(reset=True)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAllocate:
    def test_drf_json(self, capsys, canonical_file):
        code, out, _ = run_cli(capsys, "allocate", canonical_file)
        assert code == 0
        document = json.loads(out)
        assert document["algo"] == "drf"
        assert document["allocation"]["tasks"] == {"A": 3, "B": 2}
        assert document["allocation"]["residual"] == [0, 4]

    def test_pdrf_reports_k(self, capsys, canonical_file):
        code, out, _ = run_cli(capsys, "allocate", canonical_file, "--algo", "pdrf")
        assert code == 0
        document = json.loads(out)
        assert document["k"] == "2"
        assert document["allocation"]["tasks"] == {"A": 3, "B": 2}

    def test_pdrf_finishing_pass(self, capsys, pareto_file):
        code, out, _ = run_cli(capsys, "allocate", pareto_file, "--algo", "pdrf", "--finishing-pass")
        assert code == 0
        document = json.loads(out)
        assert document["allocation"]["tasks"] == {"A": 2, "B": 10}
        assert document["pdrf"]["per_user_multiplier"] == {"A": 2, "B": 9}

    def test_edrf(self, capsys, canonical_file):
        code, out, _ = run_cli(capsys, "allocate", canonical_file, "--algo", "edrf")
        assert code == 0
        assert json.loads(out)["divisible"]["task_equivalents"] == {"A": "3", "B": "2"}

    def test_trace_file(self, capsys, canonical_file, tmp_path):
        trace_path = tmp_path / "trace.tsv"
        code, _, _ = run_cli(capsys, "allocate", canonical_file, "--trace", str(trace_path))
        assert code == 0
        lines = trace_path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "1\tB\t1/3"
        assert lines[-1] == "halt\tall-saturated"

    def test_no_removal_flag(self, capsys, pareto_file, tmp_path):
        trace_path = tmp_path / "trace.tsv"
        run_cli(capsys, "allocate", pareto_file, "--drf-no-removal", "--trace", str(trace_path))
        lines = trace_path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 11
        assert lines[-1] == "halt\tresource-exhausted"

    def test_output_file(self, capsys, canonical_file, tmp_path):
        output = tmp_path / "result.json"
        code, out, _ = run_cli(capsys, "allocate", canonical_file, "--output", str(output))
        assert code == 0
        assert out == ""
        assert json.loads(output.read_text(encoding="utf-8"))["schema_version"] == "1"

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(
            "sys.stdin",
            io.StringIO('{"resources": [9, 18], "users": [{"id": "A", "demand": [1, 4]}, {"id": "B", "demand": [3, 1]}]}'),
        )
        code, out, _ = run_cli(capsys, "allocate", "-")
        assert code == 0
        assert json.loads(out)["allocation"]["tasks"] == {"A": 3, "B": 2}

    def test_trace_needs_drf(self, capsys, canonical_file, tmp_path):
        code, _, err = run_cli(capsys, "allocate", canonical_file, "--algo", "pdrf", "--trace", str(tmp_path / "t"))
        assert code == 1
        assert "error: USAGE:" in err


class TestExitCodes:
    def test_version(self, capsys):
        code, out, _ = run_cli(capsys, "--version")
        assert code == 0
        assert out.strip() == "pdrf 0.1.0"

    def test_unknown_command(self, capsys):
        code, _, err = run_cli(capsys, "frobnicate")
        assert code == 1
        assert "invalid choice" in err

    def test_bad_interval(self, capsys):
        code, _, _ = run_cli(capsys, "bench", "--demands", "9:1")
        assert code == 1

    def test_malformed_scenario(self, capsys, write_scenario):
        path = write_scenario('{"resources": [9, 18], "users": [{"id": "A"}]}')
        code, out, err = run_cli(capsys, "allocate", path)
        assert code == 2
        assert out == ""
        assert "error: INVALID_SCENARIO_FILE:" in err
        assert "users.0.demand" in err

    def test_missing_scenario(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "allocate", str(tmp_path / "nope.json"))
        assert code == 3
        assert "error: IO_ERROR:" in err

    def test_bench_without_shape_is_a_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "bench", "--users", "5")
        assert code == 1
        assert "error: USAGE: without --preset, --resources, --demands, --reserves must be given" in err


def test_compare_table(capsys, pareto_file):
    code, out, _ = run_cli(capsys, "compare", pareto_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["user", "reference", "candidate", "delta"]
    assert lines[2].split() == ["B", "11", "9", "-2"]
    assert "under: 1=0 2=1" in lines[-1]


def test_compare_json(capsys, pareto_file):
    code, out, _ = run_cli(capsys, "compare", pareto_file, "--reference", "drf-strict", "--json")
    assert code == 0
    assert json.loads(out)["deltas"] == {"A": 0, "B": 1}


def test_cycles_text(capsys, canonical_file):
    code, out, _ = run_cli(capsys, "cycles", canonical_file)
    assert code == 0
    assert "full cycle: 5 step(s) (A:3, B:2), lcm(ds) = 2/3" in out
    assert "A: ratio 3/2, base 1, extra in subcycle(s) [1] of 2, gaps [2]" in out
    assert "predicted drf iterations: 9/2" in out


def test_cycles_decompose_json(capsys, write_scenario):
    path = write_scenario({
        "resources": [35],
        "users": [{"id": "A", "demand": [2]}, {"id": "B", "demand": [4]}, {"id": "C", "demand": [10]}],
    })
    code, out, _ = run_cli(capsys, "cycles", path, "--decompose", "--json")
    assert code == 0
    decomposition = json.loads(out)["decomposition"]
    assert decomposition["experimental"] is True
    assert [layer["k"] for layer in decomposition["layers"]] == ["7/6", "9/8", "1/2"]


def test_pareto_demo_text(capsys):
    code, out, _ = run_cli(capsys, "pareto-demo")
    assert code == 0
    assert "blocked at A" in out
    assert "residual <33,3> still admits 3 more task(s) for B" in out


def test_pareto_demo_json(capsys):
    code, out, _ = run_cli(capsys, "pareto-demo", "--json")
    assert code == 0
    document = json.loads(out)
    assert document["strict"]["trace"]["iterations"] == 10
    assert document["extra_tasks"] == {"A": 0, "B": 3}


def test_small_bench(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "bench", "--users", "10", "--resources", "2", "--demands", "1:10", "--reserves", "100:200",
        "--trials", "2", "--seed", "3", "--out", str(tmp_path), "--stem", "tiny",
    )
    assert code == 0
    assert out.splitlines()[0].startswith("interval_lo,interval_hi,under_1")
    assert (tmp_path / "tiny.csv").exists()
    assert (tmp_path / "tiny.json").exists()


def test_interval_parser():
    assert interval("1:10") == (1, 10)


@pytest.mark.parametrize(
    ("flags", "reference"),
    [((), "drf-strict"), (("--no-strict-paper",), "drf")],
)
def test_bench_preset_reference(capsys, tmp_path, flags, reference):
    code, _, _ = run_cli(
        capsys, "bench", "--preset", "TABLE2_ROW2", "--users", "20", "--reserves", "2000:3000",
        "--trials", "1", "--out", str(tmp_path), "--stem", "t2", *flags,
    )
    assert code == 0
    document = json.loads((tmp_path / "t2.json").read_text(encoding="utf-8"))
    assert document["metadata"]["reference"] == reference
