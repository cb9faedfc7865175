import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.main import cli

TINY = """
tracks:
  - {omega: 1.0, v: 1.0, y: 5.0}
  - {omega: 1.0, v: -1.0, y: -5.0, gamma: 0.4}
numerics:
  x_min: -20.0
  x_max: 20.0
  n_x: 512
  k_max: 8.0
  t_final: 1.0
freeflow:
  packets:
    - {center: 0.5, width: 0.5}
    - {center: -0.5, width: 0.5, component: 2, amplitude: 0.5}
  times: [0.0, 0.5, 1.0]
evolve:
  records: 5
verify:
  checks: [scatter.unitarity]
"""


@pytest.fixture
def config_file(tmp_path) -> Path:
    path = tmp_path / "tiny.yaml"
    path.write_text(TINY)
    return path


def _run(*args: str):
    return CliRunner().invoke(cli, ["-o", "plain", *[str(a) for a in args]])


def _manifest(out: Path) -> dict:
    return json.loads((out / "manifest.json").read_text())


@pytest.mark.integration
class TestCliRuns:
    """End-to-end subcommand runs on free tracks in a small box."""

    def test_scatter(self, config_file, tmp_path):
        out = tmp_path / "out"
        result = _run("scatter", "--config", config_file, "--out", out)
        assert result.exit_code == 0, result.output
        report = json.loads((out / "scatter" / "unitarity.json").read_text())
        assert report["pass"]
        assert len(report["tracks"]) == 2
        assert (out / "scatter" / "track_1.csv").read_text().startswith("k,")
        manifest = _manifest(out)
        assert manifest["command"] == "scatter"
        assert manifest["exit_code"] == 0
        assert {entry["path"] for entry in manifest["files"]} >= {
            "scatter/unitarity.json", "scatter/track_1.csv", "scatter/track_2.csv",
        }

    def test_runs_are_reproducible(self, config_file, tmp_path):
        for name in ("a", "b"):
            assert _run("scatter", "--config", config_file, "--out", tmp_path / name).exit_code == 0
        assert _manifest(tmp_path / "a") == _manifest(tmp_path / "b")

    def test_spectrum(self, config_file, tmp_path):
        out = tmp_path / "out"
        result = _run("spectrum", "--config", config_file, "--out", out)
        assert result.exit_code == 0, result.output
        spectrum = json.loads((out / "spectrum" / "spectrum.json").read_text())
        for track in spectrum["tracks"]:
            assert track["eigenvalues"] == []
            assert track["audit"]["embedded"]["pass"]

    def test_freeflow_then_evolve_from_field(self, config_file, tmp_path):
        out = tmp_path / "out"
        result = _run("freeflow", "--config", config_file, "--out", out)
        assert result.exit_code == 0, result.output
        profiles = json.loads((out / "freeflow" / "profiles.json").read_text())
        assert profiles["coercivity_ratio"] == pytest.approx(0.5, rel=1e-6)
        assert (out / "freeflow" / "S_t0.500.ctmf").exists()

        evolved = tmp_path / "evolved"
        result = _run("evolve", "--config", config_file, "--out", evolved,
                      "--field", out / "freeflow" / "S0.ctmf")
        assert result.exit_code == 0, result.output
        summary = json.loads((evolved / "evolve" / "summary.json").read_text())
        assert summary["init"] == "field_file"
        assert summary["final_norms"]["L2"] == pytest.approx(profiles["initial_l2"], rel=1e-8)

    @pytest.mark.slow
    def test_verify_selected_check(self, config_file, tmp_path):
        out = tmp_path / "out"
        result = _run("verify", "--config", config_file, "--out", out)
        assert result.exit_code == 0, result.output
        report = json.loads((out / "verify" / "report.json").read_text())
        assert [check["id"] for check in report["checks"]] == ["scatter.unitarity"]
        assert (out / "verify" / "summary.md").read_text().startswith("# ctm acceptance report")


@pytest.mark.integration
class TestCliFailures:
    def test_invalid_config_exits_two(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("tracks: []\n")
        out = tmp_path / "out"
        result = _run("scatter", "--config", path, "--out", out)
        assert result.exit_code == 2
        assert not (out / "manifest.json").exists()

    def test_decompose_without_field_exits_two(self, config_file, tmp_path):
        out = tmp_path / "out"
        result = _run("decompose", "--config", config_file, "--out", out)
        assert result.exit_code == 2
        manifest = _manifest(out)
        assert manifest["exit_code"] == 2
        assert manifest["failed_check"] == "cli.config"

    def test_field_on_another_grid_fails(self, config_file, tmp_path):
        other = tmp_path / "other.yaml"
        other.write_text(TINY.replace("n_x: 512", "n_x: 256"))
        first = tmp_path / "first"
        assert _run("freeflow", "--config", other, "--out", first).exit_code == 0
        out = tmp_path / "out"
        result = _run("evolve", "--config", config_file, "--out", out,
                      "--field", first / "freeflow" / "S0.ctmf")
        assert result.exit_code == 1
        assert _manifest(out)["failed_check"] == "cli.field_file"
