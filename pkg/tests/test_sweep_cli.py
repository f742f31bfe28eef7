import json

import pytest

from hybridspin import channels, verify
from hybridspin.cli import main
from hybridspin.config import parse_config
from hybridspin.figures import figure_path
from hybridspin.sweep import run_sweep

BASE = {
    "hamiltonian": {"b1": 0.3, "b2": -0.7, "j": 0.0, "jz": 1.0, "k": 0.2,
                    "k1": -0.1, "k2": 0.22, "dz": 0.32, "gamma": -0.87, "lambda": 0.31},
    "sweep": {
        "axis": "temperature",
        "grid": {"start": 0.05, "stop": 3.0, "points": 2},
        "curves": [{"kind": "dephasing", "gamma_a": 0.2, "gamma_b": 0.2, "label": "g=0.2"}],
        "measures": ["negativity", "discord", "mutual_information", "purity"],
    },
}


class TestRunSweep:
    def test_two_point_grid_shape(self):
        result = run_sweep(parse_config(json.loads(json.dumps(BASE))))
        assert len(result.rows) == 2
        # axis column + 4 measures x 1 curve
        assert len(result.header) == 5
        assert all(len(row) == 5 for row in result.rows)

    def test_deterministic_output(self):
        spec = parse_config(json.loads(json.dumps(BASE)))
        assert run_sweep(spec).to_csv_text() == run_sweep(spec).to_csv_text()

    def test_csv_round_trip_exact(self, tmp_path):
        result = run_sweep(parse_config(json.loads(json.dumps(BASE))))
        path = tmp_path / "out.csv"
        result.write_csv(path)
        lines = path.read_text().strip().split("\n")
        assert lines[0].split(",") == list(result.header)
        for line, row in zip(lines[1:], result.rows):
            parsed = [float(cell) for cell in line.split(",")]
            assert parsed == list(row)

    def test_time_axis_follows_decay_law(self):
        doc = json.loads(json.dumps(BASE))
        doc["sweep"]["axis"] = "time"
        doc["sweep"]["grid"] = {"start": 0.0, "stop": 2.0, "points": 3}
        doc["sweep"]["curves"] = [{"kind": "phase_flip", "rate_a": 1.0, "rate_b": 0.5,
                                   "label": "r"}]
        doc["sweep"]["measures"] = ["negativity"]
        doc["temperature"] = 0.3
        result = run_sweep(parse_config(doc))
        # t = 0 must coincide with the noiseless thermal value
        noiseless = run_sweep(parse_config({
            **doc,
            "sweep": {"axis": "temperature", "grid": {"start": 0.3, "stop": 0.4, "points": 2},
                      "curves": [{"kind": "phase_flip", "gamma_a": 0.0, "gamma_b": 0.0,
                                  "label": "r"}],
                      "measures": ["negativity"]},
        }))
        assert abs(result.rows[0][1] - noiseless.rows[0][1]) < 1e-12
        # later times mean more noise, hence less entanglement
        values = [row[1] for row in result.rows]
        assert values[0] >= values[1] >= values[2]

    def test_header_labels(self):
        result = run_sweep(parse_config(json.loads(json.dumps(BASE))))
        assert result.header[0] == "temperature"
        assert result.header[1] == "negativity:g=0.2"
        assert result.header[-1] == "purity:g=0.2"


class TestVerifySuites:
    def test_all_pass_with_default_seed(self):
        reports = verify.run_suites()
        assert [r.name for r in reports] == list(verify.suite_names())
        for report in reports:
            assert report.passed, report

    def test_seed_changes_draws_not_outcome(self):
        for seed in (1, 2):
            assert all(r.passed for r in verify.run_suites(["gibbs"], seed=seed))

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError, match="unknown suite"):
            verify.run_suites(["bogus"])

    def test_mutation_canary(self, monkeypatch):
        # a sign flip in the second coherence factor must be caught by the
        # channel-equivalence suite with a large deviation
        original = channels.coherence_factors

        def broken(cfg):
            k24, k35 = original(cfg)
            return k24, -k35

        monkeypatch.setattr(channels, "coherence_factors", broken)
        report = verify.suite_channels(cases=100)
        assert not report.passed
        assert report.max_deviation > 1e-3


class TestCli:
    def test_sweep_writes_csv(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps(BASE))
        out = tmp_path / "result.csv"
        assert main(["sweep", "--config", str(cfg), "--out", str(out)]) == 0
        assert out.exists()
        header = out.read_text().splitlines()[0]
        assert header.startswith("temperature,")

    def test_sweep_with_plot(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps(BASE))
        out = tmp_path / "result.csv"
        png = tmp_path / "result.png"
        assert main(["sweep", "--config", str(cfg), "--out", str(out),
                     "--plot", str(png)]) == 0
        assert png.exists() and png.stat().st_size > 0

    def test_sweep_on_bundled_figure(self, tmp_path):
        out = tmp_path / "fig.csv"
        assert main(["sweep", "--config", str(figure_path("fig1c")), "--out", str(out)]) == 0
        assert len(out.read_text().splitlines()) == 121

    def test_state_prints_matrix(self, tmp_path, capsys):
        doc = dict(json.loads(json.dumps(BASE)))
        doc["temperature"] = 1.0
        doc["channel"] = {"kind": "dephasing", "gamma_a": 0.5, "gamma_b": 0.2}
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps(doc))
        assert main(["state", "--config", str(cfg)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 7  # banner + six matrix rows
        assert "dephasing" in lines[0]

    def test_config_error_is_exit_one(self, tmp_path, capsys):
        doc = json.loads(json.dumps(BASE))
        del doc["hamiltonian"]
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps(doc))
        out = tmp_path / "x.csv"
        assert main(["sweep", "--config", str(cfg), "--out", str(out)]) == 1
        assert "hamiltonian" in capsys.readouterr().err

    def test_missing_file_is_exit_one(self, tmp_path):
        assert main(["sweep", "--config", str(tmp_path / "nope.json"),
                     "--out", str(tmp_path / "x.csv")]) == 1

    def test_verify_single_suite(self, capsys):
        assert main(["verify", "--suite", "symmetry"]) == 0
        out = capsys.readouterr().out
        assert "symmetry" in out
        assert "gibbs" not in out

    def test_verify_failure_is_exit_two(self, monkeypatch, capsys):
        original = channels.coherence_factors

        def broken(cfg):
            k24, k35 = original(cfg)
            return k24, -k35

        monkeypatch.setattr(channels, "coherence_factors", broken)
        assert main(["verify", "--suite", "channels"]) == 2
        assert "FAIL" in capsys.readouterr().out

    def test_bad_usage_is_exit_one(self, capsys):
        assert main(["sweep"]) == 1
