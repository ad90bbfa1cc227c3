"""Command-line interface: subcommands, formats, exit codes, config handling."""

import csv
import io
import json

import numpy as np
import pytest

from medmap.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestDispersionCommand:
    def test_rest_frame(self, capsys):
        payload = run_json(capsys, "dispersion", "--medium-n", "1.5", "--kvec", "1,0,0")
        assert payload["k_a"] == pytest.approx(2 / 3, abs=1e-12)
        assert payload["k_b"] == pytest.approx(-2 / 3, abs=1e-12)
        assert payload["cherenkov_regime"] is False

    def test_moving_medium(self, capsys):
        payload = run_json(
            capsys, "dispersion", "--medium-n", "1.5", "--velocity", "0.5,0,0", "--kvec", "1,0,0"
        )
        assert payload["k_a"] == pytest.approx(0.875, abs=1e-12)
        assert payload["k_b"] == pytest.approx(-0.25, abs=1e-12)
        assert payload["surface_class"] == "ellipsoid"

    def test_cherenkov_flags(self, capsys):
        payload = run_json(
            capsys, "dispersion", "--medium-n", "1.5", "--velocity", "0.8,0,0", "--kvec", "1,0,0"
        )
        assert payload["cherenkov_regime"] is True
        assert payload["surface_class"] == "two_sheet_hyperboloid"

    def test_missing_kvec(self, capsys):
        code, _, err = run_cli(capsys, "dispersion", "--medium-n", "1.5")
        assert code == 2
        assert "kvec" in err

    def test_json_floats_round_trip(self, capsys):
        from medmap import MediumSpec, solve_k0

        payload = run_json(
            capsys, "dispersion", "--medium-n", "1.5", "--velocity", "0.3,0.1,0", "--kvec", "0.7,0.2,-0.4"
        )
        expected = solve_k0(MediumSpec(n=1.5, velocity=(0.3, 0.1, 0.0)), (0.7, 0.2, -0.4))
        assert payload["k_a"] == expected[0]  # bit-exact round trip
        assert payload["k_b"] == expected[1]


class TestMapCommand:
    def test_forward(self, capsys):
        payload = run_json(capsys, "map", "--medium-n", "1.5", "--wavevector", "1,1,0,0")
        np.testing.assert_allclose(payload["mapped_wavevector"], [2 / 3, 1, 0, 0], atol=1e-12)
        assert payload["causal_class"] == "spacelike"

    def test_vacuum_echo(self, capsys):
        payload = run_json(capsys, "map", "--medium-n", "1", "--wavevector", "1,1,0,0")
        np.testing.assert_allclose(payload["mapped_wavevector"], [1, 1, 0, 0], atol=1e-15)

    def test_inverse_round_trip(self, capsys):
        forward = run_json(capsys, "map", "--medium-n", "1.5", "--wavevector", "1,1,0,0")
        k_text = ",".join(repr(c) for c in forward["mapped_wavevector"])
        back = run_json(capsys, "map", "--medium-n", "1.5", "--wavevector", k_text, "--inverse")
        np.testing.assert_allclose(back["mapped_wavevector"], [1, 1, 0, 0], atol=1e-12)

    def test_non_null_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "map", "--medium-n", "1.5", "--wavevector", "1,2,0,0")
        assert code == 2
        assert "not a vacuum photon" in err


class TestSurfaceCommand:
    def test_rest_sphere(self, capsys):
        payload = run_json(capsys, "surface", "--medium-n", "1.5", "--k0", "1.0")
        assert payload["kind"] == "ellipsoid"
        np.testing.assert_allclose(payload["semi_axes"], [1.5, 1.5, 1.5], atol=1e-12)

    def test_degenerate_threshold(self, capsys):
        payload = run_json(
            capsys, "surface", "--medium-n", "1.5", "--velocity", f"{2/3},0,0"
        )
        assert payload["kind"] == "degenerate"
        assert payload["semi_axes"] is None


class TestForcesCommand:
    def test_decomposition(self, capsys):
        payload = run_json(
            capsys, "forces", "--medium-n", "1.45", "--e-field", "1e6",
            "--grad-eps", "1,0,0", "--ds-dt", "0,1e8,0",
        )
        total = np.asarray(payload["f_am_n_m3"]) + np.asarray(payload["f_a_n_m3"])
        np.testing.assert_array_equal(payload["f_total_n_m3"], total)
        assert payload["f_am_n_m3"][0] == pytest.approx(-4.427, abs=5e-4)


class TestExperimentsCommand:
    ARGS = [
        "--reflectivity", "0.9", "--poynting", "1e4", "--omega", "2.416e15",
        "--power", "100", "--modulation", "1000", "--ring-radius", "1e-4",
    ]

    def test_jones_ratio(self, capsys):
        payload = run_json(capsys, "experiments", "--medium-n", "1.33", *self.ARGS)
        assert payload["jones_ratio"] == pytest.approx(1.33, rel=1e-12)

    def test_vacuum_torque_is_zero(self, capsys):
        payload = run_json(capsys, "experiments", "--medium-n", "1", *self.ARGS)
        assert payload["abraham_torque_nm"] == 0.0

    def test_torque_order_of_magnitude(self, capsys):
        payload = run_json(capsys, "experiments", "--medium-n", "1.45", *self.ARGS)
        assert payload["abraham_torque_nm"] == pytest.approx(7.7e-20, rel=2e-3)

    def test_missing_parameters_listed(self, capsys):
        code, _, err = run_cli(capsys, "experiments", "--medium-n", "1.33", "--reflectivity", "0.9")
        assert code == 2
        for name in ("poynting", "omega", "power", "modulation", "ring-radius"):
            assert name in err


class TestSweepCommand:
    BASE = ["sweep", "--medium-n", "1.5", "--sweep-var", "v", "--kvec", "1,0,0"]

    def test_threshold_crossing(self, capsys):
        payload = run_json(capsys, *self.BASE, "--start", "0", "--stop", "0.9", "--steps", "10")
        flags = [row["cherenkov"] for row in payload["rows"]]
        speeds = [row["v"] for row in payload["rows"]]
        flips = [i for i in range(1, len(flags)) if flags[i] != flags[i - 1]]
        assert len(flips) == 1
        i = flips[0]
        assert speeds[i - 1] < 2 / 3 < speeds[i]

    def test_single_point_matches_dispersion(self, capsys):
        sweep = run_json(capsys, *self.BASE, "--start", "0.5", "--stop", "0.5", "--steps", "1")
        single = run_json(
            capsys, "dispersion", "--medium-n", "1.5", "--velocity", "0.5,0,0", "--kvec", "1,0,0"
        )
        assert sweep["rows"][0]["k_a"] == single["k_a"]
        assert sweep["rows"][0]["k_b"] == single["k_b"]

    def test_reversed_range_reverses_rows(self, capsys):
        forward = run_json(capsys, *self.BASE, "--start", "0", "--stop", "0.6", "--steps", "5")
        backward = run_json(capsys, *self.BASE, "--start", "0.6", "--stop", "0", "--steps", "5")
        assert forward["rows"] == backward["rows"][::-1]

    def test_csv_header(self, capsys):
        code, out, _ = run_cli(
            capsys, *self.BASE, "--start", "0", "--stop", "0.9", "--steps", "4", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["v", "k_a", "k_b", "cherenkov", "cone_angle_rad", "surface_class"]
        assert len(rows) == 5

    def test_empty_range_exits_2(self, capsys):
        code, _, err = run_cli(capsys, *self.BASE, "--start", "0", "--stop", "0.9", "--steps", "0")
        assert code == 2
        assert "empty sweep" in err


class TestConfigAndErrors:
    def test_config_file_supplies_parameters(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"medium_n": 1.5, "kvec": "1,0,0"}))
        payload = run_json(capsys, "dispersion", "--config", str(cfg))
        assert payload["k_a"] == pytest.approx(2 / 3, abs=1e-12)

    def test_flags_override_config(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"medium_n": 1.5, "kvec": "1,0,0"}))
        payload = run_json(capsys, "dispersion", "--config", str(cfg), "--medium-n", "2.0")
        assert payload["k_a"] == pytest.approx(0.5, abs=1e-12)

    def test_superluminal_config_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys, "dispersion", "--medium-n", "1.5", "--velocity", "1.2,0,0", "--kvec", "1,0,0"
        )
        assert code == 2
        assert "superluminal" in err

    def test_bad_config_file_exits_2(self, capsys, tmp_path):
        cfg = tmp_path / "broken.json"
        cfg.write_text("not json")
        code, _, err = run_cli(capsys, "dispersion", "--config", str(cfg), "--kvec", "1,0,0")
        assert code == 2
        assert "config" in err


class TestReportTool:
    def test_writes_csv_and_figures(self, capsys, tmp_path):
        from medmap.report import main as report_main

        outdir = tmp_path / "out"
        code = report_main(["--steps", "12", "--outdir", str(outdir)])
        captured = capsys.readouterr()
        assert code == 0
        for name in ("sweep.csv", "branches.png", "cone_angle.png"):
            assert (outdir / name).exists()
            assert str(outdir / name) in captured.out
        with open(outdir / "sweep.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 12
        assert rows[0]["surface_class"] == "ellipsoid"

    def test_bad_range_exits_2(self, capsys, tmp_path):
        from medmap.report import main as report_main

        assert report_main(["--vmax", "1.5", "--outdir", str(tmp_path / "x")]) == 2
