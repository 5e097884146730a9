import json
import re

import pytest

from ctrace.cli import Report, main, run
from ctrace.shared import COLOR_ENV_VAR, ExitCodes
from ctrace.tests.space_test_configs import (
    cp2_profile_data,
    doubling_s3_endo,
    s3_data,
    triangle_data,
    unknown_vertex_data,
    wrong_shape_endo,
)


@pytest.mark.cli
class TestExitCodes:
    def test_success(self, capsys):
        assert main(["pi", "--builtin", "sphere", "3", "-n", "3", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert [block["total_degree"] for block in report["pi"]] == [0, 1, 2, 3, 5]

    def test_parse_error(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{oops")
        assert main(["cohomology", "--file", str(path)]) == ExitCodes.PARSE_ERROR

    def test_missing_file(self, tmp_path):
        argv = ["cohomology", "--file", str(tmp_path / "missing.json")]
        assert main(argv) == ExitCodes.PARSE_ERROR

    def test_invalid_complex(self, write_json):
        path = write_json("bad.json", unknown_vertex_data)
        assert main(["cohomology", "--file", str(path)]) == ExitCodes.VALIDATION_ERROR

    @pytest.mark.parametrize(
        "profile",
        [{"0": 5}, {"0": None}, {"0": ["1"], "2": {"c": 1}}, ["1"]],
        ids=["int", "null", "object", "not_a_map"],
    )
    def test_malformed_profile_file(self, write_json, profile):
        """Wrong JSON types in a profile file still map to a stable exit code"""

        path = write_json("profile.json", {"profile": profile})
        assert main(["cohomology", "--file", str(path)]) == ExitCodes.VALIDATION_ERROR
        assert main(["pi", "--file", str(path)]) == ExitCodes.VALIDATION_ERROR

    @pytest.mark.parametrize(
        "argv",
        [
            ["pi", "--builtin", "sphere", "3", "-n", "0"],
            ["pi", "--builtin", "sphere", "0"],
            ["pi", "--builtin", "klein"],
        ],
        ids=["n0", "sphere0", "unknown"],
    )
    def test_validation_error(self, argv):
        assert main(argv) == ExitCodes.VALIDATION_ERROR

    def test_wrong_endomorphism_shape(self, write_json):
        path = write_json("f.json", wrong_shape_endo)
        argv = ["endo", "--builtin", "sphere", "3", "--endo", str(path)]
        assert main(argv) == ExitCodes.VALIDATION_ERROR

    def test_unsupported_case(self):
        argv = ["sigma", "--builtin", "torus", "3", "-n", "2", "--dd", "nonzero"]
        assert main(argv) == ExitCodes.UNSUPPORTED_CASE

    def test_triangulated_s3_accepts_nonzero_class(self, write_json):
        path = write_json("s3.json", s3_data)
        argv = ["ktheory", "--file", str(path), "--dd", "nonzero"]
        assert main(argv) == ExitCodes.SUCCESS

    def test_argparse_rejects_missing_space(self):
        with pytest.raises(SystemExit) as e:
            run(["pi", "-n", "2"])
        assert e.value.code == 2


@pytest.mark.cli
class TestReports:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_matrix_algebra_regression(self, n):
        """M_n: pi in degrees 1, 3, ..., 2n - 1 and σ hits 2, 4, ..., 2n"""

        _, pi = run(["pi", "--builtin", "point", "-n", str(n), "--json"])
        assert [(b["total_degree"], b["dim"]) for b in pi["pi"]] == [
            (2 * j - 1, 1) for j in range(1, n + 1)
        ]
        _, sigma = run(["sigma", "--builtin", "point", "-n", str(n), "--json"])
        assert [row["k_degree"] for row in sigma["sigma"]] == list(
            range(2, 2 * n + 1, 2)
        )

    def test_nonzero_class_default_n(self):
        argv = ["sigma", "--builtin", "sphere", "3", "--dd", "nonzero", "--json"]
        exit_code, report = run(argv)
        assert exit_code == ExitCodes.SUCCESS
        assert report["k"] == {"even": 0, "odd": 0, "dd_trivial": False}

    def test_cohomology_of_a_complex(self, write_json):
        path = write_json("triangle.json", triangle_data)
        exit_code, report = run(["cohomology", "--file", str(path), "--json"])
        assert exit_code == ExitCodes.SUCCESS
        assert report["cohomology"]["betti"] == [1, 1]
        assert report["cohomology"]["f_vector"] == [3, 3]
        assert report["space"]["name"] == "triangle"

    def test_triangulated_s3_matches_builtin(self, write_json):
        """Same pi dimensions; labels come from different conventions"""

        path = write_json("s3.json", s3_data)
        _, from_file = run(["pi", "--file", str(path), "-n", "3", "--json"])
        _, builtin = run(["pi", "--builtin", "sphere", "3", "-n", "3", "--json"])
        assert [(b["total_degree"], b["dim"]) for b in from_file["pi"]] == [
            (b["total_degree"], b["dim"]) for b in builtin["pi"]
        ]

    def test_sigma_degrees_shift_pi(self):
        _, report = run(["sigma", "--builtin", "cp", "2", "-n", "3", "--json"])
        assert [row["k_degree"] for row in report["sigma"]] == [
            block["total_degree"] + 1 for block in report["pi"]
        ]

    def test_sigma_notes_flag_vanishing_targets(self):
        argv = ["sigma", "--builtin", "sphere", "3", "-n", "2", "--dd", "nonzero"]
        _, report = run([*argv, "--json"])
        assert "K_1: target vanishes" in report["notes"]
        assert all(row["target_dim"] == 0 for row in report["sigma"])

    def test_endo(self, write_json):
        path = write_json("f.json", doubling_s3_endo)
        argv = ["endo", "--builtin", "sphere", "3", "-n", "2", "--endo", str(path)]
        _, report = run([*argv, "--json"])
        assert report["endo"]["0"] == {"basis": ["x_3⊗s_3"], "matrix": [["2"]]}

    def test_json_output_roundtrip(self, write_json, tmp_path, capsys):
        """Canonical JSON re-serializes byte for byte"""

        path = write_json("cp2.json", cp2_profile_data)
        output = tmp_path / "out" / "report.json"
        argv = ["split", "--file", str(path), "-n", "3", "--json"]
        assert main([*argv, "--output", str(output)]) == 0
        text = capsys.readouterr().out
        assert output.read_text() == text
        assert Report.from_json(json.loads(text)).render_json() == text
        assert text.endswith("\n")

    def test_pretty_output(self, capsys, monkeypatch):
        monkeypatch.setenv(COLOR_ENV_VAR, "0")
        assert main(["pi", "--builtin", "sphere", "3", "-n", "3"]) == 0
        out = capsys.readouterr().out
        assert "x_3⊗s_3 (-3, 3)" in out
        assert "s_1 (0, 1)" in out
        assert "1⊗s_1" not in out
        assert "\033[" not in out

    def test_pretty_elides_product_unit(self):
        """Over T^2 the unit is 1⊗1: elided when pretty, kept in JSON"""

        _, report = run(["split", "--builtin", "torus", "2", "-n", "1", "--json"])
        assert report["split"]["free"][0]["basis"][0]["c"] == "1⊗1"
        pretty = report.render_pretty()
        assert "s_1 (0, 1)" in pretty
        assert re.search(r"(^|[\s,])1⊗1⊗s_1", pretty) is None
        assert "1⊗x_1⊗s_1 (-1, 1)" in pretty

    def test_pretty_color(self):
        _, report = run(["ktheory", "--builtin", "point", "--json"])
        assert report.render_pretty(color=True).startswith("\033[1m")
        assert "\033[" not in report.render_pretty(color=False)

    def test_pretty_sigma(self):
        argv = ["sigma", "--builtin", "sphere", "3", "-n", "2", "--dd", "nonzero"]
        _, report = run([*argv, "--json"])
        assert "[target vanishes]" in report.render_pretty()

    def test_unknown_section(self):
        with pytest.raises(ValueError):
            Report(bogus=1)
