"""Command-line interface: outputs, exit codes, determinism."""

import json
import math

import pytest

from quarklets.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFilters:
    def test_haar_masks_json(self, capsys):
        code, out, _ = run(capsys, "filters", "--m", "1", "--mt", "1")
        assert code == 0
        payload = json.loads(out)
        assert payload["primal"]["taps"] == [[0, [1, 1]], [1, [1, 1]]]
        assert payload["wavelet"]["taps"] == [[0, [1, 1]], [1, [-1, 1]]]

    def test_dual_masks_include_matrices(self, capsys):
        code, out, _ = run(capsys, "filters", "--m", "1", "--mt", "1", "--p", "1", "--dual")
        assert code == 0
        payload = json.loads(out)
        taps = dict((k, v) for k, v in payload["dual_scaling_masks"]["taps"])
        assert taps[0] == [[[1, 1], [-1, 2]], [[0, 1], [2, 1]]]
        assert taps[1] == [[[1, 1], [-1, 2]], [[0, 1], [2, 1]]]

    def test_degree_emits_refinement_matrices(self, capsys):
        code, out, _ = run(capsys, "filters", "--m", "1", "--mt", "1", "--p", "1")
        assert code == 0
        payload = json.loads(out)
        taps = dict((k, v) for k, v in payload["scaling_masks"]["taps"])
        assert taps[0] == [[[1, 1], [0, 1]], [[0, 1], [1, 2]]]
        assert taps[1] == [[[1, 1], [0, 1]], [[1, 2], [1, 2]]]
        assert "dual_scaling_masks" not in payload

    def test_dual_without_p_is_usage_error(self, capsys):
        code, _, err = run(capsys, "filters", "--m", "1", "--mt", "1", "--dual")
        assert code == 2
        assert "error" in err

    def test_invalid_orders_exit_2(self, capsys):
        code, _, err = run(capsys, "filters", "--m", "2", "--mt", "3")
        assert code == 2
        assert "even" in err

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "filters", "--m", "2", "--mt", "4")
        _, out2, _ = run(capsys, "filters", "--m", "2", "--mt", "4")
        assert out1 == out2


class TestVerifyPr:
    def test_identity_holds(self, capsys):
        code, out, _ = run(capsys, "verify-pr", "--m", "1", "--mt", "1", "--p", "1")
        assert code == 0
        payload = json.loads(out)
        assert payload["identity_holds"] is True
        assert payload["scalar_identity_holds"] is True
        assert payload["residual_entries"] == []

    def test_file_output(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "verify-pr", "--m", "2", "--mt", "2", "--p", "2", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["identity_holds"] is True

    def test_residual_exits_one(self, capsys, monkeypatch):
        import quarklets.cli as cli
        from quarklets.modulation import build_modulation, perturb_detail_block

        def broken(m, mt, p):
            return perturb_detail_block(build_modulation(m, mt, p))

        monkeypatch.setattr(cli, "build_modulation", broken)
        code, out, _ = run(capsys, "verify-pr", "--m", "1", "--mt", "1", "--p", "1")
        assert code == 1
        payload = json.loads(out)
        assert payload["identity_holds"] is False
        assert payload["residual_entries"]


class TestStabilityTable:
    def test_markdown_matches_grid(self, capsys):
        code, out, _ = run(capsys, "stability-table", "--max-m", "4", "--max-p", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("| m \\ p |")
        assert "unstable" in lines[3]  # m = 2 row

    def test_csv_layout(self, capsys):
        code, out, _ = run(
            capsys, "stability-table", "--max-m", "2", "--max-p", "1", "--format", "csv"
        )
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "m,p,stability"
        assert rows[1:] == ["1,0,stable", "1,1,stable", "2,0,stable", "2,1,unstable"]

    def test_json_layout(self, capsys):
        code, out, _ = run(
            capsys, "stability-table", "--max-m", "1", "--max-p", "0", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["cells"] == [{"m": 1, "p": 0, "stable": True}]


class TestFtZeros:
    def test_zero_csv(self, capsys):
        code, out, _ = run(
            capsys, "ft-zeros", "--m", "2", "--q", "2", "--lo", "-4", "--hi", "4",
            "--samples", "800",
        )
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "zero"
        zeros = [float(v) for v in rows[1:]]
        assert len(zeros) == 2
        assert abs(zeros[0] + 2.606) < 1e-3 and abs(zeros[1] - 2.606) < 1e-3


class TestEigen:
    def test_spectrum_payload(self, capsys):
        code, out, _ = run(capsys, "eigen", "--m", "1", "--mt", "1", "--p", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["eigenvalues"] == [[1, 1], [2, 1], [4, 1], [8, 1]]
        assert payload["condition_e"] is False
        assert payload["eigenvector"][-1] == [1, 1]

    def test_degree_zero_condition_e(self, capsys):
        _, out, _ = run(capsys, "eigen", "--m", "1", "--mt", "1", "--p", "0")
        assert json.loads(out)["condition_e"] is True


class TestDual:
    def test_csv_shape_and_zero_frequency(self, capsys):
        code, out, _ = run(
            capsys,
            "dual", "--m", "1", "--mt", "1", "--p", "0",
            "--levels", "12", "--grid-span", "1", "--grid-depth", "2",
        )
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "xi,component,re,im"
        assert len(rows) == 1 + 9
        mid = rows[1 + 4].split(",")
        assert float(mid[0]) == 0.0
        assert abs(float(mid[2]) - 1.0) < 1e-12

    def test_quarklet_values(self, capsys):
        code, out, _ = run(
            capsys,
            "dual", "--m", "1", "--mt", "1", "--p", "0",
            "--levels", "20", "--grid-span", "1", "--grid-depth", "2", "--quarklets",
        )
        assert code == 0
        rows = out.strip().splitlines()[1:]
        by_xi = {float(r.split(",")[0]): complex(float(r.split(",")[2]), float(r.split(",")[3])) for r in rows}
        xi = 2 * math.pi
        w = complex(math.cos(xi / 2), -math.sin(xi / 2))
        target = (1 - w) ** 2 / (1j * xi)
        assert abs(by_xi[xi] - target) < 1e-5


class TestFramesRoundTrip:
    def test_decompose_then_reconstruct(self, capsys, tmp_path):
        frame = {
            "level": 1,
            "width": 2,
            "coefficients": [[0, [[1, 1], [1, 2]]], [3, [[-2, 3], [0, 1]]]],
        }
        src = tmp_path / "c.json"
        src.write_text(json.dumps(frame))
        s_path, d_path, back = tmp_path / "s.json", tmp_path / "d.json", tmp_path / "c2.json"
        code, _, _ = run(
            capsys,
            "decompose", "--m", "1", "--mt", "1",
            "--input", str(src), "--out-scaling", str(s_path), "--out-detail", str(d_path),
        )
        assert code == 0
        code, _, _ = run(
            capsys,
            "reconstruct", "--m", "1", "--mt", "1",
            "--scaling", str(s_path), "--detail", str(d_path), "--out", str(back),
        )
        assert code == 0
        result = json.loads(back.read_text())
        assert result == json.loads(json.dumps({
            "level": 1,
            "width": 2,
            "coefficients": [[0, [[1, 1], [1, 2]]], [3, [[-2, 3], [0, 1]]]],
        }))


class TestOrthogonalizeAndSample:
    def test_orthogonalize_json(self, capsys):
        code, out, _ = run(capsys, "orthogonalize", "--mt", "1", "--p", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["to_plain"][2] == [[1, 6], [-1, 1], [1, 1]]
        assert len(payload["members"]) == 3

    def test_orthogonalize_csv_samples(self, capsys):
        code, out, _ = run(
            capsys, "orthogonalize", "--mt", "1", "--p", "2", "--format", "csv", "--samples", "4"
        )
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "degree,x,value"
        assert len(rows) == 1 + 3 * 5

    def test_sample_bspline(self, capsys):
        code, out, _ = run(
            capsys, "sample", "--function", "bspline", "--m", "2",
            "--start", "0", "--end", "2", "--count", "5",
        )
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[1] == "0,0"
        assert rows[3] == "1,1"

    def test_sample_ortho_quarklet_requires_order_one(self, capsys):
        code, _, err = run(
            capsys, "sample", "--function", "ortho-quarklet", "--m", "2", "--mt", "1",
            "--q", "1", "--start", "0", "--end", "1",
        )
        assert code == 2
        assert "error" in err

    def test_sample_bad_range(self, capsys):
        code, _, _ = run(
            capsys, "sample", "--function", "bspline", "--m", "1",
            "--start", "1", "--end", "0",
        )
        assert code == 2

    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["no-such-command"])
        assert exc.value.code == 2

    def test_missing_input_file_exits_2(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "decompose", "--m", "1", "--mt", "1",
            "--input", str(tmp_path / "nope.json"),
            "--out-scaling", str(tmp_path / "s.json"),
            "--out-detail", str(tmp_path / "d.json"),
        )
        assert code == 2
        assert "error" in err

    def test_malformed_frame_exits_2(self, capsys, tmp_path):
        src = tmp_path / "bad.json"
        src.write_text('{"level": 0}')
        code, _, err = run(
            capsys,
            "decompose", "--m", "1", "--mt", "1",
            "--input", str(src),
            "--out-scaling", str(tmp_path / "s.json"),
            "--out-detail", str(tmp_path / "d.json"),
        )
        assert code == 2
        assert "malformed" in err or "error" in err
