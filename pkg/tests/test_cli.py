import csv
import io
import json
import math

import pytest

from rbf_fock.app import EXIT_ERROR, EXIT_FAILED, EXIT_OK, build_parser, main
from rbf_fock.core import hermite_fn


def rows(text: str) -> list[list[str]]:
    return [row for row in csv.reader(io.StringIO(text)) if row and not row[0].startswith("#")]


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_verify_writes_json_report(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--suite", "position", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text(encoding="utf-8"))
    assert [s["name"] for s in data["suites"]] == ["position"]
    assert data["totals"]["failed"] == 0
    assert data["environment"]["gammas"] == [1.0]


def test_verify_csv_to_stdout(capsys):
    assert main(["verify", "--suite", "gram", "--format", "csv", "--gamma", "0.5", "--gamma", "2"]) == EXIT_OK
    table = rows(capsys.readouterr().out)
    assert table[0] == ["suite", "id", "identity", "residual", "tolerance", "pass"]
    assert {row[1] for row in table[1:]} == {"gram-psd", "gram-two-point-spectrum", "gram-mercer-truncation"}
    assert all(row[2].strip() for row in table[1:])
    assert len(table) == 7


def test_verify_reports_failures():
    assert main(["verify", "--suite", "factorization", "--tolerance", "1e-300"]) == EXIT_FAILED


def test_verify_rejects_bad_config(tmp_path):
    config = tmp_path / "bad.toml"
    config.write_text("[rbf_fock]\ntruncation = 0\n", encoding="utf-8")
    assert main(["verify", "--config", str(config)]) == EXIT_ERROR


def test_kernel_pairs(tmp_path, capsys):
    points = tmp_path / "pairs.csv"
    points.write_text("z_re,z_im,w_re,w_im\n0,0,1,0\n", encoding="utf-8")
    assert main(["kernel", "rbf", str(points)]) == EXIT_OK
    table = rows(capsys.readouterr().out)
    assert table[0] == ["gamma", "z_re", "z_im", "w_re", "w_im", "re", "im"]
    assert float(table[1][5]) == pytest.approx(math.exp(-1.0), abs=1e-15)
    assert float(table[1][6]) == 0.0


def test_kernel_gram(tmp_path, capsys):
    points = tmp_path / "points.csv"
    points.write_text("re,im\n0,0\n1,0\n", encoding="utf-8")
    assert main(["kernel", "rbf", str(points), "--gram"]) == EXIT_OK
    text = capsys.readouterr().out
    assert len(rows(text)) == 5
    assert "min_eigenvalue" in text


def test_kernel_rejects_wrong_point_file(tmp_path):
    points = tmp_path / "points.csv"
    points.write_text("re,im\n0,0\n", encoding="utf-8")
    assert main(["kernel", "sb", str(points)]) == EXIT_ERROR


def test_kernel_rejects_malformed_csv(tmp_path):
    points = tmp_path / "points.csv"
    points.write_text("z_re,z_im,w_re,w_im\n0,0,1\n", encoding="utf-8")
    assert main(["kernel", "fock", str(points)]) == EXIT_ERROR


def test_missing_input_file(tmp_path):
    assert main(["kernel", "rbf", str(tmp_path / "absent.csv")]) == EXIT_ERROR


def test_transform_forward_maps_hermite_to_basis(tmp_path, capsys):
    signal = tmp_path / "signal.csv"
    signal.write_text("n,re,im\n2,1,0\n", encoding="utf-8")
    assert main(["transform", "forward", str(signal)]) == EXIT_OK
    table = rows(capsys.readouterr().out)
    assert table[0] == ["n", "re", "im"]
    assert [float(row[1]) for row in table[1:]] == [0.0, 0.0, 1.0]


def test_transform_forward_from_samples(tmp_path, capsys):
    x = [-6.0 + 0.1 * i for i in range(121)]
    signal = tmp_path / "samples.csv"
    signal.write_text("x,re,im\n" + "".join(f"{xi!r},{hermite_fn(1, 2.0, xi)!r},0\n" for xi in x), encoding="utf-8")
    assert main(["transform", "forward", str(signal), "--trunc", "8"]) == EXIT_OK
    table = rows(capsys.readouterr().out)
    values = [complex(float(row[1]), float(row[2])) for row in table[1:]]
    assert abs(values[1] - 1.0) < 1e-10
    assert max(abs(v) for i, v in enumerate(values) if i != 1) < 1e-10


def test_transform_inverse_on_grid(tmp_path, capsys):
    signal = tmp_path / "coeffs.csv"
    signal.write_text("n,re,im\n0,1,0\n", encoding="utf-8")
    assert main(["transform", "inverse", str(signal), "--grid", "-1", "1", "3"]) == EXIT_OK
    table = rows(capsys.readouterr().out)
    assert table[0] == ["x", "re", "im"]
    assert float(table[2][0]) == 0.0
    assert float(table[2][1]) == pytest.approx(hermite_fn(0, 2.0, 0.0), abs=1e-15)


def test_transform_inverse_needs_coefficients(tmp_path):
    signal = tmp_path / "samples.csv"
    signal.write_text("x,re,im\n0,1,0\n", encoding="utf-8")
    assert main(["transform", "inverse", str(signal)]) == EXIT_ERROR


def test_transform_fourier_phase(tmp_path, capsys):
    signal = tmp_path / "coeffs.csv"
    signal.write_text("n,re,im\n1,1,0\n", encoding="utf-8")
    assert main(["transform", "fourier", str(signal)]) == EXIT_OK
    table = rows(capsys.readouterr().out)
    assert float(table[2][1]) == 0.0 and float(table[2][2]) == -1.0


def test_transform_takes_one_gamma(tmp_path):
    signal = tmp_path / "coeffs.csv"
    signal.write_text("n,re,im\n0,1,0\n", encoding="utf-8")
    assert main(["transform", "forward", str(signal), "--gamma", "1", "--gamma", "2"]) == EXIT_ERROR


def test_basis_table(capsys):
    assert main(["basis", "hermite", "--n", "2", "--grid", "-1", "1", "3"]) == EXIT_OK
    table = rows(capsys.readouterr().out)
    assert table[0] == ["x", "psi_0", "psi_1", "psi_2"]
    assert len(table) == 4
    assert float(table[2][1]) == pytest.approx(hermite_fn(0, 2.0, 0.0), abs=1e-15)


def test_rbf_basis_is_real_restriction(capsys):
    assert main(["basis", "rbf", "--n", "1", "--grid", "1", "1", "1"]) == EXIT_OK
    table = rows(capsys.readouterr().out)
    assert float(table[1][2]) == pytest.approx(0.5202601, abs=1e-7)


def test_mercer_errors_shrink(capsys):
    assert main(["mercer", "--z", "0.5", "--w", "0.5j", "--max-terms", "12"]) == EXIT_OK
    table = rows(capsys.readouterr().out)
    errors = [float(row[4]) for row in table[1:]]
    assert len(errors) == 12
    assert errors[-1] < 1e-8 < errors[0]


def test_mercer_kernel_single_term_at_origin(tmp_path, capsys):
    points = tmp_path / "pairs.csv"
    points.write_text("z_re,z_im,w_re,w_im\n0,0,0,0\n", encoding="utf-8")
    assert main(["kernel", "mercer", str(points), "--terms", "1"]) == EXIT_OK
    assert float(rows(capsys.readouterr().out)[1][5]) == 1.0


def test_forward_then_inverse_recovers_samples(tmp_path):
    x = [-5.0 + 0.05 * i for i in range(201)]
    samples = [hermite_fn(0, 2.0, xi) + 0.5 * hermite_fn(3, 2.0, xi) for xi in x]
    signal = tmp_path / "samples.csv"
    signal.write_text("x,re,im\n" + "".join(f"{xi!r},{v!r},0\n" for xi, v in zip(x, samples)), encoding="utf-8")
    coeffs = tmp_path / "coeffs.csv"
    back = tmp_path / "back.csv"

    assert main(["transform", "forward", str(signal), "--out", str(coeffs)]) == EXIT_OK
    assert main(["transform", "inverse", str(coeffs), "--grid", "-2", "2", "41", "--out", str(back)]) == EXIT_OK
    table = rows(back.read_text(encoding="utf-8"))[1:]
    for row in table:
        xi = float(row[0])
        expected = hermite_fn(0, 2.0, xi) + 0.5 * hermite_fn(3, 2.0, xi)
        assert abs(complex(float(row[1]), float(row[2])) - expected) < 1e-6


def test_verify_default_run_exits_ok(capsys):
    assert main(["verify"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["totals"]["failed"] == 0
    assert len(data["suites"]) == 12
    assert all(case["identity"] for suite in data["suites"] for case in suite["cases"])


@pytest.mark.parametrize("name", ["paper", "unnormalized"])
def test_verify_accepts_unnormalized_convention_names(capsys, name):
    assert main(["verify", "--suite", "feature-map", "--convention", name]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["environment"]["convention"] == "paper"
