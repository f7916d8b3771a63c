import io
import json

import numpy as np
import pytest

from vqe_kernel.cli import main, parse_beta, parse_matrix_file, parse_matrix_text
from vqe_kernel.cli.options import RunConfig
from vqe_kernel.errors import EXIT_DATA, EXIT_INCOMPLETE, EXIT_IO, EXIT_OK, EXIT_USAGE, InputError, UsageError
from vqe_kernel.oracle import svd_reference


def _rows(m):
    return json.dumps({"rows": [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, dtype=complex)]})


@pytest.fixture()
def matrix_file(tmp_path):
    def write(m, name="m.json"):
        path = tmp_path / name
        path.write_text(m if isinstance(m, str) else _rows(m))
        return path
    return write


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


# ── matrix files ──────────────────────────────────────────────


def test_parse_matrix_examples(matrix_file):
    assert np.array_equal(parse_matrix_file(matrix_file('{"rows": [[[1,0],[0,0]],[[0,0],[1,0]]]}')), np.eye(2))
    assert np.array_equal(parse_matrix_text('{"rows": [[[0,1]]]}'), np.array([[1j]]))


def test_parse_matrix_missing_rows():
    with pytest.raises(InputError):
        parse_matrix_text('{"cols": []}')


def test_parse_matrix_ragged_rows_name_the_row():
    with pytest.raises(InputError) as err:
        parse_matrix_text('{"rows": [[[1,0],[2,0]],[[3,0]]]}')
    assert err.value.row == 1


def test_parse_matrix_bad_entry_has_location():
    with pytest.raises(InputError) as err:
        parse_matrix_text('{"rows": [[[1,0],[2,0]],[[3,0],["x",0]]]}')
    assert (err.value.row, err.value.col) == (1, 1)


def test_parse_matrix_invalid_json():
    with pytest.raises(InputError):
        parse_matrix_text('{"rows": [[[1,0]]')


def test_parse_matrix_unreadable_file(tmp_path):
    with pytest.raises(InputError):
        parse_matrix_file(tmp_path / "nope.json")


# ── flags ──────────────────────────────────────────────


def test_parse_beta():
    assert parse_beta("8/3") == 8 / 3
    assert parse_beta("2.6667") == 2.6667
    with pytest.raises(UsageError):
        parse_beta("eight thirds")


def test_run_config_overrides():
    settings = RunConfig(seed=4, inner_lr=0.2, restarts=0, accept_tol=1e-6).settings()
    assert settings.spectrum.inner.learning_rate == 0.2
    assert settings.spectrum.inner.restarts == 0
    assert settings.spectrum.inner.rng_seed == 4
    assert settings.spectrum.outer.learning_rate == 0.05
    assert settings.spectrum.accept_threshold(np.eye(3)) == 1e-6


def test_unknown_flag_is_a_usage_error():
    code, _, err = run("eigs", "--matrix", "m.json", "--frobnicate")
    assert code == EXIT_USAGE
    assert "USAGE" in err


def test_invalid_override_is_a_usage_error(matrix_file):
    code, out, _ = run("eigs", "--matrix", str(matrix_file(np.eye(2))), "--inner-lr", "-1", "--format", "json")
    assert code == EXIT_USAGE
    assert json.loads(out)["error"]["code"] == "USAGE"


def test_missing_branch_is_a_usage_error():
    code, _, err = run("lorenz", "--rho", "0.5", "--point", "plus")
    assert code == EXIT_USAGE
    assert "plus" in err


def test_non_square_eigs_is_a_usage_error(matrix_file):
    code, _, _ = run("eigs", "--matrix", str(matrix_file(np.ones((2, 3)))))
    assert code == EXIT_USAGE


def test_oversize_eigs_is_a_usage_error(matrix_file):
    code, _, _ = run("eigs", "--matrix", str(matrix_file(np.eye(3))), "--max-dim", "2")
    assert code == EXIT_USAGE


def test_ragged_matrix_is_an_input_error(matrix_file):
    code, out, _ = run("eigs", "--matrix", str(matrix_file('{"rows": [[[1,0],[2,0]],[[3,0]]]}')), "--format", "json")
    assert code == EXIT_DATA
    envelope = json.loads(out)["error"]
    assert envelope["code"] == "BAD_INPUT"
    assert envelope["details"]["row"] == 1


# ── commands ──────────────────────────────────────────────


def test_eigs_diagonal(matrix_file):
    code, out, _ = run("eigs", "--matrix", str(matrix_file(np.diag([1.0, 2.0, 3.0]))), "--format", "json", "--restarts", "1")
    assert code == EXIT_OK
    doc = json.loads(out)
    values = [e["value"]["re"] for e in doc["spectrum"]["estimates"]]
    assert values == pytest.approx([1, 2, 3], abs=1e-4)
    assert doc["spectrum"]["complete"] is True
    assert [z["re"] for z in doc["oracle"]] == pytest.approx([1, 2, 3])


def test_eigs_incomplete_exit_code(matrix_file):
    code, out, _ = run("eigs", "--matrix", str(matrix_file(np.eye(2))), "--restarts", "0")
    assert code == EXIT_INCOMPLETE
    assert "INCOMPLETE" in out


@pytest.mark.parametrize("m, expected", [(np.diag([3.0, 4.0]), [4.0, 3.0]), (np.array([[0.0, 1.0], [0.0, 0.0]]), [1.0, 0.0])])
def test_svd_examples(matrix_file, m, expected):
    code, out, _ = run("svd", "--matrix", str(matrix_file(m)), "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["singular_values"] == pytest.approx(expected, abs=1e-3)
    assert doc["reference"] == pytest.approx(expected)


def test_heatmap_smoke(tmp_path, matrix_file):
    dest = tmp_path / "h.csv"
    argv = ["heatmap", "--matrix", str(matrix_file(np.diag([1.0, 2.0]))), "--out", str(dest),
            "--re-min", "0", "--re-max", "2", "--im-min", "0", "--im-max", "1",
            "--re-count", "2", "--im-count", "2", "--engine", "exact"]
    code, out, _ = run(*argv)
    assert code == EXIT_OK
    first = dest.read_bytes()
    assert first.decode().count("\n") == 5
    assert str(dest) in out

    run(*argv)
    assert dest.read_bytes() == first


def test_heatmap_vqe_is_byte_identical_across_runs(tmp_path):
    argv = ["heatmap", "--rho", "0.5", "--point", "trivial", "--re-count", "3", "--im-count", "2",
            "--engine", "vqe", "--seed", "5", "--format", "json"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    code_a, out_a, _ = run(*argv, "--out", str(a))
    code_b, out_b, _ = run(*argv, "--out", str(b))
    assert code_a == code_b == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(out_a)["minimum"] == json.loads(out_b)["minimum"]


def test_heatmap_unwritable_destination(tmp_path):
    code, _, err = run("heatmap", "--rho", "28", "--out", str(tmp_path / "no" / "h.csv"),
                       "--re-count", "2", "--im-count", "2", "--engine", "exact")
    assert code == EXIT_IO
    assert "IO" in err


def test_heatmap_rejects_all_points():
    code, _, _ = run("heatmap", "--point", "all")
    assert code == EXIT_USAGE


@pytest.mark.slow
def test_lorenz_rho_half_is_a_stable_node():
    code, out, _ = run("lorenz", "--rho", "0.5", "--point", "all", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert len(doc["points"]) == 1
    point = doc["points"][0]
    assert point["spectrum"]["stability"] == "StableNode"
    values = sorted(e["value"]["re"] for e in point["spectrum"]["estimates"])
    assert values == pytest.approx([-10.52, -2.67, -0.48], abs=0.02)


@pytest.mark.slow
def test_lorenz_classic_trivial_point_table():
    code, out, _ = run("lorenz", "--sigma", "10", "--beta", "8/3", "--rho", "28", "--point", "trivial")
    assert code == EXIT_OK
    assert "stability: UnstableSaddle" in out
    assert "complete: 3/3" in out
    for value in ("-22.827", "-2.666", "11.827"):
        assert value in out


@pytest.mark.slow
def test_lorenz_json_is_deterministic():
    first = run("lorenz", "--rho", "24.5", "--point", "plus", "--format", "json")
    second = run("lorenz", "--rho", "24.5", "--point", "plus", "--format", "json")
    assert first[0] == EXIT_OK
    assert first[1] == second[1]


@pytest.mark.slow
def test_eigs_lorenz_non_trivial_file(matrix_file):
    r = np.sqrt(8 / 3 * 0.1)
    j = np.array([[-10.0, 10.0, 0.0], [1.0, -1.0, -r], [r, r, -8 / 3]])
    code, out, _ = run("eigs", "--matrix", str(matrix_file(j)), "--format", "json")
    assert code == EXIT_OK
    values = sorted(e["value"]["re"] for e in json.loads(out)["spectrum"]["estimates"])
    assert values == pytest.approx([-11.03, -2.44, -0.20], abs=0.02)


@pytest.mark.slow
def test_svd_random_matrices(matrix_file, rng):
    for k in range(50):
        shape = (3, 3) if k % 2 == 0 else (3, 2)
        m = rng.standard_normal(shape)
        code, out, _ = run("svd", "--matrix", str(matrix_file(m, f"m{k}.json")), "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["singular_values"] == pytest.approx(svd_reference(m), abs=1e-4)
