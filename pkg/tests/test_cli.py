import shutil
import subprocess
import sys

import pytest

from auslab.algebra import (
    dump_algebra,
    load_algebra,
    lower_triangular,
    prime_field,
    save_algebra,
    truncated_polynomial,
)
from auslab.cli import BAD_INPUT, FAILED, OK, UNDECIDED, main

from conftest import local2


@pytest.fixture
def files(tmp_path):
    out = {}
    for key, A in {
        "f2": prime_field(2),
        "t2": lower_triangular(prime_field(2), 2),
        "trunc": truncated_polynomial(2, 2),
        "loc": local2(),
    }.items():
        path = tmp_path / f"{key}.alg"
        save_algebra(A, path)
        out[key] = str(path)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def table(out):
    rows = [ln.split("\t") for ln in out.strip().splitlines()]
    assert rows[0] == ["i", "rfd", "dim"]
    return [r[1] for r in rows[1:]]


# -- validate ---------------------------------------------------------------------------


def test_validate_ok(files, capsys):
    code, out, _ = run(capsys, "validate", files["t2"])
    assert code == OK and out.strip() == "ok"


def test_validate_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "validate", str(tmp_path / "nope.alg"))
    assert code == BAD_INPUT and "nope.alg" in err


def test_validate_missing_unit(tmp_path, capsys):
    path = tmp_path / "bad.alg"
    path.write_text("p 2\ndim 1\nmult 0 0 1\n")
    code, _, err = run(capsys, "validate", str(path))
    assert code == BAD_INPUT and "bad.alg" in err


def test_validate_points_at_broken_product(tmp_path, capsys):
    text = dump_algebra(lower_triangular(prime_field(2), 2))
    lines = text.splitlines()
    k = next(n for n, ln in enumerate(lines) if ln.startswith("mult 1 1"))
    lines[k] = "mult 1 1 0 1 0"
    path = tmp_path / "assoc.alg"
    path.write_text("\n".join(lines) + "\n")
    code, _, err = run(capsys, "validate", str(path))
    assert code == BAD_INPUT
    anchors = {int(ln.split(":")[1]) for ln in err.strip().splitlines()}
    # every diagnostic names a mult line of the file
    assert all(lines[a - 1].startswith("mult") for a in anchors)


def test_parse_error_is_line_anchored(tmp_path, capsys):
    path = tmp_path / "garbled.alg"
    path.write_text("p 2\ndim 1\nunit 1\nfrobnicate\n")
    code, _, err = run(capsys, "validate", str(path))
    assert code == BAD_INPUT and f"{path}:4:" in err


# -- analyze ----------------------------------------------------------------------------


def test_analyze_field(files, capsys):
    code, out, _ = run(capsys, "analyze", files["f2"], "--max-degree", "2")
    assert code == OK
    assert table(out) == ["0", "-inf", "-inf"]
    assert out.splitlines()[1] == "0\t0\t1"


def test_analyze_triangular_and_compat(files, capsys):
    code, out, _ = run(capsys, "analyze", files["t2"], "--max-degree", "3")
    assert code == OK and table(out) == ["0", "1", "-inf", "-inf"]
    code, out, _ = run(capsys, "analyze", files["t2"], "--max-degree", "3", "--compat", "--route", "direct")
    assert table(out) == ["0", "1", "-1", "-1"]


def test_analyze_strict_censoring(files, capsys):
    code, out, _ = run(capsys, "analyze", files["loc"], "--max-degree", "1", "--cap", "4")
    assert code == OK and table(out) == [">=4", ">=4"]
    code, _, _ = run(capsys, "analyze", files["loc"], "--max-degree", "1", "--cap", "4", "--strict")
    assert code == UNDECIDED


def test_analyze_plot(files, tmp_path, capsys):
    fig = tmp_path / "profile.png"
    code, _, _ = run(capsys, "analyze", files["t2"], "--max-degree", "2", "--plot", str(fig))
    assert code == OK and fig.stat().st_size > 0


def test_analyze_rejects_negative_degree(files, capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze", files["f2"], "--max-degree", "-1"])
    assert info.value.code == BAD_INPUT


# -- check ------------------------------------------------------------------------------


def test_check_gnk_and_lnop(files, capsys):
    code, out, _ = run(capsys, "check", files["t2"], "gnk", "--n", "2", "--k", "0")
    assert code == OK and out
    code, out, _ = run(capsys, "check", files["t2"], "lnop", "--l", "1", "--n", "2")
    assert code == FAILED


def test_check_dominant(files, capsys):
    code, out, _ = run(capsys, "check", files["t2"], "dominant", "--max", "2")
    assert code == OK and "0 1" in out
    code, _, _ = run(capsys, "check", files["loc"], "dominant", "--max", "2", "--cap", "5")
    assert code == UNDECIDED


# -- tri ------------------------------------------------------------------------------------


def test_tri_writes_a_loadable_algebra(files, tmp_path, capsys):
    out = tmp_path / "t3.alg"
    code, _, _ = run(capsys, "tri", files["trunc"], "--t", "3", "-o", str(out))
    assert code == OK
    T = load_algebra(out)
    assert T.dim == 12 and T.is_valid()
    assert dump_algebra(T) == dump_algebra(lower_triangular(truncated_polynomial(2, 2), 3))


def test_tri_t1_reserializes(files, tmp_path, capsys):
    out = tmp_path / "same.alg"
    assert run(capsys, "tri", files["trunc"], "--t", "1", "-o", str(out))[0] == OK
    assert dump_algebra(load_algebra(out)) == dump_algebra(load_algebra(files["trunc"]))


def test_tri_rejects_t0(files, tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["tri", files["f2"], "--t", "0", "-o", str(tmp_path / "x.alg")])
    assert info.value.code == BAD_INPUT


# -- verify -------------------------------------------------------------------------------


def test_verify_statements(files, tmp_path, capsys):
    fig = tmp_path / "transfer.svg"
    code, out, _ = run(capsys, "verify", files["trunc"], "thm36", "--t", "2", "--max-degree", "2", "--plot", str(fig))
    assert code == OK and fig.exists()
    assert run(capsys, "verify", files["f2"], "thm37", "--n", "2", "--k", "0", "--t", "3")[0] == OK
    assert run(capsys, "verify", files["f2"], "cor38", "--l", "1", "--n", "2", "--t", "2")[0] == OK


def test_verify_censored_is_undecided(files, capsys):
    code, _, _ = run(capsys, "verify", files["loc"], "thm36", "--t", "2", "--max-degree", "1", "--cap", "5")
    assert code == UNDECIDED


# -- corpus -------------------------------------------------------------------------------


def test_corpus_filter(capsys):
    code, out, err = run(capsys, "corpus", "run", "--filter", "trunc*")
    assert code == OK
    names = [ln.split("\t")[0] for ln in out.splitlines()[1:] if ln and not ln.startswith("total")]
    assert names and all(n.startswith("trunc") for n in names)
    assert "entries in" in err


def test_corpus_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "corpus", "run", "--filter", "*F3*")
    _, parallel, _ = run(capsys, "corpus", "run", "--filter", "*F3*", "--jobs", "2")
    assert serial == parallel


def test_corpus_no_match(capsys):
    assert run(capsys, "corpus", "run", "--filter", "zzz*")[0] == BAD_INPUT


# -- console script -----------------------------------------------------------------------------


def test_console_script(files):
    exe = shutil.which("auslab")
    cmd = [exe] if exe else [sys.executable, "-m", "auslab.cli"]
    proc = subprocess.run(cmd + ["analyze", files["f2"], "--max-degree", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["i\trfd\tdim", "0\t0\t1", "1\t-inf\t0"]
