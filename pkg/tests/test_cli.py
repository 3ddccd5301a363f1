import json

import pytest

from sdgqc.cli import main
from sdgqc.codes import LinearCode, load
from sdgqc.fields import GF2, GF16


@pytest.fixture
def rep2(tmp_path):
    path = tmp_path / "rep2.txt"
    LinearCode.from_rows(GF2, 2, [(1, 1)]).save(str(path))
    return str(path)


@pytest.fixture
def herm2(tmp_path):
    path = tmp_path / "herm2.txt"
    LinearCode.from_rows(GF16, 2, [(1, 1)]).save(str(path))
    return str(path)


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_construct_cubic(capsys, rep2, tmp_path):
    out = tmp_path / "out.txt"
    rc, _, _ = run(capsys, "construct", "--c1", rep2, "--c2", _gf4_rep(tmp_path),
                   "--construction", "cubic", "--out", str(out))
    assert rc == 0
    code = load(str(out))
    assert (code.n, code.k) == (6, 3)


def _gf4_rep(tmp_path):
    from sdgqc.fields import GF4

    path = tmp_path / "rep4.txt"
    LinearCode.from_rows(GF4, 2, [(1, 1)]).save(str(path))
    return str(path)


def test_construct_quintic_stdout(capsys, rep2, herm2):
    rc, out, _ = run(capsys, "construct", "--c1", rep2, "--c2", herm2,
                     "--construction", "quintic")
    assert rc == 0
    assert out.startswith("sdgqc-code v1")
    assert "n 10" in out


def test_construct_missing_file(capsys, rep2):
    rc, _, err = run(capsys, "construct", "--c1", rep2, "--c2", "/nonexistent",
                     "--construction", "cubic")
    assert rc == 2


def test_verify(capsys, rep2, herm2, tmp_path):
    rc, out, _ = run(capsys, "verify", "--code", rep2, "--inner", "euclidean")
    assert rc == 0 and "self-dual: true" in out
    rc, out, _ = run(capsys, "verify", "--code", herm2, "--inner", "hermitian", "--json")
    assert rc == 0 and json.loads(out)["self_dual"] is True
    bad = tmp_path / "bad.txt"
    LinearCode.from_rows(GF2, 2, [(1, 0)]).save(str(bad))
    rc, _, _ = run(capsys, "verify", "--code", str(bad), "--inner", "euclidean")
    assert rc == 1
    # Type II: the repetition code of length 2 is self-dual but not doubly even
    rc, out, _ = run(capsys, "verify", "--code", rep2, "--inner", "euclidean",
                     "--type2", "--json")
    assert rc == 1
    payload = json.loads(out)
    assert payload["self_dual"] is True and payload["type_ii"] is False


def test_mindist(capsys, rep2):
    rc, out, _ = run(capsys, "mindist", "--code", rep2, "--json")
    assert rc == 0 and json.loads(out)["min_distance"] == 2


def test_mass(capsys):
    rc, out, _ = run(capsys, "mass", "--q", "2", "--ell", "8")
    assert rc == 0 and out.strip() == "135"
    rc, out, _ = run(capsys, "mass", "--q", "2", "--ell", "8", "--type2")
    assert rc == 0 and out.strip() == "30"
    rc, out, _ = run(capsys, "mass", "--q", "16", "--ell", "4", "--json")
    assert rc == 0 and json.loads(out)["count"] == "325"
    rc, out, _ = run(capsys, "mass", "--q", "16", "--ell", "4", "--literal-paper")
    assert rc == 0 and "/" in out  # a non-integer fraction
    rc, _, _ = run(capsys, "mass", "--q", "2", "--ell", "4", "--literal-paper")
    assert rc == 2
    rc, _, _ = run(capsys, "mass", "--q", "16", "--ell", "4", "--type2")
    assert rc == 2
    rc, _, _ = run(capsys, "mass", "--q", "2", "--ell", "7")
    assert rc == 2


def test_census(capsys, tmp_path):
    rc, out, _ = run(capsys, "census", "--q", "2", "--n", "8")
    assert rc == 0 and out.strip() == "135"
    rc, out, _ = run(capsys, "census", "--q", "2", "--n", "8", "--type2", "--json")
    assert rc == 0 and json.loads(out)["count"] == "30"
    rc, out, _ = run(capsys, "census", "--q", "2", "--n", "4", "--containing", "1100")
    assert rc == 0 and out.strip() == "1"
    outdir = tmp_path / "codes"
    rc, out, _ = run(capsys, "census", "--q", "2", "--n", "4", "--list", str(outdir))
    assert rc == 0
    files = sorted(outdir.iterdir())
    assert len(files) == 3
    assert all(load(str(f)).is_self_dual("euclidean") for f in files)
    rc, _, _ = run(capsys, "census", "--q", "2", "--n", "7")
    assert rc == 2


def test_sample(capsys, tmp_path):
    out1 = tmp_path / "a.txt"
    out2 = tmp_path / "b.txt"
    for out in (out1, out2):
        rc, _, _ = run(capsys, "sample", "--q", "2", "--n", "8", "--seed", "7",
                       "--out", str(out))
        assert rc == 0
    assert out1.read_text() == out2.read_text()
    assert load(str(out1)).is_self_dual("euclidean")


def test_bound(capsys):
    rc, out, _ = run(capsys, "bound", "--ell", "2", "--d", "1", "--mode", "literal")
    assert rc == 0 and "lhs=6 rhs=10 holds=true" in out
    rc, out, _ = run(capsys, "bound", "--ell", "2", "--d", "2", "--mode", "literal", "--json")
    assert rc == 1
    payload = json.loads(out)
    assert payload["lhs"] == "16" and payload["holds"] is False
    rc, _, _ = run(capsys, "bound", "--ell", "3", "--d", "2", "--mode", "exact")
    assert rc == 2


def test_maxdist(capsys):
    rc, out, _ = run(capsys, "maxdist", "--ell", "40", "--mode", "exact")
    assert rc == 0 and out.strip() == "24"
    rc, out, _ = run(capsys, "maxdist", "--ell", "40", "--mode", "exact", "--type2", "--json")
    assert rc == 0 and json.loads(out)["d_star"] == 22


def test_asymptote(capsys):
    rc, out, _ = run(capsys, "asymptote", "--construction", "quintic",
                     "--ells", "8,16", "--mode", "exact")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "ell,d_star,delta,mode"
    assert len(lines) == 3 and lines[1].startswith("8,")


def test_entropy(capsys):
    rc, out, _ = run(capsys, "entropy", "--q", "2", "--x", "0.5")
    assert rc == 0 and abs(float(out) - 1.0) < 1e-9
    rc, out, _ = run(capsys, "entropy", "--q", "2", "--x", "0.5", "--inverse", "--json")
    assert rc == 0
    assert abs(json.loads(out)["value"] - 0.1100278644) < 1e-8
    rc, _, _ = run(capsys, "entropy", "--q", "2", "--x", "1.5")
    assert rc == 2


def test_selftest(capsys):
    rc, out, _ = run(capsys, "selftest")
    assert rc == 0
    assert "FAIL" not in out
    rc, out, err = run(capsys, "selftest", "--literal-paper")
    assert rc == 1
    assert "FAIL" in out


def test_usage_errors(capsys):
    rc, _, _ = run(capsys, "bogus-command")
    assert rc == 2
    rc, _, _ = run(capsys, "mass", "--q", "3", "--ell", "4")
    assert rc == 2
