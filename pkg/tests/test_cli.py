import json

import pytest

from kmbryl.cli import main

A1AFF_JSON = json.dumps({"matrix": [[2, -2], [-2, 2]]})


@pytest.fixture
def gcm_file(tmp_path):
    path = tmp_path / "a1aff.json"
    path.write_text(A1AFF_JSON)
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_mult(gcm_file, capsys):
    code, out = run(capsys, ["mult", "--gcm", gcm_file, "--beta", "3,3"])
    assert code == 0
    assert json.loads(out) == {"beta": [3, 3], "mult": 1}


def test_kostant(gcm_file, capsys):
    code, out = run(capsys, ["kostant", "--gcm", gcm_file, "--beta", "1,1"])
    assert code == 0
    assert json.loads(out)["K"] == [[1, "1"], [2, "1"]]


def test_qweight_triple_shorthand(gcm_file, capsys):
    code, out = run(
        capsys,
        ["qweight", "--gcm", gcm_file, "--lambda", "0,1,0", "--mu", "0,1,-2"],
    )
    assert code == 0
    data = json.loads(out)
    assert data["m"] == [[2, "1"], [4, "1"]]
    assert data["lambda"]["coroot_values"] == ["1", "0"]


def test_qweight_json_weight_literal(gcm_file, capsys):
    lam = json.dumps({"coroot_values": ["1", "0"], "d_value": "0"})
    mu = json.dumps({"coroot_values": ["1", "0"], "d_value": "-2"})
    code, out = run(
        capsys, ["qweight", "--gcm", gcm_file, "--lambda", lam, "--mu", mu]
    )
    assert code == 0
    assert json.loads(out)["m"] == [[2, "1"], [4, "1"]]


def test_brylinski_report(gcm_file, capsys):
    code, out = run(
        capsys,
        ["brylinski", "--gcm", gcm_file, "--lambda", "0,1,0", "--mu", "0,1,-2"],
    )
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 2
    assert data["e_poincare"] == [[1, "1"], [4, "1"]]
    assert data["s_poincare"] == [[2, "1"], [4, "1"]]
    assert data["m"] == data["s_poincare"]
    assert data["theorem_holds"] is True


def test_verify_small_grid(gcm_file, capsys):
    code, out = run(
        capsys, ["verify", "--gcm", gcm_file, "--level", "1", "--depth", "1"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["all_hold"] is True
    assert data["pairs"] == len(data["reports"]) > 0


def test_kahler_check(capsys):
    code, out = run(capsys, ["kahler-check", "--rank", "1", "--depth", "4"])
    assert code == 0
    data = json.loads(out)
    assert data["all_equal"] is True
    assert all(r["equal"] for r in data["rows"])


def test_tsv_format(gcm_file, capsys):
    code, out = run(
        capsys, ["--format", "tsv", "kostant", "--gcm", gcm_file, "--beta", "1,1"]
    )
    assert code == 0
    assert out.splitlines() == ["1\t1", "2\t1"]


def test_deterministic_output(gcm_file, capsys):
    argv = ["brylinski", "--gcm", gcm_file, "--lambda", "0,2,0", "--mu", "0,2,-2"]
    _, first = run(capsys, argv)
    _, second = run(capsys, argv)
    assert first == second


def test_cache_round_trip(gcm_file, capsys, tmp_path):
    cache = str(tmp_path / "cache")
    code, out = run(
        capsys, ["mult", "--gcm", gcm_file, "--beta", "4,4", "--cache", cache]
    )
    assert code == 0
    files = list((tmp_path / "cache").glob("*.json"))
    assert len(files) == 1
    stored = json.loads(files[0].read_text())
    assert stored["box"] == [4, 4]
    # second run must reuse the stored table unchanged
    before = files[0].read_text()
    code, out = run(
        capsys, ["mult", "--gcm", gcm_file, "--beta", "2,2", "--cache", cache]
    )
    assert code == 0
    assert json.loads(out)["mult"] == 1
    assert files[0].read_text() == before


def test_corrupt_cache_recovers(gcm_file, capsys, tmp_path):
    cache = tmp_path / "cache"
    run(capsys, ["mult", "--gcm", gcm_file, "--beta", "2,2", "--cache", str(cache)])
    target = next(cache.glob("*.json"))
    target.write_text("{ not json")
    code, out = run(
        capsys, ["mult", "--gcm", gcm_file, "--beta", "2,2", "--cache", str(cache)]
    )
    assert code == 0
    assert json.loads(out)["mult"] == 1


def test_input_errors_exit_one(gcm_file, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"matrix": [[2, 1], [-1, 2]]}')
    assert main(["mult", "--gcm", str(bad), "--beta", "1,1"]) == 1
    capsys.readouterr()
    assert main(["mult", "--gcm", gcm_file, "--beta=-1,1"]) == 1
    capsys.readouterr()
    assert main(["mult", "--gcm", str(tmp_path / "nope.json"), "--beta", "1,1"]) == 1
    capsys.readouterr()
    assert (
        main(["qweight", "--gcm", gcm_file, "--lambda", "bogus", "--mu", "0,0,0"])
        == 1
    )
    capsys.readouterr()


def test_non_dominant_lambda_rejected(gcm_file, capsys):
    code = main(
        ["brylinski", "--gcm", gcm_file, "--lambda", "2,1,0", "--mu", "0,1,0"]
    )
    assert code == 1
    capsys.readouterr()
