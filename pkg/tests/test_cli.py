import json

import pytest

from arcext import clear_caches
from arcext.cli import main, render
from arcext.suite import load_config


def test_algebra_json(capsys):
    assert main(["algebra", "--m", "1", "--n", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dim"] == 5
    assert out["cartan"]["v^"]["v^"] == "1+q^2"


def test_kl_csv(capsys):
    assert main(["kl", "--m", "2", "--n", "1", "--out", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "lambda,vv^,v^v,^vv"
    assert lines[1] == "vv^,1,q,q^2"


def test_kl_pair(capsys):
    assert main(["kl", "--pair", "vvvv^^", "v^vv^v"]) == 0
    assert json.loads(capsys.readouterr().out)["p"] == "q^2+q^4"


def test_resolve_betti(capsys):
    assert main(["resolve", "--m", "1", "--n", "1", "--weight", "v^", "--betti", "--out", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[1:] == ["0,v^,0,1", "1,^v,1,1"]


def test_ext_with_shelton(capsys):
    assert main(["ext", "--m", "2", "--n", "1", "--check-shelton"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["shelton"]["discrepancies"] == []


def test_quiver_dot(capsys):
    assert main(["quiver", "--m", "2", "--n", "1", "--out", "dot"]) == 0
    assert "color=cyan" in capsys.readouterr().out


def test_output_file(tmp_path):
    target = tmp_path / "s.csv"
    assert main(["shelton", "--m", "1", "--n", "1", "--out", "csv", "-o", str(target)]) == 0
    assert target.read_text().splitlines()[0] == "x,y,k,dim"


def test_errors(capsys):
    assert main(["kl", "--out", "dot"]) == 2
    assert main(["modules", "--m", "1", "--n", "1"]) == 2
    assert main(["resolve", "--m", "1", "--n", "1", "--weight", "^^"]) == 2
    with pytest.raises(SystemExit):
        main(["nonsense"])


def test_render_is_deterministic():
    requests = [("ext", {"m": 2, "n": 2, "graded": True, "structure": True}, "json"), ("ainfty", {"m": 2, "n": 2, "max_arity": 3}, "csv")]
    first = [render(*r) for r in requests]
    clear_caches()
    assert [render(*r) for r in requests] == first


def test_config_file(tmp_path):
    path = tmp_path / "suite.cfg"
    path.write_text("max_size = 3\ncriteria = 3, 5\nainfty_cases = 2:1\n")
    cfg = load_config(str(path))
    assert cfg["max_size"] == 3 and cfg["criteria"] == [3, 5] and cfg["ainfty_cases"] == [(2, 1)]
    assert load_config(text="[suite]\nseed = 4\n")["seed"] == 4


def test_suite_subset(tmp_path, capsys):
    path = tmp_path / "suite.cfg"
    path.write_text("max_size = 3\nassoc_max_size = 3\ncriteria = 1, 3, 5\n")
    assert main(["suite", "--config", str(path), "--out", "csv", "--jobs", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [l.rsplit(",", 1)[1] for l in lines[1:]] == ["pass", "pass", "pass"]
