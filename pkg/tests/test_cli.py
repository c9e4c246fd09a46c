import json

import pytest

from selfdual.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_row(capsys):
    code, out, _ = run(capsys, "construct", "--row", "table5.1", "--json")
    assert code == 0
    prof = json.loads(out)["profile"]
    assert (prof["n"], prof["d"], prof["type"]) == (40, 8, "I")


def test_construct_from_flags_and_verify(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, _, _ = run(capsys, "construct", "--group", "C7", "--ring", "F2", "--gamma", "0,0,0,1",
                     "--v1", "0,0,0,0,0,1,1", "--v2", "0,1,1,0,0,1,1", "-o", str(path))
    assert code == 0 and path.exists()
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and "OK" in out


def test_malformed_gamma_is_usage_error(capsys):
    code, _, err = run(capsys, "construct", "--group", "C3", "--ring", "F2", "--gamma", "0,0,z,1",
                       "--v1", "0,0,1", "--v2", "0,1,1")
    assert code == 2 and "error" in err


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as e:
        main(["transmogrify"])
    assert e.value.code == 2


def test_extend_and_neighbor(capsys):
    x = "1,u,u,3,3,0,1,3,u,3,0,3,u,0,u,3,u,0,3,1,0,1,3,0,0,u,1,3,0,u,u,1"
    code, out, _ = run(capsys, "extend", "--base", "table2.11", "--c", "3", "--X", x, "--json")
    assert code == 0 and json.loads(out)["profile"]["params"] == {"gamma": 4, "beta": 204}
    code, _, err = run(capsys, "extend", "--base", "table2.11", "--c", "u", "--X", x)
    assert code == 2 and "unit" in err


def test_minweight_and_classify(capsys):
    code, out, _ = run(capsys, "minweight", "table3.1", "--count", "--json")
    data = json.loads(out)
    assert code == 0 and data["d"] == 8
    code, out, _ = run(capsys, "classify", "table7.1", "--json")
    assert code == 0 and json.loads(out)["params"] == {"alpha": -51}


def test_reproduce_exit_codes(capsys):
    code, out, _ = run(capsys, "reproduce", "table3")
    assert code == 0 and "3 PASS" in out
    # one published row does not reproduce, so the exit code reports a failure
    code, out, _ = run(capsys, "reproduce", "table1")
    assert code == 1 and "FAIL" in out
    code, out, _ = run(capsys, "reproduce", "table4")
    assert "SKIP" in out
    code, _, _ = run(capsys, "reproduce", "table99")
    assert code == 2


def test_config_file_sets_defaults(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"d": 12}))
    code, out, _ = run(capsys, "--config", str(cfg), "search", "--group", "C3", "--ring", "F4")
    assert code == 0 and "exceeds the bound" in out
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]")
    with pytest.raises(SystemExit) as e:
        main(["--config", str(bad), "reproduce", "table1"])
    assert e.value.code == 2


def test_search_budget_prints_resume(capsys):
    code, out, _ = run(capsys, "search", "--group", "C7", "--ring", "F2", "--d", "8",
                       "--budget", "5", "--search-workers", "1")
    assert code == 0 and "--resume" in out
