import json

import pytest

from cy2stab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, "--json", *argv)
    return code, json.loads(out)


@pytest.mark.parametrize(
    "word,quiver,expected",
    [("s1^-1", "a2", "g^-1 s2"), ("s2 s1", "a2", "g"), ("", "a1hat", "g^0")],
)
def test_normalize_examples(capsys, word, quiver, expected):
    code, out, _ = run_cli(capsys, "normalize", "--quiver", quiver, word)
    assert code == 0
    assert out.strip() == expected


def test_normalize_json_is_certified(capsys):
    code, rec = run_json(capsys, "normalize", "--quiver", "a2", "s1 s2 s1 s1")
    assert code == 0 and rec["certified"]
    code, rec = run_json(capsys, "normalize", "--quiver", "a1hat", "s[3] s[-2]^-1")
    assert code == 0 and rec["certified"]


def test_hn_example(capsys):
    code, rec = run_json(capsys, "hn", "--quiver", "a2", "--word", "sX", "--start", "P1")
    assert code == 0
    assert rec["state"] == "[X,P1]" and rec["vector"] == [1, 1]


def test_hom_examples(capsys):
    code, rec = run_json(capsys, "hom", "--quiver", "a2", "--from", "[1:-1]", "--to", "P1")
    assert (code, rec["homBar"]) == (0, 1)
    code, rec = run_json(capsys, "hom", "--quiver", "a2", "--from", "s1 s2@P1", "--to", "X", "--oracle")
    assert code == 0 and rec["agrees"]
    code, rec = run_json(capsys, "hom", "--quiver", "a1hat", "--from", "s[2]@P0", "--to", "P1", "--oracle")
    assert code == 0 and rec["agrees"]


def test_point_example(capsys):
    code, out, _ = run_cli(capsys, "point", "--quiver", "a2", "--word", "", "--base", "P2")
    assert code == 0 and out.strip() == "point: [0:1]"


def test_mass_and_gromov(capsys):
    code, rec = run_json(capsys, "mass", "--word", "s1", "--start", "P2", "--charge=1,0,-1/3,1")
    assert code == 0 and rec["vector"] == [1, 1]
    assert rec["mass"] == pytest.approx(1 + abs(complex(-1 / 3, 1)))
    code, rec = run_json(capsys, "gromov", "--charge=1,0,-1/3,1")
    assert code == 0
    assert rec["y"] + rec["z"] == pytest.approx(1)
    code, rec = run_json(capsys, "gromov", "--quiver", "a1hat", "--window", "3")
    assert code == 0 and len(rec["x"]) == 7


def test_json_flag_after_subcommand(capsys):
    code, rec = run_json(capsys, "point", "--base", "P1")
    code2, out, _ = run_cli(capsys, "point", "--base", "P1", "--json")
    assert code == code2 == 0
    assert json.loads(out) == rec


@pytest.mark.parametrize(
    "argv,name",
    [
        (["normalize", "s7"], "word-error"),
        (["mass", "--start", "P1", "--charge=1,0,-1,0"], "charge-error"),
        (["hn", "--start", "Q"], None),
    ],
)
def test_error_codes(capsys, argv, name):
    code, out, _ = run_cli(capsys, "--json", *argv)
    if name is None:
        assert code in (1, 2)
        return
    assert code == 2
    assert json.loads(out)["error"]["code"] == name


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["normalize", "s1", "s2"])
    assert e.value.code == 2


def test_oracle_budget_error(capsys):
    code, out, _ = run_cli(capsys, "--json", "check", "automaton-vs-oracle", "--quiver", "a1hat", "--depth", "1", "--budget", "1")
    assert code == 1
    rec = json.loads(out)
    assert not rec["passed"] and rec["details"]["unverified"] > 0


def test_check_pass_and_fail_exit_codes(capsys):
    code, rec = run_json(capsys, "check", "rz", "--quiver", "a2", "--depth", "3")
    assert code == 0 and rec["passed"]
    # a window of 5 leaves an O(1/5) truncation error
    code, rec = run_json(capsys, "check", "linearity", "--quiver", "a1hat", "--window", "5")
    assert code == 1 and not rec["passed"]
    assert rec["counterexample"]


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"quiver": "a1hat", "charge": ["1", "0", "1/2", "1"]}))
    code, rec = run_json(capsys, "--config", str(cfg), "hn", "--word", "s[0]", "--start", "P1")
    assert code == 0 and len(rec["vector"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": "red"}))
    code, out, _ = run_cli(capsys, "--json", "--config", str(bad), "point", "--base", "P1")
    assert code == 2 and json.loads(out)["error"]["code"] == "usage-error"


def test_plot_exchange_graph(tmp_path, capsys):
    out = tmp_path / "eg.svg"
    code, rec = run_json(capsys, "plot", "exchange-graph", "--depth", "3", "--out", str(out))
    assert code == 0
    text = out.read_text()
    assert text.count("<polygon") == 10
    assert text.count("<text") == 10


def test_plot_other_figures_use_env_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CY2STAB_OUT", str(tmp_path))
    for fig in ("phi-region", "boundary-circle"):
        code, rec = run_json(capsys, "plot", fig)
        assert code == 0
        text = (tmp_path / f"{fig}.svg").read_text()
        assert text.startswith("<svg")
    phi = (tmp_path / "phi-region.svg").read_text()
    assert phi.count("<polygon") == 4
    circ = (tmp_path / "boundary-circle.svg").read_text()
    assert circ.count("<polyline") == 3
    for mark in (">P1<", ">P2<", ">X<"):
        assert mark in circ


def test_plot_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run_cli(capsys, "plot", "exchange-graph", "--out", str(a))
    run_cli(capsys, "plot", "exchange-graph", "--out", str(b))
    assert a.read_text() == b.read_text()
