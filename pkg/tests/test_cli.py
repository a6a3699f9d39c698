import json

from d4vinberg.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_cusp_table_json(capsys):
    code, out = run_cli(["cusp-table"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["passed"]
    assert len(data["rows"]) == 11
    assert data["c0"][0] == [1]


def test_cusp_table_csv_columns(tmp_path):
    out_path = tmp_path / "table.csv"
    code = main(["cusp-table", "--format", "csv", "--out", str(out_path)])
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "M,lambda,size,2w,p,2wp,conditions_ok"
    assert len(lines) == 12
    assert lines[1].startswith("1,2;3;4;5,1,1;1;1;1")


def test_reports_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["geography", "--p", "23", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_curves_csv(tmp_path):
    out_path = tmp_path / "curves.csv"
    code = main(
        ["curves", "--p", "5", "--d", "1", "--n-samples", "4", "--seed", "2",
         "--format", "csv", "--out", str(out_path)]
    )
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0].split(",") == [
        "p2", "p4", "q4", "p6", "in_XD", "disc_degree", "bad_places", "N", "two_torsion"
    ]
    assert len(lines) == 5


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("p = 23\nn-samples = 3\nseed = 9\n")
    code, out = run_cli(
        ["densities", "--config", str(cfg), "--p", "5", "--d", "0", "--n-samples", "0"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["config"]["p"] == 5  # flag overrides file
    assert data["config"]["seed"] == 9  # file value survives
    assert data["reports"]["alpha"] == "437/3125"


def test_densities_oracle_flag(capsys):
    code, out = run_cli(
        ["densities", "--p", "5", "--d", "0", "--n-samples", "0", "--oracle"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["reports"]["alpha_bruteforce"] == "437/3125"
    assert data["reports"]["so4_oracle"] == 14400


def test_failure_is_structured(monkeypatch, capsys):
    import d4vinberg.cli as cli_mod

    def boom(args, cfg):
        raise AssertionError("forced failure")

    monkeypatch.setitem(cli_mod.COMMANDS, "geography", boom)
    code, out = run_cli(["geography"], capsys)
    assert code == 1
    data = json.loads(out)
    assert not data["passed"]
    assert data["failure"]["type"] == "AssertionError"
