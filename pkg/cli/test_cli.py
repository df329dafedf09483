import json

import pytest

from cli.main import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_growth_csv_for_the_plane(capsys):
    code, out = run(capsys, "growth", "--group", "z:2", "--radius", "10", "--out", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n,sphere,gamma,naive,upper"
    assert lines[1] == "0,1,1,,"
    assert lines[2] == "1,4,5,5.000000000000,5.000000000000"
    assert lines[-1].startswith("10,40,221,")
    assert out.endswith("\n") and "\r" not in out


def test_growth_is_byte_identical_across_workers(capsys):
    _, serial = run(capsys, "growth", "--group", "lamplighter:2", "--radius", "7", "--workers", "1")
    _, parallel = run(capsys, "growth", "--group", "lamplighter:2", "--radius", "7", "--workers", "3")
    assert serial == parallel


def test_growth_json_mirror(capsys):
    code, out = run(capsys, "growth", "--group", "lamplighter:2", "--radius", "2", "--out", "json")
    report = json.loads(out)
    assert code == 0
    assert [row["gamma"] for row in report["rows"]] == [1, 4, 10]
    assert report["rows"][0]["naive"] is None
    assert report["rows"][1]["upper"] == "4.000000000000"


def test_bad_group_exits_with_parse_code(capsys):
    code, out = run(capsys, "growth", "--group", "nonsense", "--radius", "3")
    assert code == 2
    assert out == ""


def test_cap_exceeded_exits_with_budget_code(capsys):
    code, out = run(capsys, "growth", "--group", "free:2", "--radius", "5", "--cap", "100")
    assert code == 4
    assert out.splitlines()[-1].startswith("3,36,53,")


def test_degree_bound_command_json(capsys):
    code, out = run(capsys, "paper-bound", "--d", "1", "--out", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["alpha"], data["beta"]) == (48, 44)
    assert data["omega_alpha"].startswith("1.0145453349")


def test_witness_collision_exit_code(capsys):
    code, out = run(capsys, "witness", "--group", "z:2", "--v", "x", "--w", "y", "--p-max", "4", "--out", "json")
    assert code == 3
    assert json.loads(out)["injective"] is False


def test_witness_with_growth_check(capsys):
    code, out = run(
        capsys, "witness", "--group", "lamplighter:2", "--v", "t", "--w", "a", "--p-max", "8",
        "--check-radius", "6", "--out", "json",
    )
    data = json.loads(out)
    assert code == 0
    assert data["injective"] and data["gamma_lower_checked"]
    assert data["omega_lower"] == "1.414213562373"
    assert data["bound_label"] == "certified-if-free"


def test_commutators_table(capsys):
    code, out = run(capsys, "commutators", "--k", "2", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["i,set_size,depth,f_i,equal", "1,4,1,1,true", "2,8,4,4,true"]
    assert lines[3].startswith("3,") and lines[3].endswith(",10,10,true")


def test_converge_integers_against_cyclic(capsys):
    code, out = run(capsys, "converge", "--group-a", "z:1", "--group-b", "cyclic:8", "--max-radius", "6")
    assert code == 0
    assert out.splitlines()[1].endswith(",3")


def test_marked_ball_emits_dot(capsys):
    code, out = run(capsys, "marked-ball", "--group", "cyclic:6", "--radius", "3")
    assert code == 0
    assert out.startswith('digraph "cyclic:6" {')
    assert out.count("->") == 6


def test_crosscheck_not_applicable(capsys):
    code, out = run(capsys, "crosscheck-t24", "--group", "z:2", "--radius", "3", "--out", "json")
    assert code == 0
    assert json.loads(out)["status"] == "NOT-APPLICABLE"


def test_limit_growth_csv_columns(capsys):
    code, out = run(capsys, "lemma71", "--limit", "grigorchuk:(012)*", "--count", "2", "--m", "3")
    assert code == 0
    assert out.splitlines()[0] == "i,conv_radius,gamma_i_m,gamma_lim_m,upper_i_m"
    assert len(out.splitlines()) == 3


def test_limit_growth_json_is_one_array(capsys):
    code, out = run(capsys, "lemma71", "--limit", "grigorchuk:(012)*", "--count", "2", "--m", "3", "--out", "json")
    rows = json.loads(out)
    assert code == 0
    assert [row["i"] for row in rows] == [1, 2]
    assert [row["common_prefix"] for row in rows] == [3, 6]
    assert out.endswith("]\n")


@pytest.mark.parametrize(
    "alias, name, extra",
    [
        ("degree-bound", "paper-bound", ["--d", "1"]),
        ("crosscheck-metabelian", "crosscheck-t24", ["--group", "z:2", "--radius", "3"]),
        ("limit-growth", "lemma71", ["--limit", "grigorchuk:(012)*", "--count", "1", "--m", "2"]),
    ],
)
def test_aliases_match_command_names(alias, name, extra, capsys):
    assert run(capsys, alias, *extra, "--out", "json") == run(capsys, name, *extra, "--out", "json")


def test_output_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out = run(capsys, "growth", "--group", "z:1", "--radius", "2", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[-1].startswith("2,2,5,")


@pytest.mark.parametrize("command", ["growth", "witness", "hvw", "lemma71", "paper-bound", "crosscheck-t24", "limit-growth"])
def test_help_lists_flags(command, capsys):
    with pytest.raises(SystemExit) as info:
        main([command, "--help"])
    assert info.value.code == 0
    assert "--cap" in capsys.readouterr().out


def test_config_file_with_flag_spellings(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    target = tmp_path / "bound.json"
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"out": "json", "output": str(target)}))
    code, out = run(capsys, "paper-bound", "--d", "1", "--config", str(config))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["alpha"] == 48
