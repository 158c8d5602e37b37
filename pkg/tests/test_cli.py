import json
import subprocess
import sys

import pytest

from zdlab.cli import (EXIT_DATA, EXIT_FAIL, EXIT_NOINPUT, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE,
                       main, parse_range)
from zdlab.ringspec import SpecError, parse_ring_spec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- ring specs ------------------------------------------------------------------

@pytest.mark.parametrize("spec, order", [
    ("Zn:6", 6),
    ("gauss:3", 9),
    ("poly:Zn:2:1,1,1", 4),
    ("poly:poly:Zn:2:1,1,1:0,0,2", 16),
    ("prod:Zn:2,Zn:2,Zn:2", 8),
    ("prod:poly:Zn:2:0,0,1,Zn:3", 12),
    ("catalog:Z4[r]/(2r,r^2-2)", 8),
    ("prod:catalog:Z2xZ4,Zn:3", 24),
    ("poly:catalog:GF4:0,0,2", 16),
    ("catalog:K4[r]/(r^2)", 16),
    ("  Zn:5 ", 5),
])
def test_spec_orders(spec, order):
    assert parse_ring_spec(spec).order == order


def test_spec_file(tmp_path):
    f = tmp_path / "r.ring"
    f.write_text("orders = [4, 2]\nsc.2.2 = [2, 0]\n")
    assert parse_ring_spec(f"file:{f}").order == 8


@pytest.mark.parametrize("spec, offset", [
    ("", 0),
    ("Zn:", 3),
    ("Zq:4", 0),
    ("prod:Zn:2,", 10),
    ("poly:Zn:2", 9),
    ("poly:Zn:2:", 10),
    ("Zn:4x", 4),
    ("catalog:Z7[q]", 8),
    ("poly:Zn:4:1,0,2", 0),
    ("Zn:1", 0),
    ("prod:Zn:2,Zn:0", 10),
    ("file:", 5),
])
def test_spec_errors_give_offsets(spec, offset):
    with pytest.raises(SpecError) as info:
        parse_ring_spec(spec)
    assert info.value.offset == offset


def test_spec_offsets_are_bytes():
    with pytest.raises(SpecError) as info:
        parse_ring_spec("prod:Zn:2,Zé")
    assert info.value.offset == 10


def test_order_cap_in_spec():
    with pytest.raises(SpecError, match="exceeds"):
        parse_ring_spec("prod:Zn:10,Zn:10", max_order=50)


def test_parse_range():
    assert parse_range("2..5") == [2, 3, 4, 5]
    assert parse_range("7") == [7]
    assert parse_range("2..3,10,3") == [2, 3, 10]


# -- commands ----------------------------------------------------------------------

def test_ring(capsys):
    code, out, _ = run(capsys, "ring", "Zn:6")
    assert code == EXIT_OK
    assert "order            6" in out and "{2, 3, 4}" in out
    code, out, _ = run(capsys, "ring", "prod:Zn:2,Zn:2,Zn:2", "--format", "json")
    data = json.loads(out)
    assert (data["order"], data["zero_divisors"]) == (8, 6)
    code, out, _ = run(capsys, "ring", "catalog:Z4[r]/(2r,r^2-2)")
    assert "order            8" in out and "L(R) nilpotent   yes" in out


def test_mdim(capsys):
    code, out, err = run(capsys, "mdim", "Zn:8")
    assert (code, out) == (EXIT_OK, "Mdim = 1, witness {2}\n")
    assert "elapsed" in err
    assert run(capsys, "mdim", "catalog:Z2xZ2xZ2")[1].startswith("Mdim = 3")
    assert run(capsys, "mdim", "Zn:16")[1] == "Mdim = ∞ (twin triple 2, 6, 10)\n"
    assert run(capsys, "mdim", "Zn:7")[1] == "Mdim undefined (empty graph)\n"
    assert run(capsys, "mdim", "Zn:4")[1] == "Mdim = 0\n"
    assert run(capsys, "mdim", "prod:Zn:3,Zn:3")[1] == "Mdim = ∞ (exhaustion, 15 subsets)\n"
    code, out, _ = run(capsys, "mdim", "Zn:12", "--format", "json")
    assert json.loads(out)["witness"] == ["2", "3", "4"]


def test_mdim_unknown_exit(capsys):
    code, out, _ = run(capsys, "mdim", "catalog:Z2xZ2xZ2", "--budget", "5")
    assert code == EXIT_UNKNOWN and out.startswith("Mdim unknown")


def test_mdim_graph_files(tmp_path, capsys):
    edges = tmp_path / "c6.txt"
    edges.write_text("".join(f"v{i} v{(i + 1) % 6}\n" for i in range(6)))
    code, out, _ = run(capsys, "mdim", "--graph", str(edges))
    assert code == EXIT_OK and out.startswith("Mdim = 3")
    js = tmp_path / "k4.json"
    js.write_text(json.dumps({"n": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]}))
    assert run(capsys, "mdim", "--graph", str(js))[1].startswith("Mdim = ∞ (twin triple")
    split = tmp_path / "split.txt"
    split.write_text("a b\nc d\n")
    code, _, err = run(capsys, "mdim", "--graph", str(split))
    assert code == EXIT_DATA and "disconnected" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "mdim", "--graph", str(bad))[0] == EXIT_DATA
    assert run(capsys, "mdim", "--graph", str(tmp_path / "none.txt"))[0] == EXIT_NOINPUT


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "catalog:Z2xZ4", "dot")
    assert out.startswith('graph "Z2xZ4" {') and out.count(" -- ") == 4
    assert run(capsys, "export", "Zn:8", "edge-list")[1] == "2 4\n4 6\n"
    target = tmp_path / "g.json"
    code, out, _ = run(capsys, "export", "Zn:6", "--format", "json", "--out", str(target))
    assert code == EXIT_OK and out == ""
    assert json.loads(target.read_text())["labels"] == ["2", "3", "4"]


def test_survey(capsys):
    code, out, _ = run(capsys, "survey", "2..12")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "n,class,V,E,diameter,girth,family,mdim,status"
    assert lines[3] == "4,2^2,1,0,0,none,SingleVertex,0,match"
    code, out, _ = run(capsys, "survey", "2..12", "--format", "markdown")
    assert "∞" in out and "undef†" in out
    code, out, _ = run(capsys, "survey", "2..12", "--format", "json")
    assert len(out.splitlines()) == 11


def test_survey_env_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("ZDG_WORKERS", "2")
    a = run(capsys, "survey", "2..30")[1]
    monkeypatch.setenv("ZDG_BUDGET", "3")
    assert run(capsys, "survey", "2..30", "--budget", "22", "--workers", "1")[1] == a
    monkeypatch.setenv("ZDG_BUDGET", "abc")
    assert run(capsys, "survey", "2..4")[0] == EXIT_USAGE


def test_verify(capsys):
    code, out, err = run(capsys, "verify", "Thm4.2", "Prop3.1")
    assert code == EXIT_OK
    claims = {json.loads(line)["claim"] for line in out.splitlines()}
    assert claims == {"Thm4.2", "Prop3.1"}
    assert "checks:" in err
    code, out, _ = run(capsys, "verify", "Prop3.2", "--format", "markdown")
    assert out.startswith("| claim |")


def test_verify_exit_on_fail(capsys, monkeypatch):
    from zdlab import claims
    from zdlab.claims import ClaimReport
    monkeypatch.setitem(claims.CLAIMS, "Thm4.2",
                        lambda budget: [ClaimReport("Thm4.2", "x", "a", "b", claims.FAIL)])
    assert run(capsys, "verify", "Thm4.2")[0] == EXIT_FAIL


@pytest.mark.parametrize("argv", [
    ["verify", "Nope"],
    ["survey", "9..3"],
    ["survey", "x"],
    ["mdim", "Zn:6", "--budget", "31"],
    ["survey", "2..5", "--workers", "0"],
    ["frobnicate"],
    [],
    ["mdim"],
    ["oracle", "--max-n", "20"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        sys.exit(main(argv))
    assert info.value.code == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["ring", "Zn:"],
    ["ring", "poly:Zn:4:1,0,2"],
    ["mdim", "prod:Zn:64,Zn:128"],
])
def test_data_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_DATA and err.startswith("zdlab: ")


def test_unknown_claim_lists_ids(capsys):
    _, _, err = run(capsys, "verify", "Thm9")
    assert "Thm3.1" in err and "Cor4.1" in err


def test_catalog_and_equality(capsys):
    out = run(capsys, "catalog")[1]
    assert "Z2xZ4\t" in out and "alias of" in out
    code, out, err = run(capsys, "equality")
    assert (code, out) == (EXIT_OK, "")
    assert "0 graphs" in err


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--count", "50", "--seed", "3")
    assert code == EXIT_OK and out.startswith("50/50 agree (seed 3")
    assert run(capsys, "oracle", "--count", "50", "--seed", "3")[1] == out


def test_unwritable_out(capsys, tmp_path):
    code, _, _ = run(capsys, "ring", "Zn:6", "--out", str(tmp_path / "no" / "such" / "f"))
    assert code == 73


def test_console_script_entry():
    r = subprocess.run([sys.executable, "-m", "zdlab.cli", "ring", "Zn:6"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "order            6" in r.stdout


def test_gaussian_survey_command(capsys):
    code, out, _ = run(capsys, "survey", "2..5", "--kind", "gauss")
    assert code == EXIT_OK
    assert out.splitlines()[1] == "2,prime,1,0,0,none,SingleVertex,0,n/a"
