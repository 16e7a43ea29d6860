import orjson
import pytest
from typer.testing import CliRunner

from eulerZeta.cli import cli

runner = CliRunner()

AFFINE_A1 = "rank 2\nm 1 2 inf\n"
A1 = "rank 1\n"
A2 = "rank 2\nm 1 2 3\n"
TREE = "vertex u\nvertex v\nedge e u v it 4 io 4\n"
QUICK = "max_len: 6\nrandom_samples: 10\ngraph_samples: 10\n"


def invoke(*args: str):
    return runner.invoke(cli, list(args))


def test_euler_chevalley():
    result = invoke("euler", "chevalley", "--type", "A", "--rank", "1", "-q", "3")
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == "# eulerzeta euler chevalley"
    assert lines[1] == "# max_len = 12"
    assert "# q = 3" in lines
    assert "-1/2 * mu[I]" in lines
    assert "sign: negative" in lines


def test_invalid_chevalley_type_exits_with_input_error():
    result = invoke("euler", "chevalley", "--type", "I", "--rank", "2", "-q", "3")
    assert result.exit_code == 1
    assert "error:" in result.output


def test_json_output(write):
    path = write("a1.txt", AFFINE_A1)
    result = invoke("--json", "euler", "building", "-c", str(path), "-q", "3")
    assert result.exit_code == 0, result.output
    document = orjson.loads(result.stdout)
    assert sorted(document) == ["command", "identity_checks", "inputs", "result"]
    assert document["command"] == "euler building"
    assert document["inputs"]["q"] == 3
    assert document["result"]["coefficient"] == "-1/2"
    assert document["result"]["base"] == "B"


def test_growth(write):
    path = write("a2.txt", A2)
    result = invoke("growth", "-c", str(path), "--max-len", "4", "--exact")
    assert result.exit_code == 0, result.output
    assert "counts 1 2 2 1 0" in result.stdout
    assert any(line.startswith("series ") for line in result.stdout.splitlines())
    assert "PASS series expansion matches enumeration to order 4" in result.stdout


def test_growth_rejects_negative_length(write):
    path = write("a2.txt", A2)
    assert invoke("growth", "-c", str(path), "--max-len", "-1").exit_code == 1


def test_missing_input_file(tmp_path):
    result = invoke("growth", "-c", str(tmp_path / "absent.txt"))
    assert result.exit_code == 1
    assert "cannot read" in result.output


def test_malformed_input_file_reports_line(write):
    path = write("bad.txt", "rank 2\nm 1 2 1\n")
    result = invoke("growth", "-c", str(path))
    assert result.exit_code == 1
    assert "bad.txt:2:" in result.output


def test_euler_gog(write):
    path = write("tree.txt", TREE)
    result = invoke("euler", "gog", "-g", str(path))
    assert result.exit_code == 0, result.output
    assert "-1/2 * mu[e]" in result.stdout
    result = invoke("euler", "gog", "-g", str(path), "--base", "u")
    assert "-2 * mu[u]" in result.stdout


def test_euler_gog_non_unimodular(write):
    path = write("loop.txt", "vertex v\nedge e v v it 1 io 2\n")
    result = invoke("euler", "gog", "-g", str(path))
    assert result.exit_code == 1
    assert "non-unimodular" in result.output


def test_euler_complex(write):
    orbits = write("orbits.txt", "dim 1\norbit 0 u\norbit 0 v\norbit 1 e\n")
    context = write("ctx.txt", "index u e 4\nindex v e 4\n")
    result = invoke("euler", "complex", "-f", str(orbits), "--ctx", str(context))
    assert result.exit_code == 0, result.output
    assert "-2 * mu[u]" in result.stdout
    result = invoke("euler", "complex", "-f", str(orbits))
    assert result.exit_code == 1


def test_euler_lattice():
    result = invoke("euler", "lattice", "--chi=-1/6", "--covol", "2")
    assert result.exit_code == 0, result.output
    assert "-1/12 * mu[O]" in result.stdout
    assert invoke("euler", "lattice", "--chi", "1", "--covol", "0").exit_code == 1


def test_zeta_tree():
    result = invoke("zeta", "tree", "-d", "3", "--subgroup", "edge", "--truncate", "100")
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    for expected in ("# series bound N = 100", "1 1", "3 2", "81 2", "rational -1 -1 | -1 1", "value(-1) -2"):
        assert expected in lines
    vertex = invoke("zeta", "tree", "-d", "2", "--subgroup", "vertex", "--truncate", "100")
    assert "6 1" in vertex.stdout.splitlines()
    assert "value(-1) -1" in vertex.stdout.splitlines()
    assert invoke("zeta", "tree", "-d", "3", "--truncate", "0").exit_code == 1


def test_zeta_building_chamber(write):
    path = write("a1.txt", AFFINE_A1)
    result = invoke("zeta", "building", "-c", str(path), "-q", "3", "--max-len", "4", "--truncate", "100", "--eval-at", "1")
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    for expected in ("# level B", "9 2", "value(-1) -2", "value(1) 2", "PASS chi against zeta at B"):
        assert expected in lines


def test_zeta_building_parahoric_and_pro_p(write):
    path = write("a1.txt", AFFINE_A1)
    parahoric = invoke("zeta", "building", "-c", str(path), "-q", "3", "--parabolic", "1", "--max-len", "6", "--truncate", "729")
    assert parahoric.exit_code == 0, parahoric.output
    lines = parahoric.stdout.splitlines()
    for expected in ("# level P[1]", "12 1", "108 1", "value(-1) -1/2", "PASS chi against zeta at P[1]"):
        assert expected in lines
    pro_p = invoke("zeta", "building", "-c", str(path), "-q", "3", "--parabolic", "1", "--pro-p", "--max-len", "4", "--truncate", "81")
    assert pro_p.exit_code == 0, pro_p.output
    lines = pro_p.stdout.splitlines()
    for expected in ("# level P[1]^1", "1 24", "9 32", "value(-1) -12", "PASS chi against zeta at P[1]^1"):
        assert expected in lines


def test_zeta_building_rejects_bad_options(write):
    path = write("a1.txt", AFFINE_A1)
    assert invoke("zeta", "building", "-c", str(path), "-q", "3", "--parabolic", "1", "--eval-at", "1").exit_code == 1
    assert invoke("zeta", "building", "-c", str(path), "-q", "3", "--parabolic", "1,2").exit_code == 1
    assert invoke("zeta", "building", "-c", str(path), "-q", "3", "--parabolic", "3").exit_code == 1
    assert invoke("zeta", "building", "-c", str(path), "-q", "3", "--truncate", "0").exit_code == 1


@pytest.mark.parametrize(
    "action, text, expected",
    [
        ("mult", "term 1 w 1\n*\nterm 1 w 1\n", "(3)*T[e] + (2)*T[s1]"),
        ("trace", "term 5 w\nterm 1 w 1\n*\nterm 1 w 1\n", "trace 5"),
        ("rank", "matrix 1\nentry\nterm 1/4 w\nterm 1/4 w 1\n", "1/4 * mu[B]"),
    ],
)
def test_hecke(write, action, text, expected):
    coxeter = write("a1.txt", A1)
    data = write("input.txt", text)
    result = invoke("hecke", "-c", str(coxeter), "-q", "3", action, "-i", str(data))
    assert result.exit_code == 0, result.output
    assert expected in result.stdout.splitlines()


def test_hecke_rank_needs_idempotent(write):
    coxeter = write("a1.txt", A1)
    data = write("matrix.txt", "matrix 1\nentry\nterm 1 w 1\n")
    result = invoke("hecke", "-c", str(coxeter), "-q", "3", "rank", "-i", str(data))
    assert result.exit_code == 1
    assert "not idempotent" in result.output


def test_verify_with_config(write):
    config = write("quick.yml", QUICK)
    result = invoke("--config", str(config), "verify", "--suite", "growth")
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert "# max_len = 6" in lines
    assert any(line.endswith("checks passed") for line in lines)
    assert all(not line.startswith("FAIL") for line in lines)


def test_verify_json(write):
    config = write("quick.yml", QUICK)
    result = invoke("--config", str(config), "--json", "verify", "--suite", "hecke")
    assert result.exit_code == 0, result.output
    document = orjson.loads(result.stdout)
    assert document["result"]["passed"] is True
    assert all(check["passed"] for check in document["identity_checks"])


def test_invalid_config(write):
    config = write("bad.yml", "max_len: -3\n")
    result = invoke("--config", str(config), "verify")
    assert result.exit_code == 1
    assert "invalid configuration" in result.output
