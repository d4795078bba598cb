import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pydot
import pytest

from corpus import MALFORMED
from pathcoalg import io
from pathcoalg.cli import main
from pathcoalg.fields import QQ, Field
from pathcoalg.quiver import OMEGA, loop
from pathcoalg.shape import FORBID

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_thick():
    sf = io.parse((DATA / "thick.q").read_text())
    assert sf.quiver.bundle("x").multiplicity is OMEGA
    assert sf.xdata["b"].patterns == (("x",),)
    assert sf.instantiated_shape().quiver.bundle("x").multiplicity == 3


def test_parse_errors_carry_position():
    with pytest.raises(io.ParseError) as e:
        io.parse("vertex a\narrow x a -> a\n")
    assert e.value.line == 2 and e.value.column > 0


def test_semantic_errors_carry_token():
    with pytest.raises(io.SemanticError) as e:
        io.parse("vertex a\nvertex b\narrow x : a -> c\n")
    assert e.value.token == "c"
    with pytest.raises(io.SemanticError):
        io.parse("vertex a\nvertex b\narrow x : a -> b\narrow y : a -> b\nmode forbid x y\n")


def test_forbid_lines_accumulate():
    sf = io.parse("vertex u\narrow x : u -> u\narrow y : u -> u\nmode forbid x x\nmode forbid y x\n")
    assert sf.mode == FORBID and sf.forbidden == [("x", "x"), ("y", "x")]


def test_generators_file():
    sf = io.parse("vertex a\nvertex b\narrow x : a -> b * 2\nmode generators\npath x.1\n")
    assert len(sf.shape().elements) == 3


def test_linear_combination():
    q = loop()
    lc = io.parse_linear_combination("1*e_u + 2*x.0 x.0 - 1/2*x.0", q, QQ)
    assert lc == {q.trivial("u"): 1, q.path("x x"): 2, q.path("x"): QQ("-1/2")}
    assert io.parse_linear_combination("3*x.0", q, Field(3)) == {}


@pytest.mark.parametrize("name,text,code", MALFORMED, ids=[m[0] for m in MALFORMED])
def test_malformed_exit_codes(tmp_path, capsys, name, text, code):
    f = tmp_path / f"{name}.q"
    f.write_text(text)
    got, out, err = run(capsys, "analyze", str(f), "--json")
    assert got == code
    assert out == "" and err.count("\n") == 1


def test_analyze_json_schema_and_verdicts(capsys):
    code, out, _ = run(capsys, "analyze", str(DATA / "thick.q"), "--json", "--xdata")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, io.report_schema())
    assert doc["theorems"]["t43"]["status"] == "holds"
    assert doc["theorems"]["t44"]["status"] == "fails"
    assert doc["theorems"]["t41"]["status"] == "holds"
    assert doc["local_finite"] is False
    assert doc["pairs"][1] == {"v": "a", "w": "b", "path_count": "omega", "max_len": 1}


@pytest.mark.parametrize("name", ["thick.q", "loop.q", "loop_xx.q"])
def test_json_and_text_agree(capsys, name):
    _, js, _ = run(capsys, "analyze", str(DATA / name), "--json")
    _, txt, _ = run(capsys, "analyze", str(DATA / name), "--text")
    doc = json.loads(js)
    for tag, v in doc["theorems"].items():
        assert f"{tag}: {v['status']}" in txt
    for flag, c in doc["conclusions"].items():
        assert f"{flag}: {str(c['value']).lower()}" in txt


def test_xdata_flag_requires_data(capsys):
    code, _, err = run(capsys, "analyze", str(DATA / "loop.q"), "--xdata")
    assert code == 2 and "xdata" in err


def test_delta_command(capsys):
    code, out, _ = run(capsys, "delta", str(DATA / "loop.q"), "--path", "x.0 x.0")
    assert code == 0
    assert out.splitlines() == ["1 * e_u (x) x.0 x.0", "1 * x.0 (x) x.0", "1 * x.0 x.0 (x) e_u"]


def test_convolve_geometric(capsys):
    code, out, _ = run(capsys, "convolve", str(DATA / "loop.q"), "--trunc", "4", "--lhs", "1*e_u - 1*x.0", "--rhs", "<invert>")
    assert code == 0
    coeffs = [line.split("*", 1)[0] for line in out.splitlines()[1:]]
    assert coeffs == ["1"] * 5


def test_convolve_over_fp(capsys):
    code, out, _ = run(capsys, "--field", "fp:2", "convolve", str(DATA / "loop.q"), "--trunc", "2", "--lhs", "1*e_u + 1*x.0", "--rhs", "1*e_u + 1*x.0")
    assert code == 0
    assert out.splitlines()[1:] == ["1*e_u", "1*x.0 x.0"]


def test_ext1_command(capsys):
    code, out, _ = run(capsys, "ext1", str(DATA / "thick.q"), "--M", "simple:b", "--N", "simple:a")
    assert code == 0 and out.startswith("ext1=3 ")
    code, _, err = run(capsys, "ext1", str(DATA / "thick.q"), "--M", "weird:b", "--N", "simple:a")
    assert code == 2


def test_thick_check_command(capsys):
    code, out, _ = run(capsys, "thick-check", "--n", "3")
    assert code == 0
    assert out.splitlines()[0] == "ext1(T,S)=3 ext1(T,E)=0 identity OK"


def test_dot_parses(capsys):
    for name in ("thick.q", "loop_xx.q"):
        code, out, _ = run(capsys, "dot", str(DATA / name))
        assert code == 0
        graphs = pydot.graph_from_dot_data(out)
        assert graphs and len(graphs) == 1
    assert "forbidden" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "pathcoalg", "thick-check", "--n", "1"], capture_output=True, text=True)
    assert r.returncode == 0 and "identity OK" in r.stdout
