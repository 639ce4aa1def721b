import io
import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest

from algtangle import fixtures as F
from algtangle.cli import run
from algtangle.template import numerator_template, save_template
from algtangle.notation import parse

ROOT = pathlib.Path(__file__).resolve().parents[1]
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--json")
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return code, report


@pytest.fixture(scope="module")
def templates(tmp_path_factory):
    d = tmp_path_factory.mktemp("templates")
    paths = {}
    for name, t in [("sphere", F.sphere_fixture()), ("torus", F.torus_fixture()),
                    ("q2", F.q2_fixture()), ("trefoil", numerator_template(parse("[3]")))]:
        paths[name] = str(d / f"{name}.json")
        save_template(t, paths[name])
    return paths


def test_slope_text():
    assert call("slope", "-[3]^r + [3]^r") == (0, "0/1 (Type 0/1)\n", "")


def test_surface_json():
    code, r = call_json("surface", "-[3]^r + [3]^r")
    assert code == 0
    assert (r["result"]["euler"], r["result"]["boundary_count"], r["result"]["genus"]) == (-1, 3, 0)
    assert r["input"] == "-[3]^r + [3]^r"


def test_parse_error_exit_status():
    code, r = call_json("slope", "[2 +")
    assert code == 1
    assert r["error"]["type"] == "ParseError" and r["error"]["position"] == 3
    code, _, err = call("slope", "[2 +")
    assert code == 1 and "ParseError" in err


def test_usage_errors():
    assert call("slope")[0] == 2
    assert call("frobnicate", "[1]")[0] == 2
    assert call("slope", "[1]", "--bogus")[0] == 2
    assert call("decide", "/nonexistent/template.json")[0] == 2


def test_domain_errors_keep_their_names():
    code, r = call_json("surface", "([2] + -[2])^r + ([2] + -[2])^r")
    assert code == 1 and r["error"]["type"] == "ClosedSubtangle"
    code, r = call_json("slope", "[0] + [3]")
    assert code == 1 and r["error"]["type"] == "NonTrivialSumViolation"


def test_classify_and_oracle():
    code, r = call_json("classify", "[2 0] + [2 0]")
    assert code == 0 and r["result"]["has_loop"] is True and r["result"]["connection_type"] is None
    code, r = call_json("classify", "Q2 + [3]")
    assert r["result"]["q_summands"] == [{"m": 2, "path": ["left"]}]
    code, r = call_json("oracle", "[2 3]")
    assert r["result"]["krebes"] == {"num": 7, "den": 2} and r["result"]["consistent"] is True
    code, r = call_json("oracle", "Q1 + [3]")
    assert r["result"]["consistent"] is None and r["warnings"]


def test_genus():
    assert call("genus", "(-[2]^r + [3]^r)^r + [6]")[1] == "1\n"
    assert call_json("genus", "(-[2]^r + [3]^r)^r + [6]")[1]["result"] == {"genus": 1}


def test_assemble(templates):
    code, out, _ = call("assemble", templates["trefoil"], "--pd")
    assert code == 0 and len(out.splitlines()) == 3
    code, r = call_json("assemble", templates["trefoil"], "--pd")
    assert r["result"]["crossings"] == 3 and r["result"]["components"] == 1
    assert r["result"]["pd"] == out.splitlines()


def test_decide(templates):
    _, r = call_json("decide", templates["sphere"])
    assert r["result"]["sphere"]["value"] is True
    _, r = call_json("decide", templates["torus"])
    assert r["result"]["torus"]["value"] == "yes"
    _, r = call_json("decide", templates["q2"])
    assert r["result"]["torus"]["witness"]["m"] == 2


def test_invalid_template_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"closure": false, "vertices": [{"id": "a"}], "edges": [], "tangles": {"a": "[1]"}}')
    code, r = call_json("assemble", str(path))
    assert code == 1 and r["error"]["type"] == "InvalidTemplate" and r["error"]["violations"]


@pytest.mark.parametrize("argv", [
    ("surface", "(-[2]^r + [3]^r)^r + [6]"),
    ("oracle", "[2 2]^r + [2 2]^r"),
    ("slope", "[2 3] * [1 1]"),
])
def test_human_and_json_agree(argv):
    _, text, _ = call(*argv)
    _, r = call_json(*argv)
    fields = dict(line.split(": ", 1) for line in text.splitlines() if ": " in line)
    for key, value in r["result"].items():
        if isinstance(value, int) and not isinstance(value, bool) and key in fields:
            assert fields[key] == str(value)
    assert call(*argv) == call(*argv)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "algtangle.cli", "slope", "[2 3]", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == {"slope": "7/2", "type": "1/0"}
