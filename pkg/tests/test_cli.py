import json
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from dicat.cli import run

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report.schema.json").read_text(encoding="utf-8"))


def fixture(name: str) -> str:
    return str(resources.files("dicat.fixtures").joinpath(name))


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", [
    ["check-instance", "rel3.dicat", "--budget", "40"],
    ["check-natural", "rel3.dicat"],
    ["check-dinatural", "rel3.dicat", "--budget", "60"],
    ["check-dimod", "rel3.dicat"],
    ["diagonalize", "rel3.dicat", "--name", "idL"],
    ["compose", "rel3.dicat", "eta", "idL"],
    ["zigzag", "rel3.dicat", "--object", "S2"],
    ["connector-graph", "rel3.dicat"],
    ["check-natural", "fincat2.dicat", "--budget", "40"],
    ["zigzag", "fincat2.dicat", "--object", "two", "--budget", "40"],
])
def test_reports_validate_against_the_schema(capsys, argv):
    argv = [argv[0], fixture(argv[1]), *argv[2:]]
    code, out, _ = invoke(capsys, *argv)
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc.get("passed", True)


def test_failing_law_exits_one_with_a_witness(capsys):
    code, out, _ = invoke(capsys, "check-dinatural", fixture("broken.dicat"))
    assert code == 1
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    failed = [r for r in doc["results"][0]["reports"] if r["status"] == "fail"]
    assert failed and all("witness" in r for r in failed)


def test_output_is_deterministic(capsys):
    argv = ("check-dinatural", fixture("rel3.dicat"), "--budget", "30", "--seed", "7")
    first = invoke(capsys, *argv)[1]
    assert invoke(capsys, *argv)[1] == first


def test_bad_input_exits_two(capsys, tmp_path):
    bad = tmp_path / "bad.dicat"
    bad.write_text("set A { 1 }\nrel r : A -> { }", encoding="utf-8")
    code, out, err = invoke(capsys, "check-natural", str(bad))
    assert code == 2 and out == ""
    assert "2:14" in err
    assert invoke(capsys, "check-natural", str(tmp_path / "missing.dicat"))[0] == 2
    assert invoke(capsys, "check-natural", fixture("rel3.dicat"), "--name", "nope")[0] == 2
    assert invoke(capsys, "diagonalize", fixture("rel3.dicat"), "--name", "s")[0] == 2


def test_render_of_the_instance_is_refused(capsys):
    code, out, err = invoke(capsys, "render", fixture("rel3.dicat"), "--target", "instance")
    assert code == 2 and "cannot render" in err


def test_render_writes_svg(capsys, tmp_path):
    target = tmp_path / "w.svg"
    code, *_ = invoke(capsys, "render", fixture("rel3.dicat"), "--target", "w", "--out", str(target))
    assert code == 0 and target.read_text(encoding="utf-8").startswith("<svg")


def test_text_format(capsys):
    code, out, _ = invoke(capsys, "zigzag", fixture("rel3.dicat"), "--object", "S2", "--format", "text")
    assert code == 0
    assert out.splitlines()[-1] == "result: pass"
    assert '    equals_unit: true' in out


def test_connector_graph_reports_the_boundary(capsys):
    code, out, _ = invoke(capsys, "connector-graph", fixture("fincat2.dicat"))
    doc = json.loads(out)
    assert code == 0
    assert doc["results"][0]["boundary"] == {"source": "two⊗two*⊗two", "target": "two⊗two*⊗two"}
