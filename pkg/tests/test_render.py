import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from dicat.dsl import load
from dicat.extranat import tensor_connectors
from dicat.render import RenderError, render, render_connector, render_disk, render_square

from sampling import rel_world
from test_dsl import fixture_text

GOLDEN = Path(__file__).parent / "golden"
SVG = "{http://www.w3.org/2000/svg}"


def beads_of(svg: str) -> int:
    return len(ET.fromstring(svg).findall(f"{SVG}g[@class='bead']"))


def test_zigzag_disk_draws_four_beads():
    folds, z, _ = rel_world()
    C = folds.structure.dc
    m = C.proarrows()[3]
    svg = render_disk(z.S.beads(m), title="S")
    assert beads_of(svg) == 4
    assert render(z.S.beads(m), label="S") == svg


def test_identity_squares_have_no_bead():
    folds, *_ = rel_world()
    C = folds.structure.dc
    m = C.proarrows()[3]
    assert beads_of(render_square(C, C.id_square_pro(m))) == 0
    assert beads_of(render_square(C, C.id_square_arrow(C.arrows()[2]))) == 0


def test_connector_matches_the_golden_file():
    ws = load(fixture_text("rel3.dicat"))
    assert render_connector(ws.values["w"], "w") == (GOLDEN / "connector_w.svg").read_text(encoding="utf-8")


def test_braid_draws_two_crossing_wires():
    svg = render_connector(tensor_connectors(["braid"], ["A", "B"]))
    root = ET.fromstring(svg)
    assert len(root.findall(f"{SVG}path[@class='braid']")) == 2
    assert beads_of(svg) == 0


def test_rendering_is_deterministic():
    word = tensor_connectors(["cup", "strip", "cap"], ["A", "B", "C"])
    assert render_connector(word) == render_connector(word)


def test_an_instance_has_no_picture():
    folds, *_ = rel_world()
    with pytest.raises(RenderError):
        render(folds.structure.dc)
    with pytest.raises(RenderError):
        render("not a cell", folds.structure.dc)
