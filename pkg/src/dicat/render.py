"""Deterministic SVG string diagrams in the 2D projection.

Proarrows run left to right as horizontal wires, arrows run top to bottom
and cross them; a square is a labelled bead at the crossing.
"""
from __future__ import annotations

from html import escape

from .core import DicatError, DoubleCategory
from .extranat import Connector, connector_boundary

BEAD_R = 16
STEP = 110
MARGIN = 60


class RenderError(DicatError):
    """The target has no string-diagram picture (for instance a whole instance)."""


def _n(x: float) -> str:
    return f"{x:.1f}".rstrip("0").rstrip(".")


class Canvas:
    def __init__(self, width: float, height: float, title: str = ""):
        self.width, self.height, self.title = width, height, title
        self.items: list[str] = []

    def path(self, d: str, cls: str):
        self.items.append(f'<path class="{cls}" d="{d}" fill="none" stroke="black" stroke-width="2"/>')

    def line(self, x1, y1, x2, y2, cls: str):
        self.items.append(f'<line class="{cls}" x1="{_n(x1)}" y1="{_n(y1)}" x2="{_n(x2)}" y2="{_n(y2)}" '
                          f'stroke="black" stroke-width="2"/>')

    def bead(self, x, y, label: str):
        self.items.append(f'<g class="bead"><circle cx="{_n(x)}" cy="{_n(y)}" r="{BEAD_R}" fill="white" '
                          f'stroke="black" stroke-width="2"/><text x="{_n(x)}" y="{_n(y - BEAD_R - 6)}" '
                          f'text-anchor="middle" font-size="12">{escape(label)}</text></g>')

    def text(self, x, y, label: str, anchor: str = "middle"):
        if label:
            self.items.append(f'<text class="label" x="{_n(x)}" y="{_n(y)}" text-anchor="{anchor}" '
                              f'font-size="12">{escape(label)}</text>')

    def svg(self) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_n(self.width)}" height="{_n(self.height)}" '
                f'viewBox="0 0 {_n(self.width)} {_n(self.height)}" font-family="sans-serif">')
        title = [f"<title>{escape(self.title)}</title>"] if self.title else []
        return "\n".join([head, *title, *self.items, "</svg>"]) + "\n"


def render_beads(labels, left: str = "", right: str = "", top: str = "", bottom: str = "",
                 title: str = "") -> str:
    """A horizontal proarrow wire carrying one bead per label, left to right.

    With arrow labels, an arrow wire crosses at the middle; an empty label
    list draws the bare crossing of an identity square.
    """
    labels = list(labels)
    width = 2 * MARGIN + STEP * max(1, len(labels))
    height = 2 * MARGIN + 60
    c = Canvas(width, height, title)
    y = height / 2
    c.line(MARGIN, y, width - MARGIN, y, "proarrow")
    c.text(MARGIN - 6, y + 4, left, "end")
    c.text(width - MARGIN + 6, y + 4, right, "start")
    if top or bottom or not labels:
        x = width / 2
        c.line(x, MARGIN / 2, x, height - MARGIN / 2, "arrow")
        c.text(x, MARGIN / 2 - 6, top)
        c.text(x, height - MARGIN / 2 + 14, bottom)
    for i, label in enumerate(labels):
        c.bead(MARGIN + STEP * (i + 0.5), y, label)
    return c.svg()


def _short(dc: DoubleCategory, cell) -> str:
    text = getattr(cell, "name", "") or getattr(cell, "label", "")
    return text if isinstance(text, str) and text else str(cell)[:24]


def _is_identity(dc: DoubleCategory, square) -> bool:
    b = dc.boundary(square)
    if b.left == b.right and b.top == dc.id_arrow(dc.pro_src(b.left)):
        if dc.eq(square, dc.id_square_pro(b.left)):
            return True
    return (b.top == b.bottom and b.left == dc.unit(dc.arrow_src(b.top))
            and dc.eq(square, dc.id_square_arrow(b.top)))


def render_square(dc: DoubleCategory, square, label: str = "square") -> str:
    """One square; identity squares in either dimension are drawn without a bead."""
    b = dc.boundary(square)
    labels = [] if _is_identity(dc, square) else [label]
    return render_beads(labels, _short(dc, b.left), _short(dc, b.right), _short(dc, b.top),
                        _short(dc, b.bottom), title=label)


def render_disk(beads, left: str = "", right: str = "", title: str = "") -> str:
    """A composite disk given as its labelled bead schedule."""
    return render_beads([label for label, _ in beads], left, right, title=title)


def render_connector(word: Connector, title: str = "") -> str:
    """Cups bend two source factors together, caps two target factors;
    strips run straight across and braids cross."""
    src, tgt = connector_boundary(word)
    rows = max(len(src), len(tgt), 1)
    height = 2 * MARGIN + 50 * (rows - 1)
    width = 2 * MARGIN + 2 * STEP
    c = Canvas(width, height, title or str(word))
    x0, x1 = MARGIN, width - MARGIN
    ys = lambda k: MARGIN + 50 * k
    for k, p in enumerate(src):
        c.text(x0 - 6, ys(k) + 4, str(p), "end")
    for k, p in enumerate(tgt):
        c.text(x1 + 6, ys(k) + 4, str(p), "start")
    i = j = 0
    mid = (x0 + x1) / 2
    for letter in word.letters:
        s, t = letter.boundary()
        name = letter.args[0] if letter.args else ""
        if letter.kind == "cup":
            ya, yb = ys(i), ys(i + 1)
            c.path(f"M {_n(x0)} {_n(ya)} C {_n(mid)} {_n(ya)} {_n(mid)} {_n(yb)} {_n(x0)} {_n(yb)}", "cup")
            c.bead(x0 + 0.75 * (mid - x0), (ya + yb) / 2, f"ε {name}")
        elif letter.kind == "cap":
            ya, yb = ys(j), ys(j + 1)
            c.path(f"M {_n(x1)} {_n(ya)} C {_n(mid)} {_n(ya)} {_n(mid)} {_n(yb)} {_n(x1)} {_n(yb)}", "cap")
            c.bead(x1 - 0.75 * (x1 - mid), (ya + yb) / 2, f"η {name}")
        elif letter.kind in ("strip", "costrip"):
            ya, yb = ys(i), ys(j)
            c.path(f"M {_n(x0)} {_n(ya)} C {_n(mid)} {_n(ya)} {_n(mid)} {_n(yb)} {_n(x1)} {_n(yb)}", "strip")
        else:
            for a, b in ((i, j + 1), (i + 1, j)):
                c.path(f"M {_n(x0)} {_n(ys(a))} C {_n(mid)} {_n(ys(a))} {_n(mid)} {_n(ys(b))} "
                       f"{_n(x1)} {_n(ys(b))}", "braid")
        i, j = i + len(s), j + len(t)
    return c.svg()


def render(target, dc: DoubleCategory | None = None, label: str = "") -> str:
    """Dispatch on the target: connector, bead schedule, or a square of ``dc``."""
    if isinstance(target, Connector):
        return render_connector(target, label)
    if isinstance(target, list) and all(isinstance(x, tuple) and len(x) == 2 for x in target):
        return render_disk(target, title=label)
    if isinstance(target, DoubleCategory):
        raise RenderError(f"cannot render the whole instance {target.name}; pick a cell or component")
    if dc is not None:
        try:
            dc.boundary(target)
        except Exception:
            raise RenderError(f"{label or target!r} is not a square of {dc.name}") from None
        return render_square(dc, target, label or "square")
    raise RenderError(f"nothing to render for {label or target!r}")


__all__ = ["RenderError", "Canvas", "render_beads", "render_square", "render_disk", "render_connector", "render"]
