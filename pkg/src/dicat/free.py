"""Free double category on a double computad.

A square is stored as a canonical port graph: generator occurrences with
ordered left/right/top/bottom ports, and wires joining a source port to a
target port.  Nodes are numbered by a breadth-first walk from the outer
boundary, so two composites denote the same square exactly when their graphs
coincide.  Interchange and unit laws hold by construction.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Any

from .core import CompositionError, ConstructionError, DoubleCategory, SquareBoundary
from .functor import DFunctor

BOUNDARY = -1


@dataclass(frozen=True)
class Path:
    """A composable word of arrow generators (kind 'a') or proarrow generators ('p')."""

    kind: str
    src: str
    tgt: str
    gens: tuple = ()

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        if not self.gens:
            return ("id" if self.kind == "a" else "unit") + f"({self.src})"
        return ".".join(self.gens)


@dataclass(frozen=True)
class SquareGenerator:
    name: str
    left: Path
    right: Path
    top: Path
    bottom: Path


class Computad:
    """Objects plus arrow, proarrow and square generators."""

    def __init__(self, objects, arrows=None, proarrows=None, squares=None, name: str = "G"):
        self.name = name
        self.objects = tuple(objects)
        self.arrow_gens: dict[str, tuple[str, str]] = dict(arrows or {})
        self.proarrow_gens: dict[str, tuple[str, str]] = dict(proarrows or {})
        names = list(self.objects) + list(self.arrow_gens) + list(self.proarrow_gens)
        if len(set(names)) != len(names):
            raise ConstructionError("generator names must be distinct")
        for kind, gens in (("arrow", self.arrow_gens), ("proarrow", self.proarrow_gens)):
            for g, (s, t) in gens.items():
                if s not in self.objects or t not in self.objects:
                    raise ConstructionError(f"{kind} generator {g} has an unknown endpoint")
        self.square_gens: dict[str, SquareGenerator] = {}
        for name_, spec in (squares or {}).items():
            if name_ in names or name_ in self.square_gens:
                raise ConstructionError(f"duplicate generator name {name_}")
            self.square_gens[name_] = self._square(name_, *spec)

    def path(self, kind: str, gens, src: str | None = None) -> Path:
        gens = tuple(gens)
        table = self.arrow_gens if kind == "a" else self.proarrow_gens
        if not gens:
            if src is None:
                raise ConstructionError("an empty path needs an explicit object")
            if src not in self.objects:
                raise ConstructionError(f"unknown object {src}")
            return Path(kind, src, src, ())
        for g in gens:
            if g not in table:
                raise ConstructionError(f"unknown {'arrow' if kind == 'a' else 'proarrow'} generator {g}")
        for g, h in zip(gens, gens[1:]):
            if table[g][1] != table[h][0]:
                raise ConstructionError(f"generators {g} and {h} do not compose")
        if src is not None and table[gens[0]][0] != src:
            raise ConstructionError(f"path {'.'.join(gens)} does not start at {src}")
        return Path(kind, table[gens[0]][0], table[gens[-1]][1], gens)

    def _square(self, name, left, right, top, bottom, corners=None):
        """Infer the four corners from the non-empty sides, then type the paths."""
        table = {"a": self.arrow_gens, "p": self.proarrow_gens}
        # corners: 0 top-left, 1 top-right, 2 bottom-left, 3 bottom-right
        sides = {"left": ("p", left, 0, 2), "right": ("p", right, 1, 3),
                 "top": ("a", top, 0, 1), "bottom": ("a", bottom, 2, 3)}
        known: list[Any] = list(corners) if corners else [None] * 4
        for _ in range(4):
            for kind, gens, s, t in sides.values():
                gens = tuple(gens)
                if gens:
                    for g in gens:
                        if g not in table[kind]:
                            raise ConstructionError(f"square generator {name}: unknown generator {g}")
                    for c, v in ((s, table[kind][gens[0]][0]), (t, table[kind][gens[-1]][1])):
                        if known[c] is None:
                            known[c] = v
                        elif known[c] != v:
                            raise ConstructionError(f"square generator {name}: corners do not match")
                else:
                    if known[s] is None:
                        known[s] = known[t]
                    elif known[t] is None:
                        known[t] = known[s]
                    elif known[s] != known[t]:
                        raise ConstructionError(f"square generator {name}: corners do not match")
        if any(k is None for k in known):
            raise ConstructionError(f"square generator {name}: corners cannot be inferred, give them explicitly")
        if not (left or right or top or bottom):
            raise ConstructionError(f"square generator {name} has an empty boundary")
        try:
            return SquareGenerator(
                name,
                self.path("p", left, known[0]), self.path("p", right, known[1]),
                self.path("a", top, known[0]), self.path("a", bottom, known[2]))
        except ConstructionError as exc:
            raise ConstructionError(f"square generator {name}: {exc}") from None


def _ports(gen: SquareGenerator, node: int):
    return ([(node, "L", i) for i in range(len(gen.left))] + [(node, "R", i) for i in range(len(gen.right))]
            + [(node, "T", j) for j in range(len(gen.top))] + [(node, "B", j) for j in range(len(gen.bottom))])


@dataclass(frozen=True)
class FreeSquare:
    left: Path
    right: Path
    top: Path
    bottom: Path
    nodes: tuple
    wires: tuple
    term: Any = field(default=None, compare=False, hash=False)

    @property
    def boundary(self) -> SquareBoundary:
        return SquareBoundary(self.left, self.right, self.top, self.bottom)

    def __str__(self):
        return show_term(self.term) if self.term is not None else f"<square {self.nodes}>"


def show_term(term) -> str:
    tag = term[0]
    if tag == "gen":
        return term[1]
    if tag == "idp":
        return f"id[{term[1]}]"
    if tag == "ida":
        return f"id[{term[1]}]"
    a, b = show_term(term[1]), show_term(term[2])
    return f"({a} ; {b})" if tag == "h" else f"({a} / {b})"


def _canonical(computad: Computad, left, right, top, bottom, nodes, wires: dict, term) -> FreeSquare:
    adj = {}
    for a, b in wires.items():
        adj[a] = b
        adj[b] = a
    queue = deque([(BOUNDARY, "L", i) for i in range(len(left))] + [(BOUNDARY, "T", j) for j in range(len(top))]
                  + [(BOUNDARY, "R", i) for i in range(len(right))] + [(BOUNDARY, "B", j) for j in range(len(bottom))])
    renumber: dict[int, int] = {}
    while queue:
        port = queue.popleft()
        other = adj.get(port)
        if other is None:
            raise ConstructionError(f"dangling port {port}")
        k = other[0]
        if k != BOUNDARY and k not in renumber:
            renumber[k] = len(renumber)
            queue.extend(_ports(computad.square_gens[nodes[k]], k))
    if len(renumber) != len(nodes):
        raise ConstructionError("pasting has a component disconnected from its boundary")
    move = lambda p: p if p[0] == BOUNDARY else (renumber[p[0]],) + p[1:]
    new_nodes = [None] * len(nodes)
    for old, new in renumber.items():
        new_nodes[new] = nodes[old]
    new_wires = tuple(sorted((move(a), move(b)) for a, b in wires.items()))
    return FreeSquare(left, right, top, bottom, tuple(new_nodes), new_wires, term)


class FreeDoubleCategory(DoubleCategory):
    def __init__(self, computad: Computad, max_path: int = 2):
        self.computad = computad
        self.name = f"Free({computad.name})"
        self.max_path = max_path
        self._sample = None

    # -- cells
    def generator(self, name: str) -> FreeSquare:
        g = self.computad.square_gens[name]
        wires = {}
        for i in range(len(g.left)):
            wires[(BOUNDARY, "L", i)] = (0, "L", i)
        for i in range(len(g.right)):
            wires[(0, "R", i)] = (BOUNDARY, "R", i)
        for j in range(len(g.top)):
            wires[(BOUNDARY, "T", j)] = (0, "T", j)
        for j in range(len(g.bottom)):
            wires[(0, "B", j)] = (BOUNDARY, "B", j)
        return _canonical(self.computad, g.left, g.right, g.top, g.bottom, (name,), wires, ("gen", name))

    def arrow(self, *gens, src=None) -> Path:
        return self.computad.path("a", gens, src)

    def proarrow(self, *gens, src=None) -> Path:
        return self.computad.path("p", gens, src)

    def objects(self):
        return list(self.computad.objects)

    def _paths(self, kind):
        table = self.computad.arrow_gens if kind == "a" else self.computad.proarrow_gens
        out = [Path(kind, o, o, ()) for o in self.computad.objects]
        frontier = [p for p in out]
        for _ in range(self.max_path):
            nxt = []
            for p in frontier:
                for g, (s, t) in table.items():
                    if s == p.tgt:
                        q = Path(kind, p.src, t, p.gens + (g,))
                        nxt.append(q)
            out += nxt
            frontier = nxt
        return out

    def arrows(self):
        return self._paths("a")

    def proarrows(self):
        return self._paths("p")

    def square_sample(self, limit=200):
        """Generators, identities on generators, then binary composites, breadth first."""
        if self._sample is not None and len(self._sample) >= limit:
            return self._sample[:limit]
        seen: dict = {}

        def add(s):
            if s not in seen and len(seen) < limit:
                seen[s] = s
        for g in self.computad.square_gens:
            add(self.generator(g))
        for p in self.proarrows():
            if len(p) <= 1:
                add(self.id_square_pro(p))
        for f in self.arrows():
            if len(f) <= 1:
                add(self.id_square_arrow(f))
        frontier = list(seen)
        while frontier and len(seen) < limit:
            base = list(seen)
            nxt = []
            for s in frontier:
                for t in base:
                    for a, b in ((s, t), (t, s)):
                        for op in (self.hcomp, self.vcomp):
                            try:
                                c = op(a, b)
                            except CompositionError:
                                continue
                            if c not in seen and len(seen) < limit:
                                seen[c] = c
                                nxt.append(c)
            frontier = nxt
        self._sample = list(seen)
        return self._sample[:limit]

    def squares(self, left, right, top, bottom, limit=None):
        want = SquareBoundary(left, right, top, bottom)
        out = [s for s in self.square_sample() if s.boundary == want]
        if not left.gens and not right.gens and top == bottom and left.src == top.src:
            ident = self.id_square_arrow(top)
            if ident not in out:
                out.insert(0, ident)
        if not top.gens and not bottom.gens and left == right and left.src == top.src:
            ident = self.id_square_pro(left)
            if ident not in out:
                out.insert(0, ident)
        return out if limit is None else out[:limit]

    def arrow_src(self, f):
        return f.src

    def arrow_tgt(self, f):
        return f.tgt

    pro_src = arrow_src
    pro_tgt = arrow_tgt

    def boundary(self, sq):
        return sq.boundary

    def id_arrow(self, obj):
        return Path("a", obj, obj, ())

    def unit(self, obj):
        return Path("p", obj, obj, ())

    def id_square_pro(self, m):
        wires = {(BOUNDARY, "L", i): (BOUNDARY, "R", i) for i in range(len(m))}
        ident = self.id_arrow(m.src), self.id_arrow(m.tgt)
        return _canonical(self.computad, m, m, ident[0], ident[1], (), wires, ("idp", m))

    def id_square_arrow(self, f):
        wires = {(BOUNDARY, "T", j): (BOUNDARY, "B", j) for j in range(len(f))}
        return _canonical(self.computad, self.unit(f.src), self.unit(f.tgt), f, f, (), wires, ("ida", f))

    def comp(self, f, g):
        if f.kind != "a" or g.kind != "a" or f.tgt != g.src:
            raise CompositionError(f"arrows {f} and {g} do not compose")
        return Path("a", f.src, g.tgt, f.gens + g.gens)

    def procomp(self, m, n):
        if m.kind != "p" or n.kind != "p" or m.tgt != n.src:
            raise CompositionError(f"proarrows {m} and {n} do not compose")
        return Path("p", m.src, n.tgt, m.gens + n.gens)

    def hcomp(self, s, t):
        if s.right != t.left:
            raise CompositionError(f"squares {s} and {t} do not share a proarrow")
        off = len(s.nodes)
        wt, wb = len(s.top), len(s.bottom)

        def move_t(p):
            k, side, i = p
            if k != BOUNDARY:
                return (k + off, side, i)
            if side == "T":
                return (BOUNDARY, "T", i + wt)
            if side == "B":
                return (BOUNDARY, "B", i + wb)
            return p
        wires, into_right, out_of_left = {}, {}, {}
        for a, b in s.wires:
            if b[0] == BOUNDARY and b[1] == "R":
                into_right[b[2]] = a
            else:
                wires[a] = b
        for a, b in t.wires:
            if a[0] == BOUNDARY and a[1] == "L":
                out_of_left[a[2]] = move_t(b)
            else:
                wires[move_t(a)] = move_t(b)
        for i in range(len(s.right)):
            wires[into_right[i]] = out_of_left[i]
        return _canonical(self.computad, s.left, t.right, self.comp(s.top, t.top), self.comp(s.bottom, t.bottom),
                          s.nodes + t.nodes, wires, ("h", s.term, t.term))

    def vcomp(self, s, t):
        if s.bottom != t.top:
            raise CompositionError(f"squares {s} and {t} do not share an arrow")
        off = len(s.nodes)
        hl, hr = len(s.left), len(s.right)

        def move_t(p):
            k, side, i = p
            if k != BOUNDARY:
                return (k + off, side, i)
            if side == "L":
                return (BOUNDARY, "L", i + hl)
            if side == "R":
                return (BOUNDARY, "R", i + hr)
            return p
        wires, into_bottom, out_of_top = {}, {}, {}
        for a, b in s.wires:
            if b[0] == BOUNDARY and b[1] == "B":
                into_bottom[b[2]] = a
            else:
                wires[a] = b
        for a, b in t.wires:
            if a[0] == BOUNDARY and a[1] == "T":
                out_of_top[a[2]] = move_t(b)
            else:
                wires[move_t(a)] = move_t(b)
        for j in range(len(s.bottom)):
            wires[into_bottom[j]] = out_of_top[j]
        return _canonical(self.computad, self.procomp(s.left, t.left), self.procomp(s.right, t.right),
                          s.top, t.bottom, s.nodes + t.nodes, wires, ("v", s.term, t.term))

    def invert(self, disk):
        # no relations: only identity disks are invertible
        if disk.nodes or disk.top.gens or disk.bottom.gens:
            return None
        return disk

    def describe(self, cell):
        if isinstance(cell, Path):
            return {"path": list(cell.gens), "src": cell.src, "tgt": cell.tgt,
                    "sort": "arrow" if cell.kind == "a" else "proarrow"}
        if isinstance(cell, FreeSquare):
            return {"square": str(cell), "generators": list(cell.nodes),
                    "boundary": {k: str(getattr(cell, k)) for k in ("left", "right", "top", "bottom")}}
        return str(cell)

    def __eq__(self, other):
        return isinstance(other, FreeDoubleCategory) and other.computad is self.computad

    def __hash__(self):
        return hash(("free", id(self.computad)))


def free_dc(computad: Computad, max_path: int = 2) -> FreeDoubleCategory:
    return FreeDoubleCategory(computad, max_path)


# ---------------------------------------------------------------------------
# grids


class GridSquare:
    """A rectangular block of generator squares and identity fillers."""

    def __init__(self, dc: FreeDoubleCategory, cells: list[list[FreeSquare]], corner: str | None = None):
        self.dc = dc
        self.cells = [list(row) for row in cells]
        rows = len(self.cells)
        cols = len(self.cells[0]) if rows else 0
        if any(len(r) != cols for r in self.cells):
            raise ConstructionError("grid rows have different lengths")
        for i in range(rows):
            for j in range(cols):
                c = self.cells[i][j]
                if j + 1 < cols and c.right != self.cells[i][j + 1].left:
                    raise ConstructionError(f"cells ({i},{j}) and ({i},{j + 1}) do not share a proarrow")
                if i + 1 < rows and c.bottom != self.cells[i + 1][j].top:
                    raise ConstructionError(f"cells ({i},{j}) and ({i + 1},{j}) do not share an arrow")
        if rows and cols:
            corner = self.cells[0][0].left.src
        elif corner is None:
            raise ConstructionError("an empty grid needs its corner object")
        self.corner = corner

    @property
    def shape(self):
        return (len(self.cells), len(self.cells[0]) if self.cells else 0)

    def to_square(self) -> FreeSquare:
        dc = self.dc
        rows, cols = self.shape
        if not rows or not cols:
            return dc.double_identity(self.corner)
        row_squares = [dc.hcomp_all(*row) for row in self.cells]
        return dc.vcomp_all(*row_squares)

    def boundary(self) -> SquareBoundary:
        return self.to_square().boundary

    def __eq__(self, other):
        return isinstance(other, GridSquare) and [[c for c in r] for r in self.cells] == other.cells \
            and self.corner == other.corner

    def __repr__(self):
        return f"GridSquare({[[str(c) for c in r] for r in self.cells]})"


def _is_arrow_identity(s: FreeSquare) -> bool:
    return not s.nodes and not s.left.gens and not s.right.gens


def _is_proarrow_identity(s: FreeSquare) -> bool:
    return not s.nodes and not s.top.gens and not s.bottom.gens


def normalize(g: GridSquare) -> GridSquare:
    """Drop rows made only of arrow-dimension identities and columns made only
    of proarrow-dimension identities."""
    cells = [row for row in g.cells if not all(_is_arrow_identity(c) for c in row)]
    if cells:
        keep = [j for j in range(len(cells[0])) if not all(_is_proarrow_identity(r[j]) for r in cells)]
        cells = [[r[j] for j in keep] for r in cells]
        if not cells[0]:
            cells = []
    return GridSquare(g.dc, cells, g.corner)


# ---------------------------------------------------------------------------
# random computads and functors out of free double categories


def random_computad(rng: random.Random, max_gens: int = 3, name: str = "G") -> Computad:
    n_obj = rng.randint(1, 3)
    objs = [f"X{i}" for i in range(n_obj)]
    arrows = {f"f{i}": (rng.choice(objs), rng.choice(objs)) for i in range(rng.randint(0, max_gens))}
    pros = {f"p{i}": (rng.choice(objs), rng.choice(objs)) for i in range(rng.randint(0, max_gens))}

    def paths(kind, start):
        table = arrows if kind == "a" else pros
        out = [()]
        for g, (s, t) in table.items():
            if s == start:
                out.append((g,))
                out += [(g, h) for h, (s2, _) in table.items() if s2 == t]
        return out

    def end(kind, start, gens):
        table = arrows if kind == "a" else pros
        return table[gens[-1]][1] if gens else start

    squares = {}
    attempts = 0
    target = rng.randint(0, max_gens)
    while len(squares) < target and attempts < 50:
        attempts += 1
        a = rng.choice(objs)
        top = rng.choice(paths("a", a))
        left = rng.choice(paths("p", a))
        b, c = end("a", a, top), end("p", a, left)
        rights = paths("p", b)
        right = rng.choice(rights)
        d = end("p", b, right)
        bottoms = [p for p in paths("a", c) if end("a", c, p) == d]
        if not bottoms:
            continue
        bottom = rng.choice(bottoms)
        if not (left or right or top or bottom):
            continue
        squares[f"s{len(squares)}"] = (left, right, top, bottom, (a, b, c, d))
    return Computad(objs, arrows, pros, squares, name=name)


def evaluate_term(term, target: DoubleCategory, on_square, on_arrow_path, on_proarrow_path):
    tag = term[0]
    if tag == "gen":
        return on_square(term[1])
    if tag == "idp":
        return target.id_square_pro(on_proarrow_path(term[1]))
    if tag == "ida":
        return target.id_square_arrow(on_arrow_path(term[1]))
    a = evaluate_term(term[1], target, on_square, on_arrow_path, on_proarrow_path)
    b = evaluate_term(term[2], target, on_square, on_arrow_path, on_proarrow_path)
    return target.hcomp(a, b) if tag == "h" else target.vcomp(a, b)


def free_functor(free: FreeDoubleCategory, target: DoubleCategory, objects: dict, arrows: dict,
                 proarrows: dict, squares: dict, name: str = "F") -> DFunctor:
    """Extend an assignment on generators to a strict functor."""

    def on_arrow(p: Path):
        if not p.gens:
            return target.id_arrow(objects[p.src])
        return target.comp_all(*(arrows[g] for g in p.gens))

    def on_pro(p: Path):
        if not p.gens:
            return target.unit(objects[p.src])
        return target.procomp_all(*(proarrows[g] for g in p.gens))

    def on_square(s: FreeSquare):
        return evaluate_term(s.term, target, squares.__getitem__, on_arrow, on_pro)

    return DFunctor(free, target, objects.__getitem__, on_arrow, on_pro, on_square, name=name)
