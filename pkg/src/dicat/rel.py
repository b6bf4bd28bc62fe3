"""The thin double category of finite sets, functions and relations, with its
cartesian tensor, swap braiding and converse dual."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .core import CompositionError, ConstructionError, DoubleCategory, Product, SquareBoundary, co
from .functor import DFunctor


def _label(x) -> str:
    if len(x) == 0:
        return "*"
    if len(x) == 1:
        return str(x[0])
    return "(" + ",".join(map(str, x)) + ")"


@dataclass(frozen=True)
class FinSet:
    """Elements are tuples of atomic labels of a common length (the rank)."""

    elements: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ConstructionError(f"duplicate elements in set {self.name or self.elements}")
        if len({len(e) for e in self.elements}) > 1:
            raise ConstructionError(f"elements of mixed rank in set {self.name or self.elements}")

    @classmethod
    def of(cls, *labels, name: str = "") -> "FinSet":
        return cls(tuple(x if isinstance(x, tuple) else (x,) for x in labels), name)

    @property
    def rank(self) -> int | None:
        return len(self.elements[0]) if self.elements else None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self):
        if self.name:
            return self.name
        return "{" + " ".join(_label(e) for e in self.elements) + "}"


UNIT_SET = FinSet(((),), "I")


def tensor_sets(*sets: FinSet) -> FinSet:
    elems = tuple(sum(combo, ()) for combo in itertools.product(*(s.elements for s in sets)))
    parts = [s for s in sets if s != UNIT_SET]
    name = "*".join(s.name for s in parts) if all(s.name for s in parts) else ""
    return FinSet(elems, name or ("I" if not parts else ""))


def split_element(x: tuple, sets) -> tuple:
    """Cut a flattened tuple back into its tensor factors."""
    out, i = [], 0
    for s in sets:
        r = s.rank
        if r is None:
            raise ConstructionError("cannot split an element of an empty factor")
        out.append(x[i:i + r])
        i += r
    if i != len(x):
        raise ConstructionError(f"element {x} does not match factor ranks")
    return tuple(out)


@dataclass(frozen=True)
class Function:
    src: FinSet
    tgt: FinSet
    table: tuple  # image of each element of src, in order

    def __post_init__(self):
        if len(self.table) != len(self.src.elements):
            raise ConstructionError("function table has the wrong length")
        tgt = set(self.tgt.elements)
        for y in self.table:
            if y not in tgt:
                raise ConstructionError(f"function value {_label(y)} is not in {self.tgt}")

    @classmethod
    def from_map(cls, src: FinSet, tgt: FinSet, mapping: dict) -> "Function":
        missing = [x for x in src.elements if x not in mapping]
        if missing:
            raise ConstructionError(f"function undefined at {_label(missing[0])}")
        return cls(src, tgt, tuple(mapping[x] for x in src.elements))

    def __call__(self, x):
        return self.table[self.src.elements.index(x)]

    def as_dict(self) -> dict:
        return dict(zip(self.src.elements, self.table))

    def __str__(self):
        body = ", ".join(f"{_label(a)}->{_label(b)}" for a, b in zip(self.src.elements, self.table))
        return f"{self.src}->{self.tgt}[{body}]"


@dataclass(frozen=True)
class Relation:
    src: FinSet
    tgt: FinSet
    pairs: frozenset

    def __post_init__(self):
        a, b = set(self.src.elements), set(self.tgt.elements)
        for x, y in self.pairs:
            if x not in a or y not in b:
                raise ConstructionError(f"pair ({_label(x)},{_label(y)}) lies outside {self.src} x {self.tgt}")

    @classmethod
    def of(cls, src: FinSet, tgt: FinSet, pairs) -> "Relation":
        wrap = lambda v: v if isinstance(v, tuple) else (v,)
        return cls(src, tgt, frozenset((wrap(x), wrap(y)) for x, y in pairs))

    def converse(self) -> "Relation":
        return Relation(self.tgt, self.src, frozenset((y, x) for x, y in self.pairs))

    def sorted_pairs(self) -> list:
        ia = {x: i for i, x in enumerate(self.src.elements)}
        ib = {y: i for i, y in enumerate(self.tgt.elements)}
        return sorted(self.pairs, key=lambda p: (ia[p[0]], ib[p[1]]))

    def __str__(self):
        body = " ".join(f"({_label(x)},{_label(y)})" for x, y in self.sorted_pairs())
        return f"{self.src}~>{self.tgt}{{{body}}}"


@dataclass(frozen=True)
class RelSquare:
    """A thin square: it exists iff every related pair on the left maps to a
    related pair on the right."""

    left: Relation
    right: Relation
    top: Function
    bottom: Function

    def __post_init__(self):
        if not (self.left.src == self.top.src and self.top.tgt == self.right.src
                and self.left.tgt == self.bottom.src and self.bottom.tgt == self.right.tgt):
            raise CompositionError("square boundary corners do not match")
        if not square_exists(self.left, self.right, self.top, self.bottom):
            raise ConstructionError("no square with this boundary")

    def __str__(self):
        return f"[{self.left} => {self.right} | {self.top} ; {self.bottom}]"


def square_exists(left: Relation, right: Relation, top: Function, bottom: Function) -> bool:
    f, g = top.as_dict(), bottom.as_dict()
    return all((f[a], g[c]) in right.pairs for a, c in left.pairs)


def identity_function(a: FinSet) -> Function:
    return Function(a, a, a.elements)


def diagonal(a: FinSet) -> Relation:
    return Relation(a, a, frozenset((x, x) for x in a.elements))


def compose_functions(f: Function, g: Function) -> Function:
    if f.tgt != g.src:
        raise CompositionError(f"cannot compose functions {f} and {g}")
    gm = g.as_dict()
    return Function(f.src, g.tgt, tuple(gm[y] for y in f.table))


def compose_relations(r: Relation, s: Relation) -> Relation:
    if r.tgt != s.src:
        raise CompositionError(f"cannot compose relations {r} and {s}")
    out = {}
    for b, c in s.pairs:
        out.setdefault(b, []).append(c)
    return Relation(r.src, s.tgt, frozenset((a, c) for a, b in r.pairs for c in out.get(b, ())))


def graph(f: Function) -> Relation:
    return Relation(f.src, f.tgt, frozenset(zip(f.src.elements, f.table)))


def all_functions(a: FinSet, b: FinSet):
    for table in itertools.product(b.elements, repeat=len(a)):
        yield Function(a, b, table)


def all_relations(a: FinSet, b: FinSet):
    cells = list(itertools.product(a.elements, b.elements))
    for mask in range(1 << len(cells)):
        yield Relation(a, b, frozenset(c for i, c in enumerate(cells) if mask >> i & 1))


def standard_sets(max_size: int = 3) -> list[FinSet]:
    return [FinSet.of(*range(1, n + 1), name=f"S{n}") for n in range(max_size + 1)]


class Rel(DoubleCategory):
    """Sets, functions and relations; the universe fixes the sampled objects."""

    def __init__(self, universe: list[FinSet] | None = None, name: str = "Rel"):
        self.universe = list(universe if universe is not None else standard_sets(3))
        self.name = name
        self._arrows = None
        self._pros = None

    def objects(self):
        return list(self.universe)

    def arrows(self):
        if self._arrows is None:
            self._arrows = [f for a in self.universe for b in self.universe for f in all_functions(a, b)]
        return self._arrows

    def proarrows(self):
        if self._pros is None:
            self._pros = [r for a in self.universe for b in self.universe for r in all_relations(a, b)]
        return self._pros

    def square_sample(self, limit=200):
        """All squares whose sides come from a small seeded pool of cells."""
        rng = random.Random(f"rel-squares:{self.name}")
        k = max(2, int(round(limit ** 0.25)) + 2)
        pros = [diagonal(a) for a in self.universe]
        extra = [m for m in self.proarrows() if m not in pros]
        pros += rng.sample(extra, min(k, len(extra)))
        arrows = [identity_function(a) for a in self.universe]
        extra = [f for f in self.arrows() if f not in arrows]
        arrows += rng.sample(extra, min(k, len(extra)))
        out = []
        for m in pros:
            for f in arrows:
                if f.src != m.src:
                    continue
                for g in arrows:
                    if g.src != m.tgt:
                        continue
                    for n in pros:
                        if n.src == f.tgt and n.tgt == g.tgt and square_exists(m, n, f, g):
                            out.append(RelSquare(m, n, f, g))
        out.sort(key=lambda s: 0 if (s.left == s.right and s.top == s.bottom) else 1)
        return out[:limit]

    def squares(self, left, right, top, bottom, limit=None):
        try:
            return [RelSquare(left, right, top, bottom)]
        except (ConstructionError, CompositionError):
            return []

    def square(self, left, right, top, bottom) -> RelSquare:
        return RelSquare(left, right, top, bottom)

    def arrow_src(self, f):
        return f.src

    def arrow_tgt(self, f):
        return f.tgt

    def pro_src(self, m):
        return m.src

    def pro_tgt(self, m):
        return m.tgt

    def boundary(self, sq):
        return SquareBoundary(sq.left, sq.right, sq.top, sq.bottom)

    def id_arrow(self, obj):
        return identity_function(obj)

    def unit(self, obj):
        return diagonal(obj)

    def id_square_pro(self, m):
        return RelSquare(m, m, identity_function(m.src), identity_function(m.tgt))

    def id_square_arrow(self, f):
        return RelSquare(diagonal(f.src), diagonal(f.tgt), f, f)

    def comp(self, f, g):
        return compose_functions(f, g)

    def procomp(self, m, n):
        return compose_relations(m, n)

    def hcomp(self, s, t):
        if s.right != t.left:
            raise CompositionError("squares do not share a proarrow")
        return RelSquare(s.left, t.right, compose_functions(s.top, t.top), compose_functions(s.bottom, t.bottom))

    def vcomp(self, s, t):
        if s.bottom != t.top:
            raise CompositionError("squares do not share an arrow")
        return RelSquare(compose_relations(s.left, t.left), compose_relations(s.right, t.right), s.top, t.bottom)

    def invert(self, disk):
        if disk.top != identity_function(disk.top.src) or disk.bottom != identity_function(disk.bottom.src):
            return None
        if disk.left != disk.right:
            return None
        return RelSquare(disk.right, disk.left, disk.top, disk.bottom)

    def describe(self, cell):
        if isinstance(cell, FinSet):
            return {"set": [_label(e) for e in cell.elements]}
        if isinstance(cell, Function):
            return {"function": [[_label(a), _label(b)] for a, b in zip(cell.src.elements, cell.table)]}
        if isinstance(cell, Relation):
            return {"relation": [[_label(a), _label(b)] for a, b in cell.sorted_pairs()],
                    "src": str(cell.src), "tgt": str(cell.tgt)}
        if isinstance(cell, RelSquare):
            return {"square": {k: self.describe(getattr(cell, k)) for k in ("left", "right", "top", "bottom")}}
        return str(cell)

    def __eq__(self, other):
        return isinstance(other, Rel) and other.universe == self.universe

    def __hash__(self):
        return hash(("Rel", tuple(self.universe)))


def rel_dc(max_size: int = 3, universe: list[FinSet] | None = None) -> Rel:
    return Rel(universe if universe is not None else standard_sets(max_size))


# ---------------------------------------------------------------------------
# monoidal structure and dual


def tensor_functions(*fs: Function) -> Function:
    src = tensor_sets(*(f.src for f in fs))
    tgt = tensor_sets(*(f.tgt for f in fs))
    maps = [f.as_dict() for f in fs]
    table = []
    for x in src.elements:
        parts = split_element(x, [f.src for f in fs])
        table.append(sum((m[p] for m, p in zip(maps, parts)), ()))
    return Function(src, tgt, tuple(table))


def tensor_relations(*rs: Relation) -> Relation:
    src = tensor_sets(*(r.src for r in rs))
    tgt = tensor_sets(*(r.tgt for r in rs))
    pairs = frozenset(
        (sum((p[0] for p in combo), ()), sum((p[1] for p in combo), ()))
        for combo in itertools.product(*(r.sorted_pairs() for r in rs)))
    return Relation(src, tgt, pairs)


def tensor_squares(*ss: RelSquare) -> RelSquare:
    return RelSquare(tensor_relations(*(s.left for s in ss)), tensor_relations(*(s.right for s in ss)),
                     tensor_functions(*(s.top for s in ss)), tensor_functions(*(s.bottom for s in ss)))


def swap_function(a: FinSet, b: FinSet) -> Function:
    src, tgt = tensor_sets(a, b), tensor_sets(b, a)
    return Function(src, tgt, tuple(y + x for x, y in (split_element(e, [a, b]) for e in src.elements)))


class RelMonoidal:
    """Cartesian tensor with unit {()} and the swap braiding; strict."""

    def __init__(self, rel: Rel):
        self.dc = rel
        self.unit_object = UNIT_SET
        pair = Product(rel, rel)
        self.tensor = DFunctor(pair, rel,
                               lambda ab: tensor_sets(*ab),
                               lambda fg: tensor_functions(*fg),
                               lambda mn: tensor_relations(*mn),
                               lambda st: tensor_squares(*st), name="tensor")

    def tensor_objects(self, *objs):
        return tensor_sets(*objs)

    def tensor_proarrows(self, *ms):
        return tensor_relations(*ms)

    def tensor_arrows(self, *fs):
        return tensor_functions(*fs)

    def tensor_squares(self, *ss):
        return tensor_squares(*ss)

    def braiding(self, a: FinSet, b: FinSet) -> Relation:
        return graph(swap_function(a, b))

    # the tensor is strict, so both unitors are identity disks
    def left_unitor(self, m: Relation) -> RelSquare:
        return self.dc.id_square_pro(m)

    def right_unitor(self, m: Relation) -> RelSquare:
        return self.dc.id_square_pro(m)

    def braiding_arrow(self, a: FinSet, b: FinSet) -> Function:
        return swap_function(a, b)


def rel_monoidal(rel: Rel | None = None) -> RelMonoidal:
    return RelMonoidal(rel or rel_dc())


def rel_dual(rel: Rel | None = None) -> DFunctor:
    """co(Rel) -> Rel: identity on sets and functions, converse on relations."""
    rel = rel or rel_dc()
    ident = lambda x: x
    return DFunctor(co(rel), rel, ident, ident, lambda m: m.converse(),
                    lambda s: RelSquare(s.left.converse(), s.right.converse(), s.bottom, s.top), name="dual")
