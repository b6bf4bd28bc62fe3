"""Finite categories, their products with opposite flags, and functors."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from ..core import CompositionError, ConstructionError


class FinCategory:
    """Objects, named arrows with endpoints, identities and a total
    composition table ``compose[(f, g)] = f ; g`` (diagrammatic order).

    Composites involving identities are filled in automatically; every other
    composable pair must be listed.
    """

    def __init__(self, name: str, objects, arrows: dict | None = None, compose: dict | None = None,
                 identities: dict | None = None):
        self.name = name
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise ConstructionError(f"category {name}: duplicate objects")
        identities = dict(identities or {})
        self.ident = {a: identities.get(a, f"1{a}") for a in self.objects}
        self.ends: dict = {i: (a, a) for a, i in self.ident.items()}
        for f, (s, t) in (arrows or {}).items():
            if f in self.ends:
                raise ConstructionError(f"category {name}: duplicate arrow {f}")
            if s not in self.objects or t not in self.objects:
                raise ConstructionError(f"category {name}: arrow {f} has an unknown endpoint")
            self.ends[f] = (s, t)
        self.arrows = tuple(self.ends)
        table = {}
        for f in self.arrows:
            s, t = self.ends[f]
            table[(self.ident[s], f)] = f
            table[(f, self.ident[t])] = f
        for (f, g), h in (compose or {}).items():
            for x in (f, g, h):
                if x not in self.ends:
                    raise ConstructionError(f"category {name}: unknown arrow {x} in composition table")
            if self.ends[f][1] != self.ends[g][0]:
                raise ConstructionError(f"category {name}: {f} ; {g} is not composable")
            if self.ends[h] != (self.ends[f][0], self.ends[g][1]):
                raise ConstructionError(f"category {name}: {f} ; {g} = {h} has the wrong endpoints")
            if (f, g) in table and table[(f, g)] != h:
                raise ConstructionError(f"category {name}: conflicting composite for ({f}, {g})")
            table[(f, g)] = h
        self.table = table
        for f in self.arrows:
            for g in self.arrows:
                if self.ends[f][1] == self.ends[g][0] and (f, g) not in table:
                    raise ConstructionError(f"category {name}: composite of ({f}, {g}) is missing")
        for f, g, h in itertools.product(self.arrows, repeat=3):
            if self.ends[f][1] == self.ends[g][0] and self.ends[g][1] == self.ends[h][0]:
                if table[(table[(f, g)], h)] != table[(f, table[(g, h)])]:
                    raise ConstructionError(f"category {name}: composition is not associative at ({f}, {g}, {h})")
        self.homs = {(a, b): tuple(f for f in self.arrows if self.ends[f] == (a, b))
                     for a in self.objects for b in self.objects}
        self._key = (name, self.objects, tuple(sorted(self.ends.items())), tuple(sorted(table.items())))
        self._hash = hash(self._key)

    def src(self, f):
        return self.ends[f][0]

    def tgt(self, f):
        return self.ends[f][1]

    def comp(self, f, g):
        try:
            return self.table[(f, g)]
        except KeyError:
            raise CompositionError(f"{f} ; {g} is not composable in {self.name}") from None

    def hom(self, a, b):
        return self.homs[(a, b)]

    def non_identity_arrows(self):
        ids = set(self.ident.values())
        return [f for f in self.arrows if f not in ids]

    def __eq__(self, other):
        return isinstance(other, FinCategory) and other._key == self._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FinCategory({self.name})"


def terminal_category() -> FinCategory:
    return FinCategory("1", ["*"])


def walking_arrow() -> FinCategory:
    """Objects 0 and 1 with a single non-identity arrow u: 0 -> 1."""
    return FinCategory("2", [0, 1], {"u": (0, 1)})


def chain3() -> FinCategory:
    return FinCategory("3", [0, 1, 2], {"a": (0, 1), "b": (1, 2), "c": (0, 2)}, {("a", "b"): "c"})


def parallel_pair() -> FinCategory:
    return FinCategory("P", [0, 1], {"s": (0, 1), "t": (0, 1)})


def idempotent() -> FinCategory:
    return FinCategory("E", ["*"], {"e": ("*", "*")}, {("e", "e"): "e"})


def span_category() -> FinCategory:
    return FinCategory("V", ["l", "m", "r"], {"p": ("m", "l"), "q": ("m", "r")})


def involution() -> FinCategory:
    """One object with an automorphism of order two."""
    return FinCategory("Z2", ["*"], {"z": ("*", "*")}, {("z", "z"): "1*"})


@dataclass(frozen=True)
class Factor:
    cat: FinCategory
    op: bool = False

    @property
    def name(self):
        return self.cat.name + ("^op" if self.op else "")

    def objects(self):
        return self.cat.objects

    def hom(self, a, b):
        return self.cat.hom(b, a) if self.op else self.cat.hom(a, b)

    def src(self, f):
        return self.cat.tgt(f) if self.op else self.cat.src(f)

    def tgt(self, f):
        return self.cat.src(f) if self.op else self.cat.tgt(f)

    def comp(self, f, g):
        return self.cat.comp(g, f) if self.op else self.cat.comp(f, g)

    def ident(self, a):
        return self.cat.ident[a]

    def flip(self) -> "Factor":
        return Factor(self.cat, not self.op)


class Cat:
    """A product of finitely many basic categories, each possibly opposite.

    Objects and arrows are tuples with one entry per factor.  The empty
    product is the monoidal unit.
    """

    __slots__ = ("factors", "_hash", "__dict__")

    def __init__(self, factors=()):
        self.factors = tuple(factors)
        self._hash = hash(self.factors)

    @classmethod
    def of(cls, cat: FinCategory, op: bool = False) -> "Cat":
        return cls((Factor(cat, op),))

    def __eq__(self, other):
        return isinstance(other, Cat) and (self is other or self.factors == other.factors)

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.factors)

    @property
    def name(self) -> str:
        return "*".join(f.name for f in self.factors) if self.factors else "1"

    def __repr__(self):
        return f"Cat({self.name})"

    @cached_property
    def objects(self) -> tuple:
        return tuple(itertools.product(*(f.objects() for f in self.factors)))

    @cached_property
    def _homs(self) -> dict:
        return {}

    def hom(self, a, b) -> tuple:
        key = (a, b)
        got = self._homs.get(key)
        if got is None:
            got = self._homs[key] = tuple(itertools.product(*(f.hom(x, y) for f, x, y in zip(self.factors, a, b))))
        return got

    @cached_property
    def arrows(self) -> tuple:
        return tuple(f for a in self.objects for b in self.objects for f in self.hom(a, b))

    @cached_property
    def _ends(self) -> dict:
        return {f: (a, b) for a in self.objects for b in self.objects for f in self.hom(a, b)}

    def src(self, f):
        return self._ends[f][0]

    def tgt(self, f):
        return self._ends[f][1]

    @cached_property
    def _comp(self) -> dict:
        return {}

    def comp(self, f, g):
        key = (f, g)
        got = self._comp.get(key)
        if got is None:
            got = self._comp[key] = tuple(fa.comp(x, y) for fa, x, y in zip(self.factors, f, g))
        return got

    def ident(self, a):
        return tuple(f.ident(x) for f, x in zip(self.factors, a))

    @cached_property
    def out_of(self) -> dict:
        out = {a: [] for a in self.objects}
        ids = {self.ident(a) for a in self.objects}
        for f in self.arrows:
            if f not in ids:
                out[self.src(f)].append(f)
        return out

    @cached_property
    def into(self) -> dict:
        out = {a: [] for a in self.objects}
        ids = {self.ident(a) for a in self.objects}
        for f in self.arrows:
            if f not in ids:
                out[self.tgt(f)].append(f)
        return out

    def op(self) -> "Cat":
        return Cat(tuple(f.flip() for f in self.factors))

    def tensor(self, *others: "Cat") -> "Cat":
        return Cat(self.factors + sum((o.factors for o in others), ()))

    def split(self, x: tuple, parts) -> list:
        """Cut an object or arrow tuple by the factor counts of ``parts``."""
        out, i = [], 0
        for p in parts:
            n = len(p.factors) if isinstance(p, Cat) else p
            out.append(x[i:i + n])
            i += n
        return out


UNIT = Cat(())


class CatFunctor:
    """A functor between products of finite categories, stored as tables."""

    __slots__ = ("src", "tgt", "omap", "amap", "name", "_key", "_hash")

    def __init__(self, src: Cat, tgt: Cat, omap: dict, amap: dict, name: str = "", check: bool = True):
        self.src, self.tgt = src, tgt
        self.omap = dict(omap)
        self.amap = dict(amap)
        self.name = name
        if check:
            self._validate()
        self._key = (src, tgt, tuple(self.omap[a] for a in src.objects), tuple(self.amap[f] for f in src.arrows))
        self._hash = hash(self._key)

    def _validate(self):
        for a in self.src.objects:
            if a not in self.omap or self.omap[a] not in self.tgt.objects:
                raise ConstructionError(f"functor {self.name}: bad object image at {a}")
        for f in self.src.arrows:
            if f not in self.amap:
                raise ConstructionError(f"functor {self.name}: no image for arrow {f}")
            g = self.amap[f]
            if self.tgt.src(g) != self.omap[self.src.src(f)] or self.tgt.tgt(g) != self.omap[self.src.tgt(f)]:
                raise ConstructionError(f"functor {self.name}: arrow {f} is sent to an arrow with wrong ends")
        for a in self.src.objects:
            if self.amap[self.src.ident(a)] != self.tgt.ident(self.omap[a]):
                raise ConstructionError(f"functor {self.name}: identity at {a} not preserved")
        for f in self.src.arrows:
            for g in self.src.out_of.get(self.src.tgt(f), ()):
                if self.amap[self.src.comp(f, g)] != self.tgt.comp(self.amap[f], self.amap[g]):
                    raise ConstructionError(f"functor {self.name}: composite ({f}, {g}) not preserved")

    def __eq__(self, other):
        return isinstance(other, CatFunctor) and other._key == self._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"CatFunctor({self.name or '?'}: {self.src.name} -> {self.tgt.name})"

    def on_obj(self, a):
        return self.omap[a]

    def on_arrow(self, f):
        return self.amap[f]

    def then(self, other: "CatFunctor") -> "CatFunctor":
        if self.tgt != other.src:
            raise CompositionError(f"functors {self.name} and {other.name} do not compose")
        return CatFunctor(self.src, other.tgt, {a: other.omap[b] for a, b in self.omap.items()},
                          {f: other.amap[g] for f, g in self.amap.items()},
                          name=f"{self.name};{other.name}", check=False)

    def op(self) -> "CatFunctor":
        return CatFunctor(self.src.op(), self.tgt.op(), self.omap, self.amap, name=f"{self.name}^op", check=False)

    def is_identity(self) -> bool:
        return self.src == self.tgt and all(a == b for a, b in self.omap.items()) \
            and all(f == g for f, g in self.amap.items())


def identity_cat_functor(cat: Cat) -> CatFunctor:
    return CatFunctor(cat, cat, {a: a for a in cat.objects}, {f: f for f in cat.arrows},
                      name=f"id({cat.name})", check=False)


def tensor_functors(*fs: CatFunctor) -> CatFunctor:
    src = UNIT.tensor(*(f.src for f in fs))
    tgt = UNIT.tensor(*(f.tgt for f in fs))
    omap = {}
    for a in src.objects:
        omap[a] = sum((f.omap[x] for f, x in zip(fs, src.split(a, [f.src for f in fs]))), ())
    amap = {}
    for g in src.arrows:
        amap[g] = sum((f.amap[x] for f, x in zip(fs, src.split(g, [f.src for f in fs]))), ())
    return CatFunctor(src, tgt, omap, amap, name="*".join(f.name for f in fs), check=False)


def functor_from_tables(src: Cat, tgt: Cat, omap: dict, amap: dict, name: str = "") -> CatFunctor:
    """Build from tables on a single-factor category given with bare labels."""
    wrap = lambda x: x if isinstance(x, tuple) else (x,)
    o = {wrap(a): wrap(b) for a, b in omap.items()}
    a_ = {wrap(f): wrap(g) for f, g in amap.items()}
    for x in src.objects:
        if src.ident(x) not in a_ and x in o:
            a_[src.ident(x)] = tgt.ident(o[x])
    return CatFunctor(src, tgt, o, a_, name=name)


def all_functors(src: Cat, tgt: Cat, limit: int | None = None) -> list[CatFunctor]:
    """Every functor, by backtracking on object images then arrow images."""
    out = []
    objs = src.objects
    arrows = [f for f in src.arrows if f not in {src.ident(a) for a in objs}]
    for images in itertools.product(tgt.objects, repeat=len(objs)):
        omap = dict(zip(objs, images))
        choices = [tgt.hom(omap[src.src(f)], omap[src.tgt(f)]) for f in arrows]
        if any(not c for c in choices):
            continue
        for combo in itertools.product(*choices):
            amap = dict(zip(arrows, combo))
            for a in objs:
                amap[src.ident(a)] = tgt.ident(omap[a])
            ok = all(amap[src.comp(f, g)] == tgt.comp(amap[f], amap[g])
                     for f in arrows for g in src.out_of[src.tgt(f)])
            if ok:
                out.append(CatFunctor(src, tgt, omap, amap, name=f"F{len(out)}", check=False))
                if limit is not None and len(out) >= limit:
                    return out
    return out
