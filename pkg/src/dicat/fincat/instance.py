"""Squares between proarrow lists and the double category of finite categories."""
from __future__ import annotations

import itertools
import random

from ..core import CompositionError, ConstructionError, DoubleCategory, SquareBoundary
from .category import (UNIT, Cat, CatFunctor, FinCategory, all_functors, chain3, identity_cat_functor,
                       idempotent, parallel_pair, terminal_category, walking_arrow)
from .profunctor import (ConstantAtom, ProarrowList, RepresentableAtom, TableAtom, hom, transpose_list,
                         transpose_tuple)


def square_keys(plist: ProarrowList) -> tuple:
    """Every (a, c, class representative) of a list, in canonical order."""
    return plist.evaluation.square_keys


class NatSquare:
    """A natural family theta_{a,c}: eval(left)(a, c) -> eval(right)(top a, bottom c)."""

    __slots__ = ("left", "right", "top", "bottom", "values", "_map", "_hash")

    def __init__(self, left: ProarrowList, right: ProarrowList, top: CatFunctor, bottom: CatFunctor,
                 values: tuple):
        self.left, self.right, self.top, self.bottom = left, right, top, bottom
        self.values = values
        self._map = None
        self._hash = hash((left, right, top, bottom, values))

    def __call__(self, a, c, rep):
        if self._map is None:
            self._map = dict(zip(square_keys(self.left), self.values))
        return self._map[(a, c, rep)]

    def table(self) -> dict:
        return dict(zip(square_keys(self.left), self.values))

    @property
    def boundary(self) -> SquareBoundary:
        return SquareBoundary(self.left, self.right, self.top, self.bottom)

    def __eq__(self, other):
        return isinstance(other, NatSquare) and (self is other or (
            self._hash == other._hash and self.values == other.values and self.left == other.left
            and self.right == other.right and self.top == other.top and self.bottom == other.bottom))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"NatSquare({self.left.label} => {self.right.label} | {self.top.name}, {self.bottom.name})"


def check_corners(left: ProarrowList, right: ProarrowList, top: CatFunctor, bottom: CatFunctor):
    if not (left.src == top.src and top.tgt == right.src and left.tgt == bottom.src and bottom.tgt == right.tgt):
        raise CompositionError("square boundary corners do not match")


def naturality_violations(sq: NatSquare, limit: int = 1) -> list:
    left, right, top, bottom = sq.left, sq.right, sq.top, sq.bottom
    ev, ew = left.evaluation, right.evaluation
    A, C = left.src, left.tgt
    bad = []
    for a, c, rep in square_keys(left):
        y = sq(a, c, rep)
        for f in A.into[a]:
            if sq(A.src(f), c, ev.act(f, rep, C.ident(c))) != ew.act(top.amap[f], y, right.tgt.ident(bottom.omap[c])):
                bad.append((a, c, rep, f))
        for g in C.out_of[c]:
            if sq(a, C.tgt(g), ev.act(A.ident(a), rep, g)) != ew.act(right.src.ident(top.omap[a]), y, bottom.amap[g]):
                bad.append((a, c, rep, g))
        if len(bad) >= limit:
            break
    return bad


def make_square(left: ProarrowList, right: ProarrowList, top: CatFunctor, bottom: CatFunctor, fn,
                check: bool = True) -> NatSquare:
    """``fn(a, c, rep)`` returns any member of the target class."""
    check_corners(left, right, top, bottom)
    ew = right.evaluation
    values = tuple(ew.classify(top.omap[a], bottom.omap[c], fn(a, c, rep)) for a, c, rep in square_keys(left))
    sq = NatSquare(left, right, top, bottom, values)
    if check:
        bad = naturality_violations(sq)
        if bad:
            a, c, rep, f = bad[0]
            raise ConstructionError(f"family is not natural at ({a}, {c}) on {rep!r} along {f}")
    return sq


def disk_by_values(left: ProarrowList, right: ProarrowList, value_left, value_right, top=None, bottom=None,
                   chase: bool = True) -> NatSquare:
    """The square sending each class to the unique target class with the same value.

    ``value_left(a, c, t)`` accepts any member t; with ``chase`` every
    member of every class is checked to give the same value.
    """
    top = top or identity_cat_functor(left.src)
    bottom = bottom or identity_cat_functor(left.tgt)
    check_corners(left, right, top, bottom)
    ev, ew = left.evaluation, right.evaluation
    index: dict = {}

    def lookup(a2, c2, v):
        tab = index.get((a2, c2))
        if tab is None:
            tab = {}
            for r in ew.classes(a2, c2):
                w = value_right(a2, c2, r)
                if w in tab:
                    raise ConstructionError(f"target classes {tab[w]!r} and {r!r} share the value {w!r}")
                tab[w] = r
            index[(a2, c2)] = tab
        try:
            return tab[v]
        except KeyError:
            raise ConstructionError(f"no target class with value {v!r} at ({a2}, {c2})") from None

    values = []
    for a, c, rep in square_keys(left):
        v = value_left(a, c, rep)
        if chase:
            for t in ev.members(a, c, rep):
                if value_left(a, c, t) != v:
                    raise ConstructionError(f"value is not well defined on the class of {rep!r}")
        values.append(lookup(top.omap[a], bottom.omap[c], v))
    return NatSquare(left, right, top, bottom, tuple(values))


# ---------------------------------------------------------------------------
# splitting and joining coend tuples of concatenated lists


def split_tuple(first: ProarrowList, second: ProarrowList, a, e, t):
    """Cut a member of eval(first ++ second)(a, e) into class reps (b, u, v)."""
    k, l = len(first), len(second)
    if k and l:
        mids, elems = t
        b = mids[k - 1]
        u = first.evaluation.classify(a, b, (mids[:k - 1], elems[:k]))
        v = second.evaluation.classify(b, e, (mids[k:], elems[k:]))
        return b, u, v
    if l:
        return a, first.src.ident(a), second.evaluation.classify(a, e, t)
    if k:
        return e, first.evaluation.classify(a, e, t), second.tgt.ident(e)
    return e, t, first.src.ident(e)


def join_tuple(first: ProarrowList, second: ProarrowList, a, b, e, u, v):
    """The class of eval(first ++ second)(a, e) containing (u, v)."""
    k, l = len(first), len(second)
    if k and l:
        (um, ue), (vm, ve) = u, v
        return first.then(second).evaluation.classify(a, e, (um + (b,) + vm, ue + ve))
    if l:
        return second.evaluation.act(u, v, second.tgt.ident(e))
    if k:
        return first.evaluation.act(first.src.ident(a), u, v)
    return first.src.comp(u, v)


# ---------------------------------------------------------------------------
# cell operations


def vcomp_squares(top_sq: NatSquare, bottom_sq: NatSquare) -> NatSquare:
    """Stack in the proarrow dimension: top_sq.bottom must equal bottom_sq.top."""
    if top_sq.bottom != bottom_sq.top:
        raise CompositionError("squares do not stack: shared arrow differs")
    m, m2, n, n2 = top_sq.left, bottom_sq.left, top_sq.right, bottom_sq.right
    left, right = m.then(m2), n.then(n2)
    f, g, h = top_sq.top, top_sq.bottom, bottom_sq.bottom

    def fn(a, e, rep):
        b, u, v = split_tuple(m, m2, a, e, rep)
        return join_tuple(n, n2, f.omap[a], g.omap[b], h.omap[e], top_sq(a, b, u), bottom_sq(b, e, v))
    return make_square(left, right, f, h, fn, check=False)


def hcomp_squares(first: NatSquare, second: NatSquare) -> NatSquare:
    if first.right != second.left:
        raise CompositionError("squares do not compose: shared proarrow differs")
    values = tuple(second(first.top.omap[a], first.bottom.omap[c], y)
                   for (a, c, _), y in zip(square_keys(first.left), first.values))
    return NatSquare(first.left, second.right, first.top.then(second.top), first.bottom.then(second.bottom), values)


def identity_square(plist: ProarrowList) -> NatSquare:
    return NatSquare(plist, plist, identity_cat_functor(plist.src), identity_cat_functor(plist.tgt),
                     tuple(r for _, _, r in square_keys(plist)))


def functor_square(F: CatFunctor) -> NatSquare:
    """The identity square along F: unit => unit, h |-> F h."""
    src, tgt = ProarrowList.unit(F.src), ProarrowList.unit(F.tgt)
    return NatSquare(src, tgt, F, F, tuple(F.amap[h] for _, _, h in square_keys(src)))


def invert_square(disk: NatSquare) -> NatSquare | None:
    if not (disk.top.is_identity() and disk.bottom.is_identity()):
        return None
    inverse: dict = {}
    for (a, c, r), y in zip(square_keys(disk.left), disk.values):
        if (a, c, y) in inverse:
            return None
        inverse[(a, c, y)] = r
    keys = square_keys(disk.right)
    if len(keys) != len(inverse):
        return None
    return NatSquare(disk.right, disk.left, disk.top, disk.bottom, tuple(inverse[k] for k in keys))


def enumerate_squares(left: ProarrowList, right: ProarrowList, top: CatFunctor, bottom: CatFunctor,
                      limit: int | None = None) -> list[NatSquare]:
    """All natural families on a boundary, by backtracking with propagation."""
    check_corners(left, right, top, bottom)
    keys = square_keys(left)
    ev, ew = left.evaluation, right.evaluation
    A, C = left.src, left.tgt
    pos = {k: i for i, k in enumerate(keys)}
    out: list = []

    def propagate(assign, start, value):
        stack = [(start, value)]
        assign[pos[start]] = value
        while stack:
            (a, c, r), y = stack.pop()
            moves = [((A.src(f), c, ev.act(f, r, C.ident(c))),
                      ew.act(top.amap[f], y, right.tgt.ident(bottom.omap[c]))) for f in A.into[a]]
            moves += [((a, C.tgt(g), ev.act(A.ident(a), r, g)),
                       ew.act(right.src.ident(top.omap[a]), y, bottom.amap[g])) for g in C.out_of[c]]
            for key, val in moves:
                i = pos[key]
                if assign[i] is None:
                    assign[i] = val
                    stack.append((key, val))
                elif assign[i] != val:
                    return False
        return True

    def search(assign):
        if limit is not None and len(out) >= limit:
            return
        try:
            i = assign.index(None)
        except ValueError:
            out.append(NatSquare(left, right, top, bottom, tuple(assign)))
            return
        a, c, _ = keys[i]
        for y in ew.classes(top.omap[a], bottom.omap[c]):
            trial = list(assign)
            if propagate(trial, keys[i], y):
                search(trial)

    search([None] * len(keys))
    return out


# ---------------------------------------------------------------------------


def standard_categories() -> list[FinCategory]:
    return [terminal_category(), walking_arrow(), chain3(), parallel_pair(), idempotent()]


class FinCatDC(DoubleCategory):
    """Finite categories, functors, proarrow lists and natural families.

    The enumerated universe is built from ``categories`` (each used as a
    single-factor category) together with any extra atoms supplied.
    """

    name = "FinCat"

    def __init__(self, categories=None, atoms=(), seed: int = 0, pair_limit: int = 12):
        self.categories = list(categories or standard_categories())
        self.extra_atoms = list(atoms)
        self.seed = seed
        self.pair_limit = pair_limit
        self._cache: dict = {}

    def _memo(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def objects(self):
        return self._memo("objects", lambda: [Cat.of(c) for c in self.categories])

    def arrows(self):
        def build():
            out = []
            for A in self.objects():
                for B in self.objects():
                    out.extend(all_functors(A, B))
            for i, F in enumerate(out):
                F.name = f"id({F.src.name})" if F.is_identity() else f"F{i}"
            return out
        return self._memo("arrows", build)

    def base_atoms(self):
        def build():
            atoms = []
            for A in self.objects():
                atoms.append(hom(A))
                atoms.append(ConstantAtom(A, A))
            for F in self.arrows():
                if not F.is_identity():
                    atoms.append(RepresentableAtom(F, True))
                    atoms.append(RepresentableAtom(F, False))
            atoms.extend(self.extra_atoms)
            return atoms
        return self._memo("atoms", build)

    def proarrows(self):
        def build():
            rng = random.Random(self.seed)
            singles = [ProarrowList.of(a) for a in self.base_atoms()]
            out = [ProarrowList.unit(A) for A in self.objects()] + singles
            by_src: dict = {}
            for p in singles:
                by_src.setdefault(p.src, []).append(p)
            pairs = [(p, q) for p in singles for q in by_src.get(p.tgt, [])]
            rng.shuffle(pairs)
            out.extend(p.then(q) for p, q in pairs[:self.pair_limit])
            return out
        return self._memo("proarrows", build)

    def square_sample(self, limit: int = 200):
        return self._memo(("squares", limit), lambda: self._sample(limit))

    def _sample(self, limit):
        rng = random.Random(self.seed + 1)
        pros = [p for p in self.proarrows() if len(p) <= 1]
        functors = self.arrows()
        out = [identity_square(p) for p in pros[:limit // 4]]
        out += [functor_square(F) for F in functors[:limit // 8]]
        by_src: dict = {}
        for F in functors:
            by_src.setdefault(F.src, []).append(F)
        attempts = 0
        while len(out) < (3 * limit) // 4 and attempts < 20 * limit:
            attempts += 1
            m, n = rng.choice(pros), rng.choice(pros)
            tops = [F for F in by_src.get(m.src, []) if F.tgt == n.src]
            bottoms = [G for G in by_src.get(m.tgt, []) if G.tgt == n.tgt]
            if not tops or not bottoms:
                continue
            found = enumerate_squares(m, n, rng.choice(tops), rng.choice(bottoms), limit=2)
            out.extend(s for s in found if s not in out)
        base = list(out)
        attempts = 0
        while len(out) < limit and attempts < 20 * limit:
            attempts += 1
            s, t = rng.choice(base), rng.choice(base)
            try:
                c = self.hcomp(s, t) if rng.random() < 0.5 else self.vcomp(s, t)
            except CompositionError:
                continue
            if c not in out:
                out.append(c)
        return out[:limit]

    def squares(self, left, right, top, bottom, limit=None):
        return enumerate_squares(left, right, top, bottom, limit)

    def arrow_src(self, f):
        return f.src

    def arrow_tgt(self, f):
        return f.tgt

    def pro_src(self, m):
        return m.src

    def pro_tgt(self, m):
        return m.tgt

    def boundary(self, sq):
        return sq.boundary

    def id_arrow(self, obj):
        return identity_cat_functor(obj)

    def unit(self, obj):
        return ProarrowList.unit(obj)

    def id_square_pro(self, m):
        return identity_square(m)

    def id_square_arrow(self, f):
        return functor_square(f)

    def comp(self, f, g):
        return f.then(g)

    def procomp(self, m, n):
        return m.then(n)

    def hcomp(self, s, t):
        return hcomp_squares(s, t)

    def vcomp(self, s, t):
        return vcomp_squares(s, t)

    def invert(self, disk):
        return invert_square(disk)

    def eq(self, x, y):
        return x == y

    def describe(self, cell):
        return describe_cell(cell)


def describe_cell(cell):
    if isinstance(cell, Cat):
        return {"category": cell.name}
    if isinstance(cell, CatFunctor):
        return {"functor": cell.name, "src": cell.src.name, "tgt": cell.tgt.name,
                "objects": {repr(a): repr(b) for a, b in cell.omap.items()}}
    if isinstance(cell, ProarrowList):
        return {"proarrow": cell.label, "src": cell.src.name, "tgt": cell.tgt.name}
    if isinstance(cell, NatSquare):
        return {"left": cell.left.label, "right": cell.right.label, "top": cell.top.name,
                "bottom": cell.bottom.name,
                "components": [[repr(k), repr(v)] for k, v in zip(square_keys(cell.left), cell.values)]}
    if isinstance(cell, tuple):
        return [describe_cell(c) for c in cell]
    return repr(cell)


def fincat_dc(categories=None, atoms=(), seed: int = 0) -> FinCatDC:
    return FinCatDC(categories, atoms, seed)


def random_profunctor(rng: random.Random, A: Cat, B: Cat, generators: int = 2, name: str = "P") -> TableAtom:
    """A random sub-profunctor of a coproduct of Hom_B(F a, G b)-style pieces.

    Each generator is an element (h: F a0 -> G b0) of Hom_X(F -, G =) for
    random functors F: A -> X, G: B -> X into one of A, B; the atom is the
    disjoint union of the sub-profunctors the generators span.
    """
    elements: dict = {}
    left, right = {}, {}
    counter = itertools.count()
    for gi in range(generators):
        X = rng.choice([A, B])
        Fs, Gs = all_functors(A, X), all_functors(B, X)
        F, G = rng.choice(Fs), rng.choice(Gs)
        a0, b0 = rng.choice(A.objects), rng.choice(B.objects)
        choices = X.hom(F.omap[a0], G.omap[b0])
        if not choices:
            continue
        h0 = rng.choice(choices)
        # close {h0} under both actions
        seen = {(a0, b0, h0)}
        todo = [(a0, b0, h0)]
        while todo:
            a, b, h = todo.pop()
            for f in A.into[a]:
                k = (A.src(f), b, X.comp(F.amap[f], h))
                if k not in seen:
                    seen.add(k)
                    todo.append(k)
            for g in B.out_of[b]:
                k = (a, B.tgt(g), X.comp(h, G.amap[g]))
                if k not in seen:
                    seen.add(k)
                    todo.append(k)
        names = {k: f"{name}{gi}_{next(counter)}" for k in sorted(seen, key=repr)}
        for (a, b, h), x in names.items():
            elements.setdefault((a, b), []).append(x)
            for f in A.into[a]:
                left[(f, x)] = names[(A.src(f), b, X.comp(F.amap[f], h))]
            for g in B.out_of[b]:
                right[(x, g)] = names[(a, B.tgt(g), X.comp(h, G.amap[g]))]
    return TableAtom(name, A, B, elements, left, right)


__all__ = [
    "NatSquare", "make_square", "disk_by_values", "split_tuple", "join_tuple", "vcomp_squares",
    "hcomp_squares", "identity_square", "functor_square", "invert_square", "enumerate_squares",
    "FinCatDC", "fincat_dc", "standard_categories", "random_profunctor", "describe_cell", "square_keys",
    "transpose_list", "transpose_tuple", "UNIT", "ProarrowList",
]
