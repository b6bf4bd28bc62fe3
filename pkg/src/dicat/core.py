"""Strict double categories: the instance interface, generic constructions
(co, products, empty/singleton) and the axiom checker."""
from __future__ import annotations

import itertools
import random
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence


class DicatError(Exception):
    """Base class for every error raised by the library."""


class CompositionError(DicatError):
    """Two cells were composed along incompatible boundaries."""


class MissingComponentError(DicatError):
    """A transformation has no component at a requested cell."""


class ConstructionError(DicatError):
    """Data handed to a constructor violates its invariants."""


@dataclass(frozen=True)
class SquareBoundary:
    left: Any
    right: Any
    top: Any
    bottom: Any


class DoubleCategory:
    """A strict double category with finite sampling universes.

    Arrows compose with ``comp`` (diagrammatic order) and proarrows with
    ``procomp``.  Squares compose along proarrows with ``hcomp`` (the arrow
    dimension) and along arrows with ``vcomp`` (the proarrow dimension).
    """

    name = "dc"

    # -- universes used by the law checkers
    def objects(self) -> list:
        raise NotImplementedError

    def arrows(self) -> list:
        raise NotImplementedError

    def proarrows(self) -> list:
        raise NotImplementedError

    def square_sample(self, limit: int = 200) -> list:
        raise NotImplementedError

    def square_sample_complete(self, limit: int = 200) -> bool:
        """Whether ``square_sample(limit)`` is every square there is."""
        return False

    def universe_complete(self) -> bool:
        """Whether objects(), arrows() and proarrows() list the whole enumerated universe."""
        return True

    def squares(self, left, right, top, bottom, limit: int | None = None) -> list:
        raise NotImplementedError

    # -- boundaries
    def arrow_src(self, f):
        raise NotImplementedError

    def arrow_tgt(self, f):
        raise NotImplementedError

    def pro_src(self, m):
        raise NotImplementedError

    def pro_tgt(self, m):
        raise NotImplementedError

    def boundary(self, sq) -> SquareBoundary:
        raise NotImplementedError

    # -- identities
    def id_arrow(self, obj):
        raise NotImplementedError

    def unit(self, obj):
        """Identity proarrow."""
        raise NotImplementedError

    def id_square_pro(self, m):
        """Arrow-dimension identity on m: the square m => m with identity arrows."""
        raise NotImplementedError

    def id_square_arrow(self, f):
        """Proarrow-dimension identity on f: unit => unit along f, f."""
        raise NotImplementedError

    def double_identity(self, obj):
        return self.id_square_arrow(self.id_arrow(obj))

    # -- composition
    def comp(self, f, g):
        raise NotImplementedError

    def procomp(self, m, n):
        raise NotImplementedError

    def hcomp(self, s, t):
        raise NotImplementedError

    def vcomp(self, s, t):
        raise NotImplementedError

    def invert(self, disk):
        """Two-sided inverse of a disk in the arrow dimension, or None."""
        raise NotImplementedError

    # -- equality and display
    def eq(self, x, y) -> bool:
        return x == y

    def describe(self, cell) -> Any:
        return str(cell)

    # -- derived helpers
    def comp_all(self, first, *rest):
        out = first
        for f in rest:
            out = self.comp(out, f)
        return out

    def procomp_all(self, first, *rest):
        out = first
        for m in rest:
            out = self.procomp(out, m)
        return out

    def hcomp_all(self, first, *rest):
        out = first
        for s in rest:
            out = self.hcomp(out, s)
        return out

    def vcomp_all(self, first, *rest):
        out = first
        for s in rest:
            out = self.vcomp(out, s)
        return out

    def is_disk(self, sq) -> bool:
        b = self.boundary(sq)
        return b.top == self.id_arrow(self.arrow_src(b.top)) and b.bottom == self.id_arrow(
            self.arrow_src(b.bottom)
        )

    def require_inverse(self, disk):
        inv = self.invert(disk)
        if inv is None:
            raise ConstructionError(f"disk is not invertible: {self.describe(disk)}")
        return inv

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


# ---------------------------------------------------------------------------
# law reports and sampling


@dataclass
class Budget:
    """Sampling limits for law checks."""

    per_law: int = 400
    squares: int = 120
    per_boundary: int = 4
    seed: int = 0

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


@dataclass
class LawReport:
    law_id: str
    checked: int = 0
    status: str = "pass"
    witness: dict | None = None
    exhaustive: bool = True
    group: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, witness: dict):
        if self.status == "pass":
            self.status = "fail"
            self.witness = witness

    def to_json(self) -> dict:
        out = {"law_id": self.law_id, "checked": self.checked, "status": self.status,
               "exhaustive": self.exhaustive}
        if self.group is not None:
            out["group"] = self.group
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def all_pass(reports: Iterable[LawReport]) -> bool:
    return all(r.passed for r in reports)


def limit_to_universe(reports: list[LawReport], dc: DoubleCategory) -> list[LawReport]:
    """Clear the exhaustive flags when ``dc`` only lists a sample of its cells."""
    if not dc.universe_complete():
        for r in reports:
            r.exhaustive = False
    return reports


def failures(reports: Iterable[LawReport]) -> list[LawReport]:
    return [r for r in reports if not r.passed]


class LawRun:
    """Accumulates equation checks for one law id."""

    def __init__(self, law_id: str, describe: Callable[[Any], Any] = str, group: str | None = None):
        self.report = LawReport(law_id, group=group)
        self.describe = describe

    def check(self, ok: bool, **cells):
        self.report.checked += 1
        if not ok:
            self.report.fail({k: self.describe(v) for k, v in cells.items()})
        return ok

    def equal(self, lhs, rhs, eq=None, **cells) -> bool:
        same = (eq or (lambda a, b: a == b))(lhs, rhs)
        return self.check(same, lhs=lhs, rhs=rhs, **cells)

    def _error(self, exc: Exception, cells: dict):
        self.report.checked += 1
        self.report.fail({"error": str(exc), **{k: self.describe(v) for k, v in cells.items()}})

    def guarded(self, thunk: Callable[[], Any], **cells):
        """Evaluate thunk; a cell that cannot be built becomes a failed check."""
        try:
            return thunk()
        except DicatError as exc:
            self._error(exc, cells)
            return None

    @contextmanager
    def cell(self, **cells):
        """Like ``guarded`` for a whole block of checks about one cell."""
        try:
            yield
        except DicatError as exc:
            self._error(exc, cells)

    def incomplete(self):
        self.report.exhaustive = False
        return self


def group_by(items: Iterable, key: Callable) -> dict:
    out: dict = {}
    for x in items:
        out.setdefault(key(x), []).append(x)
    return out


def bounded(items: Sequence, limit: int, rng: random.Random) -> tuple[list, bool]:
    """All items if there are at most ``limit``, else a seeded sample."""
    items = list(items)
    if len(items) <= limit:
        return items, True
    idx = sorted(rng.sample(range(len(items)), limit))
    return [items[i] for i in idx], False


def chains(groups_out: dict, groups_in: dict, middle: Sequence, limit: int,
           rng: random.Random, key_in: Callable, key_out: Callable) -> tuple[list, bool]:
    """Composable triples (x, y, z) with y from ``middle``.

    ``groups_in[k]`` lists cells ending at k, ``groups_out[k]`` lists cells
    starting at k; ``key_in(y)``/``key_out(y)`` give the start and end of y.
    """
    weights = [len(groups_in.get(key_in(y), ())) * len(groups_out.get(key_out(y), ())) for y in middle]
    total = sum(weights)
    if total <= limit:
        out = [(x, y, z) for y in middle for x in groups_in.get(key_in(y), ())
               for z in groups_out.get(key_out(y), ())]
        return out, True
    picks = rng.choices(range(len(middle)), weights=weights, k=limit)
    out = []
    for i in sorted(picks):
        y = middle[i]
        out.append((rng.choice(groups_in[key_in(y)]), y, rng.choice(groups_out[key_out(y)])))
    return out, False


def pairs(lefts: Sequence, groups_right: dict, key: Callable, limit: int,
          rng: random.Random) -> tuple[list, bool]:
    """Pairs (x, y) with y in ``groups_right[key(x)]``."""
    weights = [len(groups_right.get(key(x), ())) for x in lefts]
    total = sum(weights)
    if total <= limit:
        return [(x, y) for x in lefts for y in groups_right.get(key(x), ())], True
    picks = rng.choices(range(len(lefts)), weights=weights, k=limit)
    return [(lefts[i], rng.choice(groups_right[key(lefts[i])])) for i in sorted(picks)], False


# ---------------------------------------------------------------------------
# axiom checker


def check_axioms(dc: DoubleCategory, budget: Budget | None = None) -> list[LawReport]:
    budget = budget or Budget()
    d = dc.describe
    eq = dc.eq
    reports = []

    def run(law_id):
        r = LawRun(law_id, d)
        reports.append(r.report)
        return r

    objects = dc.objects()
    arrows = dc.arrows()
    pros = dc.proarrows()
    sqs = dc.square_sample(budget.squares)
    every_square = dc.square_sample_complete(budget.squares)

    # arrows
    a_out = group_by(arrows, dc.arrow_src)
    a_in = group_by(arrows, dc.arrow_tgt)
    triples, full = chains(a_out, a_in, arrows, budget.per_law, budget.rng("arrow-assoc"),
                           dc.arrow_src, dc.arrow_tgt)
    r = run("arrow-assoc")
    r.report.exhaustive = full
    for f, g, h in triples:
        r.equal(dc.comp(dc.comp(f, g), h), dc.comp(f, dc.comp(g, h)), eq, f=f, g=g, h=h)
    r = run("arrow-unit")
    for f in arrows:
        r.equal(dc.comp(dc.id_arrow(dc.arrow_src(f)), f), f, eq, f=f)
        r.equal(dc.comp(f, dc.id_arrow(dc.arrow_tgt(f))), f, eq, f=f)

    # proarrows
    p_out = group_by(pros, dc.pro_src)
    p_in = group_by(pros, dc.pro_tgt)
    triples, full = chains(p_out, p_in, pros, budget.per_law, budget.rng("proarrow-assoc"),
                           dc.pro_src, dc.pro_tgt)
    r = run("proarrow-assoc")
    r.report.exhaustive = full
    for m, n, p in triples:
        r.equal(dc.procomp(dc.procomp(m, n), p), dc.procomp(m, dc.procomp(n, p)), eq, m=m, n=n, p=p)
    r = run("proarrow-unit")
    for m in pros:
        r.equal(dc.procomp(dc.unit(dc.pro_src(m)), m), m, eq, m=m)
        r.equal(dc.procomp(m, dc.unit(dc.pro_tgt(m))), m, eq, m=m)

    # squares
    bnd = {id(s): dc.boundary(s) for s in sqs}
    B = lambda s: bnd[id(s)] if id(s) in bnd else dc.boundary(s)
    by_left = group_by(sqs, lambda s: B(s).left)
    by_right = group_by(sqs, lambda s: B(s).right)
    by_top = group_by(sqs, lambda s: B(s).top)
    by_bottom = group_by(sqs, lambda s: B(s).bottom)

    triples, full = chains(by_left, by_right, sqs, budget.per_law, budget.rng("h-assoc"),
                           lambda s: B(s).left, lambda s: B(s).right)
    r = run("square-assoc-arrow-dimension")
    r.report.exhaustive = full and every_square
    for s, t, u in triples:
        r.equal(dc.hcomp(dc.hcomp(s, t), u), dc.hcomp(s, dc.hcomp(t, u)), eq, s=s, t=t, u=u)
    triples, full = chains(by_top, by_bottom, sqs, budget.per_law, budget.rng("v-assoc"),
                           lambda s: B(s).top, lambda s: B(s).bottom)
    r = run("square-assoc-proarrow-dimension")
    r.report.exhaustive = full and every_square
    for s, t, u in triples:
        r.equal(dc.vcomp(dc.vcomp(s, t), u), dc.vcomp(s, dc.vcomp(t, u)), eq, s=s, t=t, u=u)

    r = run("square-unit-arrow-dimension")
    r.report.exhaustive = every_square
    for s in sqs:
        b = B(s)
        r.equal(dc.hcomp(dc.id_square_pro(b.left), s), s, eq, s=s)
        r.equal(dc.hcomp(s, dc.id_square_pro(b.right)), s, eq, s=s)
    r = run("square-unit-proarrow-dimension")
    r.report.exhaustive = every_square
    for s in sqs:
        b = B(s)
        r.equal(dc.vcomp(dc.id_square_arrow(b.top), s), s, eq, s=s)
        r.equal(dc.vcomp(s, dc.id_square_arrow(b.bottom)), s, eq, s=s)

    # interchange over 2x2 blocks
    r = run("interchange")
    hpairs, full = pairs(sqs, by_left, lambda s: B(s).right, budget.per_law, budget.rng("interchange"))
    r.report.exhaustive = full and every_square
    seen = 0
    for s, t in hpairs:
        for u in by_top.get(B(s).bottom, ()):
            for v in by_top.get(B(t).bottom, ()):
                if B(u).right != B(v).left:
                    continue
                if seen >= budget.per_law:
                    r.report.exhaustive = False
                    break
                seen += 1
                rows = dc.vcomp(dc.hcomp(s, t), dc.hcomp(u, v))
                cols = dc.hcomp(dc.vcomp(s, u), dc.vcomp(t, v))
                r.equal(rows, cols, eq, top_left=s, top_right=t, bottom_left=u, bottom_right=v)

    # identity squares
    r = run("identity-square-coherence")
    apairs, full = pairs(arrows, a_out, dc.arrow_tgt, budget.per_law, budget.rng("id-arrow"))
    ppairs, full2 = pairs(pros, p_out, dc.pro_tgt, budget.per_law, budget.rng("id-pro"))
    r.report.exhaustive = full and full2
    for f, g in apairs:
        r.equal(dc.id_square_arrow(dc.comp(f, g)),
                dc.hcomp(dc.id_square_arrow(f), dc.id_square_arrow(g)), eq, f=f, g=g)
    for m, n in ppairs:
        r.equal(dc.id_square_pro(dc.procomp(m, n)),
                dc.vcomp(dc.id_square_pro(m), dc.id_square_pro(n)), eq, m=m, n=n)
    for a in objects:
        r.equal(dc.id_square_arrow(dc.id_arrow(a)), dc.id_square_pro(dc.unit(a)), eq, object=a)

    # boundaries of composites
    r = run("boundary-coherence")
    for f, g in apairs:
        h = dc.comp(f, g)
        r.check(dc.arrow_src(h) == dc.arrow_src(f) and dc.arrow_tgt(h) == dc.arrow_tgt(g), f=f, g=g)
    for m, n in ppairs:
        p = dc.procomp(m, n)
        r.check(dc.pro_src(p) == dc.pro_src(m) and dc.pro_tgt(p) == dc.pro_tgt(n), m=m, n=n)
    for a in objects:
        r.check(dc.pro_src(dc.unit(a)) == a == dc.pro_tgt(dc.unit(a)), object=a)
        r.check(dc.arrow_src(dc.id_arrow(a)) == a == dc.arrow_tgt(dc.id_arrow(a)), object=a)
    for s in sqs:
        b = B(s)
        r.check(dc.pro_src(b.left) == dc.arrow_src(b.top)
                and dc.arrow_tgt(b.top) == dc.pro_src(b.right)
                and dc.pro_tgt(b.left) == dc.arrow_src(b.bottom)
                and dc.arrow_tgt(b.bottom) == dc.pro_tgt(b.right), s=s)
    hp, full_h = pairs(sqs, by_left, lambda s: B(s).right, budget.per_law, budget.rng("bh"))
    for s, t in hp:
        b = dc.boundary(dc.hcomp(s, t))
        want = SquareBoundary(B(s).left, B(t).right, dc.comp(B(s).top, B(t).top),
                              dc.comp(B(s).bottom, B(t).bottom))
        r.check(b == want, s=s, t=t)
    vp, full_v = pairs(sqs, by_top, lambda s: B(s).bottom, budget.per_law, budget.rng("bv"))
    for s, t in vp:
        b = dc.boundary(dc.vcomp(s, t))
        want = SquareBoundary(dc.procomp(B(s).left, B(t).left), dc.procomp(B(s).right, B(t).right),
                              B(s).top, B(t).bottom)
        r.check(b == want, s=s, t=t)
    r.report.exhaustive = full and full2 and full_h and full_v and every_square
    return limit_to_universe(reports, dc)


# ---------------------------------------------------------------------------
# co-reflection


class Co(DoubleCategory):
    """Proarrow boundaries transposed, proarrow-dimension composition reversed.

    A square keeps its left and right proarrows; its top and bottom arrows swap.
    """

    def __init__(self, base: DoubleCategory):
        self.base = base
        self.name = f"co({base.name})"

    def objects(self):
        return self.base.objects()

    def arrows(self):
        return self.base.arrows()

    def proarrows(self):
        return self.base.proarrows()

    def square_sample(self, limit=200):
        return self.base.square_sample(limit)

    def square_sample_complete(self, limit=200):
        return self.base.square_sample_complete(limit)

    def universe_complete(self):
        return self.base.universe_complete()

    def squares(self, left, right, top, bottom, limit=None):
        return self.base.squares(left, right, bottom, top, limit)

    def arrow_src(self, f):
        return self.base.arrow_src(f)

    def arrow_tgt(self, f):
        return self.base.arrow_tgt(f)

    def pro_src(self, m):
        return self.base.pro_tgt(m)

    def pro_tgt(self, m):
        return self.base.pro_src(m)

    def boundary(self, sq):
        b = self.base.boundary(sq)
        return SquareBoundary(b.left, b.right, b.bottom, b.top)

    def id_arrow(self, obj):
        return self.base.id_arrow(obj)

    def unit(self, obj):
        return self.base.unit(obj)

    def id_square_pro(self, m):
        return self.base.id_square_pro(m)

    def id_square_arrow(self, f):
        return self.base.id_square_arrow(f)

    def comp(self, f, g):
        return self.base.comp(f, g)

    def procomp(self, m, n):
        return self.base.procomp(n, m)

    def hcomp(self, s, t):
        return self.base.hcomp(s, t)

    def vcomp(self, s, t):
        return self.base.vcomp(t, s)

    def invert(self, disk):
        return self.base.invert(disk)

    def eq(self, x, y):
        return self.base.eq(x, y)

    def describe(self, cell):
        return self.base.describe(cell)

    def __eq__(self, other):
        return isinstance(other, Co) and other.base == self.base

    def __hash__(self):
        return hash(("co", self.base))


def co(dc: DoubleCategory) -> DoubleCategory:
    if isinstance(dc, Co):
        return dc.base
    return Co(dc)


# ---------------------------------------------------------------------------
# products


class Product(DoubleCategory):
    """Cells are pairs; everything is computed factor-wise."""

    def __init__(self, first: DoubleCategory, second: DoubleCategory):
        self.factors = (first, second)
        self.name = f"{first.name}x{second.name}"

    def _both(self, method, *cells):
        return tuple(getattr(dc, method)(*(c[i] for c in cells)) for i, dc in enumerate(self.factors))

    # universes: full grids when small, otherwise grids of seeded factor samples
    universe_limit = 24

    def _grid(self, method):
        parts = []
        for i, dc in enumerate(self.factors):
            items = getattr(dc, method)()
            picked, _ = bounded(items, self.universe_limit, random.Random(f"{method}:{i}:{dc.name}"))
            parts.append(picked)
        return list(itertools.product(*parts))

    def universe_complete(self):
        return all(dc.universe_complete() and all(len(getattr(dc, m)()) <= self.universe_limit
                                                  for m in ("objects", "arrows", "proarrows"))
                   for dc in self.factors)

    def objects(self):
        return self._grid("objects")

    def arrows(self):
        return self._grid("arrows")

    def proarrows(self):
        return self._grid("proarrows")

    def square_sample(self, limit=200):
        # a full grid of two small factor samples keeps composable chains intact
        k = max(1, int(limit ** 0.5))
        a, b = (dc.square_sample(k) for dc in self.factors)
        return list(itertools.product(a, b))

    def square_sample_complete(self, limit=200):
        k = max(1, int(limit ** 0.5))
        return all(dc.square_sample_complete(k) for dc in self.factors)

    def squares(self, left, right, top, bottom, limit=None):
        a = self.factors[0].squares(left[0], right[0], top[0], bottom[0], limit)
        b = self.factors[1].squares(left[1], right[1], top[1], bottom[1], limit)
        out = list(itertools.product(a, b))
        return out if limit is None else out[:limit]

    def arrow_src(self, f):
        return self._both("arrow_src", f)

    def arrow_tgt(self, f):
        return self._both("arrow_tgt", f)

    def pro_src(self, m):
        return self._both("pro_src", m)

    def pro_tgt(self, m):
        return self._both("pro_tgt", m)

    def boundary(self, sq):
        a, b = (dc.boundary(s) for dc, s in zip(self.factors, sq))
        return SquareBoundary((a.left, b.left), (a.right, b.right), (a.top, b.top), (a.bottom, b.bottom))

    def id_arrow(self, obj):
        return self._both("id_arrow", obj)

    def unit(self, obj):
        return self._both("unit", obj)

    def id_square_pro(self, m):
        return self._both("id_square_pro", m)

    def id_square_arrow(self, f):
        return self._both("id_square_arrow", f)

    def comp(self, f, g):
        return self._both("comp", f, g)

    def procomp(self, m, n):
        return self._both("procomp", m, n)

    def hcomp(self, s, t):
        return self._both("hcomp", s, t)

    def vcomp(self, s, t):
        return self._both("vcomp", s, t)

    def invert(self, disk):
        parts = self._both("invert", disk)
        return None if any(p is None for p in parts) else parts

    def eq(self, x, y):
        return all(dc.eq(a, b) for dc, a, b in zip(self.factors, x, y))

    def describe(self, cell):
        if isinstance(cell, tuple) and len(cell) == 2:
            return [dc.describe(c) for dc, c in zip(self.factors, cell)]
        return str(cell)

    def __eq__(self, other):
        return isinstance(other, Product) and other.factors == self.factors

    def __hash__(self):
        return hash(("product", self.factors))


def product(first: DoubleCategory, second: DoubleCategory) -> Product:
    return Product(first, second)


def dual_pairing(dc: DoubleCategory) -> Product:
    """co(C) x C, the domain of difunctors."""
    return Product(co(dc), dc)


# ---------------------------------------------------------------------------
# empty and singleton


class Singleton(DoubleCategory):
    """One object, one arrow, one proarrow, one square."""

    name = "1"
    OBJ, ARROW, PRO, SQUARE = "*", "id*", "unit*", "sq*"

    def objects(self):
        return [self.OBJ]

    def arrows(self):
        return [self.ARROW]

    def proarrows(self):
        return [self.PRO]

    def square_sample(self, limit=200):
        return [self.SQUARE]

    def square_sample_complete(self, limit=200):
        return limit >= 1

    def squares(self, left, right, top, bottom, limit=None):
        return [self.SQUARE]

    def arrow_src(self, f):
        return self.OBJ

    arrow_tgt = pro_src = pro_tgt = arrow_src

    def boundary(self, sq):
        return SquareBoundary(self.PRO, self.PRO, self.ARROW, self.ARROW)

    def id_arrow(self, obj):
        return self.ARROW

    def unit(self, obj):
        return self.PRO

    def id_square_pro(self, m):
        return self.SQUARE

    id_square_arrow = id_square_pro

    def comp(self, f, g):
        return self.ARROW

    def procomp(self, m, n):
        return self.PRO

    def hcomp(self, s, t):
        return self.SQUARE

    vcomp = hcomp

    def invert(self, disk):
        return self.SQUARE

    def __eq__(self, other):
        return isinstance(other, Singleton)

    def __hash__(self):
        return hash("singleton")


class Empty(DoubleCategory):
    """No cells at all."""

    name = "0"

    def objects(self):
        return []

    arrows = proarrows = objects

    def square_sample(self, limit=200):
        return []

    def square_sample_complete(self, limit=200):
        return True

    def squares(self, left, right, top, bottom, limit=None):
        return []

    def _none(self, *args):
        raise CompositionError("the empty double category has no cells")

    arrow_src = arrow_tgt = pro_src = pro_tgt = boundary = _none
    id_arrow = unit = id_square_pro = id_square_arrow = invert = _none
    comp = procomp = hcomp = vcomp = _none

    def __eq__(self, other):
        return isinstance(other, Empty)

    def __hash__(self):
        return hash("empty")


def singleton() -> Singleton:
    return Singleton()


def empty() -> Empty:
    return Empty()
