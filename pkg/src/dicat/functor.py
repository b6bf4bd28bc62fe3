"""Functors of double categories: strict in the arrow dimension and normal
pseudo in the proarrow dimension (units preserved strictly, binary
composites up to an explicit compositor disk)."""
from __future__ import annotations

from typing import Callable

from .core import (Budget, CompositionError, DoubleCategory, LawReport, LawRun, Product, limit_to_universe,
                   SquareBoundary, chains, group_by, pairs)


class _Memo:
    def __init__(self, fn: Callable):
        self.fn = fn
        self.cache: dict = {}

    def __call__(self, x):
        try:
            return self.cache[x]
        except KeyError:
            out = self.cache[x] = self.fn(x)
            return out
        except TypeError:  # unhashable cell
            return self.fn(x)


class DFunctor:
    """Object, arrow, proarrow and square maps plus an optional compositor.

    ``compositor(p, q)`` is the disk F(p) (.) F(q) => F(p (.) q); when omitted
    the functor is strict and the compositor is an identity square.
    """

    def __init__(self, source: DoubleCategory, target: DoubleCategory, obj, arrow, proarrow,
                 square, compositor=None, name: str = "F"):
        self.source = source
        self.target = target
        self.obj = _Memo(obj)
        self.arrow = _Memo(arrow)
        self.proarrow = _Memo(proarrow)
        self.square = _Memo(square)
        self._compositor = compositor
        self.name = name
        self.dummy_of: DFunctor | None = None

    @property
    def strict(self) -> bool:
        return self._compositor is None

    def compositor(self, p, q):
        if self._compositor is None:
            return self.target.id_square_pro(self.target.procomp(self.proarrow(p), self.proarrow(q)))
        return self._compositor(p, q)

    def compositor_inverse(self, p, q):
        if self._compositor is None:
            return self.compositor(p, q)
        return self.target.require_inverse(self._compositor(p, q))

    def __call__(self, cell, sort: str):
        return getattr(self, sort)(cell)

    def __repr__(self):
        return f"<DFunctor {self.name}: {self.source.name} -> {self.target.name}>"


def identity_functor(dc: DoubleCategory) -> DFunctor:
    ident = lambda x: x
    return DFunctor(dc, dc, ident, ident, ident, ident, name=f"id_{dc.name}")


def compose_functors(F: DFunctor, G: DFunctor) -> DFunctor:
    """F ; G."""
    if F.target is not G.source and F.target != G.source:
        raise CompositionError(f"cannot compose {F.name} with {G.name}")

    def compositor(p, q):
        first = G.compositor(F.proarrow(p), F.proarrow(q))
        if F.strict:
            return first
        return G.target.hcomp(first, G.square(F.compositor(p, q)))
    return DFunctor(F.source, G.target,
                    lambda a: G.obj(F.obj(a)),
                    lambda f: G.arrow(F.arrow(f)),
                    lambda m: G.proarrow(F.proarrow(m)),
                    lambda s: G.square(F.square(s)),
                    None if F.strict and G.strict else compositor, name=f"{F.name};{G.name}")


def projection(prod: Product, index: int) -> DFunctor:
    pick = lambda cell: cell[index]
    f = DFunctor(prod, prod.factors[index], pick, pick, pick, pick, name=f"pi{index}")
    f.projection_index = index
    return f


def product_functor(F: DFunctor, G: DFunctor, source: Product | None = None,
                    target: Product | None = None) -> DFunctor:
    """F x G acting factor-wise."""
    source = source or Product(F.source, G.source)
    target = target or Product(F.target, G.target)

    def compositor(p, q):
        return (F.compositor(p[0], q[0]), G.compositor(p[1], q[1]))
    pairwise = lambda method: (lambda c: (getattr(F, method)(c[0]), getattr(G, method)(c[1])))
    return DFunctor(source, target, pairwise("obj"), pairwise("arrow"), pairwise("proarrow"),
                    pairwise("square"), None if F.strict and G.strict else compositor, name=f"({F.name}x{G.name})")


def dummy_difunctor(F: DFunctor, over: DoubleCategory) -> DFunctor:
    """pi1 ; F on over x source(F): ignores the first coordinate."""
    prod = Product(over, F.source)
    D = compose_functors(projection(prod, 1), F)
    D.name = f"dummy({F.name})"
    D.dummy_of = F
    return D


def constant_functor(source: DoubleCategory, target: DoubleCategory, obj, name="const") -> DFunctor:
    a = target.id_arrow(obj)
    m = target.unit(obj)
    s = target.id_square_pro(m)
    return DFunctor(source, target, lambda _: obj, lambda _: a, lambda _: m, lambda _: s, name=name)


# ---------------------------------------------------------------------------


def check_functor(F: DFunctor, budget: Budget | None = None) -> list[LawReport]:
    budget = budget or Budget()
    C, D = F.source, F.target
    reports: list[LawReport] = []

    def run(law_id):
        r = LawRun(f"functor:{law_id}", lambda c: _describe_any(C, D, c))
        reports.append(r.report)
        return r

    objects, arrows, pros = C.objects(), C.arrows(), C.proarrows()
    sqs = C.square_sample(budget.squares)
    every_square = C.square_sample_complete(budget.squares)

    r = run("boundaries")
    r.report.exhaustive = every_square
    for f in arrows:
        with r.cell(arrow=f):
            r.check(D.arrow_src(F.arrow(f)) == F.obj(C.arrow_src(f))
                    and D.arrow_tgt(F.arrow(f)) == F.obj(C.arrow_tgt(f)), arrow=f)
    for m in pros:
        with r.cell(proarrow=m):
            r.check(D.pro_src(F.proarrow(m)) == F.obj(C.pro_src(m))
                    and D.pro_tgt(F.proarrow(m)) == F.obj(C.pro_tgt(m)), proarrow=m)
    for s in sqs:
        with r.cell(square=s):
            b = C.boundary(s)
            want = SquareBoundary(F.proarrow(b.left), F.proarrow(b.right), F.arrow(b.top), F.arrow(b.bottom))
            r.check(D.boundary(F.square(s)) == want, square=s)

    r = run("identities")
    for a in objects:
        with r.cell(object=a):
            r.equal(F.arrow(C.id_arrow(a)), D.id_arrow(F.obj(a)), D.eq, object=a)
            r.equal(F.proarrow(C.unit(a)), D.unit(F.obj(a)), D.eq, object=a)
    for f in arrows:
        with r.cell(arrow=f):
            r.equal(F.square(C.id_square_arrow(f)), D.id_square_arrow(F.arrow(f)), D.eq, arrow=f)
    for m in pros:
        with r.cell(proarrow=m):
            r.equal(F.square(C.id_square_pro(m)), D.id_square_pro(F.proarrow(m)), D.eq, proarrow=m)

    a_out = group_by(arrows, C.arrow_src)
    p_out = group_by(pros, C.pro_src)
    apairs, full_a = pairs(arrows, a_out, C.arrow_tgt, budget.per_law, budget.rng("F-arrow"))
    ppairs, full_p = pairs(pros, p_out, C.pro_tgt, budget.per_law, budget.rng("F-pro"))

    r = run("arrow-composition")
    r.report.exhaustive = full_a
    for f, g in apairs:
        with r.cell(f=f, g=g):
            r.equal(F.arrow(C.comp(f, g)), D.comp(F.arrow(f), F.arrow(g)), D.eq, f=f, g=g)

    r = run("compositor")
    r.report.exhaustive = full_p
    for m, n in ppairs:
        with r.cell(m=m, n=n):
            k = F.compositor(m, n)
            want = SquareBoundary(D.procomp(F.proarrow(m), F.proarrow(n)), F.proarrow(C.procomp(m, n)),
                                  D.id_arrow(F.obj(C.pro_src(m))), D.id_arrow(F.obj(C.pro_tgt(n))))
            r.check(D.boundary(k) == want and D.invert(k) is not None, m=m, n=n)
    for m in pros:
        with r.cell(proarrow=m):
            u0, u1 = C.unit(C.pro_src(m)), C.unit(C.pro_tgt(m))
            r.equal(F.compositor(u0, m), D.id_square_pro(F.proarrow(m)), D.eq, unit_left=m)
            r.equal(F.compositor(m, u1), D.id_square_pro(F.proarrow(m)), D.eq, unit_right=m)

    if not F.strict:
        r = run("compositor-associativity")
        triples, full = chains(p_out, group_by(pros, C.pro_tgt), pros, budget.per_law,
                               budget.rng("F-assoc"), C.pro_src, C.pro_tgt)
        r.report.exhaustive = full
        for m, n, p in triples:
            with r.cell(m=m, n=n, p=p):
                Fm, Fp = F.proarrow(m), F.proarrow(p)
                lhs = D.hcomp(D.vcomp(F.compositor(m, n), D.id_square_pro(Fp)),
                              F.compositor(C.procomp(m, n), p))
                rhs = D.hcomp(D.vcomp(D.id_square_pro(Fm), F.compositor(n, p)),
                              F.compositor(m, C.procomp(n, p)))
                r.equal(lhs, rhs, D.eq, m=m, n=n, p=p)

    by_left = group_by(sqs, lambda s: C.boundary(s).left)
    by_top = group_by(sqs, lambda s: C.boundary(s).top)
    r = run("square-arrow-composition")
    hp, full = pairs(sqs, by_left, lambda s: C.boundary(s).right, budget.per_law, budget.rng("F-h"))
    r.report.exhaustive = full and every_square
    for s, t in hp:
        with r.cell(s=s, t=t):
            r.equal(F.square(C.hcomp(s, t)), D.hcomp(F.square(s), F.square(t)), D.eq, s=s, t=t)
    r = run("square-proarrow-composition")
    vp, full = pairs(sqs, by_top, lambda s: C.boundary(s).bottom, budget.per_law, budget.rng("F-v"))
    r.report.exhaustive = full and every_square
    for s, t in vp:
        with r.cell(s=s, t=t):
            bs, bt = C.boundary(s), C.boundary(t)
            lhs = D.hcomp(F.compositor(bs.left, bt.left), F.square(C.vcomp(s, t)))
            rhs = D.hcomp(D.vcomp(F.square(s), F.square(t)), F.compositor(bs.right, bt.right))
            r.equal(lhs, rhs, D.eq, s=s, t=t)
    return limit_to_universe(reports, C)


def _describe_any(C, D, cell):
    try:
        return D.describe(cell)
    except Exception:  # noqa: BLE001 - description is best effort
        return str(cell)
