"""Natural transformations (proarrow dimension, pseudo), arrow-dimension
natural transformations, modifications, and their law checkers."""
from __future__ import annotations

from typing import Callable

from .core import (Budget, CompositionError, DoubleCategory, LawReport, LawRun, MissingComponentError,
                   limit_to_universe,
                   Product, SquareBoundary, group_by, pairs)
from .functor import DFunctor, check_functor, dummy_difunctor


def _component(spec, kind: str, owner: str) -> Callable:
    """Wrap a dict or callable as a memoised component map."""
    cache: dict = {}

    def get(cell):
        try:
            return cache[cell]
        except KeyError:
            pass
        except TypeError:
            return spec(cell) if callable(spec) else spec[cell]
        if callable(spec):
            value = spec(cell)
        else:
            try:
                value = spec[cell]
            except KeyError:
                raise MissingComponentError(f"{owner} has no {kind} component at {cell}") from None
        cache[cell] = value
        return value
    return get


class NaturalTransformation:
    """alpha: F => G in the proarrow dimension.

    alpha.obj(A): F A -|-> G A; alpha.arrow(f): square with left alpha A,
    right alpha B, top F f, bottom G f; alpha.proarrow(m): invertible disk
    F m (.) alpha B => alpha A (.) G m for m: A -|-> B.
    """

    def __init__(self, source: DFunctor, target: DFunctor, obj, arrow, proarrow, name: str = "alpha"):
        if source.source != target.source or source.target != target.target:
            raise CompositionError("natural transformations need parallel functors")
        self.source = source
        self.target = target
        self.name = name
        self.obj = _component(obj, "object", name)
        self.arrow = _component(arrow, "arrow", name)
        self.proarrow = _component(proarrow, "proarrow", name)

    @property
    def domain(self) -> DoubleCategory:
        return self.source.source

    @property
    def codomain(self) -> DoubleCategory:
        return self.source.target

    def __repr__(self):
        return f"<Natural {self.name}: {self.source.name} => {self.target.name}>"


class ArrowNatural:
    """alpha: F -> G in the arrow dimension: alpha.obj(A) is an arrow and
    alpha.proarrow(m) a square F m => G m along alpha A, alpha B.  Arrow
    components are strict: F f ; alpha B = alpha A ; G f."""

    def __init__(self, source: DFunctor, target: DFunctor, obj, proarrow, name: str = "alpha"):
        self.source = source
        self.target = target
        self.name = name
        self.obj = _component(obj, "object", name)
        self.proarrow = _component(proarrow, "proarrow", name)

    def arrow(self, f):
        D = self.source.target
        return D.id_square_arrow(D.comp(self.source.arrow(f), self.obj(self.source.source.arrow_tgt(f))))

    def __repr__(self):
        return f"<ArrowNatural {self.name}: {self.source.name} -> {self.target.name}>"


class Modification:
    """mu with proarrow boundaries gamma: F => I, delta: G => J and arrow
    boundaries alpha: F -> G, beta: I -> J; mu.obj(A): gamma A => delta A
    along alpha A (top) and beta A (bottom)."""

    def __init__(self, left: NaturalTransformation, right: NaturalTransformation, top: ArrowNatural,
                 bottom: ArrowNatural, obj, name: str = "mu"):
        self.left, self.right, self.top, self.bottom = left, right, top, bottom
        self.name = name
        self.obj = _component(obj, "object", name)

    @property
    def domain(self):
        return self.left.domain

    @property
    def codomain(self):
        return self.left.codomain


# ---------------------------------------------------------------------------
# constructors


def identity_natural(F: DFunctor) -> NaturalTransformation:
    D = F.target
    return NaturalTransformation(
        F, F, lambda a: D.unit(F.obj(a)), lambda f: D.id_square_arrow(F.arrow(f)),
        lambda m: D.id_square_pro(F.proarrow(m)), name=f"id({F.name})")


def compose_natural(alpha: NaturalTransformation, beta: NaturalTransformation) -> NaturalTransformation:
    if alpha.target is not beta.source:
        raise CompositionError(f"{alpha.name} and {beta.name} are not consecutive")
    C, D = alpha.domain, alpha.codomain

    def disk(m):
        a, b = C.pro_src(m), C.pro_tgt(m)
        first = D.vcomp(alpha.proarrow(m), D.id_square_pro(beta.obj(b)))
        second = D.vcomp(D.id_square_pro(alpha.obj(a)), beta.proarrow(m))
        return D.hcomp(first, second)
    return NaturalTransformation(
        alpha.source, beta.target,
        lambda a: D.procomp(alpha.obj(a), beta.obj(a)),
        lambda f: D.vcomp(alpha.arrow(f), beta.arrow(f)),
        disk, name=f"{alpha.name};{beta.name}")


def identity_arrow_natural(F: DFunctor) -> ArrowNatural:
    D = F.target
    return ArrowNatural(F, F, lambda a: D.id_arrow(F.obj(a)), lambda m: D.id_square_pro(F.proarrow(m)),
                        name=f"id({F.name})")


def identity_modification(gamma: NaturalTransformation) -> Modification:
    D = gamma.codomain
    return Modification(gamma, gamma, identity_arrow_natural(gamma.source),
                        identity_arrow_natural(gamma.target),
                        lambda a: D.id_square_pro(gamma.obj(a)), name=f"id({gamma.name})")


def dummy_natural(alpha: NaturalTransformation, over: DoubleCategory) -> NaturalTransformation:
    """Components ignore the first coordinate: <X,A> -> alpha A, <i,f> -> alpha f, <p,m> -> alpha m."""
    F = dummy_difunctor(alpha.source, over)
    G = dummy_difunctor(alpha.target, over)
    out = NaturalTransformation(F, G, lambda xa: alpha.obj(xa[1]), lambda gf: alpha.arrow(gf[1]),
                                lambda pm: alpha.proarrow(pm[1]), name=f"dummy({alpha.name})")
    out.dummy_of = alpha
    return out


def dummy_arrow_natural(alpha: ArrowNatural, over: DoubleCategory, source=None, target=None) -> ArrowNatural:
    F = source or dummy_difunctor(alpha.source, over)
    G = target or dummy_difunctor(alpha.target, over)
    return ArrowNatural(F, G, lambda xa: alpha.obj(xa[1]), lambda pm: alpha.proarrow(pm[1]),
                        name=f"dummy({alpha.name})")


def dummy_modification(mu: Modification, over: DoubleCategory) -> Modification:
    left = dummy_natural(mu.left, over)
    right = dummy_natural(mu.right, over)
    top = dummy_arrow_natural(mu.top, over, left.source, right.source)
    bottom = dummy_arrow_natural(mu.bottom, over, left.target, right.target)
    return Modification(left, right, top, bottom, lambda xa: mu.obj(xa[1]), name=f"dummy({mu.name})")


# ---------------------------------------------------------------------------
# checkers


def _cells(C: DoubleCategory, budget: Budget):
    objects, arrows, pros = C.objects(), C.arrows(), C.proarrows()
    sqs = C.square_sample(budget.squares)
    apairs, full_a = pairs(arrows, group_by(arrows, C.arrow_src), C.arrow_tgt, budget.per_law,
                           budget.rng("arrow-pairs"))
    ppairs, full_p = pairs(pros, group_by(pros, C.pro_src), C.pro_tgt, budget.per_law,
                           budget.rng("proarrow-pairs"))
    return objects, arrows, pros, sqs, (apairs, full_a), (ppairs, full_p)


def _run(reports, law_id, D, group=None):
    r = LawRun(law_id, D.describe, group=group)
    reports.append(r.report)
    return r


def check_natural(alpha: NaturalTransformation, budget: Budget | None = None) -> list[LawReport]:
    budget = budget or Budget()
    C, D = alpha.domain, alpha.codomain
    F, G = alpha.source, alpha.target
    objects, arrows, pros, sqs, (apairs, full_a), (ppairs, full_p) = _cells(C, budget)
    reports: list[LawReport] = []

    r = _run(reports, "natural:boundaries", D)
    for a in objects:
        with r.cell(object=a):
            m = alpha.obj(a)
            r.check(D.pro_src(m) == F.obj(a) and D.pro_tgt(m) == G.obj(a), object=a)
    for f in arrows:
        with r.cell(arrow=f):
            want = SquareBoundary(alpha.obj(C.arrow_src(f)), alpha.obj(C.arrow_tgt(f)), F.arrow(f), G.arrow(f))
            r.check(D.boundary(alpha.arrow(f)) == want, arrow=f)
    for m in pros:
        with r.cell(proarrow=m):
            a, b = C.pro_src(m), C.pro_tgt(m)
            want = SquareBoundary(D.procomp(F.proarrow(m), alpha.obj(b)), D.procomp(alpha.obj(a), G.proarrow(m)),
                                  D.id_arrow(F.obj(a)), D.id_arrow(G.obj(b)))
            r.check(D.boundary(alpha.proarrow(m)) == want, proarrow=m)

    r = _run(reports, "natural:invertible-disks", D)
    for m in pros:
        with r.cell(proarrow=m):
            r.check(D.invert(alpha.proarrow(m)) is not None, proarrow=m)

    r = _run(reports, "natural:arrow-identity", D)
    for a in objects:
        with r.cell(object=a):
            r.equal(alpha.arrow(C.id_arrow(a)), D.id_square_pro(alpha.obj(a)), D.eq, object=a)
    r = _run(reports, "natural:arrow-composition", D)
    r.report.exhaustive = full_a
    for f, g in apairs:
        with r.cell(f=f, g=g):
            r.equal(alpha.arrow(C.comp(f, g)), D.hcomp(alpha.arrow(f), alpha.arrow(g)), D.eq, f=f, g=g)

    r = _run(reports, "natural:proarrow-unit", D)
    for a in objects:
        with r.cell(object=a):
            r.equal(alpha.proarrow(C.unit(a)), D.id_square_pro(alpha.obj(a)), D.eq, object=a)
    r = _run(reports, "natural:proarrow-composition", D)
    r.report.exhaustive = full_p
    for m, n in ppairs:
        with r.cell(m=m, n=n):
            r.equal(alpha.proarrow(C.procomp(m, n)), natural_composite_disk(alpha, m, n), D.eq, m=m, n=n)

    r = _run(reports, "natural:square-naturality", D)
    r.report.exhaustive = C.square_sample_complete(budget.squares)
    for s in sqs:
        sides = r.guarded(lambda: natural_square_sides(alpha, s), square=s)
        if sides is not None:
            r.equal(*sides, D.eq, square=s)
    return limit_to_universe(reports, C)


def check_strict_natural(alpha: NaturalTransformation, budget: Budget | None = None) -> LawReport:
    """The strict variant: every proarrow component is an identity disk."""
    budget = budget or Budget()
    C, D = alpha.domain, alpha.codomain
    r = LawRun("natural:identity-disks", D.describe)
    for m in C.proarrows()[:budget.per_law]:
        with r.cell(proarrow=m):
            disk = alpha.proarrow(m)
            r.equal(disk, D.id_square_pro(D.boundary(disk).left), D.eq, proarrow=m)
    r.report.exhaustive = len(C.proarrows()) <= budget.per_law
    return limit_to_universe([r.report], C)[0]


def natural_composite_disk(alpha: NaturalTransformation, m, n):
    """The disk that alpha(m (.) n) must equal: compositors at both ends."""
    C, D = alpha.domain, alpha.codomain
    F, G = alpha.source, alpha.target
    a, c = C.pro_src(m), C.pro_tgt(n)
    start = D.vcomp(F.compositor_inverse(m, n), D.id_square_pro(alpha.obj(c)))
    first = D.vcomp(D.id_square_pro(F.proarrow(m)), alpha.proarrow(n))
    second = D.vcomp(alpha.proarrow(m), D.id_square_pro(G.proarrow(n)))
    end = D.vcomp(D.id_square_pro(alpha.obj(a)), G.compositor(m, n))
    return D.hcomp_all(start, first, second, end)


def natural_square_sides(alpha: NaturalTransformation, s):
    C, D = alpha.domain, alpha.codomain
    F, G = alpha.source, alpha.target
    b = C.boundary(s)
    lhs = D.hcomp(D.vcomp(F.square(s), alpha.arrow(b.bottom)), alpha.proarrow(b.right))
    rhs = D.hcomp(alpha.proarrow(b.left), D.vcomp(alpha.arrow(b.top), G.square(s)))
    return lhs, rhs


def check_arrow_natural(alpha: ArrowNatural, budget: Budget | None = None) -> list[LawReport]:
    budget = budget or Budget()
    F, G = alpha.source, alpha.target
    C, D = F.source, F.target
    objects, arrows, pros, sqs, (apairs, _), (ppairs, full_p) = _cells(C, budget)
    reports: list[LawReport] = []
    r = _run(reports, "arrow-natural:boundaries", D)
    for a in objects:
        f = alpha.obj(a)
        r.check(D.arrow_src(f) == F.obj(a) and D.arrow_tgt(f) == G.obj(a), object=a)
    for m in pros:
        want = SquareBoundary(F.proarrow(m), G.proarrow(m), alpha.obj(C.pro_src(m)), alpha.obj(C.pro_tgt(m)))
        r.check(D.boundary(alpha.proarrow(m)) == want, proarrow=m)
    r = _run(reports, "arrow-natural:arrow-naturality", D)
    for f in arrows:
        r.equal(D.comp(F.arrow(f), alpha.obj(C.arrow_tgt(f))), D.comp(alpha.obj(C.arrow_src(f)), G.arrow(f)),
                D.eq, arrow=f)
    r = _run(reports, "arrow-natural:proarrow-unit", D)
    for a in objects:
        r.equal(alpha.proarrow(C.unit(a)), D.id_square_arrow(alpha.obj(a)), D.eq, object=a)
    r = _run(reports, "arrow-natural:proarrow-composition", D)
    r.report.exhaustive = full_p
    for m, n in ppairs:
        lhs = D.hcomp(F.compositor(m, n), alpha.proarrow(C.procomp(m, n)))
        rhs = D.hcomp(D.vcomp(alpha.proarrow(m), alpha.proarrow(n)), G.compositor(m, n))
        r.equal(lhs, rhs, D.eq, m=m, n=n)
    r = _run(reports, "arrow-natural:square-naturality", D)
    r.report.exhaustive = C.square_sample_complete(budget.squares)
    for s in sqs:
        b = C.boundary(s)
        r.equal(D.hcomp(F.square(s), alpha.proarrow(b.right)), D.hcomp(alpha.proarrow(b.left), G.square(s)),
                D.eq, square=s)
    return limit_to_universe(reports, C)


def check_modification(mu: Modification, budget: Budget | None = None) -> list[LawReport]:
    budget = budget or Budget()
    gamma, delta, alpha, beta = mu.left, mu.right, mu.top, mu.bottom
    C, D = mu.domain, mu.codomain
    objects, arrows, pros, *_ = _cells(C, budget)
    reports: list[LawReport] = []
    r = _run(reports, "modification:boundaries", D)
    for a in objects:
        with r.cell(object=a):
            want = SquareBoundary(gamma.obj(a), delta.obj(a), alpha.obj(a), beta.obj(a))
            r.check(D.boundary(mu.obj(a)) == want, object=a)
    r = _run(reports, "modification:arrow-naturality", D)
    for f in arrows:
        sides = r.guarded(lambda: modification_arrow_sides(mu, f), arrow=f)
        if sides is not None:
            r.equal(*sides, D.eq, arrow=f)
    r = _run(reports, "modification:proarrow-naturality", D)
    for m in pros:
        sides = r.guarded(lambda: modification_proarrow_sides(mu, m), proarrow=m)
        if sides is not None:
            r.equal(*sides, D.eq, proarrow=m)
    return limit_to_universe(reports, C)


def modification_arrow_sides(mu: Modification, f):
    C, D = mu.domain, mu.codomain
    a, b = C.arrow_src(f), C.arrow_tgt(f)
    lhs = D.vcomp(mu.top.arrow(f), D.hcomp(mu.obj(a), mu.right.arrow(f)))
    rhs = D.vcomp(D.hcomp(mu.left.arrow(f), mu.obj(b)), mu.bottom.arrow(f))
    return lhs, rhs


def modification_proarrow_sides(mu: Modification, m):
    C, D = mu.domain, mu.codomain
    a, b = C.pro_src(m), C.pro_tgt(m)
    lhs = D.hcomp(mu.left.proarrow(m), D.vcomp(mu.obj(a), mu.bottom.proarrow(m)))
    rhs = D.hcomp(D.vcomp(mu.top.proarrow(m), mu.obj(b)), mu.right.proarrow(m))
    return lhs, rhs


# ---------------------------------------------------------------------------
# the Yang-Baxter equation for naturals between functors on a product


def yang_baxter_sides(alpha: NaturalTransformation, p, m):
    """Both sides for p: X -|-> Y in the first factor and m: A -|-> B in the second."""
    P = alpha.domain
    if not isinstance(P, Product):
        raise CompositionError("Yang-Baxter needs a natural transformation on a product")
    Bc, Cc = P.factors
    D = alpha.codomain
    F, G = alpha.source, alpha.target
    X, Y = Bc.pro_src(p), Bc.pro_tgt(p)
    A, B = Cc.pro_src(m), Cc.pro_tgt(m)
    Xm, pB = (Bc.unit(X), m), (p, Cc.unit(B))
    pA, Ym = (p, Cc.unit(A)), (Bc.unit(Y), m)
    ident = D.id_square_pro
    coh_G = D.hcomp(G.compositor(Xm, pB), G.compositor_inverse(pA, Ym))
    coh_F = D.hcomp(F.compositor(Xm, pB), F.compositor_inverse(pA, Ym))
    lhs = D.hcomp_all(
        D.vcomp(alpha.proarrow(Xm), ident(G.proarrow(pB))),
        D.vcomp(ident(alpha.obj((X, A))), coh_G),
        D.vcomp(D.require_inverse(alpha.proarrow(pA)), ident(G.proarrow(Ym))))
    rhs = D.hcomp_all(
        D.vcomp(ident(F.proarrow(Xm)), D.require_inverse(alpha.proarrow(pB))),
        D.vcomp(coh_F, ident(alpha.obj((Y, B)))),
        D.vcomp(ident(F.proarrow(pA)), alpha.proarrow(Ym)))
    return lhs, rhs


def yang_baxter_check(alpha: NaturalTransformation, p, m) -> LawReport:
    D = alpha.codomain
    r = LawRun("natural:yang-baxter", D.describe)
    try:
        lhs, rhs = yang_baxter_sides(alpha, p, m)
    except CompositionError as exc:
        raise CompositionError(f"Yang-Baxter sides could not be formed: {exc}") from exc
    if D.boundary(lhs) != D.boundary(rhs):
        raise CompositionError("Yang-Baxter sides have different boundaries")
    r.equal(lhs, rhs, D.eq, p=p, m=m)
    return r.report


__all__ = [
    "NaturalTransformation", "ArrowNatural", "Modification", "identity_natural", "compose_natural",
    "identity_arrow_natural", "identity_modification", "dummy_natural", "dummy_arrow_natural",
    "dummy_modification", "check_natural", "check_strict_natural", "check_arrow_natural", "check_modification", "check_functor",
    "yang_baxter_check", "yang_baxter_sides", "natural_composite_disk", "natural_square_sides",
]
