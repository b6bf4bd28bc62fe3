"""Difunctors, dinatural transformations, dimodifications and diagonalization.

A difunctor is a functor out of ``dual_pairing(C) = co(C) x C``.  Cells of
the pairing are pairs; ``left_fixed`` and ``right_fixed`` build the mixed
cells <X, m> = (unit X, m) and <m, X> = (m, unit X) used throughout.

For m: A -|-> B the proarrow disk of a dinatural alpha: F -> G is

    F<B,m> (.) alpha B (.) G<m,B>  =>  F<m,A> (.) alpha A (.) G<A,m>

(reversed for the lax orientation).
"""
from __future__ import annotations

from .core import (Budget, CompositionError, DicatError, DoubleCategory, LawReport, LawRun, Product,
                   limit_to_universe,
                   SquareBoundary, co, group_by, pairs)
from .functor import DFunctor, dummy_difunctor
from .transform import (ArrowNatural, NaturalTransformation, _component, compose_natural, dummy_arrow_natural,
                        identity_natural)

ORIENTATIONS = ("pseudo", "oplax", "lax", "strict")


class ArrowDimensionDinaturalError(DicatError):
    """Raised for arrow-dimension dinaturals, which only make sense over op(C) x C."""


def arrow_dimension_dinatural(*_args, **_kwargs):
    raise ArrowDimensionDinaturalError(
        "arrow-dimension dinatural transformations are not supported: they require the arrow-dimension "
        "reflection in the dual pairing, not co(C) x C")


def is_difunctor(F: DFunctor) -> bool:
    P = F.source
    return isinstance(P, Product) and P.factors[0] == co(P.factors[1])


def base_of(F: DFunctor) -> DoubleCategory:
    if not is_difunctor(F):
        raise CompositionError(f"{F.name} is not a difunctor (its source is not a dual pairing)")
    return F.source.factors[1]


# mixed cells of the dual pairing
def left_fixed(C: DoubleCategory, X, m):
    """<X, m> = (unit X, m)."""
    return (C.unit(X), m)


def right_fixed(C: DoubleCategory, m, X):
    """<m, X> = (m, unit X), with m read as a co-proarrow."""
    return (m, C.unit(X))


def disk_boundary(F: DFunctor, G: DFunctor, alpha_obj, m, C: DoubleCategory):
    """(input, output) proarrows of the oplax/pseudo disk at m."""
    D = F.target
    A, B = C.pro_src(m), C.pro_tgt(m)
    src = D.procomp_all(F.proarrow(left_fixed(C, B, m)), alpha_obj(B), G.proarrow(right_fixed(C, m, B)))
    tgt = D.procomp_all(F.proarrow(right_fixed(C, m, A)), alpha_obj(A), G.proarrow(left_fixed(C, A, m)))
    return src, tgt


class DinaturalTransformation:
    """alpha: F -> G between parallel difunctors, indexed on the diagonal."""

    def __init__(self, source: DFunctor, target: DFunctor, obj, arrow, proarrow, orientation: str = "pseudo",
                 name: str = "alpha"):
        if orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")
        if source.source != target.source or source.target != target.target:
            raise CompositionError("dinatural transformations need parallel difunctors")
        self.base = base_of(source)
        self.source, self.target = source, target
        self.orientation = orientation
        self.name = name
        self.obj = _component(obj, "object", name)
        self.arrow = _component(arrow, "arrow", name)
        self.proarrow = _component(proarrow, "proarrow", name)

    @property
    def codomain(self) -> DoubleCategory:
        return self.source.target

    def __repr__(self):
        return f"<Dinatural {self.name}: {self.source.name} -> {self.target.name} ({self.orientation})>"


# ---------------------------------------------------------------------------
# the composites appearing in the laws


def compatibility_composite(alpha: DinaturalTransformation, m, n):
    """The disk alpha(m (.) n) must equal: alpha n, interchangers, alpha m, compositors."""
    C, D = alpha.base, alpha.codomain
    F, G = alpha.source, alpha.target
    A, B, Cc = C.pro_src(m), C.pro_tgt(m), C.pro_tgt(n)
    ident = D.id_square_pro
    Lf, Rf = (lambda X, p: left_fixed(C, X, p)), (lambda p, X: right_fixed(C, p, X))
    start = D.vcomp_all(F.compositor_inverse(Lf(Cc, m), Lf(Cc, n)), ident(alpha.obj(Cc)),
                        G.compositor_inverse(Rf(n, Cc), Rf(m, Cc)))
    first = D.vcomp_all(ident(F.proarrow(Lf(Cc, m))), alpha.proarrow(n), ident(G.proarrow(Rf(m, Cc))))
    swap_f = D.hcomp(F.compositor(Lf(Cc, m), Rf(n, B)), F.compositor_inverse(Rf(n, A), Lf(B, m)))
    swap_g = D.hcomp(G.compositor(Lf(B, n), Rf(m, Cc)), G.compositor_inverse(Rf(m, B), Lf(A, n)))
    middle = D.vcomp_all(swap_f, ident(alpha.obj(B)), swap_g)
    second = D.vcomp_all(ident(F.proarrow(Rf(n, A))), alpha.proarrow(m), ident(G.proarrow(Lf(A, n))))
    end = D.vcomp_all(F.compositor(Rf(n, A), Rf(m, A)), ident(alpha.obj(A)), G.compositor(Lf(A, m), Lf(A, n)))
    if alpha.orientation == "lax":
        inv = D.require_inverse
        return D.hcomp_all(inv(end), second, inv(middle), first, inv(start))
    return D.hcomp_all(start, first, middle, second, end)


def dinatural_square_sides(alpha: DinaturalTransformation, phi):
    """Both three-storey composites of the square-naturality law at phi: m => n along f, g."""
    C, D = alpha.base, alpha.codomain
    F, G = alpha.source, alpha.target
    b = C.boundary(phi)
    f, g = b.top, b.bottom
    ida = C.id_square_arrow
    through_g = D.vcomp_all(F.square((ida(g), phi)), alpha.arrow(g), G.square((phi, ida(g))))
    through_f = D.vcomp_all(F.square((phi, ida(f))), alpha.arrow(f), G.square((ida(f), phi)))
    if alpha.orientation == "lax":
        return (D.hcomp(through_f, alpha.proarrow(b.right)), D.hcomp(alpha.proarrow(b.left), through_g))
    return (D.hcomp(through_g, alpha.proarrow(b.right)), D.hcomp(alpha.proarrow(b.left), through_f))


def check_dinatural(alpha: DinaturalTransformation, budget: Budget | None = None) -> list[LawReport]:
    """Reports grouped as boundaries, arrow-composition, proarrow-composition and square-naturality."""
    budget = budget or Budget()
    C, D = alpha.base, alpha.codomain
    F, G = alpha.source, alpha.target
    reports: list[LawReport] = []

    def run(law_id, group):
        r = LawRun(f"dinatural:{law_id}", D.describe, group=group)
        reports.append(r.report)
        return r

    objects, arrows, pros = C.objects(), C.arrows(), C.proarrows()
    sqs = C.square_sample(budget.squares)

    r = run("boundaries", "boundaries")
    for a in objects:
        with r.cell(object=a):
            m = alpha.obj(a)
            r.check(D.pro_src(m) == F.obj((a, a)) and D.pro_tgt(m) == G.obj((a, a)), object=a)
    for f in arrows:
        with r.cell(arrow=f):
            want = SquareBoundary(alpha.obj(C.arrow_src(f)), alpha.obj(C.arrow_tgt(f)), F.arrow((f, f)),
                                  G.arrow((f, f)))
            r.check(D.boundary(alpha.arrow(f)) == want, arrow=f)
    for m in pros:
        with r.cell(proarrow=m):
            src, tgt = disk_boundary(F, G, alpha.obj, m, C)
            if alpha.orientation == "lax":
                src, tgt = tgt, src
            a, b = C.pro_src(m), C.pro_tgt(m)
            want = SquareBoundary(src, tgt, D.id_arrow(F.obj((b, a))), D.id_arrow(G.obj((a, b))))
            r.check(D.boundary(alpha.proarrow(m)) == want, proarrow=m)

    if alpha.orientation in ("pseudo", "strict"):
        r = run("invertible-disks", "boundaries")
        for m in pros:
            with r.cell(proarrow=m):
                r.check(D.invert(alpha.proarrow(m)) is not None, proarrow=m)
    if alpha.orientation == "strict":
        r = run("identity-disks", "boundaries")
        for m in pros:
            with r.cell(proarrow=m):
                disk = alpha.proarrow(m)
                r.equal(disk, D.id_square_pro(D.boundary(disk).left), D.eq, proarrow=m)

    apairs, full_a = pairs(arrows, group_by(arrows, C.arrow_src), C.arrow_tgt, budget.per_law,
                           budget.rng("dinat-arrows"))
    r = run("arrow-identity", "arrow-composition")
    for a in objects:
        with r.cell(object=a):
            r.equal(alpha.arrow(C.id_arrow(a)), D.id_square_pro(alpha.obj(a)), D.eq, object=a)
    r = run("arrow-composition", "arrow-composition")
    r.report.exhaustive = full_a
    for f, g in apairs:
        with r.cell(f=f, g=g):
            r.equal(alpha.arrow(C.comp(f, g)), D.hcomp(alpha.arrow(f), alpha.arrow(g)), D.eq, f=f, g=g)

    ppairs, full_p = pairs(pros, group_by(pros, C.pro_src), C.pro_tgt, budget.per_law,
                           budget.rng("dinat-proarrows"))
    r = run("proarrow-unit", "proarrow-composition")
    for a in objects:
        with r.cell(object=a):
            r.equal(alpha.proarrow(C.unit(a)), D.id_square_pro(alpha.obj(a)), D.eq, object=a)
    r = run("proarrow-composition", "proarrow-composition")
    r.report.exhaustive = full_p
    for m, n in ppairs:
        with r.cell(m=m, n=n):
            r.equal(alpha.proarrow(C.procomp(m, n)), compatibility_composite(alpha, m, n), D.eq, m=m, n=n)

    r = run("square-naturality", "square-naturality")
    r.report.exhaustive = C.square_sample_complete(budget.squares)
    for s in sqs:
        sides = r.guarded(lambda: dinatural_square_sides(alpha, s), square=s)
        if sides is not None:
            r.equal(*sides, D.eq, square=s)
    return limit_to_universe(reports, C)


# ---------------------------------------------------------------------------
# constructions


def diagonalize_natural(alpha: NaturalTransformation, form: int = 1) -> DinaturalTransformation:
    """di(alpha): components alpha<A,A>, alpha<f,f> and a three-bead disk.

    Form 1 runs alpha<B,m>, the G interchanger and the inverse of alpha<m,A>;
    form 2 runs the inverse of alpha<m,B>, the F interchanger and alpha<A,m>.
    """
    F, G = alpha.source, alpha.target
    if not (is_difunctor(F) and is_difunctor(G)):
        raise CompositionError("diagonalization needs a natural transformation between difunctors")
    C, D = base_of(F), alpha.codomain
    ident = D.id_square_pro

    def beads(m):
        A, B = C.pro_src(m), C.pro_tgt(m)
        Bm, mB = left_fixed(C, B, m), right_fixed(C, m, B)
        mA, Am = right_fixed(C, m, A), left_fixed(C, A, m)
        if form == 1:
            swap = D.hcomp(G.compositor(Bm, mB), G.compositor_inverse(mA, Am))
            return [(f"{alpha.name}<B,m>", D.vcomp(alpha.proarrow(Bm), ident(G.proarrow(mB)))),
                    (f"{G.name}-swap", D.vcomp(ident(alpha.obj((B, A))), swap)),
                    (f"{alpha.name}<m,A>^-1",
                     D.vcomp(D.require_inverse(alpha.proarrow(mA)), ident(G.proarrow(Am))))]
        swap = D.hcomp(F.compositor(Bm, mB), F.compositor_inverse(mA, Am))
        return [(f"{alpha.name}<m,B>^-1", D.vcomp(ident(F.proarrow(Bm)), D.require_inverse(alpha.proarrow(mB)))),
                (f"{F.name}-swap", D.vcomp(swap, ident(alpha.obj((A, B))))),
                (f"{alpha.name}<A,m>", D.vcomp(ident(F.proarrow(mA)), alpha.proarrow(Am)))]

    def disk(m):
        return D.hcomp_all(*(cell for _, cell in beads(m)))

    out = DinaturalTransformation(F, G, lambda a: alpha.obj((a, a)), lambda f: alpha.arrow((f, f)), disk,
                                  name=f"di({alpha.name})")
    out.diagonal_of = alpha
    out.beads = beads
    return out


def diagonal_identity(F: DFunctor) -> DinaturalTransformation:
    return diagonalize_natural(identity_natural(F))


def dummy_dinatural(alpha: NaturalTransformation) -> DinaturalTransformation:
    """Components alpha A, alpha f, alpha m on the dummy difunctors over co(C) x C."""
    C = alpha.domain
    F = dummy_difunctor(alpha.source, co(C))
    G = dummy_difunctor(alpha.target, co(C))
    out = DinaturalTransformation(F, G, alpha.obj, alpha.arrow, alpha.proarrow, name=f"dummy({alpha.name})")
    out.dummy_of = alpha
    return out


def undummy(beta: DinaturalTransformation) -> NaturalTransformation:
    F, G = beta.source.dummy_of, beta.target.dummy_of
    if F is None or G is None:
        raise CompositionError(f"{beta.name} is not between dummy difunctors")
    return NaturalTransformation(F, G, beta.obj, beta.arrow, beta.proarrow, name=f"undummy({beta.name})")


def compose_dinat_nat(alpha: DinaturalTransformation, beta: NaturalTransformation) -> DinaturalTransformation:
    """alpha: F -> G dinatural then beta: G => H natural."""
    if alpha.target is not beta.source and alpha.target != beta.source:
        raise CompositionError(f"{alpha.name} and {beta.name} are not consecutive")
    C, D = alpha.base, alpha.codomain
    F, H = alpha.source, beta.target
    ident = D.id_square_pro

    def beads(m):
        A, B = C.pro_src(m), C.pro_tgt(m)
        mB, Am = right_fixed(C, m, B), left_fixed(C, A, m)
        return [
            (f"{beta.name}<m,B>^-1", D.vcomp_all(ident(F.proarrow(left_fixed(C, B, m))), ident(alpha.obj(B)),
                                                 D.require_inverse(beta.proarrow(mB)))),
            (f"{alpha.name} m", D.vcomp(alpha.proarrow(m), ident(beta.obj((A, B))))),
            (f"{beta.name}<A,m>", D.vcomp_all(ident(F.proarrow(right_fixed(C, m, A))), ident(alpha.obj(A)),
                                              beta.proarrow(Am)))]

    out = DinaturalTransformation(
        F, H, lambda a: D.procomp(alpha.obj(a), beta.obj((a, a))),
        lambda f: D.vcomp(alpha.arrow(f), beta.arrow((f, f))),
        lambda m: D.hcomp_all(*(cell for _, cell in beads(m))), name=f"{alpha.name};{beta.name}")
    out.beads = beads
    return out


def compose_nat_dinat(beta: NaturalTransformation, alpha: DinaturalTransformation) -> DinaturalTransformation:
    """beta: F => G natural then alpha: G -> H dinatural."""
    if beta.target is not alpha.source and beta.target != alpha.source:
        raise CompositionError(f"{beta.name} and {alpha.name} are not consecutive")
    C, D = alpha.base, alpha.codomain
    F, H = beta.source, alpha.target
    ident = D.id_square_pro

    def beads(m):
        A, B = C.pro_src(m), C.pro_tgt(m)
        Bm, mA = left_fixed(C, B, m), right_fixed(C, m, A)
        return [
            (f"{beta.name}<B,m>",
             D.vcomp(beta.proarrow(Bm), ident(D.procomp(alpha.obj(B), H.proarrow(right_fixed(C, m, B)))))),
            (f"{alpha.name} m", D.vcomp(ident(beta.obj((B, A))), alpha.proarrow(m))),
            (f"{beta.name}<m,A>^-1", D.vcomp(D.require_inverse(beta.proarrow(mA)),
                                             ident(D.procomp(alpha.obj(A), H.proarrow(left_fixed(C, A, m))))))]

    out = DinaturalTransformation(
        F, H, lambda a: D.procomp(beta.obj((a, a)), alpha.obj(a)),
        lambda f: D.vcomp(beta.arrow((f, f)), alpha.arrow(f)),
        lambda m: D.hcomp_all(*(cell for _, cell in beads(m))), name=f"{beta.name};{alpha.name}")
    out.beads = beads
    return out


def same_components(first: DinaturalTransformation, second: DinaturalTransformation, budget: Budget,
                    law_id: str) -> LawReport:
    """Componentwise equality on all objects, arrows and proarrows of the base."""
    C, D = first.base, first.codomain
    r = LawRun(law_id, D.describe, group="dinatural-natural")
    for a in C.objects():
        r.equal(first.obj(a), second.obj(a), D.eq, object=a)
    for f in C.arrows():
        r.equal(first.arrow(f), second.arrow(f), D.eq, arrow=f)
    for m in C.proarrows()[:budget.per_law]:
        got = r.guarded(lambda: (first.proarrow(m), second.proarrow(m)), proarrow=m)
        if got is not None:
            r.equal(*got, D.eq, proarrow=m)
    r.report.exhaustive = len(C.proarrows()) <= budget.per_law
    return limit_to_universe([r.report], C)[0]


def check_dinat_nat_laws(alpha: DinaturalTransformation, before: list[NaturalTransformation],
                         after: list[NaturalTransformation], budget: Budget | None = None) -> list[LawReport]:
    """The unit, iterated-composition, associativity and diagonalization laws.

    ``before`` holds consecutive naturals ending at alpha's source, ``after``
    consecutive naturals starting at alpha's target (each list may be empty
    but two of each exercise every law).
    """
    budget = budget or Budget()
    out = [
        same_components(compose_dinat_nat(alpha, identity_natural(alpha.target)), alpha, budget,
                        "dinat-nat:right-unit"),
        same_components(compose_nat_dinat(identity_natural(alpha.source), alpha), alpha, budget,
                        "dinat-nat:left-unit"),
    ]
    if len(after) >= 2:
        b, c = after[0], after[1]
        out.append(same_components(compose_dinat_nat(compose_dinat_nat(alpha, b), c),
                                   compose_dinat_nat(alpha, compose_natural(b, c)), budget,
                                   "dinat-nat:iterated-after"))
    if len(before) >= 2:
        b, c = before[-2], before[-1]
        out.append(same_components(compose_nat_dinat(b, compose_nat_dinat(c, alpha)),
                                   compose_nat_dinat(compose_natural(b, c), alpha), budget,
                                   "dinat-nat:iterated-before"))
    if before and after:
        b, c = before[-1], after[0]
        out.append(same_components(compose_dinat_nat(compose_nat_dinat(b, alpha), c),
                                   compose_nat_dinat(b, compose_dinat_nat(alpha, c)), budget,
                                   "dinat-nat:associativity"))
    for beta in before + after:
        di = diagonalize_natural(beta)
        out.append(same_components(compose_dinat_nat(diagonal_identity(beta.source), beta), di, budget,
                                   "dinat-nat:diagonal-identity-before"))
        out.append(same_components(compose_nat_dinat(beta, diagonal_identity(beta.target)), di, budget,
                                   "dinat-nat:diagonal-identity-after"))
    return out


# ---------------------------------------------------------------------------
# dimodifications


class Dimodification:
    """mu with proarrow-dimension dinatural boundaries gamma: F -> I and
    delta: G -> J and arrow-dimension natural boundaries alpha: F -> G and
    beta: I -> J; mu.obj(A): gamma A => delta A along alpha<A,A>, beta<A,A>."""

    def __init__(self, left: DinaturalTransformation, right: DinaturalTransformation, top: ArrowNatural,
                 bottom: ArrowNatural, obj, name: str = "mu"):
        self.left, self.right, self.top, self.bottom = left, right, top, bottom
        self.base = left.base
        self.name = name
        self.obj = _component(obj, "object", name)

    @property
    def codomain(self):
        return self.left.codomain


def dimodification_arrow_sides(mu: Dimodification, f):
    C, D = mu.base, mu.codomain
    a, b = C.arrow_src(f), C.arrow_tgt(f)
    lhs = D.vcomp(mu.top.arrow((f, f)), D.hcomp(mu.obj(a), mu.right.arrow(f)))
    rhs = D.vcomp(D.hcomp(mu.left.arrow(f), mu.obj(b)), mu.bottom.arrow((f, f)))
    return lhs, rhs


def dimodification_proarrow_sides(mu: Dimodification, m):
    C, D = mu.base, mu.codomain
    A, B = C.pro_src(m), C.pro_tgt(m)
    lhs = D.hcomp(mu.left.proarrow(m), D.vcomp_all(mu.top.proarrow(right_fixed(C, m, A)), mu.obj(A),
                                                     mu.bottom.proarrow(left_fixed(C, A, m))))
    rhs = D.hcomp(D.vcomp_all(mu.top.proarrow(left_fixed(C, B, m)), mu.obj(B),
                              mu.bottom.proarrow(right_fixed(C, m, B))), mu.right.proarrow(m))
    return lhs, rhs


def check_dimodification(mu: Dimodification, budget: Budget | None = None) -> list[LawReport]:
    budget = budget or Budget()
    C, D = mu.base, mu.codomain
    reports: list[LawReport] = []

    def run(law_id):
        r = LawRun(f"dimodification:{law_id}", D.describe, group=law_id)
        reports.append(r.report)
        return r

    r = run("boundaries")
    for a in C.objects():
        with r.cell(object=a):
            want = SquareBoundary(mu.left.obj(a), mu.right.obj(a), mu.top.obj((a, a)), mu.bottom.obj((a, a)))
            r.check(D.boundary(mu.obj(a)) == want, object=a)
    r = run("arrow-naturality")
    r.report.exhaustive = len(C.arrows()) <= budget.per_law
    for f in C.arrows()[:budget.per_law]:
        sides = r.guarded(lambda: dimodification_arrow_sides(mu, f), arrow=f)
        if sides is not None:
            r.equal(*sides, D.eq, arrow=f)
    r = run("proarrow-naturality")
    r.report.exhaustive = len(C.proarrows()) <= budget.per_law
    for m in C.proarrows()[:budget.per_law]:
        sides = r.guarded(lambda: dimodification_proarrow_sides(mu, m), proarrow=m)
        if sides is not None:
            r.equal(*sides, D.eq, proarrow=m)
    return limit_to_universe(reports, C)


def diagonalize_modification(mu) -> Dimodification:
    """di(mu) between the diagonalized boundary naturals, components mu<A,A>."""
    return Dimodification(diagonalize_natural(mu.left), diagonalize_natural(mu.right), mu.top, mu.bottom,
                          lambda a: mu.obj((a, a)), name=f"di({mu.name})")


def dummy_dimodification(mu) -> Dimodification:
    """The dimodification of dummy difunctors determined by a modification."""
    C = mu.domain
    left, right = dummy_dinatural(mu.left), dummy_dinatural(mu.right)
    top = dummy_arrow_natural(mu.top, co(C), left.source, right.source)
    bottom = dummy_arrow_natural(mu.bottom, co(C), left.target, right.target)
    return Dimodification(left, right, top, bottom, mu.obj, name=f"dummy({mu.name})")


def naive_disk_chain(alpha: DinaturalTransformation, beta: DinaturalTransformation, m):
    """Line up the output of alpha's disk at m with the input of beta's disk.

    A dinatural-dinatural composite would need this proarrow composite: the
    output of alpha m ends at G<A,B> while the input of beta m starts at
    G<B,A>, so unless those coincide it cannot be formed.

    >>> from dicat.core import dual_pairing
    >>> from dicat.functor import projection
    >>> from dicat.rel import rel_dc
    >>> R = rel_dc(2)
    >>> pi = projection(dual_pairing(R), 1)
    >>> strip = diagonal_identity(pi)
    >>> m = next(r for r in R.proarrows() if len(r.src) == 1 and len(r.tgt) == 2)
    >>> try:
    ...     naive_disk_chain(strip, strip, m)
    ... except CompositionError:
    ...     print("no proarrow G<A,B> -|-> G<B,A> to compose through")
    no proarrow G<A,B> -|-> G<B,A> to compose through
    """
    C, D = alpha.base, alpha.codomain
    _, alpha_out = disk_boundary(alpha.source, alpha.target, alpha.obj, m, C)
    beta_in, _ = disk_boundary(beta.source, beta.target, beta.obj, m, C)
    return D.procomp(alpha_out, beta_in)


__all__ = [
    "ORIENTATIONS", "ArrowDimensionDinaturalError", "arrow_dimension_dinatural", "is_difunctor", "base_of",
    "left_fixed", "right_fixed", "disk_boundary", "DinaturalTransformation", "compatibility_composite",
    "dinatural_square_sides", "check_dinatural", "diagonalize_natural", "diagonal_identity", "dummy_dinatural",
    "undummy", "compose_dinat_nat", "compose_nat_dinat", "same_components", "check_dinat_nat_laws",
    "Dimodification", "dimodification_arrow_sides", "dimodification_proarrow_sides", "check_dimodification",
    "diagonalize_modification", "dummy_dimodification", "naive_disk_chain",
]
