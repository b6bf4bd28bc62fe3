"""Folds, strips, connectors, zigzags and adjoint folds over a monoidal
double category with a dual ``co(C) -> C``.

Fold difunctors on the pairing ``co(C) x C``:

    I<A,B> = unit,   L<A,B> = A* x B,   R<A,B> = B x A*

A cap is a dinatural ``I -> L``, a cup a dinatural ``R -> I``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import Budget, DicatError, LawReport, LawRun, Product, dual_pairing, limit_to_universe
from .dinat import DinaturalTransformation, check_dinatural, diagonal_identity, disk_boundary
from .functor import DFunctor, check_functor, compose_functors, constant_functor, identity_functor, \
    product_functor, projection
from .transform import (Modification, NaturalTransformation, check_modification, check_natural,
                        identity_arrow_natural, identity_natural)


class ConnectorError(DicatError):
    """A connector word is ill-formed: unknown letter or wrong number of object arguments."""


class MonoidalDualStructure:
    """A strict monoidal instance together with its dual functor co(C) -> C."""

    def __init__(self, monoidal, dual: DFunctor, name: str = ""):
        self.monoidal = monoidal
        self.dc = monoidal.dc
        self.tensor = monoidal.tensor
        self.unit_object = monoidal.unit_object
        self.dual = dual
        self.name = name or self.dc.name

    def tensor_objects(self, *objs):
        return self.monoidal.tensor_objects(*objs)

    def tensor_proarrows(self, *ms):
        return self.monoidal.tensor_proarrows(*ms)

    def braiding(self, first, second):
        return self.monoidal.braiding(first, second)

    def check(self, budget: Budget | None = None) -> list[LawReport]:
        return check_functor(self.tensor, budget) + check_functor(self.dual, budget)


def rel_structure(max_size: int = 2, universe=None) -> MonoidalDualStructure:
    from .rel import rel_dc, rel_dual, rel_monoidal
    R = rel_dc(max_size, universe)
    return MonoidalDualStructure(rel_monoidal(R), rel_dual(R), name="Rel")


def fincat_structure(categories=None, **kwargs) -> MonoidalDualStructure:
    from .fincat.instance import FinCatDC
    from .fincat.monoidal import FinCatMonoidal, fincat_dual
    dc = FinCatDC(categories, **kwargs)
    return MonoidalDualStructure(FinCatMonoidal(dc), fincat_dual(dc), name="FinCat")


# ---------------------------------------------------------------------------
# fold difunctors


def swap_pairs(pairs: Product) -> DFunctor:
    flip = lambda c: (c[1], c[0])
    return DFunctor(pairs, Product(pairs.factors[1], pairs.factors[0]), flip, flip, flip, flip, name="swap")


def build_fold_difunctors(d: MonoidalDualStructure):
    """(I, L, R) on co(C) x C."""
    C = d.dc
    P = dual_pairing(C)
    I = constant_functor(P, C, d.unit_object, name="I")
    head = product_functor(d.dual, identity_functor(C), source=P, target=d.tensor.source)
    L = compose_functors(head, d.tensor)
    L.name = "L"
    R = compose_functors(compose_functors(head, swap_pairs(d.tensor.source)), d.tensor)
    R.name = "R"
    return I, L, R


@dataclass
class FoldPair:
    structure: MonoidalDualStructure
    cap: DinaturalTransformation
    cup: DinaturalTransformation
    I: DFunctor
    L: DFunctor
    R: DFunctor

    def check(self, budget: Budget | None = None) -> list[LawReport]:
        return check_dinatural(self.cap, budget) + check_dinatural(self.cup, budget)


def rel_folds(d: MonoidalDualStructure | None = None) -> FoldPair:
    """eta A = {(*, (a, a))}, eps A = {((a, a), *)}; every component is thin."""
    from .rel import Relation, UNIT_SET, identity_function
    d = d or rel_structure()
    C = d.dc
    I, L, R = build_fold_difunctors(d)
    ident = identity_function(UNIT_SET)

    def eta(A):
        return Relation(UNIT_SET, d.tensor_objects(A, A), frozenset(((), a + a) for a in A))

    def eps(A):
        return Relation(d.tensor_objects(A, A), UNIT_SET, frozenset((a + a, ()) for a in A))

    def disk(F, G, obj):
        def build(m):
            src, tgt = disk_boundary(F, G, obj, m, C)
            return C.square(src, tgt, identity_function(src.src), identity_function(src.tgt))
        return build

    cap = DinaturalTransformation(I, L, eta, lambda f: C.square(eta(f.src), eta(f.tgt), ident, L.arrow((f, f))),
                                  disk(I, L, eta), name="eta")
    cup = DinaturalTransformation(R, I, eps, lambda f: C.square(eps(f.src), eps(f.tgt), R.arrow((f, f)), ident),
                                  disk(R, I, eps), name="eps")
    return FoldPair(d, cap, cup, I, L, R)


def fincat_folds(d: MonoidalDualStructure | None = None) -> FoldPair:
    """eta A = Hom_A as 1 -|-> A^op x A, eps A its transpose A x A^op -|-> 1.

    Proarrow disks send a class to the class with the same element of
    eval(m), read off by splitting the coend tuple.
    """
    from .fincat.category import UNIT, identity_cat_functor
    from .fincat.instance import disk_by_values, make_square, split_tuple
    from .fincat.monoidal import tensor_split
    from .fincat.profunctor import CapAtom, ProarrowList, cup, transpose_list, transpose_tuple
    d = d or fincat_structure()
    C = d.dc
    I, L, R = build_fold_difunctors(d)
    unit_id = identity_cat_functor(UNIT)
    eta = lambda A: ProarrowList.of(CapAtom(A))
    eps = lambda A: ProarrowList.of(cup(A))
    apply = lambda F: (lambda a, c, rep: ((), (F.amap[rep[1][0]],)))

    def cap_disk(m):
        A, B = m.src, m.tgt
        nA, nB = len(A), len(B)
        ev = m.evaluation
        src, tgt = disk_boundary(I, L, eta, m, C)
        left_ops = [transpose_list(m), ProarrowList.unit(B)]
        right_ops = [ProarrowList.unit(A.op()), m]
        lower, upper = src.atoms[1:], tgt.atoms[1:]

        def value_left(_, c, t):
            mid, u, v = split_tuple(eta(B), ProarrowList(B.op().tensor(B), src.tgt, lower), (), c, t)
            x, k = tensor_split(left_ops, v)
            x = ev.classify(c[:nA], mid[:nB], transpose_tuple(x, len(m)))
            return ev.act(A.ident(c[:nA]), x, B.comp(u[1][0], k))

        def value_right(_, c, t):
            mid, u, v = split_tuple(eta(A), ProarrowList(A.op().tensor(A), tgt.tgt, upper), (), c, t)
            k, y = tensor_split(right_ops, v)
            return ev.act(A.comp(k, u[1][0]), y, B.ident(c[nA:]))
        return disk_by_values(src, tgt, value_left, value_right)

    def cup_disk(m):
        A, B = m.src, m.tgt
        nA = len(A)
        ev = m.evaluation
        src, tgt = disk_boundary(R, I, eps, m, C)
        left_ops = [m, ProarrowList.unit(B.op())]
        right_ops = [ProarrowList.unit(A), transpose_list(m)]
        upper_left = ProarrowList(src.src, B.tensor(B.op()), src.atoms[:-1])
        upper_right = ProarrowList(tgt.src, A.tensor(A.op()), tgt.atoms[:-1])

        def value_left(c, _, t):
            mid, u, v = split_tuple(upper_left, eps(B), c, (), t)
            y, k = tensor_split(left_ops, u)
            return ev.act(A.ident(c[:nA]), y, B.comp(v[1][0], k))

        def value_right(c, _, t):
            mid, u, v = split_tuple(upper_right, eps(A), c, (), t)
            k, z = tensor_split(right_ops, u)
            z = ev.classify(mid[nA:], c[nA:], transpose_tuple(z, len(m)))
            return ev.act(A.comp(k, v[1][0]), z, B.ident(c[nA:]))
        return disk_by_values(src, tgt, value_left, value_right)

    cap = DinaturalTransformation(
        I, L, eta, lambda F: make_square(eta(F.src), eta(F.tgt), unit_id, L.arrow((F, F)), apply(F)),
        cap_disk, name="eta")
    cup_ = DinaturalTransformation(
        R, I, eps, lambda F: make_square(eps(F.src), eps(F.tgt), R.arrow((F, F)), unit_id, apply(F)),
        cup_disk, name="eps")
    return FoldPair(d, cap, cup_, I, L, R)


def strips(d: MonoidalDualStructure):
    """iota = di(id pi1) with components unit A, and iota* = di(id(pi0 ; dual))."""
    P = dual_pairing(d.dc)
    iota = diagonal_identity(projection(P, 1))
    iota.name = "iota"
    back = compose_functors(projection(P, 0), d.dual)
    iota_star = diagonal_identity(back)
    iota_star.name = "iota*"
    return iota, iota_star


# ---------------------------------------------------------------------------
# connectors

ARITY = {"cap": 1, "cup": 1, "strip": 1, "costrip": 1, "braid": 2}
LETTER_ALIASES = {
    "η": "cap", "eta": "cap", "ε": "cup", "eps": "cup", "epsilon": "cup", "ι": "strip", "iota": "strip",
    "ι*": "costrip", "iota*": "costrip", "σ": "braid", "sigma": "braid",
}
GLYPHS = {"cap": "η", "cup": "ε", "strip": "ι", "costrip": "ι*", "braid": "σ"}


@dataclass(frozen=True)
class Position:
    """One tensor factor of a connector boundary: an object name, possibly dualized."""

    name: str
    dual: bool = False

    def __str__(self):
        return self.name + ("*" if self.dual else "")


@dataclass(frozen=True)
class Letter:
    kind: str
    args: tuple

    def __post_init__(self):
        if self.kind not in ARITY:
            raise ConnectorError(f"unknown connector letter {self.kind!r}")
        if len(self.args) != ARITY[self.kind]:
            raise ConnectorError(f"{self.kind} takes {ARITY[self.kind]} object argument(s), got {len(self.args)}")

    def boundary(self) -> tuple[tuple, tuple]:
        if self.kind == "braid":
            a, b = self.args
            return (Position(a), Position(b)), (Position(b), Position(a))
        (a,) = self.args
        plain, dual = Position(a), Position(a, True)
        return {
            "cap": ((), (dual, plain)),
            "cup": ((plain, dual), ()),
            "strip": ((plain,), (plain,)),
            "costrip": ((dual,), (dual,)),
        }[self.kind]


@dataclass(frozen=True)
class Connector:
    letters: tuple

    def __str__(self):
        word = "⊗".join(GLYPHS[x.kind] for x in self.letters)
        args = ",".join(a for x in self.letters for a in x.args)
        return f"({word})<{args}>"


def normalize_letter(kind: str) -> str:
    return LETTER_ALIASES.get(kind, kind)


def tensor_connectors(kinds, args) -> Connector:
    """Distribute the flat argument list over the letters by arity."""
    kinds = [normalize_letter(k) for k in kinds]
    for k in kinds:
        if k not in ARITY:
            raise ConnectorError(f"unknown connector letter {k!r}")
    need = sum(ARITY[k] for k in kinds)
    args = list(args)
    if need != len(args):
        raise ConnectorError(f"connector {'⊗'.join(kinds)} needs {need} object argument(s), got {len(args)}")
    letters, i = [], 0
    for k in kinds:
        letters.append(Letter(k, tuple(args[i:i + ARITY[k]])))
        i += ARITY[k]
    return Connector(tuple(letters))


def connector_boundary(word: Connector) -> tuple[tuple, tuple]:
    src, tgt = (), ()
    for letter in word.letters:
        s, t = letter.boundary()
        src, tgt = src + s, tgt + t
    return src, tgt


def format_boundary(positions) -> str:
    return "⊗".join(str(p) for p in positions) or "I"


def evaluate_connector(word: Connector, folds: FoldPair, env: dict):
    """The object-component proarrow of a connector, with names bound by ``env``."""
    d = folds.structure
    C = d.dc
    parts = []
    for letter in word.letters:
        objs = [env[a] for a in letter.args]
        if letter.kind == "cap":
            parts.append(folds.cap.obj(objs[0]))
        elif letter.kind == "cup":
            parts.append(folds.cup.obj(objs[0]))
        elif letter.kind == "strip":
            parts.append(C.unit(objs[0]))
        elif letter.kind == "costrip":
            parts.append(C.unit(d.dual.obj(objs[0])))
        else:
            parts.append(d.braiding(*objs))
    return d.tensor_proarrows(*parts)


@dataclass
class PairingGraph:
    """Nodes are boundary factor positions; edges pair them per letter."""

    source: tuple
    target: tuple
    edges: list = field(default_factory=list)

    def edge_set(self) -> set:
        return {(kind, a, b) for kind, a, b in self.edges}

    def to_json(self) -> dict:
        node = lambda side, i: {"side": side, "index": i,
                                "label": str((self.source if side == "src" else self.target)[i])}
        return {
            "nodes": [node("src", i) for i in range(len(self.source))]
                     + [node("tgt", i) for i in range(len(self.target))],
            "edges": [{"kind": k, "ends": [list(a), list(b)]} for k, a, b in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)


def eilenberg_kelly_graph(word: Connector) -> PairingGraph:
    src, tgt = connector_boundary(word)
    edges = []
    i = j = 0
    for letter in word.letters:
        s, t = letter.boundary()
        if letter.kind == "cup":
            edges.append(("cup", ("src", i), ("src", i + 1)))
        elif letter.kind == "cap":
            edges.append(("cap", ("tgt", j), ("tgt", j + 1)))
        elif letter.kind in ("strip", "costrip"):
            edges.append((letter.kind, ("src", i), ("tgt", j)))
        else:
            # the swap sends source factor k to target factor 1 - k
            edges.append(("braid", ("src", i), ("tgt", j + 1)))
            edges.append(("braid", ("src", i + 1), ("tgt", j)))
        i, j = i + len(s), j + len(t)
    return PairingGraph(src, tgt, edges)


# ---------------------------------------------------------------------------
# zigzags


@dataclass
class ZigzagPair:
    folds: FoldPair
    S: NaturalTransformation
    Z: NaturalTransformation

    def check(self, budget: Budget | None = None) -> list[LawReport]:
        return check_natural(self.S, budget) + check_natural(self.Z, budget)


def zigzags(folds: FoldPair) -> ZigzagPair:
    """S A = (iota A x eta A) ; (eps A x iota A) and Z A = (eta A x iota* A) ; (iota* A x eps A)."""
    d = folds.structure
    C = d.dc
    M, T = d.monoidal, d.tensor
    eta, eps = folds.cap, folds.cup
    u, dual = C.unit, d.dual
    ident = C.id_square_pro
    tp = lambda p, q: T.proarrow((p, q))
    tsq = lambda s, t: T.square((s, t))
    comp, compinv = T.compositor, T.compositor_inverse
    I = u(d.unit_object)
    star = lambda A: dual.obj(A)

    def s_obj(A):
        return C.procomp(tp(u(A), eta.obj(A)), tp(eps.obj(A), u(A)))

    def s_arrow(f):
        strip = C.id_square_arrow(f)
        return C.vcomp(tsq(strip, eta.arrow(f)), tsq(eps.arrow(f), strip))

    def s_beads(m):
        A, B = C.pro_src(m), C.pro_tgt(m)
        uA, uB = u(A), u(B)
        etaA, etaB, epsA, epsB = eta.obj(A), eta.obj(B), eps.obj(A), eps.obj(B)
        uBB = u(d.tensor_objects(star(B), B))
        uAA = u(d.tensor_objects(A, star(A)))
        mB = folds.R.proarrow((uB, m))   # R<B,m> = m x B*
        mA = folds.R.proarrow((m, uA))   # R<m,A> = A x m*
        Lm = folds.L.proarrow((m, uB))   # L<m,B> = m* x B
        Lam = folds.L.proarrow((uA, m))  # L<A,m> = A* x m
        interchange = C.hcomp_all(C.vcomp(M.right_unitor(m), ident(tp(uB, etaB))),
                                  comp((m, I), (uB, etaB)), compinv((uA, etaB), (m, uBB)))
        step1 = C.vcomp(interchange, ident(tp(epsB, uB)))
        bead = C.hcomp_all(comp((mB, uB), (epsB, uB)), tsq(eps.proarrow(m), ident(uB)),
                           compinv((mA, uB), (epsA, uB)))
        step2 = C.vcomp(ident(tp(uA, etaB)), bead)
        bead = C.hcomp_all(comp((uA, etaB), (uA, Lm)), tsq(ident(uA), eta.proarrow(m)),
                           compinv((uA, etaA), (uA, Lam)))
        step3 = C.vcomp(bead, ident(tp(epsA, uB)))
        interchange = C.hcomp_all(comp((uAA, m), (epsA, uB)), compinv((epsA, uA), (I, m)),
                                  C.vcomp(ident(tp(epsA, uA)), C.require_inverse(M.left_unitor(m))))
        step4 = C.vcomp(ident(tp(uA, etaA)), interchange)
        return [("∘<⊗(m, ηB)>", step1), ("⊗(εm, ιB)", step2),
                ("⊗(ιA, ηm)", step3), ("∘<⊗(εA, m)>", step4)]

    def z_obj(A):
        uS = u(star(A))
        return C.procomp(tp(eta.obj(A), uS), tp(uS, eps.obj(A)))

    def z_arrow(f):
        strip = C.id_square_arrow(dual.arrow(f))
        return C.vcomp(tsq(eta.arrow(f), strip), tsq(strip, eps.arrow(f)))

    def z_beads(m):
        # m: A -|-> B in C is a co(C)-proarrow from B to A; the beads run
        # Z B (.) m* => m* (.) Z A and the component is their inverse
        A, B = C.pro_src(m), C.pro_tgt(m)
        uA, uB = u(A), u(B)
        mS = dual.proarrow(m)
        uAs, uBs = u(star(A)), u(star(B))
        etaA, etaB, epsA, epsB = eta.obj(A), eta.obj(B), eps.obj(A), eps.obj(B)
        uBBs = u(d.tensor_objects(B, star(B)))
        uAsA = u(d.tensor_objects(star(A), A))
        Lm = folds.L.proarrow((m, uB))
        Lam = folds.L.proarrow((uA, m))
        mB = folds.R.proarrow((uB, m))
        mA = folds.R.proarrow((m, uA))
        interchange = C.hcomp_all(C.vcomp(ident(tp(uBs, epsB)), M.right_unitor(mS)),
                                  comp((uBs, epsB), (mS, I)), compinv((mS, uBBs), (uAs, epsB)))
        step1 = C.vcomp(ident(tp(etaB, uBs)), interchange)
        bead = C.hcomp_all(comp((etaB, uBs), (Lm, uBs)), tsq(eta.proarrow(m), ident(uBs)),
                           compinv((etaA, uBs), (Lam, uBs)))
        step2 = C.vcomp(bead, ident(tp(uAs, epsB)))
        bead = C.hcomp_all(comp((uAs, mB), (uAs, epsB)), tsq(ident(uAs), eps.proarrow(m)),
                           compinv((uAs, mA), (uAs, epsA)))
        step3 = C.vcomp(ident(tp(etaA, uBs)), bead)
        interchange = C.hcomp_all(comp((etaA, uBs), (uAsA, mS)), compinv((I, mS), (etaA, uAs)),
                                  C.vcomp(C.require_inverse(M.left_unitor(mS)), ident(tp(etaA, uAs))))
        step4 = C.vcomp(interchange, ident(tp(uAs, epsA)))
        return [("∘<⊗(m*, εB)>", step1), ("⊗(ηm, ι*B)", step2),
                ("⊗(ι*A, εm)", step3), ("∘<⊗(ηA, m*)>", step4)]

    def s_disk(m):
        return C.hcomp_all(*(cell for _, cell in s_beads(m)))

    def z_disk(m):
        return C.require_inverse(C.hcomp_all(*(cell for _, cell in z_beads(m))))

    ident_C = identity_functor(C)
    S = NaturalTransformation(ident_C, ident_C, s_obj, s_arrow, s_disk, name="S")
    S.beads = s_beads
    Z = NaturalTransformation(dual, dual, z_obj, z_arrow, z_disk, name="Z")
    Z.beads = z_beads
    return ZigzagPair(folds, S, Z)


# ---------------------------------------------------------------------------
# adjoint folds


@dataclass
class AdjointFoldWitness:
    zigzags: ZigzagPair
    mu: Modification
    nu: Modification


def _smoothing(S: NaturalTransformation, obj) -> Modification:
    F = S.source
    return Modification(S, identity_natural(F), identity_arrow_natural(F), identity_arrow_natural(F), obj,
                        name=f"smooth({S.name})")


def rel_adjoint_fold(z: ZigzagPair | None = None) -> AdjointFoldWitness:
    """mu A and nu A are the thin disks S A => unit A and Z A => unit A*."""
    from .rel import identity_function
    z = z or zigzags(rel_folds())
    C = z.folds.structure.dc
    d = z.folds.structure

    def thin(left, right):
        return C.square(left, right, identity_function(left.src), identity_function(left.tgt))
    mu = _smoothing(z.S, lambda A: thin(z.S.obj(A), C.unit(A)))
    nu = _smoothing(z.Z, lambda A: thin(z.Z.obj(A), C.unit(d.dual.obj(A))))
    return AdjointFoldWitness(z, mu, nu)


def fincat_adjoint_fold(z: ZigzagPair | None = None) -> AdjointFoldWitness:
    """The coend bijections S A = Hom_A and Z A = Hom_{A^op}: a zigzag
    class goes to the composite of its four arrows."""
    from .fincat.instance import disk_by_values, split_tuple
    from .fincat.monoidal import tensor_split
    from .fincat.profunctor import ProarrowList
    z = z or zigzags(fincat_folds())
    folds = z.folds
    d = folds.structure
    T = d.tensor

    def mu_obj(A):
        uA = ProarrowList.unit(A)
        first_ops, second_ops = [uA, folds.cap.obj(A)], [folds.cup.obj(A), uA]
        first, second = T.proarrow(tuple(first_ops)), T.proarrow(tuple(second_ops))

        def value(a, c, t):
            mid, u, v = split_tuple(first, second, a, c, t)
            k, cap = tensor_split(first_ops, u)
            cup, k2 = tensor_split(second_ops, v)
            return A.comp(A.comp(A.comp(k, cup[1][0]), cap[1][0]), k2)
        return disk_by_values(first.then(second), uA, value, lambda a, c, r: r)

    def nu_obj(A):
        Aop = A.op()
        uS = ProarrowList.unit(Aop)
        first_ops, second_ops = [folds.cap.obj(A), uS], [uS, folds.cup.obj(A)]
        first, second = T.proarrow(tuple(first_ops)), T.proarrow(tuple(second_ops))

        def value(a, c, t):
            # read in A: c -> mid0 -> mid1 -> mid2 -> a
            mid, u, v = split_tuple(first, second, a, c, t)
            cap, k = tensor_split(first_ops, u)
            k2, cup = tensor_split(second_ops, v)
            return A.comp(A.comp(A.comp(k2, cap[1][0]), cup[1][0]), k)
        return disk_by_values(first.then(second), uS, value, lambda a, c, r: r)

    return AdjointFoldWitness(z, _smoothing(z.S, mu_obj), _smoothing(z.Z, nu_obj))


def check_adjoint_fold(w: AdjointFoldWitness, budget: Budget | None = None) -> list[LawReport]:
    """Two-sided invertibility of every sampled mu A, nu A, plus modification naturality."""
    budget = budget or Budget()
    reports = []
    for label, mod, objects in (("mu", w.mu, w.mu.domain.objects()), ("nu", w.nu, w.nu.domain.objects())):
        C = mod.codomain
        run = LawRun(f"adjoint-fold:{label}-invertible", C.describe, group="adjoint-fold")
        for A in objects:
            try:
                disk = mod.obj(A)
            except DicatError as exc:
                run.check(False, object=A, error=str(exc))
                continue
            inverse = C.invert(disk)
            if not run.check(inverse is not None, object=A, disk=disk):
                continue
            run.equal(C.hcomp(disk, inverse), C.id_square_pro(C.boundary(disk).left), object=A)
            run.equal(C.hcomp(inverse, disk), C.id_square_pro(C.boundary(disk).right), object=A)
        reports.append(limit_to_universe([run.report], mod.domain)[0])
        for r in check_modification(mod, budget):
            r.law_id = f"adjoint-fold:{label}:{r.law_id}"
            reports.append(r)
    return reports


__all__ = [
    "ConnectorError", "MonoidalDualStructure", "rel_structure", "fincat_structure", "swap_pairs",
    "build_fold_difunctors", "FoldPair", "rel_folds", "fincat_folds", "strips", "ARITY", "LETTER_ALIASES",
    "Position", "Letter", "Connector", "normalize_letter", "tensor_connectors", "connector_boundary",
    "format_boundary", "evaluate_connector", "PairingGraph", "eilenberg_kelly_graph", "ZigzagPair", "zigzags",
    "AdjointFoldWitness", "rel_adjoint_fold", "fincat_adjoint_fold", "check_adjoint_fold",
]
