"""Cartesian tensor, canonical interchange disks and the op dual on FinCat."""
from __future__ import annotations

from ..core import CompositionError, Product, co
from ..functor import DFunctor
from .category import UNIT, Cat, CatFunctor, identity_cat_functor, tensor_functors
from .instance import FinCatDC, NatSquare, join_tuple, make_square, split_tuple
from .profunctor import (ProarrowList, ProdAtom, SwapAtom, eval_atom, prod, transpose_list,
                         transpose_tuple)


def _width(plist: ProarrowList) -> int:
    atom = eval_atom(plist)
    return len(atom.components) if isinstance(atom, ProdAtom) else 1


def _to_part(plist: ProarrowList, rep) -> tuple:
    n = len(plist)
    if n == 0:
        return rep
    if n == 1:
        x = rep[1][0]
        return x if isinstance(plist.atoms[0], ProdAtom) else (x,)
    return (rep,)


def _from_part(plist: ProarrowList, part: tuple):
    n = len(plist)
    if n == 0:
        return part
    if n == 1:
        return ((), (part if isinstance(plist.atoms[0], ProdAtom) else part[0],))
    return part[0]


def tensor_lists(lists) -> ProarrowList:
    """Both-unit operands give the unit list; otherwise one product atom of the evaluations."""
    lists = list(lists)
    src = UNIT.tensor(*(p.src for p in lists))
    tgt = UNIT.tensor(*(p.tgt for p in lists))
    if all(len(p) == 0 for p in lists):
        return ProarrowList.unit(src)
    return ProarrowList(src, tgt, (prod(*(eval_atom(p) for p in lists)),))


def tensor_join(lists, reps):
    flat = sum((_to_part(p, r) for p, r in zip(lists, reps)), ())
    if all(len(p) == 0 for p in lists):
        return flat
    return ((), (flat,))


def tensor_split(lists, rep) -> list:
    flat = rep if all(len(p) == 0 for p in lists) else rep[1][0]
    out, i = [], 0
    for p in lists:
        w = _width(p)
        out.append(_from_part(p, flat[i:i + w]))
        i += w
    return out


def _cut(cat_parts, x):
    out, i = [], 0
    for c in cat_parts:
        out.append(x[i:i + len(c)])
        i += len(c)
    return out


def tensor_squares(squares) -> NatSquare:
    squares = list(squares)
    lefts = [s.left for s in squares]
    rights = [s.right for s in squares]
    left, right = tensor_lists(lefts), tensor_lists(rights)
    top = tensor_functors(*(s.top for s in squares))
    bottom = tensor_functors(*(s.bottom for s in squares))

    def fn(a, c, rep):
        parts = zip(squares, _cut([p.src for p in lefts], a), _cut([p.tgt for p in lefts], c),
                    tensor_split(lefts, rep))
        return tensor_join(rights, [s(ai, ci, ri) for s, ai, ci, ri in parts])
    return make_square(left, right, top, bottom, fn, check=False)


def tensor_compositor(firsts, seconds) -> NatSquare:
    """The canonical disk (x firsts) ; (x seconds) => x (first_i ; second_i)."""
    firsts, seconds = list(firsts), list(seconds)
    if len(firsts) != len(seconds):
        raise CompositionError("tensor compositor needs operand lists of equal length")
    t1, t2 = tensor_lists(firsts), tensor_lists(seconds)
    joined = [p.then(q) for p, q in zip(firsts, seconds)]
    target = tensor_lists(joined)
    srcs, mids, tgts = [p.src for p in firsts], [p.tgt for p in firsts], [q.tgt for q in seconds]

    def fn(a, e, rep):
        b, u, v = split_tuple(t1, t2, a, e, rep)
        us, vs = tensor_split(firsts, u), tensor_split(seconds, v)
        ws = [join_tuple(p, q, ai, bi, ei, ui, vi) for p, q, ai, bi, ei, ui, vi in
              zip(firsts, seconds, _cut(srcs, a), _cut(mids, b), _cut(tgts, e), us, vs)]
        return tensor_join(joined, ws)
    return make_square(t1.then(t2), target, identity_cat_functor(t1.src), identity_cat_functor(t2.tgt), fn,
                       check=False)


def monoidal_interchanger(m: ProarrowList, n: ProarrowList) -> NatSquare:
    """(m x unit) ; (unit x n) => m x n."""
    return tensor_compositor([m, ProarrowList.unit(n.src)], [ProarrowList.unit(m.tgt), n])


def evaluation_disk(plist: ProarrowList) -> NatSquare:
    """plist => [eval(plist)]: the unitor for the empty list, identity for one atom."""
    target = ProarrowList.of(eval_atom(plist))
    n = len(plist)
    wrap = (lambda a, c, r: ((), (r,))) if n != 1 else (lambda a, c, r: r)
    return make_square(plist, target, identity_cat_functor(plist.src), identity_cat_functor(plist.tgt), wrap,
                       check=False)


def _unitor(operands, index: int) -> NatSquare:
    m = operands[index]
    fill = lambda rep: [rep if i == index else () for i in range(len(operands))]
    return make_square(m, tensor_lists(operands), identity_cat_functor(m.src), identity_cat_functor(m.tgt),
                       lambda a, c, rep: tensor_join(operands, fill(rep)), check=False)


class FinCatMonoidal:
    """Cartesian product of categories as a tensor difunctor on FinCat x FinCat."""

    def __init__(self, dc: FinCatDC):
        self.dc = dc
        self.pairs = Product(dc, dc)
        self.unit_object = UNIT
        self.tensor = DFunctor(
            self.pairs, dc,
            lambda ab: ab[0].tensor(ab[1]),
            lambda fg: tensor_functors(fg[0], fg[1]),
            lambda mn: tensor_lists(mn),
            lambda st: tensor_squares(st),
            compositor=lambda p, q: tensor_compositor(p, q), name="tensor")

    def tensor_objects(self, *objs: Cat) -> Cat:
        return UNIT.tensor(*objs)

    def tensor_proarrows(self, *ms: ProarrowList) -> ProarrowList:
        return tensor_lists(ms)

    def tensor_arrows(self, *fs: CatFunctor) -> CatFunctor:
        return tensor_functors(*fs)

    def tensor_squares(self, *ss: NatSquare) -> NatSquare:
        return tensor_squares(ss)

    def left_unitor(self, m: ProarrowList) -> NatSquare:
        """m => unit(1) x m."""
        return _unitor([ProarrowList.unit(UNIT), m], 1)

    def right_unitor(self, m: ProarrowList) -> NatSquare:
        """m => m x unit(1)."""
        return _unitor([m, ProarrowList.unit(UNIT)], 0)

    def braiding(self, first: Cat, second: Cat) -> ProarrowList:
        return ProarrowList.of(SwapAtom(first, second))

    def braiding_arrow(self, first: Cat, second: Cat) -> CatFunctor:
        src, tgt = first.tensor(second), second.tensor(first)
        n = len(first)
        swap = lambda x: x[n:] + x[:n]
        return CatFunctor(src, tgt, {a: swap(a) for a in src.objects}, {f: swap(f) for f in src.arrows},
                          name=f"swap[{first.name},{second.name}]", check=False)


def fincat_monoidal(dc: FinCatDC | None = None) -> FinCatMonoidal:
    from .instance import fincat_dc
    return FinCatMonoidal(dc or fincat_dc())


def dual_square(sq: NatSquare) -> NatSquare:
    """Transpose a square: left m^T, right n^T, top bottom^op, bottom top^op."""
    m, n = sq.left, sq.right
    left, right = transpose_list(m), transpose_list(n)
    top, bottom = sq.bottom.op(), sq.top.op()
    ev = m.evaluation
    lm, ln = len(m), len(n)

    def fn(c, a, rep):
        x = ev.classify(a, c, transpose_tuple(rep, lm))
        return transpose_tuple(sq(a, c, x), ln)
    return make_square(left, right, top, bottom, fn, check=False)


def fincat_dual(dc: FinCatDC) -> DFunctor:
    """op: co(FinCat) -> FinCat, strict and involutive."""
    return DFunctor(co(dc), dc, lambda A: A.op(), lambda F: F.op(), transpose_list, dual_square, name="op")


__all__ = [
    "tensor_lists", "tensor_join", "tensor_split", "tensor_squares", "tensor_compositor",
    "monoidal_interchanger", "evaluation_disk", "FinCatMonoidal", "fincat_monoidal", "dual_square",
    "fincat_dual",
]
