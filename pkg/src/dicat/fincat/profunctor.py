"""Profunctor atoms, unbiased proarrow lists and their coend evaluation.

A profunctor P: A -|-> B has element sets P(a, b), contravariant in a and
covariant in b.  ``act(f, x, g)`` sends x in P(a, b) along f: a' -> a and
g: b -> b' to an element of P(a', b').
"""
from __future__ import annotations

import itertools
from functools import cached_property

from ..core import CompositionError, ConstructionError
from .category import UNIT, Cat, CatFunctor, FinCategory


class Atom:
    src: Cat
    tgt: Cat

    @cached_property
    def key(self):
        raise NotImplementedError

    def elements(self, a, b) -> tuple:
        raise NotImplementedError

    def act(self, f, x, g):
        raise NotImplementedError

    def left(self, f, x, b):
        return self.act(f, x, self.tgt.ident(b))

    def right(self, x, g, a):
        return self.act(self.src.ident(a), x, g)

    def __eq__(self, other):
        return isinstance(other, Atom) and (self is other or self.key == other.key)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"{self.label}: {self.src.name} -|-> {self.tgt.name}"

    @property
    def label(self) -> str:
        return type(self).__name__


class HomAtom(Atom):
    """Hom of a single factor; elements are bare arrow names."""

    def __init__(self, cat: Cat):
        if len(cat) != 1:
            raise ConstructionError("HomAtom needs a single-factor category; use hom()")
        self.src = self.tgt = cat
        self.factor = cat.factors[0]

    @cached_property
    def key(self):
        return ("hom", self.src)

    def elements(self, a, b):
        return self.factor.hom(a[0], b[0])

    def act(self, f, x, g):
        fa = self.factor
        return fa.comp(fa.comp(f[0], x), g[0])

    @property
    def label(self):
        return f"Hom[{self.src.name}]"


class ProdAtom(Atom):
    """External product; elements are tuples of component elements."""

    def __init__(self, components):
        self.components = tuple(components)
        self.src = UNIT.tensor(*(c.src for c in self.components))
        self.tgt = UNIT.tensor(*(c.tgt for c in self.components))
        self._srcs = [c.src for c in self.components]
        self._tgts = [c.tgt for c in self.components]
        self._cache: dict = {}

    @cached_property
    def key(self):
        return ("prod", self.components)

    def elements(self, a, b):
        got = self._cache.get((a, b))
        if got is None:
            parts = [c.elements(x, y) for c, x, y in
                     zip(self.components, self.src.split(a, self._srcs), self.tgt.split(b, self._tgts))]
            got = self._cache[(a, b)] = tuple(itertools.product(*parts))
        return got

    def act(self, f, x, g):
        return tuple(c.act(ff, xx, gg) for c, ff, xx, gg in
                     zip(self.components, self.src.split(f, self._srcs), x, self.tgt.split(g, self._tgts)))

    @property
    def label(self):
        return "(" + " x ".join(c.label for c in self.components) + ")"


class TransposeAtom(Atom):
    """P^T: B^op -|-> A^op with P^T(b, a) = P(a, b)."""

    def __init__(self, inner: Atom):
        self.inner = inner
        self.src = inner.tgt.op()
        self.tgt = inner.src.op()

    @cached_property
    def key(self):
        return ("transpose", self.inner.key)

    def elements(self, b, a):
        return self.inner.elements(a, b)

    def act(self, f, x, g):
        return self.inner.act(g, x, f)

    @property
    def label(self):
        return f"{self.inner.label}^T"


class CapAtom(Atom):
    """1 -|-> A^op x A with elements Hom_A(a, a') at ((), a + a')."""

    def __init__(self, cat: Cat):
        self.base = cat
        self.src = UNIT
        self.tgt = cat.op().tensor(cat)
        self._n = len(cat)

    @cached_property
    def key(self):
        return ("cap", self.base)

    def elements(self, a, b):
        return self.base.hom(b[:self._n], b[self._n:])

    def act(self, f, x, g):
        # g = (g1 in A^op, g2 in A): g1 is an A-arrow into the old source
        A = self.base
        return A.comp(A.comp(g[:self._n], x), g[self._n:])

    @property
    def label(self):
        return f"cap[{self.base.name}]"


class RepresentableAtom(Atom):
    """F_*: A -|-> B with Hom_B(F a, b), or F^*: B -|-> A with Hom_B(b, F a)."""

    def __init__(self, functor: CatFunctor, lower: bool = True):
        self.functor = functor
        self.lower = lower
        if lower:
            self.src, self.tgt = functor.src, functor.tgt
        else:
            self.src, self.tgt = functor.tgt, functor.src

    @cached_property
    def key(self):
        return ("rep", self.functor, self.lower)

    def elements(self, a, b):
        F, B = self.functor, self.functor.tgt
        return B.hom(F.omap[a], b) if self.lower else B.hom(a, F.omap[b])

    def act(self, f, x, g):
        F, B = self.functor, self.functor.tgt
        if self.lower:
            return B.comp(B.comp(F.amap[f], x), g)
        return B.comp(B.comp(f, x), F.amap[g])

    @property
    def label(self):
        return f"{self.functor.name}_*" if self.lower else f"{self.functor.name}^*"


class ConstantAtom(Atom):
    """The terminal (one element) or empty profunctor."""

    def __init__(self, src: Cat, tgt: Cat, inhabited: bool = True):
        self.src, self.tgt = src, tgt
        self.inhabited = inhabited

    @cached_property
    def key(self):
        return ("const", self.src, self.tgt, self.inhabited)

    def elements(self, a, b):
        return ("*",) if self.inhabited else ()

    def act(self, f, x, g):
        return x

    @property
    def label(self):
        return "1" if self.inhabited else "0"


class SwapAtom(Atom):
    """X x Y -|-> Y x X, the graph of the symmetry; elements are pairs of arrows."""

    def __init__(self, first: Cat, second: Cat):
        self.first, self.second = first, second
        self.src = first.tensor(second)
        self.tgt = second.tensor(first)

    @cached_property
    def key(self):
        return ("swap", self.first, self.second)

    def elements(self, a, b):
        x, y = self.src.split(a, [self.first, self.second])
        y2, x2 = self.tgt.split(b, [self.second, self.first])
        return tuple(itertools.product(self.first.hom(x, x2), self.second.hom(y, y2)))

    def act(self, f, e, g):
        fx, fy = self.src.split(f, [self.first, self.second])
        gy, gx = self.tgt.split(g, [self.second, self.first])
        X, Y = self.first, self.second
        return (X.comp(X.comp(fx, e[0]), gx), Y.comp(Y.comp(fy, e[1]), gy))

    @property
    def label(self):
        return f"swap[{self.first.name},{self.second.name}]"


class TableAtom(Atom):
    """A profunctor between single-factor categories given by explicit tables.

    ``elements`` maps (a, b) to element names (unique across the atom);
    ``left[(f, x)]`` and ``right[(x, g)]`` give the actions of non-identity
    arrows.  Functoriality is validated on construction.
    """

    def __init__(self, name: str, src: Cat, tgt: Cat, elements: dict, left: dict | None = None,
                 right: dict | None = None):
        self.name = name
        self.src, self.tgt = src, tgt
        wrap = lambda o: o if isinstance(o, tuple) else (o,)
        self.table = {(wrap(a), wrap(b)): tuple(xs) for (a, b), xs in elements.items()}
        self.where: dict = {}
        for (a, b), xs in self.table.items():
            if a not in src.objects or b not in tgt.objects:
                raise ConstructionError(f"profunctor {name}: unknown object pair ({a}, {b})")
            for x in xs:
                if x in self.where:
                    raise ConstructionError(f"profunctor {name}: element {x} declared twice")
                self.where[x] = (a, b)
        self.lefts = {(wrap(f), x): y for (f, x), y in (left or {}).items()}
        self.rights = {(x, wrap(g)): y for (x, g), y in (right or {}).items()}
        self._validate()

    def _left(self, f, x):
        a, b = self.where[x]
        if f == self.src.ident(a):
            return x
        try:
            return self.lefts[(f, x)]
        except KeyError:
            raise ConstructionError(f"profunctor {self.name}: no left action of {f} on {x}") from None

    def _right(self, x, g):
        a, b = self.where[x]
        if g == self.tgt.ident(b):
            return x
        try:
            return self.rights[(x, g)]
        except KeyError:
            raise ConstructionError(f"profunctor {self.name}: no right action of {g} on {x}") from None

    def _validate(self):
        A, B = self.src, self.tgt
        for x, (a, b) in self.where.items():
            for f in A.into[a]:
                y = self._left(f, x)
                if self.where.get(y) != (A.src(f), b):
                    raise ConstructionError(f"profunctor {self.name}: {f} . {x} = {y} lands in the wrong set")
            for g in B.out_of[b]:
                y = self._right(x, g)
                if self.where.get(y) != (a, B.tgt(g)):
                    raise ConstructionError(f"profunctor {self.name}: {x} . {g} = {y} lands in the wrong set")
        for x, (a, b) in self.where.items():
            for f2 in A.into[a]:
                for f1 in A.into[A.src(f2)]:
                    if self._left(A.comp(f1, f2), x) != self._left(f1, self._left(f2, x)):
                        raise ConstructionError(
                            f"profunctor {self.name}: left action not functorial at arrows ({f1}, {f2}) on {x}")
            for g1 in B.out_of[b]:
                for g2 in B.out_of[B.tgt(g1)]:
                    if self._right(x, B.comp(g1, g2)) != self._right(self._right(x, g1), g2):
                        raise ConstructionError(
                            f"profunctor {self.name}: right action not functorial at arrows ({g1}, {g2}) on {x}")
            for f in A.into[a]:
                for g in B.out_of[b]:
                    if self._right(self._left(f, x), g) != self._left(f, self._right(x, g)):
                        raise ConstructionError(
                            f"profunctor {self.name}: actions do not commute at arrows ({f}, {g}) on {x}")

    @cached_property
    def key(self):
        return ("table", self.name, self.src, self.tgt, tuple(sorted(self.table.items(), key=repr)),
                tuple(sorted(self.lefts.items(), key=repr)), tuple(sorted(self.rights.items(), key=repr)))

    def elements(self, a, b):
        return self.table.get((a, b), ())

    def act(self, f, x, g):
        return self._right(self._left(f, x), g)

    @property
    def label(self):
        return self.name


class EvaluatedAtom(Atom):
    """A list of two or more atoms viewed as one atom via its coend."""

    def __init__(self, plist: "ProarrowList"):
        self.plist = plist
        self.src, self.tgt = plist.src, plist.tgt

    @cached_property
    def key(self):
        return ("eval", self.plist)

    def elements(self, a, b):
        return tuple(self.plist.evaluation.classes(a, b))

    def act(self, f, x, g):
        return self.plist.evaluation.act(f, x, g)

    @property
    def label(self):
        return "[" + " ; ".join(a.label for a in self.plist.atoms) + "]"


# ---------------------------------------------------------------------------
# constructors that keep the representation canonical


def prod(*atoms: Atom) -> ProdAtom:
    comps = []
    for a in atoms:
        if isinstance(a, ProdAtom):
            comps.extend(a.components)
        else:
            comps.append(a)
    return ProdAtom(comps)


def hom(cat: Cat) -> ProdAtom:
    return ProdAtom([HomAtom(Cat((f,))) for f in cat.factors])


def transpose(atom: Atom) -> Atom:
    if isinstance(atom, TransposeAtom):
        return atom.inner
    if isinstance(atom, HomAtom):
        return HomAtom(atom.src.op())
    if isinstance(atom, ProdAtom):
        return ProdAtom([transpose(c) for c in atom.components])
    if isinstance(atom, ConstantAtom):
        return ConstantAtom(atom.tgt.op(), atom.src.op(), atom.inhabited)
    return TransposeAtom(atom)


def cup(cat: Cat) -> Atom:
    """A x A^op -|-> 1 with elements Hom_A(a, a') at (a + a', ())."""
    return transpose(CapAtom(cat))


def single(cat: FinCategory, op: bool = False) -> Cat:
    return Cat.of(cat, op)


# ---------------------------------------------------------------------------


class ProarrowList:
    """An unbiased composite of atoms; the empty list at A is the unit."""

    __slots__ = ("src", "tgt", "atoms", "_hash", "__dict__")

    def __init__(self, src: Cat, tgt: Cat, atoms=()):
        self.atoms = tuple(atoms)
        self.src, self.tgt = src, tgt
        if not self.atoms and src != tgt:
            raise ConstructionError("the empty proarrow list needs equal endpoints")
        cur = src
        for a in self.atoms:
            if a.src != cur:
                raise CompositionError(f"atom {a.label} starts at {a.src.name}, expected {cur.name}")
            cur = a.tgt
        if cur != tgt:
            raise CompositionError(f"list ends at {cur.name}, expected {tgt.name}")
        self._hash = hash((src, tgt, self.atoms))

    @classmethod
    def of(cls, *atoms: Atom) -> "ProarrowList":
        if not atoms:
            raise ConstructionError("use ProarrowList.unit for the empty list")
        return cls(atoms[0].src, atoms[-1].tgt, atoms)

    @classmethod
    def unit(cls, cat: Cat) -> "ProarrowList":
        return cls(cat, cat, ())

    def __eq__(self, other):
        return isinstance(other, ProarrowList) and (self is other or (
            self._hash == other._hash and self.src == other.src and self.tgt == other.tgt
            and self.atoms == other.atoms))

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.atoms)

    def __repr__(self):
        return f"ProarrowList({self.label})"

    @property
    def label(self) -> str:
        if not self.atoms:
            return f"unit[{self.src.name}]"
        return " ; ".join(a.label for a in self.atoms)

    def then(self, other: "ProarrowList") -> "ProarrowList":
        if self.tgt != other.src:
            raise CompositionError(f"cannot compose {self.label} with {other.label}")
        return ProarrowList(self.src, other.tgt, self.atoms + other.atoms)

    @property
    def evaluation(self) -> "Evaluation":
        # shared across equal lists so that rebuilt composites reuse their classes
        ev = self.__dict__.get("_ev")
        if ev is None:
            ev = _EVALUATIONS.get(self)
            if ev is None:
                ev = _EVALUATIONS[self] = Evaluation(self)
            self.__dict__["_ev"] = ev
        return ev

    @cached_property
    def cats(self) -> tuple:
        """The categories X0 = src, X1, ..., Xn = tgt along the list."""
        return (self.src,) + tuple(a.tgt for a in self.atoms)


_EVALUATIONS: dict = {}


def compose_proarrows(p: ProarrowList, q: ProarrowList) -> ProarrowList:
    return p.then(q)


def eval_atom(plist: ProarrowList) -> Atom:
    if not plist.atoms:
        return hom(plist.src)
    if len(plist.atoms) == 1:
        return plist.atoms[0]
    return EvaluatedAtom(plist)


class _Classes:
    __slots__ = ("reps", "rep_of", "members")

    def __init__(self, reps, rep_of, members):
        self.reps, self.rep_of, self.members = reps, rep_of, members


class Evaluation:
    """Equivalence classes of the coend of a list at every object pair.

    For the empty list the classes are the arrows of the category.  For a
    list of n >= 1 atoms a tuple is (mids, elems) with mids the n - 1
    intermediate objects and elems the n atom elements; the class
    representative is the first member in enumeration order.
    """

    def __init__(self, plist: ProarrowList):
        self.plist = plist
        self.atoms = plist.atoms
        self.cats = plist.cats
        self._by_pair: dict = {}

    def _get(self, a, c) -> _Classes:
        got = self._by_pair.get((a, c))
        if got is None:
            got = self._by_pair[(a, c)] = self._build(a, c)
        return got

    def classes(self, a, c) -> list:
        return self._get(a, c).reps

    def members(self, a, c, rep) -> list:
        if not self.atoms:
            return [rep]
        return self._get(a, c).members[rep]

    def classify(self, a, c, t):
        if not self.atoms:
            return t
        try:
            return self._get(a, c).rep_of[t]
        except KeyError:
            raise CompositionError(f"{t!r} is not an element of {self.plist.label} at ({a}, {c})") from None

    def all_pairs(self):
        return itertools.product(self.plist.src.objects, self.plist.tgt.objects)

    def act(self, f, t, g):
        """Act on a tuple (any member) and return the class representative."""
        X0, Xn = self.plist.src, self.plist.tgt
        a2, c2 = X0.src(f), Xn.tgt(g)
        if not self.atoms:
            return X0.comp(X0.comp(f, t), g)
        mids, elems = t
        n = len(self.atoms)
        if n == 1:
            new = (self.atoms[0].act(f, elems[0], g),)
        else:
            first = self.atoms[0].act(f, elems[0], self.cats[1].ident(mids[0]))
            last = self.atoms[-1].act(self.cats[-2].ident(mids[-1]), elems[-1], g)
            new = (first,) + elems[1:-1] + (last,)
        return self.classify(a2, c2, (mids, new))

    def _build(self, a, c) -> _Classes:
        atoms, cats = self.atoms, self.cats
        n = len(atoms)
        if n == 0:
            reps = list(cats[0].hom(a, c))
            return _Classes(reps, {h: h for h in reps}, {h: [h] for h in reps})
        if n == 1:
            reps = [((), (x,)) for x in atoms[0].elements(a, c)]
            return _Classes(reps, {r: r for r in reps}, {r: [r] for r in reps})
        # prefixes[i][b]: ways to fill atoms 0..i-1 from a to b in cats[i]
        prefixes = [None] * n
        prefixes[1] = {b: [((), (x,)) for x in atoms[0].elements(a, b)] for b in cats[1].objects}
        for i in range(2, n):
            layer = {}
            for b in cats[i].objects:
                out = []
                for b0 in cats[i - 1].objects:
                    for mids, elems in prefixes[i - 1][b0]:
                        for x in atoms[i - 1].elements(b0, b):
                            out.append((mids + (b0,), elems + (x,)))
                layer[b] = out
            prefixes[i] = layer
        # suffixes[i][b]: ways to fill atoms i..n-1 from b in cats[i] to c
        suffixes = [None] * (n + 1)
        suffixes[n - 1] = {b: [((), (x,)) for x in atoms[n - 1].elements(b, c)] for b in cats[n - 1].objects}
        for i in range(n - 2, 0, -1):
            layer = {}
            for b in cats[i].objects:
                out = []
                for b1 in cats[i + 1].objects:
                    for x in atoms[i].elements(b, b1):
                        for mids, elems in suffixes[i + 1][b1]:
                            out.append(((b1,) + mids, (x,) + elems))
                layer[b] = out
            suffixes[i] = layer

        tuples = []
        for b in cats[1].objects:
            for pm, pe in prefixes[1][b]:
                for sm, se in suffixes[1][b]:
                    tuples.append(((b,) + sm, pe + se))
        index = {t: k for k, t in enumerate(tuples)}
        parent = list(range(len(tuples)))

        def find(k):
            root = k
            while parent[root] != root:
                root = parent[root]
            while parent[k] != root:
                parent[k], k = root, parent[k]
            return root

        def union(j, k):
            rj, rk = find(j), find(k)
            if rj != rk:
                # the smaller index stays root so the class rep is its first member
                if rj < rk:
                    parent[rk] = rj
                else:
                    parent[rj] = rk

        for i in range(1, n):
            X = cats[i]
            P, Q = atoms[i - 1], atoms[i]
            for u in X.arrows:
                b, b2 = X.src(u), X.tgt(u)
                if u == X.ident(b):
                    continue
                for pm, pe in prefixes[i][b]:
                    before = pm[-1] if pm else a
                    pushed = P.act(cats[i - 1].ident(before), pe[-1], u)
                    for sm, se in suffixes[i][b2]:
                        after = sm[0] if sm else c
                        pulled = Q.act(u, se[0], cats[i + 1].ident(after))
                        lhs = (pm + (b2,) + sm, pe[:-1] + (pushed,) + se)
                        rhs = (pm + (b,) + sm, pe + (pulled,) + se[1:])
                        union(index[lhs], index[rhs])

        reps, rep_of, members = [], {}, {}
        for k, t in enumerate(tuples):
            r = tuples[find(k)]
            if r is t:
                reps.append(t)
                members[t] = []
            rep_of[t] = r
            members[r].append(t)
        return _Classes(reps, rep_of, members)

    @cached_property
    def square_keys(self) -> tuple:
        return tuple((a, c, r) for a, c in self.all_pairs() for r in self.classes(a, c))

    def class_counts(self) -> dict:
        return {(a, c): len(self.classes(a, c)) for a, c in self.all_pairs()}


def transpose_list(plist: ProarrowList) -> ProarrowList:
    return ProarrowList(plist.tgt.op(), plist.src.op(), tuple(transpose(a) for a in reversed(plist.atoms)))


def transpose_tuple(t, length: int):
    """Reverse a coend tuple so it reads in the transposed list."""
    if length == 0:
        return t
    mids, elems = t
    return (mids[::-1], elems[::-1])


def check_well_defined(plist: ProarrowList) -> list:
    """Acting on every member of a class lands in one class; returns violations."""
    ev = plist.evaluation
    X0, Xn = plist.src, plist.tgt
    bad = []
    for a, c in ev.all_pairs():
        for rep in ev.classes(a, c):
            for f in X0.into[a]:
                got = {ev.act(f, t, Xn.ident(c)) for t in ev.members(a, c, rep)}
                if len(got) > 1:
                    bad.append((a, c, rep, f))
            for g in Xn.out_of[c]:
                got = {ev.act(X0.ident(a), t, g) for t in ev.members(a, c, rep)}
                if len(got) > 1:
                    bad.append((a, c, rep, g))
    return bad
