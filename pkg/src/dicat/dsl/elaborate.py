"""Name resolution and construction of cells and transformations from a Document."""
from __future__ import annotations

import copy
from functools import cached_property

from ..core import DicatError, MissingComponentError, Product
from ..dinat import (DinaturalTransformation, compose_dinat_nat, compose_nat_dinat, diagonal_identity,
                     diagonalize_modification, diagonalize_natural, disk_boundary, dummy_dimodification,
                     dummy_dinatural, undummy)
from ..extranat import (ConnectorError, fincat_adjoint_fold, fincat_folds, fincat_structure, normalize_letter,
                        rel_adjoint_fold, rel_folds, rel_structure, strips, tensor_connectors, zigzags)
from ..free import Computad, free_dc
from ..functor import DFunctor, compose_functors, identity_functor, projection
from ..transform import NaturalTransformation, compose_natural, identity_modification, identity_natural
from .syntax import (ArrowDecl, Call, CategoryDecl, ConnectorDecl, DimodificationDecl, DinaturalDecl, Document,
                     DslError, FunctionDecl, FunctorDecl, InstanceDecl, ModificationDecl, Name, NaturalDecl, Num,
                     ObjectDecl, ProarrowDecl, ProfunctorDecl, RelDecl, Seq, SetDecl, Span, SquareDecl, Tup,
                     parse, show_term)


class ElaborationError(DslError):
    """A declaration does not resolve or does not build; the span points at it."""


NO_SPAN = Span(0, 0, 1, 1)

# which declarations each instance accepts, besides transformations and connectors
INSTANCE_DECLS = {
    "rel": (SetDecl, RelDecl, FunctionDecl),
    "fincat": (CategoryDecl, ProfunctorDecl, FunctorDecl),
    "free": (ObjectDecl, ArrowDecl, ProarrowDecl, SquareDecl),
}
KIND_OF = {
    SetDecl: "set", RelDecl: "relation", FunctionDecl: "function", CategoryDecl: "category",
    ProfunctorDecl: "profunctor", FunctorDecl: "functor", ObjectDecl: "object", ArrowDecl: "arrow",
    ProarrowDecl: "proarrow", SquareDecl: "square", NaturalDecl: "natural", DinaturalDecl: "dinatural",
    ModificationDecl: "modification", DimodificationDecl: "dimodification", ConnectorDecl: "connector",
}
OBJECT_KINDS = ("set", "category", "object")
BUILTIN_DINATURALS = ("cap", "cup", "strip", "costrip")


def _infer_instance(doc: Document) -> str:
    for kind, types in (("fincat", INSTANCE_DECLS["fincat"]), ("free", INSTANCE_DECLS["free"])):
        if any(isinstance(d, types) for d in doc.declarations):
            return kind
    return "rel"


class Workspace:
    """Everything a document names, built against one instance."""

    def __init__(self, document: Document):
        self.document = document
        chosen = [d for d in document.declarations if isinstance(d, InstanceDecl)]
        if len(chosen) > 1:
            raise ElaborationError("more than one instance declaration", chosen[1].span or NO_SPAN)
        self.kind = chosen[0].kind if chosen else _infer_instance(document)
        self.decls: dict = {}
        self.kinds: dict = {}
        self.spans: dict = {}
        self.order: list = []
        self.values: dict = {}
        self._active: list = []
        self._difunctors: dict = {}
        for d in document.declarations:
            if isinstance(d, InstanceDecl):
                continue
            span = d.span or NO_SPAN
            kind = KIND_OF[type(d)]
            if isinstance(d, (SetDecl, RelDecl, FunctionDecl, CategoryDecl, ProfunctorDecl, FunctorDecl, ObjectDecl,
                              ArrowDecl, ProarrowDecl, SquareDecl)) and not isinstance(d, INSTANCE_DECLS[self.kind]):
                raise ElaborationError(f"{kind} declarations are not available in the {self.kind} instance", span)
            for name in (d.names if isinstance(d, ObjectDecl) else (d.name,)):
                if name in self.decls:
                    raise ElaborationError(f"duplicate name {name} (first declared at {self.spans[name]})", span)
                self.decls[name], self.kinds[name], self.spans[name] = d, kind, span
                self.order.append(name)
        self.dc = self._build_instance()
        for name in self.order:
            self.resolve(name)

    # -- lookup
    def named(self, kind: str) -> dict:
        return {n: self.values[n] for n in self.order if self.kinds[n] == kind}

    def resolve(self, name: str, kinds=None, span: Span | None = None):
        if name not in self.decls:
            raise ElaborationError(f"unresolved name {name}", span or NO_SPAN)
        if kinds is not None and self.kinds[name] not in kinds:
            raise ElaborationError(f"{name} is a {self.kinds[name]}, expected {' or '.join(kinds)}",
                                   span or self.spans[name])
        if name in self.values:
            return self.values[name]
        if name in self._active:
            cycle = " -> ".join(self._active[self._active.index(name):] + [name])
            raise ElaborationError(f"cyclic definition {cycle}", self.spans[name])
        self._active.append(name)
        try:
            value = self._build(name, self.decls[name])
        except DslError:
            raise
        except DicatError as exc:
            prefix = f"{self.kinds[name]} {name}: "
            message = str(exc) if str(exc).startswith(prefix) else prefix + str(exc)
            raise ElaborationError(message, self.spans[name]) from None
        finally:
            self._active.pop()
        self.values[name] = value
        return value

    def object(self, name: str, span: Span | None = None):
        return self.resolve(name, OBJECT_KINDS, span)

    # -- instances
    def _build_instance(self):
        if self.kind == "free":
            return self._free_instance()
        return self.structure.dc

    @cached_property
    def structure(self):
        if self.kind == "rel":
            sets = []
            for n in self.order:
                if self.kinds[n] == "set":
                    s = self.resolve(n)
                    if s not in sets:
                        sets.append(s)
            return rel_structure(universe=sets) if sets else rel_structure(2)
        if self.kind == "fincat":
            cats = [self.resolve(n) for n in self.order if self.kinds[n] == "category"]
            cats = [c.factors[0].cat for c in cats]
            atoms = []
            # only table profunctors join the sampled universe; hom atoms are already there
            for n in self.order:
                d = self.decls[n]
                if isinstance(d, ProfunctorDecl) and d.hom_of is None:
                    atoms.extend(self.resolve(n).atoms)
            return fincat_structure(cats or None, atoms=atoms)
        raise ElaborationError("the free instance has no monoidal structure or dual", NO_SPAN)

    @cached_property
    def folds(self):
        return rel_folds(self.structure) if self.kind == "rel" else fincat_folds(self.structure)

    @cached_property
    def strips(self):
        return strips(self.structure)

    @cached_property
    def zigzags(self):
        return zigzags(self.folds)

    @cached_property
    def adjoint(self):
        return rel_adjoint_fold(self.zigzags) if self.kind == "rel" else fincat_adjoint_fold(self.zigzags)

    def _free_instance(self):
        objects, arrows, proarrows, squares = [], {}, {}, {}
        for n in self.order:
            d = self.decls[n]
            if isinstance(d, ObjectDecl):
                objects.append(n)
        for n in self.order:
            d = self.decls[n]
            if isinstance(d, (ArrowDecl, ProarrowDecl)):
                for end in (d.src, d.tgt):
                    if self.kinds.get(end) != "object":
                        raise ElaborationError(f"{self.kinds[n]} {n}: unknown object {end}", d.span or NO_SPAN)
                (arrows if isinstance(d, ArrowDecl) else proarrows)[n] = (d.src, d.tgt)
        for n in self.order:
            d = self.decls[n]
            if not isinstance(d, SquareDecl):
                continue
            corners = [None] * 4
            for path, (s, t) in ((d.left, (0, 2)), (d.right, (1, 3)), (d.top, (0, 1)), (d.bottom, (2, 3))):
                if path.at is not None:
                    if path.at not in objects:
                        raise ElaborationError(f"square {n}: unknown object {path.at}", path.span or d.span)
                    corners[s] = corners[t] = path.at
            spec = (d.left.gens, d.right.gens, d.top.gens, d.bottom.gens, corners)
            try:
                Computad(objects, arrows, proarrows, {n: spec})
            except DicatError as exc:
                raise ElaborationError(str(exc), d.span or NO_SPAN) from None
            squares[n] = spec
        self.computad = Computad(objects, arrows, proarrows, squares, name="doc")
        return free_dc(self.computad)

    # -- declarations
    def _build(self, name: str, d):
        kind = self.kinds[name]
        return getattr(self, "_b_" + kind)(name, d)

    def _b_set(self, name, d: SetDecl):
        from ..rel import FinSet
        return FinSet.of(*d.elements, name=name)

    def set_product(self, factors, span):
        """Tensor of named sets; an undeclared I is the unit set."""
        from ..rel import UNIT_SET, tensor_sets
        sets = [UNIT_SET if f == "I" and f not in self.decls else self.resolve(f, ("set",), span) for f in factors]
        return sets[0] if len(sets) == 1 else tensor_sets(*sets)

    def _b_relation(self, name, d: RelDecl):
        from ..rel import Relation
        src, tgt = self.set_product(d.src, d.span), self.set_product(d.tgt, d.span)
        return Relation.of(src, tgt, d.pairs)

    def _b_function(self, name, d: FunctionDecl):
        from ..rel import Function
        src, tgt = self.set_product(d.src, d.span), self.set_product(d.tgt, d.span)
        wrap = lambda v: v if isinstance(v, tuple) else (v,)
        table: dict = {}
        for a, b in d.mapping:
            if wrap(a) in table and table[wrap(a)] != wrap(b):
                raise ElaborationError(f"function {name}: {a} is mapped twice", d.span)
            table[wrap(a)] = wrap(b)
        extra = [a for a in table if a not in src.elements]
        if extra:
            raise ElaborationError(f"function {name}: {extra[0]} is not in {src}", d.span)
        return Function.from_map(src, tgt, table)

    def _b_category(self, name, d: CategoryDecl):
        from ..fincat import Cat, FinCategory
        arrows = {}
        for f, a, b in d.arrows:
            if f in arrows:
                raise ElaborationError(f"category {name}: duplicate arrow {f}", d.span)
            arrows[f] = (a, b)
        compose = {}
        for f, g, h in d.compose:
            if (f, g) in compose:
                raise ElaborationError(f"category {name}: composite of ({f}, {g}) given twice", d.span)
            compose[(f, g)] = h
        return Cat.of(FinCategory(name, d.objects, arrows, compose))

    def _b_profunctor(self, name, d: ProfunctorDecl):
        from ..fincat import ProarrowList, TableAtom, hom
        if d.hom_of is not None:
            return ProarrowList.of(hom(self.resolve(d.hom_of, ("category",), d.span)))
        src = self.resolve(d.src, ("category",), d.span)
        tgt = self.resolve(d.tgt, ("category",), d.span)
        elements: dict = {}
        for x, a, b in d.elements:
            elements.setdefault((a, b), []).append(x)
        left, right = {}, {}
        for cat, side, arrow in [(src, "left", f) for f, _, _ in d.left] + [(tgt, "right", g) for _, g, _ in d.right]:
            if arrow not in cat.factors[0].cat.ends:
                raise ElaborationError(f"profunctor {name}: {side} action by unknown arrow {arrow}", d.span)
        for f, x, y in d.left:
            if (f, x) in left:
                raise ElaborationError(f"profunctor {name}: left action of {f} on {x} given twice", d.span)
            left[(f, x)] = y
        for x, g, y in d.right:
            if (x, g) in right:
                raise ElaborationError(f"profunctor {name}: right action of {g} on {x} given twice", d.span)
            right[(x, g)] = y
        return ProarrowList.of(TableAtom(name, src, tgt, elements, left, right))

    def _b_functor(self, name, d: FunctorDecl):
        from ..fincat.category import functor_from_tables
        src = self.resolve(d.src, ("category",), d.span)
        tgt = self.resolve(d.tgt, ("category",), d.span)
        base, target = src.factors[0].cat, tgt.factors[0].cat
        omap, amap = {}, {}
        for key, value in d.mapping:
            if isinstance(value, Call):
                (obj,) = value.args
                if obj not in target.objects:
                    raise ElaborationError(f"functor {name}: unknown object {obj} in {d.tgt}", value.span or d.span)
                value = target.ident[obj]
            is_obj, is_arrow = key in base.objects, key in base.ends
            if is_obj and is_arrow:
                raise ElaborationError(f"functor {name}: {key} names both an object and an arrow", d.span)
            if not (is_obj or is_arrow):
                raise ElaborationError(f"functor {name}: {key} is not an object or arrow of {d.src}", d.span)
            table = omap if is_obj else amap
            if key in table:
                raise ElaborationError(f"functor {name}: {key} is mapped twice", d.span)
            table[key] = value
        return functor_from_tables(src, tgt, omap, amap, name=name)

    def _b_object(self, name, d):
        return name

    def _b_arrow(self, name, d):
        return self.dc.arrow(name)

    def _b_proarrow(self, name, d):
        return self.dc.proarrow(name)

    def _b_square(self, name, d):
        return self.dc.generator(name)

    # -- difunctor expressions
    def _seed_difunctors(self):
        if self._difunctors:
            return
        if self.kind == "free":
            self._difunctors["id"] = identity_functor(self.dc)
            return
        folds, (iota, iota_star) = self.folds, self.strips
        d = self.structure
        self._difunctors.update({
            "I": folds.I, "L": folds.L, "R": folds.R, "pi1": iota.source, "pi0 ; dual": iota_star.source,
            "dual": d.dual, "tensor": d.tensor, "id": identity_functor(self.dc),
            "pi0": projection(iota.source.source, 0),
        })

    def difunctor(self, term) -> DFunctor:
        self._seed_difunctors()
        key = show_term(term)
        if key in self._difunctors:
            return self._difunctors[key]
        if isinstance(term, Seq):
            out = self.difunctor(term.parts[0])
            for part in term.parts[1:]:
                out = compose_functors(out, self.difunctor(part))
            self._difunctors[key] = out
            return out
        known = ", ".join(sorted(self._difunctors))
        raise ElaborationError(f"unknown functor {key}; known functors are {known}", term.span or NO_SPAN)

    # -- transformation expressions
    def _args(self, term: Call, counts) -> tuple:
        if len(term.args) not in counts:
            want = " or ".join(map(str, counts))
            raise ElaborationError(f"{term.head} takes {want} argument(s), got {len(term.args)}",
                                   term.span or NO_SPAN)
        return term.args

    def _ref(self, term, kinds):
        if not isinstance(term, Name):
            raise ElaborationError(f"expected the name of a {' or '.join(kinds)}", term.span or NO_SPAN)
        return self.resolve(term.text, kinds, term.span)

    def natural(self, term) -> NaturalTransformation:
        if isinstance(term, Name):
            if term.text in self.decls:
                return self._ref(term, ("natural",))
            if term.text in ("S", "Z"):
                return getattr(self.zigzags, term.text)
            raise ElaborationError(f"unresolved name {term.text}", term.span or NO_SPAN)
        if isinstance(term, Call):
            if term.head == "identity":
                (f,) = self._args(term, (1,))
                return identity_natural(self.difunctor(f))
            if term.head == "compose":
                a, b = self._args(term, (2,))
                return compose_natural(self.natural(a), self.natural(b))
            if term.head == "undummy":
                (a,) = self._args(term, (1,))
                return undummy(self.dinatural(a))
        raise ElaborationError(f"not a natural transformation: {show_term(term)}", term.span or NO_SPAN)

    def dinatural(self, term) -> DinaturalTransformation:
        if isinstance(term, Name):
            if term.text in self.decls:
                return self._ref(term, ("dinatural",))
            kind = normalize_letter(term.text)
            if kind in BUILTIN_DINATURALS:
                iota, iota_star = self.strips
                return {"cap": self.folds.cap, "cup": self.folds.cup, "strip": iota, "costrip": iota_star}[kind]
            raise ElaborationError(f"unresolved name {term.text}", term.span or NO_SPAN)
        if isinstance(term, Call):
            if term.head == "identity":
                (f,) = self._args(term, (1,))
                return diagonal_identity(self.difunctor(f))
            if term.head == "diagonalize":
                args = self._args(term, (1, 2))
                form = 1
                if len(args) == 2:
                    if not (isinstance(args[1], Num) and args[1].value in (1, 2)):
                        raise ElaborationError("the diagonalization form is 1 or 2", args[1].span or term.span)
                    form = args[1].value
                return diagonalize_natural(self.natural(args[0]), form)
            if term.head == "dummy":
                (a,) = self._args(term, (1,))
                return dummy_dinatural(self.natural(a))
            if term.head == "compose":
                a, b = self._args(term, (2,))
                first, second = self.transformation(a), self.transformation(b)
                if isinstance(first, DinaturalTransformation) and isinstance(second, NaturalTransformation):
                    return compose_dinat_nat(first, second)
                if isinstance(first, NaturalTransformation) and isinstance(second, DinaturalTransformation):
                    return compose_nat_dinat(first, second)
                raise ElaborationError("compose needs one dinatural and one natural transformation",
                                       term.span or NO_SPAN)
        raise ElaborationError(f"not a dinatural transformation: {show_term(term)}", term.span or NO_SPAN)

    def transformation(self, term):
        """A natural or dinatural transformation, whichever the term denotes."""
        if isinstance(term, Name) and term.text in self.decls:
            kind = self.kinds[term.text]
            if kind not in ("natural", "dinatural"):
                raise ElaborationError(f"{term.text} is a {kind}, expected a transformation", term.span or NO_SPAN)
            return self.resolve(term.text)
        natural_heads = ("undummy",)
        if (isinstance(term, Name) and term.text in ("S", "Z")) or (isinstance(term, Call)
                                                                  and term.head in natural_heads):
            return self.natural(term)
        return self.dinatural(term)

    def _b_natural(self, name, d: NaturalDecl):
        if d.expr is not None:
            return self.natural(d.expr)
        F, G = self.difunctor(d.source), self.difunctor(d.target)
        if F.source != G.source:
            raise ElaborationError(f"natural {name}: the two functors are not parallel", d.span)
        obj = self._table(name, d, F, G)
        C, D = F.source, F.target

        def arrow(f):
            return D.square(obj(C.arrow_src(f)), obj(C.arrow_tgt(f)), F.arrow(f), G.arrow(f))

        def proarrow(m):
            a, b = C.pro_src(m), C.pro_tgt(m)
            src, tgt = D.procomp(F.proarrow(m), obj(b)), D.procomp(obj(a), G.proarrow(m))
            return D.square(src, tgt, D.id_arrow(src.src), D.id_arrow(src.tgt))
        return NaturalTransformation(F, G, obj, arrow, proarrow, name=name)

    def _b_dinatural(self, name, d: DinaturalDecl):
        if d.expr is not None:
            out = self.dinatural(d.expr)
            if d.orientation and d.orientation != out.orientation:
                out = copy.copy(out)
                out.orientation = d.orientation
            return out
        F, G = self.difunctor(d.source), self.difunctor(d.target)
        if not (isinstance(F.source, Product) and F.source == G.source):
            raise ElaborationError(f"dinatural {name}: needs two parallel difunctors", d.span)
        obj = self._table(name, d, F, G, diagonal=True)
        C, D = F.source.factors[1], F.target

        def arrow(f):
            return D.square(obj(f.src), obj(f.tgt), F.arrow((f, f)), G.arrow((f, f)))

        def proarrow(m):
            src, tgt = disk_boundary(F, G, obj, m, C)
            return D.square(src, tgt, D.id_arrow(src.src), D.id_arrow(src.tgt))
        return DinaturalTransformation(F, G, obj, arrow, proarrow, orientation=d.orientation or "pseudo", name=name)

    def _table(self, name, d, F, G, diagonal: bool = False):
        """Object components given as a thin Rel table, keyed by sets or pairs of sets."""
        if self.kind != "rel":
            raise ElaborationError("explicit component tables are only available in the rel instance", d.span)
        pairs = isinstance(F.source, Product) and not diagonal
        table = {}
        for key, rel_name in d.table:
            if pairs:
                if not (isinstance(key, Tup) and len(key.items) == 2):
                    raise ElaborationError("components are indexed by pairs (A, B)", key.span or d.span)
                obj = tuple(self._ref(k, ("set",)) for k in key.items)
            else:
                obj = self._ref(key, ("set",))
            if obj in table:
                raise ElaborationError(f"component at {show_term(key)} given twice", key.span or d.span)
            rel = self.resolve(rel_name, ("relation",), key.span or d.span)
            src, tgt = (F.obj(obj), G.obj(obj)) if not diagonal else (F.obj((obj, obj)), G.obj((obj, obj)))
            if rel.src != src or rel.tgt != tgt:
                raise ElaborationError(f"{self.kinds[name]} {name}: component at {show_term(key)} "
                                       f"must relate {src} to {tgt}", key.span or d.span)
            table[obj] = rel

        def obj_component(a):
            try:
                return table[a]
            except KeyError:
                raise MissingComponentError(f"{name} has no component at {a}") from None
        return obj_component

    def _b_modification(self, name, d: ModificationDecl):
        t = d.expr
        if isinstance(t, Name):
            if t.text in self.decls:
                return self._ref(t, ("modification",))
            if t.text in ("mu", "nu"):
                return getattr(self.adjoint, t.text)
        if isinstance(t, Call) and t.head == "identity":
            (a,) = self._args(t, (1,))
            return identity_modification(self.natural(a))
        raise ElaborationError(f"not a modification: {show_term(t)}", t.span or d.span)

    def _b_dimodification(self, name, d: DimodificationDecl):
        t = d.expr
        if isinstance(t, Name):
            return self._ref(t, ("dimodification",))
        if isinstance(t, Call) and t.head in ("diagonalize", "dummy"):
            (a,) = self._args(t, (1,))
            mod = self._ref(a, ("modification",)) if isinstance(a, Name) and a.text in self.decls else None
            if mod is None:
                mod = self._b_modification(name, ModificationDecl(name, a, t.span))
            return diagonalize_modification(mod) if t.head == "diagonalize" else dummy_dimodification(mod)
        raise ElaborationError(f"not a dimodification: {show_term(t)}", t.span or d.span)

    def _b_connector(self, name, d: ConnectorDecl):
        spans = d.letter_spans or (d.span,) * len(d.letters)
        for letter, span in zip(d.letters, spans):
            if normalize_letter(letter) not in ("cap", "cup", "strip", "costrip", "braid"):
                raise ElaborationError(f"unknown connector letter {letter}", span or d.span)
        for a in d.args:
            self.object(a, d.span)
        try:
            return tensor_connectors(d.letters, d.args)
        except ConnectorError as exc:
            raise ElaborationError(str(exc), d.span) from None

    def environment(self) -> dict:
        """Object names for connector evaluation."""
        return {n: self.values[n] for n in self.order if self.kinds[n] in OBJECT_KINDS}


def elaborate(doc: Document) -> Workspace:
    return Workspace(doc)


def load(source: str | bytes) -> Workspace:
    return elaborate(parse(source))


__all__ = ["ElaborationError", "Workspace", "elaborate", "load"]
