"""Corrupted inputs for every checker, each paired with the law it must trip.

A control returns the checker's reports, the law id that has to fail and a
predicate on that report's witness naming the corrupted cell.
"""
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from dicat.core import Budget, check_axioms
from dicat.dinat import (DinaturalTransformation, Dimodification, check_dimodification, check_dinatural,
                         dummy_dimodification, same_components)
from dicat.dsl import load
from dicat.extranat import AdjointFoldWitness, check_adjoint_fold
from dicat.fincat.category import involution, terminal_category, walking_arrow
from dicat.fincat.instance import fincat_dc, make_square
from dicat.fincat.profunctor import single
from dicat.functor import DFunctor, check_functor, identity_functor
from dicat.rel import UNIT_SET, Rel, Relation, standard_sets
from dicat.transform import Modification, NaturalTransformation, check_modification, check_natural, identity_natural

from sampling import SMALL, fincat_world, rel_world

BUDGET = Budget(per_law=60, squares=40)


@dataclass
class Control:
    name: str
    reports: list
    law_id: str
    witness_ok: Callable[[dict], bool]

    def failing(self):
        return next((r for r in self.reports if r.law_id == self.law_id and not r.passed), None)

    def caught(self) -> bool:
        r = self.failing()
        return r is not None and r.witness is not None and self.witness_ok(r.witness)


class DroppingRel(Rel):
    """Composition silently loses one pair of every composite with at least two."""

    def procomp(self, m, n):
        out = super().procomp(m, n)
        if len(out.pairs) >= 2:
            return Relation(out.src, out.tgt, frozenset(sorted(out.pairs)[1:]))
        return out


def axioms_control() -> Control:
    broken = DroppingRel(standard_sets(2))
    honest = Rel(standard_sets(2))

    def ok(w):
        # the named relation really is changed by composing with a unit
        m = next(r for r in honest.proarrows() if honest.describe(r) == w["m"])
        return len(m.pairs) >= 2 and broken.procomp(broken.unit(m.src), m) != m
    return Control("axioms", check_axioms(broken, BUDGET), "proarrow-unit", ok)


def functor_control() -> Control:
    folds, *_ = rel_world()
    C = folds.structure.dc
    A = C.objects()[2]
    ident = identity_functor(C)
    bent = DFunctor(C, C, ident.obj, ident.arrow, lambda m: full_relation(A) if m == C.unit(A) else m, ident.square,
                    name="bent")
    return Control("functor", check_functor(bent, BUDGET), "functor:identities",
                   lambda w: w.get("object") == C.describe(A))


def twisted_identity():
    """id on FinCat over Z2 with the unit disk at Z2 replaced by post-composition with z."""
    dc = fincat_dc([terminal_category(), involution()])
    Z = single(involution())
    unit = dc.unit(Z)
    ident = dc.id_arrow(Z)
    twist = make_square(unit, unit, ident, ident, lambda a, c, h: Z.comp(h, ("z",)))
    alpha = identity_natural(identity_functor(dc))
    broken = NaturalTransformation(alpha.source, alpha.target, alpha.obj, alpha.arrow,
                                   lambda m: twist if m == unit else alpha.proarrow(m), name="twisted")
    return dc, twist, broken


def natural_control() -> Control:
    dc, _, broken = twisted_identity()
    Z = single(involution())
    return Control("natural", check_natural(broken, Budget(per_law=40, squares=30)), "natural:proarrow-unit",
                   lambda w: w.get("object") == dc.describe(Z))


def full_relation(A):
    return Relation.of(A, A, [(x, y) for x in A for y in A])


def modification_control() -> Control:
    folds, z, witness = rel_world()
    C = folds.structure.dc
    mu = witness.mu
    A = C.objects()[2]
    broken = Modification(mu.left, mu.right, mu.top, mu.bottom,
                          lambda X: C.id_square_pro(full_relation(A)) if X == A else mu.obj(X), name="broken")
    return Control("modification", check_modification(broken, SMALL), "modification:boundaries",
                   lambda w: w.get("object") == C.describe(A))


def bent_cap():
    """The Rel cap with its component at a two-element set replaced by every pair."""
    folds, *_ = rel_world()
    cap = folds.cap
    d = folds.structure
    A = d.dc.objects()[2]
    AA = d.tensor_objects(A, A)
    full = Relation(UNIT_SET, AA, frozenset(((), x) for x in AA))
    bent = DinaturalTransformation(cap.source, cap.target, lambda X: full if X == A else cap.obj(X),
                                   cap.arrow, cap.proarrow, name="bent")
    return bent, d.dc.describe(A)


def dinatural_identity_control() -> Control:
    bent, A = bent_cap()
    return Control("dinatural arrow identity", check_dinatural(bent, SMALL), "dinatural:arrow-identity",
                   lambda w: w.get("object") == A)


def broken_fixture():
    text = resources.files("dicat.fixtures").joinpath("broken.dicat").read_text(encoding="utf-8")
    return load(text).values["bad"]


def _moves_onto_two(described) -> bool:
    """A function in the witness sends something to 2, so it needs the missing pair (2, 2)."""
    return any(y == "2" for _, y in described["function"])


def dinatural_group_controls() -> list[Control]:
    bad = broken_fixture()
    reports = check_dinatural(bad, Budget())
    return [
        Control("dinatural boundaries", reports, "dinatural:boundaries",
                lambda w: "arrow" in w and _moves_onto_two(w["arrow"])),
        Control("dinatural arrow composition", reports, "dinatural:arrow-composition",
                lambda w: _moves_onto_two(w["g"]) or _moves_onto_two(w["f"])),
        Control("dinatural proarrow composition", reports, "dinatural:proarrow-composition",
                lambda w: {"m", "n"} <= set(w) and "error" in w),
        Control("dinatural square naturality", reports, "dinatural:square-naturality",
                lambda w: _moves_onto_two(w["square"]["square"]["top"])),
    ]


def dimodification_control() -> Control:
    folds, z, witness = rel_world()
    good = dummy_dimodification(witness.mu)
    C = good.base
    A = C.objects()[2]
    broken = Dimodification(good.left, good.right, good.top, good.bottom,
                            lambda X: C.id_square_pro(full_relation(A)) if X == A else good.obj(X),
                            name="broken")
    return Control("dimodification", check_dimodification(broken, SMALL), "dimodification:boundaries",
                   lambda w: w.get("object") == C.describe(A))


def same_components_control() -> Control:
    folds, *_ = rel_world()
    cap = folds.cap
    C = folds.structure.dc
    A = C.objects()[1]
    other = DinaturalTransformation(cap.source, cap.target,
                                    lambda X: C.unit(C.objects()[0]) if X == A else cap.obj(X),
                                    cap.arrow, cap.proarrow, name="other")
    return Control("dinatural-natural laws", [same_components(cap, other, SMALL, "dinat-nat:demo")],
                   "dinat-nat:demo", lambda w: w.get("object") == C.describe(A))


def adjoint_fold_control() -> Control:
    folds, z, witness = fincat_world()
    C = folds.structure.dc
    two = single(walking_arrow())
    mu = witness.mu
    bogus = Modification(mu.left, mu.right, mu.top, mu.bottom,
                         lambda A: C.id_square_pro(z.S.obj(A)) if A == two else mu.obj(A), name="bogus")
    reports = check_adjoint_fold(AdjointFoldWitness(z, bogus, witness.nu), SMALL)
    # the identity disk of S 2 is invertible but ends at S 2 instead of the unit of 2
    return Control("adjoint fold", reports, "adjoint-fold:mu:modification:boundaries",
                   lambda w: w.get("object") == C.describe(two))


def all_controls() -> list[Control]:
    out = [axioms_control(), functor_control(), natural_control(), modification_control(),
           dinatural_identity_control()]
    out += dinatural_group_controls()
    out += [dimodification_control(), same_components_control(), adjoint_fold_control()]
    return out

