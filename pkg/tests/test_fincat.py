import random

import pytest
from hypothesis import given, settings, strategies as st

from dicat.core import Budget, ConstructionError, all_pass, check_axioms
from dicat.fincat.category import (FinCategory, all_functors, chain3, idempotent, involution, parallel_pair,
                                   terminal_category, walking_arrow)
from dicat.fincat.instance import fincat_dc, random_profunctor
from dicat.fincat.monoidal import fincat_dual, fincat_monoidal
from dicat.fincat.profunctor import ProarrowList, TableAtom, check_well_defined, compose_proarrows, hom, single
from dicat.functor import check_functor

from oracles import library_partition, oracle_partition

CATS = [single(walking_arrow()), single(chain3()), single(walking_arrow(), True), single(chain3(), True)]


def random_list(rng, length):
    cats = [rng.choice(CATS) for _ in range(length + 1)]
    return [random_profunctor(rng, cats[i], cats[i + 1], rng.randint(1, 3), f"P{i}") for i in range(length)]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 3))
def test_coend_classes_match_the_fixpoint_oracle(seed, length):
    atoms = random_list(random.Random(seed), length)
    plist = ProarrowList.of(*atoms)
    ev = plist.evaluation
    for a, c in ev.all_pairs():
        assert library_partition(ev, a, c) == oracle_partition(atoms, a, c)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_actions_on_classes_are_well_defined(seed):
    atoms = random_list(random.Random(seed), 2)
    assert check_well_defined(ProarrowList.of(*atoms)) == []


def test_composition_is_concatenation_so_strictly_associative():
    rng = random.Random(4)
    P, Q, R = (ProarrowList.of(x) for x in random_list(rng, 3))
    assert compose_proarrows(compose_proarrows(P, Q), R) == compose_proarrows(P, compose_proarrows(Q, R))


def test_composing_with_hom_preserves_cardinalities():
    # P ; Hom_B and P have the same number of elements at every pair
    rng = random.Random(11)
    for _ in range(10):
        P = random_list(rng, 1)[0]
        ev = ProarrowList.of(P, hom(P.tgt)).evaluation
        for a, c in ev.all_pairs():
            assert len(ev.classes(a, c)) == len(P.elements(a, c))


def test_category_tables_are_validated():
    with pytest.raises(ConstructionError, match="missing"):
        FinCategory("bad", [0, 1, 2], {"a": (0, 1), "b": (1, 2)})
    with pytest.raises(ConstructionError, match="associative"):
        FinCategory("bad", ["*"], {"e": ("*", "*"), "z": ("*", "*")},
                    {("e", "e"): "e", ("z", "z"): "1*", ("e", "z"): "e", ("z", "e"): "z"})


def test_functor_counts():
    two, three = single(walking_arrow()), single(chain3())
    assert len(all_functors(two, two)) == 3
    assert len(all_functors(three, two)) == 4
    assert len(all_functors(single(involution()), single(involution()))) == 2


def test_non_functorial_table_profunctor_names_the_arrows():
    two = single(walking_arrow())
    with pytest.raises(ConstructionError, match="u"):
        TableAtom("P", two, two, {(0, 1): ["x"], (1, 1): ["y"]}, left={("u", "y"): "y"})


def test_fincat_axioms_on_small_categories():
    dc = fincat_dc([terminal_category(), walking_arrow(), parallel_pair(), idempotent()])
    assert all_pass(check_axioms(dc, Budget(per_law=60, squares=40)))


def test_tensor_and_dual_are_functors():
    dc = fincat_dc([terminal_category(), walking_arrow()])
    mon = fincat_monoidal(dc)
    assert all_pass(check_functor(mon.tensor, Budget(per_law=30, squares=20)))
    assert all_pass(check_functor(fincat_dual(dc), Budget(per_law=30, squares=20)))


def test_left_action_that_breaks_composition_is_rejected():
    three, point = single(chain3()), single(terminal_category())
    elements = {(0, "*"): ["x0", "y0"], (1, "*"): ["x1"], (2, "*"): ["x2"]}
    left = {("a", "x1"): "x0", ("b", "x2"): "x1", ("c", "x2"): "y0"}
    with pytest.raises(ConstructionError, match="not functorial"):
        TableAtom("P", three, point, elements, left=left)
    left[("c", "x2")] = "x0"
    assert TableAtom("P", three, point, elements, left=left).act(("c",), "x2", ("1*",)) == "x0"
