import random

import pytest
from hypothesis import given, settings, strategies as st

from dicat.core import (Budget, LawReport, LawRun, Product, all_pass, bounded, check_axioms, chains, co,
                        dual_pairing, empty, failures, group_by, singleton)
from dicat.rel import FinSet, Relation, rel_dc, standard_sets

from controls import DroppingRel

SMALL = Budget(per_law=80, squares=60)


@pytest.fixture(scope="module")
def rel2():
    return rel_dc(universe=standard_sets(2))


def test_budget_rng_is_deterministic_per_salt():
    b = Budget(seed=3)
    assert b.rng("x").random() == b.rng("x").random()
    assert b.rng("x").random() != b.rng("y").random()


def test_bounded_keeps_everything_under_the_limit():
    rng = random.Random(0)
    assert bounded(range(5), 10, rng) == ([0, 1, 2, 3, 4], True)
    picked, full = bounded(range(100), 7, rng)
    assert len(picked) == 7 and not full and picked == sorted(picked)


def test_chains_enumerates_composable_triples():
    # arrows are (src, tgt) pairs on objects 0..2
    arrows = [(0, 1), (1, 2), (0, 0), (2, 2)]
    out = group_by(arrows, lambda f: f[0])
    into = group_by(arrows, lambda f: f[1])
    triples, full = chains(out, into, arrows, 100, random.Random(0), lambda f: f[0], lambda f: f[1])
    assert full
    expected = [(x, y, z) for y in arrows for x in arrows for z in arrows if x[1] == y[0] and y[1] == z[0]]
    assert sorted(triples) == sorted(expected)


def test_law_run_records_first_witness_only():
    r = LawRun("demo")
    r.check(True, x=1)
    r.check(False, x=2)
    r.check(False, x=3)
    assert r.report.checked == 3 and r.report.witness == {"x": "2"}
    assert r.report.to_json()["status"] == "fail"


def test_guarded_turns_construction_errors_into_failures(rel2):
    r = LawRun("guarded", rel2.describe)
    S1 = standard_sets(1)[1]
    assert r.guarded(lambda: rel2.procomp(rel2.unit(S1), rel2.unit(standard_sets(2)[2])), m="bad") is None
    assert not r.report.passed and "error" in r.report.witness


def test_rel_axioms(rel2):
    assert all_pass(check_axioms(rel2, SMALL))


def test_co_is_an_involution_on_the_nose(rel2):
    assert co(co(rel2)) is rel2
    assert co(rel2) == co(rel2)


def test_co_swaps_proarrow_direction_and_square_top(rel2):
    C = co(rel2)
    m = next(p for p in rel2.proarrows() if p.src != p.tgt)
    assert C.pro_src(m) == rel2.pro_tgt(m) and C.pro_tgt(m) == rel2.pro_src(m)
    s = rel2.square_sample(50)[7]
    b, cb = rel2.boundary(s), C.boundary(s)
    assert (cb.top, cb.bottom) == (b.bottom, b.top) and (cb.left, cb.right) == (b.left, b.right)


def test_co_and_products_satisfy_the_axioms(rel2):
    assert all_pass(check_axioms(co(rel2), SMALL))
    small = rel_dc(universe=standard_sets(1))
    assert all_pass(check_axioms(dual_pairing(small), SMALL))


def test_product_acts_componentwise(rel2):
    P = Product(rel2, co(rel2))
    m = rel2.proarrows()[5]
    n = rel2.proarrows()[9]
    assert P.pro_src((m, n)) == (rel2.pro_src(m), rel2.pro_tgt(n))


def test_singleton_and_empty():
    assert all_pass(check_axioms(singleton()))
    reports = check_axioms(empty())
    assert all_pass(reports) and all(r.checked == 0 for r in reports)


def test_corrupted_composition_is_caught_with_a_witness():
    broken = DroppingRel(standard_sets(2))
    bad = failures(check_axioms(broken, SMALL))
    assert "proarrow-unit" in {r.law_id for r in bad}
    witness = next(r for r in bad if r.law_id == "proarrow-unit").witness
    assert set(witness) == {"lhs", "rhs", "m"} and witness["lhs"] != witness["rhs"]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=9))
def test_relation_converse_is_involutive(pairs):
    S = FinSet.of(0, 1, 2)
    r = Relation.of(S, S, pairs)
    assert r.converse().converse() == r


def test_law_report_json_shape():
    rep = LawReport("x", checked=2)
    assert rep.to_json() == {"law_id": "x", "checked": 2, "status": "pass", "exhaustive": True}
