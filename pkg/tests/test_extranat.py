import itertools

import pytest

from dicat.core import Budget, all_pass, failures
from dicat.dinat import check_dinatural
from dicat.extranat import (AdjointFoldWitness, ConnectorError, Letter, Position, check_adjoint_fold, connector_boundary,
                            eilenberg_kelly_graph, evaluate_connector, fincat_folds, fincat_structure,
                            format_boundary, normalize_letter, rel_folds, rel_structure, tensor_connectors,
                            zigzags, rel_adjoint_fold)
from dicat.fincat.category import chain3, walking_arrow
from dicat.fincat.profunctor import single
from dicat.rel import diagonal, standard_sets, tensor_sets
from dicat.transform import Modification, check_natural

from sampling import SMALL, fincat_world, rel_world


@pytest.fixture(scope="module")
def rel3_folds():
    return rel_folds(rel_structure(3))


def reports_by_id(reports):
    return {r.law_id: r for r in reports}


def test_rel_folds_pass_every_law_group(rel3_folds):
    assert all_pass(rel3_folds.check(SMALL))


def test_fincat_folds_pass_every_law_group():
    folds, *_ = fincat_world()
    assert all_pass(folds.check(SMALL))


@pytest.mark.parametrize("world", ["rel", "fincat"])
def test_blank_cap_and_cup_cases(world):
    folds, *_ = rel_world() if world == "rel" else fincat_world()
    n = len(folds.structure.dc.objects())
    for fold in (folds.cap, folds.cup):
        got = reports_by_id(check_dinatural(fold, SMALL))
        for law in ("dinatural:arrow-identity", "dinatural:proarrow-unit"):
            assert got[law].passed and got[law].checked == n and got[law].exhaustive


def test_rel_cap_and_cup_are_diagonals(rel3_folds):
    for A in rel3_folds.structure.dc.objects():
        assert rel3_folds.cap.obj(A).pairs == {((), a + a) for a in A}
        assert rel3_folds.cup.obj(A).pairs == {(a + a, ()) for a in A}


@pytest.mark.parametrize("cat", [walking_arrow(), chain3()])
def test_fincat_cap_and_cup_count_hom_sets(cat):
    folds = fincat_folds(fincat_structure([cat]))
    A = single(cat)
    cap, cup = folds.cap.obj(A).evaluation, folds.cup.obj(A).evaluation
    for a, b in itertools.product(cat.objects, repeat=2):
        homs = len(cat.homs[(a, b)])
        assert len(cap.classes((), (a, b))) == homs
        assert len(cup.classes((a, b), ())) == homs


def test_rel_zigzags_are_natural_and_evaluate_to_diagonals(rel3_folds):
    z = zigzags(rel3_folds)
    assert all_pass(check_natural(z.S, SMALL)) and all_pass(check_natural(z.Z, SMALL))
    d = rel3_folds.structure
    for A in d.dc.objects():
        assert z.S.obj(A) == diagonal(A)
        assert z.Z.obj(A) == diagonal(d.dual.obj(A))


def test_fincat_zigzags_are_natural():
    _, z, _ = fincat_world()
    assert all_pass(check_natural(z.S, SMALL)) and all_pass(check_natural(z.Z, SMALL))


def test_zigzag_beads_compose_to_the_components():
    for world in (rel_world, fincat_world):
        folds, z, _ = world()
        C = folds.structure.dc
        for m in C.proarrows()[:6]:
            beads = z.S.beads(m)
            assert len(beads) == 4
            assert C.eq(C.hcomp_all(*(cell for _, cell in beads)), z.S.proarrow(m))


def test_fincat_mu_on_the_walking_arrow_is_a_bijection():
    folds, z, witness = fincat_world()
    C = folds.structure.dc
    two = single(walking_arrow())
    disk = witness.mu.obj(two)
    inverse = C.invert(disk)
    assert inverse is not None
    assert C.eq(C.hcomp(disk, inverse), C.id_square_pro(C.boundary(disk).left))
    assert C.eq(C.hcomp(inverse, disk), C.id_square_pro(C.boundary(disk).right))
    # at every object pair the zigzag classes map one-to-one onto the arrows
    table = disk.table()
    left, right = C.boundary(disk).left.evaluation, C.boundary(disk).right.evaluation
    for a, c in itertools.product(two.objects, repeat=2):
        images = [table[(a, c, rep)] for rep in left.classes(a, c)]
        assert len(set(images)) == len(images)
        assert sorted(images, key=repr) == sorted(right.classes(a, c), key=repr)


@pytest.mark.parametrize("world", ["rel", "fincat"])
def test_adjoint_fold_witnesses(world):
    _, _, witness = rel_world() if world == "rel" else fincat_world()
    assert all_pass(check_adjoint_fold(witness, SMALL))


def test_smoothing_with_the_wrong_boundary_is_caught():
    folds, z, witness = fincat_world()
    C = folds.structure.dc
    two = single(walking_arrow())
    mu = witness.mu
    # the identity disk of S 2 is invertible but ends at S 2 instead of the unit of 2
    bogus = Modification(mu.left, mu.right, mu.top, mu.bottom,
                         lambda A: C.id_square_pro(z.S.obj(A)) if A == two else mu.obj(A), name="bogus")
    bad = {r.law_id: r for r in failures(check_adjoint_fold(AdjointFoldWitness(z, bogus, witness.nu), SMALL))}
    assert "adjoint-fold:mu-invertible" not in bad
    assert bad["adjoint-fold:mu:modification:boundaries"].witness["object"] == C.describe(two)


def test_connector_boundary_of_cup_strip_cap():
    word = tensor_connectors(["ε", "ι", "η"], ["A", "B", "C"])
    src, tgt = connector_boundary(word)
    assert src == (Position("A"), Position("A", True), Position("B"))
    assert tgt == (Position("B"), Position("C", True), Position("C"))
    assert format_boundary(src) == "A⊗A*⊗B" and format_boundary(()) == "I"


def test_eilenberg_kelly_pairing():
    word = tensor_connectors(["cup", "strip", "cap"], ["A", "B", "C"])
    assert eilenberg_kelly_graph(word).edge_set() == {
        ("cup", ("src", 0), ("src", 1)), ("strip", ("src", 2), ("tgt", 0)), ("cap", ("tgt", 1), ("tgt", 2))}
    braid = eilenberg_kelly_graph(tensor_connectors(["σ"], ["A", "B"]))
    assert braid.edge_set() == {("braid", ("src", 0), ("tgt", 1)), ("braid", ("src", 1), ("tgt", 0))}


def test_connector_arity_and_letters_are_checked():
    with pytest.raises(ConnectorError):
        tensor_connectors(["cap", "braid"], ["A", "B"])
    with pytest.raises(ConnectorError):
        tensor_connectors(["knot"], ["A"])
    with pytest.raises(ConnectorError):
        Letter("cap", ("A", "B"))
    assert normalize_letter("iota*") == "costrip" and normalize_letter("σ") == "braid"


def test_rel_connector_matches_tuple_enumeration():
    folds = rel_folds(rel_structure(3))
    S1, S2, S3 = standard_sets(3)[1:]
    env = {"A": S2, "B": S3, "C": S1}
    got = evaluate_connector(tensor_connectors(["cup", "strip", "cap"], ["A", "B", "C"]), folds, env)
    assert got.src == tensor_sets(S2, S2, S3) and got.tgt == tensor_sets(S3, S1, S1)
    want = set()
    for a1, a2, b in itertools.product(S2, S2, S3):
        for b2, c1, c2 in itertools.product(S3, S1, S1):
            if a1 == a2 and b == b2 and c1 == c2:
                want.add((a1 + a2 + b, b2 + c1 + c2))
    assert got.pairs == want


def test_fincat_connector_has_the_tensor_boundary():
    folds, *_ = fincat_world()
    d = folds.structure
    two = single(walking_arrow())
    got = evaluate_connector(tensor_connectors(["ε", "ι", "η"], ["A", "B", "C"]), folds,
                             {"A": two, "B": two, "C": two})
    star = d.dual.obj(two)
    assert got.src == d.tensor_objects(two, star, two) and got.tgt == d.tensor_objects(two, star, two)


def test_rel_adjoint_fold_default_construction():
    witness = rel_adjoint_fold()
    assert all_pass(check_adjoint_fold(witness, Budget(per_law=20, squares=10)))
