import pytest

from dicat.core import Budget, CompositionError, ConstructionError, all_pass, failures
from dicat.dinat import (ArrowDimensionDinaturalError, DinaturalTransformation, arrow_dimension_dinatural,
                         check_dimodification, check_dinat_nat_laws, check_dinatural, compose_dinat_nat,
                         compose_nat_dinat, diagonalize_modification, diagonalize_natural,
                         dummy_dimodification, dummy_dinatural, same_components, undummy)
from dicat.rel import UNIT_SET, Relation
from dicat.transform import identity_modification, identity_natural

from sampling import SMALL, agree, fincat_chains, fincat_world, plain_naturals, rel_chains, rel_world, sampled_naturals


@pytest.mark.parametrize("world", ["rel", "fincat"])
def test_diagonalized_samples_are_dinatural(world):
    for alpha in sampled_naturals(world):
        for form in (1, 2):
            bad = failures(check_dinatural(diagonalize_natural(alpha, form), SMALL))
            assert not bad, (alpha.name, form, bad[0].law_id, bad[0].witness)


@pytest.mark.parametrize("world", ["rel", "fincat"])
def test_both_diagonalization_forms_agree(world):
    for alpha in sampled_naturals(world):
        one, two = diagonalize_natural(alpha, 1), diagonalize_natural(alpha, 2)
        assert same_components(one, two, SMALL, "forms").passed, alpha.name


@pytest.mark.parametrize("world", ["rel", "fincat"])
def test_dummy_and_undummy_are_inverse(world):
    for alpha in plain_naturals(world):
        beta = dummy_dinatural(alpha)
        assert all_pass(check_dinatural(beta, SMALL)), alpha.name
        back = undummy(beta)
        assert back.source is alpha.source and back.target is alpha.target
        assert agree(back, alpha, alpha.domain, alpha.codomain)
        again = dummy_dinatural(back)
        assert agree(again, beta, beta.base, beta.codomain)


def test_undummy_rejects_non_dummy_dinaturals():
    folds, *_ = rel_world()
    with pytest.raises(CompositionError):
        undummy(folds.cap)


@pytest.mark.parametrize("world", ["rel", "fincat"])
def test_dinatural_natural_composition_laws(world):
    for alpha, before, after in (rel_chains() if world == "rel" else fincat_chains()):
        reports = check_dinat_nat_laws(alpha, before, after, SMALL)
        assert len(reports) == 5 + 2 * len(before + after)
        bad = failures(reports)
        assert not bad, (alpha.name, bad[0].law_id, bad[0].witness)


def test_composites_are_dinatural():
    for alpha, before, after in rel_chains() + fincat_chains():
        assert all_pass(check_dinatural(compose_dinat_nat(alpha, after[0]), SMALL))
        assert all_pass(check_dinatural(compose_nat_dinat(before[-1], alpha), SMALL))


def test_dimodifications_from_modifications():
    for world in (rel_world, fincat_world):
        folds, z, witness = world()
        mu = identity_modification(identity_natural(folds.L))
        assert all_pass(check_dimodification(diagonalize_modification(mu), SMALL))
        assert all_pass(check_dimodification(dummy_dimodification(witness.mu), SMALL))


def test_corrupted_dinatural_is_caught_per_group():
    folds, *_ = rel_world()
    cap = folds.cap
    d = folds.structure
    A = d.dc.objects()[2]
    AA = d.tensor_objects(A, A)
    full = Relation(UNIT_SET, AA, frozenset(((), x) for x in AA))
    bent = DinaturalTransformation(cap.source, cap.target, lambda X: full if X == A else cap.obj(X),
                                   cap.arrow, cap.proarrow, name="bent")
    reports = {r.law_id: r for r in check_dinatural(bent, SMALL)}
    assert not reports["dinatural:boundaries"].passed
    assert not reports["dinatural:arrow-identity"].passed
    assert reports["dinatural:arrow-identity"].witness["object"] == d.dc.describe(A)


def test_same_components_reports_the_differing_cell():
    folds, *_ = rel_world()
    cap = folds.cap
    C = folds.structure.dc
    A = C.objects()[1]
    other = DinaturalTransformation(cap.source, cap.target,
                                    lambda X: C.unit(C.objects()[0]) if X == A else cap.obj(X),
                                    cap.arrow, cap.proarrow, name="other")
    rep = same_components(cap, other, SMALL, "demo")
    assert not rep.passed and rep.witness["object"] == C.describe(A)


def test_arrow_dimension_dinaturals_are_declined():
    with pytest.raises(ArrowDimensionDinaturalError):
        arrow_dimension_dinatural()


def test_orientation_is_validated():
    folds, *_ = rel_world()
    with pytest.raises(ValueError):
        DinaturalTransformation(folds.I, folds.L, folds.cap.obj, folds.cap.arrow, folds.cap.proarrow,
                                orientation="sideways")


def test_non_difunctor_cannot_be_diagonalized():
    folds, z, _ = rel_world()
    with pytest.raises(CompositionError):
        diagonalize_natural(z.S)


def test_construction_errors_are_reported_not_raised():
    folds, *_ = rel_world()
    cap = folds.cap

    def explode(m):
        raise ConstructionError("no such disk")
    broken = DinaturalTransformation(cap.source, cap.target, cap.obj, cap.arrow, explode, name="explode")
    reports = {r.law_id: r for r in check_dinatural(broken, Budget(per_law=10, squares=10))}
    assert reports["dinatural:boundaries"].witness["error"] == "no such disk"
