import pytest

from dicat.core import Budget, CompositionError, all_pass, failures
from dicat.fincat.category import involution
from dicat.fincat.profunctor import single
from dicat.rel import Relation
from dicat.transform import (Modification, check_arrow_natural, check_modification,
                             check_natural, check_strict_natural, compose_natural, identity_arrow_natural,
                             identity_modification, identity_natural, yang_baxter_check)

from controls import twisted_identity
from sampling import SMALL, fincat_world, rel_world, sampled_naturals


@pytest.mark.parametrize("world", ["rel", "fincat"])
def test_sampled_naturals_pass(world):
    for alpha in sampled_naturals(world):
        bad = failures(check_natural(alpha, SMALL))
        assert not bad, (alpha.name, bad[0].law_id, bad[0].witness)


@pytest.mark.parametrize("world", ["rel", "fincat"])
def test_yang_baxter_sides_agree(world):
    for alpha in sampled_naturals(world):
        P = alpha.domain
        first, second = P.factors
        for p in first.proarrows()[:3]:
            for m in second.proarrows()[:3]:
                assert yang_baxter_check(alpha, p, m).passed, alpha.name


def test_yang_baxter_needs_a_product_domain():
    folds, z, _ = rel_world()
    A = folds.structure.dc.objects()[1]
    with pytest.raises(CompositionError):
        yang_baxter_check(z.S, folds.structure.dc.unit(A), folds.structure.dc.unit(A))


def test_identities_are_strict_and_zigzags_are_not_identities_on_objects():
    folds, z, _ = fincat_world()
    assert check_strict_natural(identity_natural(folds.L), SMALL).passed
    C = folds.structure.dc
    A = C.objects()[1]
    assert z.S.obj(A) != C.unit(A)


def test_compose_requires_consecutive_naturals():
    folds, *_ = rel_world()
    with pytest.raises(CompositionError):
        compose_natural(identity_natural(folds.L), identity_natural(folds.R))


def test_identity_modification_and_arrow_natural():
    folds, *_ = rel_world()
    gamma = identity_natural(folds.L)
    assert all_pass(check_modification(identity_modification(gamma), SMALL))
    assert all_pass(check_arrow_natural(identity_arrow_natural(folds.L), SMALL))


@pytest.mark.parametrize("world", ["rel", "fincat"])
def test_adjoint_fold_smoothings_are_modifications(world):
    _, _, witness = rel_world() if world == "rel" else fincat_world()
    for mod in (witness.mu, witness.nu):
        assert all_pass(check_modification(mod, SMALL)), mod.name


def test_twisted_unit_disk_is_caught():
    dc, twist, broken = twisted_identity()
    assert dc.invert(twist) is not None and twist != dc.id_square_pro(dc.unit(single(involution())))
    bad = {r.law_id: r for r in failures(check_natural(broken, Budget(per_law=40, squares=30)))}
    assert "natural:proarrow-unit" in bad
    assert "natural:boundaries" not in bad and "natural:invertible-disks" not in bad
    assert bad["natural:proarrow-unit"].witness["object"] == dc.describe(single(involution()))


def test_wrong_modification_component_is_caught():
    folds, z, witness = rel_world()
    C = folds.structure.dc
    mu = witness.mu
    A = C.objects()[2]
    full = Relation.of(A, A, [(x, y) for x in A for y in A])
    broken = Modification(mu.left, mu.right, mu.top, mu.bottom,
                          lambda X: C.id_square_pro(full) if X == A else mu.obj(X), name="broken")
    bad = failures(check_modification(broken, SMALL))
    assert bad and bad[0].law_id == "modification:boundaries"
    assert bad[0].witness["object"] == C.describe(A)
