import random

import pytest
from hypothesis import given, settings, strategies as st

from dicat.core import Budget, ConstructionError, all_pass, check_axioms, failures
from dicat.free import Computad, GridSquare, free_dc, free_functor, normalize, random_computad
from dicat.functor import check_functor
from dicat.rel import Relation, rel_dc, standard_sets


@pytest.fixture(scope="module")
def loop():
    """One object, an endo-arrow f, an endo-proarrow p and two squares p => p along f."""
    G = Computad(["X"], {"f": ("X", "X")}, {"p": ("X", "X")},
                 {"s": (["p"], ["p"], ["f"], ["f"]), "t": (["p"], ["p"], ["f"], ["f"])})
    return free_dc(G)


@settings(max_examples=6, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_computads_satisfy_the_axioms(seed):
    dc = free_dc(random_computad(random.Random(seed)))
    assert all_pass(check_axioms(dc, Budget(per_law=40, squares=30)))


def test_generators_are_distinct_cells(loop):
    assert not loop.eq(loop.generator("s"), loop.generator("t"))
    assert loop.boundary(loop.generator("s")) == loop.boundary(loop.generator("t"))


def test_interchange_of_a_two_by_two_block(loop):
    s, t = loop.generator("s"), loop.generator("t")
    rows = loop.vcomp(loop.hcomp(s, t), loop.hcomp(t, s))
    cols = loop.hcomp(loop.vcomp(s, t), loop.vcomp(t, s))
    assert loop.eq(rows, cols)
    # the two diagonals are different words
    assert not loop.eq(loop.hcomp(s, t), loop.hcomp(t, s))


def test_identity_squares_are_units(loop):
    s = loop.generator("s")
    b = loop.boundary(s)
    assert loop.eq(loop.hcomp(loop.id_square_pro(b.left), s), s)
    assert loop.eq(loop.vcomp(s, loop.id_square_arrow(b.bottom)), s)


def test_scalar_generators_are_rejected():
    with pytest.raises(ConstructionError):
        Computad(["X"], squares={"z": ([], [], [], [])})


def test_ill_typed_generators_are_rejected():
    with pytest.raises(ConstructionError):
        Computad(["X", "Y"], {"f": ("X", "Z")})
    with pytest.raises(ConstructionError):
        Computad(["X", "Y"], {"f": ("X", "Y")}, {"p": ("X", "X")}, {"s": (["p"], ["p"], ["f"], [])})


def test_normalize_drops_identity_rows_and_columns(loop):
    s = loop.generator("s")
    b = loop.boundary(s)
    filler = loop.id_square_arrow(b.bottom)
    grid = GridSquare(loop, [[s], [filler]])
    small = normalize(grid)
    assert small.shape == (1, 1)
    assert loop.eq(small.to_square(), grid.to_square())


def test_free_functor_into_rel_preserves_composites(loop):
    rel = rel_dc(universe=standard_sets(2))
    S2 = standard_sets(2)[2]
    flip = next(f for f in rel.arrows() if f.src == f.tgt == S2 and f.table == ((2,), (1,)))
    full = Relation.of(S2, S2, [(x, y) for x in (1, 2) for y in (1, 2)])
    sq = rel.square(full, full, flip, flip)
    F = free_functor(loop, rel, {"X": S2}, {"f": flip}, {"p": full}, {"s": sq, "t": sq})
    assert all_pass(check_functor(F, Budget(per_law=40, squares=30)))
    s = loop.generator("s")
    assert rel.eq(F.square(loop.hcomp(s, s)), rel.hcomp(sq, sq))


def test_a_functor_that_forgets_the_order_of_generators_is_not_injective(loop):
    # sanity check for the negative controls: equal images do not imply equal cells
    rel = rel_dc(universe=standard_sets(1))
    S1 = standard_sets(1)[1]
    ident = rel.id_arrow(S1)
    unit = rel.unit(S1)
    sq = rel.id_square_pro(unit)
    F = free_functor(loop, rel, {"X": S1}, {"f": ident}, {"p": unit}, {"s": sq, "t": sq})
    s, t = loop.generator("s"), loop.generator("t")
    assert rel.eq(F.square(s), F.square(t)) and not loop.eq(s, t)
    assert not failures(check_functor(F, Budget(per_law=20, squares=20)))
