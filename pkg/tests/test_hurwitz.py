"""Braid moves, group-action laws, and orbit transitivity."""

from __future__ import annotations

import itertools

import pytest

from coxfact.factorizations import (
    as_factorization,
    enumerate_red,
    passport_census,
    primitive_count,
    reduced_count_formula,
)
from coxfact.flats import intersection_lattice
from coxfact.groups import GroupElement, build_group, product_of
from coxfact.hurwitz import (
    HurwitzMove,
    hurwitz_move,
    hurwitz_orbit,
    move_tuple,
    orbit_census,
    primitive_type_transitivity,
)


def test_move_example_s3():
    W = build_group(1, 1, 3)
    s01 = GroupElement((1, 0, 2), (0, 0, 0), 1)
    s12 = GroupElement((0, 2, 1), (0, 0, 0), 1)
    s02 = GroupElement((2, 1, 0), (0, 0, 0), 1)
    moved = move_tuple((s01, s12), 1, forward=True)
    assert moved == (s12, s02)
    assert product_of(*moved) == product_of(s01, s12)


def test_move_inverse_roundtrip():
    W = build_group(2, 1, 3)
    for fact in enumerate_red(W)[:10]:
        for i in (1, 2):
            assert move_tuple(move_tuple(fact, i, True), i, False) == fact
            assert move_tuple(move_tuple(fact, i, False), i, True) == fact


def test_move_preserves_product_and_multiset_of_classes():
    W = build_group(3, 3, 3)
    c = W.coxeter_element()
    for fact in enumerate_red(W):
        for i in (1, 2):
            moved = move_tuple(fact, i)
            assert product_of(*moved) == c


def test_move_index_errors():
    W = build_group(1, 1, 3)
    fact = enumerate_red(W)[0]
    with pytest.raises(ValueError):
        move_tuple(fact, 0)
    with pytest.raises(ValueError):
        move_tuple(fact, 2)


def test_braid_relation_sweep():
    W = build_group(1, 1, 4)
    refl = W.reflections

    def forward(seq, i):
        return move_tuple(seq, i, True)

    for triple in itertools.product(refl, repeat=3):
        lhs = forward(forward(forward(triple, 1), 2), 1)
        rhs = forward(forward(forward(triple, 2), 1), 2)
        assert lhs == rhs


def test_commutation_of_distant_moves():
    W = build_group(1, 1, 5)
    for fact in enumerate_red(W)[:40]:
        a = move_tuple(move_tuple(fact, 1), 3)
        b = move_tuple(move_tuple(fact, 3), 1)
        assert a == b


def test_hurwitz_move_on_factorization_type():
    W = build_group(1, 1, 4)
    fact = as_factorization(W, enumerate_red(W)[0])
    moved = hurwitz_move(W, fact, HurwitzMove(1))
    assert moved.lengths == (1, 1, 1)
    back = hurwitz_move(W, moved, HurwitzMove(1, forward=False))
    assert back == fact


@pytest.mark.parametrize("d,r,n", [(1, 1, 3), (1, 1, 4), (2, 1, 2), (2, 1, 3), (3, 3, 3), (5, 5, 2)])
def test_reduced_orbit_is_everything(d, r, n):
    W = build_group(d, r, n)
    red = enumerate_red(W)
    orbit = hurwitz_orbit(W, red[0])
    assert orbit == frozenset(red)
    assert len(orbit) == reduced_count_formula(W)


def test_orbit_census_s4_pairpair():
    W = build_group(1, 1, 4)
    rec = orbit_census(W, ("A1xA1", "A1"))
    assert rec["class_size"] == 4
    assert rec["num_orbits"] == 1
    assert rec["orbit_sizes"] == (4,)

    rec = orbit_census(W, ("A2", "A1"))
    assert rec["class_size"] == 8
    assert rec["num_orbits"] == 1


def test_orbit_census_unrealized_passport():
    W = build_group(1, 1, 4)
    with pytest.raises(ValueError):
        orbit_census(W, ("A2", "A2"))


def test_orbit_census_trivial_passport():
    W = build_group(1, 1, 4)
    rec = orbit_census(W, ("A3",))
    assert rec == {
        "passport": ("A3",),
        "class_size": 1,
        "num_orbits": 1,
        "orbit_sizes": (1,),
    }


def test_orbit_sizes_sum_to_class_size():
    W = build_group(2, 1, 2)
    for passport in passport_census(W):
        rec = orbit_census(W, passport)
        assert sum(rec["orbit_sizes"]) == rec["class_size"]


def test_primitive_transitivity_s4():
    W = build_group(1, 1, 4)
    for orb in intersection_lattice(W).orbits:
        rec = primitive_type_transitivity(W, orb)
        assert rec["transitive"] is True
        assert rec["primitive_members"] == rec["primitive_count"]
        assert rec["primitive_members"] == primitive_count(W, orb)["count"]


def test_primitive_transitivity_includes_identity_padded_class():
    # the full-space orbit pads reduced factorizations with an identity slot
    W = build_group(1, 1, 3)
    rec = primitive_type_transitivity(W, "V")
    assert rec["transitive"] is True
    assert rec["primitive_count"] == 3
    # identity can sit in any of the three slots of any reduced tuple
    assert rec["orbit_size"] == 9
