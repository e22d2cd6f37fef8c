"""The braid-group action on factorization tuples by adjacent twist moves.

A forward move at slot i replaces (g_i, g_{i+1}) by
(g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}) and the inverse move undoes it; both
preserve the left-to-right product.  Orbits are closed under moves in both
directions at every slot.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .factorizations import (
    Factorization,
    as_factorization,
    enumerate_block,
    passport_census,
    primitive_count,
    primitive_factorizations,
)
from .flats import flat_of, intersection_lattice
from .groups import GroupElement, ReflectionGroup, compose, conjugate, inverse

__all__ = [
    "HurwitzMove",
    "OrbitOverflowError",
    "hurwitz_move",
    "hurwitz_orbit",
    "move_tuple",
    "orbit_census",
    "primitive_type_transitivity",
]

MAX_ORBIT = 10**7


class OrbitOverflowError(RuntimeError):
    """Breadth-first orbit closure exceeded the tuple cap."""


@dataclass(frozen=True)
class HurwitzMove:
    index: int  # 1-based slot, acting on positions index and index+1
    forward: bool = True


def move_tuple(factors, index: int, forward: bool = True):
    """Apply one braid move to a plain factor tuple (1-based index)."""
    k = len(factors)
    if not 1 <= index <= k - 1:
        raise ValueError(f"move index {index} out of range for a {k}-tuple")
    i = index - 1
    a, b = factors[i], factors[i + 1]
    if forward:
        pair = (b, conjugate(a, b))
    else:
        pair = (compose(compose(a, b), inverse(a)), a)
    return factors[:i] + pair + factors[i + 2 :]


def hurwitz_move(W: ReflectionGroup, fact, move: HurwitzMove):
    """Braid move on a Factorization (or raw tuple), preserving the type."""
    if isinstance(fact, Factorization):
        moved = move_tuple(fact.factors, move.index, move.forward)
        return as_factorization(W, moved)
    return move_tuple(tuple(fact), move.index, move.forward)


def hurwitz_orbit(W: ReflectionGroup, fact) -> frozenset:
    """BFS closure of a factor tuple under all moves, both directions."""
    if isinstance(fact, Factorization):
        fact = fact.factors
    start = tuple(fact)
    seen = {start}
    frontier = [start]
    while frontier:
        new = []
        for t in frontier:
            for i in range(1, len(t)):
                for forward in (True, False):
                    moved = move_tuple(t, i, forward)
                    if moved not in seen:
                        seen.add(moved)
                        new.append(moved)
        if len(seen) > MAX_ORBIT:
            raise OrbitOverflowError(f"orbit exceeded {MAX_ORBIT} tuples")
        frontier = new
    return frozenset(seen)


def _census_class(W: ReflectionGroup, passport) -> tuple:
    """All block factorizations whose unordered passport matches."""
    key = tuple(sorted(passport))
    census = passport_census(W)
    if key not in census:
        raise ValueError(f"passport {key} is not realized")
    lattice = intersection_lattice(W)
    codims = sorted(W.rank - lattice.orbit_named(name).dim for name in key)
    members = []
    for comp in sorted(set(itertools.permutations(codims))):
        for fact in enumerate_block(W, comp):
            labels = tuple(
                sorted(lattice.orbit_of(flat_of(f)).pretty_name for f in fact)
            )
            if labels == key:
                members.append(fact)
    if len(members) != census[key]["total"]:
        raise AssertionError("census class reconstruction lost factorizations")
    return tuple(members)


def orbit_census(W: ReflectionGroup, passport) -> dict:
    """Partition the factorizations with a given passport into braid orbits."""
    members = _census_class(W, passport)
    remaining = set(members)
    sizes = []
    while remaining:
        seed = min(remaining)
        orbit = hurwitz_orbit(W, seed)
        if not orbit <= set(members):
            raise AssertionError("braid orbit escaped its passport class")
        sizes.append(len(orbit))
        remaining -= orbit
    return {
        "passport": tuple(sorted(passport)),
        "class_size": len(members),
        "num_orbits": len(sizes),
        "orbit_sizes": tuple(sorted(sizes)),
    }


def primitive_type_transitivity(W: ReflectionGroup, orbit) -> dict:
    """One braid orbit reaches every primitive factorization of a flat-orbit type.

    The braid orbit itself contains tuples of every slot arrangement; the
    primitive-form members (big factor first, then reflections) are counted
    against the primitive enumeration.
    """
    facts = primitive_factorizations(W, orbit)
    if not facts:
        raise ValueError("flat orbit admits no primitive factorizations")
    reached = hurwitz_orbit(W, facts[0])
    primitive_set = set(facts)
    members_in_form = sum(1 for t in reached if t in primitive_set)
    transitive = primitive_set <= reached
    count = primitive_count(W, orbit)["count"]
    return {
        "orbit_size": len(reached),
        "primitive_members": members_in_form,
        "primitive_count": count,
        "transitive": transitive and members_in_form == count,
    }
