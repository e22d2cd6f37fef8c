"""Length-additive factorizations of a Coxeter element and their statistics.

All factorizations multiply left to right to the group's Coxeter element c.
A block factorization splits the rank along a composition; the all-ones
composition gives the reduced reflection factorizations.  Factors are
classified by the orbit of their fixed flat, giving passports; primitive
factorizations put one big factor first and reflections after it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .absolute import length_table, nc_elements
from .flats import flat_of, intersection_lattice
from .groups import GroupElement, ReflectionGroup, compose, inverse, product_of
from .polynomials import poly_add, poly_eval, poly_mul, poly_scale

__all__ = [
    "Factorization",
    "as_factorization",
    "bezout_degree",
    "enumerate_block",
    "enumerate_red",
    "kreweras_numbers",
    "kreweras_polynomial_sum",
    "kreweras_table",
    "passport_census",
    "primitive_count",
    "primitive_factorizations",
    "reduced_count_formula",
    "symmetric_passport_formula",
]


@dataclass(frozen=True)
class Factorization:
    factors: tuple[GroupElement, ...]
    lengths: tuple[int, ...]
    ordered_passport: tuple[str, ...]
    unordered_passport: tuple[str, ...]


def as_factorization(W: ReflectionGroup, factors) -> Factorization:
    """Wrap a factor tuple, checking the defining invariants."""
    factors = tuple(factors)
    if product_of(*factors) != W.coxeter_element():
        raise ValueError("factors do not multiply to the Coxeter element")
    lt = length_table(W)
    lengths = tuple(lt[W.position(f)] for f in factors)
    if sum(lengths) != W.rank:
        raise ValueError("factorization is not length additive")
    lattice = intersection_lattice(W)
    passport = tuple(
        lattice.orbit_of(flat_of(f)).pretty_name for f in factors
    )
    return Factorization(
        factors=factors,
        lengths=lengths,
        ordered_passport=passport,
        unordered_passport=tuple(sorted(passport)),
    )


def reduced_count_formula(W: ReflectionGroup) -> int:
    num = W.coxeter_number**W.rank * math.factorial(W.rank)
    count, rem = divmod(num, W.order)
    if rem:
        raise AssertionError("reduced-count formula did not divide evenly")
    return count


def _nc_by_length(W: ReflectionGroup):
    try:
        return W._cache["nc_by_length"]
    except KeyError:
        pass
    lt = length_table(W)
    table: dict[int, list[GroupElement]] = {}
    for u in nc_elements(W):
        table.setdefault(lt[W.position(u)], []).append(u)
    out = {k: tuple(v) for k, v in table.items()}
    W._cache["nc_by_length"] = out
    return out


def _block_suffixes(W, v, composition, memo):
    """All tuples with the given length profile multiplying to v, v noncrossing."""
    key = (v, composition)
    try:
        return memo[key]
    except KeyError:
        pass
    if not composition:
        out = ((),) if v.is_identity else ()
        memo[key] = out
        return out
    lt = length_table(W)
    lv = lt[W.position(v)]
    head, rest = composition[0], composition[1:]
    results = []
    for u in _nc_by_length(W).get(head, ()):
        gap = compose(inverse(u), v)
        if head + lt[W.position(gap)] != lv:
            continue
        for suffix in _block_suffixes(W, gap, rest, memo):
            results.append((u,) + suffix)
    out = tuple(results)
    memo[key] = out
    return out


def enumerate_block(W: ReflectionGroup, composition) -> tuple[tuple[GroupElement, ...], ...]:
    """All block factorizations of c with the given positive length profile."""
    composition = tuple(composition)
    if any(part < 1 for part in composition) or sum(composition) != W.rank:
        raise ValueError(
            f"composition {composition} must have positive parts summing to rank "
            f"{W.rank}"
        )
    memo = W._cache.setdefault("block_memo", {})
    return _block_suffixes(W, W.coxeter_element(), composition, memo)


def enumerate_red(W: ReflectionGroup) -> tuple[tuple[GroupElement, ...], ...]:
    """All reduced reflection factorizations of c, with the count cross-checked."""
    try:
        return W._cache["red_list"]
    except KeyError:
        pass
    out = enumerate_block(W, (1,) * W.rank)
    if len(out) != reduced_count_formula(W):
        raise AssertionError("reduced enumeration disagrees with the closed count")
    if len(set(out)) != len(out):
        raise AssertionError("reduced enumeration produced duplicates")
    W._cache["red_list"] = out
    return out


# -- primitive factorizations ---------------------------------------------------


def _resolve_orbit(W, orbit):
    lattice = intersection_lattice(W)
    if isinstance(orbit, str):
        return lattice.orbit_named(orbit)
    return orbit


def primitive_factorizations(W: ReflectionGroup, orbit):
    """Factorizations c = w * t_1 ... t_{dim Z} with flat(w) in the orbit.

    The composition is (codim Z, 1, ..., 1); for the full-space orbit the
    big factor has length 0, i.e. the identity is prepended to each reduced
    factorization.
    """
    orbit = _resolve_orbit(W, orbit)
    codim = W.rank - orbit.dim
    flats = set(orbit.flats)
    if codim == 0:
        return tuple((W.identity,) + red for red in enumerate_red(W))
    composition = (codim,) + (1,) * orbit.dim
    return tuple(
        fact
        for fact in enumerate_block(W, composition)
        if flat_of(fact[0]) in flats
    )


def primitive_count(W: ReflectionGroup, orbit) -> dict:
    """Enumerated primitive count for a flat orbit, with the closed formula.

    Also reports the per-flat distribution of the big factor's fixed flat
    across the orbit, and whether that distribution is uniform (it need not
    be; only the orbit-level count has a formula).
    """
    orbit = _resolve_orbit(W, orbit)
    facts = primitive_factorizations(W, orbit)
    per_flat = {F: 0 for F in orbit.flats}
    for fact in facts:
        per_flat[flat_of(fact[0])] += 1
    formula = Fraction(
        W.coxeter_number ** orbit.dim * math.factorial(orbit.dim), orbit.index
    )
    if formula.denominator != 1:
        raise AssertionError("primitive-count formula is not an integer")
    counts = sorted(per_flat.values())
    return {
        "orbit": orbit.pretty_name,
        "count": len(facts),
        "formula": int(formula),
        "per_flat_counts": tuple(counts),
        "per_flat_uniform": counts[0] == counts[-1],
    }


# -- Kreweras numbers -----------------------------------------------------------


def kreweras_numbers(W: ReflectionGroup) -> dict[str, int]:
    """How many noncrossing elements have their fixed flat in each orbit."""
    lattice = intersection_lattice(W)
    out = {orb.pretty_name: 0 for orb in lattice.orbits}
    for u in nc_elements(W):
        out[lattice.orbit_of(flat_of(u)).pretty_name] += 1
    return out


def kreweras_table(W: ReflectionGroup) -> tuple[dict, ...]:
    """Per-orbit Kreweras counts next to the char-poly formula value.

    The formula chi(A^Z, h+1)/[N:W_Z] is a theorem for the d <= 2 members
    and is asserted there; for d >= 3 both sides are reported with an
    agreement flag but no assertion.
    """
    lattice = intersection_lattice(W)
    counts = kreweras_numbers(W)
    h = W.coxeter_number
    rows = []
    for orb in lattice.orbits:
        value = Fraction(poly_eval(orb.char_poly, h + 1), orb.index)
        count = counts[orb.pretty_name]
        agrees = value == count
        if W.d <= 2 and not agrees:
            raise AssertionError(
                f"Kreweras formula failed for a Weyl member on {orb.pretty_name}: "
                f"count {count} vs formula {value}"
            )
        rows.append(
            {
                "orbit": orb.pretty_name,
                "count": count,
                "formula": value,
                "agrees": agrees,
            }
        )
    if sum(r["count"] for r in rows) != len(nc_elements(W)):
        raise AssertionError("Kreweras numbers do not add up to |NC|")
    return tuple(rows)


def kreweras_polynomial_sum(W: ReflectionGroup) -> dict:
    """Exact identity: sum over orbits of chi(A^Z,t)/index = prod(t+d_i-1)/|W|.

    Returned with both sides cleared to integer coefficients by a common
    multiplier for display.
    """
    lattice = intersection_lattice(W)
    lhs = (0,)
    for orb in lattice.orbits:
        lhs = poly_add(lhs, poly_scale(orb.char_poly, Fraction(1, orb.index)))
    rhs = (1,)
    for deg in W.degrees:
        rhs = poly_mul(rhs, (deg - 1, 1))
    rhs = poly_scale(rhs, Fraction(1, W.order))
    mult = W.order * math.lcm(*(orb.index for orb in lattice.orbits))
    scaled = poly_scale(lhs, mult)
    if any(Fraction(c).denominator != 1 for c in scaled):
        raise AssertionError("clearing multiplier did not clear the denominators")
    cleared = tuple(int(c) for c in scaled)
    return {
        "lhs": lhs,
        "rhs": rhs,
        "equal": lhs == rhs,
        "cleared_multiplier": mult,
        "cleared_poly": cleared,
    }


# -- passports ------------------------------------------------------------------


def _compositions(total: int):
    """All compositions of total into positive parts, in a fixed order."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def passport_census(W: ReflectionGroup) -> dict:
    """Census of all block factorizations of c grouped by passport.

    Keys are unordered passports (sorted label tuples); values carry the
    total count, the per-ordering counts, and the permutation-invariance
    verdict (every realized ordering of a passport appears equally often).
    """
    lattice = intersection_lattice(W)
    label_of: dict[GroupElement, str] = {}
    census: dict[tuple, dict] = {}
    for composition in _compositions(W.rank):
        for fact in enumerate_block(W, composition):
            labels = []
            for f in fact:
                try:
                    labels.append(label_of[f])
                except KeyError:
                    lab = lattice.orbit_of(flat_of(f)).pretty_name
                    label_of[f] = lab
                    labels.append(lab)
            ordered = tuple(labels)
            key = tuple(sorted(ordered))
            entry = census.setdefault(key, {"total": 0, "ordered_counts": {}})
            entry["total"] += 1
            entry["ordered_counts"][ordered] = (
                entry["ordered_counts"].get(ordered, 0) + 1
            )
    for key, entry in census.items():
        orderings = sorted(set(itertools.permutations(key)))
        counts = entry["ordered_counts"]
        entry["orderings_realized"] = len(counts)
        entry["orderings_possible"] = len(orderings)
        values = set(counts.values())
        entry["permutation_invariant"] = (
            len(values) == 1 and len(counts) == len(orderings)
        )
    return census


def symmetric_passport_formula(W: ReflectionGroup, unordered_passport) -> Fraction:
    """Closed-form ordered count for a symmetric-group passport.

    n^(k-1) times the product over factors of (dim Z_i)!/index_i; defined
    only for the d = 1 members.
    """
    if W.d != 1:
        raise ValueError("the closed passport formula is specific to d = 1")
    lattice = intersection_lattice(W)
    value = Fraction(W.n) ** (len(tuple(unordered_passport)) - 1)
    for name in unordered_passport:
        orb = lattice.orbit_named(name)
        value *= Fraction(math.factorial(orb.dim), orb.index)
    return value


def bezout_degree(numerator_degrees, denominator_degrees) -> Fraction:
    """prod(numerators)/prod(denominators) as an exact rational."""
    den = math.prod(denominator_degrees)
    if den == 0:
        raise ValueError("zero degree in the denominator")
    return Fraction(math.prod(numerator_degrees), den)
