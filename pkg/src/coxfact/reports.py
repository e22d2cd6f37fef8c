"""Assembly of machine-readable verification reports.

Every verdict carries both computed sides next to the boolean so a failing
report is directly diagnosable; reports contain only JSON-friendly values
(ints, strings, booleans, lists) and use canonical orderings throughout so
serializing them is byte-stable.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .absolute import nc_elements, nc_size_formula
from .factorizations import (
    enumerate_red,
    kreweras_polynomial_sum,
    kreweras_table,
    passport_census,
    primitive_count,
    reduced_count_formula,
    symmetric_passport_formula,
)
from .flats import cz_report, intersection_lattice
from .groups import ReflectionGroup
from .hurwitz import hurwitz_orbit, primitive_type_transitivity

SCHEMA_VERSION = 1


def _verdict(identity: str, lhs, rhs, ok=None) -> dict:
    return {
        "identity": identity,
        "lhs": lhs,
        "rhs": rhs,
        "pass": bool(lhs == rhs) if ok is None else bool(ok),
    }


def _fraction(x) -> list:
    frac = Fraction(x)
    return [frac.numerator, frac.denominator]


def descriptor_section(W: ReflectionGroup) -> dict:
    return {
        "d": W.d,
        "r": W.r,
        "n": W.n,
        "name": f"G({W.d},{W.r},{W.n})",
        "rank": W.rank,
        "order": W.order,
        "degrees": list(W.degrees),
        "coxeter_number": W.coxeter_number,
        "num_hyperplanes": W.num_hyperplanes,
        "num_reflections": W.num_reflections,
    }


def numerology_verdicts(W: ReflectionGroup) -> list[dict]:
    return [
        _verdict(
            "coxeter_number_times_rank_equals_hyperplanes_plus_reflections",
            W.coxeter_number * W.rank,
            W.num_hyperplanes + W.num_reflections,
        ),
        _verdict(
            "degree_product_equals_group_order",
            math.prod(W.degrees),
            W.order,
        ),
    ]


def flats_table(W: ReflectionGroup) -> list[dict]:
    """One row per flat orbit with every per-orbit statistic side by side."""
    lattice = intersection_lattice(W)
    krew_rows = {row["orbit"]: row for row in kreweras_table(W)}
    rows = []
    for orb in lattice.orbits:
        prim = primitive_count(W, orb)
        krew = krew_rows[orb.pretty_name]
        quotient = cz_report(W, orb.representative)
        rows.append(
            {
                "label": orb.pretty_name,
                "dim": orb.dim,
                "codim": W.rank - orb.dim,
                "orbit_size": orb.orbit_size,
                "pointwise_order": orb.pointwise_order,
                "setwise_order": orb.setwise_order,
                "index": orb.index,
                "char_poly": list(orb.char_poly),
                "os_exponents": (
                    list(orb.os_exponents) if orb.os_exponents is not None else None
                ),
                "parabolic_degrees": list(orb.parabolic_degrees),
                "kreweras_count": krew["count"],
                "kreweras_formula": _fraction(krew["formula"]),
                "kreweras_agrees": krew["agrees"],
                "primitive_count": prim["count"],
                "primitive_formula": prim["formula"],
                "primitive_per_flat": list(prim["per_flat_counts"]),
                "primitive_per_flat_uniform": prim["per_flat_uniform"],
                "quotient_is_reflection_group": quotient["is_reflection_group"],
                "quotient_degrees": (
                    list(quotient["degrees"])
                    if quotient["degrees"] is not None
                    else None
                ),
                "q_polynomial": (
                    list(quotient["q_polynomial"])
                    if quotient["q_polynomial"] is not None
                    else None
                ),
                "q_at_one": quotient.get("q_at_one"),
            }
        )
    return rows


FLATS_CSV_COLUMNS = [
    "label",
    "dim",
    "codim",
    "orbit_size",
    "pointwise_order",
    "setwise_order",
    "index",
    "char_poly",
    "os_exponents",
    "parabolic_degrees",
    "kreweras_count",
    "kreweras_formula",
    "kreweras_agrees",
    "primitive_count",
    "primitive_formula",
    "primitive_per_flat",
    "primitive_per_flat_uniform",
    "quotient_is_reflection_group",
    "quotient_degrees",
    "q_polynomial",
    "q_at_one",
]


def identity_verdicts(W: ReflectionGroup, table: list[dict]) -> list[dict]:
    """The closed-form identity suite over the group's exact enumerations."""
    verdicts = list(numerology_verdicts(W))
    verdicts.append(
        _verdict(
            "reduced_factorization_count_formula",
            len(enumerate_red(W)),
            reduced_count_formula(W),
        )
    )
    verdicts.append(
        _verdict(
            "noncrossing_size_formula", len(nc_elements(W)), nc_size_formula(W)
        )
    )
    verdicts.append(
        _verdict(
            "primitive_count_formula_all_orbits",
            [[row["label"], row["primitive_count"]] for row in table],
            [[row["label"], row["primitive_formula"]] for row in table],
        )
    )
    if W.d <= 2:
        verdicts.append(
            _verdict(
                "kreweras_char_poly_formula_all_orbits",
                [[row["label"], row["kreweras_count"]] for row in table],
                [[row["label"], row["kreweras_formula"]] for row in table],
                ok=all(row["kreweras_agrees"] for row in table),
            )
        )
    poly = kreweras_polynomial_sum(W)
    verdicts.append(
        _verdict(
            "kreweras_polynomial_sum_identity",
            [_fraction(c) for c in poly["lhs"]],
            [_fraction(c) for c in poly["rhs"]],
            ok=poly["equal"],
        )
    )
    defined = [row for row in table if row["quotient_is_reflection_group"]]
    verdicts.append(
        _verdict(
            "q_at_one_equals_primitive_count_when_defined",
            [[row["label"], row["q_at_one"]] for row in defined],
            [[row["label"], row["primitive_count"]] for row in defined],
        )
    )
    return verdicts


def hurwitz_section(W: ReflectionGroup) -> tuple[dict, list[dict]]:
    """Braid-orbit census plus the transitivity verdicts it supports."""
    reds = enumerate_red(W)
    orbit = hurwitz_orbit(W, reds[0])
    reduced = {
        "orbit_size": len(orbit),
        "reduced_count": len(reds),
        "orbit_is_everything": orbit == set(reds),
    }
    lattice = intersection_lattice(W)
    per_type = []
    for orb in lattice.orbits:
        res = primitive_type_transitivity(W, orb)
        per_type.append(
            {
                "label": orb.pretty_name,
                "orbit_size": res["orbit_size"],
                "primitive_members": res["primitive_members"],
                "primitive_count": res["primitive_count"],
                "transitive": res["transitive"],
            }
        )
    section = {"reduced": reduced, "per_type": per_type}
    verdicts = [
        _verdict(
            "braid_orbit_on_reduced_is_transitive",
            reduced["orbit_size"],
            reduced["reduced_count"],
            ok=reduced["orbit_is_everything"],
        ),
        _verdict(
            "braid_orbit_per_primitive_type_is_transitive",
            [[row["label"], row["primitive_members"]] for row in per_type],
            [[row["label"], row["primitive_count"]] for row in per_type],
            ok=all(row["transitive"] for row in per_type),
        ),
    ]
    return section, verdicts


def passport_section(W: ReflectionGroup) -> tuple[dict, list[dict]]:
    """Passport census in serializable form plus its verdicts."""
    census = passport_census(W)
    entries = {}
    for key in sorted(census):
        entry = census[key]
        entries[",".join(key)] = {
            "total": entry["total"],
            "orderings_realized": entry["orderings_realized"],
            "orderings_possible": entry["orderings_possible"],
            "permutation_invariant": entry["permutation_invariant"],
            "ordered_counts": {
                ",".join(ordered): count
                for ordered, count in sorted(entry["ordered_counts"].items())
            },
        }
    verdicts = [
        _verdict(
            "passport_counts_are_permutation_invariant",
            [[name, row["orderings_realized"]] for name, row in entries.items()],
            [[name, row["orderings_possible"]] for name, row in entries.items()],
            ok=all(row["permutation_invariant"] for row in entries.values()),
        )
    ]
    if W.d == 1 and W.r == 1:
        lhs, rhs, ok = [], [], True
        for key in sorted(census):
            formula = symmetric_passport_formula(W, key)
            ordered = set(census[key]["ordered_counts"].values())
            lhs.append([",".join(key), sorted(ordered)])
            rhs.append([",".join(key), [_fraction(formula)]])
            ok = ok and ordered == {formula}
        verdicts.append(
            _verdict(
                "symmetric_passport_closed_form_matches_every_ordering",
                lhs,
                rhs,
                ok=ok,
            )
        )
    return {"passports": entries}, verdicts


def group_report(W: ReflectionGroup, kind: str) -> dict:
    """The full report for one `group` subcommand invocation."""
    report = {
        "schema_version": SCHEMA_VERSION,
        "kind": f"group_{kind}",
        "descriptor": descriptor_section(W),
    }
    if kind == "info":
        report["verdicts"] = numerology_verdicts(W)
        return report
    if kind == "passports":
        section, verdicts = passport_section(W)
        report.update(section)
        report["verdicts"] = verdicts
        return report
    if kind == "verify":
        table = flats_table(W)
        report["flat_orbits"] = table
        report["red_count"] = len(enumerate_red(W))
        report["nc_size"] = len(nc_elements(W))
        hur_section, hur_verdicts = hurwitz_section(W)
        report["hurwitz"] = hur_section
        pass_section, pass_verdicts = passport_section(W)
        report.update(pass_section)
        report["verdicts"] = (
            identity_verdicts(W, table) + hur_verdicts + pass_verdicts
        )
        return report
    raise ValueError(f"unknown report kind: {kind}")


def first_failure(report: dict):
    for verdict in report.get("verdicts", ()):
        if not verdict["pass"]:
            return verdict["identity"]
    return None
