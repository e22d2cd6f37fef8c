"""Primitive factorizations by type and the braid action that shuffles them.

A primitive factorization of type [Z] writes the Coxeter element as one
big parabolic Coxeter factor with fixed flat in the orbit [Z] followed by
reflections.  The count only depends on the orbit, via h^dim dim!/index.
Braid moves (conjugation swaps of adjacent factors) act on these tuples;
for each type a single orbit reaches every factorization with the same
multiset of factor types.
"""

from __future__ import annotations

import math

from coxfact.factorizations import primitive_count
from coxfact.flats import intersection_lattice
from coxfact.groups import build_group
from coxfact.hurwitz import primitive_type_transitivity

W = build_group(2, 1, 3)
lattice = intersection_lattice(W)
print(f"{W!r}: rank {W.rank}, h = {W.coxeter_number}\n")

print(f"{'orbit':8s} {'dim':>3s} {'count':>5s} {'= formula':>9s} {'braid orbit':>11s} {'transitive':>10s}")
for orb in lattice.orbits:
    res = primitive_count(W, orb)
    braid = primitive_type_transitivity(W, orb)
    formula = W.coxeter_number**orb.dim * math.factorial(orb.dim) // orb.index
    assert res["count"] == formula
    print(
        f"{orb.pretty_name:8s} {orb.dim:>3d} {res['count']:>5d} {formula:>9d}"
        f" {braid['orbit_size']:>11d} {str(braid['transitive']):>10s}"
    )

print()
print("The braid orbit is larger than the primitive count whenever the")
print("moves can park the big factor in any slot; transitivity means the")
print("orbit still reaches every primitive-form tuple of that type.")
