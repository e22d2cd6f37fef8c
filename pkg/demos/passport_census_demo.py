"""Block factorizations of the Coxeter element grouped by passport.

A block factorization splits c into length-additive factors; its passport
is the multiset of flat-orbit types of the factors.  In the symmetric
group every ordering of a passport is realized equally often, and the
common value has a closed form.
"""

from __future__ import annotations

from coxfact.factorizations import passport_census, symmetric_passport_formula
from coxfact.groups import build_group

W = build_group(1, 1, 5)
census = passport_census(W)
print(f"{W!r}: {sum(e['total'] for e in census.values())} block factorizations, "
      f"{len(census)} passports\n")

print(f"{'passport':22s} {'total':>6s} {'orderings':>9s} {'per ordering':>12s} {'formula':>8s}")
for key in sorted(census):
    entry = census[key]
    per_ordering = set(entry["ordered_counts"].values())
    formula = symmetric_passport_formula(W, key)
    assert entry["permutation_invariant"] and per_ordering == {formula}
    print(
        f"{','.join(key):22s} {entry['total']:>6d} {entry['orderings_realized']:>9d}"
        f" {min(per_ordering):>12d} {str(formula):>8s}"
    )

print()
print("n^(k-1) * prod dim! / index reproduces every per-ordering count.")
