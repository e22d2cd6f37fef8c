"""Walking an entire fiber of the critical-value map by braid moves.

Fixing a generic critical-value configuration, the polynomials mapping to
it form a finite fiber.  Half-turn swaps of adjacent critical values lift
to paths in coefficient space that land on other fiber members; breadth
first search over these moves enumerates the fiber, and the monodromy
labels identify each member with a distinct reduced factorization of the
reference m-cycle.  The fiber size m^(m-2) is Cayley's tree count.
"""

from __future__ import annotations

import numpy as np

from coxfact.factorizations import enumerate_red
from coxfact.groups import build_group, conjugate
from coxfact.monodromy import coxeter_loop, explore_fiber, random_polynomial

for degree, seed in ((3, 0), (4, 0)):
    rng = np.random.default_rng(seed)
    p = random_polynomial(degree, rng)
    result = explore_fiber(p)
    print(f"degree {degree}, seed {seed}:")
    print(f"  base coefficients {np.round(p.coeffs, 4)}")
    print(f"  fiber size {result['size']}  (m^(m-2) = {degree ** (degree - 2)})")
    print(f"  labels injective: {result['labels_injective']}")

    # Cross-check against the group-theoretic enumeration: conjugate the
    # abstract Coxeter element onto the reference loop and compare sets.
    W = build_group(1, 1, degree)
    loop = coxeter_loop(degree)
    sigma = next(g for g in W.elements if conjugate(W.coxeter_element(), g) == loop)
    transported = {
        tuple(conjugate(t, sigma) for t in red) for red in enumerate_red(W)
    }
    print(f"  exhausts Red(c): {set(result['labels']) == transported}")
    print()

print("Both fibers are complete: every reduced factorization of the")
print("reference cycle is realized by exactly one fiber member.")
