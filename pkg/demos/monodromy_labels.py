"""Reading factorizations off the critical values of a polynomial.

For a monic centered polynomial p of degree m, looping once around each
cluster of critical values permutes the fiber p^{-1}(basepoint).  With a
fixed reference labeling of the strands, the loops give permutations
whose left-to-right product is always the same m-cycle, and whose
reflection lengths match the cluster multiplicities.  Degenerate
polynomials (merged critical values) produce fewer, longer factors.
"""

from __future__ import annotations

import numpy as np

from coxfact.monodromy import (
    CenteredPolynomial,
    coxeter_loop,
    critical_values,
    random_polynomial,
    rlbl,
)
from coxfact.groups import product_of


def show(name, p):
    config = critical_values(p)
    labels = rlbl(p)
    print(f"{name}: degree {p.degree}")
    for (value, mult), label in zip(config.points, labels):
        cycles = "".join(
            "(" + " ".join(map(str, cyc)) + ")" for cyc in label.cycles() if len(cyc) > 1
        )
        print(f"  value {value:+.4f}  multiplicity {mult}  label {cycles or '(id)'}")
    product = product_of(*labels)
    loop = coxeter_loop(p.degree)
    print(f"  product {product.perm}  reference loop {loop.perm}  equal: {product == loop}")
    print()


show("z^3 - 3z (generic cubic)", CenteredPolynomial((-3.0, 0.0)))
show("z^4 - 2z^2 (double critical value)", CenteredPolynomial((-2.0, 0.0, 0.0)))
show("z^5 (maximal degeneration)", CenteredPolynomial((0.0, 0.0, 0.0, 0.0)))

rng = np.random.default_rng(7)
show("random quartic, seed 7", random_polynomial(4, rng))

print("The product identity is what ties the analytic side to the")
print("combinatorics: each polynomial is labeled by a factorization of")
print("the same reference m-cycle into parts matching its degeneracies.")
