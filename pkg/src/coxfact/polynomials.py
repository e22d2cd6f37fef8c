"""Small exact-arithmetic polynomial helpers.

Polynomials are tuples of coefficients in ascending degree order, so
``(c0, c1, c2)`` is ``c0 + c1*t + c2*t**2``.  Coefficients are ints or
Fractions; every operation here is exact.  The q-analog utilities divide
products of q-integers, which for the reflection-group data handled in this
package always comes out to a polynomial with nonnegative integer
coefficients (asserted, not assumed).
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "integer_roots",
    "poly_add",
    "poly_div_exact",
    "poly_eval",
    "poly_mul",
    "poly_scale",
    "q_integer",
    "q_product_ratio",
]


def _trim(coeffs):
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_add(a, b):
    size = max(len(a), len(b))
    return _trim(
        tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(size)
        )
    )


def poly_scale(a, s):
    return _trim(tuple(c * s for c in a))


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(tuple(out))


def poly_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_div_exact(num, den):
    """Divide exactly, raising ValueError on a nonzero remainder.

    Returns integer coefficients whenever the quotient is integral.
    """
    num = [Fraction(c) for c in _trim(num)]
    den = [Fraction(c) for c in _trim(den)]
    if den == [Fraction(0)]:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) == 1 and num[0] == 0:
        return (0,)
    if len(num) < len(den):
        raise ValueError("division is not exact (degree too small)")
    quo = [Fraction(0)] * (len(num) - len(den) + 1)
    rem = list(num)
    for k in range(len(quo) - 1, -1, -1):
        coeff = rem[k + len(den) - 1] / den[-1]
        quo[k] = coeff
        if coeff:
            for j, dj in enumerate(den):
                rem[k + j] -= coeff * dj
    if any(rem):
        raise ValueError("division is not exact (nonzero remainder)")
    if all(q.denominator == 1 for q in quo):
        return _trim(tuple(int(q) for q in quo))
    return _trim(tuple(quo))


def q_integer(k: int):
    """[k]_q = 1 + q + ... + q^(k-1)."""
    if k < 1:
        raise ValueError("q-integers are defined for k >= 1")
    return (1,) * k


def q_product_ratio(numerator_sizes, denominator_sizes):
    """prod [a]_q / prod [b]_q, asserted to be a genuine polynomial."""
    num = (1,)
    for a in numerator_sizes:
        num = poly_mul(num, q_integer(a))
    den = (1,)
    for b in denominator_sizes:
        den = poly_mul(den, q_integer(b))
    quo = poly_div_exact(num, den)
    if not all(isinstance(c, int) and c >= 0 for c in quo):
        raise ValueError("q-analog ratio is not coefficientwise nonnegative")
    return quo


def integer_roots(coeffs):
    """All roots of a monic-up-to-sign integer polynomial, if they are integers.

    Returns a sorted tuple of roots with multiplicity, or None when the
    polynomial does not split into integer linear factors.
    """
    coeffs = _trim(coeffs)
    if any(not isinstance(c, int) for c in coeffs):
        raise ValueError("expected integer coefficients")
    if len(coeffs) == 1:
        return () if coeffs[0] != 0 else None
    if abs(coeffs[-1]) != 1:
        return None
    work = list(coeffs)
    roots = []
    while work[0] == 0 and len(work) > 1:
        roots.append(0)
        work.pop(0)
    while len(work) > 1:
        const = abs(work[0])
        found = None
        candidates = set()
        for m in range(1, int(const**0.5) + 1):
            if const % m == 0:
                candidates.update((m, -m, const // m, -const // m))
        for cand in sorted(candidates, key=abs):
            if poly_eval(work, cand) == 0:
                found = cand
                break
        if found is None:
            return None
        roots.append(found)
        # synthetic division by (t - found), ascending coefficients
        new = [0] * (len(work) - 1)
        carry = work[-1]
        for k in range(len(work) - 2, -1, -1):
            new[k] = carry
            carry = work[k] + carry * found
        if carry != 0:
            raise AssertionError("synthetic division left a remainder")
        work = new
    return tuple(sorted(roots))
