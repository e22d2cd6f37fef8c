"""Monomial-matrix models of the well-generated reflection groups G(d,1,n) and G(d,d,n).

An element is a pair ``(perm, weights)`` encoding the linear map that sends
the basis vector ``e_i`` to ``zeta**weights[i] * e_perm[i]``, where
``zeta = exp(2*pi*1j/d)`` and coordinates are 0-indexed.  G(d,1,n) consists
of all such maps, G(d,d,n) of those whose weights sum to 0 mod d, and
G(1,1,n) is the symmetric group S_n.  For S_n the irreducible reflection
representation is the sum-zero hyperplane, so ranks and fixed-space
dimensions are reported with the diagonal line discarded.

Product convention, fixed once for the whole package: ``compose(u, v)``
means "apply u, then v", i.e. the matrix product M(v) @ M(u) on column
vectors.  Tuples such as factorizations therefore multiply left to right:
``product_of(w1, w2, w3) == compose(compose(w1, w2), w3)``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "GroupConstructionError",
    "GroupDescriptor",
    "GroupElement",
    "ReflectionGroup",
    "build_group",
    "compose",
    "conjugate",
    "inverse",
    "product_of",
]

DEFAULT_MAX_ORDER = 10**6

REGULARITY_TOL = 1e-9


class GroupConstructionError(ValueError):
    """Requested parameters do not describe a supported irreducible group."""


@dataclass(frozen=True, order=True)
class GroupElement:
    """A monomial matrix, stored as (permutation, weight vector mod d).

    >>> s = GroupElement((1, 0), (0, 0), 1)   # the transposition in S_2
    >>> compose(s, s).is_identity
    True
    """

    perm: tuple[int, ...]
    weights: tuple[int, ...]
    d: int

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm)) and not any(self.weights)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return compose(self, other)

    def inv(self) -> GroupElement:
        return inverse(self)

    def matrix(self) -> np.ndarray:
        """Complex matrix with M @ e_i = zeta**weights[i] * e_perm[i]."""
        zeta = cmath.exp(2j * cmath.pi / self.d)
        mat = np.zeros((self.n, self.n), dtype=complex)
        for i, (p, w) in enumerate(zip(self.perm, self.weights)):
            mat[p, i] = zeta**w
        return mat

    def order(self) -> int:
        power = self
        for k in itertools.count(1):
            if power.is_identity:
                return k
            power = compose(power, self)
        raise AssertionError("unreachable")

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles of the permutation part, each starting at its minimum."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.perm[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.perm[j]
            out.append(tuple(cyc))
        return tuple(out)


def compose(u: GroupElement, v: GroupElement) -> GroupElement:
    """Apply ``u`` first, then ``v`` (matrix product M(v) @ M(u))."""
    if u.d != v.d or len(u.perm) != len(v.perm):
        raise ValueError("cannot compose elements of different groups")
    d = u.d
    perm = tuple(v.perm[p] for p in u.perm)
    weights = tuple((wu + v.weights[p]) % d for p, wu in zip(u.perm, u.weights))
    return GroupElement(perm, weights, d)


def inverse(u: GroupElement) -> GroupElement:
    d = u.d
    n = len(u.perm)
    perm = [0] * n
    weights = [0] * n
    for i, (p, w) in enumerate(zip(u.perm, u.weights)):
        perm[p] = i
        weights[p] = (-w) % d
    return GroupElement(tuple(perm), tuple(weights), d)


def conjugate(w: GroupElement, g: GroupElement) -> GroupElement:
    """g^-1 * w * g in the package's left-to-right product order."""
    return compose(compose(inverse(g), w), g)


def product_of(*factors: GroupElement) -> GroupElement:
    """Left-to-right product of a nonempty sequence of elements."""
    if not factors:
        raise ValueError("empty product needs a group to supply the identity")
    acc = factors[0]
    for f in factors[1:]:
        acc = compose(acc, f)
    return acc


@dataclass(frozen=True)
class GroupDescriptor:
    d: int
    r: int
    n: int
    rank: int
    order: int
    degrees: tuple[int, ...]
    coxeter_number: int
    num_hyperplanes: int
    num_reflections: int


def _validate_parameters(d: int, r: int, n: int) -> None:
    if d < 1 or n < 1:
        raise GroupConstructionError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    if r not in (1, d):
        raise GroupConstructionError(
            f"G({d},{r},{n}) is not well-generated: r must be 1 or d"
        )
    if d == 1 and n < 2:
        raise GroupConstructionError("G(1,1,n) needs n >= 2 to act irreducibly")
    if d >= 2 and r == d:
        if n < 2:
            raise GroupConstructionError(f"G({d},{d},1) is the trivial group")
        if n == 2 and d < 3:
            raise GroupConstructionError("G(2,2,2) is reducible (two orthogonal lines)")


def _degrees(d: int, r: int, n: int) -> tuple[int, ...]:
    if d == 1:
        return tuple(range(2, n + 1))
    if r == 1:
        return tuple(d * i for i in range(1, n + 1))
    return tuple(sorted([d * i for i in range(1, n)] + [n]))


class ReflectionGroup:
    """One of the groups G(d,1,n) or G(d,d,n), with its full element list.

    Construction materializes every element (the groups used here are desk
    sized); reflections, length tables, flats and the like are computed
    lazily by the other modules and memoized in ``self._cache``.
    """

    def __init__(self, d: int, r: int, n: int, max_order: int = DEFAULT_MAX_ORDER):
        _validate_parameters(d, r, n)
        order = d**n * math.factorial(n) // r
        if order > max_order:
            raise GroupConstructionError(
                f"|G({d},{r},{n})| = {order} exceeds the cap {max_order}"
            )
        self.d = d
        self.r = r
        self.n = n
        self.rank = n - 1 if d == 1 else n
        self.order = order
        self.degrees = _degrees(d, r, n)
        self.coxeter_number = self.degrees[-1]
        pairs = d * n * (n - 1) // 2
        if d == 1:
            self.num_hyperplanes = pairs
            self.num_reflections = pairs
        elif r == 1:
            self.num_hyperplanes = n + pairs
            self.num_reflections = n * (d - 1) + pairs
        else:
            self.num_hyperplanes = pairs
            self.num_reflections = pairs
        if self.coxeter_number * self.rank != self.num_hyperplanes + self.num_reflections:
            raise AssertionError("degree table inconsistent with hyperplane counts")
        if math.prod(self.degrees) != order:
            raise AssertionError("degree table inconsistent with the group order")

        self.identity = GroupElement(tuple(range(n)), (0,) * n, d)
        self.elements: tuple[GroupElement, ...] = tuple(self._generate())
        self._position = {g: i for i, g in enumerate(self.elements)}
        self._cache: dict = {}

    def _generate(self):
        n, d, r = self.n, self.d, self.r
        for perm in itertools.permutations(range(n)):
            if d == 1:
                yield GroupElement(perm, (0,) * n, 1)
                continue
            for weights in itertools.product(range(d), repeat=n):
                if r == 1 or sum(weights) % d == 0:
                    yield GroupElement(perm, weights, d)

    # -- basic queries ------------------------------------------------------

    @property
    def is_symmetric_case(self) -> bool:
        return self.d == 1

    @property
    def descriptor(self) -> GroupDescriptor:
        return GroupDescriptor(
            d=self.d,
            r=self.r,
            n=self.n,
            rank=self.rank,
            order=self.order,
            degrees=self.degrees,
            coxeter_number=self.coxeter_number,
            num_hyperplanes=self.num_hyperplanes,
            num_reflections=self.num_reflections,
        )

    def __contains__(self, g: GroupElement) -> bool:
        return g in self._position

    def __repr__(self) -> str:
        return f"ReflectionGroup(d={self.d}, r={self.r}, n={self.n})"

    def position(self, g: GroupElement) -> int:
        return self._position[g]

    def fixed_space_dim(self, w: GroupElement) -> int:
        """Dimension of the fixed space in the irreducible representation."""
        dim = 0
        for cyc in w.cycles():
            if sum(w.weights[i] for i in cyc) % self.d == 0:
                dim += 1
        if self.is_symmetric_case:
            dim -= 1
        return dim

    # -- reflections --------------------------------------------------------

    @property
    def reflections(self) -> tuple[GroupElement, ...]:
        try:
            return self._cache["reflections"]
        except KeyError:
            pass
        refl = tuple(
            g for g in self.elements if self.fixed_space_dim(g) == self.rank - 1
        )
        if len(refl) != self.num_reflections:
            raise AssertionError("reflection scan disagrees with the closed count")
        walls = {self._reflection_wall(t) for t in refl}
        if len(walls) != self.num_hyperplanes:
            raise AssertionError("hyperplane dedup disagrees with the closed count")
        self._cache["reflections"] = refl
        return refl

    def _reflection_wall(self, t: GroupElement):
        """Canonical key of a reflection's fixed hyperplane."""
        for cyc in t.cycles():
            s = sum(t.weights[i] for i in cyc) % self.d
            if len(cyc) == 1 and s != 0:
                return ("coord", cyc[0])
            if len(cyc) == 2:
                i, j = cyc
                return ("pair", i, j, t.weights[i] % self.d)
        raise AssertionError("element is not a reflection")

    # -- Coxeter element ----------------------------------------------------

    def coxeter_element(self) -> GroupElement:
        """A deterministic regular element of order h.

        The standard candidate (an n-cycle with one unit weight, or its
        (n-1)-cycle analog for G(d,d,n)) is checked for regularity; if the
        check fails the whole group is scanned, and failure to find any
        regular element of order h raises loudly since well-generated groups
        always contain one.
        """
        try:
            return self._cache["coxeter"]
        except KeyError:
            pass
        cand = self._coxeter_candidate()
        if not (cand.order() == self.coxeter_number and self._is_regular(cand)):
            cand = None
            for g in self.elements:
                if g.order() == self.coxeter_number and self._is_regular(g):
                    cand = g
                    break
            if cand is None:
                raise RuntimeError(
                    "no regular element of order h found; this indicates an "
                    "arithmetic bug, as well-generated groups always have one"
                )
        self._cache["coxeter"] = cand
        return cand

    def _coxeter_candidate(self) -> GroupElement:
        n, d, r = self.n, self.d, self.r
        if d == 1:
            perm = tuple((i + 1) % n for i in range(n))
            return GroupElement(perm, (0,) * n, 1)
        if r == 1:
            perm = tuple((i + 1) % n for i in range(n))
            weights = tuple(1 if i == n - 1 else 0 for i in range(n))
            return GroupElement(perm, weights, d)
        perm = tuple((i + 1) % (n - 1) for i in range(n - 1)) + (n - 1,)
        weights = [0] * n
        weights[n - 2] = 1
        weights[n - 1] = d - 1
        return GroupElement(perm, tuple(weights), d)

    def _is_regular(self, g: GroupElement) -> bool:
        """Does g have an eigenvector for exp(2*pi*i/h) off every hyperplane?"""
        target = cmath.exp(2j * cmath.pi / self.coxeter_number)
        vals, vecs = np.linalg.eig(g.matrix())
        cols = [vecs[:, i] for i in range(len(vals)) if abs(vals[i] - target) < 1e-8]
        if not cols:
            return False
        candidates = list(cols)
        if len(cols) > 1:
            candidates.append(sum(cols))
        return any(self._vector_is_regular(v) for v in candidates)

    def _vector_is_regular(self, v: np.ndarray) -> bool:
        tol = REGULARITY_TOL * max(1.0, float(np.max(np.abs(v))))
        d, n = self.d, self.n
        if d >= 2 and self.r == 1:
            # coordinate hyperplanes exist only in the G(d,1,n) family
            if np.min(np.abs(v)) <= tol:
                return False
        zeta = cmath.exp(2j * cmath.pi / d)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(d):
                    if abs(v[i] - zeta**k * v[j]) <= tol:
                        return False
        return True


def build_group(d: int, r: int, n: int, max_order: int = DEFAULT_MAX_ORDER) -> ReflectionGroup:
    """Validate (d, r, n) and materialize the group."""
    return ReflectionGroup(d, r, n, max_order=max_order)
