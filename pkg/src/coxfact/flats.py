"""Flats of the reflection arrangement: encodings, lattice, orbits, stabilizers.

A flat (an intersection of reflecting hyperplanes, equivalently the fixed
space of a group element) is encoded combinatorially: a set of coordinates
forced to zero, plus a partition of the remaining coordinates into blocks
in which coordinate j equals zeta**offset_j times the block's base value.
Offsets are normalized so each block's minimum coordinate has offset 0,
blocks are sorted by minimum coordinate, and the encoding is then unique
per subspace.

For the symmetric group (d = 1) there are no zeros and the ambient
irreducible representation is the sum-zero hyperplane, so dimensions count
blocks minus one; the all-coordinates-in-one-block flat is the origin.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .groups import GroupElement, ReflectionGroup, compose
from .polynomials import integer_roots, poly_eval, q_product_ratio

__all__ = [
    "Flat",
    "FlatLattice",
    "FlatOrbit",
    "MolienMismatchError",
    "act_on_flat",
    "cz_report",
    "flat_contains",
    "flat_of",
    "full_flat",
    "intersect_flats",
    "intersection_lattice",
    "origin_flat",
]

MOLIEN_TOL = 1e-6


class MolienMismatchError(RuntimeError):
    """Numeric eigenvalue census disagrees with the extracted degrees."""


@dataclass(frozen=True, order=True)
class Flat:
    """Canonical encoding of an arrangement flat; equality means equal subspaces."""

    n: int
    d: int
    sym: bool
    zeros: tuple[int, ...]
    blocks: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.blocks) - (1 if self.sym else 0)

    @property
    def coords_of(self) -> dict[int, tuple[int, int]]:
        """coordinate -> (block index, offset); zeros are absent."""
        out = {}
        for k, block in enumerate(self.blocks):
            for c, o in block:
                out[c] = (k, o)
        return out


def _canonical_flat(n: int, d: int, sym: bool, zeros, groups) -> Flat:
    """Normalize raw (zero set, {group: [(coord, raw offset)]}) data."""
    blocks = []
    for pairs in groups:
        pairs = sorted(pairs)
        base = pairs[0][1]
        blocks.append(tuple((c, (o - base) % d) for c, o in pairs))
    blocks.sort()
    if sym and zeros:
        raise AssertionError("symmetric-group flats cannot force zeros")
    return Flat(n=n, d=d, sym=sym, zeros=tuple(sorted(zeros)), blocks=tuple(blocks))


def flat_of(w: GroupElement) -> Flat:
    """The fixed space {v : wv = v}, read off the cycles of w.

    A cycle whose weights sum to 0 mod d pins its coordinates together with
    offsets given by partial weight sums; any other cycle forces zeros.
    """
    d = w.d
    zeros: list[int] = []
    groups = []
    for cyc in w.cycles():
        partial = 0
        pairs = [(cyc[0], 0)]
        for prev, cur in zip(cyc, cyc[1:]):
            partial = (partial + w.weights[prev]) % d
            pairs.append((cur, partial))
        if (partial + w.weights[cyc[-1]]) % d == 0:
            groups.append(pairs)
        else:
            zeros.extend(cyc)
    return _canonical_flat(w.n, d, d == 1, zeros, groups)


def full_flat(n: int, d: int) -> Flat:
    return _canonical_flat(n, d, d == 1, (), [[(i, 0)] for i in range(n)])


def origin_flat(n: int, d: int) -> Flat:
    if d == 1:
        return _canonical_flat(n, 1, True, (), [[(i, 0) for i in range(n)]])
    return _canonical_flat(n, d, False, range(n), [])


def act_on_flat(g: GroupElement, F: Flat) -> Flat:
    """The image subspace g(F) (so fixed spaces transform with conjugation)."""
    if g.d != F.d or g.n != F.n:
        raise ValueError("element and flat live in different ambient spaces")
    zeros = [g.perm[c] for c in F.zeros]
    groups = [
        [(g.perm[c], (o + g.weights[c]) % F.d) for c, o in block]
        for block in F.blocks
    ]
    return _canonical_flat(F.n, F.d, F.sym, zeros, groups)


def intersect_flats(A: Flat, B: Flat) -> Flat:
    """Meet of two flats, solving the combined offset constraints.

    Conflicting constraints on a connected component force it to zero.
    """
    if (A.n, A.d, A.sym) != (B.n, B.d, B.sym):
        raise ValueError("flats live in different ambient spaces")
    n, d = A.n, A.d
    parent = list(range(n))
    off = [0] * n
    zeroed = [False] * n

    def find(i):
        chain = []
        while parent[i] != i:
            chain.append(i)
            i = parent[i]
        acc = 0
        for node in reversed(chain):
            acc = (acc + off[node]) % d
            parent[node] = i
            off[node] = acc
        return i

    def union(i, j, delta):
        # impose v_j = zeta**delta * v_i
        ri, rj = find(i), find(j)
        oi, oj = off[i] if i != ri else 0, off[j] if j != rj else 0
        if ri == rj:
            if (oj - oi - delta) % d != 0:
                zeroed[ri] = True
            return
        parent[rj] = ri
        off[rj] = (oi + delta - oj) % d
        if zeroed[rj]:
            zeroed[ri] = True

    def impose(F: Flat):
        for block in F.blocks:
            (c0, _), rest = block[0], block[1:]
            for c, o in rest:
                union(c0, c, o)
        for c in F.zeros:
            zeroed[find(c)] = True

    impose(A)
    impose(B)

    zeros = []
    groups: dict[int, list[tuple[int, int]]] = {}
    for i in range(n):
        r = find(i)
        if zeroed[r]:
            zeros.append(i)
        else:
            groups.setdefault(r, []).append((i, off[i] if i != r else 0))
    return _canonical_flat(n, d, A.sym, zeros, groups.values())


def flat_contains(big: Flat, small: Flat) -> bool:
    """Subspace containment small <= big."""
    return intersect_flats(big, small) == small


def _fix_dim_monomial(x: GroupElement, sym: bool) -> int:
    dim = sum(
        1 for cyc in x.cycles() if sum(x.weights[i] for i in cyc) % x.d == 0
    )
    return dim - 1 if sym else dim


def _degrees_from_census(counts) -> tuple[int, ...]:
    """Extract reflection degrees from sum over g of t^(fix dim) = prod (t+d_i-1)."""
    roots = integer_roots(tuple(counts))
    if roots is None:
        raise AssertionError("fixed-dimension census does not split over Z")
    degrees = tuple(sorted(1 - r for r in roots))
    if any(deg < 1 for deg in degrees):
        raise AssertionError("census produced a degree below 1")
    return degrees


# Pretty names for parabolic degree multisets; collisions between distinct
# orbits with the same multiset get ".a"/".b" suffixes in canonical order.
_PRETTY_IRREDUCIBLE = {
    (2,): "A1",
    (2, 3): "A2",
    (2, 3, 4): "A3",
    (2, 3, 4, 5): "A4",
    (2, 3, 4, 5, 6): "A5",
    (2, 4): "B2",
    (2, 4, 6): "B3",
    (2, 4, 6, 8): "B4",
    (2, 4, 4, 6): "D4",
    (2, 5): "I2(5)",
    (2, 6): "I2(6)",
    (2, 7): "I2(7)",
    (2, 8): "I2(8)",
    (3,): "Z3",
    (4,): "Z4",
    (5,): "Z5",
    (6,): "Z6",
    (3, 6): "G(3,1,2)",
    (3, 3, 6): "G(3,3,3)",
    (4, 8): "G(4,1,2)",
}


def _pretty_name(degrees: tuple[int, ...]) -> str:
    if not degrees:
        return "V"
    remaining = list(degrees)
    parts = []
    keys = sorted(_PRETTY_IRREDUCIBLE, key=lambda k: (-len(k), k))
    while remaining:
        for key in keys:
            counts = list(remaining)
            ok = True
            for deg in key:
                if deg in counts:
                    counts.remove(deg)
                else:
                    ok = False
                    break
            if ok:
                parts.append(_PRETTY_IRREDUCIBLE[key])
                remaining = counts
                break
        else:
            return "W" + repr(list(degrees)).replace(" ", "")
    parts.sort()
    return "x".join(parts)


@dataclass(frozen=True)
class FlatOrbit:
    representative: Flat
    flats: tuple[Flat, ...]
    orbit_size: int
    pointwise_order: int
    setwise_order: int
    index: int
    char_poly: tuple[int, ...]
    os_exponents: tuple[int, ...] | None
    parabolic_degrees: tuple[int, ...]
    label: tuple
    pretty_name: str

    @property
    def dim(self) -> int:
        return self.representative.dim


class FlatLattice:
    """The intersection lattice of a group, with orbit and stabilizer data.

    Immutable after construction; obtained via intersection_lattice(W),
    which memoizes one instance per group.
    """

    def __init__(self, W: ReflectionGroup):
        self.W = W
        self.flat_by_element = tuple(flat_of(g) for g in W.elements)
        flat_set = set(self.flat_by_element)
        self.flats: tuple[Flat, ...] = tuple(
            sorted(flat_set, key=lambda F: (W.rank - F.dim, F))
        )
        for A, B in itertools.combinations(self.flats, 2):
            if intersect_flats(A, B) not in flat_set:
                raise RuntimeError(
                    "intersection lattice is not closed; the flat encoding is buggy"
                )
        self._below: dict[Flat, frozenset[Flat]] = {
            Z: frozenset(X for X in self.flats if flat_contains(Z, X))
            for Z in self.flats
        }
        for g, F in zip(W.elements, self.flat_by_element):
            if F.dim != W.fixed_space_dim(g):
                raise AssertionError("flat encoding disagrees with fixed-space dim")
        self.orbits: tuple[FlatOrbit, ...] = self._build_orbits()
        self._orbit_of_flat = {
            F: orb for orb in self.orbits for F in orb.flats
        }

    # -- construction helpers ------------------------------------------------

    def _build_orbits(self):
        W = self.W
        records = []
        seen: set[Flat] = set()
        for Z in self.flats:
            if Z in seen:
                continue
            members = sorted(
                {act_on_flat(w, Z) for w in W.elements},
                key=lambda F: (W.rank - F.dim, F),
            )
            seen.update(members)
            rep = members[0]
            pointwise = sum(
                1 for F in self.flat_by_element if rep in self._below[F]
            )
            setwise = sum(1 for w in W.elements if act_on_flat(w, rep) == rep)
            if len(members) * setwise != W.order:
                raise AssertionError("orbit-stabilizer bookkeeping failed")
            index, remainder = divmod(setwise, pointwise)
            if remainder:
                raise AssertionError("pointwise stabilizer is not a subgroup slice")
            chi = self.char_poly(rep)
            degrees = self._parabolic_degrees(rep, pointwise)
            records.append(
                FlatOrbit(
                    representative=rep,
                    flats=tuple(members),
                    orbit_size=len(members),
                    pointwise_order=pointwise,
                    setwise_order=setwise,
                    index=index,
                    char_poly=chi,
                    os_exponents=integer_roots(chi),
                    parabolic_degrees=degrees,
                    label=(rep.dim, pointwise, degrees),
                    pretty_name=_pretty_name(degrees),
                )
            )
        if W.d <= 2:
            for rec in records:
                if rec.os_exponents is None:
                    raise AssertionError(
                        "restricted characteristic polynomial of a Weyl member "
                        "failed to split over the integers"
                    )
        return self._disambiguate_names(records)

    @staticmethod
    def _disambiguate_names(records):
        tally = Counter(rec.pretty_name for rec in records)
        suffixes: dict[str, int] = {}
        out = []
        for rec in records:
            name = rec.pretty_name
            if tally[name] > 1:
                k = suffixes.get(name, 0)
                suffixes[name] = k + 1
                suffix = chr(ord("a") + k)
                rec = FlatOrbit(
                    **{**rec.__dict__, "pretty_name": f"{name}.{suffix}"}
                )
            out.append(rec)
        return tuple(out)

    def _parabolic_degrees(self, Z: Flat, pointwise_order: int) -> tuple[int, ...]:
        W = self.W
        codim = W.rank - Z.dim
        counts = [0] * (codim + 1)
        for g, F in zip(W.elements, self.flat_by_element):
            if Z in self._below[F]:
                counts[W.fixed_space_dim(g) - Z.dim] += 1
        degrees = _degrees_from_census(counts)
        if math.prod(degrees) != pointwise_order:
            raise AssertionError("parabolic degrees do not multiply to the order")
        return degrees

    # -- queries ---------------------------------------------------------------

    def orbit_of(self, Z: Flat) -> FlatOrbit:
        return self._orbit_of_flat[Z]

    def orbit_named(self, pretty_name: str) -> FlatOrbit:
        for orb in self.orbits:
            if orb.pretty_name == pretty_name:
                return orb
        raise KeyError(pretty_name)

    def pointwise_stabilizer(self, Z: Flat) -> tuple[GroupElement, ...]:
        return tuple(
            g
            for g, F in zip(self.W.elements, self.flat_by_element)
            if Z in self._below[F]
        )

    def setwise_stabilizer(self, Z: Flat) -> tuple[GroupElement, ...]:
        return tuple(g for g in self.W.elements if act_on_flat(g, Z) == Z)

    def char_poly(self, Z: Flat) -> tuple[int, ...]:
        """Characteristic polynomial of the arrangement restricted to Z.

        Its intersection lattice is {X in L : X <= Z}; Moebius values come
        from the standard top-down recursion.
        """
        below = sorted(self._below[Z], key=lambda F: -F.dim)
        below_sets = {X: self._below[X] for X in below}
        mob: dict[Flat, int] = {}
        for X in below:
            if X == Z:
                mob[X] = 1
                continue
            mob[X] = -sum(mob[Y] for Y in below if Y != X and X in below_sets[Y])
        coeffs = [0] * (Z.dim + 1)
        for X, mu in mob.items():
            coeffs[X.dim] += mu
        if coeffs[-1] != 1:
            raise AssertionError("characteristic polynomial is not monic")
        return tuple(coeffs)


def intersection_lattice(W: ReflectionGroup) -> FlatLattice:
    try:
        return W._cache["flat_lattice"]
    except KeyError:
        lattice = FlatLattice(W)
        W._cache["flat_lattice"] = lattice
        return lattice


# -- the quotient C_Z = N_W(Z)/W_Z acting on Z ---------------------------------


def _cz_elements(W: ReflectionGroup, Z: Flat):
    """Faithful monomial realization of N_W(Z)/W_Z on the block coordinates."""
    coords = Z.coords_of
    bases = [block[0][0] for block in Z.blocks]
    m = len(bases)
    pointwise = 0
    cosets: set[GroupElement] = set()
    for w in W.elements:
        if act_on_flat(w, Z) != Z:
            continue
        tau = []
        phases = []
        for c0 in bases:
            image = w.perm[c0]
            k, o = coords[image]
            tau.append(k)
            phases.append((w.weights[c0] - o) % W.d)
        x = GroupElement(tuple(tau), tuple(phases), W.d)
        if x.is_identity:
            pointwise += 1
        cosets.add(x)
    return tuple(sorted(cosets)), pointwise


def _molien_check(members, degrees, sym):
    """Average of 1/det(1-qM) must match prod 1/(1-q^d) at sample points."""
    for q in (0.171, 0.313):
        acc = 0.0
        for x in members:
            det = np.linalg.det(np.eye(x.n) - q * x.matrix())
            if sym:
                det /= 1.0 - q
            acc += 1.0 / det
        lhs = acc / len(members)
        rhs = 1.0
        for deg in degrees:
            rhs /= 1.0 - q**deg
        if abs(lhs - rhs) > MOLIEN_TOL * max(1.0, abs(rhs)):
            raise MolienMismatchError(
                f"Molien series mismatch at q={q}: census {lhs} vs degrees {rhs}"
            )


def cz_report(W: ReflectionGroup, Z: Flat) -> dict:
    """Order, reflection-group verdict, degrees, and q-polynomial for N_W(Z)/W_Z."""
    members, pointwise = _cz_elements(W, Z)
    setwise = pointwise * len(members)
    sym = Z.sym
    dim = Z.dim

    fixdims = {x: _fix_dim_monomial(x, sym) for x in members}
    reflections = [x for x in members if fixdims[x] == dim - 1]
    generated = {x for x in members if x.is_identity}
    frontier = list(generated)
    while frontier:
        g = frontier.pop()
        for t in reflections:
            gt = compose(g, t)
            if gt not in generated:
                generated.add(gt)
                frontier.append(gt)
    is_reflection_group = len(generated) == len(members)

    report = {
        "order": len(members),
        "pointwise_order": pointwise,
        "setwise_order": setwise,
        "dim": dim,
        "is_reflection_group": is_reflection_group,
        "degrees": None,
        "q_polynomial": None,
    }
    if not is_reflection_group:
        return report

    counts = [0] * (dim + 1)
    for x in members:
        counts[fixdims[x]] += 1
    degrees = _degrees_from_census(counts)
    if math.prod(degrees) != len(members):
        raise AssertionError("quotient degrees do not multiply to the order")
    _molien_check(members, degrees, sym)
    h = W.coxeter_number
    q_poly = q_product_ratio([h * i for i in range(1, dim + 1)], degrees)
    report["degrees"] = degrees
    report["q_polynomial"] = q_poly
    report["q_at_one"] = poly_eval(q_poly, 1)
    return report
