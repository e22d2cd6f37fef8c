"""Absolute order: reflection length, intervals, and noncrossing elements.

Reflection length is the word length over the full reflection set, computed
once per group by breadth-first search from the identity.  The absolute
order is then u <= v iff lengths add along the way: l(u) + l(u^-1 v) = l(v).
The noncrossing elements are the interval [identity, c] below the Coxeter
element; on that interval reflection length agrees with the codimension of
the fixed space, which is asserted rather than assumed.
"""

from __future__ import annotations

import math
from collections import deque

from .groups import GroupElement, ReflectionGroup, compose, inverse

__all__ = [
    "interval",
    "leq_abs",
    "length_table",
    "nc_elements",
    "nc_size_formula",
    "reflection_length",
]


def length_table(W: ReflectionGroup) -> tuple[int, ...]:
    """Reflection length of every element, indexed by W.position."""
    try:
        return W._cache["length_table"]
    except KeyError:
        pass
    lengths = [-1] * W.order
    lengths[W.position(W.identity)] = 0
    frontier = deque([W.identity])
    radius = 0
    cap = W.rank + 2
    while frontier and radius < cap:
        radius += 1
        for _ in range(len(frontier)):
            g = frontier.popleft()
            base = lengths[W.position(g)]
            for t in W.reflections:
                gt = compose(g, t)
                pos = W.position(gt)
                if lengths[pos] == -1:
                    lengths[pos] = base + 1
                    frontier.append(gt)
    if any(l == -1 for l in lengths):
        raise RuntimeError(
            "reflection-length search did not exhaust the group within "
            f"radius {cap}; the generating set must be wrong"
        )
    out = tuple(lengths)
    W._cache["length_table"] = out
    return out


def reflection_length(W: ReflectionGroup, g: GroupElement) -> int:
    return length_table(W)[W.position(g)]


def leq_abs(W: ReflectionGroup, u: GroupElement, v: GroupElement) -> bool:
    """u <= v in absolute order: lengths add along u, then u^-1 v."""
    lt = length_table(W)
    gap = compose(inverse(u), v)
    return lt[W.position(u)] + lt[W.position(gap)] == lt[W.position(v)]


def interval(W: ReflectionGroup, u: GroupElement, v: GroupElement) -> tuple[GroupElement, ...]:
    """All w with u <= w <= v, in the group's canonical element order."""
    return tuple(g for g in W.elements if leq_abs(W, u, g) and leq_abs(W, g, v))


def nc_size_formula(W: ReflectionGroup) -> int:
    num = math.prod(W.coxeter_number + deg for deg in W.degrees)
    size, rem = divmod(num, W.order)
    if rem:
        raise AssertionError("noncrossing count formula did not divide evenly")
    return size


def nc_elements(W: ReflectionGroup) -> tuple[GroupElement, ...]:
    """The interval [identity, c], canonically ordered and invariant-checked."""
    try:
        return W._cache["nc_elements"]
    except KeyError:
        pass
    c = W.coxeter_element()
    nc = interval(W, W.identity, c)
    lt = length_table(W)
    for u in nc:
        if lt[W.position(u)] != W.rank - W.fixed_space_dim(u):
            raise AssertionError(
                "noncrossing element whose length differs from its fixed-space "
                "codimension; the order or the group arithmetic is wrong"
            )
    if len(nc) != nc_size_formula(W):
        raise AssertionError("noncrossing interval size disagrees with the formula")
    W._cache["nc_elements"] = nc
    return nc
