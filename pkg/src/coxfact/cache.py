"""Disk cache for the per-group tables that dominate report time.

Layout: <root>/<d>_<r>_<n>/{lengths,nc,lattice}.json, integer-only payloads
with a format-version stamp.  Group elements are stored as a pair
(one-line permutation, weight vector).  Every file is validated on load;
anything stale, malformed, or inconsistent with the group is silently
recomputed and rewritten, so cache hits and misses produce identical
reports.
"""

from __future__ import annotations

import json
from pathlib import Path

from .absolute import length_table, nc_elements, nc_size_formula
from .flats import Flat, intersection_lattice
from .groups import GroupElement, ReflectionGroup

__all__ = ["FORMAT_VERSION", "group_cache_dir", "prime_group", "save_group"]

FORMAT_VERSION = 1


def group_cache_dir(root, W: ReflectionGroup) -> Path:
    return Path(root) / f"{W.d}_{W.r}_{W.n}"


def _write_payload(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(payload, sort_keys=True))
    tmp.replace(path)


def _element_payload(g: GroupElement) -> list:
    return [list(g.perm), list(g.weights)]


def _element_from_payload(W: ReflectionGroup, raw) -> GroupElement:
    perm, weights = raw
    g = GroupElement(
        tuple(int(i) for i in perm), tuple(int(w) % W.d for w in weights), W.d
    )
    W.position(g)  # membership check; raises KeyError for strangers
    return g


def _flat_payload(F: Flat) -> list:
    return [list(F.zeros), [[list(pair) for pair in block] for block in F.blocks]]


def _flat_from_payload(W: ReflectionGroup, raw) -> Flat:
    zeros, blocks = raw
    return Flat(
        n=W.n,
        d=W.d,
        sym=W.d == 1,
        zeros=tuple(int(z) for z in zeros),
        blocks=tuple(
            tuple((int(c), int(o)) for c, o in block) for block in blocks
        ),
    )


def _load_lengths(W: ReflectionGroup, path: Path) -> bool:
    data = json.loads(path.read_text())
    if data.get("format_version") != FORMAT_VERSION:
        return False
    lengths = data["lengths"]
    if len(lengths) != W.order:
        return False
    if not all(isinstance(v, int) and 0 <= v <= W.rank + 2 for v in lengths):
        return False
    if lengths[W.position(W.identity)] != 0:
        return False
    W._cache["length_table"] = tuple(lengths)
    return True


def _load_nc(W: ReflectionGroup, path: Path) -> bool:
    data = json.loads(path.read_text())
    if data.get("format_version") != FORMAT_VERSION:
        return False
    elements = tuple(_element_from_payload(W, raw) for raw in data["elements"])
    if len(elements) != nc_size_formula(W) or len(set(elements)) != len(elements):
        return False
    W._cache["nc_elements"] = elements
    return True


def _load_lattice(W: ReflectionGroup, path: Path) -> bool:
    """The lattice file is an audited artifact, not a compute shortcut.

    Rebuilding orbit invariants from JSON would just re-serialize the
    constructor, so the file stores the flat list alone and is checked
    against the freshly built lattice; a mismatch reports a miss so the
    caller rewrites it.
    """
    data = json.loads(path.read_text())
    if data.get("format_version") != FORMAT_VERSION:
        return False
    stored = tuple(_flat_from_payload(W, raw) for raw in data["flats"])
    return stored == intersection_lattice(W).flats


def prime_group(W: ReflectionGroup, root) -> dict[str, bool]:
    """Load whatever validates from the cache; report per-file hits.

    Always leaves the group fully primed (missing or bad files are
    recomputed) and the cache directory fresh.
    """
    directory = group_cache_dir(root, W)
    hits = {}
    for name, loader in (
        ("lengths", _load_lengths),
        ("nc", _load_nc),
        ("lattice", _load_lattice),
    ):
        path = directory / f"{name}.json"
        try:
            hits[name] = path.is_file() and loader(W, path)
        except Exception:
            hits[name] = False
    save_group(W, root, skip={name for name, hit in hits.items() if hit})
    return hits


def save_group(W: ReflectionGroup, root, skip=()) -> None:
    directory = group_cache_dir(root, W)
    if "lengths" not in skip:
        _write_payload(
            directory / "lengths.json",
            {"format_version": FORMAT_VERSION, "lengths": list(length_table(W))},
        )
    if "nc" not in skip:
        _write_payload(
            directory / "nc.json",
            {
                "format_version": FORMAT_VERSION,
                "elements": [_element_payload(g) for g in nc_elements(W)],
            },
        )
    if "lattice" not in skip:
        _write_payload(
            directory / "lattice.json",
            {
                "format_version": FORMAT_VERSION,
                "flats": [
                    _flat_payload(F) for F in intersection_lattice(W).flats
                ],
            },
        )
