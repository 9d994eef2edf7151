"""Isomorphism classes of connected uniform hypergraphs by edge count.

Generation is canonical augmentation: a size-``s`` class is grown from each
size-``s-1`` representative by adding one edge that meets the existing
vertex set (so every prefix stays connected).  Candidate edges are reduced to
orbits of the parent's automorphism group, and a child is kept only when the
added edge lies in the orbit of the child's canonical deletion edge.  Each
class is therefore produced exactly once, with no global dedup table.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from ternarity.errors import BudgetExceeded, InputError
from ternarity.hypergraph import canon
from ternarity.hypergraph.core import Hypergraph, externality

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassRecord:
    """A canonical representative stored as integer edge tuples."""

    key: bytes
    n: int
    edges: tuple

    def hypergraph(self, k: int) -> Hypergraph:
        return Hypergraph.from_edges(k, self.edges, vertices=range(self.n))


@dataclass
class EnumerationStats:
    labelings: int = 0
    candidates: int = 0
    duplicates: int = 0
    seconds: dict = field(default_factory=dict)


def _connected_without(edges, skip):
    rest = [e for i, e in enumerate(edges) if i != skip]
    if not rest:
        return True
    seen = set(rest[0])
    pending = rest[1:]
    grew = True
    while pending and grew:
        grew = False
        keep = []
        for e in pending:
            if seen.intersection(e):
                seen.update(e)
                grew = True
            else:
                keep.append(e)
        pending = keep
    return not pending


def _subset_orbit_reps(n, size, vgens):
    """Lexicographically first member of each orbit of ``size``-subsets."""
    seen = set()
    reps = []
    for s in combinations(range(n), size):
        if s in seen:
            continue
        reps.append(s)
        seen.add(s)
        stack = [s]
        while stack:
            cur = stack.pop()
            for g in vgens:
                img = tuple(sorted(g[v] for v in cur))
                if img not in seen:
                    seen.add(img)
                    stack.append(img)
    return reps


def _edge_invariant(edges, deg, e):
    return tuple(sorted((deg[v] for v in edges[e]), reverse=True))


def children(k: int, rec: ClassRecord, stats: EnumerationStats | None = None) -> list[ClassRecord]:
    """Accepted one-edge augmentations of a canonical representative."""
    n, pedges = rec.n, list(rec.edges)
    plab = canon.label(k, n, pedges)
    vgens = plab.vertex_generators()
    existing = set(pedges)
    out = []
    new_idx = len(pedges)
    for t in range(0, k):
        old = k - t
        if old < 1 or old > n:
            continue
        fresh = tuple(range(n, n + t))
        for s in _subset_orbit_reps(n, old, vgens):
            if t == 0 and s in existing:
                continue
            edges = pedges + [s + fresh]
            nn = n + t
            if stats is not None:
                stats.candidates += 1
            deg = [0] * nn
            for e in edges:
                for v in e:
                    deg[v] += 1
            deletable = [i for i in range(len(edges)) if i == new_idx or _connected_without(edges, i)]
            inv = {i: _edge_invariant(edges, deg, i) for i in deletable}
            best_inv = max(inv.values())
            if inv[new_idx] != best_inv:
                continue
            clab = canon.label(k, nn, edges)
            if stats is not None:
                stats.labelings += 1
            top = [i for i in deletable if inv[i] == best_inv]
            if len(top) > 1:
                rank = {e: r for r, e in enumerate(clab.order)}
                chosen = max(top, key=rank.__getitem__)
                if chosen != new_idx:
                    orbits = clab.edge_orbits()
                    if orbits[chosen] != orbits[new_idx]:
                        continue
            out.append(ClassRecord(clab.key, nn, tuple(clab.canonical_edges())))
    return out


def _children_batch(args):
    k, recs = args
    stats = EnumerationStats()
    result = []
    for rec in recs:
        result.extend(children(k, rec, stats))
    return result, stats.labelings, stats.candidates


def _atom(k: int) -> ClassRecord:
    edges = (tuple(range(k)),)
    lab = canon.label(k, k, edges)
    return ClassRecord(lab.key, k, tuple(lab.canonical_edges()))


def _cache_path(cache_dir, k, size):
    return os.path.join(cache_dir, f"classes-k{k}-s{size}-{canon.ALGORITHM_VERSION}.json")


def _load_level(cache_dir, k, size):
    if not cache_dir:
        return None
    path = _cache_path(cache_dir, k, size)
    if not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return [ClassRecord(bytes.fromhex(r["key"]), r["n"], tuple(tuple(e) for e in r["edges"])) for r in data["classes"]]


def _store_level(cache_dir, k, size, level):
    if not cache_dir:
        return
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, k, size)
    data = {
        "k": k,
        "size": size,
        "algorithm": canon.ALGORITHM_VERSION,
        "classes": [{"key": r.key.hex(), "n": r.n, "edges": [list(e) for e in r.edges]} for r in level],
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh, separators=(",", ":"))
    os.replace(tmp, path)


def enumerate_records(
    k: int,
    size: int,
    threads: int = 1,
    budget: float | None = None,
    cache_dir: str | None = None,
    stats: EnumerationStats | None = None,
) -> list[ClassRecord]:
    """Canonical records of all connected ``k``-uniform classes with ``size`` edges.

    ``budget`` is a wall-clock limit in seconds; when it runs out a
    :class:`BudgetExceeded` is raised carrying the records finished so far.
    """
    if k < 1:
        raise InputError("k must be positive")
    if size < 1:
        raise InputError("size must be at least 1")
    stats = stats if stats is not None else EnumerationStats()
    t0 = time.monotonic()
    level = _load_level(cache_dir, k, 1) or [_atom(k)]
    _store_level(cache_dir, k, 1, level)
    for s in range(2, size + 1):
        cached = _load_level(cache_dir, k, s)
        if cached is not None:
            level = cached
            continue
        ts = time.monotonic()
        found = {}
        done = 0
        chunk = max(1, min(64, len(level) // (threads * 8) or 1))
        batches = [level[i:i + chunk] for i in range(0, len(level), chunk)]

        def absorb(res):
            recs, nl, nc = res
            stats.labelings += nl
            stats.candidates += nc
            for r in recs:
                if r.key in found:
                    stats.duplicates += 1
                else:
                    found[r.key] = r

        def check_budget():
            if budget is not None and time.monotonic() - t0 > budget:
                partial = sorted(found.values(), key=lambda r: r.key)
                raise BudgetExceeded(
                    f"budget of {budget}s exhausted at size {s}",
                    partial=partial,
                    progress={"size": s, "parents_done": done, "parents_total": len(level)},
                )

        if threads > 1 and len(batches) > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                for res, batch in zip(pool.map(_children_batch, [(k, b) for b in batches]), batches):
                    absorb(res)
                    done += len(batch)
                    check_budget()
        else:
            for batch in batches:
                absorb(_children_batch((k, batch)))
                done += len(batch)
                check_budget()
        level = sorted(found.values(), key=lambda r: r.key)
        stats.seconds[s] = time.monotonic() - ts
        log.info("k=%d size=%d: %d classes in %.2fs", k, s, len(level), stats.seconds[s])
        _store_level(cache_dir, k, s, level)
    return level


def enumerate_classes(k: int, size: int, **kwargs) -> list[Hypergraph]:
    """One canonical representative per class, sorted by canonical bytes."""
    return [r.hypergraph(k) for r in enumerate_records(k, size, **kwargs)]


def enumerate_compositions(k: int, num_parts: int, target_externality: int, **kwargs) -> list[Hypergraph]:
    """Classes of splicings of ``num_parts`` atomic edges with the given externality.

    Every vertex of an atomic edge is external, so any gluing pattern is
    admissible and the splicings are exactly the connected classes of that
    size; the externality filter does the rest.
    """
    if num_parts < 2:
        raise InputError("a composition needs at least two parts")
    return [h for h in enumerate_classes(k, num_parts, **kwargs) if externality(h).externality == target_externality]
