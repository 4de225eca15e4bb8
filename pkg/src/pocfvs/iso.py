"""Induced-subgraph matching, isomorphism, and canonical labeling.

The matcher is a backtracking search over pattern vertices in a
most-constrained-first order; host candidates are filtered through bitmask
intersection of the adjacency and non-adjacency constraints imposed by the
already-matched vertices, so both edges and non-edges of the pattern are
preserved (induced semantics).

Canonical forms are computed by iterated degree refinement followed by a
branch-on-cell search over the remaining symmetric vertices; the minimum
adjacency encoding over the discrete refinements is the canonical key, so
equal keys characterize isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, iter_bits


def _matching_order(pattern: Graph) -> tuple[int, ...]:
    """Pattern vertices, most-constrained first, deterministic ties."""
    n = pattern.n
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best = None
        for v in range(n):
            if placed >> v & 1:
                continue
            anchored = (pattern.mask(v) & placed).bit_count()
            key = (anchored, pattern.degree(v), -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed |= 1 << best[1]
    return tuple(order)


def find_induced_embedding(pattern: Graph, host: Graph) -> dict[int, int] | None:
    """First induced embedding of ``pattern`` into ``host``, or ``None``.

    The returned map preserves both adjacency and non-adjacency. The search
    is complete: ``None`` means no induced embedding exists.
    """
    np_, nh = pattern.n, host.n
    if np_ == 0:
        return {}
    if np_ > nh or pattern.edge_count > host.edge_count:
        return None
    order = _matching_order(pattern)
    host_full = host.full_mask
    # degree-feasible host candidates per pattern vertex
    deg_ok = []
    for p in range(np_):
        dp = pattern.degree(p)
        deg_ok.append(sum(1 << v for v in range(nh) if host.degree(v) >= dp))
    # for each position, the earlier positions split into neighbors/others
    pre_nbrs: list[list[int]] = []
    pre_others: list[list[int]] = []
    for idx, p in enumerate(order):
        nb, ot = [], []
        for jdx in range(idx):
            (nb if pattern.has_edge(p, order[jdx]) else ot).append(jdx)
        pre_nbrs.append(nb)
        pre_others.append(ot)

    assignment = [0] * np_

    def backtrack(idx: int, used: int) -> bool:
        if idx == np_:
            return True
        p = order[idx]
        cands = deg_ok[p] & ~used & host_full
        for jdx in pre_nbrs[idx]:
            cands &= host.mask(assignment[jdx])
            if not cands:
                return False
        for jdx in pre_others[idx]:
            cands &= ~host.mask(assignment[jdx])
            if not cands:
                return False
        for w in iter_bits(cands):
            assignment[idx] = w
            if backtrack(idx + 1, used | (1 << w)):
                return True
        return False

    if backtrack(0, 0):
        return {order[idx]: assignment[idx] for idx in range(np_)}
    return None


def embeds_induced(pattern: Graph, host: Graph) -> bool:
    return find_induced_embedding(pattern, host) is not None


def is_free(g: Graph, family) -> bool:
    """True iff no member of ``family`` embeds into ``g`` as an induced subgraph."""
    return all(find_induced_embedding(h, g) is None for h in family)


def is_linear_forest(g: Graph) -> bool:
    """True iff every component is a path: acyclic with maximum degree <= 2."""
    return g.max_degree() <= 2 and g.is_acyclic()


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return find_induced_embedding(g, h) is not None


# -- canonical forms --------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant key plus one witnessing vertex order.

    Equality and hashing use only ``(n, edges)``; two graphs are isomorphic
    exactly when their forms compare equal. ``order[i]`` is the original
    vertex placed at canonical position ``i``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    order: tuple[int, ...] = field(compare=False)

    @property
    def key(self) -> tuple:
        return (self.n, self.edges)


def _refine(g: Graph, parts: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in cell) for cell in parts]
        new: list[list[int]] = []
        changed = False
        for cell in parts:
            if len(cell) == 1:
                new.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.mask(v) & m).bit_count() for m in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) == 1:
                new.append(cell)
            else:
                changed = True
                for sig in sorted(buckets):
                    new.append(buckets[sig])
        if not changed:
            return new
        parts = new


def _discrete_orders(g: Graph, parts: list[list[int]]):
    parts = _refine(g, parts)
    target = next((i for i, cell in enumerate(parts) if len(cell) > 1), None)
    if target is None:
        yield tuple(cell[0] for cell in parts)
        return
    cell = parts[target]
    for v in cell:
        rest = [w for w in cell if w != v]
        child = parts[:target] + [[v], rest] + parts[target + 1 :]
        yield from _discrete_orders(g, child)


def _encode(g: Graph, order: tuple[int, ...]) -> int:
    code = 0
    for a in range(len(order)):
        ma = g.mask(order[a])
        for b in range(a + 1, len(order)):
            code = (code << 1) | (ma >> order[b] & 1)
    return code


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    if n == 0:
        return CanonicalForm(0, (), ())
    if g.edge_count == 0 or g.is_complete():
        order = tuple(range(n))
        return CanonicalForm(n, g.edges(), order)
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(g.degree(v), []).append(v)
    initial = [by_degree[d] for d in sorted(by_degree)]
    best_code = None
    best_order = None
    for order in _discrete_orders(g, initial):
        code = _encode(g, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    pos = {v: i for i, v in enumerate(best_order)}
    edges = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges()))
    return CanonicalForm(n, edges, best_order)


def canonical_graph(g: Graph) -> Graph:
    form = canonical_form(g)
    return Graph(form.n, form.edges)
