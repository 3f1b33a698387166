"""Subgraph containment by bitset backtracking."""
from __future__ import annotations

from typing import Sequence

from .graph import Graph, iter_bits, popcount


def _match_order(p: Graph) -> list[int]:
    """Pattern vertices: highest degree first, then greedily most-connected
    to the already placed prefix, so candidate sets shrink early."""
    if p.n == 0:
        return []
    degs = p.degrees()
    order = [max(range(p.n), key=lambda v: (degs[v], -v))]
    placed = 1 << order[0]
    while len(order) < p.n:
        best = max(
            (v for v in range(p.n) if not placed >> v & 1),
            key=lambda v: (popcount(p.adj[v] & placed), degs[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def contains_subgraph(host: Graph, pattern: Graph, induced: bool = False) -> dict[int, int] | None:
    """Return an embedding ``pattern vertex -> host vertex`` or ``None``.

    With ``induced=True`` non-edges of the pattern must map to non-edges.
    """
    if pattern.n == 0:
        raise ValueError("pattern must have at least one vertex")
    if pattern.n > host.n or pattern.m > host.m:
        return None
    order = _match_order(pattern)
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    full = (1 << host.n) - 1
    by_degree = [0] * (max(pdeg) + 1)
    for d in range(len(by_degree)):
        by_degree[d] = sum(1 << v for v in range(host.n) if hdeg[v] >= d)
    # earlier pattern neighbours / non-neighbours of each position
    back_nb = []
    back_non = []
    for k, a in enumerate(order):
        back_nb.append([i for i in range(k) if pattern.has_edge(a, order[i])])
        back_non.append([i for i in range(k) if not pattern.has_edge(a, order[i])])
    image = [0] * pattern.n

    def extend(k: int, used: int) -> bool:
        if k == pattern.n:
            return True
        a = order[k]
        cand = by_degree[pdeg[a]] & ~used
        for i in back_nb[k]:
            cand &= host.adj[image[i]]
        if induced:
            for i in back_non[k]:
                cand &= ~host.adj[image[i]] & full
        for h in iter_bits(cand):
            image[k] = h
            if extend(k + 1, used | 1 << h):
                return True
        return False

    if not extend(0, 0):
        return None
    return {order[k]: image[k] for k in range(pattern.n)}


def is_embedding(host: Graph, pattern: Graph, emb: dict[int, int], induced: bool = False) -> bool:
    if sorted(emb) != list(range(pattern.n)) or len(set(emb.values())) != pattern.n:
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            e = pattern.has_edge(a, b)
            f = host.has_edge(emb[a], emb[b])
            if e and not f:
                return False
            if induced and f and not e:
                return False
    return True


def is_family_free(host: Graph, patterns: Sequence[Graph], induced: bool = False) -> bool:
    if not patterns:
        raise ValueError("pattern list is empty")
    return all(contains_subgraph(host, p, induced) is None for p in patterns)


# fast paths for the patterns the search filters on --------------------------


def triangle_count(g: Graph) -> int:
    total = 0
    for i, row in enumerate(g.adj):
        for j in iter_bits(row >> (i + 1) << (i + 1)):
            total += popcount(row & g.adj[j] >> (j + 1) << (j + 1))
    return total


def has_triangle(g: Graph) -> bool:
    for i, row in enumerate(g.adj):
        for j in iter_bits(row):
            if row & g.adj[j]:
                return True
    return False


def _has_two_disjoint_edges(adj: Sequence[int], within: int) -> bool:
    edges = []
    for a in iter_bits(within):
        for b in iter_bits(adj[a] & within & ~((2 << a) - 1)):
            edges.append((1 << a) | (1 << b))
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if not e & f:
                return True
    return False


def has_bowtie(g: Graph) -> bool:
    """Two triangles sharing exactly one vertex: some G[N(v)] has a 2-matching."""
    return any(_has_two_disjoint_edges(g.adj, g.adj[v]) for v in range(g.n))


def has_h43(g: Graph) -> bool:
    """A triangle v-a-b and a 4-cycle v-c-d-e-v on five further distinct vertices."""
    adj = g.adj
    for v in range(g.n):
        nv = adj[v]
        for a in iter_bits(nv):
            for b in iter_bits(nv & adj[a] & ~((2 << a) - 1)):
                rest = nv & ~(1 << a | 1 << b)
                ban = 1 << v | 1 << a | 1 << b
                for c in iter_bits(rest):
                    for e in iter_bits(rest & ~((2 << c) - 1)):
                        if (adj[c] & adj[e]) & ~ban & ~(1 << c | 1 << e):
                            return True
    return False


def is_theorem_free(g: Graph) -> bool:
    """{H(3,3), H(4,3)}-freeness (non-induced) with a triangle prescreen.

    Both patterns contain a triangle, so triangle-free graphs pass at once.
    """
    if not has_triangle(g):
        return True
    return not has_bowtie(g) and not has_h43(g)
