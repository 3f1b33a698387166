"""Canonical labelling by colour refinement plus individualisation.

The search tree is pruned with automorphisms discovered at its leaves
(two leaves with equal certificates differ by an automorphism).  Only
automorphisms fixing the current individualisation path pointwise are
used for pruning at a node, which keeps the pruning sound.
"""
from __future__ import annotations

from typing import Sequence

from .graph import Graph, iter_bits, popcount


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Each cell is split by the vector of neighbour counts into every cell;
    fragments are ordered by that vector, so the result is label-invariant.
    """
    while True:
        masks = []
        for c in cells:
            mk = 0
            for v in c:
                mk |= 1 << v
            masks.append(mk)
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(popcount(adj[v] & mk) for mk in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            changed = True
            for k in keys:
                out.append([v for v in c if sig[v] == k])
        cells = out
        if not changed:
            return cells


def equitable_cells(g: Graph, colors: Sequence[int] | None = None) -> list[list[int]]:
    """Coarsest equitable partition refining ``colors`` (degree-free start)."""
    return _refine(g.adj, _initial_cells(g.n, colors))


def _initial_cells(n: int, colors: Sequence[int] | None) -> list[list[int]]:
    if colors is None:
        return [list(range(n))] if n else []
    groups: dict = {}
    for v in range(n):
        groups.setdefault(colors[v], []).append(v)
    return [groups[k] for k in sorted(groups)]


def _certificate(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in iter_bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.first: tuple[tuple[int, ...], list[int]] | None = None
        self.autos: list[list[int]] = []

    def _record_auto(self, order_a: Sequence[int], order_b: Sequence[int]) -> None:
        # vertex order_a[i] maps to order_b[i]
        perm = [0] * len(order_a)
        for a, b in zip(order_a, order_b):
            perm[a] = b
        if any(perm[i] != i for i in range(len(perm))):
            self.autos.append(perm)

    def leaf(self, order: list[int]) -> None:
        cert = _certificate(self.adj, order)
        if self.first is None:
            self.first = (cert, order)
        elif cert == self.first[0]:
            self._record_auto(self.first[1], order)
        if self.best is None or cert > self.best:
            self.best, self.best_order = cert, order
        elif cert == self.best and self.best_order is not order:
            self._record_auto(self.best_order, order)

    def run(self, cells: list[list[int]], path: list[int]) -> None:
        cells = _refine(self.adj, cells)
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            self.leaf([c[0] for c in cells])
            return
        cell = cells[target]
        done: list[int] = []
        for v in cell:
            # automorphisms found in earlier branches may cover v already
            if any(self._same_orbit(d, v, path) for d in done):
                continue
            done.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self.run(child, path + [v])

    def _same_orbit(self, a: int, b: int, path: list[int]) -> bool:
        usable = [p for p in self.autos if all(p[v] == v for v in path)]
        if not usable:
            return False
        seen = {a}
        frontier = [a]
        while frontier:
            x = frontier.pop()
            for p in usable:
                y = p[x]
                if y == b:
                    return True
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return False


def _twin_transpositions(g: Graph, colors: Sequence[int] | None) -> list[list[int]]:
    # swapping two vertices with equal colour and equal closed or open
    # neighbourhoods is an automorphism
    classes: dict = {}
    for v in range(g.n):
        c = None if colors is None else colors[v]
        classes.setdefault((c, "open", g.adj[v]), []).append(v)
        classes.setdefault((c, "closed", g.adj[v] | 1 << v), []).append(v)
    out = []
    for members in classes.values():
        for a, b in zip(members, members[1:]):
            perm = list(range(g.n))
            perm[a], perm[b] = b, a
            out.append(perm)
    return out


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """Permutation ``perm`` with ``g.relabel(perm)`` canonical.

    ``colors`` is an optional vertex colouring that isomorphisms must
    preserve; colour values are compared by sort order only.
    """
    if g.n == 0:
        return []
    search = _Search(g.adj)
    search.autos.extend(_twin_transpositions(g, colors))
    search.run(_initial_cells(g.n, colors), [])
    perm = [0] * g.n
    for i, v in enumerate(search.best_order):
        perm[v] = i
    return perm


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> Graph:
    return g.relabel(canonical_labeling(g, colors))


def certificate(g: Graph, colors: Sequence[int] | None = None) -> tuple:
    """Hashable isomorphism invariant that is complete (equal iff isomorphic)."""
    perm = canonical_labeling(g, colors)
    form = g.relabel(perm)
    if colors is None:
        return (g.n, form.adj)
    inv = [0] * g.n
    for v, p in enumerate(perm):
        inv[p] = v
    return (g.n, form.adj, tuple(colors[inv[i]] for i in range(g.n)))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a).adj == canonical_form(b).adj
