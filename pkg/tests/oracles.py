"""Independent reference computations used only by the tests.

None of these call into the code paths they are compared against.
"""
from __future__ import annotations

import itertools
import random

import networkx as nx
import numpy as np
import sympy

from bowtie_spectra.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[a], index[b]) for a, b in h.edges()])


def brute_canonical(g: Graph) -> tuple:
    """Lexicographically largest sorted edge list over all n! relabelings."""
    best = None
    edges = g.edges()
    for perm in itertools.permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or key > best:
            best = key
    return (g.n, best)


def brute_contains(host: Graph, pattern: Graph, induced: bool = False) -> bool:
    pe = pattern.edges()
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[a], image[b]) for a, b in pe):
            if not induced:
                return True
            if all(pattern.has_edge(a, b) == host.has_edge(image[a], image[b])
                   for a in range(pattern.n) for b in range(a + 1, pattern.n)):
                return True
    return False


def numpy_rho(g: Graph) -> float:
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.adjacency_matrix().astype(float))[-1])


def sympy_charpoly(matrix) -> list[int]:
    """Descending integer coefficients of det(xI - M) via sympy's determinant."""
    x = sympy.Symbol("x")
    M = sympy.Matrix(matrix)
    poly = sympy.Poly((x * sympy.eye(M.shape[0]) - M).det(method="berkowitz"), x)
    return [int(c) for c in poly.all_coeffs()]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected(rng: random.Random, n: int, extra: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < extra:
                edges.add((i, j))
    return Graph.from_edges(n, sorted(edges))


def connected_classes_by_edges(m: int) -> int:
    """Isomorphism classes of connected graphs with m edges, from the
    networkx graph atlas (all graphs on <= 7 vertices) plus, for m = 7,
    the trees on 8 vertices."""
    count = 0
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() >= 1 and h.number_of_edges() == m and nx.is_connected(h):
            count += 1
    if m == 7:
        count += sum(1 for _ in nx.nonisomorphic_trees(8))
    return count


def labeled_connected_classes(m: int) -> int:
    """Brute force: every labelled m-edge graph on m+1 vertices, connected
    after discarding isolated vertices, deduplicated by brute canonical form."""
    n = m + 1
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = set()
    for es in itertools.combinations(pairs, m):
        used = sorted({v for e in es for v in e})
        # only keep vertex sets {0..k-1}: every class has such a labelling
        if used != list(range(len(used))):
            continue
        h = nx.Graph(list(es))
        if not nx.is_connected(h):
            continue
        seen.add(brute_canonical(Graph.from_edges(len(used), es)))
    return len(seen)


def labeled_connected_classes_sorted(m: int) -> int:
    """Labelled enumeration for larger m: every m-edge graph on vertex set
    {0..k-1} whose degrees are non-increasing in label order (each class has
    such a labelling), deduplicated with networkx isomorphism tests inside
    buckets of an invariant."""
    total = 0
    for k in range(2, m + 2):
        pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
        if len(pairs) < m:
            continue
        full = (1 << k) - 1
        buckets: dict = {}
        for es in itertools.combinations(pairs, m):
            deg = [0] * k
            adj = [0] * k
            for a, b in es:
                deg[a] += 1
                deg[b] += 1
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            if deg[-1] == 0 or any(deg[i] < deg[i + 1] for i in range(k - 1)):
                continue
            seen = reach = 1
            while reach:
                nxt = 0
                for v in range(k):
                    if reach >> v & 1:
                        nxt |= adj[v]
                reach = nxt & ~seen
                seen |= reach
            if seen != full:
                continue
            key = tuple(sorted((deg[v], tuple(sorted(deg[w] for w in range(k) if adj[v] >> w & 1)))
                               for v in range(k)))
            reps = buckets.setdefault(key, [])
            h = nx.Graph(list(es))
            if not any(nx.is_isomorphic(h, r) for r in reps):
                reps.append(h)
        total += sum(len(r) for r in buckets.values())
    return total
