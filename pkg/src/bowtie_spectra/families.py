"""Constructors for the named graph families.

Every constructor that carries a block structure returns ``(graph, labeling)``
where the labeling is an ordered ``name -> vertex bitset`` map.  Vertex
numbering is fixed so graph6 strings are reproducible:

* ``make_gmt``:      u*=0, u=1, pages T, pendants I
* ``make_k4m``:      u*=0, R={1,2,3}, pendants I
* ``make_case2_H``:  u*=0, u=1, v=2, w=3, R, I, T, z (last); R[i] ~ T[i]
* ``make_case2_H2``: u*=0, u=1, v=2, w=3, z=4, pendants I
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import Graph, bits_of, iter_bits, popcount


class FamilyError(ValueError):
    """Parameters outside a constructor's domain."""


@dataclass(frozen=True)
class BlockLabeling:
    names: tuple[str, ...]
    sets: tuple[int, ...]

    @classmethod
    def from_lists(cls, blocks: list[tuple[str, list[int]]]) -> "BlockLabeling":
        return cls(tuple(k for k, _ in blocks), tuple(bits_of(v) for _, v in blocks))

    def __getitem__(self, name: str) -> int:
        return self.sets[self.names.index(name)]

    def items(self):
        return zip(self.names, self.sets)

    def sizes(self) -> dict[str, int]:
        return {k: popcount(s) for k, s in self.items()}

    def partition(self) -> list[list[int]]:
        """Non-empty blocks as sorted vertex lists, in labeling order."""
        return [list(iter_bits(s)) for s in self.sets if s]

    def nonempty(self) -> list[int]:
        """Indices of blocks that contain at least one vertex."""
        return [i for i, s in enumerate(self.sets) if s]

    def validate(self, g: Graph) -> None:
        seen = 0
        for k, s in self.items():
            if s & seen:
                raise FamilyError(f"block {k!r} overlaps an earlier block")
            seen |= s
        if seen != (1 << g.n) - 1:
            raise FamilyError("blocks do not cover the vertex set")

    def to_json(self) -> dict[str, list[int]]:
        return {k: list(iter_bits(s)) for k, s in self.items()}


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


# plain families -------------------------------------------------------------


def make_split_star(n: int, k: int) -> Graph:
    """S_{n,k}: K_k joined to n-k independent vertices."""
    _need(1 <= k <= n, f"need 1 <= k <= n, got n={n}, k={k}")
    edges = [(i, j) for i in range(k) for j in range(i + 1, n)]
    return Graph.from_edges(n, edges)


def make_complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return make_split_star(n, n)


def make_cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_star(m: int) -> Graph:
    """Star with ``m`` edges (order m+1), centre 0."""
    _need(m >= 1, "star needs at least one edge")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def make_complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "both sides must be non-empty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def make_h_cycle_triangle(length: int) -> Graph:
    """H(length, 3): a cycle and a triangle sharing vertex 0."""
    _need(length >= 3, "cycle length must be at least 3")
    edges = [(i, (i + 1) % length) for i in range(length)]
    edges += [(0, length), (0, length + 1), (length, length + 1)]
    return Graph.from_edges(length + 2, edges)


def make_friendship(k: int) -> Graph:
    _need(k >= 1, "friendship graph needs k >= 1")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


# labelled families -----------------------------------------------------------


def make_book(m: int) -> tuple[Graph, BlockLabeling]:
    """Book graph S_{(m+3)/2, 2} with blocks spine={0,1}, pages."""
    _need(m >= 1 and m % 2 == 1, f"book graph needs odd m >= 1, got {m}")
    n = (m + 3) // 2
    g = make_split_star(n, 2)
    return g, BlockLabeling.from_lists([("spine", [0, 1]), ("pages", list(range(2, n)))])


def make_gmt(m: int, t: int) -> tuple[Graph, BlockLabeling]:
    """G(m,t): a book whose vertex 0 also carries ``t`` pendants."""
    _need(t >= 0, "t must be non-negative")
    _need(m > t + 2, f"need m > t+2, got m={m}, t={t}")
    _need((m - t) % 2 == 1, f"m - t must be odd, got m={m}, t={t}")
    s = (m - t - 1) // 2
    pages = list(range(2, 2 + s))
    pend = list(range(2 + s, 2 + s + t))
    edges = [(0, 1)] + [(x, p) for p in pages for x in (0, 1)] + [(0, p) for p in pend]
    g = Graph.from_edges(2 + s + t, edges)
    return g, BlockLabeling.from_lists([("u*", [0]), ("u", [1]), ("T", pages), ("I", pend)])


def make_k4m(m: int) -> tuple[Graph, BlockLabeling]:
    """K_4 with m-6 pendants attached at vertex 0."""
    _need(m >= 6, f"K4^m needs m >= 6, got {m}")
    pend = list(range(4, m - 2))
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)] + [(0, p) for p in pend]
    g = Graph.from_edges(m - 2, edges)
    return g, BlockLabeling.from_lists([("u*", [0]), ("R", [1, 2, 3]), ("I", pend)])


def make_case2_H(m: int, t: int) -> tuple[Graph, BlockLabeling]:
    """The graph H with |T| = |R| = t and |I| = m - 3t - 7 (t=1 gives H_1)."""
    _need(t >= 1, "t must be at least 1")
    k = m - 3 * t - 7
    _need(k >= 0, f"need m - 3t - 7 >= 0, got m={m}, t={t}")
    us, u, v, w = 0, 1, 2, 3
    R = list(range(4, 4 + t))
    I = list(range(4 + t, 4 + t + k))
    T = list(range(4 + t + k, 4 + 2 * t + k))
    z = 4 + 2 * t + k
    edges = [(us, u), (us, v), (us, w), (u, v), (u, w), (z, v), (z, w)]
    edges += [(us, r) for r in R] + [(us, i) for i in I] + [(u, x) for x in T]
    edges += list(zip(R, T))
    g = Graph.from_edges(z + 1, edges)
    lab = BlockLabeling.from_lists(
        [("u*", [us]), ("u", [u]), ("{v,w}", [v, w]), ("R", R), ("I", I), ("T", T), ("z", [z])]
    )
    return g, lab


def make_case2_H2(m: int) -> tuple[Graph, BlockLabeling]:
    _need(m >= 7, f"H_2 needs m >= 7, got {m}")
    us, u, v, w, z = range(5)
    I = list(range(5, m - 2))
    edges = [(us, u), (us, v), (us, w), (u, v), (u, w), (z, v), (z, w)] + [(us, i) for i in I]
    g = Graph.from_edges(m - 2, edges)
    lab = BlockLabeling.from_lists([("u*", [us]), ("u", [u]), ("{v,w}", [v, w]), ("z", [z]), ("I", I)])
    return g, lab


# closed-form quotient matrices (block order as in the labelings above) ------


def quotient_book(m: int) -> list[list[int]]:
    return [[1, (m - 1) // 2], [2, 0]]


def quotient_gmt(m: int, t: int) -> list[list[int]]:
    s = (m - t - 1) // 2
    return [[0, 1, s, t], [1, 0, s, 0], [1, 1, 0, 0], [1, 0, 0, 0]]


def quotient_k4m(m: int) -> list[list[int]]:
    return [[0, 3, m - 6], [1, 2, 0], [1, 0, 0]]


def quotient_case2_H(m: int, t: int) -> list[list[int]]:
    return [
        [0, 1, 2, t, m - 3 * t - 7, 0, 0],
        [1, 0, 2, 0, 0, t, 0],
        [1, 1, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0],
    ]


def quotient_case2_H2(m: int) -> list[list[int]]:
    return [
        [0, 1, 2, 0, m - 7],
        [1, 0, 2, 0, 0],
        [1, 1, 0, 1, 0],
        [0, 0, 2, 0, 0],
        [1, 0, 0, 0, 0],
    ]


def restrict(matrix: list[list[int]], keep: list[int]) -> list[list[int]]:
    """Principal submatrix on the block indices ``keep``."""
    return [[matrix[i][j] for j in keep] for i in keep]


def expected_size(family: str, *params: int) -> int:
    """Closed-form edge counts used by the constructor tests."""
    if family == "split_star":
        n, k = params
        return comb(k, 2) + k * (n - k)
    if family == "h_cycle_triangle":
        return params[0] + 3
    if family == "friendship":
        return 3 * params[0]
    if family in ("gmt", "k4m", "case2_H", "case2_H2", "book"):
        return params[0]
    raise KeyError(family)


# name registry used by the command line -------------------------------------

PATTERNS = {
    "k3": lambda: make_complete(3),
    "c4": lambda: make_cycle(4),
    "h33": lambda: make_h_cycle_triangle(3),
    "h43": lambda: make_h_cycle_triangle(4),
}


def pattern(name: str) -> Graph:
    try:
        return PATTERNS[name]()
    except KeyError:
        raise FamilyError(f"unknown pattern {name!r}") from None
