"""Small simple graphs stored as bitset adjacency rows.

Row ``adj[i]`` is a Python int whose bit ``j`` is set iff ``i ~ j``.
Python ints are unbounded, so rows are never limited to one machine word;
the order cap only guards the parse boundary (graph6 input) and the
exhaustive search.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

DEFAULT_CAP = 64


class GraphError(ValueError):
    """Invalid graph construction."""


class Graph6Error(ValueError):
    """Base class for graph6 parse failures."""


class Graph6HeaderError(Graph6Error):
    pass


class Graph6CharacterError(Graph6Error):
    pass


class Graph6LengthError(Graph6Error):
    """Body shorter or longer than the header demands."""


class Graph6OrderError(Graph6Error):
    """Decoded order exceeds the configured cap."""


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        adj = tuple(int(r) for r in self.adj)
        object.__setattr__(self, "adj", adj)
        if self.n < 0 or len(adj) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(adj)}")
        full = (1 << self.n) - 1
        total = 0
        for i, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in iter_bits(row):
                if not adj[j] >> i & 1:
                    raise GraphError(f"asymmetric pair ({i}, {j})")
            total += popcount(row)
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in row-major order."""
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def add_edge(self, a: int, b: int) -> "Graph":
        rows = list(self.adj)
        rows[a] |= 1 << b
        rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))

    def remove_edge(self, a: int, b: int) -> "Graph":
        rows = list(self.adj)
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        return Graph(self.n, tuple(rows))

    def add_vertex(self) -> "Graph":
        return Graph(self.n + 1, self.adj + (0,))

    def delete_vertex(self, v: int) -> "Graph":
        """Remove ``v`` and shift higher labels down by one."""
        low = (1 << v) - 1
        rows = []
        for i, r in enumerate(self.adj):
            if i == v:
                continue
            rows.append((r & low) | ((r >> (v + 1)) << v))
        return Graph(self.n - 1, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``i`` becomes ``perm[i]``."""
        rows = [0] * self.n
        for i, r in enumerate(self.adj):
            new = 0
            for j in iter_bits(r):
                new |= 1 << perm[j]
            rows[perm[i]] = new
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(bits_of(index[u] for u in iter_bits(self.adj[v]) if u in index))
        return Graph(len(vertices), tuple(rows))

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, r in enumerate(self.adj):
            for j in iter_bits(r):
                a[i, j] = 1
        return a

    def adjacency_lists(self) -> list[list[int]]:
        """Dense 0/1 rows as nested Python int lists (exact arithmetic input)."""
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.adj]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


# graph6 -------------------------------------------------------------------


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Header-less graph6 string for the labelled adjacency of ``g``."""
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str, cap: int = DEFAULT_CAP) -> Graph:
    """Decode a header-less graph6 string.

    Raises a distinct :class:`Graph6Error` subclass for a bad header, bad
    characters, wrong body length and an order beyond ``cap``.
    """
    s = text.strip("\n")
    if s.startswith(">>graph6<<"):
        raise Graph6HeaderError("'>>graph6<<' headers are not accepted")
    if not s:
        raise Graph6HeaderError("empty input")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharacterError(f"character {ch!r} at offset {pos} outside '?'..'~'")
    vals = [ord(c) - 63 for c in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise Graph6HeaderError("truncated 4-byte order header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if n <= 62:
            raise Graph6HeaderError(f"non-minimal order header for n={n}")
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise Graph6HeaderError("truncated 8-byte order header")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        if n <= 258047:
            raise Graph6HeaderError(f"non-minimal order header for n={n}")
        body = vals[8:]
    if n > cap:
        raise Graph6OrderError(f"order {n} exceeds cap {cap}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6LengthError(f"body has {len(body)} bytes, order {n} needs {need}")
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6LengthError("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# basic statistics -----------------------------------------------------------


def components(g: Graph) -> list[int]:
    """Vertex bitsets of the connected components, ordered by lowest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = reach = 1 << v
        while reach:
            nxt = 0
            for u in iter_bits(reach):
                nxt |= g.adj[u]
            reach = nxt & ~comp
            comp |= reach
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    return len(components(g)) == 1


def degree_stats(g: Graph) -> dict:
    degs = g.degrees()
    return {
        "degrees": degs,
        "min": min(degs, default=0),
        "max": max(degs, default=0),
        "isolated_count": sum(1 for d in degs if d == 0),
    }
