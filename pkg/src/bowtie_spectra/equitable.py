"""Equitable partitions, quotient matrices and the divisibility /
spectral-transfer properties they enjoy."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, bits_of, is_connected, popcount
from .polynomial import Polynomial
from .spectral import DEFAULT_TOL, adjacency_char_poly, char_poly_exact, largest_real_root, spectral_radius


class PartitionError(ValueError):
    """Blocks are empty, overlap, or miss vertices."""


class NotEquitableError(ValueError):
    def __init__(self, vertex: int, block: int, expected: int, got: int):
        super().__init__(
            f"vertex {vertex} has {got} neighbours in block {block}, its block-mates have {expected}"
        )
        self.vertex = vertex
        self.block = block


@dataclass(frozen=True)
class QuotientResult:
    """Outcome of :func:`check_equitable`; ``matrix`` is None on failure."""

    matrix: list[list[int]] | None
    violation: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.matrix is not None


def _masks(g: Graph, blocks: Sequence[Sequence[int]]) -> list[int]:
    masks = []
    seen = 0
    for i, b in enumerate(blocks):
        if not b:
            raise PartitionError(f"block {i} is empty")
        mk = bits_of(b)
        if mk & seen:
            raise PartitionError(f"block {i} overlaps an earlier block")
        if mk >> g.n:
            raise PartitionError(f"block {i} names a vertex outside 0..{g.n - 1}")
        seen |= mk
        masks.append(mk)
    if seen != (1 << g.n) - 1:
        raise PartitionError("blocks do not cover every vertex")
    return masks


def check_equitable(g: Graph, blocks: Sequence[Sequence[int]]) -> QuotientResult:
    """Quotient matrix ``c[i][j] = |N(v) & V_j|`` for v in V_i, if constant.

    On failure the first violating ``(vertex, block index)`` is reported.
    """
    masks = _masks(g, blocks)
    matrix = []
    for b in blocks:
        first = b[0]
        row = [popcount(g.adj[first] & mk) for mk in masks]
        for v in b[1:]:
            for j, mk in enumerate(masks):
                if popcount(g.adj[v] & mk) != row[j]:
                    return QuotientResult(None, (v, j))
        matrix.append(row)
    return QuotientResult(matrix)


def quotient_matrix(g: Graph, blocks: Sequence[Sequence[int]]) -> list[list[int]]:
    res = check_equitable(g, blocks)
    if not res:
        v, j = res.violation
        b = next(i for i, blk in enumerate(blocks) if v in blk)
        expected = popcount(g.adj[blocks[b][0]] & bits_of(blocks[j]))
        raise NotEquitableError(v, j, expected, popcount(g.adj[v] & bits_of(blocks[j])))
    return res.matrix


def verify_divisibility(g: Graph, blocks: Sequence[Sequence[int]]) -> bool:
    """det(xI - A_P) divides det(xI - A(G)) with zero remainder."""
    q = char_poly_exact(quotient_matrix(g, blocks))
    return q.divides(adjacency_char_poly(g))


def divisibility_witness(g: Graph, blocks: Sequence[Sequence[int]]) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(quotient char poly, cofactor, remainder) for reporting."""
    q = char_poly_exact(quotient_matrix(g, blocks))
    quot, rem = adjacency_char_poly(g).divmod(q)
    return q, quot, rem


def verify_spectral_transfer(g: Graph, blocks: Sequence[Sequence[int]], tol: float = 1e-8) -> bool:
    """Largest root of the quotient polynomial equals rho(G) within ``tol``."""
    if g.n == 0 or not is_connected(g):
        raise GraphError("spectral transfer needs a connected graph")
    q = char_poly_exact(quotient_matrix(g, blocks))
    rho = spectral_radius(g, tol=min(DEFAULT_TOL, tol)).rho
    return abs(largest_real_root(q) - rho) <= tol
