"""Spectral radius by shifted power iteration, exact characteristic
polynomials, and rigorous largest-root extraction."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph, components, iter_bits
from .polynomial import Polynomial, cauchy_bound, count_roots_above, sturm_sequence

DEFAULT_TOL = 1e-10
MAX_ITER = 1_000_000


class NoRealRootError(ValueError):
    """The polynomial has no real root in the searched interval."""


@dataclass
class SpectrumResult:
    rho: float
    perron: np.ndarray = field(repr=False)
    iterations: int
    residual: float
    converged: bool = True


def _power_iteration(a: np.ndarray, tol: float, max_iter: int) -> tuple[float, np.ndarray, int, float, bool]:
    # iterate with A + I: primitive for connected graphs, so the dominant
    # eigenvalue is simple and strictly largest in modulus
    n = a.shape[0]
    x = np.full(n, 1.0 / math.sqrt(n))
    rho = 0.0
    resid = math.inf
    for it in range(1, max_iter + 1):
        ax = a @ x
        rho = float(x @ ax)
        resid = float(np.max(np.abs(ax - rho * x)))
        if resid <= tol:
            return rho, x, it, resid, True
        y = ax + x
        x = y / np.linalg.norm(y)
    return rho, x, max_iter, resid, False


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> SpectrumResult:
    """Largest adjacency eigenvalue and a unit Perron vector.

    Each connected component is iterated separately; the Perron vector of
    the winning component is returned padded with zeros.  ``converged`` is
    False when ``max_iter`` ran out before the residual reached ``tol``.
    """
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    if tol <= 0:
        raise ValueError("tol must be positive")
    full = g.adjacency_matrix().astype(float)
    best = None
    total_iters = 0
    all_converged = True
    for comp in components(g):
        verts = list(iter_bits(comp))
        if len(verts) == 1:
            rho, x, it, resid, ok = 0.0, np.ones(1), 0, 0.0, True
        else:
            sub = full[np.ix_(verts, verts)]
            rho, x, it, resid, ok = _power_iteration(sub, tol, max_iter)
        total_iters += it
        all_converged &= ok
        if best is None or rho > best[0] + tol:
            best = (rho, verts, x, resid)
    rho, verts, x, resid = best
    perron = np.zeros(g.n)
    perron[verts] = np.abs(x)
    return SpectrumResult(rho=rho, perron=perron, iterations=total_iters, residual=resid,
                          converged=all_converged)


def char_poly_exact(matrix: Sequence[Sequence[int]]) -> Polynomial:
    """det(xI - M) by the Faddeev-LeVerrier recurrence in exact arithmetic.

    Works on nested lists of ints (or Fractions); the division by ``k`` at
    step ``k`` is exact for integer matrices.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return Polynomial([1])
    a = np.array([[_exact(v) for v in row] for row in matrix], dtype=object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = np.zeros((n, n), dtype=object)
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    for k in range(1, n + 1):
        mk = a.dot(mk) + coeffs[n - k + 1] * eye
        tr = a.dot(mk).trace()
        num = -tr
        if isinstance(num, int):
            q, r = divmod(num, k)
            if r:
                raise ArithmeticError("inexact division in Faddeev-LeVerrier")
            coeffs[n - k] = q
        else:
            coeffs[n - k] = Fraction(num) / k
    return Polynomial(coeffs)


def _exact(v):
    if isinstance(v, (int, Fraction)):
        return v
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, float) and v.is_integer():
        return int(v)
    raise TypeError(f"exact matrix entries required, got {v!r}")


def adjacency_char_poly(g: Graph) -> Polynomial:
    return char_poly_exact(g.adjacency_lists())


def _isolate_largest(p: Polynomial, seq) -> tuple[Fraction, Fraction]:
    """Interval ``(lo, hi]`` containing the largest real root of ``p`` and
    no other root."""
    bound = cauchy_bound(p)
    lo, hi = -bound, bound
    if count_roots_above(p, lo, seq) == 0:
        raise NoRealRootError(f"{p} has no real root")
    while count_roots_above(p, lo, seq) > 1:
        mid = (lo + hi) / 2
        if count_roots_above(p, mid, seq) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def largest_real_root_interval(p: Polynomial, tol: float = 1e-12) -> tuple[Fraction, Fraction]:
    """Rational interval of width <= ``tol`` containing the largest real root.

    Bisection is driven by Sturm counts on the square-free part, so roots
    of even multiplicity (no sign change) are still found.
    """
    if p.degree < 1:
        raise NoRealRootError("constant polynomial has no roots")
    sf = p.squarefree()
    seq = sturm_sequence(sf)
    lo, hi = _isolate_largest(sf, seq)
    width = Fraction(tol)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots_above(sf, mid, seq) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def largest_real_root(p: Polynomial, tol: float = 1e-12) -> float:
    lo, hi = largest_real_root_interval(p, tol)
    return float((lo + hi) / 2)


def compare_largest_roots(p: Polynomial, q: Polynomial) -> int:
    """Exact sign of ``maxroot(p) - maxroot(q)``."""
    sp, sq = p.squarefree(), q.squarefree()
    seq_p, seq_q = sturm_sequence(sp), sturm_sequence(sq)
    lo_p, hi_p = _isolate_largest(sp, seq_p)
    lo_q, hi_q = _isolate_largest(sq, seq_q)
    common = sp.gcd(sq)
    if common.degree >= 1:
        cs = sturm_sequence(common)
        if count_roots_above(common, lo_p, cs) >= 1 and count_roots_above(common, lo_q, cs) >= 1:
            return 0
    while True:
        if hi_p <= lo_q:
            return -1
        if hi_q <= lo_p:
            return 1
        # shrink the wider interval
        if hi_p - lo_p >= hi_q - lo_q:
            mid = (lo_p + hi_p) / 2
            if count_roots_above(sp, mid, seq_p) >= 1:
                lo_p = mid
            else:
                hi_p = mid
        else:
            mid = (lo_q + hi_q) / 2
            if count_roots_above(sq, mid, seq_q) >= 1:
                lo_q = mid
            else:
                hi_q = mid


def book_rho_closed_form(m: int) -> float:
    """(1 + sqrt(4m - 3)) / 2, the spectral radius of the m-edge book."""
    if m % 2 == 0 or m < 3:
        raise ValueError(f"book graph needs odd m >= 3, got {m}")
    return (1 + math.sqrt(4 * m - 3)) / 2
