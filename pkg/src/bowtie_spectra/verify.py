"""Machine checks of the structural lemmas and polynomial identities.

Each ``check_*`` function returns a :class:`CheckReport`.  Polynomial
identities are compared coefficient by coefficient (no tolerance); spectral
orderings are asserted with a numeric margin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import families as fam
from .equitable import check_equitable
from .families import BlockLabeling, restrict
from .graph import Graph, is_connected, iter_bits, popcount
from .polynomial import Polynomial
from .spectral import (
    adjacency_char_poly,
    book_rho_closed_form,
    char_poly_exact,
    compare_largest_roots,
    largest_real_root,
    spectral_radius,
)
from .subgraph import has_triangle

PASS, FAIL, NA = "pass", "fail", "not-applicable"
X = Polynomial.x()


class VerifyError(ValueError):
    """Parameters violate a lemma's hypotheses."""


def P(*desc) -> Polynomial:
    return Polynomial.from_descending(list(desc))


@dataclass
class CheckReport:
    name: str
    params: dict[str, Any]
    verdict: str
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict[str, Any]:
        return {"check": self.name, "params": self.params, "verdict": self.verdict,
                "witness": _jsonable(self.witness)}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Polynomial):
        return obj.to_strings()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    return str(obj)


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def theorem_bound(m: int) -> float:
    """(1 + sqrt(4m - 3)) / 2 for any m >= 1."""
    return (1 + math.sqrt(4 * m - 3)) / 2


# neighbourhood anatomy ---------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    u_star: int
    N: int
    N0: int
    N1: int
    N2: int
    N2_0: int
    N2_1: int
    W: int
    e_W: int
    e_Nu: int
    e_Nu_W: int
    rho: float
    x: tuple[float, ...]

    def to_json(self) -> dict:
        sets = {k: list(iter_bits(getattr(self, k))) for k in ("N", "N0", "N1", "N2", "N2_0", "N2_1", "W")}
        return {"u_star": self.u_star, **sets, "e_W": self.e_W, "e_Nu": self.e_Nu,
                "e_Nu_W": self.e_Nu_W, "rho": self.rho}


def _edges_within(g: Graph, s: int) -> int:
    return sum(popcount(g.adj[v] & s) for v in iter_bits(s)) // 2


def _edges_between(g: Graph, s: int, t: int) -> int:
    return sum(popcount(g.adj[v] & t) for v in iter_bits(s))


def decompose_at_max(g: Graph, tol: float = 1e-9) -> Decomposition:
    """Split V around the vertex with the largest Perron entry.

    Entries within ``tol`` of the maximum count as tied; the lowest index wins.
    """
    if g.n == 0 or not is_connected(g):
        raise VerifyError("decomposition needs a connected graph")
    spec = spectral_radius(g)
    x = spec.perron
    top = float(x.max())
    u = min(v for v in range(g.n) if x[v] >= top - tol)
    N = g.adj[u]
    N0 = sum(1 << v for v in iter_bits(N) if not g.adj[v] & N)
    N1 = N & ~N0
    reach = N | 1 << u
    N2 = 0
    for v in iter_bits(N):
        N2 |= g.adj[v]
    N2 &= ~reach
    N2_0 = sum(1 << w for w in iter_bits(N2) if g.adj[w] & N0)
    N2_1 = sum(1 << w for w in iter_bits(N2) if g.adj[w] & N1)
    W = ((1 << g.n) - 1) & ~reach
    return Decomposition(
        u_star=u, N=N, N0=N0, N1=N1, N2=N2, N2_0=N2_0, N2_1=N2_1, W=W,
        e_W=_edges_within(g, W), e_Nu=_edges_within(g, N), e_Nu_W=_edges_between(g, N, W),
        rho=spec.rho, x=tuple(float(v) for v in x),
    )


def neighborhood_structure(g: Graph, dec: Decomposition) -> dict:
    """Components of G[N(u*)]: isolated vertices plus the non-trivial parts,
    each labelled ``star``, ``triangle`` or ``other``."""
    N = dec.N
    seen = 0
    isolated = 0
    parts = []
    for v in iter_bits(N):
        if seen >> v & 1:
            continue
        comp = reach = 1 << v
        while reach:
            nxt = 0
            for a in iter_bits(reach):
                nxt |= g.adj[a] & N
            reach = nxt & ~comp
            comp |= reach
        seen |= comp
        size = popcount(comp)
        if size == 1:
            isolated += 1
            continue
        edges = _edges_within(g, comp)
        degs = sorted(popcount(g.adj[a] & comp) for a in iter_bits(comp))
        if edges == size - 1 and degs[-1] == size - 1:
            kind = "star"
        elif size == 3 and edges == 3:
            kind = "triangle"
        else:
            kind = "other"
        parts.append({"kind": kind, "vertices": list(iter_bits(comp)), "edges": edges})
    kinds = sorted(p["kind"] for p in parts)
    if not parts:
        label = "isolated-only"
    elif kinds == ["star"]:
        label = "one-star"
    elif kinds == ["triangle"]:
        label = "one-triangle"
    else:
        label = "other"
    return {"isolated": isolated, "components": parts, "class": label}


# checks on concrete graphs -------------------------------------------------------


def verify_eigenequations(g: Graph, tol: float = 1e-8) -> CheckReport:
    """Eigen-equations of A and A^2 at u*, split over N0 / N1 / N^2."""
    d = decompose_at_max(g)
    x, rho, u = d.x, d.rho, d.u_star
    lhs1 = rho * x[u]
    rhs1 = sum(x[v] for v in iter_bits(d.N0)) + sum(x[v] for v in iter_bits(d.N1))
    lhs2 = rho * rho * x[u]
    rhs2 = popcount(d.N) * x[u]
    rhs2 += sum(popcount(g.adj[v] & d.N) * x[v] for v in iter_bits(d.N1))
    rhs2 += sum(popcount(g.adj[w] & d.N) * x[w] for w in iter_bits(d.N2))
    r1 = abs(lhs1 - rhs1) / x[u]
    r2 = abs(lhs2 - rhs2) / x[u]
    return CheckReport("eigen", {"graph6": _g6(g)}, _verdict(r1 <= tol and r2 <= tol),
                       {"u_star": u, "rho": rho, "residual_A": r1, "residual_A2": r2})


def check_pendant_lemma(g: Graph) -> CheckReport:
    """Every degree-1 vertex (other than u* itself) is adjacent to u*."""
    d = decompose_at_max(g)
    bad = [v for v in range(g.n) if v != d.u_star and g.degree(v) == 1 and not g.has_edge(v, d.u_star)]
    pend = [v for v in range(g.n) if g.degree(v) == 1]
    return CheckReport("pendant", {"graph6": _g6(g)}, _verdict(not bad),
                       {"u_star": d.u_star, "pendants": pend, "violations": bad})


def check_ew_bound(g: Graph, tol: float = 1e-9) -> CheckReport:
    """If rho >= (1+sqrt(4m-3))/2 then e(W) <= e(N(u*)) - |N1(u*)| + 1."""
    d = decompose_at_max(g)
    bound = theorem_bound(g.m)
    witness = {"rho": d.rho, "rho_bound": bound, "u_star": d.u_star, "e_W": d.e_W,
               "e_Nu": d.e_Nu, "N1_size": popcount(d.N1)}
    if d.rho < bound - tol:
        return CheckReport("ew", {"graph6": _g6(g)}, NA, witness)
    rhs = d.e_Nu - popcount(d.N1) + 1
    witness["rhs"] = rhs
    return CheckReport("ew", {"graph6": _g6(g)}, _verdict(d.e_W <= rhs), witness)


def is_complete_bipartite(g: Graph) -> bool:
    if g.n < 2 or not is_connected(g):
        return False
    side = [-1] * g.n
    side[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in iter_bits(g.adj[v]):
            if side[w] < 0:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                return False
    a = side.count(0)
    return g.m == a * (g.n - a)


def check_triangle_free_bound(g: Graph, tol: float = 1e-8) -> CheckReport:
    """Triangle-free: rho <= sqrt(m), tight exactly for complete bipartite graphs."""
    if any(r == 0 for r in g.adj):
        raise VerifyError("graph has isolated vertices")
    params = {"graph6": _g6(g)}
    if has_triangle(g):
        return CheckReport("nosal", params, NA, {"reason": "graph has a triangle"})
    rho = spectral_radius(g).rho
    root_m = math.sqrt(g.m)
    tight = abs(rho - root_m) <= tol
    cb = is_complete_bipartite(g)
    ok = rho <= root_m + tol and tight == cb
    return CheckReport("nosal", params, _verdict(ok),
                       {"rho": rho, "sqrt_m": root_m, "tight": tight, "complete_bipartite": cb})


def _g6(g: Graph) -> str:
    from .graph import to_graph6

    return to_graph6(g)


# quotient-polynomial identities ------------------------------------------------


def labeled_quotient_poly(g: Graph, lab: BlockLabeling, expected: list[list[int]]) -> tuple[Polynomial, bool]:
    """Char poly of the quotient over all labelled blocks, from the graph.

    Empty blocks cannot be measured on the graph; their rows in ``expected``
    must have zero columns pointing at them, so each contributes a factor x.
    Returns the polynomial and whether the measured quotient matched
    ``expected`` on the non-empty blocks.
    """
    keep = lab.nonempty()
    res = check_equitable(g, lab.partition())
    if not res:
        return Polynomial(), False
    empty = [i for i in range(len(lab.sets)) if i not in keep]
    for j in empty:
        if any(expected[i][j] for i in range(len(expected))):
            return Polynomial(), False
    match = res.matrix == restrict(expected, keep)
    return char_poly_exact(res.matrix) * X ** len(empty), match


def f_gmt(m: int, t: int) -> Polynomial:
    c = Fraction(t, 2) * (m - t - 1)
    return P(1, 0, -m, -(m - t - 1), c)


def g_book_cubic(m: int) -> Polynomial:
    return P(1, 0, -m, -(m - 1))


def f_k4m(m: int) -> Polynomial:
    return P(1, -2, -(m - 3), 2 * (m - 6))


def phi_t(m: int, t: int) -> Polynomial:
    return P(1, 0, -m + t - 1, -4, m * t - 2 * t * t + 5 * m - 16 * t - 26, -4 * t + 4,
             -2 * m * t + 4 * t * t - 4 * m + 30 * t + 26, 0)


def phi_1(m: int) -> Polynomial:
    return P(1, 0, -m, -4, 6 * m - 44, 0, -6 * m + 60, 0)


def g_case2(m: int, t: int) -> Polynomial:
    return P(1, 0, m - 2 * t - 18, -4, -2 * m + 4 * t + 34)


def phi_2(m: int) -> Polynomial:
    return P(1, 0, -m, -4, 2 * m - 10)


def phi_3(m: int) -> Polynomial:
    return P(1, 0, -m, -4, 4 * m - 26, 0)


def psi_1(m: int) -> Polynomial:
    return P(4 * m - 34, 0, -6 * m + 60)


def psi_2(m: int) -> Polynomial:
    return P(2 * m - 16, 0)


def check_lemma_gmt(m: int, t: int, tol: float = 1e-8) -> CheckReport:
    if m % 2 == 0 or t % 2 or t < 0 or m <= t + 2:
        raise VerifyError(f"need odd m, even t >= 0, m > t+2; got m={m}, t={t}")
    g, lab = fam.make_gmt(m, t)
    f_graph, matched = labeled_quotient_poly(g, lab, fam.quotient_gmt(m, t))
    f = f_gmt(m, t)
    gb = g_book_cubic(m)
    h = f - X * gb
    h_expected = P(t, Fraction(t, 2) * (m - t - 1))
    rho = spectral_radius(g).rho
    rho_book = book_rho_closed_form(m)
    order = compare_largest_roots(f, gb)
    gap = rho_book - rho
    if t == 0:
        spectral_ok = abs(gap) <= tol and order == 0
    else:
        spectral_ok = gap > tol and order < 0
    checks = {
        "quotient_matrix": matched,
        "f_identity": f_graph == f,
        "h_identity": h == h_expected,
        "spectral": spectral_ok,
    }
    witness = {"checks": checks, "f": f_graph, "f_expected": f, "h": h, "rho": rho,
               "rho_book": rho_book, "gap": gap, "exact_order": order}
    return CheckReport("gmt", {"m": m, "t": t}, _verdict(all(checks.values())), witness)


def check_lemma_k4m(m: int, tol: float = 1e-8) -> CheckReport:
    if m < 8:
        raise VerifyError(f"need m >= 8, got {m}")
    g, lab = fam.make_k4m(m)
    f_graph, matched = labeled_quotient_poly(g, lab, fam.quotient_k4m(m))
    f = f_k4m(m)
    rho1 = theorem_bound(m)
    f_at = f.eval_float(rho1)
    deriv = f.derivative().eval_float(rho1)
    rho = spectral_radius(g).rho
    checks = {
        "quotient_matrix": matched,
        "f_identity": f_graph == f,
        "f_at_rho1": abs(f_at - (rho1 + m - 11)) <= tol,
        "derivative_positive": deriv > 0,
        "spectral": rho < rho1 - tol,
    }
    witness = {"checks": checks, "f": f_graph, "rho1": rho1, "f_rho1": f_at,
               "expected_f_rho1": rho1 + m - 11, "f_prime_rho1": deriv, "rho": rho,
               "margin": rho1 - rho}
    return CheckReport("k4m", {"m": m}, _verdict(all(checks.values())), witness)


def _sqrt_form_gt_zero(a: Fraction, b: Fraction, m: int) -> bool:
    """Exact sign test for a + b*sqrt(m) > 0."""
    if a >= 0 and b >= 0:
        return a > 0 or b > 0
    if a <= 0 and b <= 0:
        return False
    if a > 0:
        return a * a > b * b * m
    return b * b * m > a * a


def g_at_half_sqrt_m(poly: Polynomial, m: int) -> tuple[Fraction, Fraction]:
    """Exact value of a quartic-or-lower poly at sqrt(m)/2 as (a, b) with
    value = a + b*sqrt(m)."""
    a = Fraction(0)
    b = Fraction(0)
    for k, c in enumerate(poly.coeffs):
        # (sqrt(m)/2)^k = m^(k//2) / 2^k * sqrt(m)^(k%2)
        term = Fraction(c) * Fraction(m ** (k // 2), 2 ** k)
        if k % 2:
            b += term
        else:
            a += term
    return a, b


def check_case2_identities(m: int, t: int, tol: float = 1e-8, identities_only: bool = False) -> CheckReport:
    """Case-2 quotient polynomials, their differences and spectral orderings."""
    if m % 2 == 0 or m < 11:
        raise VerifyError(f"need odd m >= 11, got {m}")
    if not 2 <= t <= (m - 7) // 3:
        raise VerifyError(f"need 2 <= t <= (m-7)/3, got t={t}")
    gh, lh = fam.make_case2_H(m, t)
    g1, l1 = fam.make_case2_H(m, 1)
    gg, lg = fam.make_gmt(m, m - 5)
    g2, l2 = fam.make_case2_H2(m)
    pt, mt = labeled_quotient_poly(gh, lh, fam.quotient_case2_H(m, t))
    p1, m1 = labeled_quotient_poly(g1, l1, fam.quotient_case2_H(m, 1))
    p2, m2 = labeled_quotient_poly(gg, lg, fam.quotient_gmt(m, m - 5))
    p3, m3 = labeled_quotient_poly(g2, l2, fam.quotient_case2_H2(m))
    gq = g_case2(m, t)
    checks: dict[str, bool] = {
        "quotients_match": mt and m1 and m2 and m3,
        "phi_t": pt == phi_t(m, t),
        "phi_1": p1 == phi_1(m),
        "phi_t_minus_phi_1": pt - p1 == X * (t - 1) * gq,
        "phi_2": p2 == phi_2(m),
        "phi_3": p3 == phi_3(m),
        "psi_1": p1.exact_div_x() - X * X * p2 == psi_1(m),
        "psi_2": p3 - X * p2 == psi_2(m),
    }
    witness: dict[str, Any] = {"phi_t": pt, "phi_1": p1, "phi_2": p2, "phi_3": p3, "g": gq}
    if not identities_only:
        rb = book_rho_closed_form(m)
        checks["psi_1_positive"] = psi_1(m).eval_float(rb) > 0
        checks["psi_2_positive"] = psi_2(m).eval_float(rb) > 0
        book_poly = P(1, -1, -(m - 1))
        rho = {"H": largest_real_root(pt), "H1": largest_real_root(p1),
               "G(m,m-5)": largest_real_root(p2), "H2": largest_real_root(p3),
               "book": largest_real_root(book_poly)}
        chain = [("H", "H1"), ("H1", "G(m,m-5)"), ("G(m,m-5)", "book"), ("H2", "G(m,m-5)")]
        polys = {"H": pt, "H1": p1, "G(m,m-5)": p2, "H2": p3, "book": book_poly}
        margins = {}
        for lo, hi in chain:
            margins[f"{lo}<{hi}"] = rho[hi] - rho[lo]
            checks[f"order_{lo}<{hi}"] = (rho[hi] - rho[lo] > tol
                                          and compare_largest_roots(polys[lo], polys[hi]) < 0)
        witness.update({"rho": rho, "margins": margins})
        # the displayed value of g at sqrt(m)/2 next to direct evaluations
        a_disp = Fraction(5, 16) * m * m - 16 * m + 126
        a_g, b_g = g_at_half_sqrt_m(gq, m)
        bound_poly = P(3, 0, m - 40, -12, -6 * m + 126) * Fraction(1, 3)
        a_b, b_b = g_at_half_sqrt_m(bound_poly, m)
        root_m = math.sqrt(m)
        witness["g_at_half_sqrt_m"] = {
            "displayed": {"a": a_disp, "b": Fraction(-6), "value": float(a_disp) - 6 * root_m},
            "g_t": {"a": a_g, "b": b_g, "value": float(a_g) + float(b_g) * root_m},
            "bound_form": {"a": a_b, "b": b_b, "value": float(a_b) + float(b_b) * root_m},
            "displayed_matches_g_t": (a_disp, Fraction(-6)) == (a_g, b_g),
            "displayed_matches_bound_form": (a_disp, Fraction(-6)) == (a_b, b_b),
        }
        if m >= 259:
            checks["g_positive_at_half_sqrt_m"] = (_sqrt_form_gt_zero(a_g, b_g, m)
                                                   and _sqrt_form_gt_zero(a_b, b_b, m))
    witness["checks"] = checks
    return CheckReport("case2", {"m": m, "t": t}, _verdict(all(checks.values())), witness)


def check_divisibility_report(g: Graph, blocks) -> CheckReport:
    from .equitable import divisibility_witness

    q, cof, rem = divisibility_witness(g, blocks)
    return CheckReport("divisibility", {"graph6": _g6(g)}, _verdict(rem.is_zero()),
                       {"quotient_poly": q, "cofactor": cof, "remainder": rem,
                        "char_poly": adjacency_char_poly(g)})
