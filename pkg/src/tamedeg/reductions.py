"""Elementary-reduction candidate checking and a bounded candidate search.

The search is honest about its scope: it looks for g(F_j, F_k) cancelling the
top of F_i only within the given Y-degree and total-degree bounds, pruning
Y-degree classes whose composition-degree lower bound already exceeds
deg F_i.  "Absent" means "not found within bounds", nothing stronger.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bracket import poisson_degree, reduced_pair_report, su_lower_bound
from .linalg import solve_linear
from .maps import PolyMap
from .poly import NEG_INF, Polynomial


@dataclass(frozen=True)
class ReductionCandidate:
    """g is a 2-variable polynomial; its variables map to the two non-target
    components (F_j, F_k) with j < k."""
    target_index: int  # 0-based
    g: Polynomial


def check_elementary_reduction(f_map: PolyMap, cand: ReductionCandidate
                               ) -> tuple[bool, object]:
    """Exact degree of F_i - g(F_j, F_k); True iff strictly below deg F_i."""
    if f_map.n != 3:
        raise ValueError("expects a 3-dimensional map")
    i = cand.target_index
    if not 0 <= i < 3:
        raise IndexError("target index out of range")
    j, k = [t for t in range(3) if t != i]
    reduced = f_map.components[i] - cand.g.substitute(
        [f_map.components[j], f_map.components[k]])
    achieved = reduced.total_degree()
    return achieved < f_map.components[i].total_degree(), achieved


def bounded_reduction_search(f_map: PolyMap, i: int, degy_bound: int,
                             deg_bound: int) -> Optional[ReductionCandidate]:
    """Search for a reducing g with deg_Y g <= degy_bound and composition
    degree at most deg_bound; None when nothing is found within bounds.

    Y is the higher-degree non-target component.  Classes of fixed Y-degree
    are skipped when the reduced-pair lower bound for deg g(F_j, F_k) already
    exceeds deg F_i (a reduction must cancel the top, so the composition
    degree must equal deg F_i exactly).
    """
    if f_map.n != 3:
        raise ValueError("expects a 3-dimensional map")
    if degy_bound < 0 or deg_bound <= 0:
        raise ValueError("bounds must be positive")
    if not 0 <= i < 3:
        raise IndexError("target index out of range")
    j, k = [t for t in range(3) if t != i]
    target = f_map.components[i]
    d_target = target.total_degree()
    if d_target == NEG_INF:
        return None
    lo, hi = f_map.components[j], f_map.components[k]
    transposed = False  # g's support built as (lo-exponent, hi-exponent)
    if lo.total_degree() > hi.total_degree():
        lo, hi = hi, lo
        transposed = True
    d_lo, d_hi = lo.total_degree(), hi.total_degree()
    if d_lo < 1 or d_hi < 1:
        return None

    prune = None
    if d_lo < d_hi:
        report = reduced_pair_report(lo, hi)
        if (report.independent and not report.f_bar_in_g_bar
                and not report.g_bar_in_f_bar):
            bracket = poisson_degree(lo, hi)
            prune = lambda t: su_lower_bound(int(d_lo), int(d_hi),
                                             int(bracket), t) > d_target

    # powers cache
    pow_lo = [Polynomial.constant(3, 1)]
    while len(pow_lo) * d_lo <= deg_bound:
        pow_lo.append(pow_lo[-1] * lo)
    pow_hi = [Polynomial.constant(3, 1)]
    while len(pow_hi) * d_hi <= deg_bound:
        pow_hi.append(pow_hi[-1] * hi)

    for t_max in range(min(degy_bound, len(pow_hi) - 1) + 1):
        if prune is not None and prune(t_max):
            continue
        support = [(s, t)
                   for t in range(t_max + 1)
                   for s in range(len(pow_lo))
                   if s * d_lo + t * d_hi <= deg_bound]
        if not support:
            continue
        products = [pow_lo[s] * pow_hi[t] for s, t in support]
        # kill every monomial of degree >= deg F_i in F_i - sum c_m * product_m
        rows_index: dict[tuple, int] = {}
        for p in products + [target]:
            for exps in p.terms:
                if sum(exps) >= d_target:
                    rows_index.setdefault(exps, len(rows_index))
        matrix = [[0] * len(support) for _ in rows_index]
        rhs = [0] * len(rows_index)
        for col, p in enumerate(products):
            for exps, c in p.terms.items():
                r = rows_index.get(exps)
                if r is not None:
                    matrix[r][col] = c
        for exps, c in target.terms.items():
            r = rows_index.get(exps)
            if r is not None:
                rhs[r] = c
        solution = solve_linear(matrix, rhs)
        if solution is None:
            continue
        terms = {}
        for (s, t), c in zip(support, solution):
            if c:
                exps = (t, s) if transposed else (s, t)
                terms[exps] = c
        cand = ReductionCandidate(i, Polynomial(2, terms))
        ok, _ = check_elementary_reduction(f_map, cand)
        if ok:
            return cand
    return None


def type3_shape(d1: int, d2: int, d3: int) -> bool:
    """Necessary degree shape for a type-III reduction of a sorted triple:
    d2 = 2n and either (d3 = 3n with n < d1 <= 3n/2) or
    (5n/2 < d3 <= 3n with d1 = 3n/2)."""
    if not 1 <= d1 <= d2 <= d3:
        raise ValueError("need a positive sorted triple")
    if d2 % 2:
        return False
    n = d2 // 2
    if d3 == 3 * n and n < d1 and 2 * d1 <= 3 * n:
        return True
    if 2 * d3 > 5 * n and d3 <= 3 * n and 2 * d1 == 3 * n:
        return True
    return False
