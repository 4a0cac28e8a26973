"""Exact two-phase tableau simplex with Bland's rule.

Works over any ordered field; used for support values, ray scaling and the
slice-dimension probes of the determinism oracle.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import Infeasible, Unbounded
from .linalg import dot, nullspace, rank, solve_affine
from .polyhedra import HRep, canonical


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, i, j):
        p = self.rows[i][j]
        row = [x / p for x in self.rows[i]]
        b = self.rhs[i] / p
        self.rows[i], self.rhs[i] = row, b
        for k in range(len(self.rows)):
            if k != i:
                f = self.rows[k][j]
                if f != 0:
                    self.rows[k] = [x - f * y for x, y in zip(self.rows[k], row)]
                    self.rhs[k] = self.rhs[k] - f * b
        self.basis[i] = j

    def maximize(self, cost, allowed):
        """Bland's rule over columns in ``allowed``; returns 'optimal' or 'unbounded'."""
        while True:
            entering = None
            for j in allowed:
                if j in self.basis:
                    continue
                red = cost[j] - sum(
                    (cost[b] * self.rows[i][j] for i, b in enumerate(self.basis) if cost[b] != 0),
                    0,
                )
                if red > 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering)


def _reduce(region: HRep):
    """Eliminate equalities: returns ``(x0, basis, G, h)`` with ``x = x0 + B t``, ``G t <= h``."""
    n = region.dim
    param = solve_affine([a for a, _ in region.equalities], [b for _, b in region.equalities], n)
    if param is None:
        raise Infeasible("equalities are inconsistent")
    x0, basis = param
    G, h = [], []
    for hs in region.halfspaces:
        G.append([dot(hs.normal, b) for b in basis])
        h.append(hs.bound - dot(hs.normal, x0))
    return x0, basis, G, h


def _lift(x0, basis, t):
    n = len(x0)
    return tuple(x0[i] + sum((t[j] * basis[j][i] for j in range(len(basis))), 0) for i in range(n))


def _solve_reduced(G, h, c, k):
    """Maximize ``c . t`` over ``G t <= h`` (t free). Returns t or raises."""
    m = len(G)
    if k == 0:
        if any(x < 0 for x in h):
            raise Infeasible("region is empty")
        return []
    # columns: p (k), q (k), slack (m), artificial (<= m)
    nv = 2 * k + m
    rows, rhs, basis = [], [], []
    art_rows = [i for i in range(m) if h[i] < 0]
    total = nv + len(art_rows)
    for i in range(m):
        sign = -1 if h[i] < 0 else 1
        row = [Fraction(0)] * total
        for j in range(k):
            row[j] = sign * G[i][j]
            row[k + j] = -sign * G[i][j]
        row[2 * k + i] = Fraction(sign)
        rows.append(row)
        rhs.append(sign * h[i])
        basis.append(2 * k + i)
    for a, i in enumerate(art_rows):
        rows[i][nv + a] = Fraction(1)
        basis[i] = nv + a
    tab = _Tableau(rows, rhs, basis)
    if art_rows:
        cost1 = [Fraction(0)] * nv + [Fraction(-1)] * len(art_rows)
        tab.maximize(cost1, range(total))
        if sum((tab.rhs[i] for i, b in enumerate(tab.basis) if b >= nv), 0) != 0:
            raise Infeasible("region is empty")
        # drive zero-level artificials out of the basis
        for i, b in enumerate(list(tab.basis)):
            if b >= nv:
                j = next((j for j in range(nv) if tab.rows[i][j] != 0), None)
                if j is not None:
                    tab.pivot(i, j)
        keep = [i for i, b in enumerate(tab.basis) if b < nv]
        tab = _Tableau([tab.rows[i][:nv] for i in keep], [tab.rhs[i] for i in keep],
                       [tab.basis[i] for i in keep])
    cost = [Fraction(0)] * nv
    for j in range(k):
        cost[j] = c[j]
        cost[k + j] = -c[j]
    if tab.maximize(cost, range(nv)) == "unbounded":
        raise Unbounded("objective is unbounded")
    val = [Fraction(0)] * nv
    for i, b in enumerate(tab.basis):
        val[b] = tab.rhs[i]
    return [val[j] - val[k + j] for j in range(k)]


def _to_vertex(G, h, t, k):
    """Slide along the optimal face until ``k`` independent constraints are tight."""
    t = list(t)
    while True:
        tight = [G[i] for i in range(len(G)) if dot(G[i], t) == h[i]]
        if rank(tight, k) >= k:
            return t
        d = nullspace(tight, k)[0]
        for direction in (d, [-x for x in d]):
            steps = []
            for i in range(len(G)):
                gd = dot(G[i], direction)
                if gd > 0:
                    steps.append((h[i] - dot(G[i], t)) / gd)
            if steps:
                s = min(steps)
                t = [a + s * b for a, b in zip(t, direction)]
                break
        else:
            raise Unbounded("region has a lineality space")


def lp_optimize(objective, region: HRep, direction: str = "max"):
    """Exact optimum of ``objective . x`` over ``region`` and a vertex attaining it."""
    if direction not in ("max", "min"):
        raise ValueError("direction must be 'max' or 'min'")
    sign = 1 if direction == "max" else -1
    x0, basis, G, h = _reduce(region)
    k = len(basis)
    c = [sign * dot(objective, b) for b in basis]
    t = _solve_reduced(G, h, c, k)
    t = _to_vertex(G, h, t, k) if k else t
    x = canonical(_lift(x0, basis, t))
    return canonical((dot(objective, x),))[0], x


def find_feasible_point(region: HRep):
    """Some point of the region, or ``None`` if it is empty."""
    try:
        x0, basis, G, h = _reduce(region)
        t = _solve_reduced(G, h, [Fraction(0)] * len(basis), len(basis))
    except Infeasible:
        return None
    return canonical(_lift(x0, basis, t))
