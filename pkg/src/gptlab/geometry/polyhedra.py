"""V- and H-representations of polytopes and exact conversion between them.

Conversion runs the double description method on a pointed homogenizing cone.
Rows are inserted in input order and adjacency is decided combinatorially, so
identical inputs give identical outputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..errors import Infeasible, Unbounded
from .field import format_scalar, parse_scalar, simplify
from .linalg import dot, normalize, rank, rref, solve_affine

RVector = tuple


def rvec(*coords) -> RVector:
    """Build an exact vector from ints, Fractions, QSqrt2s or ``"p/q"`` strings."""
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = tuple(coords[0])
    return tuple(parse_scalar(c) for c in coords)


def format_vector(v) -> list[str]:
    return [format_scalar(x) for x in v]


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def canonical(v) -> RVector:
    return tuple(simplify(x) for x in v)


def sort_key(v):
    """Lexicographic order on exact coordinates."""
    return tuple(v)


@dataclass(frozen=True)
class HalfSpace:
    """``normal . x <= bound``."""

    normal: RVector
    bound: object

    def __post_init__(self):
        if all(x == 0 for x in self.normal):
            raise ValueError("half-space normal must be nonzero")

    def slack(self, x):
        return self.bound - dot(self.normal, x)

    def contains(self, x) -> bool:
        return dot(self.normal, x) <= self.bound


@dataclass(frozen=True)
class HRep:
    halfspaces: tuple = ()
    equalities: tuple = ()  # pairs (normal, rhs)

    @property
    def dim(self) -> int:
        if self.halfspaces:
            return len(self.halfspaces[0].normal)
        return len(self.equalities[0][0])

    def contains(self, x) -> bool:
        return all(h.contains(x) for h in self.halfspaces) and all(
            dot(a, x) == b for a, b in self.equalities
        )

    def with_equalities(self, extra) -> "HRep":
        return HRep(self.halfspaces, tuple(self.equalities) + tuple(extra))


@dataclass(frozen=True)
class VRep:
    vertices: tuple = field(default_factory=tuple)


def make_hrep(inequalities: Sequence = (), equalities: Sequence = ()) -> HRep:
    """Build an :class:`HRep` from ``(normal, bound)`` pairs (``normal . x <= bound``)."""
    hs = tuple(HalfSpace(rvec(a), parse_scalar(b)) for a, b in inequalities)
    eqs = tuple((rvec(a), parse_scalar(b)) for a, b in equalities)
    return HRep(hs, eqs)


# -- double description --------------------------------------------------------


def extreme_rays(rows, n):
    """Extreme rays of the pointed cone ``{y in R^n : r . y <= 0 for r in rows}``.

    Raises ``Unbounded`` if the cone has a lineality space (rank < n).
    """
    rows = [tuple(r) for r in rows]
    if rank(rows, n) < n:
        raise Unbounded("cone is not pointed")
    # initial simplicial cone from the first n independent rows
    chosen = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in chosen] + [r], n) > len(chosen):
            chosen.append(i)
            if len(chosen) == n:
                break
    basis = [rows[i] for i in chosen]
    inv = _inverse(basis, n)
    # columns of -B^{-1}: ray j is tight on every chosen row except j
    rays = []
    for j in range(n):
        r = normalize(tuple(-inv[i][j] for i in range(n)))
        mask = 0
        for k, ci in enumerate(chosen):
            if k != j:
                mask |= 1 << ci
        rays.append((r, mask))
    done = set(chosen)
    for idx, a in enumerate(rows):
        if idx in done:
            continue
        pos, neg, zero = [], [], []
        for r, m in rays:
            s = dot(a, r)
            if s > 0:
                pos.append((r, m, s))
            elif s < 0:
                neg.append((r, m, s))
            else:
                zero.append((r, m | (1 << idx)))
        new = [(r, m) for r, m, _ in neg] + zero
        if pos and neg:
            all_masks = [m for _, m in rays]
            for rp, mp, sp in pos:
                for rn, mn, sn in neg:
                    common = mp & mn
                    if bin(common).count("1") < n - 2:
                        continue
                    if _adjacent(common, mp, mn, all_masks):
                        r = tuple(sp * b - sn * c for b, c in zip(rn, rp))
                        new.append((normalize(r), common | (1 << idx)))
        done.add(idx)
        rays = new
        if not rays:
            break
    return [r for r, _ in rays]


def _adjacent(common, mp, mn, masks) -> bool:
    for m in masks:
        if m != mp and m != mn and m & common == common:
            return False
    return True


def _inverse(mat, n):
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


# -- conversions ---------------------------------------------------------------


def hrep_to_vrep(region: HRep) -> VRep:
    """Exact irredundant vertex list of a bounded nonempty H-polytope."""
    n = region.dim
    eq_rows = [a for a, _ in region.equalities]
    eq_rhs = [b for _, b in region.equalities]
    param = solve_affine(eq_rows, eq_rhs, n)
    if param is None:
        raise Infeasible("equalities are inconsistent")
    x0, basis = param
    k = len(basis)
    if k == 0:
        if all(h.contains(x0) for h in region.halfspaces):
            return VRep((canonical(x0),))
        raise Infeasible("region is empty")
    rows = []
    for h in region.halfspaces:
        coeffs = [dot(h.normal, b) for b in basis]
        rhs = h.bound - dot(h.normal, x0)
        if all(c == 0 for c in coeffs):
            if rhs < 0:
                raise Infeasible("constraint 0 <= negative")
            continue
        rows.append(tuple(coeffs) + (-rhs,))
    rows.append(tuple([0] * k) + (-1,))
    try:
        rays = extreme_rays(rows, k + 1)
    except Unbounded:
        _raise_unbounded_or_empty(region)
        raise
    verts, recession = [], False
    for r in rays:
        s = r[-1]
        if s == 0:
            recession = True
            continue
        t = [x / s for x in r[:-1]]
        x = tuple(x0[i] + sum((t[j] * basis[j][i] for j in range(k)), 0) for i in range(n))
        verts.append(canonical(x))
    if not verts:
        raise Infeasible("region is empty")
    if recession:
        raise Unbounded("region is unbounded")
    return VRep(tuple(sorted(set(verts), key=sort_key)))


def _raise_unbounded_or_empty(region: HRep):
    from .lp import find_feasible_point

    if find_feasible_point(region) is None:
        raise Infeasible("region is empty")
    raise Unbounded("region has a lineality space")


def affine_hull(points):
    """Return ``(x0, basis_rows, pivots)``: points = x0 + span(basis_rows).

    ``basis_rows`` are in reduced row echelon form, so the coordinates of a
    hull point ``x`` are ``(x - x0)[p] for p in pivots``.
    """
    pts = [tuple(p) for p in points]
    x0 = pts[0]
    diffs = [sub(p, x0) for p in pts[1:]]
    n = len(x0)
    if not diffs:
        return x0, [], []
    red, piv = rref(diffs, n)
    return x0, red, piv


def affine_dimension(points) -> int:
    return len(affine_hull(points)[1])


def vrep_to_hrep(vertices) -> HRep:
    """Facets and affine-hull equalities of ``conv(vertices)``."""
    if isinstance(vertices, VRep):
        vertices = vertices.vertices
    pts = sorted({canonical(v) for v in vertices}, key=sort_key)
    if not pts:
        raise ValueError("need at least one vertex")
    n = len(pts[0])
    x0, basis, piv = affine_hull(pts)
    from .linalg import nullspace

    eqs = []
    for a in nullspace(basis, n) if basis else nullspace([], n):
        a = normalize(a)
        eqs.append((canonical(a), simplify(dot(a, x0))))
    k = len(basis)
    if k == 0:
        return HRep((), tuple(eqs))
    coords = [tuple(sub(p, x0)[c] for c in piv) for p in pts]
    rows = [c + (-1,) for c in coords]
    facets = []
    for r in extreme_rays(rows, k + 1):
        a, b = r[:-1], r[-1]
        if all(x == 0 for x in a):
            continue
        normal = [0] * n
        for j, c in enumerate(piv):
            normal[c] = a[j]
        bound = b + dot(normal, x0)
        normal = tuple(normal)
        nn = normalize(normal + (bound,))
        facets.append(HalfSpace(canonical(nn[:-1]), simplify(nn[-1])))
    facets.sort(key=lambda h: (tuple(h.normal), h.bound))
    return HRep(tuple(facets), tuple(eqs))
