"""Convex bodies: exact polytopes and floating-point arc-generated bodies.

Both kinds answer the same queries (support, exposed faces, point
classification, affine dimension). Polytope answers are exact; arc-body answers
hold up to an absolute tolerance (``1e-9`` by default).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import OutsideBody, UnsupportedFamily, ZeroDirection
from .geometry import HRep, affine_dimension, format_vector, hrep_to_vrep, rvec, vrep_to_hrep
from .geometry.linalg import dot, rank
from .geometry.polyhedra import canonical, sort_key

DEFAULT_TOL = 1e-9


class PointClass(str, Enum):
    INTERIOR = "interior"
    BOUNDARY_NON_EXTREMAL = "boundary_non_extremal"
    EXTREMAL_EXPOSED = "extremal_exposed"
    EXTREMAL_NOT_EXPOSED = "extremal_not_exposed"


@dataclass(frozen=True)
class Face:
    """An exposed face ``{x in body : functional . x = level}``.

    ``points`` are the generators attaining the level: polytope vertices
    (exact) or tight point generators and arc tangency points (float).
    """

    functional: tuple
    level: object
    points: tuple
    dimension: int
    vertex_indices: tuple = ()
    arc_pieces: tuple = ()  # (arc index, theta_lo, theta_hi)
    exact: bool = True
    attained: bool = True

    def __len__(self):
        return len(self.points)

    def float_points(self) -> np.ndarray:
        return np.array([[float(c) for c in p] for p in self.points], dtype=float)

    def contains_point(self, x, tol: float = 1e-7) -> bool:
        """Whether ``x`` lies in ``conv(points)``."""
        if self.exact and all(not isinstance(c, float) for c in x):
            return _exact_in_hull(x, self.points)
        return _float_in_hull(np.asarray(x, dtype=float), self.float_points(), tol)

    def issubset(self, other: "Face", tol: float = 1e-7) -> bool:
        """Inclusion of faces of the same body: every generator is tight for ``other``."""
        if self.exact and other.exact:
            return all(dot(other.functional, p) == other.level for p in self.points)
        h = np.asarray(other.functional, dtype=float)
        lvl = float(other.level)
        return all(abs(float(h @ p) - lvl) <= tol for p in self.float_points())


@dataclass(frozen=True)
class ArcFamily:
    """A continuum of singleton exposed faces: every point of an open arc piece."""

    arc_index: int
    theta: tuple
    note: str = ""


def _exact_in_hull(x, points) -> bool:
    if len(points) == 1:
        return tuple(x) == tuple(points[0])
    return Polytope(points).contains(x)


def _float_in_hull(x, pts, tol) -> bool:
    from scipy.optimize import linprog

    if len(pts) == 1:
        return bool(np.linalg.norm(pts[0] - x) <= tol)
    m = len(pts)
    a_eq = np.vstack([pts.T, np.ones(m)])
    b_eq = np.append(x, 1.0)
    res = linprog(np.zeros(m), A_eq=a_eq, b_eq=b_eq, bounds=[(0, None)] * m, method="highs")
    if res.status != 0:
        return False
    return bool(np.linalg.norm(pts.T @ res.x - x) <= tol)


class Polytope:
    """Exact polytope in V- and H-representation; vertices kept in lexicographic order."""

    def __init__(self, points: Sequence):
        pts = sorted({canonical(rvec(p) if not isinstance(p, tuple) else p) for p in points}, key=sort_key)
        if not pts:
            raise ValueError("a polytope needs at least one point")
        self.hrep: HRep = vrep_to_hrep(pts)
        n = len(pts[0])
        eqs = [a for a, _ in self.hrep.equalities]
        verts = []
        for p in pts:
            tight = [h.normal for h in self.hrep.halfspaces if dot(h.normal, p) == h.bound]
            if rank(eqs + tight, n) == n:
                verts.append(p)
        self.vertices: tuple = tuple(verts)

    @classmethod
    def from_hrep(cls, region: HRep) -> "Polytope":
        return cls(hrep_to_vrep(region).vertices)

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    @property
    def facets(self):
        return self.hrep.halfspaces

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polytope({[format_vector(v) for v in self.vertices]})"

    def contains(self, x) -> bool:
        return self.hrep.contains(tuple(x))

    def affine_dim(self) -> int:
        return affine_dimension(self.vertices)

    def relative_interior_point(self):
        n = len(self.vertices)
        return canonical(tuple(sum(c) / n for c in zip(*self.vertices)))

    def support(self, direction):
        """Maximum of ``direction . x`` and the face attaining it (exact)."""
        h = tuple(direction)
        if all(c == 0 for c in h):
            raise ZeroDirection("support direction must be nonzero")
        if any(isinstance(c, float) for c in h):
            vals = [sum(float(a) * float(b) for a, b in zip(h, v)) for v in self.vertices]
            best = max(vals)
            idx = tuple(i for i, v in enumerate(vals) if v >= best - DEFAULT_TOL)
            pts = tuple(self.vertices[i] for i in idx)
            face = Face(h, best, pts, affine_dimension(pts), idx, exact=False)
            return best, face
        vals = [dot(h, v) for v in self.vertices]
        best = max(vals)
        idx = tuple(i for i, v in enumerate(vals) if v == best)
        pts = tuple(self.vertices[i] for i in idx)
        return best, Face(h, best, pts, affine_dimension(pts), idx)

    def exposed_face_at(self, direction) -> Face:
        return self.support(direction)[1]

    def tight_indices(self, functional, level) -> frozenset:
        return frozenset(i for i, v in enumerate(self.vertices) if dot(functional, v) == level)

    def face_from_indices(self, idx) -> Face:
        """The smallest face containing the given vertices, with an exposing functional."""
        idx = tuple(sorted(idx))
        pts = [self.vertices[i] for i in idx]
        tight = [h for h in self.facets if all(dot(h.normal, p) == h.bound for p in pts)]
        n = self.ambient_dim
        if tight:
            func = tuple(sum((h.normal[j] for h in tight), 0) for j in range(n))
            level = sum((h.bound for h in tight), 0)
        elif self.hrep.equalities:
            func, level = self.hrep.equalities[0]
        else:
            raise ValueError("a full-dimensional polytope is not an exposed face of itself")
        func, level = canonical(func), canonical((level,))[0]
        full = tuple(sorted(self.tight_indices(func, level)))
        fpts = tuple(self.vertices[i] for i in full)
        return Face(func, level, fpts, affine_dimension(fpts), full)

    def classify_point(self, x) -> PointClass:
        x = tuple(x)
        if not self.contains(x):
            raise OutsideBody(f"{format_vector(x)} is not in the polytope")
        if x in self.vertices:
            return PointClass.EXTREMAL_EXPOSED
        if any(dot(h.normal, x) == h.bound for h in self.facets):
            return PointClass.BOUNDARY_NON_EXTREMAL
        return PointClass.INTERIOR

    def minimal_exposed_faces(self) -> list[Face]:
        """Every vertex is an exposed point, so the minimal exposed faces are the vertices."""
        return [self.face_from_indices((i,)) for i in range(len(self.vertices))]

    def faces(self) -> list[Face]:
        """All nonempty proper exposed faces, as intersections of facet subsets."""
        sets = set()
        base = [frozenset(i for i, v in enumerate(self.vertices) if dot(h.normal, v) == h.bound)
                for h in self.facets]
        frontier = set(base)
        sets |= frontier
        while frontier:
            nxt = set()
            for s in frontier:
                for b in base:
                    t = s & b
                    if t and t not in sets:
                        nxt.add(t)
            sets |= nxt
            frontier = nxt
        if not self.facets and len(self.vertices) == 1:
            sets.add(frozenset({0}))
        return [self.face_from_indices(s) for s in sorted(sets, key=lambda s: (len(s), sorted(s)))]

    def to_float(self) -> np.ndarray:
        return np.array([[float(c) for c in v] for v in self.vertices], dtype=float)


@dataclass(frozen=True)
class CircularArc:
    """``center + r cos(t) a + r sin(t) b`` for ``t`` in ``theta``."""

    center: tuple
    radius: float
    a: tuple
    b: tuple
    theta: tuple
    closed: tuple = (True, True)

    def __post_init__(self):
        a, b = np.asarray(self.a, float), np.asarray(self.b, float)
        if abs(a @ b) > 1e-9 or abs(np.linalg.norm(a) - 1) > 1e-9 or abs(np.linalg.norm(b) - 1) > 1e-9:
            raise ValueError("arc frame must be orthonormal")
        if not self.theta[0] < self.theta[1]:
            raise ValueError("arc needs theta0 < theta1")
        if self.radius <= 0:
            raise ValueError("arc radius must be positive")

    def point(self, t: float) -> np.ndarray:
        c, a, b = (np.asarray(v, float) for v in (self.center, self.a, self.b))
        return c + self.radius * (math.cos(t) * a + math.sin(t) * b)

    def samples(self, count: int) -> np.ndarray:
        ts = np.linspace(self.theta[0], self.theta[1], count)
        return np.array([self.point(t) for t in ts])

    def tangent(self, t: float) -> np.ndarray:
        a, b = np.asarray(self.a, float), np.asarray(self.b, float)
        return -math.sin(t) * a + math.cos(t) * b

    def maximize(self, h: np.ndarray):
        """``(value, theta)`` of the maximum of ``h . x`` over the closed arc; theta None if flat."""
        c, a, b = (np.asarray(v, float) for v in (self.center, self.a, self.b))
        ha, hb = float(h @ a), float(h @ b)
        rho = math.hypot(ha, hb)
        base = float(h @ c)
        t0, t1 = self.theta
        if rho * self.radius < 1e-15:
            return base, None
        phi = math.atan2(hb, ha)
        k = math.ceil((t0 - phi) / (2 * math.pi))
        phi += 2 * math.pi * k
        if phi <= t1:
            return base + self.radius * rho, phi
        v0 = base + self.radius * rho * math.cos(t0 - phi)
        v1 = base + self.radius * rho * math.cos(t1 - phi)
        return (v0, t0) if v0 >= v1 else (v1, t1)

    def to_json(self) -> dict:
        return {"center": list(map(float, self.center)), "radius": float(self.radius),
                "a": list(map(float, self.a)), "b": list(map(float, self.b)),
                "theta": [float(self.theta[0]), float(self.theta[1])], "closed": list(self.closed)}


class ArcBody:
    """Convex hull of finitely many points and circular arcs (floating point).

    ``family`` names a catalog family ("pill", "lens", "octagon_lens") for the
    queries that are only defined there. ``exact_points`` and ``limit_rays``
    carry exact data for catalog bodies: the point generators in exact form and
    the directions that lie in the closure of the body's cone without being
    attained by any nonzero point of the body.
    """

    def __init__(self, points=(), arcs=(), tol: float = DEFAULT_TOL, family: Optional[str] = None,
                 exact_points: Optional[Sequence] = None, limit_rays: Sequence = ()):
        pts = [tuple(float(c) for c in p) for p in points]
        self.arcs: tuple = tuple(arcs)
        if not pts and not self.arcs:
            raise ValueError("an arc body needs at least one generator")
        n = len(pts[0]) if pts else len(self.arcs[0].center)
        self.points = np.array(pts, dtype=float).reshape(len(pts), n)
        self.tol = tol
        self.family = family
        self.exact_points = tuple(exact_points) if exact_points is not None else None
        self.limit_rays = tuple(limit_rays)

    @property
    def ambient_dim(self) -> int:
        return self.points.shape[1]

    def __repr__(self):
        return f"ArcBody(points={len(self.points)}, arcs={len(self.arcs)}, family={self.family!r})"

    # -- sampling / hull data --------------------------------------------------

    @cached_property
    def cloud(self) -> np.ndarray:
        parts = [self.points] + [arc.samples(257) for arc in self.arcs]
        return np.vstack([p for p in parts if len(p)])

    @cached_property
    def _hull_frame(self):
        pts = self.cloud
        x0 = pts.mean(axis=0)
        _, s, vt = np.linalg.svd(pts - x0)
        k = int(np.sum(s > 1e-9 * max(1.0, s[0] if len(s) else 1.0)))
        return x0, vt[:k].T

    def affine_dim(self) -> int:
        return self._hull_frame[1].shape[1]

    def relative_interior_point(self) -> np.ndarray:
        return self._hull_frame[0]

    def key_points(self) -> list[np.ndarray]:
        out = [p for p in self.points]
        for arc in self.arcs:
            out.append(arc.point(arc.theta[0]))
            out.append(arc.point(arc.theta[1]))
        return out

    # -- support ---------------------------------------------------------------

    def support(self, direction):
        h = np.asarray([float(c) for c in direction], dtype=float)
        if not np.any(h):
            raise ZeroDirection("support direction must be nonzero")
        tol = self.tol
        cands = []
        pvals = self.points @ h if len(self.points) else np.array([])
        for i, v in enumerate(pvals):
            cands.append((float(v), ("pt", i)))
        arc_max = []
        for j, arc in enumerate(self.arcs):
            val, t = arc.maximize(h)
            arc_max.append((val, t))
            cands.append((val, ("arc", j)))
        best = max(v for v, _ in cands)
        pts, idx, pieces = [], [], []
        attained = False
        for i, v in enumerate(pvals):
            if v >= best - tol:
                pts.append(self.points[i])
                idx.append(i)
                attained = True
        for j, arc in enumerate(self.arcs):
            val, t = arc_max[j]
            if val < best - tol:
                continue
            t0, t1 = arc.theta
            if t is None:
                pieces.append((j, t0, t1))
                ends = [t0, (t0 + t1) / 2, t1]
                pts.extend(arc.point(s) for s in ends)
                attained = True
                continue
            tight = [t]
            for e in (t0, t1):
                if abs(e - t) > 1e-12 and float(h @ arc.point(e)) >= best - tol:
                    tight.append(e)
            for s in tight:
                if (s == t0 and not arc.closed[0]) or (s == t1 and not arc.closed[1]):
                    continue
                pieces.append((j, s, s))
                pts.append(arc.point(s))
                attained = True
        pts = _dedup(pts)
        face = Face(tuple(h), best, tuple(tuple(p) for p in pts), _float_affine_dim(pts),
                    tuple(idx), tuple(pieces), exact=False, attained=attained)
        return best, face

    def exposed_face_at(self, direction) -> Face:
        return self.support(direction)[1]

    # -- point classification (bodies of affine dimension <= 2) ----------------

    def _plane_dirs(self, phis):
        _, q = self._hull_frame
        return np.array([q @ np.array([math.cos(p), math.sin(p)]) for p in phis])

    def _gap(self, x, h):
        return self.support(h)[0] - float(h @ x)

    def classify_point(self, x) -> PointClass:
        return self._locate(np.asarray([float(c) for c in x], dtype=float))[0]

    def smallest_exposed_face(self, x) -> Face:
        """Intersection of all exposed faces containing ``x`` (the body itself if interior)."""
        label, face = self._locate(np.asarray([float(c) for c in x], dtype=float))
        return face

    def _whole_face(self) -> Face:
        pts = _dedup(list(self.cloud))
        return Face(tuple([0.0] * self.ambient_dim), 0.0, tuple(tuple(p) for p in pts),
                    self.affine_dim(), exact=False)

    def _locate(self, x):
        x0, q = self._hull_frame
        k = q.shape[1]
        tol = self.tol
        resid = (x - x0) - q @ (q.T @ (x - x0))
        if np.linalg.norm(resid) > 1e-7:
            raise OutsideBody("point is off the affine hull of the body")
        if k == 0:
            face = Face(tuple([0.0] * self.ambient_dim), 0.0, (tuple(x),), 0, exact=False)
            return PointClass.EXTREMAL_EXPOSED, face
        if k > 2:
            raise UnsupportedFamily("point classification is implemented for affine dimension <= 2")
        if k == 1:
            return self._locate_segment(x, q[:, 0])
        grid = np.linspace(0.0, 2 * math.pi, 720, endpoint=False)
        dirs = self._plane_dirs(grid)
        gaps = np.array([self._gap(x, h) for h in dirs])
        i = int(np.argmin(gaps))
        step = 2 * math.pi / 720
        res = minimize_scalar(lambda p: self._gap(x, self._plane_dirs([p])[0]),
                              bounds=(grid[i] - step, grid[i] + step), method="bounded",
                              options={"xatol": 1e-12})
        gmin = min(float(res.fun), float(gaps[i]))
        if gmin < -tol:
            raise OutsideBody("point lies outside the body")
        if gmin > tol:
            return PointClass.INTERIOR, self._whole_face()
        candidates = [h for h, g in zip(dirs, gaps) if g <= tol]
        candidates += self._analytic_normals(x)
        candidates = [h / np.linalg.norm(h) for h in candidates if self._gap(x, h) <= tol]
        faces = [self.support(h)[1] for h in candidates]
        for f in faces:
            fp = f.float_points()
            if len(fp) and np.all(np.linalg.norm(fp - x, axis=1) <= 1e-7):
                return PointClass.EXTREMAL_EXPOSED, _point_face(f, x)
        if not faces:
            h = self._plane_dirs([float(res.x)])[0]
            faces = [self.support(h)[1]]
        seg = max(faces, key=lambda f: _extent(f.float_points()))
        ends = _segment_ends(seg.float_points())
        if any(np.linalg.norm(e - x) <= 1e-7 for e in ends):
            return PointClass.EXTREMAL_NOT_EXPOSED, seg
        return PointClass.BOUNDARY_NON_EXTREMAL, seg

    def _locate_segment(self, x, axis):
        proj = self.cloud @ axis
        lo, hi = float(proj.min()), float(proj.max())
        t = float(x @ axis)
        if t < lo - self.tol or t > hi + self.tol:
            raise OutsideBody("point lies outside the body")
        h = axis if abs(t - hi) <= self.tol else (-axis if abs(t - lo) <= self.tol else None)
        if h is None:
            return PointClass.INTERIOR, self._whole_face()
        return PointClass.EXTREMAL_EXPOSED, self.support(h)[1]

    def _analytic_normals(self, x) -> list[np.ndarray]:
        """Outward normals at ``x`` suggested by the generators: arc radii and hull chords."""
        _, q = self._hull_frame
        out = []
        for arc in self.arcs:
            c = np.asarray(arc.center, float)
            if abs(np.linalg.norm(x - c) - arc.radius) <= 1e-7:
                out.append(q @ (q.T @ (x - c)))
        keys = self.key_points()
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                p, r = keys[i], keys[j]
                d = q.T @ (r - p)
                if np.linalg.norm(d) < 1e-9:
                    continue
                # x on the chord p..r?
                s = float((q.T @ (x - p)) @ d / (d @ d))
                if -1e-9 <= s <= 1 + 1e-9 and np.linalg.norm(q.T @ (x - p) - s * d) <= 1e-7:
                    nrm = np.array([d[1], -d[0]])
                    out.append(q @ nrm)
                    out.append(-(q @ nrm))
        return out

    # -- minimal exposed faces (catalog families) ------------------------------

    def minimal_exposed_faces(self) -> list:
        if not self.arcs:
            return _polytope_faces_as_float(self)
        if self.family not in ("pill", "lens", "octagon_lens"):
            raise UnsupportedFamily(f"minimal exposed faces not available for family {self.family!r}")
        if self.family == "octagon_lens":
            return self._octagon_minimal_faces()
        out: list = []
        keys = _dedup(self.key_points())
        exposed = []
        for p in keys:
            label, face = self._locate(p)
            if label is PointClass.EXTREMAL_EXPOSED:
                out.append(face)
                exposed.append(p)
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                p, r = keys[i], keys[j]
                if any(np.allclose(p, e) for e in exposed) or any(np.allclose(r, e) for e in exposed):
                    continue
                _, q = self._hull_frame
                d = q.T @ (r - p)
                for nrm in (q @ np.array([d[1], -d[0]]), -(q @ np.array([d[1], -d[0]]))):
                    f = self.support(nrm)[1]
                    ends = _segment_ends(f.float_points())
                    if f.dimension == 1 and _same_points(ends, [p, r]):
                        out.append(f)
        for j, arc in enumerate(self.arcs):
            mid = arc.point(sum(arc.theta) / 2)
            if self._locate(mid)[0] is PointClass.EXTREMAL_EXPOSED:
                out.append(ArcFamily(j, tuple(arc.theta), "every interior arc point is an exposed point"))
        return out

    def _octagon_minimal_faces(self) -> list:
        if self.exact_points is None:
            raise UnsupportedFamily("octagon_lens family needs exact point data")
        hull = Polytope(self.exact_points)
        faces = []
        for v in hull.vertices:
            fl = np.array([float(c) for c in v])
            # point generators that the lens does not swallow stay exposed
            _, f = self.support(_exposing_direction(hull, v))
            if len(f.points) == 1 and np.allclose(f.float_points()[0], fl, atol=1e-9):
                faces.append(f)
        for j, arc in enumerate(self.arcs):
            faces.append(ArcFamily(j, tuple(arc.theta), "interior arc points exposed by construction"))
        return faces

    def to_json(self) -> dict:
        return {"points": self.points.tolist(), "arcs": [a.to_json() for a in self.arcs], "tol": self.tol}


def _exposing_direction(hull: Polytope, v):
    return hull.face_from_indices((hull.vertices.index(v),)).functional


def _polytope_faces_as_float(body: ArcBody) -> list[Face]:
    exact = [tuple(Fraction(c) for c in p) for p in body.points]
    poly = Polytope(exact)
    out = []
    for v in poly.vertices:
        h = poly.face_from_indices((poly.vertices.index(v),)).functional
        out.append(body.support([float(c) for c in h])[1])
    return out


def arc_body_from_json(data: dict) -> ArcBody:
    arcs = [CircularArc(tuple(a["center"]), float(a["radius"]), tuple(a["a"]), tuple(a["b"]),
                        tuple(a["theta"]), tuple(a.get("closed", (True, True)))) for a in data.get("arcs", [])]
    return ArcBody(data.get("points", []), arcs, float(data.get("tol", DEFAULT_TOL)),
                   family=data.get("family"))


def _point_face(f: Face, x) -> Face:
    return Face(f.functional, f.level, (tuple(x),), 0, f.vertex_indices, f.arc_pieces, exact=False)


def _dedup(points, tol=1e-9):
    out = []
    for p in points:
        p = np.asarray(p, dtype=float)
        if not any(np.linalg.norm(p - o) <= tol for o in out):
            out.append(p)
    return out


def _float_affine_dim(points, tol=1e-7) -> int:
    if len(points) <= 1:
        return 0
    arr = np.asarray(points, dtype=float)
    s = np.linalg.svd(arr[1:] - arr[0], compute_uv=False)
    return int(np.sum(s > tol))


def _extent(pts) -> float:
    if len(pts) <= 1:
        return 0.0
    return float(max(np.linalg.norm(p - r) for p in pts for r in pts))


def _segment_ends(pts):
    pts = np.asarray(pts, dtype=float)
    if len(pts) <= 1:
        return list(pts)
    best = (0.0, 0, 0)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = float(np.linalg.norm(pts[i] - pts[j]))
            if d > best[0]:
                best = (d, i, j)
    return [pts[best[1]], pts[best[2]]]


def _same_points(a, b, tol=1e-7) -> bool:
    return len(a) == len(b) and all(any(np.linalg.norm(p - r) <= tol for r in b) for p in a)


def support(body, direction):
    """Support value and exposed face of a polytope or arc body."""
    return body.support(direction)


def exposed_face_at(body, direction) -> Face:
    return body.exposed_face_at(direction)


def classify_point(body, x) -> PointClass:
    return body.classify_point(x)


def minimal_exposed_faces(body) -> list:
    return body.minimal_exposed_faces()


def affine_dim(body) -> int:
    return body.affine_dim()


def relative_interior_point(body):
    return body.relative_interior_point()


def face_to_json(face) -> dict:
    if isinstance(face, ArcFamily):
        return {"kind": "arc_family", "arc": face.arc_index, "theta": list(face.theta), "note": face.note}
    if face.exact:
        return {"kind": "face", "functional": format_vector(face.functional),
                "level": format_vector((face.level,))[0],
                "points": [format_vector(p) for p in face.points], "dimension": face.dimension}
    return {"kind": "face", "functional": [round(float(c), 12) for c in face.functional],
            "level": round(float(face.level), 12),
            "points": [[round(float(c), 12) for c in p] for p in face.points],
            "dimension": face.dimension}
