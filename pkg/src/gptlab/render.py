"""Planar cross-sections of state and effect bodies, written as SVG."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .bodies import ArcBody, Polytope
from .errors import EmptySection
from .geometry import parse_scalar

AXES = "xyz"
PLANE_TOL = 1e-9


@dataclass(frozen=True)
class Plane:
    axis: int
    value: float

    @classmethod
    def parse(cls, spec: str) -> "Plane":
        """``"z=1/2"`` style: an axis name, ``=``, and an exact or decimal value."""
        name, sep, value = spec.replace(" ", "").partition("=")
        if not sep or name not in AXES:
            raise ValueError(f"plane must look like 'z=1/2', got {spec!r}")
        try:
            v = float(parse_scalar(value))
        except (TypeError, ValueError, ZeroDivisionError):
            v = float(value)
        return cls(AXES.index(name), v)

    def __str__(self):
        return f"{AXES[self.axis]}={self.value:g}"


@dataclass
class Section:
    axes: tuple            # names of the two drawn coordinates
    outline: np.ndarray    # (k, 2), counterclockwise, starting at the lexicographic minimum
    labels: list = field(default_factory=list)  # (name, (x, y))
    title: str = ""


def _arc_count(arc, max_error: float) -> int:
    span = arc.theta[1] - arc.theta[0]
    # sagitta r(1 - cos(step/2)) stays below max_error
    step = 2 * math.acos(max(-1.0, 1 - max_error / arc.radius))
    return max(2, int(math.ceil(span / step)) + 1)


def body_points(body, max_error: float = 1e-4) -> np.ndarray:
    if isinstance(body, Polytope):
        return np.array([[float(c) for c in v] for v in body.vertices], dtype=float)
    if isinstance(body, ArcBody):
        parts = [body.points] + [arc.samples(_arc_count(arc, max_error)) for arc in body.arcs]
        return np.vstack([p for p in parts if len(p)])
    raise TypeError(f"cannot render a {type(body).__name__}; render its source body instead")


def _affine_rank(pts: np.ndarray) -> int:
    if len(pts) <= 1:
        return 0
    s = np.linalg.svd(pts - pts[0], compute_uv=False)
    return int(np.sum(s > 1e-9 * max(1.0, s[0])))


def _boundary_edges(pts: np.ndarray):
    """Edges whose union contains the boundary of the hull of ``pts``."""
    rank = _affine_rank(pts)
    if rank == pts.shape[1]:
        hull = ConvexHull(pts)
        edges = set()
        for simplex in hull.simplices:
            for i in range(len(simplex)):
                for j in range(i + 1, len(simplex)):
                    edges.add((min(simplex[i], simplex[j]), max(simplex[i], simplex[j])))
        return [(pts[i], pts[j]) for i, j in sorted(edges)]
    if rank == 0:
        return [(pts[0], pts[0])]
    x0 = pts.mean(axis=0)
    _, _, vt = np.linalg.svd(pts - x0)
    local = (pts - x0) @ vt[:rank].T
    if rank == 1:
        lo, hi = int(np.argmin(local[:, 0])), int(np.argmax(local[:, 0]))
        return [(pts[lo], pts[hi])]
    ring = ConvexHull(local).vertices
    return [(pts[ring[i]], pts[ring[(i + 1) % len(ring)]]) for i in range(len(ring))]


def _order(points2d: np.ndarray) -> np.ndarray:
    pts = np.unique(np.round(points2d, 9), axis=0)
    if len(pts) >= 3 and _affine_rank(pts) == 2:
        try:
            pts = pts[ConvexHull(pts).vertices]
        except QhullError:
            pass
    elif len(pts) >= 2:
        d = pts[-1] - pts[0]
        t = (pts - pts[0]) @ d
        pts = pts[[int(np.argmin(t)), int(np.argmax(t))]]
    start = min(range(len(pts)), key=lambda i: (pts[i][0], pts[i][1]))
    return np.roll(pts, -start, axis=0)


def cross_section(body, plane: Optional[Plane] = None, labels=None, max_error: float = 1e-3) -> Section:
    """Outline of ``body`` cut by ``plane`` (omit the plane for two-coordinate bodies)."""
    pts = body_points(body, max_error / 10)
    n = pts.shape[1]
    named = [(k, np.array([c if isinstance(c, float) else float(parse_scalar(c)) for c in p]))
             for k, p in (labels or {}).items()]
    if n == 2:
        if plane is not None:
            raise ValueError("two-coordinate bodies are drawn whole; drop the plane")
        keep = (0, 1)
        cut = pts
        shown = [(k, tuple(p)) for k, p in named]
    elif n == 3:
        if plane is None:
            raise ValueError("three-coordinate bodies need a plane such as 'z=1'")
        keep = tuple(i for i in range(3) if i != plane.axis)
        side = pts[:, plane.axis] - plane.value
        hits = [p for p, s in zip(pts, side) if abs(s) <= PLANE_TOL]
        for p, q in _boundary_edges(pts):
            sp, sq = p[plane.axis] - plane.value, q[plane.axis] - plane.value
            if (sp < -PLANE_TOL and sq > PLANE_TOL) or (sp > PLANE_TOL and sq < -PLANE_TOL):
                hits.append(p + (q - p) * (sp / (sp - sq)))
        if not hits:
            raise EmptySection(f"plane {plane} misses the body")
        cut = np.array(hits)
        shown = [(k, (p[keep[0]], p[keep[1]])) for k, p in named if abs(p[plane.axis] - plane.value) <= PLANE_TOL]
    else:
        raise ValueError("only bodies with two or three coordinates can be drawn")
    outline = _order(cut[:, list(keep)])
    return Section(tuple(AXES[i] for i in keep) if n == 3 else ("x", "y"), outline, shown)


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def to_svg(section: Section, size: int = 420, margin: int = 40) -> str:
    pts = section.outline
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = max(float(np.max(hi - lo)), 1e-9)
    k = (size - 2 * margin) / span

    def xy(p):
        return (margin + (p[0] - lo[0]) * k, size - margin - (p[1] - lo[1]) * k)

    cmds = []
    for i, p in enumerate(pts):
        x, y = xy(p)
        cmds.append(f"{'M' if i == 0 else 'L'}{_fmt(x)} {_fmt(y)}")
    path = " ".join(cmds) + (" Z" if len(pts) > 2 else "")
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"  <title>{section.title}</title>" if section.title else None,
        f'  <path d="{path}" fill="#dde7f3" stroke="#1f3b5a" stroke-width="1.5"/>',
    ]
    for name, p in sorted(section.labels, key=lambda t: t[0]):
        x, y = xy(p)
        lines.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#1f3b5a"/>')
        lines.append(f'  <text x="{_fmt(x + 5)}" y="{_fmt(y - 5)}" font-size="12">{name}</text>')
    a, b = section.axes
    lines.append(f'  <text x="{size - margin}" y="{size - 8}" font-size="11">{a}</text>')
    lines.append(f'  <text x="8" y="{margin - 8}" font-size="11">{b}</text>')
    lines.append("</svg>")
    return "\n".join(line for line in lines if line is not None) + "\n"


def render_cross_section(body, plane: Optional[Plane], output, labels=None, title: str = "") -> Section:
    section = cross_section(body, plane, labels)
    section.title = title
    Path(output).write_text(to_svg(section))
    return section
