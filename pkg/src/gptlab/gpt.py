"""GPT systems: state spaces, effect spaces, the two duality maps and restriction classes."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np
from scipy.optimize import linprog

from .bodies import ArcBody, Face, Polytope
from .errors import NotPolytopal, UnsupportedFamily
from .geometry import HalfSpace, HRep, find_feasible_point, format_vector, lp_optimize
from .geometry.linalg import dot, rank
from .geometry.polyhedra import canonical, sub


def unit(n: int) -> tuple:
    return tuple([Fraction(0)] * (n - 1) + [Fraction(1)])


def zero(n: int) -> tuple:
    return tuple([Fraction(0)] * n)


class DualEffectBody:
    """The unrestricted effect space of a curved state space, kept implicit.

    Effects are ``{e : 0 <= e . s <= 1 for s in source}``. Queries about
    actual sets reduce to exposed faces of ``source``.
    """

    def __init__(self, source: ArcBody):
        self.source = source

    @property
    def ambient_dim(self) -> int:
        return self.source.ambient_dim

    def __repr__(self):
        return f"DualEffectBody({self.source!r})"

    def support(self, direction):
        """Support value of the dual body, by LP against sampled state constraints (approximate)."""
        h = np.asarray([float(c) for c in direction], dtype=float)
        pts = self.source.cloud
        a_ub = np.vstack([pts, -pts])
        b_ub = np.concatenate([np.ones(len(pts)), np.zeros(len(pts))])
        res = linprog(-h, A_ub=a_ub, b_ub=b_ub, bounds=[(None, None)] * len(h), method="highs")
        return float(-res.fun), res.x


EffectBody = Union[Polytope, ArcBody, DualEffectBody]
StateBody = Union[Polytope, ArcBody]


@dataclass(frozen=True)
class Observable:
    effects: tuple

    def total(self):
        return tuple(sum(c) for c in zip(*self.effects))


@dataclass
class GptSystem:
    states: StateBody
    effects: EffectBody
    observables: tuple = ()
    name: str = ""

    def __post_init__(self):
        if not self.observables:
            self.observables = tuple(couple_observables(self.effects))

    @property
    def dim(self) -> int:
        return self.states.ambient_dim - 1


def effect_generators(effects: EffectBody) -> list:
    """Listed generators of an effect body (exact when available)."""
    if isinstance(effects, Polytope):
        return list(effects.vertices)
    if isinstance(effects, ArcBody):
        if effects.exact_points is not None:
            return list(effects.exact_points)
        return [tuple(p) for p in effects.points]
    return []


def couple_observables(effects: EffectBody) -> list[Observable]:
    """All two-outcome observables ``[e, u - e]`` over the listed generators."""
    gens = effect_generators(effects)
    if not gens:
        return []
    u = unit(len(gens[0]))
    if isinstance(gens[0][0], float):
        u = tuple(float(c) for c in u)
    seen, out = set(), []
    for e in gens:
        c = canonical(sub(u, e)) if not isinstance(e[0], float) else tuple(a - b for a, b in zip(u, e))
        key = frozenset([tuple(e), tuple(c)])
        if key not in seen:
            seen.add(key)
            out.append(Observable((tuple(e), tuple(c))))
    return out


# -- duality maps --------------------------------------------------------------


def unrestricted_effects(states: StateBody) -> Polytope:
    """All effects giving probabilities in ``[0, 1]`` on every state, as an exact polytope."""
    if not isinstance(states, Polytope):
        raise NotPolytopal("unrestricted effects are computed exactly only for polytopes; "
                           "use DualEffectBody for curved state spaces")
    n = states.ambient_dim
    hs = []
    for w in states.vertices:
        hs.append(HalfSpace(w, Fraction(1)))
        hs.append(HalfSpace(tuple(-c for c in w), Fraction(0)))
    return Polytope.from_hrep(HRep(tuple(hs), ()))


def unrestricted_states(effects: EffectBody) -> StateBody:
    """All normalized vectors giving probability at most one on every effect.

    For curved effect bodies this uses the exact closure-of-cone certificate
    (point generators plus limit rays); the result only depends on that closure.
    """
    if isinstance(effects, DualEffectBody):
        return effects.source
    if isinstance(effects, Polytope):
        n = effects.ambient_dim
        hs = tuple(HalfSpace(e, Fraction(1)) for e in effects.vertices if any(c != 0 for c in e))
        return Polytope.from_hrep(HRep(hs, ((unit(n), Fraction(1)),)))
    if effects.exact_points is None:
        raise UnsupportedFamily("curved effect bodies need exact cone certificates")
    n = effects.ambient_dim
    gens = [g for g in list(effects.exact_points) + list(effects.limit_rays) if any(c != 0 for c in g)]
    hs = tuple(HalfSpace(tuple(-c for c in g), Fraction(0)) for g in gens)
    poly = Polytope.from_hrep(HRep(hs, ((unit(n), Fraction(1)),)))
    cloud = effects.cloud
    for w in poly.vertices:
        wf = np.array([float(c) for c in w])
        vals = cloud @ wf
        if vals.max() > 1 + 1e-7 or vals.min() < -1e-7:
            raise UnsupportedFamily("cone certificate does not match the sampled effect body")
    return poly


# -- validation ----------------------------------------------------------------


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)  # (name, passed, detail)

    def add(self, name, passed, detail=""):
        self.checks.append((name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.checks)

    @property
    def failures(self) -> list:
        return [(n, d) for n, p, d in self.checks if not p]

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [{"name": n, "passed": p, "detail": d} for n, p, d in self.checks]}


def _state_points(states: StateBody) -> list:
    if isinstance(states, Polytope):
        return list(states.vertices)
    return [tuple(p) for p in states.cloud]


def _effect_points(effects: EffectBody) -> list:
    if isinstance(effects, Polytope):
        return list(effects.vertices)
    if isinstance(effects, ArcBody):
        return [tuple(p) for p in effects.cloud]
    return []


def _contains(body: EffectBody, x) -> bool:
    if isinstance(body, Polytope):
        if any(isinstance(c, float) for c in x):
            return all(sum(float(a) * float(b) for a, b in zip(h.normal, x)) <= float(h.bound) + 1e-9
                       for h in body.facets)
        return body.contains(x)
    return approx_contains(body, x)


def _support_table(body: ArcBody, count: int):
    """Fixed random directions in the body's affine frame and their support values."""
    cache = body.__dict__.setdefault("_support_tables", {})
    if count not in cache:
        x0, q = body._hull_frame
        rng = np.random.default_rng(12345)
        dirs = rng.normal(size=(count, q.shape[1]))
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        hs = dirs @ q.T
        cache[count] = (hs, np.array([body.support(h)[0] for h in hs]))
    return cache[count]


def approx_contains_all(body: ArcBody, xs, count: int = 2000, tol: float = 1e-7) -> np.ndarray:
    """Vectorized :func:`approx_contains` over the rows of ``xs``."""
    pts = np.asarray([[float(c) for c in x] for x in xs], dtype=float)
    x0, q = body._hull_frame
    rel = pts - x0
    off = np.linalg.norm(rel - rel @ q @ q.T, axis=1) > tol
    if q.shape[1] == 0:
        return ~off
    hs, values = _support_table(body, count)
    inside = np.all(pts @ hs.T <= values[None, :] + tol, axis=1)
    return inside & ~off


def approx_contains(body: ArcBody, x, count: int = 2000, tol: float = 1e-7) -> bool:
    """Necessary-condition membership: ``h . x <= support(h)`` over many directions."""
    return bool(approx_contains_all(body, [x], count, tol)[0])


def validate_system(system: GptSystem) -> ValidationReport:
    rep = ValidationReport()
    S, E = system.states, system.effects
    n = S.ambient_dim
    u, z = unit(n), zero(n)
    spts = _state_points(S)
    rep.add("states_normalized", all(abs(float(p[-1]) - 1) <= 1e-12 for p in spts),
            "every state has last coordinate 1")
    if isinstance(E, DualEffectBody):
        inside = bool(np.all(approx_contains_all(E.source, spts)))
        rep.add("states_within_dual_source", inside, "states lie in the body whose dual is E")
        for ob in system.observables:
            rep.add("observable_sums_to_unit", True, "")
        return rep
    rep.add("contains_zero", _contains(E, z), "0 in E")
    rep.add("contains_unit", _contains(E, u), "u in E")
    gens = effect_generators(E)
    bad = [g for g in gens if not _contains(E, tuple(a - b for a, b in zip(u, g)))]
    rep.add("complement_closed", not bad,
            "" if not bad else f"u - e outside E for e = {_fmt(bad[0])}")
    epts = _effect_points(E)
    if isinstance(E, Polytope):
        spans = rank(list(E.vertices), n) == n
    else:
        spans = np.linalg.matrix_rank(np.array(epts, dtype=float), tol=1e-9) == n
    rep.add("spans", spans, "effects span the ambient space")
    worst = None
    for e in epts:
        for w in spts:
            exact = not (isinstance(e[0], float) or isinstance(w[0], float))
            v = dot(e, w) if exact else sum(float(a) * float(b) for a, b in zip(e, w))
            tol = 0 if exact else 1e-9
            if v < -tol or v > 1 + tol:
                worst = (e, w, v)
                break
        if worst:
            break
    rep.add("probabilities_in_unit_interval", worst is None,
            "" if worst is None else f"e = {_fmt(worst[0])}, w = {_fmt(worst[1])}: value {_fmt((worst[2],))[0]}")
    for ob in system.observables:
        tot = ob.total()
        ok = all(abs(float(a) - float(b)) <= 1e-12 for a, b in zip(tot, u)) if isinstance(tot[0], float) \
            else tuple(canonical(tot)) == u
        inside = all(_contains(E, e) for e in ob.effects)
        rep.add("observable_sums_to_unit", ok and inside,
                f"observable {[_fmt(e) for e in ob.effects]}" if not (ok and inside) else "")
    return rep


def _fmt(v):
    if any(isinstance(c, float) for c in v):
        return [repr(float(c)) for c in v]
    return format_vector(v)


def check_wes_identity(states: StateBody) -> bool:
    """Whether dualizing twice returns the state space, exactly."""
    if not isinstance(states, Polytope):
        raise NotPolytopal("the exact double-dual check needs a polytope")
    return unrestricted_states(unrestricted_effects(states)) == states


# -- restriction classes -------------------------------------------------------


@dataclass(frozen=True)
class RestrictionClass:
    klass: str  # unrestricted | NU | aNU | other
    unrestricted: bool
    nu: bool
    anu: bool
    gleason_type: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"class": self.klass, "unrestricted": self.unrestricted, "nu": self.nu,
                "anu": self.anu, "gleason_type": self.gleason_type}


def ray_reach(effects: Polytope, r) -> Fraction:
    """Largest ``p`` in ``[0, 1]`` with ``p * r`` in the effect polytope (exact LP)."""
    hs = [HalfSpace((dot(h.normal, r),), h.bound) for h in effects.facets if dot(h.normal, r) != 0]
    hs += [HalfSpace((Fraction(1),), Fraction(1)), HalfSpace((Fraction(-1),), Fraction(0))]
    eqs = tuple(((dot(a, r),), b) for a, b in effects.hrep.equalities if dot(a, r) != 0 or b != 0)
    value, _ = lp_optimize((Fraction(1),), HRep(tuple(hs), eqs), "max")
    return value


def float_ray_reach(effects: ArcBody, r) -> float:
    """Largest ``p`` in ``[0, 1]`` with ``p * r`` in the sampled hull of the effect body."""
    pts = effects.cloud
    rf = np.array([float(c) for c in r])
    m = len(pts)
    # variables: lambda (m), p; maximize p s.t. sum lambda_i x_i = p r, sum lambda = 1
    c = np.zeros(m + 1)
    c[-1] = -1.0
    a_eq = np.vstack([np.hstack([pts.T, -rf[:, None]]), np.append(np.ones(m), 0.0)])
    b_eq = np.append(np.zeros(len(rf)), 1.0)
    res = linprog(c, A_eq=a_eq, b_eq=b_eq, bounds=[(0, None)] * m + [(0, 1)], method="highs")
    return float(res.x[-1]) if res.status == 0 else 0.0


def in_cone(generators, r) -> bool:
    """Exact test of ``r in cone(generators)``."""
    gens = [g for g in generators if any(c != 0 for c in g)]
    k = len(gens)
    if k == 0:
        return all(c == 0 for c in r)
    n = len(r)
    eqs = tuple((tuple(g[i] for g in gens), r[i]) for i in range(n))
    hs = tuple(HalfSpace(tuple(Fraction(-1) if j == i else Fraction(0) for j in range(k)), Fraction(0))
               for i in range(k))
    return find_feasible_point(HRep(hs, eqs)) is not None


def _same_body(a, b) -> bool:
    if a is b:
        return True
    if isinstance(a, Polytope) and isinstance(b, Polytope):
        return a == b
    if isinstance(a, ArcBody) and isinstance(b, ArcBody):
        return a.to_json() == b.to_json()
    return False


def classify_restriction(system: GptSystem) -> RestrictionClass:
    S, E = system.states, system.effects
    if isinstance(E, DualEffectBody):
        same = _same_body(E.source, S)
        klass = "unrestricted" if same else "other"
        return RestrictionClass(klass, same, same, same, same,
                                "effect body is the dual of " + ("the state space" if same else "another body"))
    if not isinstance(S, Polytope):
        raise UnsupportedFamily("restriction classes need a polytopal state space or a dual effect body")
    es = unrestricted_effects(S)
    gleason = unrestricted_states(E) == S
    rays = [r for r in es.vertices if any(c != 0 for c in r)]
    if isinstance(E, Polytope):
        unrestricted = E == es
        reaches = [ray_reach(E, r) for r in rays]
        nu = all(p > 0 for p in reaches)
        anu = nu  # finitely generated cones are closed
        detail = "min ray reach " + format_vector((min(reaches),))[0]
    else:
        if E.family not in ("lens", "octagon_lens") or E.exact_points is None:
            raise UnsupportedFamily(f"no cone certificate for family {E.family!r}")
        unrestricted = False
        reaches = [float_ray_reach(E, r) for r in rays]
        nu = all(p > 1e-6 for p in reaches)
        closure = list(E.exact_points) + list(E.limit_rays)
        anu = all(in_cone(closure, r) for r in rays) and _limits_are_tangent(E)
        detail = f"min ray reach {min(reaches):.3g}"
    klass = "unrestricted" if unrestricted else "NU" if nu else "aNU" if anu else "other"
    return RestrictionClass(klass, unrestricted, nu or unrestricted, anu or nu or unrestricted, gleason, detail)


def _limits_are_tangent(E: ArcBody, tol: float = 1e-2) -> bool:
    """Each limit ray is approached by directions of body points but never reached."""
    pts = E.cloud
    norms = np.linalg.norm(pts, axis=1)
    dirs = pts[norms > 1e-12] / norms[norms > 1e-12][:, None]
    for r in E.limit_rays:
        rf = np.array([float(c) for c in r])
        rf /= np.linalg.norm(rf)
        if np.min(np.linalg.norm(dirs - rf, axis=1)) > tol:
            return False
        if float_ray_reach(E, r) > 1e-6:
            return False
    return True


def system_to_json(system: GptSystem) -> dict:
    def body(b):
        if isinstance(b, Polytope):
            return {"vertices": [format_vector(v) for v in b.vertices]}
        if isinstance(b, ArcBody):
            d = b.to_json()
            if b.family:
                d["family"] = b.family
            return d
        return {"dual_of": body(b.source)}

    return {"dim": system.dim, "states": body(system.states), "effects": body(system.effects),
            "observables": [[_fmt(e) for e in ob.effects] for ob in system.observables]}
