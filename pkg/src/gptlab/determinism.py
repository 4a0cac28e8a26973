"""Actual sets, actual faces and the decision procedure for intermediate determinism.

Two independent routes decide whether every pure state is singled out by the
effects it passes with certainty: a face-theoretic test (incomparable actual
faces plus exposed extreme points) and a direct brute-force oracle that solves
for the set of states sharing each pure state's certain effects.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .bodies import ArcBody, Face, PointClass, Polytope
from .errors import BijectionFailure, NotNU, NotPolytopal, OutsideBody, StateOutOfSpace, UnsupportedFamily
from .geometry import HalfSpace, HRep, format_vector, lp_optimize
from .geometry.linalg import dot
from .geometry.polyhedra import canonical
from .gpt import (DualEffectBody, GptSystem, classify_restriction, unit, unrestricted_effects,
                  unrestricted_states)

ARC_TOL = 1e-8


def _is_float_vec(v) -> bool:
    return any(isinstance(c, (float, np.floating)) for c in v)


@dataclass(frozen=True)
class ActualSet:
    """Effects of ``body`` that ``state`` passes with certainty.

    ``key`` identifies the set: tight vertex indices for polytopes, the exposed
    face for arc bodies, and the smallest exposed face of the source state space
    for dual effect bodies.
    """

    state: tuple
    body: object
    face: Face

    def is_subset(self, other: "ActualSet") -> bool:
        if isinstance(self.body, Polytope) and self.face.exact and other.face.exact:
            return set(self.face.vertex_indices) <= set(other.face.vertex_indices)
        if isinstance(self.body, DualEffectBody):
            # e tight on face(w) for all such e  =>  face(w') inside face(w)
            return self.face.contains_point(np.asarray([float(c) for c in other.state]), ARC_TOL * 10)
        return self.face.issubset(other.face, ARC_TOL * 10)

    def __eq__(self, other):
        if not isinstance(other, ActualSet):
            return NotImplemented
        return self.is_subset(other) and other.is_subset(self)

    def __hash__(self):
        return hash(type(self.body))

    def contains_unit(self) -> bool:
        if isinstance(self.body, DualEffectBody):
            return True
        n = len(self.state)
        u = unit(n)
        if self.face.exact:
            return u in self.face.points
        return any(np.allclose(p, [float(c) for c in u], atol=ARC_TOL) for p in self.face.float_points())

    @property
    def dimension(self) -> int:
        return self.face.dimension


def actual_set(state, body) -> ActualSet:
    """The face ``{e in body : e . state = 1}``."""
    w = tuple(state)
    if isinstance(body, Polytope):
        if _is_float_vec(w):
            val, face = body.support(w)
            if abs(val - 1) > ARC_TOL:
                raise StateOutOfSpace(f"max effect probability {val} != 1")
            return ActualSet(w, body, face)
        vals = [dot(w, v) for v in body.vertices]
        if any(v > 1 or v < 0 for v in vals):
            raise StateOutOfSpace(f"state {format_vector(w)} gives a probability outside [0, 1]")
        idx = tuple(i for i, v in enumerate(vals) if v == 1)
        pts = tuple(body.vertices[i] for i in idx)
        from .geometry import affine_dimension

        face = Face(w, Fraction(1), pts, affine_dimension(pts), idx)
        return ActualSet(w, body, face)
    if isinstance(body, ArcBody):
        wf = [float(c) for c in w]
        val, face = body.support(wf)
        if abs(val - 1) > ARC_TOL:
            raise StateOutOfSpace(f"max effect probability {val} != 1")
        return ActualSet(w, body, face)
    if isinstance(body, DualEffectBody):
        try:
            face = body.source.smallest_exposed_face(np.asarray([float(c) for c in w]))
        except OutsideBody as exc:
            raise StateOutOfSpace(str(exc)) from exc
        return ActualSet(w, body, face)
    raise TypeError(f"unsupported effect body {type(body).__name__}")


# -- actual faces and the face/state correspondence ------------------------------


@dataclass(frozen=True)
class ActualFace:
    face: Face
    state: tuple  # the state cutting out this face: normal / (normal . u)


def actual_faces(es: Polytope) -> list[ActualFace]:
    """Maximal exposed faces of a full-dimensional E(S) that contain the unit effect.

    Every proper face lies in a facet, so these are exactly the facets through u.
    """
    n = es.ambient_dim
    u = unit(n)
    if es.hrep.equalities:
        raise NotPolytopal("the unrestricted effect space must be full-dimensional")
    out = []
    for h in es.facets:
        if dot(h.normal, u) != h.bound:
            continue
        x = h.bound
        w = canonical(tuple(c / x for c in h.normal))
        idx = tuple(sorted(es.tight_indices(h.normal, h.bound)))
        pts = tuple(es.vertices[i] for i in idx)
        from .geometry import affine_dimension

        out.append(ActualFace(Face(w, Fraction(1), pts, affine_dimension(pts), idx), w))
    return out


def face_state_correspondence(states: Polytope) -> list[tuple]:
    """Pairs (vertex of S, actual face of E(S)), checked in both directions."""
    if not isinstance(states, Polytope):
        raise NotPolytopal("the correspondence is computed for polytopes")
    es = unrestricted_effects(states)
    faces = actual_faces(es)
    by_state = {f.state: f for f in faces}
    pairs = []
    for v in states.vertices:
        a = actual_set(v, es)
        f = by_state.get(v)
        if f is None or set(a.face.vertex_indices) != set(f.face.vertex_indices):
            raise BijectionFailure(f"vertex {format_vector(v)} has no matching actual face")
        pairs.append((v, f))
    if len(faces) != len(states.vertices):
        raise BijectionFailure(f"{len(faces)} actual faces for {len(states.vertices)} vertices")
    for f in faces:
        if f.state not in states.vertices:
            raise BijectionFailure(f"actual face state {format_vector(f.state)} is not a vertex")
    return pairs


# -- the two conditions ----------------------------------------------------------


@dataclass
class ConditionResult:
    holds: bool
    witness: Optional[tuple] = None
    note: str = ""


def _condition_i_states(system: GptSystem):
    """States cutting out the actual faces of E(S), or None when E is E(S) itself."""
    S, E = system.states, system.effects
    if isinstance(E, DualEffectBody) and isinstance(S, ArcBody):
        if E.source is S or E.source.to_json() == S.to_json():
            return None
        raise UnsupportedFamily("curved state space paired with the dual of another body")
    if not isinstance(S, Polytope):
        raise UnsupportedFamily("actual faces of a curved state space are only known for E = E(S)")
    return [f.state for f in actual_faces(unrestricted_effects(S))]


def check_condition_i(system: GptSystem) -> ConditionResult:
    """Distinct actual faces of E(S) must meet E in incomparable sets."""
    states = _condition_i_states(system)
    if states is None:
        return ConditionResult(True, note="E = E(S): actual faces are maximal, hence incomparable")
    E = system.effects
    sets = [actual_set(w, E) for w in states]
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j and a.is_subset(b):
                return ConditionResult(False, (states[i], states[j]),
                                       "the first actual face meets E inside the second")
    return ConditionResult(True)


def check_condition_ii(states) -> ConditionResult:
    """Every extreme point of the state space must be exposed."""
    if isinstance(states, Polytope):
        return ConditionResult(True, note="polytope vertices are exposed")
    if states.family is None and states.arcs:
        raise UnsupportedFamily("extreme-point scan needs a catalog family")
    for p in _extreme_candidates(states):
        if states.classify_point(p) is PointClass.EXTREMAL_NOT_EXPOSED:
            return ConditionResult(False, (tuple(float(c) for c in p),), "extreme point that is not exposed")
    return ConditionResult(True)


def _extreme_candidates(body: ArcBody) -> list:
    out = list(body.key_points())
    for arc in body.arcs:
        for t in np.linspace(arc.theta[0], arc.theta[1], 9)[1:-1]:
            out.append(arc.point(t))
    return out


# -- brute-force oracle ----------------------------------------------------------


@dataclass
class OracleResult:
    holds: bool
    counterexample: Optional[tuple] = None


def brute_force_id_oracle(system: GptSystem) -> OracleResult:
    """Directly test that each pure state is the only state with its certain effects.

    For a vertex w of S, the states sharing w's certain effects form the slice
    ``{w' in S : e . w' = 1 for every vertex e of E tight at w}``. The slice is
    probed by maximizing and minimizing every coordinate; any slack means a
    second state, and the slice midpoint then has exactly w's actual set.
    """
    S, E = system.states, system.effects
    if not (isinstance(S, Polytope) and isinstance(E, Polytope)):
        raise NotPolytopal("the oracle needs polytopal states and effects")
    n = S.ambient_dim
    for w in S.vertices:
        tight = [e for e in E.vertices if dot(e, w) == 1]
        region = S.hrep.with_equalities(tuple((e, Fraction(1)) for e in tight))
        for k in range(n):
            obj = tuple(Fraction(int(i == k)) for i in range(n))
            hi, x_hi = lp_optimize(obj, region, "max")
            lo, x_lo = lp_optimize(obj, region, "min")
            if hi != lo:
                other = x_hi if x_hi != w else x_lo
                mid = canonical(tuple((a + b) / 2 for a, b in zip(w, other)))
                return OracleResult(False, (w, mid))
    return OracleResult(True)


# -- verdicts --------------------------------------------------------------------


@dataclass
class DeterminismVerdict:
    condition_i: ConditionResult
    condition_ii: ConditionResult
    oracle: str = "skipped"  # agree | disagree | skipped
    oracle_result: Optional[OracleResult] = None

    @property
    def satisfies_id(self) -> bool:
        return self.condition_i.holds and self.condition_ii.holds

    @property
    def oracle_agrees(self) -> bool:
        return self.oracle != "disagree"

    def to_json(self) -> dict:
        wit = {}
        if self.condition_i.witness:
            wit["condition_i"] = [_fmt(w) for w in self.condition_i.witness]
        if self.condition_ii.witness:
            wit["condition_ii"] = [_fmt(w) for w in self.condition_ii.witness]
        if self.oracle_result and self.oracle_result.counterexample:
            wit["oracle"] = [_fmt(w) for w in self.oracle_result.counterexample]
        return {"condition_i": self.condition_i.holds, "condition_ii": self.condition_ii.holds,
                "satisfies_id": self.satisfies_id, "oracle": self.oracle, "witnesses": wit}


def _fmt(v):
    if _is_float_vec(v):
        return [round(float(c), 9) for c in v]
    return format_vector(v)


def check_intermediate_determinism(system: GptSystem, run_oracle: bool = True) -> DeterminismVerdict:
    ci = check_condition_i(system)
    cii = check_condition_ii(system.states)
    verdict = DeterminismVerdict(ci, cii)
    if run_oracle and isinstance(system.states, Polytope) and isinstance(system.effects, Polytope):
        res = brute_force_id_oracle(system)
        verdict.oracle_result = res
        verdict.oracle = "agree" if res.holds == verdict.satisfies_id else "disagree"
    return verdict


def check_corollary_nu(system: GptSystem) -> bool:
    """A noisy-unrestricted polytopal system must satisfy intermediate determinism."""
    if not isinstance(system.states, Polytope):
        raise NotPolytopal("corollary check needs a polytopal state space")
    if not classify_restriction(system).nu:
        raise NotNU("system is not noisy unrestricted")
    return check_intermediate_determinism(system).satisfies_id


# -- propensity states -----------------------------------------------------------


def propensity_states(system: GptSystem) -> list:
    """Pure states that are exposed in W(E) and whose actual sets are actual faces of E."""
    S, E = system.states, system.effects
    if isinstance(S, ArcBody):
        raise UnsupportedFamily("propensity states of a curved state space form a continuum")
    W = unrestricted_states(E)
    d = S.ambient_dim - 1
    out = []
    for w in S.vertices:
        if isinstance(W, Polytope):
            if w not in W.vertices:
                continue
        elif W.classify_point([float(c) for c in w]) is not PointClass.EXTREMAL_EXPOSED:
            continue
        a = actual_set(w, E)
        if _is_actual_face(a, E, d):
            out.append(w)
    return out


def _is_actual_face(a: ActualSet, E, d: int) -> bool:
    if isinstance(E, DualEffectBody):
        # actual faces of E(T) correspond to minimal exposed faces of T
        f = a.face
        if f.dimension == 0:
            return True
        from .bodies import _segment_ends

        ends = _segment_ends(f.float_points())
        return all(E.source.classify_point(p) is not PointClass.EXTREMAL_EXPOSED for p in ends)
    # E spans R^{d+1}; a maximal face through u cut by a state is a facet here
    return a.contains_unit() and a.dimension == d


# -- lemma instance checks -------------------------------------------------------


def check_state_face_mixing(states: Polytope) -> bool:
    """Each exposed face of S is cut out by an effect built by mixing with the unit."""
    es = unrestricted_effects(states)
    n = states.ambient_dim
    u = unit(n)
    for face in states.faces():
        h = tuple(c - (face.level if i == n - 1 else 0) + (1 if i == n - 1 else 0)
                  for i, c in enumerate(face.functional))
        low = min(dot(h, v) for v in states.vertices)
        if low == 1:
            continue
        f = canonical(tuple(low / (low - 1) * a + b / (1 - low) for a, b in zip(u, h)))
        if not es.contains(f):
            return False
        cut = {v for v in states.vertices if dot(f, v) == 1}
        if cut != set(face.points):
            return False
    return True


def check_effect_face_states(states: Polytope) -> bool:
    """Each exposed face of E(S) through u is cut out by the state ``h / (h . u)``."""
    es = unrestricted_effects(states)
    u = unit(states.ambient_dim)
    for face in es.faces():
        if u not in face.points:
            continue
        x = dot(face.functional, u)
        w = canonical(tuple(c / x for c in face.functional))
        if not states.contains(w):
            return False
        if set(actual_set(w, es).face.points) != set(face.points):
            return False
    return True


def check_mixture_actual_sets(system: GptSystem, trials: int = 20, seed: int = 0) -> bool:
    """Actual set of a mixture equals the intersection of the components' actual sets."""
    S, E = system.states, system.effects
    rng = random.Random(seed)
    verts = list(S.vertices)
    for _ in range(trials):
        k = rng.randint(1, len(verts))
        comps = rng.sample(verts, k)
        weights = [Fraction(rng.randint(1, 5)) for _ in comps]
        tot = sum(weights)
        w = canonical(tuple(sum(p / tot * c[i] for p, c in zip(weights, comps)) for i in range(len(verts[0]))))
        mix = set(actual_set(w, E).face.vertex_indices)
        inter = set.intersection(*(set(actual_set(c, E).face.vertex_indices) for c in comps))
        if mix != inter:
            return False
    return True
