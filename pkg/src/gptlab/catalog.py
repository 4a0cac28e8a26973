"""Built-in example systems with their expected classifications and verdicts."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .bodies import ArcBody, CircularArc, Polytope
from .errors import InvalidParameter
from .geometry import SQRT2, QSqrt2, rvec
from .geometry.polyhedra import canonical
from .gpt import DualEffectBody, GptSystem, unrestricted_effects, unrestricted_states

NAMES = ("classical_bit", "nu_bit", "anu_bit", "pill", "diamond_in_pill",
         "octagon_unrestricted", "octagon_anu")

HALF = Fraction(1, 2)


def bit_states() -> Polytope:
    return Polytope([rvec(-1, 1), rvec(1, 1)])


def classical_bit_effects() -> Polytope:
    return unrestricted_effects(bit_states())


def nu_bit_effects(p) -> Polytope:
    p = Fraction(p)
    if not 0 < p < 1:
        raise InvalidParameter("the NU bit needs 0 < p < 1")
    e_plus, e_minus = (HALF, HALF), (-HALF, HALF)
    pts = [(0, 0), (0, 1)]
    for e in (e_plus, e_minus):
        pts.append((p * e[0], p * e[1]))
        pts.append((-p * e[0], 1 - p * e[1]))
    return Polytope([rvec(*q) for q in pts])


def _lens_arcs(center_of, frame_a, frame_b, radius=1 / math.sqrt(2)):
    """Two arcs bounding the intersection of discs centred at in-plane (+-1/2, 1/2)."""
    right = CircularArc(center_of(-0.5, 0.5), radius, frame_a, frame_b, (-math.pi / 4, math.pi / 4))
    left = CircularArc(center_of(0.5, 0.5), radius, frame_a, frame_b, (3 * math.pi / 4, 5 * math.pi / 4))
    return [right, left]


def anu_bit_effects() -> ArcBody:
    arcs = _lens_arcs(lambda s, z: (s, z), (1.0, 0.0), (0.0, 1.0))
    exact = [rvec(0, 0), rvec(0, 1)]
    limits = [rvec("1/2", "1/2"), rvec("-1/2", "1/2")]
    return ArcBody([(0.0, 0.0), (0.0, 1.0)], arcs, family="lens", exact_points=exact, limit_rays=limits)


def pill_arcs() -> ArcBody:
    """Stadium: two closed semicircles of radius 1 centred at (+-1, 0) in the state plane."""
    right = CircularArc((1.0, 0.0, 1.0), 1.0, (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (-math.pi / 2, math.pi / 2))
    left = CircularArc((-1.0, 0.0, 1.0), 1.0, (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (math.pi / 2, 3 * math.pi / 2))
    return ArcBody([], [right, left], family="pill")


def diamond_states() -> Polytope:
    return Polytope([rvec(2, 0, 1), rvec(-2, 0, 1), rvec(0, 1, 1), rvec(0, -1, 1)])


def _octagon_cos_sin(j: int):
    """Exact ``(cos, sin)`` of ``j * pi / 4`` in Q(sqrt2)."""
    r = SQRT2 / 2
    table = {0: (1, 0), 1: (r, r), 2: (0, 1), 3: (-r, r), 4: (-1, 0), 5: (-r, -r), 6: (0, -1), 7: (r, -r)}
    c, s = table[j % 8]
    return canonical((c,))[0], canonical((s,))[0]


def octagon_effect_vertices() -> list:
    """``[0, u, e_1, ..., e_8]``, exact over Q(sqrt2)."""
    out = [rvec(0, 0, 0), rvec(0, 0, 1)]
    for j in range(1, 9):
        c, s = _octagon_cos_sin(j)
        if j in (3, 7):
            out.append(canonical((c / 2, s / 2, HALF)))
        else:
            out.append(canonical((c / 4, s / 4, HALF)))
    return out


def octagon_unrestricted_effects() -> Polytope:
    return Polytope(octagon_effect_vertices())


def octagon_anu_effects() -> ArcBody:
    """The octagon with e_3 and e_7 replaced by a lens in their common vertical plane.

    In the plane spanned by the horizontal direction of e_3 and the vertical
    axis, the cross-section of the octagon is the square conv(0, u, e_3, e_7);
    the lens sits in that square exactly as the aNU-bit lens sits in its square.
    """
    verts = octagon_effect_vertices()
    kept = [v for i, v in enumerate(verts) if i not in (4, 8)]  # drop e_3, e_7
    d = (-1 / math.sqrt(2), 1 / math.sqrt(2), 0.0)
    z = (0.0, 0.0, 1.0)
    arcs = _lens_arcs(lambda s, h: tuple(s * a + h * b for a, b in zip(d, z)), d, z)
    pts = [tuple(float(c) for c in v) for v in kept]
    return ArcBody(pts, arcs, family="octagon_lens", exact_points=kept, limit_rays=[verts[4], verts[8]])


@dataclass
class CatalogEntry:
    name: str
    system: GptSystem
    expected: dict
    provenance: str
    companion: Optional[GptSystem] = None
    companion_expected: dict = field(default_factory=dict)
    notes: str = ""


def octagon_anu_state_space() -> Polytope:
    """Hull of the propensity states of the octagon-lens system over its full state space."""
    from .determinism import propensity_states

    E = octagon_anu_effects()
    reference = GptSystem(unrestricted_states(E), E, name="octagon_anu_reference")
    return Polytope(propensity_states(reference))


def build(name: str, p=HALF) -> CatalogEntry:
    return _build(name, Fraction(p))


@lru_cache(maxsize=None)
def _build(name: str, p: Fraction) -> CatalogEntry:
    SB = bit_states()
    both_pure = list(SB.vertices)
    if name == "classical_bit":
        sys = GptSystem(SB, classical_bit_effects(), name=name)
        exp = dict(klass="unrestricted", gleason_type=True, satisfies_id=True, propensity=both_pure)
        return CatalogEntry(name, sys, exp, "classical bit: segment of states, square of effects")
    if name == "nu_bit":
        sys = GptSystem(SB, nu_bit_effects(p), name=name)
        exp = dict(klass="NU", gleason_type=True, satisfies_id=True, propensity=both_pure)
        return CatalogEntry(name, sys, exp, f"noisy bit with scaling p = {p}")
    if name == "anu_bit":
        sys = GptSystem(SB, anu_bit_effects(), name=name)
        exp = dict(klass="aNU", gleason_type=True, satisfies_id=False, propensity=[])
        return CatalogEntry(name, sys, exp, "bit with lens-shaped effect space")
    if name == "pill":
        Sp = pill_arcs()
        sys = GptSystem(Sp, DualEffectBody(Sp), name=name)
        exp = dict(klass="unrestricted", gleason_type=True, satisfies_id=False, propensity=None)
        return CatalogEntry(name, sys, exp, "stadium state space with all effects",
                            notes="propensity states form a continuum (arc points); not enumerated")
    if name == "diamond_in_pill":
        Sp = pill_arcs()
        sys = GptSystem(diamond_states(), DualEffectBody(Sp), name=name)
        exp = dict(klass="other", gleason_type=False, satisfies_id=True,
                   propensity=[rvec(-2, 0, 1), rvec(2, 0, 1)])
        return CatalogEntry(name, sys, exp, "diamond states with the stadium's effects",
                            notes="diamond vertices (+-2,0,1), (0,+-1,1) are an assumed shape")
    if name == "octagon_unrestricted":
        E = octagon_unrestricted_effects()
        S = unrestricted_states(E)
        sys = GptSystem(S, E, name=name)
        exp = dict(klass="unrestricted", gleason_type=True, satisfies_id=True, propensity=list(S.vertices))
        return CatalogEntry(name, sys, exp, "octagon effect space with its full state space")
    if name == "octagon_anu":
        E = octagon_anu_effects()
        Sa = octagon_anu_state_space()
        sys = GptSystem(Sa, E, name=name)
        ref = GptSystem(unrestricted_states(E), E, name="octagon_anu_reference")
        exp = dict(klass="other", gleason_type=False, satisfies_id=True, propensity=list(Sa.vertices))
        cexp = dict(klass="aNU", gleason_type=True, satisfies_id=False)
        return CatalogEntry(name, sys, exp, "octagon with lens-replaced effects and restricted states",
                            companion=ref, companion_expected=cexp,
                            notes="restriction class and Gleason type are stated for the full-state pairing")
    raise InvalidParameter(f"unknown catalog entry {name!r}; choose from {', '.join(NAMES)}")


def polytopal_entries() -> list[str]:
    return ["classical_bit", "nu_bit", "octagon_unrestricted"]
