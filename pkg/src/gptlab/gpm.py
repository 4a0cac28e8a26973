"""Generalized probability measures on finite partial monoids and finite effect lists.

A measure is a value in ``[0, 1]`` per element, equal to 1 on the unit and
additive over every defined sum. On a finite list of effects the sums are the
listed observables. Either way the measures form a polytope, enumerated
exactly.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import EmptyObservableSet
from .geometry import HalfSpace, HRep, hrep_to_vrep, lp_optimize
from .geometry.linalg import solve_affine
from .geometry.polyhedra import canonical
from .gpt import Observable, unit


@dataclass
class ProbabilityStructure:
    """Finite partial commutative monoid: ``table[(i, j)] = k`` means ``m_i + m_j = m_k``."""

    elements: list
    table: dict
    zero: int
    unit: int

    @classmethod
    def from_json(cls, data: dict) -> "ProbabilityStructure":
        table = {(int(i), int(j)): int(k) for i, j, k in data["sum_table"]}
        return cls(list(data["elements"]), table, int(data["zero"]), int(data["unit"]))

    def to_json(self) -> dict:
        rows = [[i, j, k] for (i, j), k in sorted(self.table.items())]
        return {"elements": list(self.elements), "sum_table": rows, "zero": self.zero, "unit": self.unit}


@dataclass
class StructureReport:
    violations: list = field(default_factory=list)  # (axiom, detail)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_structure(s: ProbabilityStructure) -> StructureReport:
    """Exhaustive check of commutativity, associativity, zero and unit axioms."""
    rep = StructureReport()
    n = len(s.elements)
    t = s.table
    for (i, j), k in t.items():
        if t.get((j, i)) != k:
            rep.violations.append(("commutative", f"{s.elements[i]} + {s.elements[j]}"))
    for (i, j), a in t.items():
        for kk in range(n):
            b = t.get((a, kk))
            if b is None:
                continue
            c = t.get((j, kk))
            if c is None or t.get((i, c)) != b:
                rep.violations.append(("associative", f"({s.elements[i]} + {s.elements[j]}) + {s.elements[kk]}"))
    for m in range(n):
        if t.get((s.zero, m)) != m:
            rep.violations.append(("zero", f"0 + {s.elements[m]}"))
    for m in range(n):
        defined = (s.unit, m) in t
        if defined != (m == s.zero):
            rep.violations.append(("unit", f"u + {s.elements[m]}"))
    return rep


@dataclass
class GpmCheck:
    ok: bool
    violation: Optional[str] = None


def verify_gpm(s: ProbabilityStructure, values: Sequence, tol=0) -> GpmCheck:
    """Unit normalization, range and additivity over every defined sum."""
    v = list(values)
    if abs(v[s.unit] - 1) > tol:
        return GpmCheck(False, f"value on the unit is {v[s.unit]}")
    for i, x in enumerate(v):
        if x < -tol or x > 1 + tol:
            return GpmCheck(False, f"value {x} on {s.elements[i]} outside [0, 1]")
    for (i, j), k in s.table.items():
        if abs(v[i] + v[j] - v[k]) > tol:
            return GpmCheck(False, f"v({s.elements[i]}) + v({s.elements[j]}) != v({s.elements[k]})")
    return GpmCheck(True)


def structure_from_effects(effects: Sequence) -> ProbabilityStructure:
    """Effects with ``e + f`` defined whenever the vector sum is listed."""
    effs = [canonical(e) for e in effects]
    index = {e: i for i, e in enumerate(effs)}
    n = len(effs[0])
    table = {}
    for i, e in enumerate(effs):
        for j, f in enumerate(effs):
            k = index.get(canonical(tuple(a + b for a, b in zip(e, f))))
            if k is not None:
                table[(i, j)] = k
    return ProbabilityStructure(effs, table, index[tuple([Fraction(0)] * n)], index[unit(n)])


# -- the measure polytope --------------------------------------------------------


@dataclass
class MeasurePolytope:
    """Measures as vectors of values, one per listed element."""

    labels: list
    region: HRep

    def vertices(self) -> list:
        return list(hrep_to_vrep(self.region).vertices)

    def actual_set(self, v) -> frozenset:
        return frozenset(i for i, x in enumerate(v) if x == 1)

    def is_propensity(self, v) -> bool:
        """No other measure shares this measure's set of certain elements.

        The measures certain on the same elements form a slice; if it holds a
        second point, the midpoint has exactly the same certain elements.
        """
        m = len(self.labels)
        fixed = tuple((tuple(Fraction(int(j == i)) for j in range(m)), Fraction(1)) for i in self.actual_set(v))
        region = self.region.with_equalities(fixed)
        for k in range(m):
            obj = tuple(Fraction(int(j == k)) for j in range(m))
            hi, _ = lp_optimize(obj, region, "max")
            lo, _ = lp_optimize(obj, region, "min")
            if hi != lo:
                return False
        return True


def _box(m: int) -> list:
    hs = []
    for i in range(m):
        e = tuple(Fraction(int(j == i)) for j in range(m))
        hs.append(HalfSpace(e, Fraction(1)))
        hs.append(HalfSpace(tuple(-c for c in e), Fraction(0)))
    return hs


def structure_measures(s: ProbabilityStructure) -> MeasurePolytope:
    m = len(s.elements)
    eqs = [(tuple(Fraction(int(j == s.unit)) for j in range(m)), Fraction(1))]
    for (i, j), k in s.table.items():
        row = [Fraction(0)] * m
        row[i] += 1
        row[j] += 1
        row[k] -= 1
        if any(row):
            eqs.append((tuple(row), Fraction(0)))
    return MeasurePolytope(list(s.elements), HRep(tuple(_box(m)), tuple(eqs)))


def default_observables(effects: Sequence) -> list[Observable]:
    """Couples ``[e, u - e]`` over the list plus the one-outcome observable ``[u]``."""
    effs = [canonical(e) for e in effects]
    n = len(effs[0])
    u = unit(n)
    listed = set(effs)
    out, seen = [Observable((u,))], set()
    for e in effs:
        c = canonical(tuple(a - b for a, b in zip(u, e)))
        key = frozenset((e, c))
        if c in listed and key not in seen:
            seen.add(key)
            out.append(Observable((e, c)))
    return out


def sum_observables(effects: Sequence, max_len: int = 4) -> list[Observable]:
    """All multisets of listed effects (up to ``max_len``) summing to the unit."""
    effs = [canonical(e) for e in effects]
    u = unit(len(effs[0]))
    out = []
    for k in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(range(len(effs)), k):
            if canonical(tuple(sum(c) for c in zip(*(effs[i] for i in combo)))) == u:
                out.append(Observable(tuple(effs[i] for i in combo)))
    return out


def effect_measures(effects: Sequence, observables: Optional[Sequence[Observable]] = None) -> MeasurePolytope:
    effs = [canonical(e) for e in effects]
    if observables is None:
        observables = default_observables(effs)
    if not observables:
        raise EmptyObservableSet("at least one observable is needed")
    index = {e: i for i, e in enumerate(effs)}
    m = len(effs)
    eqs = []
    for ob in observables:
        row = [Fraction(0)] * m
        for e in ob.effects:
            row[index[canonical(e)]] += 1
        eqs.append((tuple(row), Fraction(1)))
    return MeasurePolytope(effs, HRep(tuple(_box(m)), tuple(eqs)))


def enumerate_gpms(effects: Sequence, observables: Optional[Sequence[Observable]] = None) -> list:
    """Vertices of the polytope of measures on the listed effects."""
    return effect_measures(effects, observables).vertices()


def representing_state(effects: Sequence, values: Sequence):
    """A vector ``w`` with ``e . w = v(e)`` for every listed effect, or None."""
    effs = [canonical(e) for e in effects]
    sol = solve_affine(effs, list(values), len(effs[0]))
    if sol is None:
        return None
    return canonical(sol[0])


@dataclass
class RepresentationReport:
    vertices: list
    unrepresented: list

    @property
    def ok(self) -> bool:
        return not self.unrepresented


def check_representation(effects: Sequence, observables: Optional[Sequence[Observable]] = None) -> RepresentationReport:
    """Which measure vertices are induced by a vector (hence a state of the dual)."""
    verts = enumerate_gpms(effects, observables)
    bad = [v for v in verts if representing_state(effects, v) is None]
    return RepresentationReport(verts, bad)


def gpm_propensity_check(effects: Sequence, observables: Optional[Sequence[Observable]] = None):
    """Split the measure vertices into propensity and non-propensity measures."""
    poly = effect_measures(effects, observables)
    props, others = [], []
    for v in poly.vertices():
        (props if poly.is_propensity(v) else others).append(v)
    return props, others
