"""Assembly of versioned JSON reports for one system at a time.

Reports contain no timings or host details, so a fixed seed gives
byte-identical output.
"""
from __future__ import annotations

import copy
import json

from .bodies import ArcBody, Polytope
from .catalog import CatalogEntry
from .determinism import (_fmt, check_effect_face_states, check_intermediate_determinism,
                          check_mixture_actual_sets, check_state_face_mixing, face_state_correspondence,
                          propensity_states)
from .errors import BijectionFailure, UnsupportedFamily
from .gpm import check_representation, gpm_propensity_check
from .gpt import GptSystem, classify_restriction, system_to_json, validate_system

SCHEMA = "gptlab-report/1"
CHECKS = ("validate", "classify", "determinism", "propensity", "gpm", "lemmas")


def with_tolerance(system: GptSystem, tol) -> GptSystem:
    """Copy of ``system`` whose arc bodies use ``tol``; exact polytopes are untouched."""
    if tol is None:
        return system

    def adjust(body):
        if isinstance(body, ArcBody):
            body = copy.copy(body)
            body.tol = float(tol)
        return body

    return GptSystem(adjust(system.states), adjust(system.effects), system.observables, system.name)


def _method(system: GptSystem) -> str:
    exact = isinstance(system.states, Polytope) and isinstance(system.effects, Polytope)
    return "exact" if exact else "certificate"


def _validate(system, seed):
    rep = validate_system(system)
    return rep.ok, rep.to_json()


def _classify(system, seed):
    return True, classify_restriction(system).to_json()


def _determinism(system, seed):
    v = check_intermediate_determinism(system)
    out = v.to_json()
    out["method"] = _method(system)
    return v.satisfies_id and v.oracle_agrees, out


def _propensity(system, seed):
    try:
        props = propensity_states(system)
    except UnsupportedFamily as exc:
        return None, {"status": "skipped", "reason": str(exc)}
    return True, {"status": "done", "states": [_fmt(w) for w in props]}


def _gpm(system, seed):
    if not isinstance(system.effects, Polytope):
        return None, {"status": "skipped", "reason": "measures are enumerated for polytopal effect lists only"}
    gens = list(system.effects.vertices)
    rep = check_representation(gens)
    props, others = gpm_propensity_check(gens)
    return rep.ok, {"status": "done", "vertices": len(rep.vertices),
                    "unrepresented": [_fmt(v) for v in rep.unrepresented],
                    "propensity_measures": len(props), "other_measures": len(others)}


def _lemmas(system, seed):
    S = system.states
    if not isinstance(S, Polytope) or not isinstance(system.effects, Polytope):
        return None, {"status": "skipped", "reason": "lemma instances are checked on polytopes only"}
    try:
        pairs = len(face_state_correspondence(S))
        bijection = True
    except BijectionFailure:
        pairs, bijection = 0, False
    res = {"state_face_mixing": check_state_face_mixing(S), "effect_face_states": check_effect_face_states(S),
           "face_state_bijection": bijection, "face_state_pairs": pairs,
           "mixture_actual_sets": check_mixture_actual_sets(system, seed=seed)}
    ok = all(v for k, v in res.items() if k != "face_state_pairs")
    return ok, {"status": "done", **res}


RUNNERS = {"validate": _validate, "classify": _classify, "determinism": _determinism,
           "propensity": _propensity, "gpm": _gpm, "lemmas": _lemmas}


def _normalize(value):
    if isinstance(value, list):
        return sorted(_fmt(v) for v in value)
    return value


def expected_table(entry: CatalogEntry, checks: dict) -> list:
    """Rows of claim, expected value, observed value and whether they match."""
    rows = []

    def add(claim, expected, actual):
        rows.append({"claim": claim, "expected": expected, "actual": actual, "match": expected == actual})

    exp = entry.expected
    cls = checks.get("classify")
    if cls is not None:
        add("class", exp["klass"], cls["class"])
        add("gleason_type", exp["gleason_type"], cls["gleason_type"])
    det = checks.get("determinism")
    if det is not None:
        add("satisfies_id", exp["satisfies_id"], det["satisfies_id"])
    prop = checks.get("propensity")
    if prop is not None:
        if exp["propensity"] is None:
            add("propensity", "continuum", "continuum" if prop["status"] == "skipped" else prop["states"])
        else:
            add("propensity", _normalize(exp["propensity"]), sorted(prop.get("states", [])))
    if entry.companion is not None and (cls is not None or det is not None):
        cexp = entry.companion_expected
        if cls is not None:
            crc = classify_restriction(entry.companion)
            add("companion.class", cexp["klass"], crc.klass)
            add("companion.gleason_type", cexp["gleason_type"], crc.gleason_type)
        if det is not None:
            add("companion.satisfies_id", cexp["satisfies_id"],
                check_intermediate_determinism(entry.companion).satisfies_id)
    return rows


def build_report(system: GptSystem, checks, seed: int = 0, tol=None, source: str = "",
                 entry: CatalogEntry = None) -> dict:
    """Run ``checks`` (names from ``CHECKS``) and collect a report dictionary."""
    system = with_tolerance(system, tol)
    results, outcome = {}, {}
    for name in CHECKS:
        if name in checks:
            if outcome.get("validate") == "fail":
                results[name] = {"status": "skipped", "reason": "system failed validation"}
                outcome[name] = "skipped"
                continue
            ok, payload = RUNNERS[name](system, seed)
            results[name] = payload
            outcome[name] = "skipped" if ok is None else ("pass" if ok else "fail")
    report = {"schema": SCHEMA, "seed": seed, "tolerance": tol, "source": source,
              "system": system_to_json(system), "checks": results, "outcome": outcome}
    if entry is not None:
        report["expected_vs_actual"] = expected_table(entry, results)
    report["passed"] = report_passed(report)
    return report


def report_passed(report: dict) -> bool:
    if any(v == "fail" for v in report["outcome"].values()):
        return False
    return all(row["match"] for row in report.get("expected_vs_actual", []))


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"
