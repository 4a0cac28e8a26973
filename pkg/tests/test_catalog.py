import pytest

from gptlab.catalog import NAMES, build, octagon_anu_effects, octagon_effect_vertices, pill_arcs
from gptlab.determinism import actual_set, check_intermediate_determinism, propensity_states
from gptlab.errors import InvalidParameter, UnsupportedFamily
from gptlab.geometry import SQRT2, rvec
from gptlab.gpt import classify_restriction, validate_system


def test_octagon_vertex_values():
    verts = octagon_effect_vertices()
    assert len(verts) == 10
    assert verts[0] == rvec(0, 0, 0) and verts[1] == rvec(0, 0, 1)
    assert verts[3] == rvec(0, "1/4", "1/2")            # e_2
    assert verts[4] == (-SQRT2 / 4, SQRT2 / 4, rvec("1/2")[0])  # e_3
    assert verts[5] == rvec("-1/4", 0, "1/2")           # e_4


def test_octagon_lens_replaces_e3_and_e7():
    E = octagon_anu_effects()
    assert len(E.points) == 8
    # the lens bulges toward e_3 but never reaches it
    e3 = [float(c) for c in octagon_effect_vertices()[4]]
    direction = (e3[0], e3[1], 0.0)
    assert E.support(direction)[0] < e3[0] * direction[0] + e3[1] * direction[1] - 1e-3


@pytest.mark.parametrize("name", NAMES)
def test_entry_matches_pipeline(name):
    entry = build(name)
    rc = classify_restriction(entry.system)
    assert rc.klass == entry.expected["klass"]
    assert rc.gleason_type == entry.expected["gleason_type"]
    verdict = check_intermediate_determinism(entry.system)
    assert verdict.satisfies_id == entry.expected["satisfies_id"]
    assert verdict.oracle_agrees
    if entry.expected["propensity"] is None:
        with pytest.raises(UnsupportedFamily):
            propensity_states(entry.system)
    else:
        assert sorted(propensity_states(entry.system)) == sorted(entry.expected["propensity"])
    if entry.companion is not None:
        crc = classify_restriction(entry.companion)
        assert crc.klass == entry.companion_expected["klass"]
        assert crc.gleason_type == entry.companion_expected["gleason_type"]
        assert check_intermediate_determinism(entry.companion).satisfies_id == \
            entry.companion_expected["satisfies_id"]


@pytest.mark.parametrize("name", ["classical_bit", "nu_bit", "anu_bit", "octagon_unrestricted", "diamond_in_pill"])
def test_entries_validate(name):
    rep = validate_system(build(name).system)
    assert rep.ok, rep.failures


def test_octagon_anu_reference_witness_is_a_degenerate_face():
    entry = build("octagon_anu")
    verdict = check_intermediate_determinism(entry.companion)
    w, w2 = verdict.condition_i.witness
    small = actual_set(w, entry.companion.effects).face
    big = actual_set(w2, entry.companion.effects).face
    assert small.dimension == 1 and big.dimension == 2


def test_nu_bit_parameter_checked():
    with pytest.raises(InvalidParameter):
        build("nu_bit", p=1)
    with pytest.raises(InvalidParameter):
        build("nu_bit", p=0)


def test_unknown_entry():
    with pytest.raises(InvalidParameter):
        build("spekkens")


def test_pill_support_examples():
    pill = pill_arcs()
    assert pill.support((1.0, 0.0, 0.0))[0] == pytest.approx(2.0)
    assert pill.support((0.0, 1.0, 0.0))[0] == pytest.approx(1.0)
