import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gptlab.bodies import Polytope
from gptlab.catalog import (anu_bit_effects, bit_states, classical_bit_effects, nu_bit_effects,
                            octagon_unrestricted_effects)
from gptlab.errors import NotPolytopal
from gptlab.geometry import rvec
from gptlab.gpt import (GptSystem, Observable, check_wes_identity, classify_restriction,
                        couple_observables, unit, unrestricted_effects, unrestricted_states,
                        validate_system)

from corpus import nu_truncation, random_restriction, random_state_space
from oracles import brute_vertices


def test_bit_effects_are_the_square():
    E = unrestricted_effects(bit_states())
    assert set(E.vertices) == {rvec(0, 0), rvec(0, 1), rvec("1/2", "1/2"), rvec("-1/2", "1/2")}


def test_single_state_gives_unit_interval():
    E = unrestricted_effects(Polytope([rvec(1)]))
    assert E.vertices == (rvec(0), rvec(1))


def test_square_state_space_effects_match_brute_force():
    S = Polytope([rvec(a, b, 1) for a in (-1, 1) for b in (-1, 1)])
    E = unrestricted_effects(S)
    ineqs = []
    for w in S.vertices:
        ineqs += [(w, Fraction(1)), (tuple(-c for c in w), Fraction(0))]
    assert set(E.vertices) == set(brute_vertices(ineqs))
    assert len(E.vertices) == 6


def test_curved_states_rejected():
    from gptlab.catalog import pill_arcs

    with pytest.raises(NotPolytopal):
        unrestricted_effects(pill_arcs())


@pytest.mark.parametrize("effects", [classical_bit_effects(), nu_bit_effects("1/2"), anu_bit_effects()],
                         ids=["classical", "nu", "anu"])
def test_all_bit_effect_spaces_share_the_bit_states(effects):
    assert unrestricted_states(effects) == bit_states()


def test_non_duality_chain():
    EB = classical_bit_effects()
    ENB = nu_bit_effects("1/2")
    assert unrestricted_effects(unrestricted_states(ENB)) == EB
    assert unrestricted_effects(unrestricted_states(anu_bit_effects())) == EB
    assert ENB != EB
    # the lens misses e+ = (1/2, 1/2): its widest point is at a = 1/sqrt2 - 1/2
    assert anu_bit_effects().support((1.0, 0.0))[0] == pytest.approx(2 ** -0.5 - 0.5, abs=1e-12)


def test_validation_passes_for_classical_bit():
    rep = validate_system(GptSystem(bit_states(), classical_bit_effects()))
    assert rep.ok, rep.failures


def test_validation_flags_positivity_failure():
    E = Polytope(list(classical_bit_effects().vertices) + [rvec("3/4", "1/4")])
    rep = validate_system(GptSystem(bit_states(), E))
    names = [n for n, _ in rep.failures]
    assert "probabilities_in_unit_interval" in names
    assert "complement_closed" in names


def test_couple_observables_sum_to_unit():
    obs = couple_observables(classical_bit_effects())
    assert all(ob.total() == unit(2) for ob in obs)
    plus_minus = Observable((rvec("1/2", "1/2"), rvec("-1/2", "1/2")))
    rep = validate_system(GptSystem(bit_states(), classical_bit_effects(), (plus_minus,)))
    assert rep.ok


def test_bad_observable_reported():
    bad = Observable((rvec("1/2", "1/2"), rvec("1/2", "1/2")))
    rep = validate_system(GptSystem(bit_states(), classical_bit_effects(), (bad,)))
    assert [n for n, _ in rep.failures] == ["observable_sums_to_unit"]


def test_octagon_double_dual():
    S = unrestricted_states(octagon_unrestricted_effects())
    assert len(S.vertices) == 8
    assert check_wes_identity(S)


@pytest.mark.parametrize("effects,klass", [
    (classical_bit_effects(), "unrestricted"),
    (nu_bit_effects("1/2"), "NU"),
    (nu_bit_effects("1/10"), "NU"),
    (anu_bit_effects(), "aNU"),
])
def test_bit_restriction_classes(effects, klass):
    rc = classify_restriction(GptSystem(bit_states(), effects))
    assert rc.klass == klass
    assert rc.gleason_type


def test_class_ordering_on_random_systems():
    rng = random.Random(21)
    for i in range(25):
        S = random_state_space(rng, rng.randint(1, 2), 6)
        es = unrestricted_effects(S)
        for E in (es, nu_truncation(es, Fraction(1, 2)), random_restriction(rng, es)):
            rc = classify_restriction(GptSystem(S, E))
            assert not rc.unrestricted or rc.nu
            assert not rc.nu or rc.anu
            assert not rc.anu or rc.gleason_type


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_wes_identity_property(seed):
    rng = random.Random(seed)
    S = random_state_space(rng, rng.randint(1, 3), 7)
    assert check_wes_identity(S)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_effect_space_complement_symmetry(seed):
    rng = random.Random(seed)
    S = random_state_space(rng, rng.randint(1, 3), 7)
    E = unrestricted_effects(S)
    u = unit(S.ambient_dim)
    for e in E.vertices:
        assert tuple(a - b for a, b in zip(u, e)) in E.vertices
