import numpy as np
import pytest

from gptlab.errors import InvalidOperator
from gptlab.gpm import verify_gpm
from gptlab.quantum import (actual_set_membership, born_measure, complement_scan,
                            dim2_projection_counterexample, membership_scan, rank_one_uniqueness_scan,
                            spectral_decomposition, support_projection)

KET0 = np.diag([1.0, 0.0]).astype(complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)


def test_born_examples():
    assert born_measure(KET0, KET0) == pytest.approx(1.0, abs=1e-12)
    assert born_measure(np.eye(2) / 2, KET0) == pytest.approx(0.5, abs=1e-12)
    assert born_measure(KET0, (np.eye(2) + SX) / 2) == pytest.approx(0.5, abs=1e-12)


def test_invalid_operators():
    with pytest.raises(InvalidOperator):
        born_measure(np.array([[1, 1], [0, 0]]), KET0)
    with pytest.raises(InvalidOperator):
        born_measure(KET0, 2 * KET0)
    with pytest.raises(InvalidOperator):
        born_measure(np.eye(2), KET0)


def test_spectral_decomposition_sorted_and_reconstructs():
    a = np.array([[0.2, 0.1j], [-0.1j, 0.7]])
    dec = spectral_decomposition(a)
    assert dec.eigenvalues[0] >= dec.eigenvalues[1]
    assert np.max(np.abs(dec.reconstruct() - a)) <= 1e-10


def test_membership_examples():
    assert actual_set_membership(support_projection(KET0), KET0).by_trace
    rho3 = np.diag([1.0, 0.0, 0.0]).astype(complex)
    m = actual_set_membership(np.diag([1.0, 0.3, 0.0]).astype(complex), rho3)
    assert m.by_trace and m.by_structure
    m = actual_set_membership(0.99 * KET0, KET0)
    assert not m.by_trace and not m.by_structure


def test_pure_state_separated_by_its_projection():
    rho2 = 0.9 * KET0 + 0.1 * (np.eye(2) - KET0)
    assert born_measure(rho2, KET0) < 1
    assert actual_set_membership(KET0, KET0).by_trace


def test_same_support_mixed_states_share_certain_effects():
    a = np.diag([0.5, 0.5, 0.0]).astype(complex)
    b = np.diag([0.75, 0.25, 0.0]).astype(complex)
    rng = np.random.default_rng(1)
    for _ in range(200):
        ker = rng.random()
        e = np.diag([1.0, 1.0, ker]).astype(complex)
        assert actual_set_membership(e, a).by_trace == actual_set_membership(e, b).by_trace


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_scans_small(dim):
    assert complement_scan(dim, 300, seed=dim).passed
    assert membership_scan(dim, 300, seed=dim).passed
    assert rank_one_uniqueness_scan(dim, 300, seed=dim).passed


def test_scan_rejects_dimension():
    with pytest.raises(ValueError):
        rank_one_uniqueness_scan(5, 10)


def test_projection_counterexample():
    c = dim2_projection_counterexample(count=32)
    assert c.v2[c.labels.index("P0+")] == 1.0
    assert c.v2[c.labels.index("P0-")] == 0.0
    others = [c.v2[i] for i, lab in enumerate(c.labels) if lab not in ("0", "I", "P0+", "P0-")]
    assert set(others) == {0.5}
    assert c.shared_actual_set and c.actual_v1 == ["I", "P0+"]
    assert c.max_difference >= 0.2
    assert verify_gpm(c.structure, c.v1, tol=1e-12).ok and verify_gpm(c.structure, c.v2, tol=1e-12).ok
