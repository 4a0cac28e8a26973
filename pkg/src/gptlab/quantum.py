"""Finite-dimensional quantum checks: certain effects of density operators.

An effect is certain for a density operator exactly when it acts as the
identity on the operator's support. Rank-one operators are therefore singled
out by their certain effects, and higher-rank ones are not.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidOperator
from .gpm import ProbabilityStructure, verify_gpm

HERM_TOL = 1e-12
KERNEL_TOL = 1e-10
STRUCT_TOL = 1e-8


@dataclass(frozen=True)
class SpectralDecomposition:
    eigenvalues: np.ndarray  # descending
    eigenvectors: np.ndarray  # columns

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _check_hermitian(a: np.ndarray, what: str) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidOperator(f"{what} must be a square matrix")
    if np.max(np.abs(a - a.conj().T)) > HERM_TOL:
        raise InvalidOperator(f"{what} is not self-adjoint")
    return a


def spectral_decomposition(a) -> SpectralDecomposition:
    a = _check_hermitian(a, "operator")
    w, v = np.linalg.eigh(a)
    order = np.argsort(w)[::-1]
    dec = SpectralDecomposition(w[order], v[:, order])
    if np.max(np.abs(dec.reconstruct() - a)) > 1e-10:
        raise InvalidOperator("spectral decomposition failed to reconstruct the operator")
    return dec


def check_density(rho) -> np.ndarray:
    rho = _check_hermitian(rho, "density operator")
    w = np.linalg.eigvalsh(rho)
    if w.min() < -KERNEL_TOL or abs(np.trace(rho).real - 1) > 1e-10:
        raise InvalidOperator("density operator must be positive with unit trace")
    return rho


def check_effect(e) -> np.ndarray:
    e = _check_hermitian(e, "effect")
    w = np.linalg.eigvalsh(e)
    if w.min() < -KERNEL_TOL or w.max() > 1 + KERNEL_TOL:
        raise InvalidOperator("effect spectrum must lie in [0, 1]")
    return e


def born_measure(rho, effect) -> float:
    rho, effect = check_density(rho), check_effect(effect)
    val = np.trace(effect @ rho)
    if abs(val.imag) > HERM_TOL:
        raise InvalidOperator("trace is not real")
    p = float(val.real)
    if p < -1e-10 or p > 1 + 1e-10:
        raise InvalidOperator(f"probability {p} outside [0, 1]")
    return min(1.0, max(0.0, p))


def support_projection(rho) -> np.ndarray:
    dec = spectral_decomposition(rho)
    vecs = dec.eigenvectors[:, dec.eigenvalues > KERNEL_TOL]
    return vecs @ vecs.conj().T


@dataclass(frozen=True)
class Membership:
    by_trace: bool
    by_structure: bool
    residual: float  # max ||(E - I) psi|| over support eigenvectors

    @property
    def agree(self) -> bool:
        return self.by_trace == self.by_structure


def actual_set_membership(effect, rho) -> Membership:
    """Certainty of ``effect`` on ``rho``, by trace and by action on the support."""
    rho, effect = _check_hermitian(rho, "density operator"), check_effect(effect)
    dec = spectral_decomposition(rho)
    if dec.eigenvalues[-1] < -KERNEL_TOL or abs(dec.eigenvalues.sum() - 1) > 1e-10:
        raise InvalidOperator("density operator must be positive with unit trace")
    by_trace = float(np.trace(effect @ rho).real) >= 1 - KERNEL_TOL
    vecs = dec.eigenvectors[:, dec.eigenvalues > KERNEL_TOL]
    n = rho.shape[0]
    resid = float(np.max(np.linalg.norm((effect - np.eye(n)) @ vecs, axis=0)))
    return Membership(by_trace, resid <= STRUCT_TOL, resid)


# -- random operators ------------------------------------------------------------


def random_unit_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(rng: np.random.Generator, dim: int, rank: int | None = None) -> np.ndarray:
    rank = rank or dim
    u = random_unitary(rng, dim)
    w = np.zeros(dim)
    w[:rank] = rng.random(rank) + 0.05
    w /= w.sum()
    return (u * w) @ u.conj().T


def random_effect(rng: np.random.Generator, dim: int) -> np.ndarray:
    u = random_unitary(rng, dim)
    return (u * rng.random(dim)) @ u.conj().T


def certain_effect(rng: np.random.Generator, rho) -> np.ndarray:
    """A random effect that is the identity on supp(rho) plus noise on its kernel."""
    dec = spectral_decomposition(rho)
    ker = dec.eigenvectors[:, dec.eigenvalues <= KERNEL_TOL]
    p = support_projection(rho)
    if ker.shape[1] == 0:
        return p
    k = ker.shape[1]
    uu = random_unitary(rng, k)
    inner = (uu * rng.random(k)) @ uu.conj().T
    return p + ker @ inner @ ker.conj().T


# -- scans -----------------------------------------------------------------------


@dataclass
class ScanReport:
    dim: int
    trials: int
    seed: int
    passed: bool = True
    max_residual: float = 0.0
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"dim": self.dim, "trials": self.trials, "seed": self.seed, "passed": self.passed,
                "max_residual": self.max_residual, "counts": dict(self.counts), "failures": self.failures[:5]}


def complement_scan(dim: int, trials: int, seed: int = 0) -> ScanReport:
    rng = np.random.default_rng(seed)
    rep = ScanReport(dim, trials, seed)
    eye = np.eye(dim)
    for _ in range(trials):
        rho, e = random_density(rng, dim, int(rng.integers(1, dim + 1))), random_effect(rng, dim)
        r = abs(born_measure(rho, e) + born_measure(rho, eye - e) - 1)
        rep.max_residual = max(rep.max_residual, r)
    rep.passed = rep.max_residual <= 1e-10
    return rep


def membership_scan(dim: int, trials: int, seed: int = 0) -> ScanReport:
    """Trace and structural criteria agree on random and on constructed certain effects."""
    rng = np.random.default_rng(seed)
    rep = ScanReport(dim, trials, seed, counts={"certain": 0, "uncertain": 0})
    for t in range(trials):
        rho = random_density(rng, dim, int(rng.integers(1, dim + 1)))
        e = certain_effect(rng, rho) if t % 2 == 0 else random_effect(rng, dim)
        m = actual_set_membership(e, rho)
        rep.counts["certain" if m.by_trace else "uncertain"] += 1
        if m.by_trace:
            rep.max_residual = max(rep.max_residual, m.residual)
        if not m.agree:
            rep.passed = False
            rep.failures.append({"trial": t, "residual": m.residual})
    return rep


def rank_one_uniqueness_scan(dim: int, trials: int, seed: int = 0) -> ScanReport:
    """Pure states are separated by their support projection; mixed states are not unique.

    Pure part: for random rank-1 ``rho != rho2`` (rejecting near-identical
    pairs), ``Tr(P rho2) < 1`` with ``P`` the support projection of ``rho``.
    Mixed part: two distinct densities on the same rank >= 2 support pass the
    same certain effects, over a battery of certain and random effects.
    """
    if dim not in (2, 3, 4):
        raise ValueError("scan dimensions are 2, 3 and 4")
    rng = np.random.default_rng(seed)
    rep = ScanReport(dim, trials, seed, counts={"pure_pairs": 0, "mixed_pairs": 0, "effects": 0})
    half = trials // 2
    for _ in range(half):
        while True:
            a, b = random_unit_vector(rng, dim), random_unit_vector(rng, dim)
            rho, rho2 = np.outer(a, a.conj()), np.outer(b, b.conj())
            if np.trace(support_projection(rho) @ rho2).real <= 1 - 1e-6:
                break
        witness = support_projection(rho)
        if not actual_set_membership(witness, rho).by_trace or actual_set_membership(witness, rho2).by_trace:
            rep.passed = False
            rep.failures.append("pure pair not separated")
        rep.counts["pure_pairs"] += 1
    for _ in range(trials - half):
        rank = int(rng.integers(2, dim + 1))
        u = random_unitary(rng, dim)
        w1, w2 = np.zeros(dim), np.zeros(dim)
        w1[:rank], w2[:rank] = rng.random(rank) + 0.05, rng.random(rank) + 0.05
        rho = (u * (w1 / w1.sum())) @ u.conj().T
        rho2 = (u * (w2 / w2.sum())) @ u.conj().T
        for e in (certain_effect(rng, rho), random_effect(rng, dim)):
            m1, m2 = actual_set_membership(e, rho), actual_set_membership(e, rho2)
            rep.counts["effects"] += 1
            rep.max_residual = max(rep.max_residual, abs(m1.residual - m2.residual) if m1.by_trace else 0.0)
            if m1.by_trace != m2.by_trace:
                rep.passed = False
                rep.failures.append("same-support pair separated")
        rep.counts["mixed_pairs"] += 1
    return rep


# -- two-dimensional projection counterexample -----------------------------------


def _bloch_projection(n: np.ndarray) -> np.ndarray:
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    return (np.eye(2) + n[0] * sx + n[1] * sy + n[2] * sz) / 2


@dataclass
class ProjectionCounterexample:
    labels: list
    v1: np.ndarray
    v2: np.ndarray
    structure: ProbabilityStructure
    actual_v1: list
    actual_v2: list
    max_difference: float

    @property
    def shared_actual_set(self) -> bool:
        return self.actual_v1 == self.actual_v2


def dim2_projection_counterexample(count: int = 64, seed: int = 0) -> ProjectionCounterexample:
    """Two distinct measures on qubit projections that are certain on the same projections.

    ``v1(P) = Tr(P Pi)``; ``v2`` is 1 on ``Pi``, 0 on ``I - Pi`` and 1/2 on every
    other rank-one projection. Both are defined on ``{0, I}`` plus ``count``
    complementary pairs of rank-one projections (including ``Pi`` itself).
    """
    rng = np.random.default_rng(seed)
    pi = _bloch_projection(np.array([0.0, 0.0, 1.0]))
    dirs = [np.array([0.0, 0.0, 1.0])]
    while len(dirs) < count:
        n = rng.normal(size=3)
        dirs.append(n / np.linalg.norm(n))
    labels, mats = ["0", "I"], [np.zeros((2, 2)), np.eye(2)]
    table = {}
    for k, n in enumerate(dirs):
        labels += [f"P{k}+", f"P{k}-"]
        mats += [_bloch_projection(n), _bloch_projection(-n)]
    m = len(labels)
    for i in range(m):
        table[(0, i)] = i
        table[(i, 0)] = i
    for k in range(len(dirs)):
        a, b = 2 + 2 * k, 3 + 2 * k
        table[(a, b)] = 1
        table[(b, a)] = 1
    s = ProbabilityStructure(labels, table, 0, 1)
    v1 = np.array([float(np.trace(p @ pi).real) for p in mats])
    v2 = np.empty(m)
    for i, p in enumerate(mats):
        if i == 0:
            v2[i] = 0.0
        elif i == 1:
            v2[i] = 1.0
        else:
            is_pi = np.allclose(p, pi, atol=1e-12)
            is_comp = np.allclose(p, np.eye(2) - pi, atol=1e-12)
            v2[i] = 2.0 ** (int(is_pi) - 1) - int(is_comp) / 2
    for name, v in (("v1", v1), ("v2", v2)):
        chk = verify_gpm(s, v, tol=1e-12)
        if not chk.ok:
            raise InvalidOperator(f"{name} is not a measure: {chk.violation}")
    a1 = [labels[i] for i in range(m) if v1[i] >= 1 - 1e-12]
    a2 = [labels[i] for i in range(m) if v2[i] >= 1 - 1e-12]
    return ProjectionCounterexample(labels, v1, v2, s, a1, a2, float(np.max(np.abs(v1 - v2))))
