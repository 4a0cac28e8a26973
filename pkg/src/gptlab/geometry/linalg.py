"""Exact Gaussian elimination over any ordered field (Fraction, QSqrt2)."""
from __future__ import annotations

import math
from fractions import Fraction


def dot(u, v):
    total = 0
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``; zero rows dropped."""
    m = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols=None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for every row}``, one vector per free column."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve_affine(eq_rows, rhs, ncols):
    """Parametrize ``{x : A x = b}`` as ``x0 + sum t_j n_j``.

    Returns ``(x0, basis)`` or ``None`` if the system is inconsistent.
    """
    if not eq_rows:
        return [Fraction(0)] * ncols, nullspace([], ncols)
    aug = [list(r) + [b] for r, b in zip(eq_rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x0 = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x0[pc] = row[ncols]
    return x0, nullspace([r[:ncols] for r in red], ncols)


def normalize(vec):
    """Canonical positive rescaling of a nonzero vector.

    Rational vectors become primitive integer vectors; anything else is divided
    by the absolute value of its first nonzero entry.
    """
    if all(isinstance(x, (int, Fraction)) for x in vec):
        fr = [Fraction(x) for x in vec]
        den = 1
        for x in fr:
            den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [int(x * den) for x in fr]
        g = 0
        for x in ints:
            g = math.gcd(g, abs(x))
        if g == 0:
            raise ValueError("cannot normalize the zero vector")
        return tuple(Fraction(x // g) for x in ints)
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        raise ValueError("cannot normalize the zero vector")
    s = abs(lead)
    return tuple(x / s for x in vec)

