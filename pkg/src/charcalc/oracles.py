"""Brute-force reference computations.

None of these touch the rational-form machinery in :mod:`charcalc.char_ring`,
so agreement between the two is real evidence.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionError
from .root_system import RootSystem, Weight, format_weight


def kostant_partition_count(rs: RootSystem, gamma) -> int:
    """Number of ways to write ``gamma`` (simple-root coordinates) as a sum of positive roots."""
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != rs.rank or any(g < 0 for g in gamma):
        raise PreconditionError(f"gamma={gamma} must be a non-negative vector of length {rs.rank}")
    roots = rs.posroots

    @lru_cache(maxsize=None)
    def count(i, rem):
        if not any(rem):
            return 1
        if i == len(roots):
            return 0
        beta = roots[i]
        total = 0
        while all(r >= 0 for r in rem):
            total += count(i + 1, rem)
            rem = tuple(r - b for r, b in zip(rem, beta))
        return total

    return count(0, gamma)


def _require_dominant(rs: RootSystem, lam: Weight):
    if not rs.is_dominant_integral(lam):
        raise PreconditionError(f"{format_weight(lam)} is not dominant integral")


def _form(rs: RootSystem, x, y) -> Fraction:
    s = rs.symmetrized
    n = rs.rank
    return sum((x[i] * s[i][j] * y[j] for i in range(n) for j in range(n)), Fraction(0))


class _Freudenthal:
    """Freudenthal recursion for one highest weight, indexed by ``gamma = lam - mu``."""

    def __init__(self, rs: RootSystem, lam: Weight):
        _require_dominant(rs, lam)
        self.rs = rs
        self.lam_root = rs.to_root_coords(lam)
        self.shift2 = tuple(2 * (a + b) for a, b in zip(self.lam_root, rs.rho_root))
        self.memo = {}

    def mult(self, gamma) -> int:
        if gamma in self.memo:
            return self.memo[gamma]
        if not any(gamma):
            return 1
        rs = self.rs
        # |lam+rho|^2 - |mu+rho|^2 = (gamma, 2(lam+rho) - gamma)
        gap = _form(rs, gamma, tuple(s - g for s, g in zip(self.shift2, gamma)))
        if gap <= 0:
            self.memo[gamma] = 0
            return 0
        mu = tuple(a - g for a, g in zip(self.lam_root, gamma))
        total = Fraction(0)
        for beta in rs.posroots:
            k = 1
            while True:
                up = tuple(g - k * b for g, b in zip(gamma, beta))
                if any(u < 0 for u in up):
                    break
                m = self.mult(up)
                if m:
                    total += m * _form(rs, tuple(x + k * b for x, b in zip(mu, beta)), beta)
                k += 1
        value = 2 * total / gap
        assert value.denominator == 1 and value >= 0, f"Freudenthal produced {value}"
        self.memo[gamma] = int(value)
        return int(value)


def freudenthal_multiplicity(rs: RootSystem, lam: Weight, mu: Weight) -> int:
    """Multiplicity of ``mu`` in the finite-dimensional simple module ``V(lam)``."""
    if mu.torsion != lam.torsion:
        return 0
    gamma = rs.to_root_coords(tuple(a - b for a, b in zip(lam.real, mu.real)))
    if any(g.denominator != 1 or g < 0 for g in gamma):
        return 0
    return _Freudenthal(rs, lam).mult(tuple(int(g) for g in gamma))


def weight_multiplicities(rs: RootSystem, lam: Weight) -> dict:
    """All weights of ``V(lam)`` with multiplicities, found by descending along simple roots."""
    fr = _Freudenthal(rs, lam)
    n = rs.rank
    out = {}
    frontier = [(0,) * n]
    seen = set(frontier)
    while frontier:
        nxt = []
        for gamma in frontier:
            m = fr.mult(gamma)
            if not m:
                continue
            out[rs.from_root_coords(tuple(a - g for a, g in zip(fr.lam_root, gamma)))] = m
            for i in range(n):
                g2 = tuple(g + (j == i) for j, g in enumerate(gamma))
                if g2 not in seen:
                    seen.add(g2)
                    nxt.append(g2)
        frontier = nxt
    return out


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """``prod_{beta > 0} (lam + rho, beta) / (rho, beta)``."""
    _require_dominant(rs, lam)
    shifted = lam + rs.rho
    value = Fraction(1)
    for beta in rs.posroots:
        value *= rs.coroot_pairing(shifted, beta) / rs.coroot_pairing(rs.rho, beta)
    assert value.denominator == 1
    return int(value)
