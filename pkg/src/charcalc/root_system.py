"""Finite-type root systems, weights, Weyl groups and the extended Weyl group.

Conventions
-----------
The Cartan matrix is ``a[i][j] = (alpha_i^vee, alpha_j)``, so that
``d[i] * a[i][j] = (alpha_i, alpha_j)`` is symmetric, where ``d[i]`` is half the
squared length of ``alpha_i``.  Symmetrizers are normalized so that the shortest
roots of every simple component have squared length 2.

Weights are stored in the fundamental-weight basis.  Simple-root coordinates
are ``cartan^-1 @ c``.  A weight also carries a *torsion* label, a coweight in
coroot coordinates reduced mod 1, which models the purely imaginary directions
of the quantum weight space.  ``q`` itself never appears.
"""

from __future__ import annotations

import json
import math
import os
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    EnumerationLimitError,
    NotARootError,
    NotFiniteTypeError,
    ParseError,
)

DEFAULT_CAP = 10**6

Vector = tuple  # tuple of Fraction or int


def default_cap() -> int:
    """Weyl group enumeration cap, overridable through ``CHARCALC_CAP``."""
    raw = os.environ.get("CHARCALC_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ParseError(f"CHARCALC_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ParseError("CHARCALC_CAP must be positive")
    return cap


def _mod1(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use int, Fraction or a rational string")
    return Fraction(x)


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Weight:
    """A weight: rational fundamental-basis coordinates plus a torsion label.

    ``torsion`` lives in coroot coordinates and is reduced to ``[0, 1)``
    entrywise, so equality of weights is plain structural equality.
    """

    real: tuple
    torsion: tuple = ()

    def __post_init__(self):
        real = tuple(_as_fraction(x) for x in self.real)
        tors = tuple(_as_fraction(x) for x in self.torsion)
        if not tors:
            tors = (Fraction(0),) * len(real)
        if len(tors) != len(real):
            raise ValueError("torsion and real part must have the same length")
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "torsion", tuple(_mod1(t) for t in tors))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, i: int, rank: int) -> Weight:
        return cls(tuple(int(j == i) for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.real)

    @property
    def has_torsion(self) -> bool:
        return any(self.torsion)

    def __add__(self, other: Weight) -> Weight:
        if not isinstance(other, Weight):
            return NotImplemented
        return Weight(
            tuple(a + b for a, b in zip(self.real, other.real)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
        )

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.real), tuple(-t for t in self.torsion))

    def __sub__(self, other: Weight) -> Weight:
        if not isinstance(other, Weight):
            return NotImplemented
        return self + (-other)

    def scale(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.real), tuple(k * t for t in self.torsion))

    def sort_key(self):
        return (self.real, self.torsion)

    def __str__(self) -> str:
        return format_weight(self)


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_weight(w: Weight) -> str:
    """CLI weight syntax: ``"1/2,-3"`` with an optional ``";t1,t2"`` torsion suffix."""
    text = ",".join(_fmt_frac(x) for x in w.real)
    if w.has_torsion:
        text += ";" + ",".join(_fmt_frac(t) for t in w.torsion)
    return text


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rationals(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    out = []
    for p in parts:
        if not _RATIONAL.match(p) or p.endswith("/0"):
            raise ParseError(f"not an exact rational: {p!r}")
        out.append(Fraction(p))
    return tuple(out)


def parse_weight(text: str, rank: int | None = None) -> Weight:
    """Parse ``"a/b,c[;t1,t2]"``.  A bare ``"0"`` expands to the zero weight."""
    if not isinstance(text, str):
        raise ParseError("weight must be given as a string")
    real_txt, sep, tors_txt = text.strip().partition(";")
    real = _parse_rationals(real_txt)
    tors = _parse_rationals(tors_txt) if sep else ()
    if rank is not None:
        if real == (0,) and rank != 1:
            real = (Fraction(0),) * rank
        if len(real) != rank or (tors and len(tors) != rank):
            raise ParseError(f"weight {text!r} does not have {rank} coordinates")
    if tors and len(tors) != len(real):
        raise ParseError(f"torsion part of {text!r} has the wrong length")
    return Weight(real, tors)


# ---------------------------------------------------------------------------
# Weyl group elements
# ---------------------------------------------------------------------------


def _matmul(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    return tuple(tuple(sum(a[i][r] * b[r][j] for r in range(k)) for j in range(m)) for i in range(n))


def _matvec(a, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element.

    ``word`` is a word in simple reflections (``(i, j)`` means ``s_i s_j``),
    ``matrix`` the action on fundamental coordinates, ``comatrix`` the action
    on coroot coordinates (used for torsion labels).
    """

    word: tuple
    matrix: tuple
    comatrix: tuple

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    @property
    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))

    def act(self, lam: Weight) -> Weight:
        return Weight(_matvec(self.matrix, lam.real), _matvec(self.comatrix, lam.torsion))

    def act_torsion(self, t: Sequence) -> tuple:
        return tuple(_mod1(Fraction(x)) for x in _matvec(self.comatrix, t))

    def __matmul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(
            self.word + other.word,
            _matmul(self.matrix, other.matrix),
            _matmul(self.comatrix, other.comatrix),
        )


@dataclass(frozen=True)
class ExtWeylElement:
    """Element ``(zeta, w)`` of the extended Weyl group ``Y_q x| W``.

    ``zeta`` is a torsion vector with ``2 * zeta = 0`` mod the coroot lattice.
    """

    zeta: tuple
    w: WeylElement

    def __post_init__(self):
        zeta = tuple(_mod1(_as_fraction(z)) for z in self.zeta)
        if any(z not in (0, Fraction(1, 2)) for z in zeta):
            raise ValueError(f"zeta={zeta} is not 2-torsion")
        object.__setattr__(self, "zeta", zeta)

    def __mul__(self, other: ExtWeylElement) -> ExtWeylElement:
        # (zeta, v)(eta, w) = (zeta + v eta, v w)
        veta = self.w.act_torsion(other.zeta)
        return ExtWeylElement(tuple(a + b for a, b in zip(self.zeta, veta)), self.w @ other.w)


# ---------------------------------------------------------------------------
# Root systems
# ---------------------------------------------------------------------------


def _inverse(m):
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise NotFiniteTypeError("not finite type: Cartan matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _leading_minors_positive(m) -> bool:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    # Gaussian elimination without pivoting; all pivots positive <=> positive definite
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
    return True


def _components(cartan) -> list:
    n = len(cartan)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if cartan[i][j] != 0 and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _symmetrizers(cartan, comps) -> tuple:
    n = len(cartan)
    d = [None] * n
    for comp in comps:
        d[comp[0]] = Fraction(1)
        queue = deque([comp[0]])
        while queue:
            i = queue.popleft()
            for j in comp:
                if j == i or cartan[i][j] == 0:
                    continue
                dj = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = dj
                    queue.append(j)
                elif d[j] != dj:
                    raise NotFiniteTypeError("not finite type: Cartan matrix is not symmetrizable")
        if any(d[i] <= 0 for i in comp):
            raise NotFiniteTypeError("not finite type: symmetrizer is not positive")
        lo = min(d[i] for i in comp)
        for i in comp:
            d[i] /= lo
    return tuple(d)


class RootSystem:
    """A finite-type root system given by its Cartan matrix.

    Instances are immutable after construction (the Weyl group is cached
    lazily, which is benign under concurrent access).
    """

    def __init__(self, cartan: Sequence[Sequence[int]], label: str | None = None):
        try:
            cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        except (TypeError, ValueError):
            raise ParseError("Cartan matrix entries must be integers") from None
        n = len(cartan)
        if n == 0 or any(len(row) != n for row in cartan):
            raise ParseError("Cartan matrix must be a non-empty square matrix")
        for i in range(n):
            if cartan[i][i] != 2:
                raise NotFiniteTypeError("not finite type: diagonal entries must be 2")
            for j in range(n):
                if i != j and (cartan[i][j] > 0 or (cartan[i][j] == 0) != (cartan[j][i] == 0)):
                    raise NotFiniteTypeError("not finite type: invalid off-diagonal entries")
        self.cartan = cartan
        self.rank = n
        self.components = tuple(_components(cartan))
        self.d = _symmetrizers(cartan, self.components)
        self.symmetrized = tuple(tuple(self.d[i] * cartan[i][j] for j in range(n)) for i in range(n))
        if not _leading_minors_positive(self.symmetrized):
            raise NotFiniteTypeError("not finite type: symmetrized Cartan matrix is not positive definite")
        self.label = label or json.dumps({"cartan": [list(r) for r in cartan]}, separators=(",", ":"))
        # columns of the Cartan matrix are the simple roots in fundamental coordinates
        self.root_to_fund = cartan
        self.fund_to_root = _inverse(cartan)
        self.posroots = self._enumerate_positive_roots()
        self._posroot_set = frozenset(self.posroots)
        self.rho = Weight((1,) * n)
        half_sum = tuple(Fraction(sum(b[j] for b in self.posroots), 2) for j in range(n))
        if half_sum != self.to_root_coords(self.rho):
            raise AssertionError("rho consistency check failed")
        self.rho_root = half_sum
        self._weyl_cache = None

    def component_system(self, k: int) -> tuple:
        """Simple component ``k`` as ``(RootSystem, indices)``; indices are positions in ``self``."""
        idx = self.components[k]
        sub = [[self.cartan[i][j] for j in idx] for i in idx]
        parts = self.label.split("x")
        label = parts[k] if len(parts) == len(self.components) and not self.label.startswith("{") else None
        return RootSystem(sub, label=label), idx

    # -- construction helpers -------------------------------------------------

    def _enumerate_positive_roots(self) -> tuple:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        queue = deque(simple)
        limit = 10 * n * n * n + 100  # far above any finite type count
        while queue:
            beta = queue.popleft()
            for i in range(n):
                c = sum(self.cartan[i][j] * beta[j] for j in range(n))
                img = tuple(beta[j] - (c if j == i else 0) for j in range(n))
                if all(x >= 0 for x in img) and any(img) and img not in found:
                    found.add(img)
                    queue.append(img)
                    if len(found) > limit:
                        raise NotFiniteTypeError("not finite type: root closure does not terminate")
        return tuple(sorted(found, key=lambda b: (sum(b), tuple(-x for x in b))))

    # -- coordinates and forms ------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        return f"RootSystem({self.label!r})"

    def to_root_coords(self, lam) -> tuple:
        c = lam.real if isinstance(lam, Weight) else lam
        return _matvec(self.fund_to_root, c)

    def from_root_coords(self, x: Sequence, torsion: Sequence = ()) -> Weight:
        return Weight(_matvec(self.root_to_fund, x), tuple(torsion))

    def root(self, beta: Sequence[int]) -> Weight:
        """The root ``beta`` (simple-root coordinates) as a weight."""
        return self.from_root_coords(beta)

    def simple_root(self, i: int) -> Weight:
        return self.root(self.posroots[i])

    def fundamental_weight(self, i: int) -> Weight:
        return Weight.fundamental(i, self.rank)

    @staticmethod
    def height(x: Sequence) -> Fraction:
        return sum(x, Fraction(0))

    def inner(self, lam: Weight, mu: Weight) -> Fraction:
        """Bilinear form on real parts."""
        x = self.to_root_coords(mu)
        return sum((x[j] * self.d[j] * lam.real[j] for j in range(self.rank)), Fraction(0))

    def root_length2(self, beta: Sequence[int]) -> Fraction:
        s = self.symmetrized
        n = self.rank
        return sum((beta[i] * s[i][j] * beta[j] for i in range(n) for j in range(n)), Fraction(0))

    def coroot_pairing(self, lam: Weight, beta: Sequence[int]) -> Fraction:
        """``(lam, beta^vee)`` for a root ``beta`` in simple-root coordinates."""
        num = sum((beta[j] * self.d[j] * lam.real[j] for j in range(self.rank)), Fraction(0))
        return 2 * num / self.root_length2(beta)

    def coroot_coords(self, beta: Sequence[int]) -> tuple:
        """``beta^vee`` in coroot coordinates (integers)."""
        db = self.root_length2(beta) / 2
        out = tuple(beta[j] * self.d[j] / db for j in range(self.rank))
        assert all(x.denominator == 1 for x in out)
        return tuple(int(x) for x in out)

    def is_positive_root(self, beta) -> bool:
        return tuple(beta) in self._posroot_set

    def _check_root(self, beta) -> tuple:
        try:
            b = tuple(int(x) for x in beta)
        except (TypeError, ValueError):
            raise NotARootError(f"{beta!r} is not a root vector") from None
        if b not in self._posroot_set:
            raise NotARootError(f"{b} is not a positive root of {self.label}")
        return b

    # -- reflections and the Weyl group --------------------------------------

    def reflect(self, beta: Sequence[int], lam: Weight) -> Weight:
        """``s_beta(lam) = lam - (lam, beta^vee) beta``; torsion moves linearly."""
        b = self._check_root(beta)
        k = self.coroot_pairing(lam, b)
        bf = _matvec(self.root_to_fund, b)
        real = tuple(c - k * x for c, x in zip(lam.real, bf))
        # torsion tau in coroot coords: s_beta(tau) = tau - (tau, beta) beta^vee
        n = self.rank
        tb = sum((lam.torsion[i] * self.cartan[i][j] * b[j] for i in range(n) for j in range(n)), Fraction(0))
        bv = self.coroot_coords(b)
        tors = tuple(t - tb * v for t, v in zip(lam.torsion, bv))
        return Weight(real, tors)

    def simple_reflection(self, i: int) -> WeylElement:
        n = self.rank
        a = self.cartan
        mat = [list(r) for r in _identity(n)]
        comat = [list(r) for r in _identity(n)]
        for r in range(n):
            mat[r][i] -= a[r][i]
            comat[i][r] -= a[r][i]
        return WeylElement((i,), tuple(map(tuple, mat)), tuple(map(tuple, comat)))

    def identity_element(self) -> WeylElement:
        ident = _identity(self.rank)
        return WeylElement((), ident, ident)

    def exponents(self) -> tuple:
        """Exponents, read off as the partition dual to the root height distribution."""
        counts = {}
        for b in self.posroots:
            counts[sum(b)] = counts.get(sum(b), 0) + 1
        # number of exponents >= k equals number of roots of height k
        exps = []
        top = max(counts)
        for k in range(1, top + 1):
            ge_k = counts.get(k, 0)
            ge_next = counts.get(k + 1, 0)
            exps.extend([k] * (ge_k - ge_next))
        return tuple(sorted(exps))

    def weyl_order(self) -> int:
        return math.prod(m + 1 for m in self.exponents())

    def weyl_elements(self, cap: int | None = None) -> list:
        """All Weyl group elements by BFS over left multiplication by simple reflections."""
        cap = default_cap() if cap is None else cap
        order = self.weyl_order()
        if order > cap:
            raise EnumerationLimitError(f"Weyl group of {self.label} has {order} elements, above the cap {cap}")
        if self._weyl_cache is not None:
            return list(self._weyl_cache)
        gens = [self.simple_reflection(i) for i in range(self.rank)]
        ident = self.identity_element()
        seen = {ident.matrix}
        elements = [ident]
        queue = deque([ident])
        while queue:
            w = queue.popleft()
            for s in gens:
                v = s @ w
                if v.matrix not in seen:
                    seen.add(v.matrix)
                    elements.append(v)
                    queue.append(v)
                    if len(elements) > cap:
                        raise EnumerationLimitError(f"Weyl group enumeration exceeded cap {cap}")
        assert len(elements) == order
        self._weyl_cache = tuple(elements)
        return elements

    def dot(self, w: WeylElement, lam: Weight) -> Weight:
        """Shifted action ``w(lam + rho) - rho``."""
        return w.act(lam + self.rho) - self.rho

    def shifted_action(self, what: ExtWeylElement | WeylElement, lam: Weight) -> Weight:
        if isinstance(what, WeylElement):
            what = ExtWeylElement((0,) * self.rank, what)
        res = self.dot(what.w, lam)
        return Weight(res.real, tuple(t + z for t, z in zip(res.torsion, what.zeta)))

    # -- torsion subgroups ----------------------------------------------------

    def is_in_Yq(self, torsion: Sequence) -> bool:
        return all(_mod1(2 * Fraction(t)) == 0 for t in torsion)

    def is_in_Xq(self, torsion: Sequence) -> bool:
        """``2 t`` pairs integrally with every simple root, i.e. ``2 t`` lies in the coweight lattice."""
        n = self.rank
        return all(
            (2 * sum((Fraction(torsion[i]) * self.cartan[i][j] for i in range(n)), Fraction(0))).denominator == 1
            for j in range(n)
        )

    def Yq_elements(self) -> list:
        half = Fraction(1, 2)
        return [tuple(v) for v in product((Fraction(0), half), repeat=self.rank)]

    def extended_weyl_elements(self, cap: int | None = None) -> list:
        cap = default_cap() if cap is None else cap
        ws = self.weyl_elements(cap)
        if len(ws) * 2**self.rank > cap:
            raise EnumerationLimitError(f"extended Weyl group exceeds cap {cap}")
        return [ExtWeylElement(z, w) for z in self.Yq_elements() for w in ws]

    # -- order, linkage, dominance -------------------------------------------

    def are_linked(self, lam: Weight, mu: Weight, cap: int | None = None) -> bool:
        """True iff ``mu`` lies in the shifted orbit of ``lam`` under the extended Weyl group."""
        for w in self.weyl_elements(cap):
            img = self.dot(w, lam)
            if img.real == mu.real and self.is_in_Yq(tuple(a - b for a, b in zip(mu.torsion, img.torsion))):
                return True
        return False

    def linkage_orbit(self, lam: Weight, cap: int | None = None) -> list:
        """Shifted orbit of ``lam``, enumerated element by element."""
        orbit = {self.shifted_action(e, lam) for e in self.extended_weyl_elements(cap)}
        return sorted(orbit, key=Weight.sort_key)

    def leq(self, mu: Weight, lam: Weight) -> bool:
        """``mu <= lam`` iff the torsion agrees and ``lam - mu`` is in the positive root cone of Q."""
        if mu.torsion != lam.torsion:
            return False
        x = self.to_root_coords(tuple(a - b for a, b in zip(lam.real, mu.real)))
        return all(v.denominator == 1 and v >= 0 for v in x)

    def is_integral(self, lam: Weight) -> bool:
        return all(c.denominator == 1 for c in lam.real)

    def is_dominant_integral(self, lam: Weight) -> bool:
        return not lam.has_torsion and all(c.denominator == 1 and c >= 0 for c in lam.real)

    def is_in_Pq_plus(self, lam: Weight) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in lam.real) and self.is_in_Xq(lam.torsion)

    def dominant_weights_box(self, bound: int) -> list:
        """Dominant integral weights with every fundamental coordinate in ``[0, bound]``."""
        return [Weight(c) for c in product(range(bound + 1), repeat=self.rank)]


# ---------------------------------------------------------------------------
# Construction from labels
# ---------------------------------------------------------------------------


def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(kind: str, n: int) -> list:
    """Cartan matrix of a simple type in Bourbaki labeling."""
    kind = kind.upper()
    if kind == "A" and n >= 1:
        return _chain(n)
    if kind == "B" and n >= 2:
        a = _chain(n)
        a[n - 1][n - 2] = -2  # alpha_n short
        return a
    if kind == "C" and n >= 2:
        a = _chain(n)
        a[n - 2][n - 1] = -2  # alpha_n long
        return a
    if kind == "D" and n >= 4:
        a = _chain(n - 1) + [[0] * (n - 1)]
        a = [row + [0] for row in a]
        a[n - 1][n - 1] = 2
        a[n - 2][n - 3] = a[n - 3][n - 2] = -1
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
        return a
    if kind == "E" and n in (6, 7, 8):
        # chain 1-3-4-5-...-n with 2 attached to 4 (1-based)
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(1, 3), (2, 4), (3, 4)] + [(k, k + 1) for k in range(4, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return a
    if kind == "F" and n == 4:
        a = _chain(4)
        a[2][1] = -2  # alpha_3, alpha_4 short
        return a
    if kind == "G" and n == 2:
        return [[2, -3], [-1, 2]]  # alpha_1 short
    raise ParseError(f"unknown or invalid type {kind}{n}")


_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def _block_diag(blocks):
    n = sum(len(b) for b in blocks)
    a = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                a[off + i][off + j] = x
        off += len(b)
    return a


def build_root_system(spec) -> RootSystem:
    """Build a root system from ``"A2"``, ``"A1xA1"``, a JSON ``{"cartan": ...}`` string,
    a dict with a ``"cartan"`` key, or a Cartan matrix."""
    if isinstance(spec, RootSystem):
        return spec
    if isinstance(spec, dict):
        if "cartan" not in spec:
            raise ParseError("JSON root system spec needs a 'cartan' key")
        return RootSystem(spec["cartan"])
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("{"):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON root system spec: {exc}") from None
            return build_root_system(data)
        if not text:
            raise ParseError("empty root system spec")
        blocks, labels = [], []
        for part in re.split(r"[x×]", text):
            m = _TYPE_RE.match(part.strip())
            if not m:
                raise ParseError(f"cannot parse root system component {part!r}")
            kind, n = m.group(1).upper(), int(m.group(2))
            blocks.append(cartan_matrix(kind, n))
            labels.append(f"{kind}{n}")
        return RootSystem(_block_diag(blocks), label="x".join(labels))
    if isinstance(spec, Iterable):
        return RootSystem([list(r) for r in spec])
    raise ParseError(f"cannot build a root system from {spec!r}")
