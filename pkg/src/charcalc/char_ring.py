"""Rational forms of formal characters.

An element of the character ring is stored as

    sum_i e^{mu_i} f_i  /  prod_beta (1 - e^{-beta})^{n_beta}

where each ``f_i`` is an integer polynomial in ``x_j = e^{-alpha_j}``
(:class:`LaurentPoly`), the ``mu_i`` lie in pairwise distinct cosets of the root
lattice, and every ``beta`` is a positive root.  :func:`reduce` brings any such
expression to its unique canonical form.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import ParseError, PreconditionError, RootSystemMismatchError
from .root_system import RootSystem, Weight, _mod1, build_root_system, format_weight, parse_weight


def _grlex_key(m):
    return (sum(m), m)


class LaurentPoly:
    """Sparse integer polynomial in ``x_j = e^{-alpha_j}``.

    The exponent vector ``m`` stands for ``e^{-(m_1 alpha_1 + ... + m_N alpha_N)}``.
    Exponents are non-negative and zero coefficients are never stored.
    """

    __slots__ = ("nvars", "_c")

    def __init__(self, nvars: int, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = {}
        for m, c in items:
            m = tuple(int(e) for e in m)
            if len(m) != nvars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {nvars} variables")
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError("coefficients must be integers")
                c = c.numerator
            elif not isinstance(c, int):
                raise TypeError("coefficients must be integers")
            acc[m] = acc.get(m, 0) + c
        self.nvars = nvars
        self._c = {m: c for m, c in acc.items() if c}

    @classmethod
    def _raw(cls, nvars, coeffs):
        p = cls.__new__(cls)
        p.nvars = nvars
        p._c = {m: c for m, c in coeffs.items() if c}
        return p

    @classmethod
    def one(cls, nvars: int) -> LaurentPoly:
        return cls._raw(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, m, c: int = 1) -> LaurentPoly:
        m = tuple(m)
        return cls(len(m), {m: c})

    @classmethod
    def binomial(cls, beta) -> LaurentPoly:
        """``1 - x^beta``."""
        beta = tuple(beta)
        return cls(len(beta), [((0,) * len(beta), 1), (beta, -1)])

    def items(self):
        return sorted(self._c.items(), key=lambda kv: _grlex_key(kv[0]))

    def coefficient(self, m) -> int:
        return self._c.get(tuple(m), 0)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._c == other._c

    def __hash__(self):
        return hash((self.nvars, frozenset(self._c.items())))

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {m: -c for m, c in self._c.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._c)
        for m, c in other._c.items():
            out[m] = out.get(m, 0) + c
        return LaurentPoly._raw(self.nvars, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly._raw(self.nvars, {m: c * other for m, c in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for m1, c1 in self._c.items():
            for m2, c2 in other._c.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.one(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, m) -> LaurentPoly:
        """Multiply by ``x^m``."""
        return LaurentPoly._raw(self.nvars, {tuple(a + b for a, b in zip(e, m)): c for e, c in self._c.items()})

    def gcm(self) -> tuple:
        """Exponent of the greatest common monomial factor."""
        if not self._c:
            return (0,) * self.nvars
        return tuple(min(m[j] for m in self._c) for j in range(self.nvars))

    def total_degree(self) -> int:
        return max((sum(m) for m in self._c), default=0)

    def coefficient_sum(self) -> int:
        return sum(self._c.values())

    def __repr__(self):
        if not self._c:
            return "LaurentPoly(0)"
        return f"LaurentPoly({format_poly(self)})"


def format_poly(f: LaurentPoly) -> str:
    if not f:
        return "0"
    out = []
    for m, c in f.items():
        mono = " ".join(f"x{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(m) if e)
        if not mono:
            piece = str(abs(c))
        elif abs(c) == 1:
            piece = mono
        else:
            piece = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, piece))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, piece in out[1:]:
        text += f" {sign} {piece}"
    return text


def divide_by_factor(f: LaurentPoly, beta) -> LaurentPoly | None:
    """Exact quotient ``f / (1 - x^beta)`` in the polynomial ring, or ``None``.

    ``1 - x^beta`` only couples monomials on a common line ``m0 + k*beta``, so
    the quotient along each line is the running sum of ``f``'s coefficients,
    and divisibility is equivalent to every line summing to zero.
    """
    beta = tuple(beta)
    if len(beta) != f.nvars or any(b < 0 for b in beta) or not any(beta):
        raise ValueError(f"{beta} is not a non-zero non-negative exponent vector")
    support = [j for j, b in enumerate(beta) if b]
    lines = {}
    for m, c in f._c.items():
        k = min(m[j] // beta[j] for j in support)
        base = tuple(e - k * b for e, b in zip(m, beta))
        lines.setdefault(base, {})[k] = c
    out = {}
    for base, line in lines.items():
        lo, hi = min(line), max(line)
        running = 0
        for k in range(lo, hi + 1):
            running += line.get(k, 0)
            if k < hi and running:
                out[tuple(e + k * b for e, b in zip(base, beta))] = running
        if running:
            return None
    return LaurentPoly._raw(f.nvars, out)


def weyl_denominator(rs: RootSystem, denom=None) -> LaurentPoly:
    """``prod (1 - x^beta)^n`` over ``denom`` (default: every positive root once)."""
    if denom is None:
        denom = [(b, 1) for b in rs.posroots]
    elif isinstance(denom, Mapping):
        denom = denom.items()
    out = LaurentPoly.one(rs.rank)
    for beta, n in denom:
        out = out * LaurentPoly.binomial(beta) ** n
    return out


# ---------------------------------------------------------------------------
# Rational characters
# ---------------------------------------------------------------------------


class RationalChar:
    """``sum e^{mu_i} f_i / prod (1 - e^{-beta})^{n_beta}`` over a fixed root system.

    The constructor accepts any such expression (cosets may repeat, factors
    may cancel).  Arithmetic returns canonical reduced forms; ``==`` compares
    canonical forms.
    """

    __slots__ = ("rs", "terms", "denom", "_canon")

    def __init__(self, rs: RootSystem, terms: Iterable = (), denom=None):
        self.rs = rs
        ts = []
        for mu, f in terms:
            if not isinstance(mu, Weight):
                raise TypeError("coset representatives must be Weight instances")
            if mu.rank != rs.rank:
                raise PreconditionError(f"weight {mu} has rank {mu.rank}, expected {rs.rank}")
            if not isinstance(f, LaurentPoly):
                f = LaurentPoly(rs.rank, f)
            if f.nvars != rs.rank:
                raise PreconditionError("numerator polynomial has the wrong number of variables")
            ts.append((mu, f))
        self.terms = tuple(ts)
        dn = {}
        items = denom.items() if isinstance(denom, Mapping) else (denom or ())
        for beta, n in items:
            beta = tuple(int(x) for x in beta)
            if not rs.is_positive_root(beta):
                raise PreconditionError(f"denominator factor {beta} is not a positive root of {rs.label}")
            if int(n) < 0:
                raise PreconditionError("denominator multiplicities must be non-negative")
            dn[beta] = dn.get(beta, 0) + int(n)
        order = {b: i for i, b in enumerate(rs.posroots)}
        self.denom = tuple(sorted(((b, n) for b, n in dn.items() if n), key=lambda bn: order[bn[0]]))
        self._canon = None

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, rs: RootSystem) -> RationalChar:
        return cls(rs)

    @classmethod
    def monomial(cls, rs: RootSystem, lam: Weight, c: int = 1) -> RationalChar:
        """The finite element ``c * e^lam``."""
        return cls(rs, [(lam, LaurentPoly.one(rs.rank) * c)])

    @classmethod
    def one(cls, rs: RootSystem) -> RationalChar:
        return cls.monomial(rs, Weight.zero(rs.rank))

    @classmethod
    def from_weights(cls, rs: RootSystem, weights, denom=None) -> RationalChar:
        """Numerator given as ``{weight: coefficient}`` (or pairs)."""
        items = weights.items() if isinstance(weights, Mapping) else weights
        one = LaurentPoly.one(rs.rank)
        return cls(rs, [(w, one * c) for w, c in items], denom)

    # -- structure -----------------------------------------------------------

    @property
    def denom_dict(self) -> dict:
        return dict(self.denom)

    def is_zero(self) -> bool:
        return not reduce(self).terms

    def monomials(self) -> dict:
        """Numerator expanded as ``{weight: coefficient}``."""
        out = {}
        for mu, f in self.terms:
            x = self.rs.to_root_coords(mu)
            for m, c in f.items():
                w = self.rs.from_root_coords(tuple(a - b for a, b in zip(x, m)), mu.torsion)
                out[w] = out.get(w, 0) + c
        return {w: c for w, c in out.items() if c}

    def _structure(self):
        return (self.terms, self.denom)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = RationalChar.one(self.rs) * other
        if not isinstance(other, RationalChar):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return RationalChar(self.rs, [(mu, -f) for mu, f in self.terms], self.denom)

    def __sub__(self, other):
        if not isinstance(other, RationalChar):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return reduce(RationalChar(self.rs, [(mu, f * other) for mu, f in self.terms], self.denom))
        if not isinstance(other, RationalChar):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RationalChar):
            return NotImplemented
        return self.rs == other.rs and equals(self, other)

    def __hash__(self):
        return hash(reduce(self)._structure())

    def __repr__(self):
        return f"RationalChar({format_char(self)})"


def _check_same(a: RationalChar, b: RationalChar):
    if a.rs != b.rs:
        raise RootSystemMismatchError(f"characters live over different root systems: {a.rs.label} vs {b.rs.label}")


def collect(a: RationalChar) -> RationalChar:
    """Group numerator monomials by root-lattice coset and pick canonical representatives.

    Each coset representative is the componentwise maximum of its monomials
    (in simple-root coordinates), which makes every ``f_i`` free of common
    monomial factors.  The denominator is left untouched unless the numerator
    vanishes.
    """
    rs = a.rs
    groups = {}
    for mu, f in a.terms:
        x = rs.to_root_coords(mu)
        base = tuple(_mod1(v) for v in x)
        off = tuple(int(v - b) for v, b in zip(x, base))
        g = groups.setdefault((base, mu.torsion), {})
        for m, c in f._c.items():
            k = tuple(o - e for o, e in zip(off, m))
            g[k] = g.get(k, 0) + c
    terms = []
    for (base, tors), g in groups.items():
        g = {k: c for k, c in g.items() if c}
        if not g:
            continue
        top = tuple(max(k[j] for k in g) for j in range(rs.rank))
        f = LaurentPoly._raw(rs.rank, {tuple(t - e for t, e in zip(top, k)): c for k, c in g.items()})
        mu = rs.from_root_coords(tuple(b + t for b, t in zip(base, top)), tors)
        terms.append((mu, f))
    terms.sort(key=lambda t: t[0].sort_key())
    return RationalChar(rs, terms, a.denom if terms else ())


def reduce(a: RationalChar) -> RationalChar:
    """Canonical reduced rational form.

    Cosets are collected, then for each denominator root (by height, then
    lexicographically) the factor ``1 - e^{-beta}`` is cancelled for as long as
    it divides every numerator polynomial.
    """
    if a._canon is not None:
        return a._canon
    c = collect(a)
    polys = [f for _, f in c.terms]
    denom = []
    for beta, n in c.denom:
        while n:
            quotients = [divide_by_factor(f, beta) for f in polys]
            if any(q is None for q in quotients):
                break
            polys = quotients
            n -= 1
        if n:
            denom.append((beta, n))
    out = RationalChar(a.rs, [(mu, f) for (mu, _), f in zip(c.terms, polys)], denom)
    out._canon = out
    a._canon = out
    return out


def is_reduced(a: RationalChar) -> bool:
    """True when ``a`` already is its canonical form, up to the order of its terms."""
    r = reduce(a)
    return a.denom == r.denom and set(a.terms) == set(r.terms) and len(a.terms) == len(r.terms)


def _rescale_to(a: RationalChar, target: dict) -> list:
    have = a.denom_dict
    extra = {b: k - have.get(b, 0) for b, k in target.items() if k != have.get(b, 0)}
    factor = weyl_denominator(a.rs, extra)
    return [(mu, f * factor) for mu, f in a.terms]


def add(a: RationalChar, b: RationalChar, *, reduced: bool = True) -> RationalChar:
    _check_same(a, b)
    da, db = a.denom_dict, b.denom_dict
    common = {beta: max(da.get(beta, 0), db.get(beta, 0)) for beta in set(da) | set(db)}
    out = RationalChar(a.rs, _rescale_to(a, common) + _rescale_to(b, common), common)
    return reduce(out) if reduced else collect(out)


def mul(a: RationalChar, b: RationalChar, *, reduced: bool = True) -> RationalChar:
    """Convolution product.  With ``reduced=False`` the merged-denominator form is
    returned with cosets collected but no factor cancelled."""
    _check_same(a, b)
    terms = [(mu + nu, f * g) for mu, f in a.terms for nu, g in b.terms]
    denom = dict(a.denom)
    for beta, n in b.denom:
        denom[beta] = denom.get(beta, 0) + n
    out = RationalChar(a.rs, terms, denom)
    return reduce(out) if reduced else collect(out)


def equals(a: RationalChar, b: RationalChar) -> bool:
    _check_same(a, b)
    return reduce(a)._structure() == reduce(b)._structure()


def denominator_roots(a: RationalChar) -> dict:
    """``{beta: n_beta}`` of the reduced form."""
    return dict(reduce(a).denom)


# ---------------------------------------------------------------------------
# Series expansion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesWindow:
    """Coefficients of a character on ``mu_i - gamma`` with ``height(gamma) <= depth``."""

    coefficients: dict
    depth: int
    tops: tuple = field(default=(), compare=False)

    def coefficient(self, lam: Weight) -> int:
        return self.coefficients.get(lam, 0)

    def items(self) -> list:
        return sorted(self.coefficients.items(), key=lambda kv: kv[0].sort_key())

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "coefficients": [[format_weight(w), c] for w, c in self.items()],
        }


def _expand_poly(f: LaurentPoly, denom, depth: int) -> dict:
    g = {m: c for m, c in f._c.items() if sum(m) <= depth}
    for beta, n in denom:
        hb = sum(beta)
        for _ in range(n):
            new = {}
            for m, c in g.items():
                h = sum(m)
                while h <= depth:
                    new[m] = new.get(m, 0) + c
                    m = tuple(a + b for a, b in zip(m, beta))
                    h += hb
            g = {m: c for m, c in new.items() if c}
    return g


def series_expand(a: RationalChar, depth: int) -> SeriesWindow:
    """Truncated formal-series view of ``a``.

    Coefficients are exact at every weight within ``depth`` (in height) below
    the coset representative of its coset; weights further down are omitted.
    """
    if depth < 0:
        raise PreconditionError("depth must be non-negative")
    c = collect(a)
    rs = a.rs
    coeffs = {}
    for mu, f in c.terms:
        x = rs.to_root_coords(mu)
        for m, v in _expand_poly(f, c.denom, depth).items():
            coeffs[rs.from_root_coords(tuple(p - q for p, q in zip(x, m)), mu.torsion)] = v
    return SeriesWindow(coeffs, depth, tuple(mu for mu, _ in c.terms))


def coefficient(a: RationalChar, lam: Weight) -> int:
    """Exact coefficient of ``e^lam`` in ``a``."""
    c = collect(a)
    rs = a.rs
    y = rs.to_root_coords(lam)
    for mu, f in c.terms:
        if mu.torsion != lam.torsion:
            continue
        m = tuple(p - q for p, q in zip(rs.to_root_coords(mu), y))
        if all(v.denominator == 1 for v in m):
            if any(v < 0 for v in m):
                return 0
            m = tuple(int(v) for v in m)
            return _expand_poly(f, c.denom, sum(m)).get(m, 0)
    return 0


# ---------------------------------------------------------------------------
# Text and JSON
# ---------------------------------------------------------------------------


def _lin_comb(coeffs, name) -> str:
    parts = []
    for j, c in enumerate(coeffs):
        if not c:
            continue
        c = Fraction(c)
        mag = abs(c)
        coef = "" if mag == 1 else (f"{mag.numerator}" if mag.denominator == 1 else f"({mag})")
        parts.append(("-" if c < 0 else "+", f"{coef}{name}_{j + 1}"))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, p in parts[1:]:
        text += f"{sign}{p}"
    return text


def weight_text(w: Weight) -> str:
    text = _lin_comb(w.real, "omega")
    if w.has_torsion:
        text += " [t=" + ",".join(str(t) for t in w.torsion) + "]"
    return text


def root_text(beta) -> str:
    return _lin_comb(beta, "alpha")


def format_char(a: RationalChar) -> str:
    """ASCII rendering, e.g. ``e^(omega_1) * (1 - x1) / (1 - e^-alpha_1)^2``."""
    if not a.terms:
        return "0"
    num = " + ".join(
        f"e^({weight_text(mu)})" + ("" if f == LaurentPoly.one(a.rs.rank) else f" * ({format_poly(f)})")
        for mu, f in a.terms
    )
    if not a.denom:
        return num
    den = " ".join(
        f"(1 - e^-({root_text(b)}))" + (f"^{n}" if n > 1 else "") for b, n in a.denom
    )
    return f"[{num}] / {den}"


def char_to_json(a: RationalChar) -> dict:
    return {
        "rs": a.rs.label,
        "terms": [
            {"mu": format_weight(mu), "f": [{"exp": list(m), "c": c} for m, c in f.items()]}
            for mu, f in a.terms
        ],
        "denom": [{"beta": list(b), "n": n} for b, n in a.denom],
    }


def char_from_json(data: dict, rs: RootSystem | None = None) -> RationalChar:
    try:
        if rs is None:
            if "rs" not in data:
                raise ParseError("character JSON lacks an 'rs' field and no root system was given")
            rs = build_root_system(data["rs"])
        terms = [
            (
                parse_weight(t["mu"], rs.rank),
                LaurentPoly(rs.rank, [(e["exp"], int(e["c"])) for e in t["f"]]),
            )
            for t in data.get("terms", [])
        ]
        denom = [(d["beta"], int(d["n"])) for d in data.get("denom", [])]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed character JSON: {exc}") from None
    return RationalChar(rs, terms, denom)
