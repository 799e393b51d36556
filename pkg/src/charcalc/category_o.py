"""Characters of category O modules and the decision procedures built on them.

Everything here works at the level of formal characters: a verdict of
"obstructed" certifies that a product cannot be the character of any module
in O, while "unobstructed" makes no membership claim.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .char_ring import (
    LaurentPoly,
    RationalChar,
    denominator_roots,
    mul,
    reduce,
    root_text,
    weyl_denominator,
)
from .errors import (
    InfiniteDimensionalError,
    NotACharacterError,
    NotVermaCombinationError,
    PreconditionError,
    RootSystemMismatchError,
    UnsupportedSimpleCharacterError,
)
from .root_system import RootSystem, Weight, format_weight


def kostant_p(rs: RootSystem) -> RationalChar:
    """``1 / prod_{beta > 0} (1 - e^{-beta})``."""
    return RationalChar(rs, [(Weight.zero(rs.rank), LaurentPoly.one(rs.rank))], {b: 1 for b in rs.posroots})


def verma_character(rs: RootSystem, lam: Weight) -> RationalChar:
    return RationalChar(rs, [(lam, LaurentPoly.one(rs.rank))], {b: 1 for b in rs.posroots})


def weyl_character(rs: RootSystem, lam: Weight, cap: int | None = None) -> RationalChar:
    """Character of the finite-dimensional simple module ``V(lam)``.

    The alternating sum over W is divided by the Weyl denominator through the
    ordinary reduction; the quotient must be exact.
    """
    if not rs.is_dominant_integral(lam):
        raise PreconditionError(
            f"weyl_character needs a dominant integral weight without torsion, got {format_weight(lam)}; "
            "use simple_character instead"
        )
    shifted = lam + rs.rho
    numer = {}
    for w in rs.weyl_elements(cap):
        nu = w.act(shifted) - rs.rho
        numer[nu] = numer.get(nu, 0) + w.sign
    out = reduce(RationalChar.from_weights(rs, numer, {b: 1 for b in rs.posroots}))
    assert not out.denom, "Weyl denominator does not divide the alternating sum"
    return out


def rank1_verma_is_simple(rs: RootSystem, lam: Weight) -> bool:
    """Classical sl2 criterion: ``M(lam)`` is simple iff ``(lam + rho, alpha^vee)`` is not a positive integer."""
    if rs.rank != 1:
        raise PreconditionError("rank-1 criterion applied to a higher-rank system")
    k = lam.real[0] + 1
    return not (k.denominator == 1 and k > 0)


def simple_character(rs: RootSystem, lam: Weight, cap: int | None = None) -> RationalChar:
    """Character of ``V(lam)`` where it is determined without Kazhdan-Lusztig data."""
    if rs.is_dominant_integral(lam):
        return weyl_character(rs, lam, cap)
    if rs.rank == 1 and not lam.has_torsion:
        assert rank1_verma_is_simple(rs, lam)
        return reduce(verma_character(rs, lam))
    raise UnsupportedSimpleCharacterError(
        "simple character requires KL data; supply a VermaDecomposition instead "
        f"(weight {format_weight(lam)} over {rs.label})"
    )


@dataclass(frozen=True)
class VermaDecomposition:
    """Finite integer combination ``sum c * ch M(lam)`` of Verma characters."""

    entries: tuple = ()

    def __post_init__(self):
        acc = {}
        for lam, c in self.entries:
            if not isinstance(lam, Weight):
                raise TypeError("VermaDecomposition entries must be (Weight, int) pairs")
            acc[lam] = acc.get(lam, 0) + int(c)
        entries = tuple(sorted(((w, c) for w, c in acc.items() if c), key=lambda e: e[0].sort_key()))
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_json(self) -> list:
        return [{"weight": format_weight(w), "c": c} for w, c in self.entries]


def assemble_from_verma(rs: RootSystem, dec, *, reduced: bool = True) -> RationalChar:
    """``sum c * e^lam * p``; with ``reduced=False`` the raw form over the full Weyl denominator."""
    if not isinstance(dec, VermaDecomposition):
        dec = VermaDecomposition(tuple(dec))
    raw = RationalChar.from_weights(rs, dec.entries, {b: 1 for b in rs.posroots}) if dec.entries else RationalChar(rs)
    return reduce(raw) if reduced else raw


def verma_decomposition(rs: RootSystem, chi: RationalChar) -> VermaDecomposition:
    if chi.rs != rs:
        raise RootSystemMismatchError(f"character is over {chi.rs.label}, not {rs.label}")
    numer = RationalChar(rs, [(Weight.zero(rs.rank), weyl_denominator(rs))])
    cleared = mul(chi, numer)
    if cleared.denom:
        left = ", ".join(f"{root_text(b)}^{n}" for b, n in cleared.denom)
        raise NotVermaCombinationError(
            f"not a finite integer combination of Verma characters: denominator does not clear ({left} remains)"
        )
    return VermaDecomposition(tuple(cleared.monomials().items()))


def satisfies_O_necessary(chi: RationalChar) -> bool:
    """Every reduced denominator root has multiplicity one.

    Necessary, not sufficient, for ``chi`` to be the character of a module in O.
    """
    return all(n == 1 for n in denominator_roots(chi).values())


def is_finite_dim_char(chi: RationalChar) -> bool:
    return not reduce(chi).denom


def char_dimension(chi: RationalChar) -> int:
    red = reduce(chi)
    if red.denom:
        raise InfiniteDimensionalError("character has a non-trivial denominator; the module is infinite dimensional")
    coeffs = red.monomials().values()
    if any(c < 0 for c in coeffs):
        raise NotACharacterError("negative multiplicities: not a character")
    return sum(coeffs)


# ---------------------------------------------------------------------------
# Tensor products
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TensorVerdict:
    obstructed: bool
    witnesses: tuple = ()
    product: RationalChar | None = field(default=None, compare=False)

    def describe(self) -> str:
        if self.obstructed:
            return "obstructed: " + ", ".join(f"{root_text(b)} squared" for b in self.witnesses)
        return "unobstructed"


def shares_denominator_root(a: RationalChar, b: RationalChar) -> bool:
    """Fast-path hint: the reduced denominator roots of ``a`` and ``b`` intersect.

    Conclusive only for single-term numerators; :func:`tensor_obstruction`
    always decides by full reduction.
    """
    return bool(set(denominator_roots(a)) & set(denominator_roots(b)))


def tensor_obstruction(a: RationalChar, b: RationalChar) -> TensorVerdict:
    """Reduce ``a * b`` and report every positive root whose factor survives squared."""
    if a.rs != b.rs:
        raise RootSystemMismatchError(f"characters live over different root systems: {a.rs.label} vs {b.rs.label}")
    prod = mul(a, b)
    wit = tuple(beta for beta, n in prod.denom if n >= 2)
    return TensorVerdict(bool(wit), wit, prod)


def pullback_character(rs: RootSystem, component: int, chi: RationalChar) -> RationalChar:
    """View a character of one simple component as a character of the direct sum ``rs``.

    The other components act trivially, so weights and roots are padded with zeros.
    """
    sub, idx = rs.component_system(component)
    if chi.rs != sub:
        raise RootSystemMismatchError(f"character is over {chi.rs.label}, component {component} is {sub.label}")

    def pad(vec, fill=0):
        out = [fill] * rs.rank
        for pos, v in zip(idx, vec):
            out[pos] = v
        return tuple(out)

    terms = [
        (Weight(pad(mu.real), pad(mu.torsion)), LaurentPoly(rs.rank, [(pad(m), c) for m, c in f.items()]))
        for mu, f in chi.terms
    ]
    return RationalChar(rs, terms, [(pad(b), n) for b, n in chi.denom])


# ---------------------------------------------------------------------------
# Sweep harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRecord:
    weight: Weight
    finite_dim: bool
    dimension: int | None
    obstructed: bool
    witnesses: tuple
    violation: bool

    def to_json(self) -> dict:
        out = {"weight": format_weight(self.weight), "finite_dim": self.finite_dim}
        if self.dimension is not None:
            out["dimension"] = self.dimension
        out["obstructed"] = self.obstructed
        out["witnesses"] = [list(b) for b in self.witnesses]
        out["verdict"] = "obstructed" if self.obstructed else "no obstruction found"
        out["violation"] = self.violation
        return out


@dataclass(frozen=True)
class SweepReport:
    rs_label: str
    records: tuple

    @property
    def violations(self) -> tuple:
        return tuple(r for r in self.records if r.violation)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "rs": self.rs_label,
            "records": [r.to_json() for r in self.records],
            "violations": len(self.violations),
        }


def theorem_sweep(rs: RootSystem, weights, cap: int | None = None) -> SweepReport:
    """Self-tensor-square check for each simple character ``V(lam)``.

    Infinite-dimensional simples must come out obstructed, finite-dimensional
    ones unobstructed; anything else is recorded as a violation, which would
    point at a bug in this package rather than at a counterexample.
    """
    records = []
    for lam in weights:
        ch = simple_character(rs, lam, cap)
        finite = is_finite_dim_char(ch)
        verdict = tensor_obstruction(ch, ch)
        violation = verdict.obstructed == finite
        records.append(
            SweepRecord(
                weight=lam,
                finite_dim=finite,
                dimension=char_dimension(ch) if finite else None,
                obstructed=verdict.obstructed,
                witnesses=verdict.witnesses,
                violation=violation,
            )
        )
    return SweepReport(rs.label, tuple(records))
