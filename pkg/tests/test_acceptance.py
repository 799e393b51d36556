"""Acceptance criteria, each checked exactly and under its time budget.

Every test appends one PASS/FAIL line to ``conftest.ACCEPTANCE_LINES``; the
lines are printed in the terminal summary.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import product

from charcalc import (
    LaurentPoly,
    RationalChar,
    Weight,
    assemble_from_verma,
    char_dimension,
    denominator_roots,
    equals,
    is_finite_dim_char,
    kostant_p,
    mul,
    pullback_character,
    reduce,
    series_expand,
    simple_character,
    tensor_obstruction,
    theorem_sweep,
    verma_character,
    verma_decomposition,
    weyl_character,
)
from charcalc.char_ring import is_reduced
from charcalc.oracles import kostant_partition_count, weight_multiplicities, weyl_dimension

from conftest import ACCEPTANCE_LINES, SYSTEMS


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"FAIL  {number}. {title}: {type(exc).__name__}: {exc}")
        print(ACCEPTANCE_LINES[-1])
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {number}. {title} ({elapsed:.2f}s, limit {limit}s)")
    print(ACCEPTANCE_LINES[-1])
    assert ok, f"took {elapsed:.2f}s, limit {limit}s"


def random_weight(rng, rank):
    return Weight(tuple(Fraction(rng.randint(-12, 12), rng.choice([1, 2, 3, 5])) for _ in range(rank)))


def test_1_verma_reduced_form():
    rng = random.Random(1)
    with criterion(1, "Verma characters reduce to e^lam / prod over all positive roots", 1.0):
        for label in ["A1", "A2", "B2", "G2"]:
            rs = SYSTEMS[label]
            for _ in range(5):
                lam = random_weight(rng, rs.rank)
                red = reduce(verma_character(rs, lam))
                assert set(denominator_roots(red)) == set(rs.posroots)
                assert all(n == 1 for _, n in red.denom)
                assert red.terms == ((lam, LaurentPoly.one(rs.rank)),)


def test_2_kostant_agreement():
    depth = 8
    with criterion(2, "series of p matches partition counts up to height 8 (A2, B2, G2)", 10.0):
        for label in ["A2", "B2", "G2"]:
            rs = SYSTEMS[label]
            window = series_expand(kostant_p(rs), depth)
            for gamma in product(range(depth + 1), repeat=rs.rank):
                if sum(gamma) <= depth:
                    got = window.coefficient(-rs.from_root_coords(gamma))
                    assert got == kostant_partition_count(rs, gamma), (label, gamma)


def test_3_weyl_cross_validation():
    with criterion(3, "Weyl characters agree with Freudenthal and the dimension formula", 10.0):
        for label in ["A1", "A2", "B2"]:
            rs = SYSTEMS[label]
            for lam in rs.dominant_weights_box(3):
                chi = weyl_character(rs, lam)
                assert not denominator_roots(chi)
                assert chi.monomials() == weight_multiplicities(rs, lam)
                assert char_dimension(chi) == weyl_dimension(rs, lam)
        adj = weyl_character(SYSTEMS["A2"], Weight((1, 1)))
        assert char_dimension(adj) == 8 and adj.monomials()[Weight((0, 0))] == 2


def test_4_a1_sweep():
    rs = SYSTEMS["A1"]
    ws = [Weight((Fraction(k, 2),)) for k in range(-10, 11)]
    with criterion(4, "A1 sweep -5..5 step 1/2: obstructed iff infinite dimensional", 1.0):
        report = theorem_sweep(rs, ws)
        assert report.ok
        for rec in report.records:
            c = rec.weight.real[0]
            dominant = c >= 0 and c.denominator == 1
            assert rec.finite_dim == dominant
            if dominant:
                assert not rec.obstructed
            else:
                assert rec.obstructed and rec.witnesses == ((1,),)


def test_5_a1xa1_counterexample():
    rs = SYSTEMS["A1xA1"]
    a1 = SYSTEMS["A1"]
    lam, mu = Fraction(-7, 3), Fraction(5, 2)
    with criterion(5, "A1xA1: product of pulled-back Vermas is a Verma character", 1.0):
        a = pullback_character(rs, 0, verma_character(a1, Weight((lam,))))
        b = pullback_character(rs, 1, verma_character(a1, Weight((mu,))))
        v = tensor_obstruction(a, b)
        assert not v.obstructed
        assert equals(v.product, verma_character(rs, Weight((lam, mu))))
        assert v.product._structure() == reduce(verma_character(rs, Weight((lam, mu))))._structure()
        assert set(denominator_roots(v.product)) == set(rs.posroots)


def test_6_non_reduced_product():
    rs = SYSTEMS["A1"]
    one = LaurentPoly.one(1)
    # e^{-omega} = e^{-alpha/2} lies in the other coset
    a = RationalChar(rs, [(Weight((-1,)), one), (Weight((0,)), one)], {(1,): 1})
    b = RationalChar(rs, [(Weight((-1,)), -one), (Weight((0,)), one)], {(1,): 1})
    with criterion(6, "reduced a, b multiply to a non-reduced form that reduces to 1/(1-e^-alpha)", 1.0):
        assert is_reduced(a) and is_reduced(b)
        raw = mul(a, b, reduced=False)
        assert raw.denom == (((1,), 2),)
        assert not is_reduced(raw)
        red = reduce(raw)
        assert red._structure() == kostant_p(rs)._structure()


def test_7_canonicalization_soundness():
    rng = random.Random(7)
    cases = [(label, SYSTEMS[label]) for label in ["A1", "A2", "B2"]]
    with criterion(7, "200 random Verma combinations: reduce idempotent, series preserved, round trip", 30.0):
        for i in range(200):
            label, rs = cases[i % len(cases)]
            n = rs.rank
            offsets = [Weight(tuple(Fraction(rng.randint(0, 5), 6) for _ in range(n))) for _ in range(3)]
            ncos = rng.randint(1, 3)
            entries = []
            for _ in range(rng.randint(0, 6)):
                base = offsets[rng.randrange(ncos)]
                c = rng.choice([-3, -2, -1, 1, 2, 3])
                entries.append((base + Weight(tuple(rng.randint(-3, 3) for _ in range(n))), c))
            raw = assemble_from_verma(rs, entries, reduced=False)
            red = reduce(raw)
            assert reduce(red)._structure() == red._structure()
            assert series_expand(raw, 10) == series_expand(red, 10)
            dec = verma_decomposition(rs, red)
            assert equals(assemble_from_verma(rs, dec), red)
            assert assemble_from_verma(rs, dec)._structure() == red._structure()


def test_8_mixed_obstruction():
    rs = SYSTEMS["A1"]
    simples = [Weight((Fraction(k, 2),)) for k in range(-10, 11) if not (k >= 0 and k % 2 == 0)]
    vermas = [Weight((Fraction(k, 3),)) for k in range(-9, 10)]
    with criterion(8, "A1: infinite-dimensional simple times any Verma is obstructed", 1.0):
        for lam in simples:
            ch = simple_character(rs, lam)
            assert not is_finite_dim_char(ch)
            for mu in vermas:
                v = tensor_obstruction(ch, verma_character(rs, mu))
                assert v.obstructed and v.witnesses == ((1,),)
