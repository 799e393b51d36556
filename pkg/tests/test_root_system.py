from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charcalc import ExtWeylElement, Weight, build_root_system, parse_weight
from charcalc.errors import EnumerationLimitError, NotARootError, NotFiniteTypeError, ParseError
from charcalc.root_system import format_weight

from conftest import SYSTEMS, integral_weights, weights

half = Fraction(1, 2)


def W(*xs, t=()):
    return Weight(xs, t)


# -- construction ----------------------------------------------------------


def test_a1_basics():
    rs = build_root_system("A1")
    assert rs.posroots == ((1,),)
    assert rs.rho == W(1)
    assert rs.rho_root == (half,)


def test_a2_positive_roots():
    rs = build_root_system("A2")
    assert set(rs.posroots) == {(1, 0), (0, 1), (1, 1)}
    assert rs.posroots[:2] == ((1, 0), (0, 1))


def test_g2_positive_roots_and_symmetrizers():
    rs = build_root_system("G2")
    assert set(rs.posroots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert rs.d == (1, 3)


def test_b2_roots():
    rs = build_root_system("B2")
    assert set(rs.posroots) == {(1, 0), (0, 1), (1, 1), (1, 2)}
    assert rs.d == (2, 1)


@pytest.mark.parametrize(
    "label,count",
    [("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("B3", 9), ("C3", 9), ("D4", 12),
     ("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120), ("A1xA1", 2), ("A2xG2", 9)],
)
def test_root_counts(label, count):
    assert len(build_root_system(label).posroots) == count


def test_json_cartan_spec():
    rs = build_root_system('{"cartan": [[2,-1],[-1,2]]}')
    assert rs == build_root_system("A2")
    assert build_root_system(rs.label) == rs


@pytest.mark.parametrize("spec", ["Q3", "A0", "B1", "G3", "E9", "A1x", "", "{bad json", '{"rank": 2}'])
def test_malformed_specs(spec):
    with pytest.raises(ParseError):
        build_root_system(spec)


@pytest.mark.parametrize(
    "cartan",
    [[[2, -2], [-2, 2]], [[2, -3], [-3, 2]], [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], [[2, -1], [0, 2]], [[3]]],
)
def test_not_finite_type(cartan):
    with pytest.raises(NotFiniteTypeError, match="not finite type"):
        build_root_system(cartan)


@pytest.mark.parametrize("label", sorted(SYSTEMS))
def test_invariants(label):
    rs = SYSTEMS[label]
    n = rs.rank
    for i in range(n):
        for j in range(n):
            s = rs.symmetrized
            assert s[i][j] == s[j][i]
            # (omega_i, alpha_j^vee) = delta_ij
            assert rs.coroot_pairing(rs.fundamental_weight(i), rs.posroots[j]) == (i == j)
    assert min(rs.d) == 1
    assert len(set(rs.posroots)) == len(rs.posroots)
    # half-sum of positive roots equals the sum of fundamental weights
    half_sum = [sum(Fraction(b[j]) for b in rs.posroots) / 2 for j in range(n)]
    assert rs.from_root_coords(half_sum) == rs.rho


@pytest.mark.parametrize("label", sorted(SYSTEMS))
def test_simple_reflections_permute_roots(label):
    rs = SYSTEMS[label]
    roots = set(rs.posroots)
    for beta in rs.posroots:
        for i in range(rs.rank):
            img = rs.to_root_coords(rs.reflect(rs.posroots[i], rs.root(beta)))
            img = tuple(int(x) for x in img)
            neg = tuple(-x for x in img)
            assert img in roots or neg in roots


# -- reflections -----------------------------------------------------------


def test_reflect_examples():
    a1 = build_root_system("A1")
    assert a1.reflect((1,), W(1)) == W(-1)
    a2 = build_root_system("A2")
    assert a2.reflect((1, 0), W(1, 0)) == W(1, 0) - a2.simple_root(0) == W(-1, 1)
    for rs in SYSTEMS.values():
        for beta in rs.posroots:
            assert rs.reflect(beta, Weight.zero(rs.rank)) == Weight.zero(rs.rank)


def test_reflect_rejects_non_roots():
    rs = build_root_system("A2")
    with pytest.raises(NotARootError):
        rs.reflect((2, 0), W(1, 0))
    with pytest.raises(NotARootError):
        rs.reflect((-1, 0), W(1, 0))


def test_reflect_torsion():
    a1 = build_root_system("A1")
    assert a1.reflect((1,), W(0, t=(half,))).torsion == (half,)
    a2 = build_root_system("A2")
    # s_2(alpha_1^vee / 2) = (alpha_1^vee + alpha_2^vee) / 2
    assert a2.reflect((0, 1), W(0, 0, t=(half, 0))).torsion == (half, half)
    assert a2.reflect((1, 0), W(0, 0, t=(half, 0))).torsion == (half, 0)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_reflection_is_involution_fixing_hyperplane(label, data):
    rs = SYSTEMS[label]
    lam = data.draw(weights(rs.rank, torsion=True))
    for beta in rs.posroots:
        once = rs.reflect(beta, lam)
        assert rs.reflect(beta, once) == lam
        if rs.coroot_pairing(lam, beta) == 0:
            assert once.real == lam.real


# -- Weyl group ------------------------------------------------------------


@pytest.mark.parametrize("label,order", [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A1xA1", 4), ("A3", 24), ("C3", 48)])
def test_weyl_group_orders(label, order):
    rs = SYSTEMS[label]
    elems = rs.weyl_elements()
    assert len(elems) == order == rs.weyl_order()
    keys = {w.matrix for w in elems}
    assert rs.identity_element().matrix in keys
    gens = [rs.simple_reflection(i) for i in range(rs.rank)]
    assert all((s @ w).matrix in keys for s in gens for w in elems)


def test_weyl_order_from_exponents_large_types():
    assert build_root_system("E8").weyl_order() == 696729600
    assert build_root_system("F4").weyl_order() == 1152


def test_enumeration_cap():
    with pytest.raises(EnumerationLimitError):
        build_root_system("E8").weyl_elements()
    with pytest.raises(EnumerationLimitError):
        build_root_system("A3").weyl_elements(cap=10)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("CHARCALC_CAP", "5")
    with pytest.raises(EnumerationLimitError):
        build_root_system("A2").weyl_elements()


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_simple_reflection_elements_match_reflect(label):
    rs = SYSTEMS[label]
    lam = W(Fraction(1, 3), -2, t=(half, Fraction(1, 4)))
    for i in range(rs.rank):
        assert rs.simple_reflection(i).act(lam) == rs.reflect(rs.posroots[i], lam)


def test_signs_are_determinants():
    rs = SYSTEMS["B2"]
    for w in rs.weyl_elements():
        (a, b), (c, d) = w.matrix
        assert a * d - b * c == w.sign


# -- shifted action and linkage -------------------------------------------


def test_shifted_action_examples():
    a1 = build_root_system("A1")
    s = a1.simple_reflection(0)
    zero = (0,)
    assert a1.shifted_action(ExtWeylElement(zero, s), W(0)) == W(-2) == -a1.simple_root(0)
    a2 = build_root_system("A2")
    lam = W(1, 1)
    got = a2.shifted_action(ExtWeylElement((0, 0), a2.simple_reflection(0)), lam)
    assert got == a2.reflect((1, 0), lam + a2.rho) - a2.rho == W(-3, 3)
    for rs in SYSTEMS.values():
        e = ExtWeylElement((0,) * rs.rank, rs.identity_element())
        assert rs.shifted_action(e, W(*([Fraction(2, 3)] * rs.rank))) == W(*([Fraction(2, 3)] * rs.rank))


def test_shifted_action_adds_zeta():
    a1 = build_root_system("A1")
    got = a1.shifted_action(ExtWeylElement((half,), a1.identity_element()), W(3))
    assert got == W(3, t=(half,))


def test_ext_weyl_rejects_non_two_torsion():
    rs = build_root_system("A1")
    with pytest.raises(ValueError):
        ExtWeylElement((Fraction(1, 3),), rs.identity_element())


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
@given(data=st.data())
@settings(max_examples=25, deadline=None)
def test_extended_group_law_is_compatible_with_action(label, data):
    rs = SYSTEMS[label]
    elems = rs.extended_weyl_elements()
    g = data.draw(st.sampled_from(elems))
    h = data.draw(st.sampled_from(elems))
    lam = data.draw(weights(rs.rank, torsion=True))
    assert rs.shifted_action(g * h, lam) == rs.shifted_action(g, rs.shifted_action(h, lam))


def test_linkage_examples():
    a1 = build_root_system("A1")
    assert a1.are_linked(W(0), W(-2))
    assert not a1.are_linked(W(0), W(1))
    # brute-force orbit of 0 under the extended group
    orbit = a1.linkage_orbit(W(0))
    assert W(1) not in orbit and W(-2) in orbit
    assert set(orbit) == {W(0), W(-2), W(0, t=(half,)), W(-2, t=(half,))}
    for rs in SYSTEMS.values():
        lam = W(*([Fraction(1, 2)] * rs.rank))
        assert rs.are_linked(lam, lam)


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
@given(data=st.data())
@settings(max_examples=25, deadline=None)
def test_linkage_matches_orbit_and_is_equivalence(label, data):
    rs = SYSTEMS[label]
    lam = data.draw(weights(rs.rank, torsion=True, max_num=4))
    orbit = rs.linkage_orbit(lam)
    mu = data.draw(st.sampled_from(orbit))
    nu = data.draw(st.sampled_from(rs.linkage_orbit(mu)))
    other = data.draw(weights(rs.rank, torsion=True, max_num=4))
    assert rs.are_linked(lam, mu) and rs.are_linked(mu, lam)
    assert rs.are_linked(lam, nu)
    assert rs.are_linked(lam, other) == (other in orbit)
    assert set(rs.linkage_orbit(mu)) == set(orbit)


# -- partial order and dominance -------------------------------------------


def test_leq_examples():
    a1 = build_root_system("A1")
    assert a1.leq(W(0), a1.simple_root(0))
    assert not a1.leq(W(0), W(1))
    a2 = build_root_system("A2")
    assert a2.to_root_coords(W(-1, 1)) == (Fraction(-1, 3), Fraction(1, 3))
    assert not a2.leq(W(1, 0), W(0, 1))
    assert not a1.leq(W(0), W(2, t=(half,)))


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
@given(data=st.data())
@settings(max_examples=50, deadline=None)
def test_leq_is_partial_order(label, data):
    rs = SYSTEMS[label]
    a, b, c = (data.draw(integral_weights(rs.rank, 3)) for _ in range(3))
    assert rs.leq(a, a)
    if rs.leq(a, b) and rs.leq(b, a):
        assert a == b
    if rs.leq(a, b) and rs.leq(b, c):
        assert rs.leq(a, c)
    # chains through simple roots are always comparable
    assert rs.leq(a - rs.simple_root(0), a)


def test_dominance_predicates():
    a1 = build_root_system("A1")
    assert a1.is_dominant_integral(W(1)) and a1.is_in_Pq_plus(W(1))
    assert not a1.is_dominant_integral(W(-1)) and not a1.is_in_Pq_plus(W(-1))
    twisted = W(1, t=(half,))
    assert not a1.is_dominant_integral(twisted)
    assert a1.is_in_Pq_plus(twisted)
    # 2t must pair integrally with alpha: t = 1/4 gives q^(w, alpha) = -1
    assert a1.is_in_Pq_plus(W(0, t=(Fraction(1, 4),)))
    assert not a1.is_in_Pq_plus(W(0, t=(Fraction(1, 3),)))
    assert not a1.is_in_Pq_plus(W(half))


def test_torsion_groups_a2():
    a2 = build_root_system("A2")
    assert len(a2.Yq_elements()) == 4
    assert all(a2.is_in_Xq(t) for t in a2.Yq_elements())
    # 2t in the coweight lattice: t = (1/3, 2/3) gives 2t.A = (0, 2)
    assert a2.is_in_Xq((Fraction(1, 3), Fraction(2, 3)))
    assert not a2.is_in_Xq((Fraction(1, 3), 0))


# -- weight syntax -----------------------------------------------------------


def test_weight_parsing_round_trip():
    w = parse_weight("1/2,-3;1/2,0")
    assert w == W(half, -3, t=(half, 0))
    assert format_weight(w) == "1/2,-3;1/2,0"
    assert parse_weight("0", 3) == W(0, 0, 0)
    assert parse_weight("2;5/4") == W(2, t=(Fraction(1, 4),))
    assert format_weight(W(2)) == "2"


@pytest.mark.parametrize("text", ["0.5", "1,a", "1/0x", "1/0", "", "1;1,2"])
def test_weight_parse_errors(text):
    with pytest.raises(ParseError):
        parse_weight(text)


def test_weight_rank_checked():
    with pytest.raises(ParseError):
        parse_weight("1,2", 3)


def test_weights_reject_floats():
    with pytest.raises(TypeError):
        Weight((0.5,))


def test_dominant_box():
    rs = build_root_system("A2")
    box = rs.dominant_weights_box(1)
    assert set(box) == {W(*c) for c in product(range(2), repeat=2)}
