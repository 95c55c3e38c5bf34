"""Domains, monomial orders, weights, polynomial arithmetic, and parsing."""

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intclose import (GF, QQ, ZZ, Domain, DomainError, OrderError, Ring,
                      RingError, WeightError, format_poly, grevlex,
                      grevlex_over_weight, validate_weight_function,
                      weight_of, weight_over_grevlex)
from conftest import CURVES, curve_ring, make_curve


# ---------------------------------------------------------------------------
# domains


def test_rational_domain_reduces():
    assert QQ.convert(Fraction(4, 6)) == Fraction(2, 3)
    assert QQ.convert(Fraction(1, -3)) == Fraction(-1, 3)
    assert QQ.convert(Fraction(1, -3)).denominator == 3


def test_modp_canonical_range():
    F = GF(7)
    assert F.convert(-1) == 6
    assert F.convert(Fraction(1, 3)) == 5  # 3*5 = 15 = 1 mod 7
    with pytest.raises(DomainError):
        F.convert(Fraction(1, 7))


def test_division_errors():
    with pytest.raises(DomainError):
        QQ.div(Fraction(1), Fraction(0))
    with pytest.raises(DomainError):
        ZZ.div(3, 2)
    with pytest.raises(DomainError):
        GF(5).div(1, 0)


def test_modp_requires_prime():
    with pytest.raises(DomainError):
        Domain("MODP", 6)


# ---------------------------------------------------------------------------
# orders


def _grevlex_oracle(a, b):
    """Textbook grevlex: total degree, then smaller last differing exponent wins."""
    if sum(a) != sum(b):
        return -1 if sum(a) < sum(b) else 1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def test_grevlex_matches_textbook_oracle():
    order = grevlex(2)
    monos = [(i, j) for i in range(7) for j in range(7)]
    for a, b in product(monos, monos):
        assert order.cmp(a, b) == _grevlex_oracle(a, b)


def test_grevlex_three_vars_oracle():
    order = grevlex(3)
    monos = [m for m in product(range(4), repeat=3)]
    for a, b in product(monos, monos):
        assert order.cmp(a, b) == _grevlex_oracle(a, b)


def test_cmp_identity():
    order = weight_over_grevlex([[11, 6]], 2)
    assert order.cmp((2, 1), (2, 1)) == 0


def test_weight_tie_broken_toward_dependent_power():
    # y^6 and x^11 share weight 66; the dependent power must lead
    order = weight_over_grevlex([[11, 6]], 2)
    assert order.key((6, 0))[0] == order.key((0, 11))[0] == 66
    assert order.cmp((6, 0), (0, 11)) == 1


@settings(max_examples=200, deadline=None)
@given(st.tuples(*[st.integers(0, 8)] * 2), st.tuples(*[st.integers(0, 8)] * 2),
       st.tuples(*[st.integers(0, 8)] * 2))
def test_order_total_and_multiplicative(a, b, c):
    order = weight_over_grevlex([[5, 3]], 2)
    cmp_ab = order.cmp(a, b)
    if a != b:
        assert cmp_ab != 0
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert order.cmp(ac, bc) == cmp_ab


def test_grevlex_over_weight_output_ring():
    # six-variable output ring with induced weights 25,21,20,11,10,6
    w = [[25, 21, 20, 11, 10, 6]]
    order = grevlex_over_weight(w, 5, 6)
    assert len(order.rows) == 6
    # any monomial with two ybar factors beats any with one
    two = (1, 1, 0, 0, 0, 0)
    one_heavy = (0, 0, 1, 0, 0, 9)  # ybar3 * x^9, weight 74
    assert order.cmp(two, one_heavy) == 1
    # among linear monomials the dependent grevlex block decides first
    ybar4 = (0, 1, 0, 0, 0, 0)
    ybar3x2 = (0, 0, 1, 0, 0, 2)
    assert order.cmp(ybar4, ybar3x2) == 1


def test_order_matrices_complete_to_square():
    # tie rows are appended until the matrix is square and nonsingular,
    # dropping linearly dependent rows (a zero weight row contributes nothing)
    assert len(weight_over_grevlex([[0, 0]], 2).rows) == 2
    assert len(weight_over_grevlex([[11, 6]], 2).rows) == 2
    assert len(grevlex_over_weight([[25, 21, 20, 11, 10, 6]], 5, 6).rows) == 6
    assert len(grevlex_over_weight([[1, 2], [1, 2]], 1, 2).rows) == 2


def test_order_dimension_mismatch():
    order = grevlex(2)
    with pytest.raises(OrderError):
        order.key((1, 2, 3))


# ---------------------------------------------------------------------------
# weights


def test_weight_of_constant_is_zero_vector():
    ring, _ = make_curve("cusp")
    assert weight_of(ring.const(7)) == (0,)


def test_weight_of_cusp_tie():
    ring, f = make_curve("cusp")
    assert weight_of(ring.parse("y^3")) == (15,)
    assert weight_of(ring.parse("x^5")) == (15,)
    assert weight_of(f) == (15,)


def test_vector_weights():
    ring = Ring(("x", "y", "z"), 1, QQ,
                weight_over_grevlex([[3, 6, 6], [2, 6, 0]], 3),
                ((3, 6, 6), (2, 6, 0)))
    assert weight_of(ring.parse("x^6")) == (18, 12)
    assert weight_of(ring.parse("y^2*z")) == (18, 12)


def test_validate_weight_function_accepts_cusp():
    _, f = make_curve("cusp")
    ok, top = validate_weight_function(f)
    assert ok


def test_validate_weight_function_rejects_mixed_pair():
    ring = curve_ring((3, 2))
    f = ring.parse("y^3 - x^3*y - x")
    ok, top = validate_weight_function(f)
    assert not ok
    assert set(top) == {(3, 0), (1, 3)}  # includes the mixed monomial x^3 y


def test_validate_weight_function_vector_case():
    ring = Ring(("x", "y", "z"), 1, QQ,
                weight_over_grevlex([[3, 6, 6], [2, 6, 0]], 3),
                ((3, 6, 6), (2, 6, 0)))
    f = ring.parse("x^6 + x^3*z - y^2*z")
    ok, _ = validate_weight_function(f)
    assert ok


def test_validate_requires_monic():
    ring = curve_ring((3, 2))
    with pytest.raises(WeightError):
        validate_weight_function(ring.parse("2*y^2 - x"))


def test_weight_additivity_on_homogeneous_parts():
    ring, _ = make_curve("cusp")
    rng = random.Random(7)
    monos = [(i, j) for i in range(4) for j in range(4)]
    for _ in range(50):
        f = ring.monomial(rng.choice(monos), rng.randint(1, 9))
        g = ring.monomial(rng.choice(monos), rng.randint(1, 9))
        wf, wg = weight_of(f), weight_of(g)
        assert weight_of(f * g) == tuple(a + b for a, b in zip(wf, wg))


# ---------------------------------------------------------------------------
# polynomial arithmetic


def test_add_zero_is_identity():
    ring, f = make_curve("quadratic")
    assert f + ring.zero() == f


def test_sextic_expansion_has_tie_monomials():
    ring, f = make_curve("sextic")
    assert f.coeff_of((6, 0)) == Fraction(1)
    assert f.coeff_of((0, 11)) == Fraction(-27)
    assert f.lm == (6, 0)  # y^6 leads despite the weight tie with x^11
    assert f.degree_in(0) == 6


def test_mul_against_naive_convolution():
    ring, _ = make_curve("cusp")
    rng = random.Random(41)

    def random_poly():
        return ring.poly({(rng.randint(0, 5), rng.randint(0, 5)):
                          Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                          for _ in range(rng.randint(1, 6))})

    for _ in range(100):
        f, g = random_poly(), random_poly()
        expect = {}
        for mf, cf in f.terms:
            for mg, cg in g.terms:
                key = (mf[0] + mg[0], mf[1] + mg[1])
                expect[key] = expect.get(key, Fraction(0)) + cf * cg
        expect = {m: c for m, c in expect.items() if c}
        assert dict(((m, c) for m, c in (f * g).terms)) == expect


def test_power_and_scale():
    ring, _ = make_curve("quadratic")
    f = ring.parse("y - x")
    assert f ** 2 == ring.parse("y^2 - 2*y*x + x^2")
    assert f.scale(Fraction(3, 2)) == ring.parse("3/2*y - 3/2*x")
    assert (f ** 0) == ring.one()


def test_domain_mismatch_rejected():
    r1, f1 = make_curve("quadratic")
    r2, f2 = make_curve("quadratic", q=5)
    with pytest.raises(RingError):
        f1 + f2


def test_monic_and_divide_scalar():
    ring = curve_ring((3, 2))
    f = ring.parse("2*y^2 - 4*x")
    assert f.monic() == ring.parse("y^2 - 2*x")
    with pytest.raises(DomainError):
        f.divide_scalar(0)


# ---------------------------------------------------------------------------
# parse / print round trips


@pytest.mark.parametrize("name", sorted(CURVES))
def test_roundtrip_fixture_curves(name):
    ring, f = make_curve(name)
    assert ring.parse(format_poly(f)) == f


@pytest.mark.parametrize("name", sorted(CURVES))
def test_roundtrip_mod_q(name):
    ring, f = make_curve(name, q=13)
    assert ring.parse(format_poly(f)) == f


def test_parse_rejects_unknown_variable():
    ring = curve_ring((3, 2))
    with pytest.raises(Exception):
        ring.parse("y + z")


def test_parse_examples():
    ring = curve_ring((3, 2))
    assert ring.parse("3/4*y^2*x - 15/17*x^4 + 1") == ring.poly(
        {(2, 1): Fraction(3, 4), (0, 4): Fraction(-15, 17), (0, 0): Fraction(1)})
    assert format_poly(ring.parse("-y + 1")) == "-y + 1"
    assert format_poly(ring.zero()) == "0"


def test_balanced_modp_printing():
    ring = curve_ring((3, 2), GF(7))
    assert format_poly(ring.parse("6*y")) == "-y"
    assert format_poly(ring.parse("4*x")) == "-3*x"


def test_polynomials_are_immutable():
    ring, f = make_curve("quadratic")
    with pytest.raises(AttributeError):
        f.terms = ()
    with pytest.raises(Exception):
        ring.names = ("a", "b")


def test_monomial_quotient_requires_divisibility():
    from intclose.orders import mono_div, OrderError
    assert mono_div((3, 2), (1, 2)) == (2, 0)
    with pytest.raises(OrderError):
        mono_div((1, 2), (2, 0))


def test_weight_of_zero_polynomial_rejected():
    ring, _ = make_curve("cusp")
    with pytest.raises(WeightError):
        weight_of(ring.zero())


def test_standard_monomials_have_distinct_weights():
    # a weight function separates the standard monomials of S = R/(f)
    for name in ("cusp", "sextic", "octic", "trident"):
        ring, f = make_curve(name)
        d = f.degree_in(0)
        seen = {}
        for i in range(d):
            for e in range(40):
                w = weight_of(ring.monomial((i, e)))
                assert w not in seen, (name, (i, e), seen[w])
                seen[w] = (i, e)


@settings(max_examples=150, deadline=None)
@given(st.dictionaries(
    st.tuples(st.integers(0, 9), st.integers(0, 9)),
    st.fractions(min_value=-50, max_value=50),
    min_size=0, max_size=8))
def test_parser_printer_roundtrip_random(terms):
    ring = curve_ring((5, 3))
    f = ring.poly(terms)
    assert ring.parse(format_poly(f)) == f
