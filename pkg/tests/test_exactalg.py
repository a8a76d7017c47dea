from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from momentlab.errors import (
    BadConstantTerm,
    CompositionConstantTerm,
    NonInvertibleConstantTerm,
    NotExactlyDivisible,
    NotReversible,
)
from momentlab.exactalg import (
    MultiPoly,
    Symbol,
    TruncatedSeries,
    a,
    c,
    det_bareiss,
    det_cofactor,
    det_exact,
    lam,
    parse_rational,
    format_rational,
    x,
)
from momentlab.exactalg.det import det_laplace_naive
from momentlab.serialize import value_from_json, value_to_json

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def polys(draw, max_terms=4):
    gens = [a(0), a(1), lam(1), c(2), x()]
    p = MultiPoly(0)
    for _ in range(draw(st.integers(0, max_terms))):
        term = MultiPoly(draw(rationals))
        for g in gens:
            term = term * g ** draw(st.integers(0, 2))
        p = p + term
    return p


def series_of(coeffs):
    return TruncatedSeries(list(coeffs))


# -- rationals ----------------------------------------------------------------

def test_parse_rational_accepts_exact_forms():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-7") == -7
    assert type(parse_rational("4/2")) is int
    assert parse_rational("0.25") == Fraction(1, 4)  # decimal strings are exact


@pytest.mark.parametrize("bad", [0.5, True, "1/2/3", "x"])
def test_parse_rational_rejects_inexact(bad):
    with pytest.raises((TypeError, ValueError)):
        parse_rational(bad)


def test_format_rational_round_trip():
    for q in (Fraction(-3, 7), 0, 12, Fraction(5, 1)):
        assert parse_rational(format_rational(q)) == q


# -- polynomials --------------------------------------------------------------

@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0
    assert p * 1 == p


@given(polys(), polys())
@settings(max_examples=60, deadline=None)
def test_exact_division_inverts_multiplication(p, q):
    if q == 0:
        return
    assert (p * q).exact_div(q) == p


def test_exact_division_refuses_remainders():
    with pytest.raises(NotExactlyDivisible):
        (a(0) ** 2 + 1).exact_div(a(0))


def test_polynomial_printing_is_canonical():
    p = c(1) ** 2 - c(2) ** 2
    assert str(p) == "c1^2 - c2^2"
    assert str(lam(1) * a(1) - a(0) * lam(1)) == str(-(a(0) * lam(1)) + a(1) * lam(1))


def test_constants_compare_with_scalars():
    assert MultiPoly(Fraction(3, 1)) == 3
    assert hash(MultiPoly(3)) == hash(3)
    assert MultiPoly(0) == 0


def test_symbol_parse_round_trip():
    for s in ("a0", "lambda3", "c12", "kappa2", "x", "t"):
        assert str(Symbol.parse(s)) == s
    with pytest.raises(ValueError):
        Symbol.parse("lambda0")


def test_subs_evaluates():
    p = a(0) * lam(1) + 2 * x() ** 2
    assert p.subs({Symbol.parse("a0"): 3, Symbol.parse("lambda1"): Fraction(1, 3),
                   Symbol.parse("x"): 1}) == 3


@given(polys())
@settings(max_examples=40, deadline=None)
def test_poly_json_round_trip(p):
    assert value_from_json(value_to_json(p)) == p


# -- series -------------------------------------------------------------------

def test_reciprocal_of_one_minus_z():
    s = series_of([1, -1, 0, 0, 0, 0])
    assert list(s.reciprocal()) == [1] * 6


def test_reciprocal_needs_unit_constant():
    with pytest.raises(NonInvertibleConstantTerm):
        series_of([0, 1, 2]).reciprocal()


def test_binary_ops_use_smaller_order():
    s = series_of([1, 2, 3, 4]) + series_of([1, 1])
    assert s.order == 1


def test_compose_requires_zero_constant():
    with pytest.raises(CompositionConstantTerm):
        series_of([1, 1, 1]).compose(series_of([1, 1, 0]))


def test_reverse_of_catalan_relation():
    # z - z^2 reverses to the Catalan generating function times z
    rev = series_of([0, 1, -1, 0, 0, 0, 0, 0]).reverse()
    assert list(rev) == [0, 1, 1, 2, 5, 14, 42, 132]


def test_reverse_needs_linear_term():
    with pytest.raises(NotReversible):
        series_of([0, 0, 1, 1]).reverse()


def test_log_needs_unit_constant():
    with pytest.raises(BadConstantTerm):
        series_of([2, 1, 0]).log()


def test_exp_of_z_is_exponential():
    e = series_of([0, 1, 0, 0, 0, 0]).exp()
    assert list(e) == [Fraction(1, 1), 1, Fraction(1, 2), Fraction(1, 6),
                       Fraction(1, 24), Fraction(1, 120)]


@given(st.lists(rationals, min_size=2, max_size=9))
@settings(max_examples=60, deadline=None)
def test_reverse_is_compositional_inverse(tail):
    if tail[0] == 0:
        tail[0] = 1
    f = series_of([0] + tail)
    g = f.reverse()
    ident = [0, 1] + [0] * (f.order - 1)
    assert list(f.compose(g)) == ident
    assert list(g.compose(f)) == ident


@given(st.lists(rationals, min_size=1, max_size=9))
@settings(max_examples=60, deadline=None)
def test_log_exp_inverse(tail):
    s = series_of([1] + tail)
    assert s.log().exp() == s
    z = series_of([0] + tail)
    assert z.exp().log() == z


@given(st.lists(rationals, min_size=1, max_size=7), st.integers(-3, 4))
@settings(max_examples=40, deadline=None)
def test_integer_powers(tail, k):
    s = series_of([1] + tail)
    expect = series_of([1] + [0] * len(tail))
    base = s if k >= 0 else s.reciprocal()
    for _ in range(abs(k)):
        expect = expect * base
    assert s ** k == expect


def test_symbolic_series_json_round_trip():
    s = TruncatedSeries([1, a(0), a(0) * lam(1) + 1])
    assert TruncatedSeries.from_json(s.to_json()) == s


# -- determinants -------------------------------------------------------------

square = st.integers(0, 4).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n))


def test_empty_determinant_is_one():
    assert det_exact([]) == 1


@given(square)
@settings(max_examples=80, deadline=None)
def test_det_routes_agree_on_rationals(m):
    ref = det_laplace_naive(m)
    assert det_bareiss(m) == ref
    assert det_cofactor(m) == ref
    assert det_exact(m) == ref


def test_bareiss_handles_zero_pivot():
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[0, 0], [1, 1]]) == 0


def test_symbolic_det_matches_naive_expansion():
    m = [[1, a(0), a(0) ** 2 + lam(1)],
         [a(0), a(0) ** 2 + lam(1), a(1)],
         [c(1), lam(1), x()]]
    ref = det_laplace_naive(m)
    assert det_cofactor(m) == ref
    assert det_bareiss(m) == ref


def test_symbolic_bareiss_beyond_cofactor_threshold():
    n = 6
    m = [[a(0) ** (i + j) + (1 if i == j else 0) for j in range(n)] for i in range(n)]
    assert det_bareiss(m) == det_cofactor(m)
