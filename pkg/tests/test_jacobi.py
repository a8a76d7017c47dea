from fractions import Fraction
from math import factorial

import pytest

from momentlab import catalog
from momentlab.errors import (
    IndexBeyondPrefix,
    InsufficientDepth,
    InsufficientMoments,
    SingularHankel,
)
from momentlab.exactalg import a, lam, x
from momentlab.jacobi import (
    JacobiParams,
    apply_functional,
    contfrac_series,
    hankel_delta,
    hankel_delta_tilde,
    jacobi_from_moments,
    moments_from_jacobi,
    orthogonality_check,
    orthopoly_determinant,
    orthopoly_recurrence,
)
from momentlab.transforms import MomentSeq

CATALAN = [1, 1, 2, 5, 14, 42, 132]


def double_factorial_moments(order):
    vals = []
    for n in range(order + 1):
        if n % 2:
            vals.append(0)
        else:
            v = 1
            for k in range(n - 1, 0, -2):
                v *= k
            vals.append(v)
    return vals


def test_symbolic_low_moments():
    j = JacobiParams.symbolic(3)
    m = moments_from_jacobi(j, 4)
    assert m[1] == a(0)
    assert m[2] == a(0) ** 2 + lam(1)
    assert m[3] == a(0) ** 3 + 2 * a(0) * lam(1) + a(1) * lam(1)


def test_matrix_route_agrees_with_paths():
    j = JacobiParams.symbolic(4)
    assert moments_from_jacobi(j, 7, "matrix") == moments_from_jacobi(j, 7, "paths")


def test_catalog_oracles():
    assert list(catalog.semicircle(12).values) == [
        CATALAN[n // 2] if n % 2 == 0 else 0 for n in range(13)]
    assert list(catalog.gaussian_hermite(10).values) == double_factorial_moments(10)


def test_gaussian_jacobi_parameters():
    j = jacobi_from_moments(MomentSeq(tuple(double_factorial_moments(8))))
    assert j.a == (0, 0, 0, 0)
    assert j.lam == (1, 2, 3)


def test_jacobi_count_from_order():
    j = jacobi_from_moments(catalog.semicircle(6))
    assert len(j.a) == 3 and len(j.lam) == 2


def test_point_mass_is_singular():
    with pytest.raises(SingularHankel) as err:
        jacobi_from_moments(catalog.point_mass(6, 2))
    assert err.value.k == 1
    assert err.value.payload()["k"] == 1


def test_symbolic_round_trip():
    j = JacobiParams.symbolic(4)
    assert jacobi_from_moments(moments_from_jacobi(j, 7)) == j


def test_rational_round_trip():
    j = JacobiParams((Fraction(1, 2), -3, 0, 2), (Fraction(2, 3), 5, Fraction(1, 7)))
    assert jacobi_from_moments(moments_from_jacobi(j, 7)) == j


def test_delta_two_is_lambda_squared_times_lambda():
    m = moments_from_jacobi(JacobiParams.symbolic(3), 4)
    assert hankel_delta(m, 2) == lam(1) ** 2 * lam(2)


def test_delta_tilde_conventions():
    m = moments_from_jacobi(JacobiParams.symbolic(2), 2)
    # tilde Delta_0 is the 1x1 minor mu_1
    assert hankel_delta_tilde(m, 0) == a(0)


def test_reach_is_checked():
    with pytest.raises(IndexBeyondPrefix):
        moments_from_jacobi(JacobiParams((0,), ()), 2)


# -- orthogonal polynomials ---------------------------------------------------

def test_hermite_polynomials():
    j = jacobi_from_moments(catalog.gaussian_hermite(9))
    P = orthopoly_recurrence(j, 4)
    X = x()
    assert P[2] == X ** 2 - 1
    assert P[3] == X ** 3 - 3 * X
    assert P[4] == X ** 4 - 6 * X ** 2 + 3


def test_symbolic_second_polynomial():
    P = orthopoly_recurrence(JacobiParams.symbolic(3), 2)
    X = x()
    assert P[2] == (X - a(1)) * (X - a(0)) - lam(1)


@pytest.mark.parametrize("n", range(4))
def test_recurrence_equals_determinant_symbolic(n):
    j = JacobiParams.symbolic(n + 1)
    m = moments_from_jacobi(j, 2 * n)
    assert orthopoly_recurrence(j, n)[n] == orthopoly_determinant(m, n)


@pytest.mark.parametrize("n", range(7))
def test_recurrence_equals_determinant_numeric(n):
    j = JacobiParams(tuple(Fraction(k, 3) - 1 for k in range(n + 1)),
                     tuple(Fraction(k + 1, 2) for k in range(1, n + 1)))
    m = moments_from_jacobi(j, 2 * n)
    assert orthopoly_recurrence(j, n)[n] == orthopoly_determinant(m, n)


def test_determinant_route_needs_moments():
    with pytest.raises(InsufficientMoments):
        orthopoly_determinant(catalog.semicircle(4), 3)


@pytest.mark.parametrize("name,lam_of,norm", [
    ("hermite", lambda k: k, factorial),
    ("semicircle", lambda k: 1, lambda n: 1),
])
def test_orthogonality_norms(name, lam_of, norm):
    d = 6
    j = JacobiParams((0,) * (d + 1), tuple(lam_of(k) for k in range(1, d + 1)))
    m = moments_from_jacobi(j, 2 * d)
    rep = orthogonality_check(m, orthopoly_recurrence(j, d), d)
    assert rep.ok, rep.first_failure
    assert rep.norms == [norm(n) for n in range(d + 1)]


def test_orthogonality_catches_wrong_polynomials():
    m = catalog.semicircle(6)
    polys = [x() ** k for k in range(4)]
    rep = orthogonality_check(m, polys, 3)
    assert not rep.ok
    assert rep.first_failure[0] in ("norm", "offdiagonal")


def test_apply_functional():
    m = catalog.gaussian_hermite(4)
    assert apply_functional(m, x() ** 4 - 2 * x() ** 2 + 5) == 3 - 2 + 5


# -- continued fractions ------------------------------------------------------

def test_contfrac_catalan():
    M = contfrac_series(JacobiParams.constant(0, 1, 5), 5, 8)
    assert list(M) == [1, 0, 1, 0, 2, 0, 5, 0, 14]


def test_contfrac_depth_too_small():
    with pytest.raises(InsufficientDepth):
        contfrac_series(JacobiParams.constant(0, 1, 4), 4, 8)


def test_contfrac_matches_moments_symbolically():
    j = JacobiParams.symbolic(4)
    M = contfrac_series(j, 4, 7)
    m = moments_from_jacobi(j, 7)
    assert list(M) == list(m.values)


def test_contfrac_H_and_M():
    j = JacobiParams.symbolic(4)
    M = contfrac_series(j, 4, 7, "M")
    H = contfrac_series(j, 4, 7, "H")
    assert (1 - H).reciprocal() == M
