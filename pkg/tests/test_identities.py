from fractions import Fraction
from itertools import combinations, permutations

import pytest

from momentlab.errors import BadOrder, ExplosionGuard
from momentlab.exactalg import MultiPoly, a, c, lam
from momentlab.identities import (
    HankelMinorSpec,
    boolean_from_paths,
    free_cumulant_motzkin,
    free_cumulant_motzkin_terms,
    hankel_minor_det,
    hankel_minor_gv,
    no_cancellation_check,
    permutation_sign,
)
from momentlab.jacobi import JacobiParams, contfrac_series, moments_from_jacobi
from momentlab.paths import LukasFree
from momentlab.transforms import (
    CumulantKind,
    boolean_from_moments,
    free_from_boolean,
    free_from_moments,
    moments_from_free,
    symbolic_cumulants,
)


def symbolic(n):
    return JacobiParams.symbolic(n // 2 + 1)


@pytest.mark.parametrize("n", range(2, 8))
def test_motzkin_formula_matches_lagrange(n):
    j = symbolic(n)
    assert free_cumulant_motzkin(j, n) == free_from_moments(moments_from_jacobi(j, n))[n]


def test_c2_ledger():
    terms = free_cumulant_motzkin_terms(symbolic(2), 2)
    ledger = {str(t.path): (t.returns, t.coefficient, t.value) for t in terms}
    assert ledger["0,1,0"] == (1, 1, lam(1))
    # two returns and C(1, 2) = 0: the horizontal path drops out
    assert ledger["0,0,0"] == (2, 0, 0)
    assert free_cumulant_motzkin(symbolic(2), 2) == lam(1)


def test_c3_ledger():
    terms = free_cumulant_motzkin_terms(symbolic(3), 3)
    ledger = {str(t.path): (t.returns, t.coefficient, t.value) for t in terms}
    assert ledger == {
        "0,1,1,0": (1, 1, a(1) * lam(1)),
        "0,1,0,0": (2, Fraction(-1, 2), -a(0) * lam(1) / 2),
        "0,0,1,0": (2, Fraction(-1, 2), -a(0) * lam(1) / 2),
        "0,0,0,0": (3, 0, 0),
    }
    assert free_cumulant_motzkin(symbolic(3), 3) == lam(1) * (a(1) - a(0))


def test_motzkin_formula_needs_n_at_least_two():
    with pytest.raises(BadOrder):
        free_cumulant_motzkin(symbolic(2), 1)


def test_motzkin_formula_on_rational_parameters():
    j = JacobiParams((0, 0, 0, 0), (1, 1, 1))
    assert [free_cumulant_motzkin(j, n) for n in range(2, 8)] == [1, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("n", range(2, 8))
def test_sign_coherence(n):
    report = no_cancellation_check(n)
    assert report.ok, (report.violations, report.returns_mismatches)
    assert 0 not in report.monomial_signs.values()


def test_sign_report_for_c3():
    assert no_cancellation_check(3).monomial_signs == {"a1*lambda1": 1, "a0*lambda1": -1}


# -- boolean cumulants --------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_boolean_triangle(n):
    j = JacobiParams.symbolic(n // 2 + 1)
    depth = n // 2 + 1
    H = contfrac_series(j, depth, n, "H")
    h = boolean_from_moments(moments_from_jacobi(j, n))
    assert boolean_from_paths(j, n) == H[n] == h[n]


def test_free_from_boolean_reproduces_motzkin_formula():
    j = JacobiParams.symbolic(4)
    hb = boolean_from_moments(moments_from_jacobi(j, 7))
    c = free_from_boolean(hb, 7)
    for n in range(2, 8):
        assert c[n] == free_cumulant_motzkin(j, n)


# -- Hankel minors ------------------------------------------------------------

def all_specs(bound):
    for p in range(1, bound + 2):
        for rows in combinations(range(bound + 1), p):
            for cols in combinations(range(bound + 1), p):
                yield HankelMinorSpec(rows, cols)


MOTZ = JacobiParams.symbolic(4)
MOTZ_M = moments_from_jacobi(MOTZ, 6)
LUK = LukasFree.symbolic(6)
LUK_M = moments_from_free(symbolic_cumulants(CumulantKind.FREE, 6))


@pytest.mark.parametrize("spec", list(all_specs(3)), ids=str)
def test_gv_equals_det_motzkin(spec):
    assert hankel_minor_gv(MOTZ, spec).value == hankel_minor_det(MOTZ_M, spec)


@pytest.mark.parametrize("spec", list(all_specs(3)), ids=str)
def test_gv_equals_det_lukasiewicz(spec):
    assert hankel_minor_gv(LUK, spec).value == hankel_minor_det(LUK_M, spec)


@pytest.mark.parametrize("n", range(6))
def test_delta_product(n):
    j = JacobiParams.symbolic(n + 1)
    m = moments_from_jacobi(j, 2 * n)
    expect = MultiPoly(1)
    for k in range(1, n + 1):
        expect = expect * lam(k) ** (n + 1 - k)
    assert hankel_minor_det(m, HankelMinorSpec.delta(n)) == expect


@pytest.mark.parametrize("n", range(5))
def test_delta_has_single_configuration(n):
    res = hankel_minor_gv(JacobiParams.symbolic(n + 1), HankelMinorSpec.delta(n))
    assert len(res.configurations) == 1
    assert res.configurations[0].perm == tuple(range(n + 1))


def test_one_by_one_minor():
    res = hankel_minor_gv(MOTZ, HankelMinorSpec((1,), (1,)))
    assert res.value == a(0) ** 2 + lam(1)
    assert all(cfg.sign == 1 for cfg in res.configurations)


def test_empty_minor_is_one():
    assert hankel_minor_gv(MOTZ, HankelMinorSpec((), ())).value == 1


def test_pictured_cancelling_pair():
    # the pictured pair of Lukasiewicz configurations lives in H(0,1,2;1,2,3)
    res = hankel_minor_gv(LUK, HankelMinorSpec((0, 1, 2), (1, 2, 3)))
    target = c(1) ** 2 * c(2) ** 2 * c(3)
    hits = [(cfg.sign, [str(p) for p in cfg.paths])
            for cfg in res.configurations if cfg.weight == target]
    assert (-1, ["0,0", "0,1,2,2,0", "0,1,2,1,0"]) in hits
    assert (1, ["0,1,1,0", "0,1,0", "0,1,2,2,0"]) in hits
    # the other configurations with this weight leave a net coefficient of 2
    assert sum(sign for sign, _ in hits) == 2
    assert res.value == hankel_minor_det(LUK_M, res.spec)


def test_pair_weight_absent_from_tilde_delta_two():
    res = hankel_minor_gv(LUK, HankelMinorSpec((0, 1, 2), (0, 1, 3)))
    target = c(1) ** 2 * c(2) ** 2 * c(3)
    assert not [cfg for cfg in res.configurations if cfg.weight == target]
    assert len(res.configurations) == 19


def test_configurations_are_vertex_disjoint():
    spec = HankelMinorSpec((0, 1, 2), (0, 1, 3))
    res = hankel_minor_gv(LUK, spec)
    for cfg in res.configurations:
        seen = set()
        for k, p in enumerate(cfg.paths):
            verts = set(p.vertices(-spec.rows[k]))
            assert not verts & seen
            seen |= verts


def test_explosion_guard(monkeypatch):
    monkeypatch.setenv("MOMENTLAB_MAX_CONFIGS", "5")
    with pytest.raises(ExplosionGuard) as err:
        hankel_minor_gv(LUK, HankelMinorSpec((0, 1, 2), (1, 2, 3)))
    assert err.value.payload()["limit"] == 5


def test_spec_validation():
    with pytest.raises(ValueError):
        HankelMinorSpec((0, 1), (1,))
    with pytest.raises(ValueError):
        HankelMinorSpec((1, 0), (0, 1))
    assert str(HankelMinorSpec.delta_tilde(2)) == "H(0,1,2;0,1,3)"


def test_permutation_sign_against_inversions():
    for perm in permutations(range(5)):
        inv = sum(1 for i in range(5) for k in range(i + 1, 5) if perm[i] > perm[k])
        assert permutation_sign(perm) == (-1) ** inv
