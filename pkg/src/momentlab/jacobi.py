"""Jacobi parameters, orthogonal polynomials and continued fractions.

Conventions: ``a`` holds a_0, a_1, ...; ``lam`` holds λ_1, λ_2, ... (λ_0 = 0
is never stored).  Some texts write α_n for a_n; only ``a`` is used here.
Hankel determinants use Δ_{-1} = 1 and the bordered Δ̃_{-1} = 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    IndexBeyondPrefix,
    InsufficientDepth,
    InsufficientMoments,
    SingularHankel,
)
from .exactalg.det import det_exact
from .exactalg.poly import Family, MultiPoly, a as _a, lam as _lam, x as _x, Symbol
from .exactalg.rational import is_scalar, normalize
from .exactalg.series import TruncatedSeries
from .paths import MotzkinFlajolet, path_sum
from .transforms import MomentSeq

__all__ = [
    "JacobiParams", "moments_from_jacobi", "jacobi_from_moments",
    "hankel_minor", "hankel_delta", "hankel_delta_tilde",
    "orthopoly_recurrence", "orthopoly_determinant",
    "OrthogonalityReport", "orthogonality_check", "contfrac_series",
]

X = Symbol(Family.X)


def _norm(v):
    return normalize(v) if is_scalar(v) else v


@dataclass(frozen=True)
class JacobiParams:
    a: tuple
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(_norm(v) for v in self.a))
        object.__setattr__(self, "lam", tuple(_norm(v) for v in self.lam))

    @classmethod
    def symbolic(cls, size):
        """a_0..a_{size-1} and λ_1..λ_{size-1}."""
        return cls(tuple(_a(i) for i in range(size)),
                   tuple(_lam(i) for i in range(1, size)))

    @classmethod
    def constant(cls, a_value, lam_value, size):
        return cls((a_value,) * size, (lam_value,) * (size - 1))

    def get_a(self, n):
        if not 0 <= n < len(self.a):
            raise IndexBeyondPrefix("a", n, len(self.a))
        return self.a[n]

    def get_lam(self, n):
        if n == 0:
            return 0
        if not 1 <= n <= len(self.lam):
            raise IndexBeyondPrefix("lambda", n, len(self.lam))
        return self.lam[n - 1]

    def scheme(self):
        return MotzkinFlajolet(self.a, self.lam)

    def check_reach(self, n_max):
        """Paths of length <= n_max need a_y for y <= (n-1)//2, λ_y for y <= n//2."""
        if n_max >= 1:
            self.get_a((n_max - 1) // 2)
        if n_max >= 2:
            self.get_lam(n_max // 2)


def moments_from_jacobi(j, n_max, method="paths"):
    """Moments mu_0..mu_{n_max}, as Motzkin path sums or (J^n)_{00}."""
    j.check_reach(n_max)
    if method == "paths":
        scheme = j.scheme()
        return MomentSeq((1,) + tuple(path_sum(n, scheme) for n in range(1, n_max + 1)))
    if method == "matrix":
        return MomentSeq(_matrix_power_moments(j, n_max))
    raise ValueError(f"unknown method {method!r}")


def _jacobi_matrix(j, d):
    def entry(r, s):
        if s == r + 1:
            return 1
        if s == r:
            return j.a[r] if r < len(j.a) else 0
        if s == r - 1:
            return j.lam[r - 1] if r - 1 < len(j.lam) else 0
        return 0
    # entries not present in the prefix are unreachable from e_0 within n_max steps
    return [[entry(r, s) for s in range(d)] for r in range(d)]


def _matrix_power_moments(j, n_max):
    d = n_max // 2 + 1
    J = _jacobi_matrix(j, d)
    row = [1] + [0] * (d - 1)  # e_0^T J^k
    out = [1]
    for _ in range(n_max):
        nxt = [0] * d
        for r, w in enumerate(row):
            if w == 0:
                continue
            for s in range(d):
                if J[r][s] != 0:
                    nxt[s] = nxt[s] + w * J[r][s]
        row = nxt
        out.append(row[0])
    return tuple(out)


# -- Hankel determinants ---------------------------------------------------------

def hankel_minor(m, rows, cols):
    """det [mu_{i+j}] for i in rows, j in cols."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    if rows and max(rows) + max(cols) > m.order:
        raise InsufficientMoments(
            f"minor needs mu_{max(rows) + max(cols)} but only mu_0..mu_{m.order} given")
    return det_exact([[m[i + jj] for jj in cols] for i in rows])


def hankel_delta(m, n):
    if n < 0:
        return 1
    return hankel_minor(m, range(n + 1), range(n + 1))


def hankel_delta_tilde(m, n):
    if n < 0:
        return 0
    return hankel_minor(m, range(n + 1), list(range(n)) + [n + 1])


def _divide(p, q):
    if isinstance(p, MultiPoly) or isinstance(q, MultiPoly):
        return MultiPoly(p) / q if not isinstance(p, MultiPoly) else p / q
    return normalize(Fraction(p) / q)


def jacobi_from_moments(m):
    """Jacobi parameters a_0..a_K, λ_1..λ_K with K = (N-1)//2.

    λ_n = Δ_{n-2} Δ_n / Δ_{n-1}^2 and a_n = Δ̃_n/Δ_n - Δ̃_{n-1}/Δ_{n-1}.
    """
    n_top = m.order
    if n_top < 1:
        return JacobiParams((), ())
    K = (n_top - 1) // 2
    delta = {-1: 1}
    tilde = {-1: 0}
    for k in range(K + 1):
        delta[k] = hankel_delta(m, k)
        if delta[k] == 0:
            raise SingularHankel(k)
        tilde[k] = hankel_delta_tilde(m, k)
    ratio = {k: _divide(tilde[k], delta[k]) for k in range(-1, K + 1)}
    a = tuple(ratio[n] - ratio[n - 1] for n in range(K + 1))
    lam = tuple(_divide(delta[n - 2] * delta[n], delta[n - 1] ** 2) for n in range(1, K + 1))
    return JacobiParams(a, lam)


# -- orthogonal polynomials ------------------------------------------------------

def orthopoly_recurrence(j, n_max):
    """Monic P_0..P_{n_max} from x P_n = P_{n+1} + a_n P_n + λ_n P_{n-1}."""
    xs = _x()
    polys = [MultiPoly(1)]
    if n_max >= 1:
        polys.append(xs - j.get_a(0))
    for n in range(1, n_max):
        polys.append((xs - j.get_a(n)) * polys[n] - j.get_lam(n) * polys[n - 1])
    return polys


def orthopoly_determinant(m, n):
    """P_n = D_n(x) / Δ_{n-1}, with D_n the moment matrix bordered by 1, x, .., x^n."""
    if n == 0:
        return MultiPoly(1)
    if 2 * n - 1 > m.order:
        raise InsufficientMoments(f"P_{n} needs mu_0..mu_{2 * n - 1}")
    xs = _x()
    rows = [[m[i + k] for k in range(n + 1)] for i in range(n)]
    rows.append([xs ** k for k in range(n + 1)])
    D = det_exact(rows)
    prev = hankel_delta(m, n - 1)
    if prev == 0:
        raise SingularHankel(n - 1)
    return MultiPoly(D) / prev if not isinstance(D, MultiPoly) else D / prev


def apply_functional(m, p):
    """The moment functional x^k -> mu_k, extended linearly."""
    p = MultiPoly(p) if not isinstance(p, MultiPoly) else p
    total = 0
    for k, coef in p.coefficients_in(X).items():
        if k > m.order:
            raise InsufficientMoments(f"functional needs mu_{k}")
        cv = coef.constant_term() if coef.is_constant() else coef
        total = total + cv * m[k]
    return _norm(total) if is_scalar(total) else total


@dataclass
class OrthogonalityReport:
    norms: list
    expected_norms: list
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None


def orthogonality_check(m, polys, n_max, params=None):
    """Check mu(P_i P_j) = δ_ij s_i and s_n = λ_1 ... λ_n for i, j <= n_max.

    The λ's come from ``params`` when given, otherwise from the Hankel
    determinant formula on ``m``.
    """
    if 2 * n_max > m.order:
        raise InsufficientMoments(f"orthogonality to degree {n_max} needs mu_0..mu_{2 * n_max}")
    if params is not None:
        lams = [params.get_lam(k) for k in range(1, n_max + 1)]
    else:
        d = {k: hankel_delta(m, k) for k in range(-1, n_max + 1)}
        lams = []
        for k in range(1, n_max + 1):
            if d[k - 1] == 0:
                raise SingularHankel(k - 1)
            lams.append(_divide(d[k - 2] * d[k], d[k - 1] ** 2))
    expected = [1]
    for v in lams:
        expected.append(expected[-1] * v)
    report = OrthogonalityReport(norms=[], expected_norms=[_norm(v) if is_scalar(v) else v
                                                          for v in expected])
    for i in range(n_max + 1):
        for k in range(i, n_max + 1):
            val = apply_functional(m, polys[i] * polys[k])
            if i == k:
                report.norms.append(val)
                if val != expected[i]:
                    report.failures.append(("norm", i, k, val))
            elif val != 0:
                report.failures.append(("offdiagonal", i, k, val))
    return report


# -- continued fractions -----------------------------------------------------

def contfrac_series(j, depth, order, which="M"):
    """Bottom-up evaluation of the depth-``depth`` continued fraction.

    Depth d uses levels 0..d-1 (a_0..a_{d-1}, λ_1..λ_{d-1}); the result is
    exact through z^(2d-1).  ``which="H"`` returns
    a_0 z + λ_1 z^2 / (1 - a_1 z - λ_2 z^2 / ...).
    """
    if depth < 1:
        raise InsufficientDepth("depth must be at least 1")
    if order > 2 * depth - 1:
        raise InsufficientDepth(
            f"depth {depth} fixes coefficients only through z^{2 * depth - 1}")
    z = TruncatedSeries.variable(order)
    tail = (1 - z * j.get_a(depth - 1)).reciprocal()
    tails = {depth - 1: tail}
    for lev in range(depth - 2, -1, -1):
        tail = (1 - z * j.get_a(lev) - (z * z) * j.get_lam(lev + 1) * tail).reciprocal()
        tails[lev] = tail
    if which == "M":
        return tails[0]
    if which == "H":
        H = z * j.get_a(0)
        if depth > 1:
            H = H + (z * z) * j.get_lam(1) * tails[1]
        return H
    raise ValueError("which must be 'M' or 'H'")
