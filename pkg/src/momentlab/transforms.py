"""Conversions between moments and free, classical and boolean cumulants.

All routes go through truncated generating functions:

* free:      C(zM(z)) = M(z), with C(z) = 1 + sum c_n z^n
* classical: log(sum mu_n z^n / n!) = sum kappa_n z^n / n!
* boolean:   M(z) = 1 / (1 - H(z)),  H(z) = sum h_n z^n

Each inverse also has a second, independent route (lattice-path sums or
explicit compositions) selected by ``method``; the test-suite keeps both
routes in agreement.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import BadOrder
from .exactalg.poly import MultiPoly, Family, sym
from .exactalg.rational import is_scalar, normalize
from .exactalg.series import TruncatedSeries
from .paths import LukasClassical, LukasFree, path_sum

__all__ = [
    "CumulantKind", "MomentSeq", "CumulantSeq",
    "free_from_moments", "moments_from_free",
    "classical_from_moments", "moments_from_classical",
    "boolean_from_moments", "moments_from_boolean",
    "free_from_boolean", "compositions",
    "symbolic_moments", "symbolic_cumulants", "to_moments", "from_moments",
]


class CumulantKind(enum.Enum):
    FREE = "free"
    CLASSICAL = "classical"
    BOOLEAN = "boolean"


def _norm(v):
    return normalize(v) if is_scalar(v) else v


def _div(v, k):
    if isinstance(v, MultiPoly):
        return v / k
    return normalize(Fraction(v) / k)


@dataclass(frozen=True)
class MomentSeq:
    """Moments mu_0..mu_N with mu_0 = 1."""

    values: tuple

    def __post_init__(self):
        vals = tuple(_norm(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals or vals[0] != 1:
            raise ValueError("moment sequences start with mu_0 = 1")

    @property
    def order(self):
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def series(self):
        return TruncatedSeries(self.values)

    def truncate(self, order):
        return MomentSeq(self.values[: order + 1])

    def scaled(self, s):
        """Moments of ``s * X``: mu_n -> s**n mu_n."""
        return MomentSeq(tuple(v * s ** n for n, v in enumerate(self.values)))


@dataclass(frozen=True)
class CumulantSeq:
    """Cumulants k_1..k_N; ``seq[n]`` is k_n (there is no index 0)."""

    kind: CumulantKind
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "kind", CumulantKind(self.kind))
        object.__setattr__(self, "values", tuple(_norm(v) for v in self.values))

    @property
    def order(self):
        return len(self.values)

    def __getitem__(self, n):
        if n < 1:
            raise IndexError("cumulants are indexed from 1")
        return self.values[n - 1]

    def __len__(self):
        return len(self.values)

    def gf(self, constant=0):
        """``constant + sum k_n z^n`` as a series of order N."""
        return TruncatedSeries((constant,) + self.values)

    def scaled(self, s):
        return CumulantSeq(self.kind, tuple(v * s ** n for n, v in enumerate(self.values, 1)))


# -- free ---------------------------------------------------------------------

def free_from_moments(m, method="lagrange"):
    """Free cumulants.

    ``lagrange``: c_n = -1/(n-1) [z^n] M(z)^-(n-1) for n >= 2, c_1 = mu_1.
    ``functional``: C = M o (zM)^<-1>, by series reversion.
    """
    n_max = m.order
    if n_max == 0:
        return CumulantSeq(CumulantKind.FREE, ())
    M = m.series()
    if method == "lagrange":
        out = [m[1]]
        recip = M.reciprocal()
        power = recip
        for n in range(2, n_max + 1):
            # power = M^-(n-1)
            out.append(_div(-power[n], n - 1))
            power = power * recip
        return CumulantSeq(CumulantKind.FREE, tuple(out))
    if method == "functional":
        zM = M.shift(1)
        C = M.compose(zM.reverse())
        return CumulantSeq(CumulantKind.FREE, C.coeffs[1:])
    raise ValueError(f"unknown method {method!r}")


def moments_from_free(cum, method="fixed-point"):
    """Moments from free cumulants.

    ``fixed-point``: iterate M <- C(zM) exactly N times (each pass fixes
    one more coefficient).  ``paths``: Łukasiewicz path sums with the
    free weights.
    """
    _expect(cum, CumulantKind.FREE)
    n_max = cum.order
    if method == "fixed-point":
        C = cum.gf(1)
        M = TruncatedSeries.constant(1, 0)
        for k in range(1, n_max + 1):
            # M is exact to order k-1, so one pass at order k suffices
            zM = TruncatedSeries([0] + list(M.coeffs), k)
            M = C.truncate(k).compose(zM)
        return MomentSeq(M.coeffs)
    if method == "paths":
        scheme = LukasFree(cum.values)
        return MomentSeq((1,) + tuple(path_sum(n, scheme) for n in range(1, n_max + 1)))
    raise ValueError(f"unknown method {method!r}")


# -- classical ----------------------------------------------------------------

def classical_from_moments(m):
    F = TruncatedSeries([v * Fraction(1, factorial(n)) for n, v in enumerate(m.values)])
    K = F.log()
    return CumulantSeq(CumulantKind.CLASSICAL,
                       tuple(K[n] * factorial(n) for n in range(1, m.order + 1)))


def moments_from_classical(cum, method="exp"):
    """Moments from classical cumulants, by ``exp`` or by ``paths``."""
    _expect(cum, CumulantKind.CLASSICAL)
    n_max = cum.order
    if method == "exp":
        K = TruncatedSeries([0] + [v * Fraction(1, factorial(n))
                                   for n, v in enumerate(cum.values, 1)])
        F = K.exp()
        return MomentSeq(tuple(F[n] * factorial(n) for n in range(n_max + 1)))
    if method == "paths":
        scheme = LukasClassical(cum.values)
        return MomentSeq((1,) + tuple(path_sum(n, scheme) for n in range(1, n_max + 1)))
    raise ValueError(f"unknown method {method!r}")


# -- boolean ------------------------------------------------------------------

def boolean_from_moments(m):
    H = 1 - m.series().reciprocal()
    return CumulantSeq(CumulantKind.BOOLEAN, H.coeffs[1:])


def compositions(n, parts=None):
    """Compositions of ``n`` into positive parts (optionally exactly ``parts``)."""
    if n == 0:
        if parts in (None, 0):
            yield ()
        return
    if parts == 0:
        return
    for first in range(1, n + 1):
        rest = None if parts is None else parts - 1
        if rest is not None and rest > n - first:
            continue
        for tail in compositions(n - first, rest):
            yield (first,) + tail


def _prod(items):
    v = 1
    for x in items:
        v = v * x
    return v


def moments_from_boolean(cum, method="geometric"):
    """``geometric``: M = 1/(1-H).  ``compositions``: Cauchy convolution sum."""
    _expect(cum, CumulantKind.BOOLEAN)
    n_max = cum.order
    if method == "geometric":
        M = (1 - cum.gf(0)).reciprocal()
        return MomentSeq(M.coeffs)
    if method == "compositions":
        mus = [1]
        for n in range(1, n_max + 1):
            total = 0
            for comp in compositions(n):
                total = total + _prod(cum[i] for i in comp)
            mus.append(total)
        return MomentSeq(tuple(mus))
    raise ValueError(f"unknown method {method!r}")


def free_from_boolean(h, n_max=None):
    """Free cumulants from boolean ones via the composition r-sum.

    c_n = sum_{r=1}^{n-1} sum_{i_1+...+i_r=n} (-1)^(r-1)/(n-1) C(n-1, r)
          h_{i_1}...h_{i_r}          (n >= 2), and c_1 = h_1.
    """
    _expect(h, CumulantKind.BOOLEAN)
    if n_max is None:
        n_max = h.order
    if n_max < 2:
        raise BadOrder("free_from_boolean needs order n >= 2")
    if n_max > h.order:
        raise BadOrder(f"order {n_max} exceeds the {h.order} known boolean cumulants")
    out = [h[1]]
    for n in range(2, n_max + 1):
        total = 0
        for r in range(1, n):
            coef = Fraction((-1) ** (r - 1) * comb(n - 1, r), n - 1)
            part = 0
            for comp in compositions(n, r):
                part = part + _prod(h[i] for i in comp)
            if part != 0:
                total = total + part * coef
        out.append(total)
    return CumulantSeq(CumulantKind.FREE, tuple(out))


# -- helpers ------------------------------------------------------------------

def _expect(cum, kind):
    if not isinstance(cum, CumulantSeq) or cum.kind is not kind:
        raise TypeError(f"expected {kind.value} cumulants")


_CUMULANT_FAMILY = {
    CumulantKind.FREE: Family.C,
    CumulantKind.CLASSICAL: Family.KAPPA,
    CumulantKind.BOOLEAN: Family.H,
}


def symbolic_moments(n_max):
    return MomentSeq((1,) + tuple(sym(Family.MU, n) for n in range(1, n_max + 1)))


def symbolic_cumulants(kind, n_max):
    kind = CumulantKind(kind)
    fam = _CUMULANT_FAMILY[kind]
    return CumulantSeq(kind, tuple(sym(fam, n) for n in range(1, n_max + 1)))


_FROM = {
    CumulantKind.FREE: free_from_moments,
    CumulantKind.CLASSICAL: classical_from_moments,
    CumulantKind.BOOLEAN: boolean_from_moments,
}
_TO = {
    CumulantKind.FREE: moments_from_free,
    CumulantKind.CLASSICAL: moments_from_classical,
    CumulantKind.BOOLEAN: moments_from_boolean,
}


def from_moments(m, kind):
    return _FROM[CumulantKind(kind)](m)


def to_moments(cum):
    return _TO[cum.kind](cum)
