"""Lattice-path identities as executable, cross-checked formulas.

* free cumulants as a signed sum over Motzkin paths,
* boolean cumulants as sums over irreducible paths,
* Hankel minors as signed sums over vertex-disjoint path configurations
  (Gessel-Viennot), compared against direct determinants.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import kernels
from .errors import BadOrder, ExplosionGuard
from .exactalg.poly import Family, MultiPoly
from .exactalg.rational import is_scalar, normalize
from .jacobi import JacobiParams, hankel_minor
from .paths import (
    Discipline,
    LatticePath,
    MotzkinFlajolet,
    _valuate_levels,
    path_levels,
    path_sum,
    returns_to_zero,
)

__all__ = [
    "PathContribution", "free_cumulant_motzkin_terms", "free_cumulant_motzkin",
    "SignReport", "no_cancellation_check", "boolean_from_paths",
    "HankelMinorSpec", "hankel_minor_det",
    "Configuration", "GVResult", "gv_candidates", "hankel_minor_gv", "permutation_sign",
    "DEFAULT_MAX_CONFIGS", "max_configs",
]

DEFAULT_MAX_CONFIGS = 10 ** 7


def max_configs():
    env = os.environ.get("MOMENTLAB_MAX_CONFIGS")
    return int(env) if env else DEFAULT_MAX_CONFIGS


def _scheme_of(params):
    if isinstance(params, JacobiParams):
        return params.scheme()
    return params


# -- free cumulants from Motzkin paths --------------------------------------------

@dataclass(frozen=True)
class PathContribution:
    path: LatticePath
    returns: int
    coefficient: Fraction
    valuation: object

    @property
    def value(self):
        return self.valuation * self.coefficient


def _motzkin_coefficient(n, r):
    # (-1)^(r-1)/(n-1) * C(n-1, r); comb() is 0 for r > n-1
    return Fraction((-1) ** (r - 1) * comb(n - 1, r), n - 1)


def free_cumulant_motzkin_terms(params, n):
    """Per-path ledger of the signed Motzkin sum, in enumeration order."""
    if n < 2:
        raise BadOrder("the Motzkin formula for c_n needs n >= 2")
    scheme = _scheme_of(params)
    out = []
    for lv in path_levels(n, Discipline.MOTZKIN):
        p = LatticePath(lv)
        r = returns_to_zero(p)
        out.append(PathContribution(p, r, _motzkin_coefficient(n, r),
                                    _valuate_levels(lv, scheme)))
    return out


def free_cumulant_motzkin(params, n):
    """c_n = sum over Motzkin paths of (-1)^(|π|_0-1)/(n-1) C(n-1,|π|_0) v(π)."""
    total = 0
    for term in free_cumulant_motzkin_terms(params, n):
        if term.coefficient:
            total = total + term.value
    return normalize(total) if is_scalar(total) else total


@dataclass
class SignReport:
    n: int
    monomial_signs: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    returns_mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations and not self.returns_mismatches


def _level0_count(p):
    """Horizontal steps on level 0 plus falls that land on level 0."""
    return sum(1 for y, y2 in p.steps if y2 == 0 and y in (0, 1))


def no_cancellation_check(n, params=None):
    """Group the signed Motzkin contributions by monomial and check signs.

    With symbolic parameters every monomial must receive contributions of
    a single sign, and that sign must be (-1)^(deg a_0 + deg λ_1 - 1).
    """
    if params is None:
        params = JacobiParams.symbolic(n // 2 + 1)
    report = SignReport(n=n)
    signs = {}
    for term in free_cumulant_motzkin_terms(params, n):
        if _level0_count(term.path) != term.returns:
            report.returns_mismatches.append(str(term.path))
        if not term.coefficient:
            continue
        val = MultiPoly(term.value)
        for coef, items in val.terms():
            key = items
            signs.setdefault(key, set()).add(1 if coef > 0 else -1)
    for key, s in signs.items():
        name = "*".join(f"{sy}^{e}" if e > 1 else str(sy) for sy, e in key) or "1"
        report.monomial_signs[name] = next(iter(s)) if len(s) == 1 else 0
        if len(s) != 1:
            report.violations.append(name)
            continue
        zero_steps = sum(e for sy, e in key
                         if (sy.family == Family.A and sy.index == 0)
                         or (sy.family == Family.LAMBDA and sy.index == 1))
        if next(iter(s)) != (-1) ** (zero_steps - 1):
            report.violations.append(name)
    return report


def boolean_from_paths(params, n):
    """h_n as the sum over irreducible paths of length n."""
    if n < 1:
        raise BadOrder("boolean cumulants start at n = 1")
    return path_sum(n, _scheme_of(params), irreducible_only=True)


# -- Hankel minors ------------------------------------------------------------------

@dataclass(frozen=True)
class HankelMinorSpec:
    rows: tuple
    cols: tuple

    def __post_init__(self):
        rows, cols = tuple(int(v) for v in self.rows), tuple(int(v) for v in self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if len(rows) != len(cols):
            raise ValueError("rows and cols must have equal length")
        for seq in (rows, cols):
            if any(v < 0 for v in seq):
                raise ValueError("indices must be nonnegative")
            if any(q <= p for p, q in zip(seq, seq[1:])):
                raise ValueError("indices must be strictly increasing")

    @classmethod
    def delta(cls, n):
        return cls(tuple(range(n + 1)), tuple(range(n + 1)))

    @classmethod
    def delta_tilde(cls, n):
        return cls(tuple(range(n + 1)), tuple(range(n)) + (n + 1,))

    @property
    def size(self):
        return len(self.rows)

    def max_moment(self):
        return max(self.rows) + max(self.cols) if self.rows else 0

    def __str__(self):
        return f"H({','.join(map(str, self.rows))};{','.join(map(str, self.cols))})"


def hankel_minor_det(m, spec):
    return hankel_minor(m, spec.rows, spec.cols)


def permutation_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class Configuration:
    """Row k's path runs from (-rows[k], 0) to (cols[perm[k]], 0)."""

    perm: tuple
    paths: tuple
    sign: int
    weight: object

    @property
    def value(self):
        return self.weight * self.sign


@dataclass
class GVResult:
    spec: HankelMinorSpec
    value: object
    configurations: list
    explored: int

    def term_values(self):
        return [cfg.value for cfg in self.configurations]


def gv_candidates(scheme, spec):
    """Per-entry path pools and their vertex bitmasks for the GV search.

    A path for entry (i, j) is a path of length i + j placed with x running
    from -i to j; vertices are (x, level) pairs, and the zero-length path
    for i = j = 0 occupies (0, 0).  Returns ``(pool, cands)`` where
    ``pool[n]`` lists (levels, weight) for nonzero-weight paths of length n
    and ``cands[k][col]`` lists the masks for row k, column col.
    """
    pool = {}
    for i in spec.rows:
        for j in spec.cols:
            n = i + j
            if n not in pool:
                good = []
                for lv in path_levels(n, scheme.discipline):
                    v = _valuate_levels(lv, scheme)
                    if v != 0:
                        good.append((lv, v))
                pool[n] = good
    top = max((max(lv) for paths in pool.values() for lv, _ in paths), default=0) + 1
    x_off = max(spec.rows)

    def mask(lv, i):
        mk = 0
        for t, y in enumerate(lv):
            mk |= 1 << ((t - i + x_off) * top + y)
        return mk

    cands = [[[mask(lv, i) for lv, _ in pool[i + j]] for j in spec.cols] for i in spec.rows]
    return pool, cands


def hankel_minor_gv(params, spec, limit=None):
    """Signed sum over vertex-disjoint path configurations."""
    scheme = _scheme_of(params)
    if limit is None:
        limit = max_configs()
    if spec.size == 0:
        return GVResult(spec, 1, [Configuration((), (), 1, 1)], 0)
    pool, cands = gv_candidates(scheme, spec)
    found, explored, exceeded = kernels.disjoint_configurations(cands, limit)
    if exceeded:
        raise ExplosionGuard(limit)
    configs = []
    total = 0
    for cols, idxs in found:
        weight = 1
        paths = []
        for k, (col, idx) in enumerate(zip(cols, idxs)):
            lv, v = pool[spec.rows[k] + spec.cols[col]][idx]
            paths.append(LatticePath(lv))
            weight = weight * v
        sign = permutation_sign(cols)
        configs.append(Configuration(tuple(cols), tuple(paths), sign, weight))
        total = total + weight * sign
    value = normalize(total) if is_scalar(total) else total
    return GVResult(spec, value, configs, explored)
