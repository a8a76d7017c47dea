"""Motzkin and Łukasiewicz lattice paths and their valuations.

A path is stored as its level sequence ``(π(0), ..., π(n))``.  Three
valuation schemes are provided:

``MotzkinFlajolet(a, lam)``
    rise -> 1, horizontal at level y -> a_y, fall from level y -> λ_y.
``LukasFree(c)``
    rise -> 1, drop by k >= 0 -> c_{k+1}.
``LukasClassical(kappa)``
    rise from level y -> y + 1, drop by k >= 0 -> κ_{k+1} / k!.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import _pykernels, kernels
from .errors import IndexBeyondPrefix, SchemeMismatch
from .exactalg.poly import a as _a, c as _c, kappa as _kappa, lam as _lam
from .exactalg.rational import normalize

__all__ = [
    "Discipline", "LatticePath", "enumerate_paths", "path_levels",
    "factorize_irreducible", "returns_to_zero", "concat",
    "ValuationScheme", "MotzkinFlajolet", "LukasFree", "LukasClassical",
    "valuate", "path_sum", "parse_scheme_name",
]


class Discipline(enum.Enum):
    MOTZKIN = "motzkin"
    LUKASIEWICZ = "lukasiewicz"


@dataclass(frozen=True)
class LatticePath:
    levels: tuple

    def __post_init__(self):
        lv = tuple(int(y) for y in self.levels)
        object.__setattr__(self, "levels", lv)
        if not lv or lv[0] != 0 or lv[-1] != 0:
            raise ValueError(f"path must start and end at level 0: {lv}")
        if min(lv) < 0:
            raise ValueError(f"path dips below level 0: {lv}")
        if any(q - p > 1 for p, q in zip(lv, lv[1:])):
            raise ValueError(f"path rises by more than one: {lv}")

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(s) for s in text.split(",")))

    def __str__(self):
        return ",".join(map(str, self.levels))

    def __len__(self):
        return len(self.levels) - 1

    @property
    def steps(self):
        return list(zip(self.levels, self.levels[1:]))

    def is_motzkin(self):
        return all(abs(q - p) <= 1 for p, q in self.steps)

    def is_lukasiewicz(self):
        return True  # the constructor already enforces the Łukasiewicz rules

    def is_irreducible(self):
        return len(self) >= 1 and all(y > 0 for y in self.levels[1:-1])

    def vertices(self, x0=0):
        return [(x0 + i, y) for i, y in enumerate(self.levels)]


def _lukas(discipline):
    return Discipline(discipline) is Discipline.LUKASIEWICZ


def enumerate_paths(n, discipline=Discipline.MOTZKIN, irreducible_only=False):
    """Stream every path of length ``n`` once, in depth-first order.

    Steps are tried in the order +1, 0, -1, -2, ...
    """
    for lv in _pykernels.iter_levels(n, _lukas(discipline), irreducible_only):
        yield LatticePath(lv)


@lru_cache(maxsize=256)
def path_levels(n, discipline=Discipline.MOTZKIN, irreducible_only=False):
    """All level tuples of length ``n`` (materialized, via the fast kernel)."""
    return tuple(kernels.path_levels(n, _lukas(discipline), irreducible_only))


def factorize_irreducible(p):
    """Split at interior returns to level 0."""
    lv = p.levels
    out = []
    start = 0
    for i in range(1, len(lv)):
        if lv[i] == 0:
            out.append(LatticePath(lv[start:i + 1]))
            start = i
    return out


def returns_to_zero(p):
    return sum(1 for y in p.levels[1:] if y == 0)


def concat(paths):
    lv = [0]
    for q in paths:
        lv.extend(q.levels[1:])
    return LatticePath(tuple(lv))


# -- valuation schemes --------------------------------------------------------

def _fetch(seq, i, base, name):
    k = i - base
    if k < 0 or k >= len(seq):
        raise IndexBeyondPrefix(name, i, len(seq))
    return seq[k]


class ValuationScheme:
    discipline = Discipline.LUKASIEWICZ
    name = ""

    def weight(self, y, y2):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"


class MotzkinFlajolet(ValuationScheme):
    """Flajolet weights from Jacobi parameters; ``lam[0]`` is λ_1."""

    discipline = Discipline.MOTZKIN
    name = "motzkin"

    def __init__(self, a, lam):
        self.a = tuple(normalize(v) if isinstance(v, Fraction) else v for v in a)
        self.lam = tuple(normalize(v) if isinstance(v, Fraction) else v for v in lam)

    @classmethod
    def symbolic(cls, size):
        """Parameters a_0..a_{size-1}, λ_1..λ_{size-1}."""
        return cls([_a(i) for i in range(size)], [_lam(i) for i in range(1, size)])

    def weight(self, y, y2):
        d = y2 - y
        if d == 1:
            return 1
        if d == 0:
            return _fetch(self.a, y, 0, "a")
        if d == -1:
            return _fetch(self.lam, y, 1, "lambda")
        raise SchemeMismatch(f"step {y}->{y2} is not a Motzkin step")


class LukasFree(ValuationScheme):
    """Toeplitz-model weights; ``c[0]`` is c_1."""

    name = "lukas-free"

    def __init__(self, c):
        self.c = tuple(c)

    @classmethod
    def symbolic(cls, size):
        return cls([_c(i) for i in range(1, size + 1)])

    def weight(self, y, y2):
        d = y2 - y
        if d == 1:
            return 1
        if d <= 0:
            return _fetch(self.c, 1 - d, 1, "c")
        raise SchemeMismatch(f"step {y}->{y2} is not a Łukasiewicz step")


class LukasClassical(ValuationScheme):
    """Bosonic CCR-model weights; ``kappa[0]`` is κ_1."""

    name = "lukas-classical"

    def __init__(self, kappa):
        self.kappa = tuple(kappa)

    @classmethod
    def symbolic(cls, size):
        return cls([_kappa(i) for i in range(1, size + 1)])

    def weight(self, y, y2):
        d = y2 - y
        if d == 1:
            return y + 1
        if d <= 0:
            k = -d
            return _fetch(self.kappa, k + 1, 1, "kappa") * Fraction(1, factorial(k))
        raise SchemeMismatch(f"step {y}->{y2} is not a Łukasiewicz step")


def parse_scheme_name(name):
    key = name.lower().replace("_", "-")
    table = {
        "motzkin": MotzkinFlajolet, "motzkin-flajolet": MotzkinFlajolet,
        "lukas-free": LukasFree, "free": LukasFree,
        "lukas-classical": LukasClassical, "classical": LukasClassical,
    }
    if key not in table:
        raise ValueError(f"unknown scheme {name!r}")
    return table[key]


def _valuate_levels(lv, scheme):
    v = 1
    w = scheme.weight
    for y, y2 in zip(lv, lv[1:]):
        s = w(y, y2)
        if s == 0:
            return 0
        v = v * s
    return normalize(v) if isinstance(v, Fraction) else v


def valuate(p, scheme):
    """Product of step weights of ``p`` under ``scheme``."""
    lv = p.levels if isinstance(p, LatticePath) else tuple(p)
    return _valuate_levels(lv, scheme)


def path_sum(n, scheme, irreducible_only=False):
    """Sum of valuations over all paths of the scheme's discipline."""
    total = 0
    for lv in path_levels(n, scheme.discipline, irreducible_only):
        total = total + _valuate_levels(lv, scheme)
    return total
