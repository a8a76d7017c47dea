"""Sparse multivariate polynomials over the rationals in indexed symbols.

Monomials are stored as exponent tuples addressed by a process-wide symbol
id (trailing zeros trimmed), which keeps multiplication a tuple add.  The
id order depends on first use and is never observable: printing, JSON and
leading-term selection all sort by the canonical graded-lex order on
``(family, index)``.
"""
from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

from ..errors import NotExactlyDivisible
from .rational import is_scalar, normalize, parse_rational

__all__ = [
    "Family", "Symbol", "MultiPoly",
    "a", "lam", "c", "kappa", "h", "mu", "x", "t", "sym",
]


class Family(IntEnum):
    A = 0
    LAMBDA = 1
    C = 2
    KAPPA = 3
    H = 4
    MU = 5
    X = 6
    T = 7


_NAMES = {
    Family.A: "a",
    Family.LAMBDA: "lambda",
    Family.C: "c",
    Family.KAPPA: "kappa",
    Family.H: "h",
    Family.MU: "mu",
    Family.X: "x",
    Family.T: "t",
}
_BY_NAME = {v: k for k, v in _NAMES.items()}
_SCALAR_FAMILIES = (Family.X, Family.T)
_SYMBOL_RE = re.compile(r"^([a-z]+?)(\d*)$")


@dataclass(frozen=True, order=True)
class Symbol:
    family: Family
    index: int = 0

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("symbol index must be nonnegative")
        # lambda_0 = 0 is a value, never a symbol
        if self.family == Family.LAMBDA and self.index < 1:
            raise ValueError("lambda symbols start at index 1")

    def __str__(self):
        name = _NAMES[self.family]
        if self.family in _SCALAR_FAMILIES and self.index == 0:
            return name
        return f"{name}{self.index}"

    @classmethod
    def parse(cls, text):
        m = _SYMBOL_RE.match(text.strip())
        if not m or m.group(1) not in _BY_NAME:
            raise ValueError(f"not a symbol: {text!r}")
        fam = _BY_NAME[m.group(1)]
        if not m.group(2):
            if fam not in _SCALAR_FAMILIES:
                raise ValueError(f"symbol {text!r} needs an index")
            return cls(fam, 0)
        return cls(fam, int(m.group(2)))


# -- symbol interning -------------------------------------------------------

_lock = threading.Lock()
_symbols: list[Symbol] = []
_ids: dict[Symbol, int] = {}


def _sid(s):
    try:
        return _ids[s]
    except KeyError:
        with _lock:
            if s not in _ids:
                _ids[s] = len(_symbols)
                _symbols.append(s)
            return _ids[s]


def _unit_mono(s, e=1):
    i = _sid(s)
    return (0,) * i + (e,)


def _mono_mul(m1, m2):
    if len(m1) < len(m2):
        m1, m2 = m2, m1
    if not m2:
        return m1
    n = len(m2)
    return tuple([p + q for p, q in zip(m1, m2)]) + m1[n:]


def _mono_div(m1, m2):
    if len(m2) > len(m1):
        return None
    out = list(m1)
    for i, e in enumerate(m2):
        out[i] -= e
        if out[i] < 0:
            return None
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mono_items(m):
    return tuple(sorted((_symbols[i], e) for i, e in enumerate(m) if e))


def _order_key(m):
    """Graded lex on (family, index); earlier symbols dominate."""
    items = _mono_items(m)
    return (sum(e for _, e in items),
            tuple((-s.family, -s.index, e) for s, e in items))


def _mono_str(m):
    parts = []
    for s, e in _mono_items(m):
        parts.append(str(s) if e == 1 else f"{s}^{e}")
    return "*".join(parts)


class MultiPoly:
    """Immutable polynomial; scalars on either side of an operator are lifted."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, value=0):
        if isinstance(value, MultiPoly):
            self._terms = value._terms
        elif is_scalar(value):
            value = normalize(value)
            self._terms = {(): value} if value != 0 else {}
        else:
            raise TypeError(f"cannot build a polynomial from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _make(cls, terms):
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def symbol(cls, s, exp=1):
        return cls._make({_unit_mono(s, exp): 1})

    @classmethod
    def from_terms(cls, terms):
        """Build from ``(coefficient, {Symbol: exponent})`` pairs."""
        acc = {}
        for coef, powers in terms:
            m = ()
            for s, e in dict(powers).items():
                if e < 0:
                    raise ValueError("negative exponent")
                if e:
                    m = _mono_mul(m, _unit_mono(s, e))
            acc[m] = acc.get(m, 0) + parse_rational(coef)
        return cls._make(_clean(acc))

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_term(self):
        return self._terms.get((), 0)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.constant_term()

    def terms(self):
        """Canonical term list, highest graded-lex monomial first."""
        ms = sorted(self._terms, key=_order_key, reverse=True)
        return [(self._terms[m], _mono_items(m)) for m in ms]

    def symbols(self):
        out = set()
        for m in self._terms:
            out.update(_symbols[i] for i, e in enumerate(m) if e)
        return sorted(out)

    def degree(self, s=None):
        if not self._terms:
            return -1
        if s is None:
            return max(sum(m) for m in self._terms)
        i = _ids.get(s)
        if i is None:
            return 0
        return max((m[i] if i < len(m) else 0) for m in self._terms)

    def weighted_degrees(self, weight):
        """Set of ``sum(weight(s) * e)`` over all terms."""
        return {sum(weight(s) * e for s, e in _mono_items(m)) for m in self._terms}

    def coefficients_in(self, s):
        """Split as ``sum_k coeff_k * s**k``; returns ``{k: MultiPoly}``."""
        i = _sid(s)
        parts = {}
        for m, cf in self._terms.items():
            k = m[i] if i < len(m) else 0
            if k:
                rest = list(m)
                rest[i] = 0
                while rest and rest[-1] == 0:
                    rest.pop()
                rest = tuple(rest)
            else:
                rest = m
            parts.setdefault(k, {})[rest] = cf
        return {k: MultiPoly._make(v) for k, v in sorted(parts.items())}

    def subs(self, mapping):
        """Substitute ring elements for symbols; unmapped symbols stay."""
        ids = {_sid(s): v for s, v in mapping.items()}
        total = MultiPoly()
        for m, cf in self._terms.items():
            term = cf
            kept = list(m)
            for i, e in enumerate(m):
                if e and i in ids:
                    term = term * ids[i] ** e
                    kept[i] = 0
            while kept and kept[-1] == 0:
                kept.pop()
            total = total + MultiPoly._make({tuple(kept): 1}) * term
        return total

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            if not is_scalar(other):
                return NotImplemented
            if other == 0:
                return self
            other = MultiPoly(other)
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for m, cf in small.items():
            v = out.get(m, 0) + cf
            if v:
                out[m] = normalize(v)
            else:
                out.pop(m, None)
        return MultiPoly._make(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._make({m: -cf for m, cf in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            if not is_scalar(other):
                return NotImplemented
            other = MultiPoly(other)
        return self + (-other)

    def __rsub__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return MultiPoly(other) + (-self)

    def _scale(self, k):
        k = normalize(k)
        if k == 0:
            return MultiPoly()
        if k == 1:
            return self
        return MultiPoly._make({m: normalize(cf * k) for m, cf in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if not is_scalar(other):
                return NotImplemented
            return self._scale(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly()
        if len(a) == 1 and () in a:
            return other._scale(a[()])
        if len(b) == 1 and () in b:
            return self._scale(b[()])
        out = {}
        get = out.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                out[m] = get(m, 0) + c1 * c2
        return MultiPoly._make(_clean(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self._scale(Fraction(1) / other)
        if isinstance(other, MultiPoly):
            return self.exact_div(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return MultiPoly(other).exact_div(self)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=_order_key)
        return m, self._terms[m]

    def exact_div(self, d):
        """Quotient ``self / d``; raises if ``d`` does not divide ``self``."""
        if not isinstance(d, MultiPoly):
            d = MultiPoly(d)
        if not d._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if d.is_constant():
            return self._scale(Fraction(1) / d.constant_term())
        lm_d, lc_d = d.leading_term()
        rem = dict(self._terms)
        keys = {}
        quot = {}
        while rem:
            for m in rem:
                if m not in keys:
                    keys[m] = _order_key(m)
            lm = max(rem, key=keys.__getitem__)
            qm = _mono_div(lm, lm_d)
            if qm is None:
                raise NotExactlyDivisible(f"{d} does not divide {self}")
            qc = normalize(Fraction(rem[lm]) / lc_d)
            quot[qm] = qc
            for m2, c2 in d._terms.items():
                m = _mono_mul(qm, m2)
                v = rem.get(m, 0) - qc * c2
                if v:
                    rem[m] = normalize(v)
                else:
                    rem.pop(m, None)
        return MultiPoly._make(quot)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if is_scalar(other):
            if other == 0:
                return not self._terms
            return self._terms == {(): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (cf, items) in enumerate(self.terms()):
            neg = cf < 0
            mag = -cf if neg else cf
            body = "*".join(str(s) if e == 1 else f"{s}^{e}" for s, e in items)
            if not body:
                text = str(Fraction(mag))
            elif mag == 1:
                text = body
            else:
                text = f"{Fraction(mag)}*{body}"
            if i == 0:
                out.append(("-" if neg else "") + text)
            else:
                out.append((" - " if neg else " + ") + text)
        return "".join(out)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    def to_json(self):
        """``[[coef, [[symbol, exp], ...]], ...]`` in canonical order."""
        return [[str(Fraction(cf)), [[str(s), e] for s, e in items]]
                for cf, items in self.terms()]

    @classmethod
    def from_json(cls, data):
        return cls.from_terms(
            (cf, {Symbol.parse(s): int(e) for s, e in powers}) for cf, powers in data
        )


def _clean(d):
    out = {}
    for m, cf in d.items():
        if cf:
            out[m] = normalize(cf)
    return out


def sym(family, index=0):
    return MultiPoly.symbol(Symbol(Family(family), index))


def a(i):
    return sym(Family.A, i)


def lam(i):
    return sym(Family.LAMBDA, i)


def c(i):
    return sym(Family.C, i)


def kappa(i):
    return sym(Family.KAPPA, i)


def h(i):
    return sym(Family.H, i)


def mu(i):
    return sym(Family.MU, i)


def x():
    return sym(Family.X)


def t():
    return sym(Family.T)
