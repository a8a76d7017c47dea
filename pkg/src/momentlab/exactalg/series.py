"""Truncated formal power series with exact coefficients.

Coefficients may be any exact ring element used in this package: ``int``,
``Fraction`` or :class:`MultiPoly`.  A series of order ``N`` knows the
coefficients of ``z**0 .. z**N``; binary operations return the smaller of
the two orders so no coefficient is ever claimed beyond what both operands
determine.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import (
    BadConstantTerm,
    CompositionConstantTerm,
    NonInvertibleConstantTerm,
    NotReversible,
)
from .poly import MultiPoly
from .rational import is_scalar, normalize

__all__ = ["TruncatedSeries", "invert_scalar"]


def invert_scalar(x):
    """Inverse of a ring element that must be a nonzero rational constant."""
    if isinstance(x, MultiPoly):
        if not x.is_constant() or x == 0:
            raise NonInvertibleConstantTerm(f"{x} is not an invertible constant")
        x = x.constant_term()
    if x == 0:
        raise NonInvertibleConstantTerm("constant term is zero")
    return normalize(Fraction(1) / x)


def _is_zero(v):
    return v == 0


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        else:
            coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(normalize(v) if is_scalar(v) else v for v in coeffs)

    @classmethod
    def variable(cls, order):
        return cls([0, 1], order)

    @classmethod
    def constant(cls, value, order):
        return cls([value], order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"z^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        body = ", ".join(str(v) for v in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"

    # -- ring operations ------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if is_scalar(other) or isinstance(other, MultiPoly):
            return TruncatedSeries([other], self.order)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-v for v in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, MultiPoly):
            return TruncatedSeries([v * other for v in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        f, g = self.coeffs, other.coeffs
        fz = [i for i in range(n + 1) if not _is_zero(f[i])]
        gz = [j for j in range(n + 1) if not _is_zero(g[j])]
        out = [0] * (n + 1)
        for i in fz:
            fi = f[i]
            for j in gz:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + fi * g[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other) or isinstance(other, MultiPoly):
            return TruncatedSeries([v / other for v in self.coeffs], self.order)
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def reciprocal(self):
        """``1/f``; the constant term must be an invertible rational."""
        f = self.coeffs
        inv0 = invert_scalar(f[0])
        n = self.order
        g = [inv0]
        nz = [k for k in range(1, n + 1) if not _is_zero(f[k])]
        for m in range(1, n + 1):
            acc = 0
            for k in nz:
                if k > m:
                    break
                acc = acc + f[k] * g[m - k]
            g.append(-acc * inv0)
        return TruncatedSeries(g, n)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus -------------------------------------------------------------

    def derivative(self):
        """Formal derivative; the result has order one less (at least 0)."""
        n = self.order
        if n == 0:
            return TruncatedSeries([0], 0)
        return TruncatedSeries([k * self.coeffs[k] for k in range(1, n + 1)], n - 1)

    def shift(self, k):
        """Multiply by ``z**k``, keeping the order."""
        return TruncatedSeries([0] * k + list(self.coeffs[: self.order + 1 - k]), self.order)

    def compose(self, g):
        """``f(g(z))``; ``g`` must have zero constant term."""
        if not _is_zero(g.coeffs[0]):
            raise CompositionConstantTerm("inner series must have zero constant term")
        n = min(self.order, g.order)
        g = g.truncate(n)
        # Horner from the top coefficient down
        acc = TruncatedSeries([self.coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            acc = acc * g + self.coeffs[k]
        return acc

    def reverse(self):
        """Compositional inverse ``h`` with ``f(h(z)) = z + O(z^(N+1))``.

        Solved one coefficient at a time: with ``h_n`` still unset,
        ``[z^n] f(h) = f_1 h_n + (known terms)``.
        """
        f = self.coeffs
        n = self.order
        if not _is_zero(f[0]):
            raise NotReversible("series to reverse must have zero constant term")
        if n == 0:
            raise NotReversible("order 0 series carries no linear term")
        try:
            inv1 = invert_scalar(f[1])
        except NonInvertibleConstantTerm as exc:
            raise NotReversible("linear coefficient is not invertible") from exc
        h = [0, inv1] + [0] * (n - 1)
        for m in range(2, n + 1):
            partial = TruncatedSeries(h[:m], m - 1)
            head = TruncatedSeries(f[: m + 1], m)
            # powers of partial up to z^m
            pw = TruncatedSeries([1], m)
            ps = TruncatedSeries(list(partial.coeffs) + [0], m)
            total = 0
            for k in range(1, m + 1):
                pw = pw * ps
                if not _is_zero(head.coeffs[k]):
                    total = total + head.coeffs[k] * pw.coeffs[m]
            h[m] = -total * inv1
        return TruncatedSeries(h, n)

    def log(self):
        """Formal logarithm; requires constant term 1."""
        f = self.coeffs
        if f[0] != 1:
            raise BadConstantTerm("log requires constant term 1")
        n = self.order
        g = [0] * (n + 1)
        # f' = f g'  =>  m f_m = sum_{k=1}^{m} k g_k f_{m-k}
        for m in range(1, n + 1):
            acc = 0
            for k in range(1, m):
                if not _is_zero(g[k]) and not _is_zero(f[m - k]):
                    acc = acc + k * g[k] * f[m - k]
            g[m] = f[m] - _div_int(acc, m)
        return TruncatedSeries(g, n)

    def exp(self):
        """Formal exponential; requires constant term 0."""
        f = self.coeffs
        if not _is_zero(f[0]):
            raise BadConstantTerm("exp requires constant term 0")
        n = self.order
        g = [1] + [0] * n
        # g' = f' g  =>  m g_m = sum_{k=1}^{m} k f_k g_{m-k}
        for m in range(1, n + 1):
            acc = 0
            for k in range(1, m + 1):
                if not _is_zero(f[k]):
                    acc = acc + k * f[k] * g[m - k]
            g[m] = _div_int(acc, m)
        return TruncatedSeries(g, n)

    # -- serialization --------------------------------------------------------

    def to_json(self):
        from ..serialize import value_to_json
        return [value_to_json(v) for v in self.coeffs]

    @classmethod
    def from_json(cls, data):
        from ..serialize import value_from_json
        return cls([value_from_json(v) for v in data])


def _div_int(v, m):
    if isinstance(v, MultiPoly):
        return v / m
    return normalize(Fraction(v, m)) if isinstance(v, int) else normalize(v / m)
