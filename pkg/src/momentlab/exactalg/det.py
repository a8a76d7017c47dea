"""Exact determinants over the rationals and over polynomial rings."""
from __future__ import annotations

from itertools import combinations

from .poly import MultiPoly
from .rational import normalize

__all__ = ["det_exact", "det_bareiss", "det_cofactor", "det_laplace_naive"]

COFACTOR_MAX = 5


def _square(m):
    rows = [list(r) for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    return rows


def det_exact(m, method=None):
    """Determinant of a square matrix of scalars or :class:`MultiPoly`.

    The empty matrix has determinant 1.  Scalar matrices go through
    fraction-free elimination; polynomial matrices up to 5x5 use cofactor
    expansion with memoized minors and larger ones fraction-free elimination
    with exact polynomial division.
    """
    rows = _square(m)
    n = len(rows)
    if n == 0:
        return 1
    if method is None:
        symbolic = any(isinstance(v, MultiPoly) for r in rows for v in r)
        method = "cofactor" if symbolic and n <= COFACTOR_MAX else "bareiss"
    if method == "bareiss":
        return det_bareiss(rows)
    if method == "cofactor":
        return det_cofactor(rows)
    raise ValueError(f"unknown determinant method {method!r}")


def det_bareiss(m):
    rows = _square(m)
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            for j in range(k + 1, n):
                # Sylvester's identity makes this division exact
                num = ri[j] * piv - ri[k] * rk[j]
                ri[j] = _exact(num, prev)
            ri[k] = 0
        prev = piv
    d = rows[n - 1][n - 1]
    return -d if sign < 0 else d


def _exact(num, den):
    if isinstance(num, MultiPoly) or isinstance(den, MultiPoly):
        if not isinstance(num, MultiPoly):
            num = MultiPoly(num)
        return num.exact_div(den)
    if den == 1:
        return num
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        assert r == 0
        return q
    return normalize(num / den)


def det_cofactor(m):
    """Laplace expansion along rows, memoizing minors by column subset."""
    rows = _square(m)
    n = len(rows)
    if n == 0:
        return 1
    # minors[cols] = det of the last len(cols) rows restricted to cols
    minors = {(j,): rows[n - 1][j] for j in range(n)}
    for size in range(2, n + 1):
        r = n - size
        nxt = {}
        for cols in combinations(range(n), size):
            acc = 0
            for pos, j in enumerate(cols):
                v = rows[r][j]
                if v == 0:
                    continue
                sub = minors[cols[:pos] + cols[pos + 1:]]
                if sub == 0:
                    continue
                term = v * sub
                acc = acc - term if pos % 2 else acc + term
            nxt[cols] = acc
        minors = nxt
    return minors[tuple(range(n))]


def det_laplace_naive(m):
    """Unmemoized first-row expansion; kept as an independent test oracle."""
    rows = _square(m)
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * det_laplace_naive(minor)
        total = total - term if j % 2 else total + term
    return total
