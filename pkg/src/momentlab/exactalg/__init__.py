"""Exact scalar, polynomial, series and determinant arithmetic."""
from .det import det_bareiss, det_cofactor, det_exact
from .poly import Family, MultiPoly, Symbol, a, c, h, kappa, lam, mu, sym, t, x
from .rational import Rational, format_rational, is_scalar, normalize, parse_rational
from .series import TruncatedSeries, invert_scalar

__all__ = [
    "Rational", "format_rational", "is_scalar", "normalize", "parse_rational",
    "Family", "Symbol", "MultiPoly", "a", "lam", "c", "kappa", "h", "mu", "x", "t", "sym",
    "TruncatedSeries", "invert_scalar",
    "det_exact", "det_bareiss", "det_cofactor",
]
