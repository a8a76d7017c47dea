"""Built-in named distributions."""
from .exactalg.poly import t as _t
from .exactalg.rational import parse_rational
from .jacobi import JacobiParams, moments_from_jacobi
from .transforms import CumulantKind, CumulantSeq, MomentSeq, moments_from_free

__all__ = ["CATALOG", "semicircle", "gaussian_hermite", "point_mass", "free_poisson", "lookup"]


def _size(order):
    return order // 2 + 1


def semicircle(order):
    """a_n = 0, λ_n = 1; even moments are Catalan numbers."""
    n = _size(order)
    return moments_from_jacobi(JacobiParams.constant(0, 1, n), order)


def gaussian_hermite(order):
    """a_n = 0, λ_n = n; moments are double factorials."""
    n = _size(order)
    return moments_from_jacobi(JacobiParams((0,) * n, tuple(range(1, n))), order)


def point_mass(order, t):
    return MomentSeq(tuple(t ** k for k in range(order + 1)))


def free_poisson(order, t):
    """Free cumulants c_n = t for every n."""
    return moments_from_free(CumulantSeq(CumulantKind.FREE, (t,) * order))


CATALOG = {
    "semicircle": (semicircle, False),
    "gaussian-hermite": (gaussian_hermite, False),
    "point-mass": (point_mass, True),
    "free-poisson": (free_poisson, True),
}


def lookup(name, order, param=None, symbolic=False):
    """Moments of a catalog entry; ``param`` is "t" or a rational string."""
    if name not in CATALOG:
        raise KeyError(f"unknown catalog entry {name!r}; choose from {sorted(CATALOG)}")
    fn, takes_param = CATALOG[name]
    if not takes_param:
        return fn(order)
    if symbolic or param in (None, "t"):
        value = _t()
    else:
        value = parse_rational(param)
    return fn(order, value)
