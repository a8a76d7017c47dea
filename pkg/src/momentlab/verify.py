"""Cross-module verification harness.

Each identity class compares two independently computed sides for a range
of orders and yields one report entry.  ``perturb`` names a class whose
first right-hand side is deliberately corrupted; it exists so the harness
itself can be tested.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .exactalg.poly import lam as _lam
from .identities import (
    HankelMinorSpec,
    boolean_from_paths,
    free_cumulant_motzkin,
    hankel_minor_det,
    hankel_minor_gv,
    no_cancellation_check,
)
from .jacobi import (
    JacobiParams,
    contfrac_series,
    hankel_delta,
    jacobi_from_moments,
    moments_from_jacobi,
    orthogonality_check,
    orthopoly_determinant,
    orthopoly_recurrence,
)
from .paths import (
    Discipline,
    LukasFree,
    concat,
    enumerate_paths,
    factorize_irreducible,
    returns_to_zero,
)
from .kernels import count_paths
from .transforms import (
    CumulantKind,
    boolean_from_moments,
    free_from_boolean,
    free_from_moments,
    moments_from_boolean,
    moments_from_classical,
    moments_from_free,
    symbolic_cumulants,
    symbolic_moments,
)

__all__ = ["CheckEntry", "VerifyReport", "verify_suite", "IDENTITY_CLASSES"]


@dataclass
class CheckEntry:
    name: str
    passed: bool
    compared: int
    failures: list = field(default_factory=list)

    def to_dict(self):
        return {"name": self.name, "passed": self.passed,
                "compared": self.compared, "failures": self.failures}


@dataclass
class VerifyReport:
    depth: int
    entries: list

    @property
    def passed(self):
        return all(e.passed for e in self.entries)

    def failing(self):
        return [e.name for e in self.entries if not e.passed]

    def to_dict(self):
        return {"v": 1, "kind": "verify", "depth": self.depth, "passed": self.passed,
                "checks": [e.to_dict() for e in self.entries]}


# -- identity classes: each yields (label, lhs, rhs) ----------------------------

def _free_motzkin(d):
    for n in range(2, max(2, d) + 1):
        j = JacobiParams.symbolic(n // 2 + 1)
        yield f"c_{n}", free_cumulant_motzkin(j, n), \
            free_from_moments(moments_from_jacobi(j, n))[n]


def _sign_coherence(d):
    for n in range(2, max(2, d) + 1):
        r = no_cancellation_check(n)
        yield f"n={n}", r.violations + r.returns_mismatches, []


def _boolean(d):
    j = JacobiParams.symbolic(d // 2 + 1)
    depth = d // 2 + 1
    H = contfrac_series(j, depth, d, "H")
    h = boolean_from_moments(moments_from_jacobi(j, d))
    for n in range(1, d + 1):
        paths = boolean_from_paths(j, n)
        yield f"h_{n} paths=contfrac", paths, H[n]
        yield f"h_{n} paths=1-1/M", paths, h[n]


def _free_from_boolean(d):
    n_top = max(2, d)
    j = JacobiParams.symbolic(n_top // 2 + 1)
    hb = boolean_from_moments(moments_from_jacobi(j, n_top))
    c = free_from_boolean(hb, n_top)
    for n in range(2, n_top + 1):
        yield f"c_{n}", c[n], free_cumulant_motzkin(j, n)


def _gv_bound(d):
    return max(1, min(3, (d + 1) // 2))


def _gv(d):
    b = _gv_bound(d)
    jm = JacobiParams.symbolic(b + 1)
    mm = moments_from_jacobi(jm, 2 * b)
    lf = LukasFree.symbolic(2 * b)
    ml = moments_from_free(symbolic_cumulants(CumulantKind.FREE, 2 * b))
    for p in range(1, b + 2):
        for rows in combinations(range(b + 1), p):
            for cols in combinations(range(b + 1), p):
                spec = HankelMinorSpec(rows, cols)
                yield f"motzkin {spec}", hankel_minor_gv(jm, spec).value, \
                    hankel_minor_det(mm, spec)
                yield f"lukas-free {spec}", hankel_minor_gv(lf, spec).value, \
                    hankel_minor_det(ml, spec)


def _delta_product(d):
    top = min(max(d, 1), 5)
    j = JacobiParams.symbolic(top + 1)
    m = moments_from_jacobi(j, 2 * top)
    for n in range(top + 1):
        expect = 1
        for k in range(1, n + 1):
            expect = expect * _lam(k) ** (n + 1 - k)
        yield f"Delta_{n}", hankel_delta(m, n), expect
        if n <= 4:
            yield f"Delta_{n} configurations", \
                len(hankel_minor_gv(j, HankelMinorSpec.delta(n)).configurations), 1


def _flajolet_matrix(d):
    j = JacobiParams.symbolic(d + 1)
    a = moments_from_jacobi(j, 2 * d, "paths")
    b = moments_from_jacobi(j, 2 * d, "matrix")
    for n in range(2 * d + 1):
        yield f"mu_{n}", a[n], b[n]


def _free_routes(d):
    m = symbolic_moments(d)
    a = free_from_moments(m, "lagrange")
    b = free_from_moments(m, "functional")
    for n in range(1, d + 1):
        yield f"c_{n}", a[n], b[n]


def _free_lukasiewicz(d):
    c = symbolic_cumulants(CumulantKind.FREE, d)
    a = moments_from_free(c, "fixed-point")
    b = moments_from_free(c, "paths")
    for n in range(d + 1):
        yield f"mu_{n}", a[n], b[n]


def _classical_lukasiewicz(d):
    k = symbolic_cumulants(CumulantKind.CLASSICAL, d)
    a = moments_from_classical(k, "exp")
    b = moments_from_classical(k, "paths")
    for n in range(d + 1):
        yield f"mu_{n}", a[n], b[n]


def _boolean_compositions(d):
    h = symbolic_cumulants(CumulantKind.BOOLEAN, d)
    a = moments_from_boolean(h, "geometric")
    b = moments_from_boolean(h, "compositions")
    for n in range(d + 1):
        yield f"mu_{n}", a[n], b[n]


def _orthopoly(d):
    top = min(d, 3)
    j = JacobiParams.symbolic(top + 1)
    m = moments_from_jacobi(j, 2 * top)
    rec = orthopoly_recurrence(j, top)
    for n in range(top + 1):
        yield f"P_{n}", rec[n], orthopoly_determinant(m, n)


def _orthogonality(d):
    for name, lam in (("hermite", lambda k: k), ("semicircle", lambda k: 1)):
        j = JacobiParams((0,) * (d + 1), tuple(lam(k) for k in range(1, d + 1)))
        m = moments_from_jacobi(j, 2 * d)
        r = orthogonality_check(m, orthopoly_recurrence(j, d), d, params=j)
        yield f"{name} failures", r.failures, []
        yield f"{name} norms", r.norms, r.expected_norms


def _jacobi_roundtrip(d):
    size = min(d, 4)
    j = JacobiParams.symbolic(size)
    back = jacobi_from_moments(moments_from_jacobi(j, 2 * size - 1))
    yield "a", back.a, j.a
    yield "lambda", back.lam, j.lam


def _contfrac_moments(d):
    j = JacobiParams.symbolic(d + 1)
    M = contfrac_series(j, d + 1, 2 * d + 1, "M")
    m = moments_from_jacobi(j, 2 * d + 1)
    for n in range(2 * d + 2):
        yield f"mu_{n}", M[n], m[n]


def _path_counts(d):
    top = 2 * d
    motz = [1, 1]
    cat = [1]
    for n in range(1, top):
        motz.append(motz[n] + sum(motz[k] * motz[n - 1 - k] for k in range(n)))
    for n in range(top):
        cat.append(sum(cat[k] * cat[n - k] for k in range(n + 1)))
    for n in range(top + 1):
        yield f"motzkin n={n}", sum(1 for _ in enumerate_paths(n, Discipline.MOTZKIN)), motz[n]
        yield f"catalan n={n}", sum(1 for _ in enumerate_paths(n, Discipline.LUKASIEWICZ)), cat[n]
        yield f"kernel count n={n}", count_paths(n, True, False), cat[n]


def _factorization(d):
    top = min(2 * d, 8)
    bad = []
    for n in range(top + 1):
        for disc in Discipline:
            for p in enumerate_paths(n, disc):
                f = factorize_irreducible(p)
                if concat(f) != p or len(f) != returns_to_zero(p) \
                        or not all(q.is_irreducible() for q in f):
                    bad.append(str(p))
    yield f"paths up to n={top}", bad, []


IDENTITY_CLASSES = {
    "free-motzkin": _free_motzkin,
    "sign-coherence": _sign_coherence,
    "boolean": _boolean,
    "free-from-boolean": _free_from_boolean,
    "gv": _gv,
    "delta-product": _delta_product,
    "flajolet-matrix": _flajolet_matrix,
    "free-routes": _free_routes,
    "free-lukasiewicz": _free_lukasiewicz,
    "classical-lukasiewicz": _classical_lukasiewicz,
    "boolean-compositions": _boolean_compositions,
    "orthopoly": _orthopoly,
    "orthogonality": _orthogonality,
    "jacobi-roundtrip": _jacobi_roundtrip,
    "contfrac-moments": _contfrac_moments,
    "path-counts": _path_counts,
    "factorization": _factorization,
}


def _corrupt(v):
    try:
        return v + 1
    except TypeError:
        return ("perturbed", v)


def verify_suite(depth, identities=None, perturb=None):
    """Run the identity classes at ``depth``; failures become report entries."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    names = list(IDENTITY_CLASSES) if identities is None else list(identities)
    for name in names:
        if name not in IDENTITY_CLASSES:
            raise KeyError(f"unknown identity class {name!r}")
    entries = []
    for name in names:
        failures = []
        count = 0
        try:
            for label, lhs, rhs in IDENTITY_CLASSES[name](depth):
                if perturb == name and count == 0:
                    rhs = _corrupt(rhs)
                count += 1
                if lhs != rhs:
                    failures.append(label)
        except Exception as exc:  # a crash is a failed entry, not a harness crash
            failures.append(f"error: {type(exc).__name__}: {exc}")
        entries.append(CheckEntry(name, not failures, count, failures))
    return VerifyReport(depth, entries)
