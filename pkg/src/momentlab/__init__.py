"""Exact moments, cumulants, Jacobi parameters and lattice-path identities.

Everything is computed over the rationals or over polynomial rings with
rational coefficients; nothing is rounded.
"""
from .errors import MomentLabError
from .identities import (
    HankelMinorSpec,
    free_cumulant_motzkin,
    hankel_minor_det,
    hankel_minor_gv,
)
from .jacobi import JacobiParams, jacobi_from_moments, moments_from_jacobi
from .paths import Discipline, LatticePath, enumerate_paths
from .transforms import (
    CumulantKind,
    CumulantSeq,
    MomentSeq,
    free_from_moments,
    from_moments,
    to_moments,
)
from .verify import verify_suite

__version__ = "0.1.0"

__all__ = [
    "MomentLabError",
    "MomentSeq", "CumulantSeq", "CumulantKind", "free_from_moments", "from_moments", "to_moments",
    "JacobiParams", "jacobi_from_moments", "moments_from_jacobi",
    "Discipline", "LatticePath", "enumerate_paths",
    "HankelMinorSpec", "free_cumulant_motzkin", "hankel_minor_det", "hankel_minor_gv",
    "verify_suite",
]
