"""Backend selection for the combinatorial kernels.

The compiled extension is used when it was built; setting
``MOMENTLAB_PURE_PYTHON=1`` forces the reference implementation.
"""
import os

from . import _pykernels as python_impl

try:
    from . import _ckernels as compiled_impl
except ImportError:  # extension not built
    compiled_impl = None

if compiled_impl is not None and not os.environ.get("MOMENTLAB_PURE_PYTHON"):
    _impl = compiled_impl
    BACKEND = "cython"
else:
    _impl = python_impl
    BACKEND = "python"

path_levels = _impl.path_levels
count_paths = _impl.count_paths
disjoint_configurations = _impl.disjoint_configurations

__all__ = [
    "BACKEND", "python_impl", "compiled_impl",
    "path_levels", "count_paths", "disjoint_configurations",
]
