"""Load the kernel source as a plain-Python module and as a numba module."""

import importlib.util
import os
import sys

import numpy as np

_SOURCE = os.path.join(os.path.dirname(__file__), "_kernels.py")
_loaded = {}

BACKENDS = ("auto", "python", "jit")


def load(jit, debug=False, name=None):
    """Execute ``_kernels.py`` with the given switches and cache the module.

    ``name`` lets tests build a private copy whose comparison helpers can be
    replaced without affecting the shared modules.
    """
    if name is None:
        name = "quintselect._kernels_" + ("jit" if jit else "py") + ("_debug" if debug else "")
        if name in _loaded:
            return _loaded[name]
    spec = importlib.util.spec_from_file_location(name, _SOURCE)
    mod = importlib.util.module_from_spec(spec)
    mod.JIT = bool(jit)
    mod.DEBUG = bool(debug)
    # numba's on-disk cache resolves functions through sys.modules
    sys.modules[name] = mod
    spec.loader.exec_module(mod)
    _loaded[name] = mod
    return mod


def debug_enabled():
    return os.environ.get("QUINTSELECT_DEBUG", "") not in ("", "0")


def wants_jit(x, backend):
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")
    if backend == "python":
        return False
    numeric = isinstance(x, np.ndarray) and x.ndim == 1 and x.dtype.kind in "iuf"
    if backend == "jit":
        if not numeric:
            raise TypeError("the jit backend needs a 1-d numeric numpy array")
        return True
    return numeric


def kernels_for(x, backend="auto"):
    return load(wants_jit(x, backend), debug_enabled())


def python_kernels():
    return load(False, debug_enabled())
