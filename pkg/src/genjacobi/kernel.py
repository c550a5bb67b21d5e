"""Kernel backend selection.

The compiled kernel (genjacobi._ckernel, built from Cython) is preferred when
importable; otherwise the pure-Python twin is used.  Set GENJACOBI_PURE=1 to
force the pure kernel, e.g. to compare results or benchmark the two.
"""
import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKENDS = {"python": _pykernel}
if _ckernel is not None:
    BACKENDS["cython"] = _ckernel


def use_backend(name: str) -> None:
    """Rebind the kernel functions to the named backend ('python'/'cython')."""
    global BACKEND, conv, add_scaled, vec_gcd
    try:
        mod = BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown kernel backend {name!r}; have {sorted(BACKENDS)}") from None
    BACKEND = name
    conv = mod.conv
    add_scaled = mod.add_scaled
    vec_gcd = mod.vec_gcd


if os.environ.get("GENJACOBI_PURE", "") not in ("", "0"):
    use_backend("python")
else:
    use_backend("cython" if _ckernel is not None else "python")
