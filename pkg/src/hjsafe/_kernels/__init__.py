"""Sweep-kernel backends for the HJI solver.

The right-hand side of the pseudo-time evolution (WENO5 reconstruction +
Lax-Friedrichs Hamiltonian over the full grid) dominates solver runtime.
Two interchangeable implementations exist:

    numpy_backend   vectorized numpy, always available
    _cysweep        Cython translation of the same arithmetic

The compiled backend is preferred when importable. Selection happens once
at import; set HJSAFE_KERNEL=python or HJSAFE_KERNEL=cython to force one
(forcing cython raises if the extension is missing). Both backends expose

    sweep_rhs(wpad, x2row, lo, hi, accel_up, accel_dn,
              dx1, dx2, alpha1, alpha2, order) -> (n1, n2) array

where wpad carries 3 ghost layers per side and order is 5 (WENO5) or 1
(first-order upwind).
"""

import os

from . import numpy_backend

try:
    from . import _cysweep
    _HAVE_CY = True
except ImportError:
    _cysweep = None
    _HAVE_CY = False


def available_backends():
    names = ["python"]
    if _HAVE_CY:
        names.append("cython")
    return names


def get_backend(name=None):
    """Resolve a backend module by name; None follows HJSAFE_KERNEL/default."""
    if name is None:
        name = os.environ.get("HJSAFE_KERNEL", "").strip().lower() or None
    if name is None:
        return _cysweep if _HAVE_CY else numpy_backend
    if name in ("python", "numpy"):
        return numpy_backend
    if name == "cython":
        if not _HAVE_CY:
            raise RuntimeError("cython kernel requested but the compiled "
                               "extension is not importable")
        return _cysweep
    raise ValueError(f"unknown kernel backend {name!r}")


def active_backend_name(name=None) -> str:
    return "cython" if get_backend(name) is _cysweep and _HAVE_CY else "python"
