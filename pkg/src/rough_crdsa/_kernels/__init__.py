"""Exhaustive law-checking kernels over operation tables.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the numpy implementation in ``_pykernels`` is used.  Set
``ROUGH_CRDSA_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

FUNCTIONS = (
    "lattice_violation",
    "pseudocomplement_violation",
    "dual_pseudocomplement_violation",
    "stone_violation",
    "dsa_equation_violation",
    "regularity_violation",
    "determination_violation",
    "homomorphism_violation",
)

_compiled = None
if not os.environ.get("ROUGH_CRDSA_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _pykernels


def backends():
    """Map of available backend name to kernel module."""
    found = {"python": _pykernels}
    if _compiled is not None:
        found["cython"] = _compiled
    return found


lattice_violation = _impl.lattice_violation
pseudocomplement_violation = _impl.pseudocomplement_violation
dual_pseudocomplement_violation = _impl.dual_pseudocomplement_violation
stone_violation = _impl.stone_violation
dsa_equation_violation = _impl.dsa_equation_violation
regularity_violation = _impl.regularity_violation
determination_violation = _impl.determination_violation
homomorphism_violation = _impl.homomorphism_violation
