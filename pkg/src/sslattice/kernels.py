"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``SSLATTICE_PURE=1`` in the environment to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("SSLATTICE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

lattice_tables = _impl.lattice_tables
pentagon_any = _impl.pentagon_any
pentagon_short = _impl.pentagon_short
pentagon_long = _impl.pentagon_long
modular_pair_violation = _impl.modular_pair_violation
right_modular_violation = _impl.right_modular_violation
right_chain_violation = _impl.right_chain_violation
distributive_violation = _impl.distributive_violation
closure = _impl.closure
closure1 = _impl.closure1

__all__ = [
    "BACKEND",
    "lattice_tables",
    "pentagon_any",
    "pentagon_short",
    "pentagon_long",
    "modular_pair_violation",
    "right_modular_violation",
    "right_chain_violation",
    "distributive_violation",
    "closure",
    "closure1",
]
