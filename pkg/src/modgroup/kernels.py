"""Backend selection for the enumeration kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module with the identical surface takes over.
"""
from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

DEFAULT = "cython" if _ckernels is not None else "python"


def available() -> list[str]:
    return sorted(_BACKENDS)


def get(name: str | None = None) -> ModuleType:
    """Kernel module by name; ``None`` selects the fastest available."""
    name = name or DEFAULT
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {available()}") from None
