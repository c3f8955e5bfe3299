"""Selection between the compiled escape kernels and the numpy fallback.

The default backend is chosen at import time: the compiled extension if it
imported cleanly, otherwise the numpy implementation.  Both expose the same
functions and produce bit-identical results; ``set_default`` switches the
process-wide default and every consumer also accepts an explicit ``backend=``
argument.  No environment variables are consulted.
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _kernels
except ImportError:  # extension not built; the fallback is complete
    _kernels = None

_default = _kernels if _kernels is not None else _kernels_py


def names() -> tuple[str, ...]:
    """Names of the available backends."""
    return ("compiled", "python") if _kernels is not None else ("python",)


def get(name: str | None = None):
    """Backend module by name; None means the current default."""
    if name is None:
        return _default
    if name == "python":
        return _kernels_py
    if name == "compiled":
        if _kernels is None:
            raise RuntimeError("compiled backend is not available in this build")
        return _kernels
    raise ValueError(f"unknown backend {name!r}; choose from {names()}")


def default_name() -> str:
    return _default.NAME


def set_default(name: str) -> None:
    """Switch the process-wide default backend."""
    global _default
    _default = get(name)
