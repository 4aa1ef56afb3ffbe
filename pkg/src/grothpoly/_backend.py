"""Term-kernel selection.

Tries the compiled kernel first and falls back to the pure-Python one.
``GROTHPOLY_KERNEL=python`` or ``=c`` forces a choice (forcing ``c`` when
the extension is missing is an error rather than a silent fallback).
The active module is the ``kernel`` attribute; tests and the benchmark
swap it with ``set_kernel``.
"""

import os

from . import _termkernel_py


def _load_compiled():
    try:
        from . import _termkernel_c
    except ImportError:
        return None
    return _termkernel_c


def _choose():
    forced = os.environ.get("GROTHPOLY_KERNEL", "").strip().lower()
    if forced in ("python", "py"):
        return _termkernel_py
    compiled = _load_compiled()
    if forced == "c":
        if compiled is None:
            raise ImportError(
                "GROTHPOLY_KERNEL=c but the compiled kernel is not built"
            )
        return compiled
    if forced:
        raise ValueError(f"GROTHPOLY_KERNEL must be 'c' or 'python', not {forced!r}")
    return compiled if compiled is not None else _termkernel_py


kernel = _choose()


def kernel_name() -> str:
    return "c" if kernel.__name__.endswith("_c") else "python"


def available_kernels() -> list[str]:
    names = ["python"]
    if _load_compiled() is not None:
        names.insert(0, "c")
    return names


def set_kernel(name: str):
    """Swap the active kernel ('c' or 'python'); returns the module."""
    global kernel
    if name in ("python", "py"):
        kernel = _termkernel_py
    elif name == "c":
        compiled = _load_compiled()
        if compiled is None:
            raise ImportError("compiled kernel not available")
        kernel = compiled
    else:
        raise ValueError(f"unknown kernel {name!r}")
    return kernel
