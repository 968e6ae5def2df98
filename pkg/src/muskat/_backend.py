"""Kernel backend selection.

The hot scalar kernels exist twice: as the compiled extension
``muskat._kernels`` and as the pure-Python module ``muskat._kernels_py``.
The compiled one is preferred when importable; set ``MUSKAT_KERNELS=python``
(or ``c``/``compiled``) to force a choice.  ``benchmarks/bench_kernels.py``
compares the two.
"""

import os

_choice = os.environ.get("MUSKAT_KERNELS", "").strip().lower()

if _choice in ("py", "python", "pure"):
    from . import _kernels_py as kernels

    BACKEND = "python"
elif _choice in ("c", "cython", "compiled"):
    from . import _kernels as kernels  # type: ignore[no-redef]

    BACKEND = "compiled"
elif _choice == "":
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"
else:
    raise ImportError(f"unrecognized MUSKAT_KERNELS value: {_choice!r}")
