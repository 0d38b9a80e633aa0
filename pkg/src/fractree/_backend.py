"""Kernel backend selection.

Prefers the compiled extension ``fractree._kernels`` and falls back to the
pure-Python twin.  Set the environment variable FRACTREE_PURE to any
nonempty value to force the pure backend (useful for benchmarking and for
debugging suspected extension issues).
"""

import os

if os.environ.get("FRACTREE_PURE"):
    from fractree import _kernels_py as kernels

    BACKEND = "pure"
else:
    try:
        from fractree import _kernels as kernels  # built by setup.py, optional

        BACKEND = "compiled"
    except ImportError:
        from fractree import _kernels_py as kernels

        BACKEND = "pure"
