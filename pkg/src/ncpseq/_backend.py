"""Select the compiled enumeration kernels, falling back to pure Python.

Set NCPSEQ_PURE=1 before import to skip the compiled module; the
benchmark and the backend-equivalence tests rely on that switch.
"""

from __future__ import annotations

import os

if os.environ.get("NCPSEQ_PURE"):
    from ncpseq import _kernels_py as kernels

    BACKEND = "pure-python"
else:
    try:
        from ncpseq import _kernels as kernels

        BACKEND = "compiled"
    except ImportError:
        from ncpseq import _kernels_py as kernels

        BACKEND = "pure-python"
