"""Backend selection for the sparse term kernels.

The compiled extension is used when it imports; setting ``SYMID_PURE_PYTHON=1``
forces the pure-Python implementation.
"""

import os

from symid import _kernels_py

if os.environ.get("SYMID_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from symid import _kernels_c as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

add_terms = _impl.add_terms
mul_terms = _impl.mul_terms
mul_terms_truncated = _impl.mul_terms_truncated
