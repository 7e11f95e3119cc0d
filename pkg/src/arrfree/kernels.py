"""Hot-loop selection: compiled extension when built, pure Python otherwise.

Set ``ARRFREE_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if not os.environ.get("ARRFREE_PURE_PYTHON"):
    try:
        from ._ckernels import axpy  # noqa: F401
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import axpy  # noqa: F401
