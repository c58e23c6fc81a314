"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module.  Set ``PATHHAM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("PATHHAM_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
ham_complete = _impl.ham_complete
canonical_perm = _impl.canonical_perm
is_canonical = _impl.is_canonical
