"""Backend selection for the search kernels.

Prefers the compiled extension and falls back to the pure-Python module when
the extension is missing. Set ``RESOLVEKIT_PURE=1`` to force the pure lane
(used by the benchmark and the cross-backend tests).
"""

import os

from . import _pykernels

if os.environ.get("RESOLVEKIT_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = "pure" if _impl is _pykernels else "compiled"

bfs_all_pairs = _impl.bfs_all_pairs
set_resolves = _impl.set_resolves
search_pd = _impl.search_pd
