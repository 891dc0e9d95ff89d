"""Light sheets, caustics and Maxwell sets of world hyper-sheets.

Thin Python surface over the compiled core. In an installed wheel the
extension sits next to this package; during development the build tree can
be pointed at with BRC_EXT_DIR.
"""

import os
import sys

_ext_dir = os.environ.get("BRC_EXT_DIR")
if _ext_dir and _ext_dir not in sys.path:
    sys.path.insert(0, _ext_dir)

try:
    from _core import *  # noqa: F401,F403  (development layout)
    from _core import __doc__ as _core_doc  # noqa: F401
except ImportError:
    from ._core import *  # noqa: F401,F403  (installed layout)

__version__ = "0.1.0"
