"""Finite contract algebras, augmented Stone algebras and the adjunction
between them.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._contralg import *  # noqa: F401,F403
from ._contralg import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc or __doc__
