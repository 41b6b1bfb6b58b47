"""Typed molecular structures: Dietz constitutions, orbitals, geometry and
trace-based sampling."""

from ._moltype import *  # noqa: F401,F403
from ._moltype import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
