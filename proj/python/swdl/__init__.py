"""Symplectic Wigner distribution in the linear canonical transform domain.

Thin package over the compiled core: symplectic matrices and their
bound-minimizing selection, the test-signal family, LCT evaluation, the
distribution grids (definition and LCT-product paths), uncertainty moments
and bounds, and the Radon-transform frequency-rate detector.
"""

from swdl._core import *  # noqa: F401,F403
from swdl._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
