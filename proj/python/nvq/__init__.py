"""n-valued groups, racks and quandles with exact-rational corack bialgebras."""

from nvq._core import *  # noqa: F401,F403
from nvq._core import __doc__  # noqa: F401

__version__ = "0.1.0"
