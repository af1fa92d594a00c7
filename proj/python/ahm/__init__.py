"""Almost Hadamard matrices: construction, verification and optimization."""

from ._ahm import *  # noqa: F401,F403
from ._ahm import __doc__  # noqa: F401
