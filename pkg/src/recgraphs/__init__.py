"""Graph constructions over stage-bounded programs, checked with exact solvers.

The public API is re-exported here; submodules hold the details.
"""

from .checks import *  # noqa: F401,F403
from .codes import *  # noqa: F401,F403
from .constructions import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .graphs import *  # noqa: F401,F403
from .machine import *  # noqa: F401,F403
from .registry import *  # noqa: F401,F403
from .solvers import *  # noqa: F401,F403
from . import checks, codes, constructions, errors, graphs, machine, registry, solvers

__version__ = "0.1.0"

__all__ = sorted(
    {
        name
        for mod in (checks, codes, constructions, errors, graphs, machine, registry, solvers)
        for name in getattr(mod, "__all__", ())
    }
)
