#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""First-order logic over finite structures and decisions for algebraically closed fields."""

##############################################################################
# Version
##############################################################################

# Update in setup.py as well
__version__ = "0.1.0"

##############################################################################
# Imports
##############################################################################

from . import errors  # noqa
from . import syntax  # noqa
from . import theories  # noqa
from . import semantics  # noqa
from . import poly  # noqa
from . import qe  # noqa
from . import apps  # noqa
from . import parameters  # noqa
from . import cli  # noqa
from . import demos  # noqa
