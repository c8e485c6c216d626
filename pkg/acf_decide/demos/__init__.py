#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Exemplar applications."""

##############################################################################
# Imports
##############################################################################

from . import lefschetz  # noqa
