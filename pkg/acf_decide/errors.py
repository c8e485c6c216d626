#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Exception hierarchy shared by every module.

The command line maps these onto its exit codes: input errors exit with 2,
resource errors with 3, internal errors with 4.
"""

##############################################################################
# Exceptions
##############################################################################


class AcfError(Exception):
    """Root of all errors raised by this package."""


class InputError(AcfError, ValueError):
    """Malformed user input: text, files, symbols, arities, parameters."""


class NotASentenceError(InputError):
    """A formula with free variables was given where a sentence is required."""

    def __init__(self, free_variables):
        """Record the offending free variables.

        Args:
            free_variables: the variables left free
        """
        self.free_variables = tuple(sorted(free_variables))
        super().__init__(
            "expected a sentence, found free variables: {}".format(", ".join(self.free_variables))
        )


class ResourceError(AcfError):
    """A desk-scale guardrail (budget, degree, field size) was exceeded."""


class InternalError(AcfError):
    """Two independent computations disagreed, which signals a bug."""
