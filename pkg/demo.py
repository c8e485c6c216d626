#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Imports
##############################################################################

import sys

import acf_decide

##############################################################################
# Entry Points
##############################################################################


# Runs the characteristic spectrum demo from a source checkout, without
# installing the console scripts.

if __name__ == "__main__":
    sys.exit(acf_decide.demos.lefschetz.main())
