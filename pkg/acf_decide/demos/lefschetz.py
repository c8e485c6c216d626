#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Prints the characteristic spectra of a handful of classic ring sentences.

Each spectrum is cross-checked prime by prime, and existential sentences are
additionally searched for witnesses in small finite fields.
"""

##############################################################################
# Imports
##############################################################################

import argparse
import sys
from typing import List, Optional, Sequence, Tuple

from .. import apps
from .. import syntax
from .. import theories
from ..errors import AcfError
from ..parameters import Parameters
from ..syntax import Formula

##############################################################################
# Implementation
##############################################################################

CLASSICS: Tuple[Tuple[str, str], ...] = (
    ("i exists", "exists x. x*x + 1 = 0"),
    ("two is zero", "1 + 1 = 0"),
    ("three is nonzero", "1 + 1 + 1 != 0"),
    ("two has no square root", "forall x. x*x != 1 + 1"),
    ("a unit with a negative inverse", "exists x. exists y. x*y = 1 & x + y = 0"),
    ("cube roots of unity are distinct", "exists x. x*x + x + 1 = 0 & x != 1"),
)


def sentences() -> List[Tuple[str, Formula]]:
    """The classic sentences, followed by two built from the axiom lists."""
    parsed = [(label, syntax.parse_formula(text, theories.RING_SIGNATURE)) for label, text in CLASSICS]
    parsed.append(("quadratics have roots", theories.acf_axiom(2)))
    parsed.append(("characteristic not 2, 3 or 5", syntax.conjunction(theories.char_zero_axioms(5))))
    return parsed


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = argparse.ArgumentParser(prog="acf-demo-lefschetz", description=__doc__.splitlines()[0])
    parser.add_argument("--prime-bound", dest="prime_bound", default=None, help="largest prime checked (default 7)")
    args = parser.parse_args(argv)
    try:
        parameters = Parameters(fields=vars(args))
        parameters.register_int_parameter(key="prime_bound", default_value=7, minimum=2)
        for label, sentence in sentences():
            report = apps.lefschetz_report(sentence, parameters.prime_bound.value)
            out.write("{}\n  {}\n  {}\n".format(label, syntax.to_string(sentence), report.spectrum.to_text()))
            for row in report.rows:
                if row.witness_degree is not None:
                    out.write("  p = {}: witness in GF({}^{})\n".format(row.prime, row.prime, row.witness_degree))
    except AcfError as e:
        sys.stderr.write("error: {}\n".format(e))
        return 2
    return 0


def console_main():
    """Entry point for the console script."""
    sys.exit(main())
