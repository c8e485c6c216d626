#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Command line surface.

.. code-block:: bash

    $ acf-decide decide --char 0 "exists x. x*x + 1 = 0"
    true
    $ acf-decide qe "exists x. a*x + b = 0"
    (a != 0) | (a = 0 & b = 0)
    $ acf-decide spectrum --format json "1 + 1 = 0"

Exit codes: 0 true or success, 1 false, 2 input error, 3 resource limit,
4 internal inconsistency.
"""

##############################################################################
# Imports
##############################################################################

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from . import apps
from . import qe
from . import semantics
from . import syntax
from . import theories
from .errors import InputError, InternalError, ResourceError
from .parameters import RunConfig
from .poly import QQ, PrimeField

##############################################################################
# Constants
##############################################################################

logger = logging.getLogger(__name__)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_ERROR = 3
EXIT_INTERNAL_ERROR = 4

#: Largest extension degree the --confirm searches try.
CONFIRM_EXTENSION = 2

##############################################################################
# Helpers
##############################################################################


class Outcome(object):
    """What a command produced: an exit code, text lines and a structured document."""

    def __init__(self, code: int, lines: Sequence[str], document: Dict[str, Any]):
        self.code = code
        self.lines = list(lines)
        self.document = document


def _verdict(value: bool) -> str:
    return "true" if value else "false"


def _ast(node) -> Any:
    """Nested dictionaries mirroring a term or formula tree."""
    if isinstance(node, syntax.Variable):
        return {"var": node.name}
    if isinstance(node, syntax.Constant):
        return {"const": node.name}
    if isinstance(node, syntax.Apply):
        value = syntax.numeral_value(node)
        if value is not None:
            return {"numeral": value}
        return {"apply": node.function, "args": [_ast(a) for a in node.args]}
    if isinstance(node, syntax.Eq):
        return {"eq": [_ast(node.left), _ast(node.right)]}
    if isinstance(node, syntax.Rel):
        return {"rel": node.relation, "args": [_ast(a) for a in node.args]}
    if isinstance(node, syntax.Truth):
        return {"truth": node.value}
    if isinstance(node, syntax.Not):
        return {"not": _ast(node.body)}
    if isinstance(node, syntax.BINARY_TYPES):
        return {type(node).__name__.lower(): [_ast(node.left), _ast(node.right)]}
    if isinstance(node, syntax.QUANTIFIER_TYPES):
        return {type(node).__name__.lower(): node.var, "body": _ast(node.body)}
    raise InternalError("unexpected node {!r}".format(node))


def _ast_lines(node, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(node, syntax.TERM_TYPES):
        return [pad + syntax.to_string(node)]
    if isinstance(node, (syntax.Eq, syntax.Rel, syntax.Truth)):
        return [pad + syntax.to_string(node)]
    if isinstance(node, syntax.Not):
        return [pad + "Not"] + _ast_lines(node.body, indent + 1)
    if isinstance(node, syntax.BINARY_TYPES):
        return [pad + type(node).__name__] + _ast_lines(node.left, indent + 1) + _ast_lines(node.right, indent + 1)
    return [pad + "{} {}".format(type(node).__name__, node.var)] + _ast_lines(node.body, indent + 1)


def _signature(path: Optional[str], default: Optional[syntax.Signature] = theories.RING_SIGNATURE):
    return syntax.load_signature(path) if path else default


def _assignment(pairs: Optional[Sequence[str]]) -> Dict[str, str]:
    assignment = {}
    for pair in pairs or []:
        name, separator, value = pair.partition("=")
        if not separator or not name.strip():
            raise InputError("assignments look like 'x=element', got '{}'".format(pair))
        assignment[name.strip()] = value.strip()
    return assignment


def _budget(config: RunConfig) -> qe.Budget:
    return qe.Budget(max_disjuncts=config.budget.value)


##############################################################################
# Commands
##############################################################################


def cmd_parse(args: argparse.Namespace, config: RunConfig) -> Outcome:
    formula = syntax.parse_formula(args.formula, _signature(args.signature))
    free = sorted(syntax.free_vars(formula))
    lines = _ast_lines(formula) + [
        "text: {}".format(syntax.to_string(formula)),
        "sentence: {}".format(_verdict(not free)),
    ]
    if free:
        lines.append("free: {{{}}}".format(", ".join(free)))
    document = {
        "formula": syntax.to_string(formula),
        "ast": _ast(formula),
        "sentence": not free,
        "free": free,
        "quantifier_rank": syntax.quantifier_rank(formula),
    }
    return Outcome(EXIT_TRUE, lines, document)


def cmd_eval(args: argparse.Namespace, config: RunConfig) -> Outcome:
    structure = semantics.load_structure(config.paths.value[0], _signature(args.signature, None))
    formula = syntax.parse_formula(args.formula, structure.signature)
    verdict = semantics.eval_formula(structure, formula, _assignment(args.assign))
    return Outcome(EXIT_TRUE if verdict else EXIT_FALSE, [_verdict(verdict)], {"value": verdict})


def cmd_qe(args: argparse.Namespace, config: RunConfig) -> Outcome:
    char = config.characteristic.value
    formula = syntax.parse_formula(args.formula, theories.RING_SIGNATURE)
    field = QQ if char == 0 else PrimeField(char)
    form = qe.simplify(qe.eliminate_all(formula, field, _budget(config), config.jobs.value), char)
    text = form.to_text()
    return Outcome(EXIT_TRUE, [text], {"form": text, "disjuncts": len(form.disjuncts)})


def cmd_decide(args: argparse.Namespace, config: RunConfig) -> Outcome:
    sentence = syntax.parse_formula(args.sentence, theories.RING_SIGNATURE)
    verdict = qe.decide(sentence, config.characteristic.value, _budget(config), config.jobs.value)
    return Outcome(EXIT_TRUE if verdict else EXIT_FALSE, [_verdict(verdict)], {"value": verdict})


def cmd_spectrum(args: argparse.Namespace, config: RunConfig) -> Outcome:
    sentence = syntax.parse_formula(args.sentence, theories.RING_SIGNATURE)
    spectrum = qe.char_spectrum(sentence, _budget(config), config.jobs.value)
    return Outcome(EXIT_TRUE, [spectrum.to_text()], {"spectrum": spectrum.to_dict()})


def cmd_nss(args: argparse.Namespace, config: RunConfig) -> Outcome:
    char = config.characteristic.value
    system = apps.load_system(config.paths.value[0])
    verdict = apps.nullstellensatz_decide(system, char, _budget(config), config.jobs.value)
    lines = [_verdict(verdict)]
    document: Dict[str, Any] = {"value": verdict, "variables": list(system.variables)}
    if args.confirm and verdict and char != 0:
        point, degree = None, None
        for k in range(1, CONFIRM_EXTENSION + 1):
            point = apps.find_common_zero(system, char, k)
            if point is not None:
                degree = k
                break
        document["witness"] = {"extension": degree, "point": point}
        if point is None:
            lines.append("no common zero in GF({}^k) for k <= {}".format(char, CONFIRM_EXTENSION))
        else:
            values = ", ".join("{} = {}".format(name, value) for name, value in point.items())
            lines.append("common zero in GF({}^{}): {}".format(char, degree, values))
    return Outcome(EXIT_TRUE if verdict else EXIT_FALSE, lines, document)


def cmd_irreducible(args: argparse.Namespace, config: RunConfig) -> Outcome:
    f = qe.term_to_poly(syntax.parse_term(args.polynomial, theories.RING_SIGNATURE))
    report = apps.noether_ostrowski_check(f, config.primes.value, _budget(config), config.jobs.value)

    def describe(verdict: bool) -> str:
        return "irreducible" if verdict else "reducible"

    lines = ["char 0: {}".format(describe(report.irreducible_char0))]
    drops = dict(report.degree_drops)
    for p, verdict in report.verdicts:
        note = " (degree drops to {})".format(drops[p]) if p in drops else ""
        lines.append("p = {}: {}{}".format(p, describe(verdict), note))
    lines.append("spectrum: {}".format(report.spectrum.to_text()))
    lines.append("consistent: {}".format(_verdict(report.consistent)))
    document = report.to_dict()
    if args.confirm:
        factors = {}
        for p, verdict in report.verdicts:
            if verdict:
                continue
            found = None
            for k in range(1, CONFIRM_EXTENSION + 1):
                found = apps.find_factorization(f, p, k)
                if found is not None:
                    factors[str(p)] = {"extension": k, "factors": [found[0].to_text(), found[1].to_text()]}
                    lines.append("p = {}: ({}) * ({}) over GF({}^{})".format(
                        p, found[0].to_text(), found[1].to_text(), p, k))
                    break
            if found is None:
                factors[str(p)] = None
                lines.append("p = {}: no factor found for k <= {}".format(p, CONFIRM_EXTENSION))
        document["factors"] = factors
    return Outcome(EXIT_TRUE if report.irreducible_char0 else EXIT_FALSE, lines, document)


def cmd_minimal(args: argparse.Namespace, config: RunConfig) -> Outcome:
    formula = syntax.parse_formula(args.formula, theories.RING_SIGNATURE)
    report = apps.strong_minimality_analyze(formula, config.characteristic.value, _budget(config))
    return Outcome(EXIT_TRUE, [report.to_text()], {"kind": report.kind.value, "bound": report.bound})


def cmd_lefschetz(args: argparse.Namespace, config: RunConfig) -> Outcome:
    sentence = syntax.parse_formula(args.sentence, theories.RING_SIGNATURE)
    report = apps.lefschetz_report(
        sentence, config.prime_bound.value, args.max_extension, _budget(config), config.jobs.value
    )
    lines = ["spectrum: {}".format(report.spectrum.to_text())]
    for row in report.rows:
        if not row.oracle_ran:
            oracle = "n/a"
        elif row.witness_degree is None:
            oracle = "unconfirmed"
        else:
            oracle = "witness in GF({}^{})".format(row.prime, row.witness_degree)
        lines.append("p = {}: {} ({})".format(row.prime, _verdict(row.decided), oracle))
    return Outcome(EXIT_TRUE, lines, report.to_dict())


def cmd_equiv(args: argparse.Namespace, config: RunConfig) -> Outcome:
    first, second = (semantics.load_structure(path) for path in config.paths.value[:2])
    verdict = semantics.elem_equiv_at_depth(first, second, config.depth.value)
    return Outcome(EXIT_TRUE if verdict else EXIT_FALSE, [_verdict(verdict)], {"value": verdict})


def cmd_iso(args: argparse.Namespace, config: RunConfig) -> Outcome:
    first, second = (semantics.load_structure(path) for path in config.paths.value[:2])
    mapping = semantics.find_isomorphism(first, second)
    if mapping is None:
        return Outcome(EXIT_FALSE, ["false"], {"value": False, "mapping": None})
    lines = ["true"] + ["{} -> {}".format(a, b) for a, b in sorted(mapping.items(), key=lambda item: str(item[0]))]
    document = {"value": True, "mapping": {str(a): str(b) for a, b in mapping.items()}}
    return Outcome(EXIT_TRUE, lines, document)


def cmd_induction(args: argparse.Namespace, config: RunConfig) -> Outcome:
    sig = _signature(args.signature, theories.ARITHMETIC_SIGNATURE)
    axiom = syntax.induction_axiom(syntax.parse_formula(args.formula, sig), args.var, sig)
    text = syntax.to_string(axiom)
    return Outcome(EXIT_TRUE, [text], {"axiom": text})


##############################################################################
# Parser
##############################################################################


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debugging")
    parser.add_argument("--format", default=None, help="output mode: text (default) or json")
    parser.add_argument("--all-parameters", action="store_true", help="echo every parameter, not just given ones")
    parser.add_argument("--jobs", default=None, help="worker processes for independent eliminations")
    parser.add_argument("--budget", default=None, help="largest number of disjuncts kept while eliminating")


COMMANDS: Dict[str, Tuple[Callable[[argparse.Namespace, RunConfig], Outcome], str]] = {
    "parse": (cmd_parse, "parse a formula and report its free variables"),
    "eval": (cmd_eval, "evaluate a formula in a finite structure"),
    "qe": (cmd_qe, "eliminate quantifiers from a ring formula"),
    "decide": (cmd_decide, "decide a ring sentence in an algebraically closed field"),
    "spectrum": (cmd_spectrum, "list the characteristics in which a sentence holds"),
    "nss": (cmd_nss, "decide whether a polynomial system has a common zero"),
    "irreducible": (cmd_irreducible, "decide absolute irreducibility across characteristics"),
    "minimal": (cmd_minimal, "classify a one-variable definable set as finite or cofinite"),
    "lefschetz": (cmd_lefschetz, "cross-check a sentence's spectrum prime by prime"),
    "equiv": (cmd_equiv, "play the back-and-forth game between two structures"),
    "iso": (cmd_iso, "search for an isomorphism between two structures"),
    "induction": (cmd_induction, "print the induction axiom for a formula"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acf-decide",
        description="First-order logic over finite structures and decisions for algebraically closed fields.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    sub = {}
    for name, (_, summary) in COMMANDS.items():
        sub[name] = subparsers.add_parser(name, help=summary, description=summary)
        _add_common(sub[name])

    sub["parse"].add_argument("formula")
    sub["parse"].add_argument("--signature", help="JSON signature file (default: the ring language)")

    sub["eval"].add_argument("paths", nargs=1, metavar="STRUCTURE")
    sub["eval"].add_argument("formula")
    sub["eval"].add_argument("--assign", action="append", metavar="VAR=ELEMENT", help="value of a free variable")
    sub["eval"].add_argument("--signature", help="JSON signature file (default: inferred from the structure)")

    for name, positional in (("qe", "formula"), ("decide", "sentence"), ("minimal", "formula")):
        sub[name].add_argument(positional)
        sub[name].add_argument("--char", dest="characteristic", default=None, help="0 or a prime (default 0)")
    sub["spectrum"].add_argument("sentence")

    sub["nss"].add_argument("paths", nargs=1, metavar="SYSTEM")
    sub["nss"].add_argument("--char", dest="characteristic", default=None, help="0 or a prime (default 0)")
    sub["nss"].add_argument("--confirm", action="store_true", help="search small finite fields for a common zero")

    sub["irreducible"].add_argument("polynomial")
    sub["irreducible"].add_argument("--primes", default=None, help="primes to sample, e.g. 2,3,5")
    sub["irreducible"].add_argument("--confirm", action="store_true",
                                    help="search small finite fields for the factors of reducible cases")

    sub["lefschetz"].add_argument("sentence")
    sub["lefschetz"].add_argument("--prime-bound", dest="prime_bound", default=None, help="largest prime checked")
    sub["lefschetz"].add_argument("--max-extension", dest="max_extension", type=int, default=None,
                                  help="largest extension degree the witness search tries")

    sub["equiv"].add_argument("paths", nargs=2, metavar="STRUCTURE")
    sub["equiv"].add_argument("--depth", default=None, help="number of rounds (default 2)")

    sub["iso"].add_argument("paths", nargs=2, metavar="STRUCTURE")

    sub["induction"].add_argument("formula")
    sub["induction"].add_argument("--var", required=True, help="the induction variable")
    sub["induction"].add_argument("--signature", help="JSON signature file (default: arithmetic)")
    return parser


##############################################################################
# Entry Points
##############################################################################


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _emit(outcome: Outcome, config: Optional[RunConfig], structured: bool, out):
    if structured:
        document = {"command": config.command.value if config else None}
        document.update(outcome.document)
        document["exit_code"] = outcome.code
        document["parameters"] = config.to_fields() if config else {}
        out.write(json.dumps(document, indent=2) + "\n")
    else:
        for line in outcome.lines:
            out.write(line + "\n")


def _error(code: int, kind: str, error: Exception) -> Outcome:
    document = {"error": {"kind": kind, "message": str(error)}}
    position = getattr(error, "position", None)
    if position is not None:
        document["error"]["position"] = position
    return Outcome(code, ["{} error: {}".format(kind, error)], document)


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Run one command and return its exit code.

    Args:
        argv: command line arguments (defaults to ``sys.argv[1:]``)
        out: stream for results (defaults to stdout); errors in text mode go to stderr
    """
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    structured = args.format == "json"
    config = None
    try:
        config = RunConfig(fields=vars(args), set_all=args.all_parameters)
        outcome = COMMANDS[args.command][0](args, config)
    except InputError as e:
        outcome = _error(EXIT_INPUT_ERROR, "input", e)
    except ResourceError as e:
        outcome = _error(EXIT_RESOURCE_ERROR, "resource", e)
    except InternalError as e:
        logger.error("internal inconsistency: %s", e)
        outcome = _error(EXIT_INTERNAL_ERROR, "internal", e)
    except Exception as e:
        # a crash must never read as the verdict "false"
        logger.exception("unexpected failure in %s", args.command)
        outcome = _error(EXIT_INTERNAL_ERROR, "internal", e)
    if outcome.code > EXIT_FALSE and not structured:
        for line in outcome.lines:
            sys.stderr.write(line + "\n")
    else:
        _emit(outcome, config, structured, out)
    logger.info("%s finished with exit code %d", args.command, outcome.code)
    return outcome.code


def console_main():
    """Entry point for the console script."""
    sys.exit(main())
