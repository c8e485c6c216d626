#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Applications of the decision procedure.

Each question is turned into a ring sentence (or a constructible set) and
answered by quantifier elimination:

* solvability of polynomial systems over an algebraic closure,
* finiteness or cofiniteness of definable subsets of the line,
* absolute irreducibility across characteristics,
* characteristic transfer, checked against finite-field brute force.

The brute-force searches here only ever confirm: a point or a factor found
in a finite field proves existence in the algebraic closure, while failing
to find one in a small extension proves nothing.
"""

##############################################################################
# Imports
##############################################################################

import enum
import functools
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy

from . import poly
from . import qe
from . import semantics
from . import syntax
from . import theories
from .errors import InputError, InternalError, NotASentenceError, ResourceError
from .poly import QQ, ExtensionPoly, GaloisField, MultiPoly
from .qe import Budget, CharCondition, ConstructibleForm, DEFAULT_BUDGET, Sign
from .syntax import Formula

##############################################################################
# Errors
##############################################################################

logger = logging.getLogger(__name__)

#: Largest number of candidate points or factors a brute-force search visits.
SEARCH_LIMIT = 10 ** 6

#: Largest field the existential oracle builds full operation tables for.
ORACLE_FIELD_LIMIT = 512

#: Irreducibility sentences grow quickly; these bound their inputs.
MAX_IRREDUCIBILITY_DEGREE = 3
MAX_IRREDUCIBILITY_VARIABLES = 2


class ApplicationError(InputError):
    """Inputs outside an application's domain (degrees, variable counts)."""


##############################################################################
# Polynomial systems
##############################################################################


@dataclass(frozen=True)
class PolySystem(object):
    """Generators f_1 .. f_k over the rationals, with denominators cleared.

    Args:
        generators: the polynomials
        variables: the unknowns (defaults to every variable of the generators)
    """

    generators: Tuple[MultiPoly, ...]
    variables: Tuple[str, ...] = ()

    def __post_init__(self):
        generators = tuple(self.generators)
        if not generators:
            raise ApplicationError("a polynomial system needs at least one generator")
        cleared = []
        for f in generators:
            if f.field != QQ:
                raise ApplicationError("system generators must have rational coefficients")
            denominators = [Fraction(c).denominator for c in f.terms.values()]
            cleared.append(f * lcm(*denominators) if denominators else f)
        object.__setattr__(self, "generators", tuple(cleared))
        found = sorted({v for f in cleared for v in f.variables})
        variables = tuple(self.variables) if self.variables else tuple(found)
        missing = set(found) - set(variables)
        if missing:
            raise ApplicationError("generators use undeclared variables: {}".format(", ".join(sorted(missing))))
        object.__setattr__(self, "variables", variables)

    @classmethod
    def from_texts(cls, lines: Sequence[str]) -> "PolySystem":
        """Parse one polynomial, or ``lhs = rhs``, per line."""
        generators = []
        for line in lines:
            if "=" in line:
                equation = syntax.parse_formula(line, theories.RING_SIGNATURE)
                if not isinstance(equation, syntax.Eq):
                    raise ApplicationError("expected a polynomial or an equation, got '{}'".format(line))
                generators.append(qe.term_to_poly(equation.left) - qe.term_to_poly(equation.right))
            else:
                generators.append(qe.term_to_poly(syntax.parse_term(line, theories.RING_SIGNATURE)))
        return cls(tuple(generators))

    def sentence(self) -> Formula:
        """``exists x1 ... xn. f_1 = 0 & ... & f_k = 0``."""
        body = syntax.conjunction(
            syntax.Eq(qe.term_from_poly(f), syntax.Constant("0")) for f in self.generators
        )
        return syntax.exists_all(self.variables, body)


def load_system(path: str) -> PolySystem:
    """Read a system file: one polynomial or equation per line, ``#`` starts a comment."""
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise ApplicationError("cannot read system file {}: {}".format(path, e))
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    return PolySystem.from_texts([line for line in lines if line])


def nullstellensatz_decide(
    system: PolySystem, char: int = 0, budget: Budget = DEFAULT_BUDGET, jobs: int = 1
) -> bool:
    """Do the generators have a common zero in the algebraic closure of the prime field?

    Raises:
        ResourceError: if the elimination exceeds its budget
    """
    verdict = qe.decide(system.sentence(), char, budget, jobs)
    logger.info("system of %d generators in characteristic %d: %s", len(system.generators), char,
                "solvable" if verdict else "unsolvable")
    return verdict


def _points(field: GaloisField, dimension: int):
    if field.size ** dimension > SEARCH_LIMIT:
        raise ResourceError("{}^{} points exceed the search limit of {}".format(field, dimension, SEARCH_LIMIT))
    return itertools.product(list(field.elements()), repeat=dimension)


def find_common_zero(system: PolySystem, p: int, k: int = 1) -> Optional[Dict[str, int]]:
    """Search GF(p^k) for a common zero of the system reduced modulo p.

    Returns:
        a point (in the extension field's integer encoding) or None
    """
    field = GaloisField(p, k)
    reduced = [poly.reduce_mod_p(f, p) for f in system.generators]
    for values in _points(field, len(system.variables)):
        point = dict(zip(system.variables, values))
        if all(f.evaluate(point, field) == 0 for f in reduced):
            return point
    return None


##############################################################################
# Strong minimality
##############################################################################


class MinimalityKind(enum.Enum):
    """The two shapes a definable subset of an algebraically closed line can take."""

    FINITE = "Finite"
    COFINITE = "Cofinite"


@dataclass(frozen=True)
class MinimalityReport(object):
    """A finite set with at most ``bound`` points, or a cofinite one missing at most ``bound``."""

    kind: MinimalityKind
    bound: int

    def __post_init__(self):
        if self.bound < 0:
            raise InternalError("minimality bounds are natural numbers")

    def is_finite(self) -> bool:
        return self.kind is MinimalityKind.FINITE

    def to_text(self) -> str:
        return "{}({})".format(self.kind.value, self.bound)

    def __str__(self) -> str:
        return self.to_text()


def _coerce_form(subject: Union[ConstructibleForm, Formula], budget: Budget) -> ConstructibleForm:
    if isinstance(subject, ConstructibleForm):
        return subject
    return qe.eliminate_all(subject, QQ, budget)


def _in_characteristic(form: ConstructibleForm, char: int) -> ConstructibleForm:
    """Reduce rational atoms modulo char, folding those that become trivial."""
    if char == 0:
        return form
    conjunctions = []
    for conjunction in form.disjuncts:
        atoms = []
        for atom in conjunction:
            p = atom.poly
            if isinstance(p.field, poly.Rationals):
                p = poly.reduce_mod_p(p, char)
            atoms.append(qe.make_atom(p, atom.sign))
        if False not in atoms:
            conjunctions.append([a for a in atoms if a is not True])
    return qe.simplify(ConstructibleForm.from_conjunctions(conjunctions))


def _strip_shared_roots(g: MultiPoly, q: MultiPoly) -> MultiPoly:
    while True:
        common = poly.gcd_univariate(g, q)
        if common.is_zero() or common.total_degree() < 1:
            return g
        g = poly.divide_exact(g, common)


def strong_minimality_analyze(
    subject: Union[ConstructibleForm, Formula], char: int = 0, budget: Budget = DEFAULT_BUDGET
) -> MinimalityReport:
    """Classify a one-variable constructible set as finite or cofinite.

    A conjunction with equations is bounded by the degree of their gcd once
    the factors shared with its inequations are removed; a conjunction of
    inequations alone misses at most the sum of their degrees. A union with
    a cofinite part is cofinite, otherwise the finite bounds add up.

    Raises:
        ApplicationError: if more than one variable occurs
    """
    qe.check_characteristic(char)
    form = _in_characteristic(qe.simplify(_coerce_form(subject, budget), char), char)
    variables = form.free_vars()
    if len(variables) > 1:
        raise ApplicationError("expected one variable, found {}".format(", ".join(sorted(variables))))
    if form.is_true():
        return MinimalityReport(MinimalityKind.COFINITE, 0)
    finite_total = 0
    cofinite_bounds = []
    for conjunction in form.disjuncts:
        equations = [a.poly for a in conjunction if a.sign is Sign.ZERO]
        inequations = [a.poly for a in conjunction if a.sign is Sign.NONZERO]
        if equations:
            g = MultiPoly.zero(equations[0].field)
            for f in equations:
                g = poly.gcd_univariate(g, f)
            for q in inequations:
                if not q.is_zero():
                    g = _strip_shared_roots(g, q)
            finite_total += max(int(g.total_degree()), 0) if not g.is_zero() else 0
        else:
            cofinite_bounds.append(sum(max(int(q.total_degree()), 0) for q in inequations if not q.is_zero()))
    if cofinite_bounds:
        return MinimalityReport(MinimalityKind.COFINITE, min(cofinite_bounds))
    return MinimalityReport(MinimalityKind.FINITE, finite_total)


##############################################################################
# Irreducibility
##############################################################################


def _monomials_up_to(variables: Sequence[str], degree: int) -> List[poly.Monomial]:
    monomials = []
    for total in range(degree + 1):
        for exponents in itertools.product(range(total + 1), repeat=len(variables)):
            if sum(exponents) == total:
                monomials.append(tuple((v, e) for v, e in zip(variables, exponents) if e))
    return monomials


def _general_polynomial(prefix: str, variables: Sequence[str], degree: int) -> Tuple[MultiPoly, List[str]]:
    names = []
    total = MultiPoly.zero(QQ)
    for index, monomial in enumerate(_monomials_up_to(variables, degree)):
        name = "{}{}".format(prefix, index)
        names.append(name)
        total = total + MultiPoly.variable(name) * MultiPoly(QQ, {monomial: 1})
    return total, names


def _check_irreducibility_input(f: MultiPoly) -> int:
    if f.field != QQ or any(Fraction(c).denominator != 1 for c in f.terms.values()):
        raise ApplicationError("expected a polynomial with integer coefficients")
    n = f.total_degree()
    if n < 2:
        raise ApplicationError("irreducibility needs total degree at least 2, got {}".format(n))
    if n > MAX_IRREDUCIBILITY_DEGREE or len(f.variables) > MAX_IRREDUCIBILITY_VARIABLES:
        raise ResourceError("irreducibility checks are limited to degree {} in {} variables".format(
            MAX_IRREDUCIBILITY_DEGREE, MAX_IRREDUCIBILITY_VARIABLES))
    return int(n)


def _coefficient_prefix(letter: str, taken: Sequence[str]) -> str:
    prefix = letter
    while any(name.startswith(prefix) and name[len(prefix):].isdigit() for name in taken):
        prefix += letter
    return prefix


def irreducibility_sentence(f: MultiPoly) -> Formula:
    """The sentence saying f has no factorization into factors of positive degree.

    For each split k + l = n (k <= l) it states that for all coefficients of
    general polynomials A of total degree k and B of total degree l in f's
    variables, some coefficient of A * B differs from the matching one of f.

    Raises:
        ApplicationError: for non-integer coefficients or total degree below 2
        ResourceError: beyond total degree 3 or two variables
    """
    n = _check_irreducibility_input(f)
    variables = list(f.variables)
    a_prefix = _coefficient_prefix("a", variables)
    b_prefix = _coefficient_prefix("b", variables)
    clauses = []
    for k in range(1, n // 2 + 1):
        first, first_names = _general_polynomial(a_prefix, variables, k)
        second, second_names = _general_polynomial(b_prefix, variables, n - k)
        product = first * second
        product_parts = _split_by_monomial(product, variables)
        target_parts = _split_by_monomial(f, variables)
        monomials = set(product_parts) | set(target_parts)
        differences = []
        for monomial in sorted(monomials, key=lambda m: poly._order_key(m, variables), reverse=True):
            left = product_parts.get(monomial, MultiPoly.zero(QQ))
            right = target_parts.get(monomial, MultiPoly.zero(QQ))
            differences.append(syntax.Not(syntax.Eq(qe.term_from_poly(left), qe.term_from_poly(right))))
        clauses.append(syntax.forall_all(first_names + second_names, syntax.disjunction(differences)))
    return syntax.conjunction(clauses)


def _split_by_monomial(f: MultiPoly, variables: Sequence[str]) -> Dict[poly.Monomial, MultiPoly]:
    """Group f by monomials in ``variables``; coefficients are polynomials in the rest."""
    chosen = set(variables)
    parts: Dict[poly.Monomial, Dict[poly.Monomial, object]] = {}
    for monomial, coefficient in f.terms.items():
        key = tuple((v, e) for v, e in monomial if v in chosen)
        rest = tuple((v, e) for v, e in monomial if v not in chosen)
        parts.setdefault(key, {})[rest] = coefficient
    return {key: MultiPoly(f.field, terms) for key, terms in parts.items()}


@dataclass(frozen=True)
class NoetherOstrowskiReport(object):
    """Irreducibility verdicts in characteristic zero and at sampled primes.

    Args:
        polynomial: the polynomial checked, as text
        irreducible_char0: the verdict over the algebraic closure of the rationals
        verdicts: (prime, irreducible) pairs in the order sampled, each about f mod p
        spectrum: every characteristic where no factorization into factors of
            total degrees k and n - k exists; this is irreducibility wherever
            reduction keeps the degree n
        exceptions: sampled primes keeping the degree whose verdict differs from
            characteristic zero
        consistent: the degree-keeping sample agrees with the spectrum and the
            spectrum is finite or cofinite in the direction of the
            characteristic-zero verdict
        degree_drops: sampled primes dividing every top-degree coefficient, with
            the degree of f mod p; their verdicts come from a separate
            elimination at the lower degree
    """

    polynomial: str
    irreducible_char0: bool
    verdicts: Tuple[Tuple[int, bool], ...]
    spectrum: CharCondition
    exceptions: Tuple[int, ...]
    consistent: bool
    degree_drops: Tuple[Tuple[int, int], ...] = ()

    def to_dict(self) -> Dict:
        return {
            "polynomial": self.polynomial,
            "char0": self.irreducible_char0,
            "primes": {str(p): verdict for p, verdict in self.verdicts},
            "spectrum": self.spectrum.to_dict(),
            "exceptions": list(self.exceptions),
            "consistent": self.consistent,
            "degree_drops": {str(p): d for p, d in self.degree_drops},
        }


def _irreducible_after_drop(reduced: MultiPoly, p: int, budget: Budget, jobs: int) -> bool:
    """Decide irreducibility of f mod p once its total degree fell below that of f."""
    n = reduced.total_degree()
    if n < 2:
        return n == 1
    lifted = MultiPoly(QQ, reduced.terms)
    form = qe.eliminate_all(irreducibility_sentence(lifted), QQ, budget, jobs)
    return qe.simplify(form, p).is_true()


def noether_ostrowski_check(
    f: MultiPoly, primes: Sequence[int], budget: Budget = DEFAULT_BUDGET, jobs: int = 1
) -> NoetherOstrowskiReport:
    """Decide absolute irreducibility of f in characteristic zero and at each listed prime.

    The irreducibility sentence is eliminated once over the rationals; every
    characteristic then only evaluates the remaining characteristic atoms.
    Primes where f mod p loses degree are decided on their own, since the
    degree-n sentence is satisfied there by 1 * (f mod p).
    """
    for p in primes:
        if p == 0:
            raise ApplicationError("list primes only; characteristic zero is always reported")
        qe.check_characteristic(p)
    sentence = irreducibility_sentence(f)
    n = f.total_degree()
    form = qe.eliminate_all(sentence, QQ, budget, jobs)
    spectrum = qe.spectrum_of_form(form)
    char0 = spectrum.true_in_char0
    verdicts = []
    drops = []
    for p in primes:
        reduced = poly.reduce_mod_p(f, p)
        if reduced.total_degree() < n:
            degree = reduced.total_degree()
            drops.append((p, int(degree) if degree != poly.DEGREE_OF_ZERO else -1))
            verdicts.append((p, _irreducible_after_drop(reduced, p, budget, jobs)))
            logger.info("%s drops to degree %s modulo %d", f, degree, p)
        else:
            verdicts.append((p, qe.simplify(form, p).is_true()))
    dropped = {p for p, _ in drops}
    kept = [(p, verdict) for p, verdict in verdicts if p not in dropped]
    exceptions = tuple(p for p, verdict in kept if verdict != char0)
    consistent = spectrum.is_coherent() and all(verdict == spectrum.holds_at(p) for p, verdict in kept)
    for p, verdict in verdicts:
        logger.debug("%s at p = %d: %s", f, p, "irreducible" if verdict else "reducible")
    return NoetherOstrowskiReport(
        f.to_text(), char0, tuple(verdicts), spectrum, exceptions, consistent, tuple(drops)
    )


def find_factorization(f: MultiPoly, p: int, k: int = 1) -> Optional[Tuple[ExtensionPoly, ExtensionPoly]]:
    """Search GF(p^k) for a factorization of f mod p into factors of positive degree.

    Candidate first factors have their leading coefficient (graded
    lexicographic order) equal to 1; each is tested by exact division.

    Returns:
        (A, B) with A * B equal to f over GF(p^k), or None
    """
    field = GaloisField(p, k)
    target = ExtensionPoly.from_poly(f, field)
    n = target.total_degree()
    if n < 2:
        return None
    variables = list(target.variables)
    elements = list(field.elements())
    for degree in range(1, int(n) // 2 + 1):
        monomials = _monomials_up_to(variables, degree)
        ordered = sorted(monomials, key=lambda m: poly._order_key(m, variables), reverse=True)
        if field.size ** len(ordered) > SEARCH_LIMIT:
            raise ResourceError("factor search over {} is beyond the search limit".format(field))
        top_degree = [m for m in ordered if sum(e for _, e in m) == degree]
        for lead in top_degree:
            free = ordered[ordered.index(lead) + 1:]
            for values in itertools.product(elements, repeat=len(free)):
                terms = {lead: field.one()}
                terms.update(zip(free, values))
                candidate = ExtensionPoly(field, terms)
                quotient = target.divide_exact(candidate)
                if quotient is not None and quotient.total_degree() >= 1:
                    return candidate, quotient
    return None


##############################################################################
# Characteristic transfer
##############################################################################


@functools.lru_cache(maxsize=32)
def _field_structure(p: int, k: int) -> semantics.FiniteStructure:
    return semantics.galois_field_structure(p, k)


def _is_existential(f: Formula, positive: bool = True) -> bool:
    if isinstance(f, (syntax.Eq, syntax.Rel, syntax.Truth)):
        return True
    if isinstance(f, syntax.Not):
        return _is_existential(f.body, not positive)
    if isinstance(f, (syntax.And, syntax.Or)):
        return _is_existential(f.left, positive) and _is_existential(f.right, positive)
    if isinstance(f, syntax.Implies):
        return _is_existential(f.left, not positive) and _is_existential(f.right, positive)
    if isinstance(f, syntax.Exists):
        return positive and _is_existential(f.body, positive)
    if isinstance(f, syntax.Forall):
        return not positive and _is_existential(f.body, positive)
    return False


def _degree_bound(f: Formula) -> int:
    if isinstance(f, syntax.Eq):
        degrees = (qe.term_to_poly(t).total_degree() for t in (f.left, f.right))
        return max([1] + [int(d) for d in degrees if d != poly.DEGREE_OF_ZERO])
    if isinstance(f, syntax.Not):
        return _degree_bound(f.body)
    if isinstance(f, syntax.BINARY_TYPES):
        return max(_degree_bound(f.left), _degree_bound(f.right))
    if isinstance(f, syntax.QUANTIFIER_TYPES):
        return _degree_bound(f.body)
    return 1


def existential_witness(s: Formula, p: int, max_extension: int) -> Optional[int]:
    """The smallest k <= max_extension with s true in GF(p^k), for an existential sentence.

    Existential sentences true in a subfield stay true in the algebraic
    closure, so a hit is a proof of truth in characteristic p.
    """
    for k in range(1, max_extension + 1):
        if p ** k > ORACLE_FIELD_LIMIT:
            break
        if semantics.eval_formula(_field_structure(p, k), s):
            return k
    return None


@dataclass(frozen=True)
class LefschetzRow(object):
    """Verdicts at one prime: from the spectrum, from decide, from the oracle (None if not run)."""

    prime: int
    spectrum: bool
    decided: bool
    witness_degree: Optional[int]
    oracle_ran: bool

    def to_dict(self) -> Dict:
        return {
            "prime": self.prime,
            "spectrum": self.spectrum,
            "decide": self.decided,
            "oracle": (self.witness_degree is not None) if self.oracle_ran else None,
            "witness_extension": self.witness_degree,
        }


@dataclass(frozen=True)
class LefschetzReport(object):
    """A sentence's characteristic spectrum with per-prime cross-checks."""

    sentence: str
    spectrum: CharCondition
    decided_char0: bool
    rows: Tuple[LefschetzRow, ...]

    def to_dict(self) -> Dict:
        return {
            "sentence": self.sentence,
            "spectrum": self.spectrum.to_dict(),
            "char0": self.decided_char0,
            "primes": [row.to_dict() for row in self.rows],
        }


def lefschetz_report(
    s: Formula,
    prime_bound: int = 13,
    max_extension: Optional[int] = None,
    budget: Budget = DEFAULT_BUDGET,
    jobs: int = 1,
) -> LefschetzReport:
    """Compute the characteristic spectrum and cross-check it at every prime up to a bound.

    Each prime gets a separate elimination over GF(p). Existential sentences
    are also searched for witnesses in GF(p^k), k up to ``max_extension``
    (default: the largest total degree in the sentence).

    Raises:
        NotASentenceError: if s has free variables
        InternalError: if any two verdicts disagree
    """
    free = syntax.free_vars(s)
    if free:
        raise NotASentenceError(free)
    spectrum = qe.char_spectrum(s, budget, jobs)
    decided_char0 = qe.decide(s, 0, budget, jobs)
    if decided_char0 != spectrum.true_in_char0 or not spectrum.is_coherent():
        raise InternalError("characteristic zero verdicts disagree for {}".format(syntax.to_string(s)))
    existential = _is_existential(s)
    extension = max_extension or _degree_bound(s)
    rows = []
    for p in (int(q) for q in sympy.primerange(2, prime_bound + 1)):
        expected = spectrum.holds_at(p)
        decided = qe.decide(s, p, budget, jobs)
        if decided != expected:
            raise InternalError("spectrum says {} but decide says {} at p = {}".format(expected, decided, p))
        witness = existential_witness(s, p, extension) if existential else None
        if witness is not None and not expected:
            raise InternalError("GF({}^{}) satisfies a sentence the spectrum rejects at p = {}".format(
                p, witness, p))
        logger.debug("p = %d: spectrum %s, witness extension %s", p, expected, witness)
        rows.append(LefschetzRow(p, expected, decided, witness, existential))
    return LefschetzReport(syntax.to_string(s), spectrum, decided_char0, tuple(rows))
