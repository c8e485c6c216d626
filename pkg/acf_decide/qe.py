#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Quantifier elimination for algebraically closed fields.

Ring-language formulas are turned into polynomial atoms ``p = 0`` and
``p != 0``, put into disjunctive normal form and their quantifiers are
eliminated one variable at a time, innermost first.

Eliminating ``exists x`` from a conjunction splits on the vanishing of
leading coefficients. Once every leading coefficient is settled:

* with no equations, infinitely many points avoid finitely many nonzero
  polynomials, so it suffices that each inequation keeps a nonzero
  coefficient;
* several equations are reduced by pseudo-remainders against an equation
  whose leading coefficient is known to be nonzero;
* one equation ``p = 0`` with inequations ``q_j != 0`` has a solution iff p
  does not divide ``(q_1 ... q_m)^deg(p)``, i.e. iff some coefficient of the
  pseudo-remainder is nonzero.

Over the rationals only 1 and -1 count as units. Any other integer constant
stays symbolic as a *characteristic atom* (``2 = 0`` holds exactly in
characteristic 2), so a single elimination is valid in every characteristic.
"""

##############################################################################
# Imports
##############################################################################

import enum
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from . import poly
from . import syntax
from .errors import InputError, InternalError, NotASentenceError, ResourceError
from .poly import QQ, CoefField, MultiPoly, PrimeField
from .syntax import Formula, Term

##############################################################################
# Errors
##############################################################################

logger = logging.getLogger(__name__)


class RingLanguageError(InputError):
    """A symbol outside 0, 1, +, - and * where a ring formula is required."""


##############################################################################
# Atoms
##############################################################################


class Sign(enum.Enum):
    """Whether an atom asserts that its polynomial vanishes."""

    ZERO = "="
    NONZERO = "!="


@dataclass(frozen=True)
class Atom(object):
    """``poly = 0`` or ``poly != 0``, with the polynomial normalised.

    Build atoms with :func:`make_atom`, which folds trivial cases into booleans.
    """

    poly: MultiPoly
    sign: Sign

    def negate(self) -> "Atom":
        return Atom(self.poly, Sign.NONZERO if self.sign is Sign.ZERO else Sign.ZERO)

    def holds(self, point: Mapping[str, object], field: Optional[CoefField] = None) -> bool:
        vanishes = (field or self.poly.field).is_zero(self.poly.evaluate(point, field))
        return vanishes if self.sign is Sign.ZERO else not vanishes

    def free_vars(self) -> FrozenSet[str]:
        return frozenset(self.poly.variables)

    def sort_key(self) -> Tuple:
        return (self.poly.sort_key(), 0 if self.sign is Sign.ZERO else 1)

    def to_text(self) -> str:
        return "{} {} 0".format(self.poly.to_text(), self.sign.value)

    def __str__(self) -> str:
        return self.to_text()


def _normalize(p: MultiPoly) -> MultiPoly:
    if p.is_zero():
        return p
    _, lead = p.leading_term()
    if isinstance(p.field, poly.Rationals):
        return -p if lead < 0 else p
    return p.monic()


def make_atom(p: MultiPoly, sign: Sign) -> Union[Atom, bool]:
    """Build a normalised atom, or its truth value when that is the same in every characteristic.

    Over the rationals the polynomial only has its sign flipped (scaling by
    any other integer would change its meaning in some characteristic);
    over prime fields it is made monic.
    """
    if p.is_zero():
        return sign is Sign.ZERO
    if p.is_constant() and p.field.is_unit(p.constant_value()):
        return sign is Sign.NONZERO
    return Atom(_normalize(p), sign)


##############################################################################
# Constructible forms
##############################################################################

Conjunction = Tuple[Atom, ...]


def _sorted_conjunction(atoms: Iterable[Atom]) -> Conjunction:
    return tuple(sorted(set(atoms), key=Atom.sort_key))


def _consistent(atoms: Iterable[Atom]) -> bool:
    present = set(atoms)
    return not any(atom.negate() in present for atom in present)


@dataclass(frozen=True)
class ConstructibleForm(object):
    """A quantifier-free ring formula in disjunctive normal form.

    No conjunction repeats an atom or holds an atom together with its
    negation. No disjuncts is FALSE; a single empty conjunction is TRUE.
    """

    disjuncts: Tuple[Conjunction, ...] = ()

    @classmethod
    def true(cls) -> "ConstructibleForm":
        return cls(((),))

    @classmethod
    def false(cls) -> "ConstructibleForm":
        return cls(())

    @classmethod
    def of(cls, value: Union[Atom, bool]) -> "ConstructibleForm":
        if value is True:
            return cls.true()
        if value is False:
            return cls.false()
        return cls(((value,),))

    @classmethod
    def from_conjunctions(cls, conjunctions: Iterable[Iterable[Atom]]) -> "ConstructibleForm":
        """Deduplicate atoms and drop contradictory conjunctions."""
        kept = []
        for conjunction in conjunctions:
            atoms = _sorted_conjunction(conjunction)
            if _consistent(atoms):
                kept.append(atoms)
        return cls(tuple(kept))

    def is_true(self) -> bool:
        return any(not conjunction for conjunction in self.disjuncts)

    def is_false(self) -> bool:
        return not self.disjuncts

    def atoms(self) -> FrozenSet[Atom]:
        return frozenset(atom for conjunction in self.disjuncts for atom in conjunction)

    def free_vars(self) -> FrozenSet[str]:
        return frozenset().union(*(atom.free_vars() for atom in self.atoms()))

    def disjoin(self, other: "ConstructibleForm") -> "ConstructibleForm":
        return ConstructibleForm(self.disjuncts + other.disjuncts)

    def conjoin(self, other: "ConstructibleForm") -> "ConstructibleForm":
        return ConstructibleForm.from_conjunctions(
            left + right for left, right in itertools.product(self.disjuncts, other.disjuncts)
        )

    def negate(self) -> "ConstructibleForm":
        result = ConstructibleForm.true()
        for conjunction in self.disjuncts:
            clause = ConstructibleForm(tuple((atom.negate(),) for atom in conjunction))
            result = simplify(result.conjoin(clause))
        return result

    def holds(self, point: Mapping[str, object], field: Optional[CoefField] = None) -> bool:
        """Evaluate at a point whose coordinates live in ``field``."""
        return any(all(atom.holds(point, field) for atom in conjunction) for conjunction in self.disjuncts)

    def to_formula(self) -> Formula:
        """The form as a syntax tree, with atoms as leaves."""
        return syntax.disjunction(syntax.conjunction(conjunction) for conjunction in self.disjuncts)

    def to_text(self) -> str:
        """Render as ``(a != 0) | (a = 0 & b = 0)``, readable by the formula parser."""
        if self.is_false():
            return "false"
        if self.is_true():
            return "true"
        return " | ".join(
            "(" + " & ".join(atom.to_text() for atom in conjunction) + ")" for conjunction in self.disjuncts
        )

    def __str__(self) -> str:
        return self.to_text()


##############################################################################
# Ring terms and polynomials
##############################################################################

_RING_OPERATIONS = {"+": "add", "-": "sub", "*": "mul"}


def _is_ring_operation(t: Term) -> bool:
    return isinstance(t, syntax.Apply) and t.function in _RING_OPERATIONS and len(t.args) == 2


def _ring_leaf(t: Term, field: CoefField) -> MultiPoly:
    if t in (syntax.Constant("0"), syntax.Constant("1")):
        return MultiPoly.constant(int(t.name), field)
    if isinstance(t, syntax.Variable):
        return MultiPoly.variable(t.name, field)
    if isinstance(t, syntax.Constant):
        raise RingLanguageError("constant '{}' is not in the ring language".format(t.name))
    raise RingLanguageError("'{}' is not in the ring language".format(getattr(t, "function", t)))


def term_to_poly(t: Term, field: CoefField = QQ) -> MultiPoly:
    """Read a ring term as a polynomial.

    Numerals become constants in one step and left-nested chains such as
    ``x * x * ... * x`` are folded in a loop, so long literals and powers
    need no deep recursion.

    Raises:
        RingLanguageError: for any symbol outside the ring language
    """
    spine = []
    while _is_ring_operation(t):
        spine.append(t)
        t = t.args[0]
    result = _ring_leaf(t, field)
    if t == syntax.Constant("1"):
        # the innermost run of "+ 1" steps is a numeral
        count = 1
        while spine and spine[-1].function == "+" and spine[-1].args[1] == syntax.Constant("1"):
            spine.pop()
            count += 1
        result = MultiPoly.constant(count, field)
    for node in reversed(spine):
        result = poly.arith(_RING_OPERATIONS[node.function], result, term_to_poly(node.args[1], field))
    return result


def _positive_term(magnitude: int, monomial: poly.Monomial) -> Term:
    factors: List[Term] = []
    for name, exponent in monomial:
        factors.extend([syntax.Variable(name)] * exponent)
    if magnitude != 1 or not factors:
        factors.insert(0, syntax.numeral(magnitude))
    term = factors[0]
    for factor in factors[1:]:
        term = syntax.Apply("*", (term, factor))
    return term


def term_from_poly(p: MultiPoly) -> Term:
    """Write a polynomial with integer coefficients as a ring term.

    Raises:
        PolynomialError: if a coefficient is not an integer
    """
    if p.is_zero():
        return syntax.Constant("0")
    variables = p.variables
    ordered = sorted(p.terms, key=lambda m: poly._order_key(m, variables), reverse=True)
    term: Optional[Term] = None
    for monomial in ordered:
        coefficient = p.terms[monomial]
        if isinstance(coefficient, Fraction):
            if coefficient.denominator != 1:
                raise poly.PolynomialError("coefficient {} is not an integer".format(coefficient))
            coefficient = coefficient.numerator
        summand = _positive_term(abs(coefficient), monomial)
        if term is None:
            term = summand if coefficient > 0 else syntax.Apply("-", (syntax.Constant("0"), summand))
        else:
            term = syntax.Apply("+" if coefficient > 0 else "-", (term, summand))
    return term


def to_polynomial_atoms(f: Formula, field: CoefField = QQ) -> Formula:
    """Replace every equation ``s = t`` by the atom ``s - t = 0``, keeping the skeleton.

    A negated equation becomes a single ``!=`` atom. Equations that are
    trivially true or false become ``true`` or ``false``.

    Raises:
        RingLanguageError: for relation symbols or non-ring functions and constants
    """
    if isinstance(f, syntax.Eq):
        return _leaf(make_atom(term_to_poly(f.left, field) - term_to_poly(f.right, field), Sign.ZERO))
    if isinstance(f, syntax.Not) and isinstance(f.body, syntax.Eq):
        body = f.body
        return _leaf(make_atom(term_to_poly(body.left, field) - term_to_poly(body.right, field), Sign.NONZERO))
    if isinstance(f, syntax.Rel):
        raise RingLanguageError("relation '{}' is not in the ring language".format(f.relation))
    if isinstance(f, (syntax.Truth, Atom)):
        return f
    if isinstance(f, syntax.Not):
        return syntax.Not(to_polynomial_atoms(f.body, field))
    if isinstance(f, syntax.BINARY_TYPES):
        return type(f)(to_polynomial_atoms(f.left, field), to_polynomial_atoms(f.right, field))
    if isinstance(f, syntax.QUANTIFIER_TYPES):
        return type(f)(f.var, to_polynomial_atoms(f.body, field))
    raise TypeError("not a formula: {!r}".format(f))


def _leaf(value: Union[Atom, bool]) -> Formula:
    return syntax.Truth(value) if isinstance(value, bool) else value


##############################################################################
# Normal forms
##############################################################################


def _dnf(f: Formula, positive: bool) -> ConstructibleForm:
    if isinstance(f, Atom):
        return ConstructibleForm.of(f if positive else f.negate())
    if isinstance(f, syntax.Truth):
        return ConstructibleForm.of(f.value == positive)
    if isinstance(f, syntax.Not):
        return _dnf(f.body, not positive)
    if isinstance(f, syntax.And):
        left, right = _dnf(f.left, positive), _dnf(f.right, positive)
        return left.conjoin(right) if positive else left.disjoin(right)
    if isinstance(f, syntax.Or):
        left, right = _dnf(f.left, positive), _dnf(f.right, positive)
        return left.disjoin(right) if positive else left.conjoin(right)
    if isinstance(f, syntax.Implies):
        left, right = _dnf(f.left, not positive), _dnf(f.right, positive)
        return left.disjoin(right) if positive else left.conjoin(right)
    if isinstance(f, syntax.QUANTIFIER_TYPES):
        raise InputError("to_dnf expects a quantifier-free formula")
    raise TypeError("not an atom formula: {!r}".format(f))


def to_dnf(qf: Formula) -> ConstructibleForm:
    """Disjunctive normal form of a quantifier-free formula with atom leaves.

    Implications are expanded, negations pushed onto the atoms, duplicate
    atoms merged and contradictory conjunctions dropped.
    """
    return _dnf(qf, True)


def simplify(form: ConstructibleForm, char: Optional[int] = None) -> ConstructibleForm:
    """Fold constants, remove contradictions and subsumed disjuncts, sort canonically.

    Args:
        form: the form to simplify
        char: if given, characteristic atoms ``n = 0`` are evaluated (true
            iff char divides n, never for n != 0 in characteristic 0)
    """
    conjunctions = []
    for conjunction in form.disjuncts:
        atoms = []
        satisfiable = True
        for atom in conjunction:
            value = _fold(atom, char)
            if value is False:
                satisfiable = False
                break
            if value is not True:
                atoms.append(value)
        if satisfiable:
            conjunctions.append(atoms)
    cleaned = ConstructibleForm.from_conjunctions(conjunctions)
    if cleaned.is_true():
        return ConstructibleForm.true()
    unique = sorted(set(cleaned.disjuncts), key=lambda c: (len(c), [a.sort_key() for a in c]))
    kept: List[Conjunction] = []
    for conjunction in unique:
        present = set(conjunction)
        if not any(set(smaller) <= present for smaller in kept):
            kept.append(conjunction)
    return ConstructibleForm(tuple(kept))


def _fold(atom: Atom, char: Optional[int]) -> Union[Atom, bool]:
    if atom.poly.is_constant() and char is not None:
        value = atom.poly.constant_value()
        if isinstance(value, Fraction):
            vanishes = char != 0 and PrimeField(char).coerce(value) == 0
        else:
            vanishes = value == 0
        return vanishes if atom.sign is Sign.ZERO else not vanishes
    folded = make_atom(atom.poly, atom.sign)
    return folded


##############################################################################
# Elimination
##############################################################################


@dataclass(frozen=True)
class Budget(object):
    """Guardrails on the size of an elimination.

    Args:
        max_disjuncts: largest number of conjunctions any intermediate form may hold
        max_degree: largest total degree of any intermediate polynomial
    """

    max_disjuncts: int = 20000
    max_degree: int = 256

    def check_form(self, count: int):
        if count > self.max_disjuncts:
            raise ResourceError("elimination produced {} conjunctions, more than the budget of {}".format(
                count, self.max_disjuncts))

    def check_poly(self, p: MultiPoly):
        if p.total_degree() > self.max_degree:
            raise ResourceError("intermediate polynomial of degree {} exceeds the limit of {}".format(
                p.total_degree(), self.max_degree))


DEFAULT_BUDGET = Budget()

#: Branches of a leading-coefficient split, by descending degree of the split
#: equation: the lead assumed nonzero first, then the lead assumed zero.
SPLIT_ORDER = (Sign.NONZERO, Sign.ZERO)


class _Eliminator(object):
    """Case-splitting elimination of one existential variable from a conjunction.

    Equations whose leading coefficient is known nonzero act as pivots and
    reduce the others by pseudo-remainder. Otherwise the equation of least
    degree (ties broken by :meth:`MultiPoly.sort_key`) has its leading
    coefficient split, visiting the branches in :data:`SPLIT_ORDER`.
    """

    def __init__(self, var: str, budget: Budget):
        self.var = var
        self.budget = budget
        self.results: List[Conjunction] = []

    def known(self, p: MultiPoly, guard: Tuple[Atom, ...]) -> Optional[bool]:
        """True if p is known nonzero under the guard, False if known zero, None otherwise."""
        atom = make_atom(p, Sign.NONZERO)
        if isinstance(atom, bool):
            return atom
        if atom in guard:
            return True
        if atom.negate() in guard:
            return False
        return None

    def strip(self, p: MultiPoly, guard: Tuple[Atom, ...]) -> MultiPoly:
        """Drop leading terms in var whose coefficient is known to vanish."""
        while not p.is_zero() and p.degree(self.var) > 0:
            lead = p.leading_coefficient(self.var)
            if self.known(lead, guard) is not False:
                break
            p = p - lead * MultiPoly.variable(self.var, p.field) ** int(p.degree(self.var))
        return p

    def assume(self, guard: Tuple[Atom, ...], atom: Union[Atom, bool]) -> Optional[Tuple[Atom, ...]]:
        """Extend the guard, or return None when it becomes contradictory."""
        if atom is True:
            return guard
        if atom is False or atom.negate() in guard:
            return None
        return guard if atom in guard else guard + (atom,)

    def emit(self, guard: Tuple[Atom, ...]):
        self.results.append(guard)
        self.budget.check_form(len(self.results))

    def run(self, equations: List[MultiPoly], inequations: List[MultiPoly], guard: Tuple[Atom, ...]):
        var = self.var
        normalized_equations = []
        for p in equations:
            p = self.strip(p, guard)
            self.budget.check_poly(p)
            if p.degree(var) <= 0:
                guard = self.assume(guard, make_atom(p, Sign.ZERO))
                if guard is None:
                    return
            else:
                normalized_equations.append(p)
        normalized_inequations = []
        for q in inequations:
            q = self.strip(q, guard)
            if q.degree(var) <= 0:
                guard = self.assume(guard, make_atom(q, Sign.NONZERO))
                if guard is None:
                    return
            else:
                normalized_inequations.append(q)
        equations, inequations = normalized_equations, normalized_inequations

        if not equations:
            self.only_inequations(inequations, guard)
            return

        def rank(p: MultiPoly):
            return (p.degree(var), p.sort_key())

        pivots = [p for p in equations if self.known(p.leading_coefficient(var), guard)]
        undecided = sorted((p for p in equations if p not in pivots), key=rank)
        if pivots:
            pivot = min(pivots, key=rank)
            others = [p for p in equations if p is not pivot]
            for index, q in enumerate(others):
                if q.degree(var) >= pivot.degree(var):
                    others[index] = poly.pseudo_remainder(q, pivot, var)
                    self.run([pivot] + others, inequations, guard)
                    return
            if not others:
                self.one_equation(pivot, inequations, guard)
                return
        lead = undecided[0].leading_coefficient(var)
        for sign in SPLIT_ORDER:
            branch = self.assume(guard, make_atom(lead, sign))
            if branch is not None:
                self.run(equations, inequations, branch)

    def only_inequations(self, inequations: List[MultiPoly], guard: Tuple[Atom, ...]):
        """An infinite field avoids the finitely many roots of nonzero polynomials."""
        partial: List[Tuple[Atom, ...]] = [guard]
        for q in inequations:
            options = [make_atom(c, Sign.NONZERO) for c in q.coefficients(self.var).values()]
            if any(option is True for option in options):
                continue
            extended = []
            for current in partial:
                for option in options:
                    branch = self.assume(current, option)
                    if branch is not None:
                        extended.append(branch)
            partial = extended
            self.budget.check_form(len(partial))
        for current in partial:
            self.emit(current)

    def one_equation(self, p: MultiPoly, inequations: List[MultiPoly], guard: Tuple[Atom, ...]):
        """p has a root off every inequation iff p does not divide (q_1 ... q_m)^deg(p)."""
        product = MultiPoly.one(p.field)
        for q in inequations:
            product = product * q
        power = product ** int(p.degree(self.var))
        self.budget.check_poly(power)
        remainder = poly.pseudo_remainder(power, p, self.var)
        for coefficient in sorted(remainder.coefficients(self.var).values(), key=MultiPoly.sort_key):
            branch = self.assume(guard, make_atom(coefficient, Sign.NONZERO))
            if branch is not None:
                self.emit(branch)


def eliminate_exists_one_var(
    conj: Sequence[Atom], var: str, budget: Budget = DEFAULT_BUDGET
) -> ConstructibleForm:
    """A var-free form equivalent over algebraically closed fields to ``exists var`` of a conjunction.

    Raises:
        ResourceError: if the budget is exceeded
    """
    if not any(var in atom.poly.variables for atom in conj):
        return simplify(ConstructibleForm.from_conjunctions([conj]))
    guard = tuple(atom for atom in conj if var not in atom.poly.variables)
    equations = [atom.poly for atom in conj if var in atom.poly.variables and atom.sign is Sign.ZERO]
    inequations = [atom.poly for atom in conj if var in atom.poly.variables and atom.sign is Sign.NONZERO]
    eliminator = _Eliminator(var, budget)
    eliminator.run(equations, inequations, guard)
    result = simplify(ConstructibleForm.from_conjunctions(eliminator.results))
    logger.debug("eliminated %s from %d atoms: %d conjunctions", var, len(conj), len(result.disjuncts))
    return result


def _eliminate_block(
    form: ConstructibleForm, variables: Sequence[str], budget: Budget, jobs: int
) -> ConstructibleForm:
    for var in reversed(variables):
        if jobs > 1 and len(form.disjuncts) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                pieces = list(executor.map(
                    eliminate_exists_one_var, form.disjuncts, itertools.repeat(var), itertools.repeat(budget)
                ))
        else:
            pieces = [eliminate_exists_one_var(conjunction, var, budget) for conjunction in form.disjuncts]
        form = simplify(ConstructibleForm(tuple(c for piece in pieces for c in piece.disjuncts)))
        budget.check_form(len(form.disjuncts))
    return form


def _quantifier_block(f: Formula) -> Tuple[List[str], Formula]:
    kind = type(f)
    variables = []
    while isinstance(f, kind):
        variables.append(f.var)
        f = f.body
    return variables, f


def _eliminate(f: Formula, budget: Budget, jobs: int) -> ConstructibleForm:
    if isinstance(f, (Atom, syntax.Truth)):
        return _dnf(f, True)
    if isinstance(f, syntax.Not):
        return _eliminate(f.body, budget, jobs).negate()
    if isinstance(f, syntax.And):
        return simplify(_eliminate(f.left, budget, jobs).conjoin(_eliminate(f.right, budget, jobs)))
    if isinstance(f, syntax.Or):
        return simplify(_eliminate(f.left, budget, jobs).disjoin(_eliminate(f.right, budget, jobs)))
    if isinstance(f, syntax.Implies):
        left = _eliminate(f.left, budget, jobs).negate()
        return simplify(left.disjoin(_eliminate(f.right, budget, jobs)))
    if isinstance(f, syntax.Exists):
        variables, body = _quantifier_block(f)
        return _eliminate_block(_eliminate(body, budget, jobs), variables, budget, jobs)
    if isinstance(f, syntax.Forall):
        variables, body = _quantifier_block(f)
        inner = _eliminate(body, budget, jobs).negate()
        return _eliminate_block(inner, variables, budget, jobs).negate()
    raise TypeError("not a formula: {!r}".format(f))


def eliminate_all(
    f: Formula, field: CoefField = QQ, budget: Budget = DEFAULT_BUDGET, jobs: int = 1
) -> ConstructibleForm:
    """A quantifier-free form in the free variables of f, equivalent over algebraically closed fields.

    Blocks of like quantifiers are handled together, innermost variable
    first; ``forall x`` is eliminated as ``not exists x not``.

    Args:
        f: a ring-language formula
        field: coefficient field; the rationals give a result valid in
            every characteristic
        budget: size guardrails
        jobs: worker processes for eliminating independent disjuncts

    Raises:
        RingLanguageError: for symbols outside the ring language
        ResourceError: if the budget is exceeded
    """
    result = simplify(_eliminate(to_polynomial_atoms(f, field), budget, jobs))
    logger.info("eliminated quantifiers: %d conjunctions remain", len(result.disjuncts))
    return result


##############################################################################
# Decisions
##############################################################################


def check_characteristic(char: int) -> int:
    """Validate a characteristic.

    Raises:
        InputError: unless char is 0 or a prime
    """
    if not isinstance(char, int) or isinstance(char, bool) or (char != 0 and not sympy.isprime(char)):
        raise InputError("the characteristic must be 0 or a prime, got {}".format(char))
    return char


def _require_sentence(s: Formula):
    free = syntax.free_vars(s)
    if free:
        raise NotASentenceError(free)


def decide(s: Formula, char: int = 0, budget: Budget = DEFAULT_BUDGET, jobs: int = 1) -> bool:
    """Truth of a ring sentence in the algebraically closed fields of a characteristic.

    Raises:
        NotASentenceError: if s has free variables
        InputError: if char is neither 0 nor a prime
    """
    _require_sentence(s)
    check_characteristic(char)
    field = QQ if char == 0 else PrimeField(char)
    form = simplify(eliminate_all(s, field, budget, jobs), char)
    if form.is_true():
        return True
    if form.is_false():
        return False
    raise InternalError("elimination left atoms behind in a sentence: {}".format(form))


class PrimeMode(enum.Enum):
    """How a characteristic spectrum lists primes."""

    ONLY_LISTED = "only"
    ALL_EXCEPT_LISTED = "all except"


@dataclass(frozen=True)
class CharCondition(object):
    """The characteristics in which a sentence holds.

    Args:
        true_in_char0: the verdict in characteristic zero
        prime_mode: whether ``listed`` are the primes where it holds or fails
        listed: finitely many primes, sorted
    """

    true_in_char0: bool
    prime_mode: PrimeMode
    listed: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "listed", tuple(sorted(set(self.listed))))

    def holds_at(self, char: int) -> bool:
        if char == 0:
            return self.true_in_char0
        return (char in self.listed) == (self.prime_mode is PrimeMode.ONLY_LISTED)

    def is_coherent(self) -> bool:
        """True in characteristic zero iff true for all but finitely many primes."""
        return self.true_in_char0 == (self.prime_mode is PrimeMode.ALL_EXCEPT_LISTED)

    def to_dict(self) -> Dict:
        return {"char0": self.true_in_char0, "primes": self.prime_mode.value, "listed": list(self.listed)}

    def to_text(self) -> str:
        if self.prime_mode is PrimeMode.ALL_EXCEPT_LISTED and not self.listed:
            primes = "all"
        elif self.prime_mode is PrimeMode.ONLY_LISTED and not self.listed:
            primes = "none"
        else:
            primes = "{} {{{}}}".format(self.prime_mode.value, ", ".join(str(p) for p in self.listed))
        return "char0: {}, primes: {}".format(str(self.true_in_char0).lower(), primes)

    def __str__(self) -> str:
        return self.to_text()


def spectrum_of_form(form: ConstructibleForm) -> CharCondition:
    """Fold a variable-free form of characteristic atoms into a spectrum.

    Raises:
        InternalError: if the form still mentions variables
    """
    if form.free_vars():
        raise InternalError("a characteristic spectrum needs a variable-free form, got {}".format(form))
    primes = set()
    for atom in form.atoms():
        value = atom.poly.constant_value()
        primes.update(sympy.primefactors(abs(Fraction(value).numerator)))
    generic = simplify(form, 0).is_true()
    listed = [p for p in sorted(primes) if simplify(form, p).is_true() != generic]
    mode = PrimeMode.ALL_EXCEPT_LISTED if generic else PrimeMode.ONLY_LISTED
    return CharCondition(generic, mode, tuple(listed))


def char_spectrum(s: Formula, budget: Budget = DEFAULT_BUDGET, jobs: int = 1) -> CharCondition:
    """Eliminate once over the rationals and read off the characteristics where s holds.

    Raises:
        NotASentenceError: if s has free variables
    """
    _require_sentence(s)
    spectrum = spectrum_of_form(eliminate_all(s, QQ, budget, jobs))
    logger.info("characteristic spectrum: %s", spectrum)
    return spectrum
