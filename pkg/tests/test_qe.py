#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Imports
##############################################################################

import functools
import itertools
import random
from typing import Tuple

import pytest
from sympy import primerange

from acf_decide import poly, qe, syntax, theories
from acf_decide.errors import InputError, NotASentenceError, ResourceError
from acf_decide.poly import QQ, MultiPoly, PrimeField
from acf_decide.qe import CharCondition, ConstructibleForm, PrimeMode, Sign

##############################################################################
# Helpers
##############################################################################

RING = theories.RING_SIGNATURE

x = MultiPoly.variable("x")
a = MultiPoly.variable("a")
b = MultiPoly.variable("b")


def parse(text):
    return syntax.parse_formula(text, RING)


def qe_text(text, **kwargs):
    return qe.eliminate_all(parse(text), **kwargs).to_text()


@pytest.fixture
def rng():
    return random.Random(4181)


def random_atom(rng: random.Random, x_degree: int, parameters: Tuple[str, ...]):
    """An atom of total degree at most 3 in x and the parameters."""
    terms = {}
    for i in range(x_degree + 1):
        for exponents in itertools.product(range(4 - i), repeat=len(parameters)):
            if i + sum(exponents) <= 3 and rng.random() < 0.25:
                terms[tuple(zip(("x",) + parameters, (i,) + exponents))] = rng.randint(-2, 2)
    return qe.make_atom(MultiPoly(QQ, terms), rng.choice([Sign.ZERO, Sign.NONZERO]))


@functools.lru_cache(maxsize=None)
def zeros_in(p: int, k: int, u: MultiPoly):
    """Where a polynomial in x alone vanishes inside GF(p^k), None meaning everywhere."""
    if u.is_zero():
        return None
    return frozenset(poly.roots_in_Fq(u, k))


def witnessed(atoms, point, p: int, k: int) -> bool:
    """Brute force: some x in GF(p^k) satisfies every atom at the parameter point."""
    candidates = None
    excluded = set()
    for atom in atoms:
        u = poly.reduce_mod_p(atom.poly, p)
        for name, value in point.items():
            u = u.substitute(name, MultiPoly.constant(value, u.field))
        zeros = zeros_in(p, k, u)
        if atom.sign is Sign.ZERO:
            if zeros is not None:
                candidates = zeros if candidates is None else candidates & zeros
        elif zeros is None:
            return False
        else:
            excluded |= zeros
    if candidates is None:
        return len(excluded) < p ** k
    return bool(candidates - excluded)


##############################################################################
# Atoms & Forms
##############################################################################


def test_make_atom_folds_trivial_cases():
    assert qe.make_atom(MultiPoly.zero(), Sign.ZERO) is True
    assert qe.make_atom(MultiPoly.constant(-1), Sign.ZERO) is False
    # 2 = 0 depends on the characteristic
    atom = qe.make_atom(MultiPoly.constant(2), Sign.ZERO)
    assert isinstance(atom, qe.Atom)
    assert qe.make_atom(-a, Sign.ZERO) == qe.make_atom(a, Sign.ZERO)


def test_make_atom_is_monic_over_prime_fields():
    field = PrimeField(5)
    atom = qe.make_atom(MultiPoly.variable("a", field) * 3 + 1, Sign.NONZERO)
    assert atom.poly == MultiPoly.variable("a", field) + 2


def test_form_connectives():
    zero_a = ConstructibleForm.of(qe.make_atom(a, Sign.ZERO))
    zero_b = ConstructibleForm.of(qe.make_atom(b, Sign.ZERO))
    assert zero_a.conjoin(zero_a.negate()).is_false()
    assert qe.simplify(zero_a.disjoin(zero_a.negate())).is_true()
    both = zero_a.conjoin(zero_b)
    assert both.to_text() == "(a = 0 & b = 0)"
    assert qe.simplify(both.negate()).to_text() == "(a != 0) | (b != 0)"
    assert ConstructibleForm.true().to_text() == "true"
    assert ConstructibleForm.false().to_text() == "false"


def test_simplify_drops_subsumed_disjuncts():
    zero_a = qe.make_atom(a, Sign.ZERO)
    zero_b = qe.make_atom(b, Sign.ZERO)
    form = ConstructibleForm.from_conjunctions([[zero_a, zero_b], [zero_a]])
    assert qe.simplify(form).to_text() == "(a = 0)"


def test_simplify_evaluates_characteristic_atoms():
    two = ConstructibleForm.of(qe.make_atom(MultiPoly.constant(2), Sign.ZERO))
    assert qe.simplify(two, 2).is_true()
    assert qe.simplify(two, 3).is_false()
    assert qe.simplify(two, 0).is_false()
    assert qe.simplify(two).to_text() == "(2 = 0)"


def test_form_round_trips_through_the_parser():
    form = qe.eliminate_all(parse("exists x. a*x + b = 0"))
    again = qe.eliminate_all(parse(form.to_text()))
    assert again == form


##############################################################################
# Normal forms
##############################################################################


def test_term_to_poly():
    assert qe.term_to_poly(syntax.parse_term("(x + 1) * (x - 1)", RING)) == x * x - 1
    assert qe.term_to_poly(syntax.parse_term("3", RING), PrimeField(3)).is_zero()
    assert qe.term_to_poly(syntax.parse_term("x + 12345", RING)) == x + 12345
    assert qe.term_to_poly(syntax.parse_term("12345", RING), PrimeField(5)).is_zero()


def test_term_from_poly_parses_back():
    p = x * x * 3 - a * 2 + 1
    assert qe.term_to_poly(qe.term_from_poly(p)) == p


def test_ring_language_only():
    with pytest.raises(qe.RingLanguageError):
        qe.eliminate_all(syntax.parse_formula("leq(x, 0)", theories.ARITHMETIC_SIGNATURE))


def test_to_dnf():
    f = qe.to_polynomial_atoms(parse("(x = 0 -> a = 0) & !(a = 1)"))
    form = qe.to_dnf(f)
    assert len(form.disjuncts) == 2
    assert all(len(conjunction) <= 2 for conjunction in form.disjuncts)
    for vx, va, expected in [(0, 0, True), (0, 2, False), (1, 2, True), (1, 1, False)]:
        assert form.holds({"x": vx, "a": va}) is expected
    with pytest.raises(InputError):
        qe.to_dnf(qe.to_polynomial_atoms(parse("exists x. x = 0")))


##############################################################################
# Elimination
##############################################################################


def test_linear_equation():
    assert qe_text("exists x. a*x + b = 0") == "(a != 0) | (a = 0 & b = 0)"


def test_zero_divisor():
    assert qe_text("exists x. (x != 0 & a*x = 0)") == "(a = 0)"


def test_universal_quantifier():
    assert qe_text("forall x. a*x = 0") == "(a = 0)"
    assert qe_text("forall x. x*x != a") == "false"


def test_quadratic_always_has_roots():
    assert qe_text("exists x. x*x + a*x + b = 0") == "true"


def test_inequations_alone_are_satisfiable():
    assert qe_text("exists x. (x != 0 & x - a != 0 & x*x - b != 0)") == "true"


def test_double_root_condition():
    form = qe.eliminate_all(parse("exists x. (x*x + a*x + b = 0 & 2*x + a = 0)"))
    assert form.free_vars() == {"a", "b"}
    for va, vb, expected in [(2, 1, True), (0, 0, True), (0, 1, False), (3, 2, False)]:
        assert form.holds({"a": va, "b": vb}) is expected


def test_elimination_needs_no_quantifiers():
    assert qe_text("a = 0 | b = 0") == "(a = 0) | (b = 0)"


def test_one_variable_step():
    conj = (qe.make_atom(a * x - 1, Sign.ZERO),)
    assert qe.eliminate_exists_one_var(conj, "x").to_text() == "(a != 0)"
    untouched = (qe.make_atom(a, Sign.ZERO),)
    assert qe.eliminate_exists_one_var(untouched, "x").to_text() == "(a = 0)"


def test_split_visits_the_nonzero_lead_first():
    assert qe.SPLIT_ORDER == (Sign.NONZERO, Sign.ZERO)
    eliminator = qe._Eliminator("x", qe.DEFAULT_BUDGET)
    eliminator.run([a * x + b], [], ())
    assert eliminator.results == [
        (qe.make_atom(a, Sign.NONZERO),),
        (qe.make_atom(a, Sign.ZERO), qe.make_atom(b, Sign.ZERO)),
    ]


def test_budget():
    with pytest.raises(ResourceError):
        qe.eliminate_all(parse("exists x. a*x + b = 0"), budget=qe.Budget(max_disjuncts=1))


def test_parallel_elimination_agrees():
    text = "exists x. ((a*x + b = 0 & x != 1) | (x*x = a & b*x != 1))"
    assert qe_text(text, jobs=2) == qe_text(text)


@pytest.mark.parametrize("p, x_degree, parameters, extensions, cases", [
    (2, 3, ("a", "b"), (2, 3), 40),
    (3, 3, ("a", "b"), (2, 3), 40),
    (5, 3, ("a",), (2, 3), 30),
    (7, 2, ("a", "b"), (2,), 30),
    (11, 2, ("a",), (2,), 30),
    (13, 2, ("a",), (2,), 30),
])
def test_elimination_is_sound_against_a_finite_field(rng, p, x_degree, parameters, extensions, cases):
    # a root of an x-degree 3 polynomial over GF(p) lies in GF(p^2) or GF(p^3),
    # and GF(p^3) has more elements than two inequations can exclude
    field = PrimeField(p)
    checked = 0
    while checked < cases:
        atoms = [random_atom(rng, x_degree, parameters) for _ in range(rng.randint(1, 2))]
        if any(isinstance(atom, bool) for atom in atoms):
            continue
        checked += 1
        form = qe.eliminate_exists_one_var(tuple(atoms), "x")
        assert "x" not in form.free_vars()
        for values in itertools.product(field.elements(), repeat=len(parameters)):
            point = dict(zip(parameters, values))
            expected = any(witnessed(atoms, point, p, k) for k in extensions)
            assert form.holds(point, field) is expected, (form.to_text(), atoms, point)


##############################################################################
# Decisions
##############################################################################


DECISIONS = [
    ("exists x. x*x + 1 = 0", 0, True),
    ("exists x. x*x + 1 = 0", 2, True),
    ("forall x. x*x != 1 + 1", 0, False),
    ("1 + 1 = 0", 2, True),
    ("1 + 1 = 0", 3, False),
    ("exists x. (x*x + x + 1 = 0 & x != 1)", 3, False),
    ("exists x. (x*x + x + 1 = 0 & x != 1)", 7, True),
    ("forall a. exists x. a*x = 1", 5, False),
    ("forall a. (a != 0 -> exists x. a*x = 1)", 0, True),
    ("forall a. forall b. exists x. x*x + a*x + b = 0", 0, True),
    ("forall a. exists x. x*x*x = a", 2, True),
    ("exists x. (x*x = 0 & x != 0)", 0, False),
    ("forall x. (x*x = x -> (x = 0 | x = 1))", 0, True),
    ("forall x. x^5 = x", 5, False),
    ("forall x. forall y. (x + y)^2 = x^2 + y^2", 2, True),
    ("forall x. forall y. (x + y)^2 = x^2 + y^2", 3, False),
    ("forall x. forall y. (x + y)^3 = x^3 + y^3", 3, True),
    ("forall x. forall y. (x + y)^3 = x^3 + y^3", 0, False),
    ("exists x. exists y. (x*y = 1 & x + y = 0)", 0, True),
    ("exists x. (x^2 = 1 + 1 & x^3 = 1)", 0, False),
    ("exists x. (x^2 = 1 + 1 & x^3 = 1)", 7, True),
    ("forall x. (x^2 = 0 -> x = 0)", 2, True),
    ("exists x. x = x + 1", 0, False),
    ("exists x. x = x + 1", 2, False),
    ("1 + 1 + 1 + 1 + 1 + 1 = 0", 3, True),
    ("6 = 0", 5, False),
    ("10000 = 0", 5, True),
    ("exists x. (x^2 + 1 = 0 & x^2 - 1 = 0)", 2, True),
    ("exists x. (x^2 + 1 = 0 & x^2 - 1 = 0)", 3, False),
    ("forall a. exists x. x^2 = a", 0, True),
]


@pytest.mark.parametrize("text, char, expected", DECISIONS)
def test_decide(text, char, expected):
    assert qe.decide(parse(text), char) is expected


@pytest.mark.parametrize("body", [
    "x*x != 1 + 1",
    "x*x*x = x",
    "(x = 0 | x*x != 0)",
    "exists y. x*y = 1",
    "exists y. y*y = x",
    "x^2 + x + 1 != 0",
])
@pytest.mark.parametrize("char", [0, 2, 3, 5])
def test_forall_is_not_exists_not(body, char):
    universal = parse("forall x. ({})".format(body))
    dual = parse("!(exists x. !({}))".format(body))
    assert qe.decide(universal, char) is qe.decide(dual, char)


@pytest.mark.parametrize("char, expected", [(2, True), (5, True), (3, False), (0, False)])
def test_decide_large_numerals(char, expected):
    assert qe.decide(parse("10000 = 0"), char) is expected


def test_decide_rejects_free_variables():
    with pytest.raises(NotASentenceError) as info:
        qe.decide(parse("x = 0"))
    assert info.value.free_variables == ("x",)


@pytest.mark.parametrize("char", [4, -1, 1])
def test_decide_rejects_bad_characteristics(char):
    with pytest.raises(InputError):
        qe.decide(parse("0 = 0"), char)


##############################################################################
# Spectra
##############################################################################


@pytest.mark.parametrize("text, expected", [
    ("1 + 1 = 0", "char0: false, primes: only {2}"),
    ("1 + 1 + 1 != 0", "char0: true, primes: all except {3}"),
    ("exists x. x*x + 1 = 0", "char0: true, primes: all"),
    ("forall x. x*x != 1 + 1", "char0: false, primes: none"),
    ("exists x. (x*x + x + 1 = 0 & x != 1)", "char0: true, primes: all except {3}"),
    ("6 = 0", "char0: false, primes: only {2, 3}"),
    ("10001 = 0", "char0: false, primes: only {73, 137}"),
])
def test_char_spectrum(text, expected):
    spectrum = qe.char_spectrum(parse(text))
    assert spectrum.to_text() == expected
    assert spectrum.is_coherent()


def test_spectrum_agrees_with_decide():
    for text in sorted({text for text, _, _ in DECISIONS}):
        sentence = parse(text)
        spectrum = qe.char_spectrum(sentence)
        assert spectrum.is_coherent(), text
        for char in [0] + list(primerange(2, 51)):
            assert spectrum.holds_at(char) is qe.decide(sentence, char), (text, char)


def test_char_condition():
    condition = CharCondition(False, PrimeMode.ONLY_LISTED, (5, 2, 2))
    assert condition.listed == (2, 5)
    assert condition.to_dict() == {"char0": False, "primes": "only", "listed": [2, 5]}
    assert condition.holds_at(5) and not condition.holds_at(3) and not condition.holds_at(0)
    assert not CharCondition(True, PrimeMode.ONLY_LISTED).is_coherent()
