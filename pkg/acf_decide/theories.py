#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Standard languages and the axioms of fields and algebraically closed fields."""

##############################################################################
# Imports
##############################################################################

from typing import List

from . import syntax
from .syntax import Apply, Constant, Eq, Exists, Formula, Not, Signature, Variable

##############################################################################
# Signatures
##############################################################################

#: The language of rings: 0, 1, +, - and *.
RING_SIGNATURE = Signature(functions=(("+", 2), ("-", 2), ("*", 2)), constants=("0", "1"))

#: The language of additive groups.
GROUP_SIGNATURE = Signature(functions=(("+", 2),), constants=("0",))

#: The ring language with an order relation, for arithmetic.
ARITHMETIC_SIGNATURE = Signature(
    functions=(("+", 2), ("-", 2), ("*", 2)), relations=(("leq", 2),), constants=("0", "1")
)

##############################################################################
# Axioms
##############################################################################

_FIELDS_AXIOMS = (
    "forall x. forall y. x + y = y + x",
    "forall x. forall y. forall z. x + (y + z) = (x + y) + z",
    "forall x. x + 0 = x",
    "forall x. exists y. x + y = 0",
    "forall x. forall y. x * y = y * x",
    "forall x. forall y. forall z. x * (y * z) = (x * y) * z",
    "forall x. x * 1 = x",
    "forall x. (x != 0 -> exists y. x * y = 1)",
    "forall x. forall y. forall z. x * (y + z) = x * y + x * z",
)


def fields_axioms() -> List[Formula]:
    """The nine field axioms as ring-language sentences."""
    return [syntax.parse_formula(text, RING_SIGNATURE) for text in _FIELDS_AXIOMS]


def _power(x: Variable, n: int):
    term = x
    for _ in range(n - 1):
        term = Apply("*", (term, x))
    return term


def acf_axiom(n: int) -> Formula:
    """Every monic polynomial of degree n has a root.

    Builds ``forall a0 ... forall a{n-1} exists x. x^n + a{n-1}*x^(n-1) + ... + a0 = 0``.

    Raises:
        ValueError: if n < 1
    """
    if n < 1:
        raise ValueError("the degree must be at least 1")
    x = Variable("x")
    total = _power(x, n)
    for i in reversed(range(n)):
        coefficient = Variable("a{}".format(i))
        summand = coefficient if i == 0 else Apply("*", (coefficient, _power(x, i)))
        total = Apply("+", (total, summand))
    body = Exists("x", Eq(total, Constant("0")))
    return syntax.forall_all(["a{}".format(i) for i in range(n)], body)


def char_axiom(p: int) -> Formula:
    """``forall x. x + ... + x = 0`` with p summands."""
    if p < 1:
        raise ValueError("the number of summands must be positive")
    x = Variable("x")
    total = x
    for _ in range(p - 1):
        total = Apply("+", (total, x))
    return syntax.Forall("x", Eq(total, Constant("0")))


def char_zero_axioms(n: int) -> List[Formula]:
    """The negated characteristic axioms for 2 .. n, a finite fragment of characteristic zero."""
    return [Not(char_axiom(k)) for k in range(2, n + 1)]
