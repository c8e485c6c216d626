#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""First-order syntax: signatures, terms, formulas, the parser and the printer.

All trees are frozen dataclasses, so they are hashable, comparable and safe
to share between threads. The concrete grammar is::

    formula := "forall" var "." formula | "exists" var "." formula | imp
    imp     := or ("->" imp)?
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | "(" formula ")" | "true" | "false" | atom
    atom    := term ("=" | "!=") term | relation "(" term ("," term)* ")"
    term    := term ("+" | "-") factor | factor
    factor  := factor "*" signed | signed
    signed  := "-" signed | power
    power   := base ("^" natural)?
    base    := var | integer | constant | function "(" term ("," term)* ")" | "(" term ")"

Integer literals n are sugar for 1 + 1 + ... + 1 (n times), a leading minus
for 0 - t and powers for repeated products. A quantifier extends to the end
of its enclosing group.
"""

##############################################################################
# Imports
##############################################################################

import itertools
import json
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple, Union

from .errors import InputError

##############################################################################
# Errors
##############################################################################


class ParseError(InputError):
    """Ungrammatical text, with the character offset of the problem."""

    def __init__(self, message: str, position: int):
        """Attach the offset to the message."""
        self.position = position
        super().__init__("{} (at position {})".format(message, position))


class SignatureError(InputError):
    """Unknown symbols, arity mismatches and malformed signatures."""

    def __init__(self, message: str, position: Optional[int] = None):
        """Attach an optional offset when raised from the parser."""
        self.position = position
        if position is not None:
            message = "{} (at position {})".format(message, position)
        super().__init__(message)


class SubstitutionError(InputError):
    """Schema instantiation on a variable that is not free."""


##############################################################################
# Signatures
##############################################################################

KEYWORDS = frozenset(["exists", "forall", "true", "false"])
_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_INFIX_PRECEDENCE = {"+": 1, "-": 1, "*": 2}


def is_variable_name(name: str) -> bool:
    return bool(_IDENTIFIER.match(name)) and name not in KEYWORDS


@dataclass(frozen=True)
class Signature(object):
    """The non-logical symbols of a language.

    Function and relation symbols carry a positive arity; names are pairwise
    distinct across all three kinds.
    """

    functions: Tuple[Tuple[str, int], ...] = ()
    relations: Tuple[Tuple[str, int], ...] = ()
    constants: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple((str(n), int(a)) for n, a in self.functions))
        object.__setattr__(self, "relations", tuple((str(n), int(a)) for n, a in self.relations))
        object.__setattr__(self, "constants", tuple(str(n) for n in self.constants))
        names = [n for n, _ in self.functions] + [n for n, _ in self.relations] + list(self.constants)
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise SignatureError("symbol names must be distinct: {}".format(", ".join(duplicates)))
        for name, arity in self.functions + self.relations:
            if arity < 1:
                raise SignatureError("symbol {} must have a positive arity".format(name))
        for name in names:
            if name in KEYWORDS:
                raise SignatureError("{} is a reserved word".format(name))

    def function_arity(self, name: str) -> Optional[int]:
        return dict(self.functions).get(name)

    def relation_arity(self, name: str) -> Optional[int]:
        return dict(self.relations).get(name)

    def is_constant(self, name: str) -> bool:
        return name in self.constants

    def is_symbol(self, name: str) -> bool:
        return self.is_constant(name) or name in dict(self.functions) or name in dict(self.relations)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Signature":
        """Build from ``{"functions": {name: arity}, "relations": {...}, "constants": [...]}``."""
        try:
            return cls(
                functions=tuple(dict(data.get("functions", {})).items()),
                relations=tuple(dict(data.get("relations", {})).items()),
                constants=tuple(data.get("constants", [])),
            )
        except (TypeError, ValueError, AttributeError) as e:
            if isinstance(e, InputError):
                raise
            raise SignatureError("malformed signature: {}".format(e))

    def to_dict(self) -> Dict:
        return {
            "functions": dict(self.functions),
            "relations": dict(self.relations),
            "constants": list(self.constants),
        }


def load_signature(path: str) -> Signature:
    """Read a signature from a JSON file."""
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise SignatureError("cannot read signature file {}: {}".format(path, e))
    return Signature.from_dict(data)


##############################################################################
# Terms & Formulas
##############################################################################


@dataclass(frozen=True)
class Variable(object):
    name: str


@dataclass(frozen=True)
class Constant(object):
    name: str


@dataclass(frozen=True)
class Apply(object):
    function: str
    args: Tuple["Term", ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


Term = Union[Variable, Constant, Apply]


@dataclass(frozen=True)
class Eq(object):
    left: Term
    right: Term


@dataclass(frozen=True)
class Rel(object):
    relation: str
    args: Tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Truth(object):
    value: bool


@dataclass(frozen=True)
class Not(object):
    body: "Formula"


@dataclass(frozen=True)
class And(object):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or(object):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies(object):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists(object):
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall(object):
    var: str
    body: "Formula"


Formula = Union[Eq, Rel, Truth, Not, And, Or, Implies, Exists, Forall]

TERM_TYPES = (Variable, Constant, Apply)
BINARY_TYPES = (And, Or, Implies)
QUANTIFIER_TYPES = (Exists, Forall)

##############################################################################
# Builders
##############################################################################


def numeral(n: int) -> Term:
    """The term 1 + 1 + ... + 1 (n times), 0 for n = 0 and 0 - |n| for negative n."""
    if n < 0:
        return Apply("-", (Constant("0"), numeral(-n)))
    if n == 0:
        return Constant("0")
    term: Term = Constant("1")
    for _ in range(n - 1):
        term = Apply("+", (term, Constant("1")))
    return term


def numeral_value(t: Term) -> Optional[int]:
    """Inverse of :func:`numeral` for non-negative numerals, else None."""
    count = 0
    while isinstance(t, Apply) and t.function == "+" and t.args[1] == Constant("1"):
        count += 1
        t = t.args[0]
    if t == Constant("1"):
        return count + 1
    if t == Constant("0") and count == 0:
        return 0
    return None


def conjunction(formulas: Iterable[Formula]) -> Formula:
    result = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return Truth(True) if result is None else result


def disjunction(formulas: Iterable[Formula]) -> Formula:
    result = None
    for f in formulas:
        result = f if result is None else Or(result, f)
    return Truth(False) if result is None else result


def forall_all(variables: Sequence[str], body: Formula) -> Formula:
    """Universally close over variables, the first one outermost."""
    for name in reversed(list(variables)):
        body = Forall(name, body)
    return body


def exists_all(variables: Sequence[str], body: Formula) -> Formula:
    for name in reversed(list(variables)):
        body = Exists(name, body)
    return body


##############################################################################
# Tokenizer & Parser
##############################################################################


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>->|!=|[-+*^=!&|().,]))")
_TERM_CONTINUATIONS = frozenset(["=", "!=", "+", "-", "*", "^"])


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None or match.end() == position:
            offset = position + len(stripped[position:]) - len(stripped[position:].lstrip())
            raise ParseError("unexpected character '{}'".format(stripped[offset]), offset)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token("end", "", len(stripped)))
    return tokens


class _Parser(object):

    def __init__(self, text: str, sig: Signature):
        self.tokens = _tokenize(text)
        self.index = 0
        self.sig = sig

    ####################
    # Token Handling
    ####################

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def at(self, text: str) -> bool:
        token = self.peek()
        return token.kind != "end" and token.text == text

    def expect(self, text: str) -> _Token:
        token = self.peek()
        if token.kind == "end" or token.text != text:
            found = "end of input" if token.kind == "end" else "'{}'".format(token.text)
            raise ParseError("expected '{}', found {}".format(text, found), token.position)
        return self.advance()

    def expect_end(self):
        token = self.peek()
        if token.kind != "end":
            raise ParseError("unexpected '{}'".format(token.text), token.position)

    ####################
    # Formulas
    ####################

    def formula(self) -> Formula:
        token = self.peek()
        if token.kind == "name" and token.text in ("exists", "forall"):
            self.advance()
            var = self.peek()
            if var.kind != "name" or not is_variable_name(var.text) or self.sig.is_symbol(var.text):
                raise ParseError("expected a variable after '{}'".format(token.text), var.position)
            self.advance()
            self.expect(".")
            body = self.formula()
            return Exists(var.text, body) if token.text == "exists" else Forall(var.text, body)
        return self.implication()

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.at("->"):
            self.advance()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.at("|"):
            self.advance()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.at("&"):
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        token = self.peek()
        if self.at("!"):
            self.advance()
            return Not(self.unary())
        if token.kind == "name" and token.text in ("exists", "forall"):
            return self.formula()
        if token.kind == "name" and token.text in ("true", "false"):
            self.advance()
            return Truth(token.text == "true")
        if self.at("("):
            saved = self.index
            try:
                self.advance()
                inner = self.formula()
                self.expect(")")
                if self.peek().text not in _TERM_CONTINUATIONS or self.peek().kind == "end":
                    return inner
                group_error: Optional[InputError] = None
            except (ParseError, SignatureError) as e:
                group_error = e
            self.index = saved
            try:
                return self.atom()
            except (ParseError, SignatureError) as e:
                if group_error is not None and (group_error.position or 0) > (e.position or 0):
                    raise group_error
                raise
        return self.atom()

    def atom(self) -> Formula:
        token = self.peek()
        if token.kind == "name" and self.sig.relation_arity(token.text) is not None:
            self.advance()
            args = self.arguments(token)
            arity = self.sig.relation_arity(token.text)
            if len(args) != arity:
                raise SignatureError(
                    "relation {} expects {} arguments, got {}".format(token.text, arity, len(args)), token.position
                )
            return Rel(token.text, tuple(args))
        left = self.term()
        operator = self.peek()
        if operator.text not in ("=", "!=") or operator.kind == "end":
            found = "end of input" if operator.kind == "end" else "'{}'".format(operator.text)
            raise ParseError("expected '=' or '!=', found {}".format(found), operator.position)
        self.advance()
        right = self.term()
        equation = Eq(left, right)
        return equation if operator.text == "=" else Not(equation)

    def arguments(self, head: _Token) -> List[Term]:
        self.expect("(")
        args = [self.term()]
        while self.at(","):
            self.advance()
            args.append(self.term())
        self.expect(")")
        return args

    ####################
    # Terms
    ####################

    def apply(self, function: str, args: Sequence[Term], position: int) -> Term:
        arity = self.sig.function_arity(function)
        if arity is None:
            raise SignatureError("unknown function symbol '{}'".format(function), position)
        if arity != len(args):
            raise SignatureError(
                "function {} expects {} arguments, got {}".format(function, arity, len(args)), position
            )
        return Apply(function, tuple(args))

    def require_constant(self, name: str, position: int) -> Term:
        if not self.sig.is_constant(name):
            raise SignatureError("unknown constant symbol '{}'".format(name), position)
        return Constant(name)

    def term(self) -> Term:
        left = self.factor()
        while self.at("+") or self.at("-"):
            operator = self.advance()
            left = self.apply(operator.text, [left, self.factor()], operator.position)
        return left

    def factor(self) -> Term:
        left = self.signed()
        while self.at("*"):
            operator = self.advance()
            left = self.apply("*", [left, self.signed()], operator.position)
        return left

    def signed(self) -> Term:
        if self.at("-"):
            operator = self.advance()
            zero = self.require_constant("0", operator.position)
            return self.apply("-", [zero, self.signed()], operator.position)
        return self.power()

    def power(self) -> Term:
        base = self.base()
        if not self.at("^"):
            return base
        operator = self.advance()
        exponent = self.peek()
        if exponent.kind != "number":
            raise ParseError("expected a natural number exponent", exponent.position)
        self.advance()
        n = int(exponent.text)
        if n == 0:
            return self.require_constant("1", exponent.position)
        result = base
        for _ in range(n - 1):
            result = self.apply("*", [result, base], operator.position)
        return result

    def base(self) -> Term:
        token = self.peek()
        if token.kind == "number":
            self.advance()
            return self.integer(int(token.text), token.position)
        if self.at("("):
            self.advance()
            inner = self.term()
            self.expect(")")
            return inner
        if token.kind != "name":
            found = "end of input" if token.kind == "end" else "'{}'".format(token.text)
            raise ParseError("expected a term, found {}".format(found), token.position)
        if token.text in KEYWORDS:
            raise ParseError("unexpected keyword '{}'".format(token.text), token.position)
        self.advance()
        name = token.text
        if self.sig.function_arity(name) is not None:
            return self.apply(name, self.arguments(token), token.position)
        if self.sig.relation_arity(name) is not None:
            raise SignatureError("relation symbol '{}' used as a term".format(name), token.position)
        if self.sig.is_constant(name):
            return Constant(name)
        if self.at("("):
            raise SignatureError("unknown function symbol '{}'".format(name), token.position)
        return Variable(name)

    def integer(self, n: int, position: int) -> Term:
        if n == 0:
            return self.require_constant("0", position)
        self.require_constant("1", position)
        if n > 1 and self.sig.function_arity("+") != 2:
            raise SignatureError("integer literals need a binary '+'", position)
        return numeral(n)


def parse_term(text: str, sig: Signature) -> Term:
    """Parse a term.

    Raises:
        ParseError: ungrammatical text
        SignatureError: unknown symbols or arity mismatches
    """
    parser = _Parser(text, sig)
    term = parser.term()
    parser.expect_end()
    return term


def parse_formula(text: str, sig: Signature) -> Formula:
    """Parse a formula.

    Raises:
        ParseError: ungrammatical text
        SignatureError: unknown symbols or arity mismatches
    """
    parser = _Parser(text, sig)
    formula = parser.formula()
    parser.expect_end()
    return formula


##############################################################################
# Printer
##############################################################################


def _term_text(t: Term) -> Tuple[str, int]:
    if isinstance(t, (Variable, Constant)):
        return t.name, 3
    value = numeral_value(t)
    if value is not None:
        return str(value), 3
    if t.function in _INFIX_PRECEDENCE and len(t.args) == 2:
        precedence = _INFIX_PRECEDENCE[t.function]
        left, left_precedence = _term_text(t.args[0])
        right, right_precedence = _term_text(t.args[1])
        if left_precedence < precedence:
            left = "(" + left + ")"
        if right_precedence <= precedence:
            right = "(" + right + ")"
        return "{} {} {}".format(left, t.function, right), precedence
    return "{}({})".format(t.function, ", ".join(_term_text(a)[0] for a in t.args)), 3


def _operand_text(f: Formula) -> str:
    text = _formula_text(f)
    return "(" + text + ")" if isinstance(f, QUANTIFIER_TYPES) else text


def _formula_text(f: Formula) -> str:
    if isinstance(f, Eq):
        return "{} = {}".format(_term_text(f.left)[0], _term_text(f.right)[0])
    if isinstance(f, Rel):
        return "{}({})".format(f.relation, ", ".join(_term_text(a)[0] for a in f.args))
    if isinstance(f, Truth):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        if isinstance(f.body, Eq):
            return "{} != {}".format(_term_text(f.body.left)[0], _term_text(f.body.right)[0])
        return "!" + _operand_text(f.body)
    if isinstance(f, BINARY_TYPES):
        symbol = {And: "&", Or: "|", Implies: "->"}[type(f)]
        return "({} {} {})".format(_operand_text(f.left), symbol, _operand_text(f.right))
    if isinstance(f, QUANTIFIER_TYPES):
        keyword = "exists" if isinstance(f, Exists) else "forall"
        body = _formula_text(f.body)
        if not isinstance(f.body, BINARY_TYPES + QUANTIFIER_TYPES):
            body = "(" + body + ")"
        return "{} {}. {}".format(keyword, f.var, body)
    if hasattr(f, "to_text"):
        return f.to_text()
    raise TypeError("not a formula: {!r}".format(f))


def to_string(node: Union[Term, Formula]) -> str:
    """Render a term or formula so that parsing the text gives the same tree back."""
    if isinstance(node, TERM_TYPES):
        return _term_text(node)[0]
    return _formula_text(node)


##############################################################################
# Variables
##############################################################################


def term_vars(t: Term) -> FrozenSet[str]:
    names = set()
    pending = [t]
    while pending:
        t = pending.pop()
        if isinstance(t, Variable):
            names.add(t.name)
        elif isinstance(t, Apply):
            pending.extend(t.args)
    return frozenset(names)


def free_vars(f: Formula) -> FrozenSet[str]:
    """Variables with an occurrence outside every binder for that name."""
    if isinstance(f, Eq):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Rel):
        return frozenset().union(*(term_vars(a) for a in f.args))
    if isinstance(f, Truth):
        return frozenset()
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, BINARY_TYPES):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, QUANTIFIER_TYPES):
        return free_vars(f.body) - {f.var}
    if hasattr(f, "free_vars"):
        return frozenset(f.free_vars())
    raise TypeError("not a formula: {!r}".format(f))


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


def names_in(f: Formula) -> FrozenSet[str]:
    """Every variable name occurring in f, bound or free."""
    if isinstance(f, QUANTIFIER_TYPES):
        return names_in(f.body) | {f.var}
    if isinstance(f, Not):
        return names_in(f.body)
    if isinstance(f, BINARY_TYPES):
        return names_in(f.left) | names_in(f.right)
    return free_vars(f)


def quantifier_rank(f: Formula) -> int:
    if isinstance(f, QUANTIFIER_TYPES):
        return 1 + quantifier_rank(f.body)
    if isinstance(f, Not):
        return quantifier_rank(f.body)
    if isinstance(f, BINARY_TYPES):
        return max(quantifier_rank(f.left), quantifier_rank(f.right))
    return 0


def is_quantifier_free(f: Formula) -> bool:
    return quantifier_rank(f) == 0


def fresh_name(base: str, used: Iterable[str]) -> str:
    """Append the smallest numeric suffix giving a name not in ``used``."""
    taken = set(used)
    for suffix in itertools.count(1):
        candidate = "{}{}".format(base, suffix)
        if candidate not in taken:
            return candidate
    raise AssertionError("unreachable")


##############################################################################
# Substitution
##############################################################################


def substitute_term(t: Term, bindings: Mapping[str, Term]) -> Term:
    if not bindings.keys() & term_vars(t):
        return t
    if isinstance(t, Variable):
        return bindings.get(t.name, t)
    if isinstance(t, Apply):
        return Apply(t.function, tuple(substitute_term(a, bindings) for a in t.args))
    return t


def _substitute(f: Formula, bindings: Mapping[str, Term], used: Set[str]) -> Formula:
    if isinstance(f, Eq):
        return Eq(substitute_term(f.left, bindings), substitute_term(f.right, bindings))
    if isinstance(f, Rel):
        return Rel(f.relation, tuple(substitute_term(a, bindings) for a in f.args))
    if isinstance(f, Truth):
        return f
    if isinstance(f, Not):
        return Not(_substitute(f.body, bindings, used))
    if isinstance(f, BINARY_TYPES):
        return type(f)(_substitute(f.left, bindings, used), _substitute(f.right, bindings, used))
    if isinstance(f, QUANTIFIER_TYPES):
        body_free = free_vars(f.body)
        active = {k: t for k, t in bindings.items() if k != f.var and k in body_free}
        if not active:
            return f
        var, body = f.var, f.body
        if any(var in term_vars(t) for t in active.values()):
            var = fresh_name(f.var, used)
            used.add(var)
            body = _substitute(body, {f.var: Variable(var)}, used)
        return type(f)(var, _substitute(body, active, used))
    raise TypeError("not a formula: {!r}".format(f))


def substitute(f: Formula, bindings: Mapping[str, Term]) -> Formula:
    """Capture-avoiding substitution of terms for free variables.

    A bound variable that occurs in a substituted term is renamed with a
    numeric suffix found nowhere in the formula or the bindings.
    """
    bindings = {k: t for k, t in bindings.items() if t != Variable(k)}
    if not bindings:
        return f
    used = set(names_in(f)) | set(bindings)
    for t in bindings.values():
        used |= term_vars(t)
    return _substitute(f, bindings, used)


def induction_axiom(phi: Formula, ind_var: str, sig: Optional[Signature] = None) -> Formula:
    """Instantiate the induction schema for phi(x, w).

    Returns ``forall w [phi(0, w) & forall x (phi(x, w) -> phi(x + 1, w)) -> forall x phi(x, w)]``
    with the parameters w closed in sorted order.

    Raises:
        SubstitutionError: if ``ind_var`` is not free in phi
        SignatureError: if the signature lacks 0, 1 or a binary +
    """
    free = free_vars(phi)
    if ind_var not in free:
        raise SubstitutionError("{} is not free in the formula".format(ind_var))
    if sig is not None and not (sig.is_constant("0") and sig.is_constant("1") and sig.function_arity("+") == 2):
        raise SignatureError("the induction schema needs the symbols 0, 1 and a binary +")
    x = Variable(ind_var)
    base = substitute(phi, {ind_var: Constant("0")})
    successor = substitute(phi, {ind_var: Apply("+", (x, Constant("1")))})
    step = Forall(ind_var, Implies(phi, successor))
    body = Implies(And(base, step), Forall(ind_var, phi))
    return forall_all(sorted(free - {ind_var}), body)


##############################################################################
# Validation
##############################################################################


def validate_term(t: Term, sig: Signature):
    """Check symbols and arities of a programmatically built term.

    Raises:
        SignatureError: on the first offending symbol
    """
    pending = [t]
    while pending:
        t = pending.pop()
        if isinstance(t, Variable):
            if not is_variable_name(t.name):
                raise SignatureError("illegal variable name '{}'".format(t.name))
        elif isinstance(t, Constant):
            if not sig.is_constant(t.name):
                raise SignatureError("unknown constant symbol '{}'".format(t.name))
        elif isinstance(t, Apply):
            arity = sig.function_arity(t.function)
            if arity is None:
                raise SignatureError("unknown function symbol '{}'".format(t.function))
            if arity != len(t.args):
                raise SignatureError("function {} expects {} arguments".format(t.function, arity))
            pending.extend(reversed(t.args))
        else:
            raise TypeError("not a term: {!r}".format(t))


def validate_formula(f: Formula, sig: Signature):
    """Check every symbol, arity and bound variable name of a formula."""
    if isinstance(f, Eq):
        validate_term(f.left, sig)
        validate_term(f.right, sig)
    elif isinstance(f, Rel):
        arity = sig.relation_arity(f.relation)
        if arity is None:
            raise SignatureError("unknown relation symbol '{}'".format(f.relation))
        if arity != len(f.args):
            raise SignatureError("relation {} expects {} arguments".format(f.relation, arity))
        for a in f.args:
            validate_term(a, sig)
    elif isinstance(f, Not):
        validate_formula(f.body, sig)
    elif isinstance(f, BINARY_TYPES):
        validate_formula(f.left, sig)
        validate_formula(f.right, sig)
    elif isinstance(f, QUANTIFIER_TYPES):
        if not is_variable_name(f.var) or sig.is_symbol(f.var):
            raise SignatureError("illegal bound variable name '{}'".format(f.var))
        validate_formula(f.body, sig)
    elif not isinstance(f, Truth):
        raise TypeError("not a formula: {!r}".format(f))
