#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Finite structures and the satisfaction relation.

A :class:`FiniteStructure` interprets every symbol of a signature
extensionally, by tables over a finite universe of opaque element ids.
Formulas are evaluated with the usual recursive truth clauses, quantifiers
ranging over the whole universe.

Homomorphisms use the strong relation clause: a tuple is in R^A *if and
only if* its image is in R^B. Most texts only ask for the forward direction.

Structure files are JSON documents::

    {
        "universe": ["0", "1"],
        "functions": {"+": {"0": {"0": "0", "1": "1"}, "1": {"0": "1", "1": "0"}}},
        "relations": {"leq": [["0", "0"], ["0", "1"], ["1", "1"]]},
        "constants": {"0": "0"}
    }

Function tables are nested objects (one level per argument) or lists of
``[arg1, ..., argn, value]`` rows. An optional ``signature`` object fixes
the arities, otherwise they are read off the tables.
"""

##############################################################################
# Imports
##############################################################################

import itertools
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Hashable, Iterable, Mapping, Optional, Sequence, Set, Tuple

from . import poly
from . import syntax
from . import theories
from .errors import InputError, NotASentenceError
from .syntax import Formula, Signature, Term

##############################################################################
# Errors
##############################################################################

logger = logging.getLogger(__name__)


class EvaluationError(InputError):
    """Unassigned variables or assignments outside the universe."""


class StructureError(InputError):
    """Tables that are not total, not closed or disagree with the signature."""


Element = Hashable
Assignment = Mapping[str, Element]

##############################################################################
# Structures
##############################################################################


@dataclass(frozen=True)
class FiniteStructure(object):
    """A nonempty finite universe with an interpretation of every symbol.

    Args:
        signature: the language interpreted
        universe: distinct element ids
        functions: name -> {argument tuple: value}, total on universe^n
        relations: name -> set of argument tuples
        constants: name -> element
    """

    signature: Signature
    universe: Tuple[Element, ...]
    functions: Dict[str, Dict[Tuple[Element, ...], Element]] = field(default_factory=dict)
    relations: Dict[str, FrozenSet[Tuple[Element, ...]]] = field(default_factory=dict)
    constants: Dict[str, Element] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "functions", {n: dict(t) for n, t in self.functions.items()})
        object.__setattr__(
            self, "relations", {n: frozenset(tuple(row) for row in t) for n, t in self.relations.items()}
        )
        object.__setattr__(self, "constants", dict(self.constants))
        object.__setattr__(self, "_elements", frozenset(self.universe))
        self._validate()

    def _validate(self):
        if not self.universe:
            raise StructureError("the universe must be nonempty")
        if len(self._elements) != len(self.universe):
            raise StructureError("universe elements must be distinct")
        sig = self.signature
        declared = {n for n, _ in sig.functions}
        if set(self.functions) != declared:
            raise StructureError("function tables {} do not match the signature {}".format(
                sorted(self.functions), sorted(declared)))
        for name, arity in sig.functions:
            table = self.functions[name]
            for args in itertools.product(self.universe, repeat=arity):
                if args not in table:
                    raise StructureError("{} is undefined at {}".format(name, args))
                if table[args] not in self._elements:
                    raise StructureError("{}{} = {} is outside the universe".format(name, args, table[args]))
            if len(table) != len(self.universe) ** arity:
                raise StructureError("table of {} has entries outside the universe".format(name))
        declared = {n for n, _ in sig.relations}
        if set(self.relations) != declared:
            raise StructureError("relation tables {} do not match the signature {}".format(
                sorted(self.relations), sorted(declared)))
        for name, arity in sig.relations:
            for row in self.relations[name]:
                if len(row) != arity or any(e not in self._elements for e in row):
                    raise StructureError("bad tuple {} for relation {}".format(row, name))
        if set(self.constants) != set(sig.constants):
            raise StructureError("constants {} do not match the signature {}".format(
                sorted(self.constants), sorted(sig.constants)))
        for name, value in self.constants.items():
            if value not in self._elements:
                raise StructureError("constant {} = {} is outside the universe".format(name, value))

    def __contains__(self, element: Element) -> bool:
        return element in self._elements

    def __len__(self) -> int:
        return len(self.universe)

    def apply(self, function: str, args: Sequence[Element]) -> Element:
        return self.functions[function][tuple(args)]

    def holds(self, relation: str, args: Sequence[Element]) -> bool:
        return tuple(args) in self.relations[relation]

    def to_dict(self) -> Dict[str, Any]:
        """Serialise to the JSON layout, with list-of-rows tables and string ids."""
        return {
            "signature": self.signature.to_dict(),
            "universe": [str(e) for e in self.universe],
            "functions": {
                name: [[str(a) for a in args] + [str(value)] for args, value in sorted(table.items(), key=str)]
                for name, table in self.functions.items()
            },
            "relations": {
                name: sorted([str(a) for a in row] for row in rows) for name, rows in self.relations.items()
            },
            "constants": {name: str(value) for name, value in self.constants.items()},
        }


##############################################################################
# Loading
##############################################################################


def _nesting_depth(table: Any) -> int:
    depth = 0
    while isinstance(table, Mapping):
        if not table:
            raise StructureError("empty function table")
        table = next(iter(table.values()))
        depth += 1
    return depth


def _flatten_table(table: Any, arity: int) -> Dict[Tuple[str, ...], str]:
    if isinstance(table, list):
        rows = {}
        for row in table:
            if not isinstance(row, list) or len(row) != arity + 1:
                raise StructureError("function rows need {} entries, got {}".format(arity + 1, row))
            rows[tuple(str(e) for e in row[:-1])] = str(row[-1])
        return rows
    if arity == 0:
        return {(): str(table)}
    if not isinstance(table, Mapping):
        raise StructureError("function table is nested too shallowly")
    flat = {}
    for key, sub in table.items():
        for args, value in _flatten_table(sub, arity - 1).items():
            flat[(str(key),) + args] = value
    return flat


def structure_from_dict(data: Mapping, signature: Optional[Signature] = None) -> FiniteStructure:
    """Build a structure from the JSON layout.

    Raises:
        StructureError: for malformed or inconsistent tables
    """
    try:
        if signature is None and "signature" in data:
            signature = Signature.from_dict(data["signature"])
        functions = dict(data.get("functions", {}))
        relations = dict(data.get("relations", {}))
        constants = {str(name): str(value) for name, value in dict(data.get("constants", {})).items()}
        if signature is None:
            function_arities = []
            for name, table in functions.items():
                if isinstance(table, list):
                    if not table:
                        raise StructureError("cannot infer the arity of {} from an empty table".format(name))
                    function_arities.append((name, len(table[0]) - 1))
                else:
                    function_arities.append((name, _nesting_depth(table)))
            relation_arities = []
            for name, rows in relations.items():
                if not rows:
                    raise StructureError("cannot infer the arity of {} from an empty table".format(name))
                relation_arities.append((name, len(rows[0])))
            signature = Signature(tuple(function_arities), tuple(relation_arities), tuple(constants))
        arities = dict(signature.functions)
        return FiniteStructure(
            signature=signature,
            universe=tuple(str(e) for e in data["universe"]),
            functions={name: _flatten_table(table, arities.get(name, 0)) for name, table in functions.items()},
            relations={name: [tuple(str(e) for e in row) for row in rows] for name, rows in relations.items()},
            constants=constants,
        )
    except KeyError as e:
        raise StructureError("missing field {}".format(e))
    except (TypeError, AttributeError, IndexError) as e:
        raise StructureError("malformed structure: {}".format(e))


def load_structure(path: str, signature: Optional[Signature] = None) -> FiniteStructure:
    """Read a structure file."""
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise StructureError("cannot read structure file {}: {}".format(path, e))
    return structure_from_dict(data, signature)


##############################################################################
# Builders
##############################################################################


def ring_mod(n: int) -> FiniteStructure:
    """The ring of integers modulo n over the ring signature, elements 0 .. n-1."""
    if n < 1:
        raise StructureError("the modulus must be positive")
    elements = tuple(range(n))
    pairs = list(itertools.product(elements, repeat=2))
    return FiniteStructure(
        signature=theories.RING_SIGNATURE,
        universe=elements,
        functions={
            "+": {(a, b): (a + b) % n for a, b in pairs},
            "-": {(a, b): (a - b) % n for a, b in pairs},
            "*": {(a, b): (a * b) % n for a, b in pairs},
        },
        constants={"0": 0, "1": 1 % n},
    )


def group_mod(n: int) -> FiniteStructure:
    """The cyclic group of order n over the group signature."""
    if n < 1:
        raise StructureError("the order must be positive")
    elements = tuple(range(n))
    return FiniteStructure(
        signature=theories.GROUP_SIGNATURE,
        universe=elements,
        functions={"+": {(a, b): (a + b) % n for a, b in itertools.product(elements, repeat=2)}},
        constants={"0": 0},
    )


def product_group(m: int, n: int) -> FiniteStructure:
    """The group Z/m x Z/n with pairs as elements."""
    elements = tuple(itertools.product(range(m), range(n)))
    return FiniteStructure(
        signature=theories.GROUP_SIGNATURE,
        universe=elements,
        functions={
            "+": {(a, b): ((a[0] + b[0]) % m, (a[1] + b[1]) % n) for a, b in itertools.product(elements, repeat=2)}
        },
        constants={"0": (0, 0)},
    )


def galois_field_structure(p: int, k: int = 1) -> FiniteStructure:
    """The field with p^k elements over the ring signature, in the oracle's integer encoding."""
    gf = poly.GaloisField(p, k)
    elements = tuple(gf.elements())
    pairs = list(itertools.product(elements, repeat=2))
    return FiniteStructure(
        signature=theories.RING_SIGNATURE,
        universe=elements,
        functions={
            "+": {(a, b): gf.add(a, b) for a, b in pairs},
            "-": {(a, b): gf.sub(a, b) for a, b in pairs},
            "*": {(a, b): gf.mul(a, b) for a, b in pairs},
        },
        constants={"0": gf.zero(), "1": gf.one()},
    )


def relabel(structure: FiniteStructure, mapping: Mapping[Element, Element]) -> FiniteStructure:
    """Transport a structure along a bijection of element ids."""
    if set(mapping) != set(structure.universe) or len(set(mapping.values())) != len(structure):
        raise StructureError("relabelling must be a bijection on the universe")
    return FiniteStructure(
        signature=structure.signature,
        universe=tuple(mapping[e] for e in structure.universe),
        functions={
            name: {tuple(mapping[a] for a in args): mapping[value] for args, value in table.items()}
            for name, table in structure.functions.items()
        },
        relations={
            name: [tuple(mapping[a] for a in row) for row in rows] for name, rows in structure.relations.items()
        },
        constants={name: mapping[value] for name, value in structure.constants.items()},
    )


def is_closed_subset(structure: FiniteStructure, subset: Iterable[Element]) -> bool:
    """True if the subset holds every constant and is closed under every function."""
    members = set(subset)
    if not members or not members <= set(structure.universe):
        return False
    if any(value not in members for value in structure.constants.values()):
        return False
    for name, arity in structure.signature.functions:
        for args in itertools.product(members, repeat=arity):
            if structure.apply(name, args) not in members:
                return False
    return True


def restrict(structure: FiniteStructure, subset: Iterable[Element]) -> FiniteStructure:
    """The substructure on a closed subset, in the parent's universe order.

    Raises:
        StructureError: if the subset is not closed
    """
    members = set(subset)
    if not is_closed_subset(structure, members):
        raise StructureError("the subset is not closed under the structure's functions and constants")
    universe = tuple(e for e in structure.universe if e in members)
    return FiniteStructure(
        signature=structure.signature,
        universe=universe,
        functions={
            name: {args: value for args, value in table.items() if all(a in members for a in args)}
            for name, table in structure.functions.items()
        },
        relations={
            name: [row for row in rows if all(a in members for a in row)]
            for name, rows in structure.relations.items()
        },
        constants=dict(structure.constants),
    )


def _closure(structure: FiniteStructure, generators: Iterable[Element]) -> Set[Element]:
    members = set(generators) | set(structure.constants.values())
    while True:
        new = set()
        for name, arity in structure.signature.functions:
            for args in itertools.product(members, repeat=arity):
                value = structure.apply(name, args)
                if value not in members:
                    new.add(value)
        if not new:
            return members
        members |= new


def generated_substructure(structure: FiniteStructure, generators: Iterable[Element]) -> FiniteStructure:
    """The smallest substructure containing the generators.

    Raises:
        StructureError: if a generator is outside the universe, or nothing
            is generated (no generators and no constants)
    """
    generators = list(generators)
    for g in generators:
        if g not in structure:
            raise StructureError("generator {} is outside the universe".format(g))
    members = _closure(structure, generators)
    if not members:
        raise StructureError("the empty set generates no structure")
    return restrict(structure, members)


##############################################################################
# Evaluation
##############################################################################


def _check_assignment(structure: FiniteStructure, assignment: Assignment):
    for name, value in assignment.items():
        if value not in structure:
            raise EvaluationError("{} is assigned {}, which is outside the universe".format(name, value))


def _table(structure: FiniteStructure, t: syntax.Apply) -> Dict[Tuple[Element, ...], Element]:
    try:
        return structure.functions[t.function]
    except KeyError:
        raise syntax.SignatureError("unknown function symbol '{}'".format(t.function))


def _apply(table: Mapping, t: syntax.Apply, arguments: Tuple[Element, ...]) -> Element:
    try:
        return table[arguments]
    except KeyError:
        raise syntax.SignatureError("function {} applied to {} arguments".format(t.function, len(t.args)))


def _eval_term(structure: FiniteStructure, t: Term, assignment: Assignment) -> Element:
    """Evaluate a term; binary left spines (numerals, long sums) are folded in a loop."""
    spine = []
    while isinstance(t, syntax.Apply) and len(t.args) == 2:
        spine.append((t, _table(structure, t)))
        t = t.args[0]
    if isinstance(t, syntax.Variable):
        try:
            value = assignment[t.name]
        except KeyError:
            raise EvaluationError("variable {} is not assigned".format(t.name))
    elif isinstance(t, syntax.Constant):
        try:
            value = structure.constants[t.name]
        except KeyError:
            raise syntax.SignatureError("unknown constant symbol '{}'".format(t.name))
    else:
        value = _apply(_table(structure, t), t, tuple(_eval_term(structure, a, assignment) for a in t.args))
    for node, table in reversed(spine):
        value = _apply(table, node, (value, _eval_term(structure, node.args[1], assignment)))
    return value


def eval_term(structure: FiniteStructure, t: Term, assignment: Optional[Assignment] = None) -> Element:
    """Value of a term under an assignment.

    Raises:
        EvaluationError: if a variable of the term is unassigned or an
            assigned value is outside the universe
    """
    assignment = assignment or {}
    _check_assignment(structure, assignment)
    return _eval_term(structure, t, assignment)


def _eval(structure: FiniteStructure, f: Formula, assignment: Dict[str, Element]) -> bool:
    if isinstance(f, syntax.Eq):
        return _eval_term(structure, f.left, assignment) == _eval_term(structure, f.right, assignment)
    if isinstance(f, syntax.Rel):
        if f.relation not in structure.relations:
            raise syntax.SignatureError("unknown relation symbol '{}'".format(f.relation))
        return structure.holds(f.relation, [_eval_term(structure, a, assignment) for a in f.args])
    if isinstance(f, syntax.Truth):
        return f.value
    if isinstance(f, syntax.Not):
        return not _eval(structure, f.body, assignment)
    if isinstance(f, syntax.And):
        return _eval(structure, f.left, assignment) and _eval(structure, f.right, assignment)
    if isinstance(f, syntax.Or):
        return _eval(structure, f.left, assignment) or _eval(structure, f.right, assignment)
    if isinstance(f, syntax.Implies):
        return (not _eval(structure, f.left, assignment)) or _eval(structure, f.right, assignment)
    if isinstance(f, syntax.QUANTIFIER_TYPES):
        saved = assignment.get(f.var, _UNSET)
        try:
            outcomes = (_eval_bound(structure, f, assignment, element) for element in structure.universe)
            return any(outcomes) if isinstance(f, syntax.Exists) else all(outcomes)
        finally:
            if saved is _UNSET:
                assignment.pop(f.var, None)
            else:
                assignment[f.var] = saved
    raise TypeError("not a formula: {!r}".format(f))


_UNSET = object()


def _eval_bound(structure: FiniteStructure, f: Formula, assignment: Dict[str, Element], element: Element) -> bool:
    assignment[f.var] = element
    return _eval(structure, f.body, assignment)


def eval_formula(structure: FiniteStructure, f: Formula, assignment: Optional[Assignment] = None) -> bool:
    """Decide whether the structure satisfies a formula under an assignment.

    Quantifiers become finite disjunctions and conjunctions over the universe.

    Raises:
        EvaluationError: if a free variable is unassigned or an assigned
            value is outside the universe
    """
    assignment = dict(assignment or {})
    _check_assignment(structure, assignment)
    missing = syntax.free_vars(f) - set(assignment)
    if missing:
        raise EvaluationError("unassigned free variables: {}".format(", ".join(sorted(missing))))
    return _eval(structure, f, assignment)


def is_model(structure: FiniteStructure, theory: Iterable[Formula]) -> bool:
    """True if every sentence of the theory holds in the structure.

    Raises:
        NotASentenceError: if the theory contains a formula with free variables
    """
    theory = list(theory)
    for sentence in theory:
        free = syntax.free_vars(sentence)
        if free:
            raise NotASentenceError(free)
    return all(_eval(structure, sentence, {}) for sentence in theory)


def definable_set(
    structure: FiniteStructure,
    f: Formula,
    variables: Sequence[str],
    assignment: Optional[Assignment] = None,
) -> Set[Tuple[Element, ...]]:
    """The tuples over the universe satisfying a formula, with parameters from an assignment.

    Raises:
        EvaluationError: if a free variable is neither listed nor assigned
    """
    parameters = dict(assignment or {})
    _check_assignment(structure, parameters)
    missing = syntax.free_vars(f) - set(variables) - set(parameters)
    if missing:
        raise EvaluationError("unassigned free variables: {}".format(", ".join(sorted(missing))))
    result = set()
    for values in itertools.product(structure.universe, repeat=len(variables)):
        current = dict(parameters)
        current.update(zip(variables, values))
        if _eval(structure, f, current):
            result.add(values)
    return result


##############################################################################
# Maps between structures
##############################################################################


def _check_same_signature(a: FiniteStructure, b: FiniteStructure):
    if a.signature != b.signature:
        raise StructureError("structures interpret different signatures")


def is_homomorphism(mapping: Mapping[Element, Element], a: FiniteStructure, b: FiniteStructure) -> bool:
    """Check the function, relation (if and only if) and constant clauses.

    Raises:
        StructureError: if the map is not total on A's universe or leaves B's
    """
    _check_same_signature(a, b)
    for element in a.universe:
        if element not in mapping:
            raise StructureError("the map is undefined at {}".format(element))
        if mapping[element] not in b:
            raise StructureError("{} is mapped outside the target universe".format(element))
    for name, table in a.functions.items():
        for args, value in table.items():
            if mapping[value] != b.apply(name, [mapping[e] for e in args]):
                return False
    for name, arity in a.signature.relations:
        for args in itertools.product(a.universe, repeat=arity):
            if a.holds(name, args) != b.holds(name, [mapping[e] for e in args]):
                return False
    return all(mapping[value] == b.constants[name] for name, value in a.constants.items())


def _consistent(
    a: FiniteStructure, b: FiniteStructure, mapping: Dict[Element, Element], element: Element
) -> bool:
    """Check every table entry whose arguments are assigned and involve ``element``."""
    assigned = list(mapping)
    for name, arity in a.signature.functions:
        for args in itertools.product(assigned, repeat=arity):
            if element not in args:
                continue
            value = a.apply(name, args)
            if value in mapping and mapping[value] != b.apply(name, [mapping[e] for e in args]):
                return False
    for name, arity in a.signature.relations:
        for args in itertools.product(assigned, repeat=arity):
            if element in args and a.holds(name, args) != b.holds(name, [mapping[e] for e in args]):
                return False
    return True


def find_isomorphism(a: FiniteStructure, b: FiniteStructure) -> Optional[Dict[Element, Element]]:
    """Search for an isomorphism from A onto B.

    Backtracks over bijections, constants pinned first, pruning any partial
    map that already contradicts a table.

    Returns:
        the witnessing bijection, or None if the structures are not isomorphic
    """
    _check_same_signature(a, b)
    if len(a) != len(b):
        return None
    mapping: Dict[Element, Element] = {}
    for name, value in a.constants.items():
        target = b.constants[name]
        if mapping.get(value, target) != target:
            return None
        mapping[value] = target
    if len(set(mapping.values())) != len(mapping):
        return None
    for element in list(mapping):
        if not _consistent(a, b, mapping, element):
            return None
    order = [e for e in a.universe if e not in mapping]
    nodes = 0

    def extend(index: int) -> bool:
        nonlocal nodes
        if index == len(order):
            return True
        element = order[index]
        used = set(mapping.values())
        for candidate in b.universe:
            if candidate in used:
                continue
            nodes += 1
            mapping[element] = candidate
            if _consistent(a, b, mapping, element) and extend(index + 1):
                return True
            del mapping[element]
        return False

    found = extend(0)
    logger.debug("isomorphism search visited %d nodes", nodes)
    if found and is_homomorphism(mapping, a, b):
        return dict(mapping)
    return None


def is_substructure(a: FiniteStructure, b: FiniteStructure) -> bool:
    """True if A's universe lies in B's and every table of A is the restriction of B's."""
    _check_same_signature(a, b)
    if not set(a.universe) <= set(b.universe):
        return False
    if not is_closed_subset(b, a.universe):
        return False
    for name, table in a.functions.items():
        if any(b.apply(name, args) != value for args, value in table.items()):
            return False
    for name, arity in a.signature.relations:
        for args in itertools.product(a.universe, repeat=arity):
            if a.holds(name, args) != b.holds(name, args):
                return False
    return a.constants == b.constants


##############################################################################
# Back and forth
##############################################################################


def _partial_isomorphism(
    a: FiniteStructure, b: FiniteStructure, pairs: Iterable[Tuple[Element, Element]]
) -> bool:
    """True if the chosen pairs extend to an isomorphism of the generated substructures.

    This is exactly agreement on all atomic formulas, whatever their term depth.
    """
    forward: Dict[Element, Element] = {}
    backward: Dict[Element, Element] = {}

    def add(x: Element, y: Element) -> bool:
        if forward.get(x, y) != y or backward.get(y, x) != x:
            return False
        forward[x] = y
        backward[y] = x
        return True

    seeds = list(pairs) + [(value, b.constants[name]) for name, value in a.constants.items()]
    if not all(add(x, y) for x, y in seeds):
        return False
    changed = True
    while changed:
        changed = False
        domain = list(forward.items())
        for name, arity in a.signature.functions:
            for chosen in itertools.product(domain, repeat=arity):
                x = a.apply(name, [p[0] for p in chosen])
                y = b.apply(name, [p[1] for p in chosen])
                if x not in forward or y not in backward:
                    changed = True
                if not add(x, y):
                    return False
    for name, arity in a.signature.relations:
        for args in itertools.product(list(forward), repeat=arity):
            if a.holds(name, args) != b.holds(name, [forward[e] for e in args]):
                return False
    return True


def elem_equiv_at_depth(a: FiniteStructure, b: FiniteStructure, depth: int) -> bool:
    """Decide agreement on all sentences of quantifier rank at most ``depth``.

    Plays the back-and-forth game: the duplicator must answer every move in
    either structure so that the chosen elements stay a partial isomorphism.
    """
    _check_same_signature(a, b)
    if depth < 0:
        raise InputError("the depth must be a natural number")
    memo: Dict[Tuple[FrozenSet, int], bool] = {}

    def duplicator_wins(pairs: FrozenSet[Tuple[Element, Element]], rounds: int) -> bool:
        key = (pairs, rounds)
        if key in memo:
            return memo[key]
        if not _partial_isomorphism(a, b, pairs):
            result = False
        elif rounds == 0:
            result = True
        else:
            result = all(
                any(duplicator_wins(pairs | {(x, y)}, rounds - 1) for y in b.universe) for x in a.universe
            ) and all(
                any(duplicator_wins(pairs | {(x, y)}, rounds - 1) for x in a.universe) for y in b.universe
            )
        memo[key] = result
        return result

    outcome = duplicator_wins(frozenset(), depth)
    logger.debug("back-and-forth at depth %d explored %d positions: %s", depth, len(memo), outcome)
    return outcome
