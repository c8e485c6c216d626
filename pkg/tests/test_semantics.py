#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Imports
##############################################################################

import json
import random

import pytest

from acf_decide import semantics, syntax, theories
from acf_decide.errors import NotASentenceError
from acf_decide.syntax import Apply, Constant, Eq, Not, Variable

##############################################################################
# Fixtures
##############################################################################

RING = theories.RING_SIGNATURE
GROUP = theories.GROUP_SIGNATURE

F2_TABLES = {
    "universe": ["0", "1"],
    "functions": {
        "+": {"0": {"0": "0", "1": "1"}, "1": {"0": "1", "1": "0"}},
        "-": {"0": {"0": "0", "1": "1"}, "1": {"0": "1", "1": "0"}},
        "*": {"0": {"0": "0", "1": "0"}, "1": {"0": "0", "1": "1"}},
    },
    "relations": {},
    "constants": {"0": "0", "1": "1"},
}


@pytest.fixture
def f2():
    return semantics.structure_from_dict(F2_TABLES)


@pytest.fixture
def f2_file(tmp_path):
    path = tmp_path / "F2.json"
    path.write_text(json.dumps(F2_TABLES))
    return str(path)


@pytest.fixture
def rng():
    return random.Random(20261018)


def random_group_formula(rng: random.Random, depth: int = 2):
    """A random quantifier-free formula in x, y over the group language."""
    def term(d):
        if d == 0 or rng.random() < 0.3:
            return rng.choice([Variable("x"), Variable("y"), Constant("0")])
        return Apply("+", (term(d - 1), term(d - 1)))

    f = Eq(term(depth), term(depth))
    for _ in range(rng.randint(0, 2)):
        g = Eq(term(depth), term(depth))
        f = rng.choice([syntax.And(f, g), syntax.Or(f, Not(g)), syntax.Implies(g, f)])
    return f


##############################################################################
# Structures
##############################################################################


def test_structure_from_nested_tables(f2):
    assert len(f2) == 2
    assert f2.apply("+", ("1", "1")) == "0"
    assert f2.signature.function_arity("*") == 2
    assert f2.signature.is_constant("1")


def test_structure_round_trips_through_its_dict():
    z4 = semantics.ring_mod(4)
    loaded = semantics.structure_from_dict(json.loads(json.dumps(z4.to_dict())))
    assert semantics.find_isomorphism(z4, semantics.relabel(loaded, {str(i): i for i in range(4)})) is not None


@pytest.mark.parametrize("broken", [
    {"universe": []},
    {"universe": ["0", "0"], "constants": {}},
    {"universe": ["0", "1"], "functions": {"+": {"0": {"0": "0"}, "1": {"0": "1", "1": "0"}}}},
    {"universe": ["0"], "functions": {"+": {"0": {"0": "7"}}}},
    {"universe": ["0"], "constants": {"c": "9"}},
    {"functions": {}},
])
def test_structure_rejects_bad_tables(broken):
    with pytest.raises(semantics.StructureError):
        semantics.structure_from_dict(broken)


def test_load_structure_missing_file(tmp_path):
    with pytest.raises(semantics.StructureError):
        semantics.load_structure(str(tmp_path / "nowhere.json"))


def test_galois_field_structure():
    gf4 = semantics.galois_field_structure(2, 2)
    assert len(gf4) == 4
    assert semantics.eval_formula(gf4, syntax.parse_formula("exists x. x*x + x + 1 = 0", RING))
    assert not semantics.eval_formula(semantics.ring_mod(2), syntax.parse_formula("exists x. x*x + x + 1 = 0", RING))


##############################################################################
# Evaluation
##############################################################################


def test_eval_in_f2(f2_file):
    f2 = semantics.load_structure(f2_file)
    assert semantics.eval_formula(f2, syntax.parse_formula("exists x. x + 1 = 0", f2.signature))
    assert semantics.eval_formula(f2, syntax.parse_formula("forall x. x * x = x", f2.signature))


def test_inverse_axiom_fails_in_z4():
    inverse = syntax.parse_formula("forall x. (x != 0 -> exists y. x * y = 1)", RING)
    assert not semantics.eval_formula(semantics.ring_mod(4), inverse)
    assert semantics.eval_formula(semantics.ring_mod(5), inverse)


def test_eval_with_assignment():
    z5 = semantics.ring_mod(5)
    f = syntax.parse_formula("x * x = 4", RING)
    assert semantics.eval_formula(z5, f, {"x": 2})
    assert semantics.eval_formula(z5, f, {"x": 3})
    assert not semantics.eval_formula(z5, f, {"x": 1})
    assert semantics.eval_term(z5, syntax.parse_term("x * x + 1", RING), {"x": 4}) == 2


def test_eval_large_numerals():
    z5 = semantics.ring_mod(5)
    assert semantics.eval_formula(z5, syntax.parse_formula("12345 = 0", RING))
    assert semantics.eval_term(z5, syntax.parse_term("x + 12346", RING), {"x": 2}) == 3


def test_eval_does_not_leak_bound_values():
    z3 = semantics.ring_mod(3)
    assignment = {"x": 1}
    f = syntax.parse_formula("(exists x. x = 0) & x = 1", RING)
    assert semantics.eval_formula(z3, f, assignment)
    assert assignment == {"x": 1}


def test_eval_errors():
    z3 = semantics.ring_mod(3)
    with pytest.raises(semantics.EvaluationError):
        semantics.eval_formula(z3, syntax.parse_formula("x = 0", RING))
    with pytest.raises(semantics.EvaluationError):
        semantics.eval_formula(z3, syntax.parse_formula("x = 0", RING), {"x": 7})


def test_is_model_requires_sentences():
    with pytest.raises(NotASentenceError) as info:
        semantics.is_model(semantics.ring_mod(2), [syntax.parse_formula("x = 0", RING)])
    assert info.value.free_variables == ("x",)


def test_definable_set():
    z7 = semantics.ring_mod(7)
    squares = semantics.definable_set(z7, syntax.parse_formula("exists y. y * y = x", RING), ["x"])
    assert squares == {(0,), (1,), (2,), (4,)}
    roots = semantics.definable_set(z7, syntax.parse_formula("x * x = a", RING), ["x"], {"a": 2})
    assert roots == {(3,), (4,)}


##############################################################################
# Maps & Substructures
##############################################################################


def test_relabelled_structures_are_isomorphic(rng):
    for n in (3, 5, 6):
        z = semantics.ring_mod(n)
        images = list(range(10, 10 + n))
        rng.shuffle(images)
        copy = semantics.relabel(z, dict(zip(range(n), images)))
        mapping = semantics.find_isomorphism(z, copy)
        assert mapping is not None
        assert semantics.is_homomorphism(mapping, z, copy)


def test_non_isomorphic_groups():
    assert semantics.find_isomorphism(semantics.group_mod(4), semantics.product_group(2, 2)) is None
    assert semantics.find_isomorphism(semantics.group_mod(6), semantics.product_group(2, 3)) is not None


def test_is_homomorphism_rejects_partial_maps():
    with pytest.raises(semantics.StructureError):
        semantics.is_homomorphism({0: 0}, semantics.group_mod(2), semantics.group_mod(2))


def test_generated_substructure():
    z8 = semantics.group_mod(8)
    evens = semantics.generated_substructure(z8, [2])
    assert set(evens.universe) == {0, 2, 4, 6}
    assert semantics.is_substructure(evens, z8)
    assert not semantics.is_closed_subset(z8, [0, 3])
    with pytest.raises(semantics.StructureError):
        semantics.restrict(z8, [0, 3])


def random_group(rng: random.Random, largest: int):
    """A cyclic group or a product of two cyclic groups with at most ``largest`` elements."""
    shapes = [(n,) for n in range(2, largest + 1)]
    shapes += [(m, n) for m in range(2, largest + 1) for n in range(m, largest + 1) if m * n <= largest]
    shape = rng.choice(shapes)
    return semantics.group_mod(*shape) if len(shape) == 1 else semantics.product_group(*shape)


def test_quantifier_free_formulas_are_preserved_by_substructures(rng):
    formulas = [random_group_formula(rng) for _ in range(50)]
    for _ in range(100):
        b = random_group(rng, 8)
        generators = rng.sample(b.universe, rng.randint(1, 2))
        a = semantics.generated_substructure(b, generators)
        assert semantics.is_substructure(a, b)
        for f in formulas:
            for x in a.universe:
                for y in a.universe:
                    assignment = {"x": x, "y": y}
                    assert semantics.eval_formula(a, f, assignment) == semantics.eval_formula(b, f, assignment)


def test_existential_sentences_go_up(rng):
    for _ in range(20):
        n = rng.randint(2, 8)
        b = semantics.group_mod(n)
        a = semantics.generated_substructure(b, [rng.randrange(n)])
        f = syntax.exists_all(["x", "y"], random_group_formula(rng))
        if semantics.eval_formula(a, f):
            assert semantics.eval_formula(b, f)


##############################################################################
# Back and forth
##############################################################################


def test_isomorphic_structures_are_equivalent(rng):
    for _ in range(50):
        if rng.random() < 0.5:
            z = semantics.ring_mod(rng.randint(1, 6))
        else:
            z = random_group(rng, 6)
        images = list(range(len(z)))
        rng.shuffle(images)
        copy = semantics.relabel(z, dict(zip(z.universe, images)))
        for depth in (0, 1, 2):
            assert semantics.elem_equiv_at_depth(z, copy, depth)


def test_game_separates_cyclic_from_klein():
    z4, klein = semantics.group_mod(4), semantics.product_group(2, 2)
    assert semantics.elem_equiv_at_depth(z4, klein, 0)
    assert not semantics.elem_equiv_at_depth(z4, klein, 1)


def test_game_rejects_negative_depth():
    z2 = semantics.group_mod(2)
    with pytest.raises(ValueError):
        semantics.elem_equiv_at_depth(z2, z2, -1)
