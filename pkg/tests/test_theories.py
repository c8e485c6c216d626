#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Imports
##############################################################################

import pytest

from acf_decide import qe, semantics, syntax, theories

##############################################################################
# Tests
##############################################################################


def test_fields_axioms_are_sentences():
    axioms = theories.fields_axioms()
    assert len(axioms) == 9
    assert all(syntax.is_sentence(axiom) for axiom in axioms)


@pytest.mark.parametrize("n, is_field", [(2, True), (3, True), (4, False), (5, True), (6, False)])
def test_fields_axioms_in_rings_mod_n(n, is_field):
    assert semantics.is_model(semantics.ring_mod(n), theories.fields_axioms()) is is_field


def test_field_with_four_elements_is_a_field():
    assert semantics.is_model(semantics.galois_field_structure(2, 2), theories.fields_axioms())


def test_acf_axiom_shape():
    axiom = theories.acf_axiom(2)
    assert syntax.to_string(axiom) == "forall a0. forall a1. exists x. (x * x + a1 * x + a0 = 0)"
    with pytest.raises(ValueError):
        theories.acf_axiom(0)


def test_acf_axiom_fails_in_finite_fields():
    # x^2 + x + 1 has no root in GF(2)
    assert not semantics.eval_formula(semantics.ring_mod(2), theories.acf_axiom(2))


@pytest.mark.parametrize("char", [0, 2, 3, 5])
def test_acf_axiom_is_decided_true(char):
    assert qe.decide(theories.acf_axiom(3), char)


def test_char_axiom():
    assert semantics.eval_formula(semantics.ring_mod(3), theories.char_axiom(3))
    assert not semantics.eval_formula(semantics.ring_mod(3), theories.char_axiom(2))
    assert syntax.to_string(theories.char_axiom(2)) == "forall x. (x + x = 0)"


def test_char_zero_axioms():
    axioms = theories.char_zero_axioms(5)
    assert len(axioms) == 4
    assert all(qe.decide(axiom, 0) for axiom in axioms)
    assert not qe.decide(syntax.conjunction(axioms), 3)
