#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Imports
##############################################################################

import io

from acf_decide import syntax
from acf_decide.demos import lefschetz

##############################################################################
# Tests
##############################################################################


def test_sentences_are_sentences():
    labelled = lefschetz.sentences()
    assert len(labelled) == len(lefschetz.CLASSICS) + 2
    assert all(syntax.is_sentence(sentence) for _, sentence in labelled)


def test_demo_output():
    out = io.StringIO()
    assert lefschetz.main(["--prime-bound", "3"], out=out) == 0
    text = out.getvalue()
    assert "two is zero\n  2 = 0\n  char0: false, primes: only {2}\n" in text
    assert "p = 3: witness in GF(3^2)" in text


def test_demo_rejects_bad_bound(capsys):
    assert lefschetz.main(["--prime-bound", "1"], out=io.StringIO()) == 2
    assert "error" in capsys.readouterr().err
