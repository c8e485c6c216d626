#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Imports
##############################################################################

import random
from fractions import Fraction

import pytest

from acf_decide import apps, poly, qe, syntax, theories
from acf_decide.apps import MinimalityKind, MinimalityReport, PolySystem
from acf_decide.errors import InternalError, NotASentenceError, ResourceError
from acf_decide.poly import QQ, ExtensionPoly, GaloisField, MultiPoly, PrimeField
from acf_decide.qe import ConstructibleForm, Sign

##############################################################################
# Helpers
##############################################################################

RING = theories.RING_SIGNATURE

x = MultiPoly.variable("x")
y = MultiPoly.variable("y")
z = MultiPoly.variable("z")


def parse(text):
    return syntax.parse_formula(text, RING)


def poly_of(text):
    return qe.term_to_poly(syntax.parse_term(text, RING))


##############################################################################
# Polynomial systems
##############################################################################


def test_system_from_texts():
    system = PolySystem.from_texts(["x*x + y*y = 1", "x - y"])
    assert system.variables == ("x", "y")
    assert system.generators == (x * x + y * y - 1, x - y)
    sentence = system.sentence()
    assert syntax.is_sentence(sentence)
    assert isinstance(sentence, syntax.Exists) and sentence.var == "x"


def test_system_clears_denominators():
    system = PolySystem((x * Fraction(1, 2) - Fraction(1, 3),))
    assert system.generators == (x * 3 - 2,)


def test_system_rejects_bad_input():
    with pytest.raises(apps.ApplicationError):
        PolySystem(())
    with pytest.raises(apps.ApplicationError):
        PolySystem.from_texts(["x != y"])
    with pytest.raises(apps.ApplicationError):
        PolySystem((x * y,), ("x",))


def test_load_system(tmp_path):
    path = tmp_path / "circle.poly"
    path.write_text("# a circle and a line\nx^2 + y^2 - 1\n\nx = y  # diagonal\n")
    system = apps.load_system(str(path))
    assert len(system.generators) == 2
    with pytest.raises(apps.ApplicationError):
        apps.load_system(str(tmp_path / "nowhere.poly"))


@pytest.mark.parametrize("lines, char, expected", [
    (["x", "x - 1"], 0, False),
    (["x", "x - 1"], 5, False),
    (["x*y - 1"], 0, True),
    (["x*x + y*y - 1", "x - y"], 0, True),
    (["2*x - 1"], 0, True),
    (["2*x - 1"], 2, False),
    (["x*x + 1", "x*y - 1", "y*y + 1"], 0, True),
    (["x*x", "x*y - 1"], 3, False),
])
def test_nullstellensatz(lines, char, expected):
    assert apps.nullstellensatz_decide(PolySystem.from_texts(lines), char) is expected


SOLVABLE_SYSTEMS = [
    (["x*y - 1"], 2, 1),
    (["x*x + y*y - 1", "x - y"], 7, 1),
    (["x*x + 1", "x*y - 1", "y*y + 1"], 5, 1),
    (["x*x*x - 2"], 5, 1),
    (["x + y + z - 1", "x*y*z - 1"], 2, 1),
    (["x*x - y", "y*y - x", "x*y - 1"], 2, 1),
    (["x*x + x + 1"], 2, 2),
    (["x*y - z", "y*z - x", "z*x - y", "x + y + z - 3"], 2, 1),
    (["2*x - 1", "x*y - 2"], 3, 1),
    (["x*x*x - x - 1", "y*y - x"], 5, 2),
]

UNSOLVABLE_SYSTEMS = [
    ["x", "x - 1"],
    ["2"],
    ["x*y - 1", "x"],
    ["x*x", "x*y - 1"],
    ["x*x + y*y - 1", "x*x + y*y"],
    ["x - y", "x - y - 1"],
    ["x*y*z - 1", "x*y"],
    ["x*x - 2*x + 1", "x - 2"],
    ["x + y", "x - y", "x*y + z*z*z - 1", "z"],
    ["x*x*x - y", "y - x*x*x + 1"],
]


@pytest.mark.parametrize("lines, p, k", SOLVABLE_SYSTEMS)
def test_solvable_systems_have_points(lines, p, k):
    system = PolySystem.from_texts(lines)
    assert apps.nullstellensatz_decide(system) is True
    point = apps.find_common_zero(system, p, k)
    assert point is not None
    field = GaloisField(p, k)
    for f in system.generators:
        assert poly.reduce_mod_p(f, p).evaluate(point, field) == 0


@pytest.mark.parametrize("lines", UNSOLVABLE_SYSTEMS)
def test_unsolvable_systems(lines):
    assert apps.nullstellensatz_decide(PolySystem.from_texts(lines)) is False


def test_common_zero_in_an_extension():
    system = PolySystem.from_texts(["x*x + 1"])
    assert apps.find_common_zero(system, 3) is None
    point = apps.find_common_zero(system, 3, 2)
    field = GaloisField(3, 2)
    assert field.add(field.mul(point["x"], point["x"]), 1) == 0


def test_common_zero_search_is_bounded():
    system = PolySystem.from_texts(["x + y + z"])
    with pytest.raises(ResourceError):
        apps.find_common_zero(system, 2, 7)


##############################################################################
# Strong minimality
##############################################################################


@pytest.mark.parametrize("text, expected", [
    ("x*x = 1", "Finite(2)"),
    ("x*x = 1 & x != 1", "Finite(1)"),
    ("x != 0 & x != 1", "Cofinite(2)"),
    ("x = 0 | x != 1", "Cofinite(1)"),
    ("exists y. x = y*y", "Cofinite(0)"),
    ("x != x", "Finite(0)"),
    ("exists y. (x*y = 1 & y*y = 4)", "Finite(2)"),
])
def test_minimality(text, expected):
    assert apps.strong_minimality_analyze(parse(text)).to_text() == expected


def test_minimality_depends_on_the_characteristic():
    f = parse("x*x + 1 = 0 & x + 1 != 0")
    assert apps.strong_minimality_analyze(f, 0).to_text() == "Finite(2)"
    assert apps.strong_minimality_analyze(f, 2).to_text() == "Finite(0)"
    g = parse("(1 + 1) * x = 1")
    assert apps.strong_minimality_analyze(g, 0).to_text() == "Finite(1)"
    assert apps.strong_minimality_analyze(g, 2).to_text() == "Finite(0)"


def test_minimality_accepts_forms():
    form = qe.eliminate_all(parse("x != 0"))
    report = apps.strong_minimality_analyze(form)
    assert report == MinimalityReport(MinimalityKind.COFINITE, 1)
    assert not report.is_finite()


def random_form(rng: random.Random) -> ConstructibleForm:
    conjunctions = []
    for _ in range(rng.randint(1, 2)):
        atoms = []
        for _ in range(rng.randint(1, 2)):
            terms = {(("x", e),): rng.randint(-3, 3) for e in range(rng.randint(1, 3))}
            atom = qe.make_atom(MultiPoly(QQ, terms), rng.choice([Sign.ZERO, Sign.NONZERO]))
            if not isinstance(atom, bool):
                atoms.append(atom)
        conjunctions.append(atoms)
    return ConstructibleForm.from_conjunctions(conjunctions)


def test_minimality_bounds_hold_pointwise():
    rng = random.Random(6765)
    for _ in range(100):
        form = random_form(rng)
        for p in (101, 127):
            field = PrimeField(p)
            report = apps.strong_minimality_analyze(form, p)
            inside = sum(1 for value in field.elements() if form.holds({"x": value}, field))
            if report.is_finite():
                assert inside <= report.bound
            else:
                assert p - inside <= report.bound


def test_minimality_needs_one_variable():
    with pytest.raises(apps.ApplicationError):
        apps.strong_minimality_analyze(parse("x = y"))


##############################################################################
# Irreducibility
##############################################################################


def test_irreducibility_sentence_shape():
    sentence = apps.irreducibility_sentence(poly_of("x*x + y*y - 1"))
    assert syntax.is_sentence(sentence)
    assert isinstance(sentence, syntax.Forall)
    assert sentence.var.startswith("a")


def test_irreducibility_sentence_avoids_variable_names():
    sentence = apps.irreducibility_sentence(poly_of("a0*a0 + b0"))
    assert syntax.is_sentence(sentence)
    assert sentence.var.startswith("aa")


@pytest.mark.parametrize("text, error", [
    ("x + y", apps.ApplicationError),
    ("x^4 + y", ResourceError),
    ("x*y*z + 1", ResourceError),
])
def test_irreducibility_limits(text, error):
    with pytest.raises(error):
        apps.irreducibility_sentence(poly_of(text))


def test_irreducibility_needs_integer_coefficients():
    with pytest.raises(apps.ApplicationError):
        apps.irreducibility_sentence(x * x * Fraction(1, 2) + y)


def test_univariate_quadratics_split():
    report = apps.noether_ostrowski_check(poly_of("x*x - 2"), [2, 3])
    assert not report.irreducible_char0
    assert report.verdicts == ((2, False), (3, False))
    assert report.consistent


def test_circle_is_irreducible_away_from_two():
    report = apps.noether_ostrowski_check(poly_of("x*x + y*y - 1"), [2, 3, 5, 7, 11, 13])
    assert report.irreducible_char0
    assert report.exceptions == (2,)
    assert report.spectrum.to_text() == "char0: true, primes: all except {2}"
    assert report.consistent
    assert report.to_dict()["primes"]["3"] is True


def test_sum_of_squares_is_reducible_everywhere():
    report = apps.noether_ostrowski_check(poly_of("x*x + y*y"), [2, 3, 5])
    assert not report.irreducible_char0
    assert report.exceptions == ()
    assert all(not verdict for _, verdict in report.verdicts)


def test_irreducibility_rejects_characteristic_zero_in_the_list():
    with pytest.raises(apps.ApplicationError):
        apps.noether_ostrowski_check(poly_of("x*x + y"), [0, 2])


def test_degree_drop_is_decided_at_the_lower_degree():
    report = apps.noether_ostrowski_check(poly_of("2*x*x + x + y"), [2, 3])
    assert report.irreducible_char0
    assert report.verdicts == ((2, True), (3, True))
    assert report.degree_drops == ((2, 1),)
    assert report.exceptions == ()
    assert report.to_dict()["degree_drops"] == {"2": 1}


def test_degree_drop_to_a_constant_is_not_irreducible():
    report = apps.noether_ostrowski_check(poly_of("3*x*x + 3*y"), [3, 5])
    assert report.degree_drops == ((3, -1),)
    assert dict(report.verdicts)[3] is False
    assert report.exceptions == ()


def test_find_factorization():
    circle = poly_of("x*x + y*y - 1")
    first, second = apps.find_factorization(circle, 2)
    assert first * second == ExtensionPoly.from_poly(circle, GaloisField(2))
    assert apps.find_factorization(circle, 3) is None
    squares = poly_of("x*x + y*y")
    assert apps.find_factorization(squares, 3) is None
    first, second = apps.find_factorization(squares, 3, 2)
    assert first * second == ExtensionPoly.from_poly(squares, GaloisField(3, 2))


##############################################################################
# Characteristic transfer
##############################################################################


def test_lefschetz_existential():
    report = apps.lefschetz_report(parse("exists x. x*x + 1 = 0"), prime_bound=5)
    assert report.decided_char0
    assert [row.prime for row in report.rows] == [2, 3, 5]
    assert [row.witness_degree for row in report.rows] == [1, 2, 1]
    assert all(row.spectrum and row.decided for row in report.rows)


def test_lefschetz_characteristic_sentence():
    report = apps.lefschetz_report(parse("1 + 1 = 0"), prime_bound=7)
    assert report.spectrum.to_text() == "char0: false, primes: only {2}"
    assert [row.decided for row in report.rows] == [True, False, False, False]
    assert report.rows[0].witness_degree == 1
    assert report.to_dict()["primes"][1]["oracle"] is False


def test_lefschetz_universal_sentence_skips_the_oracle():
    report = apps.lefschetz_report(parse("forall x. x*x != 1 + 1"), prime_bound=3)
    assert not report.decided_char0
    assert all(not row.oracle_ran for row in report.rows)
    assert report.to_dict()["primes"][0]["oracle"] is None


def test_lefschetz_max_extension():
    report = apps.lefschetz_report(parse("exists x. x*x + 1 = 0"), prime_bound=3, max_extension=1)
    assert report.rows[1].witness_degree is None


def test_lefschetz_reports_disagreement(mocker):
    mocker.patch.object(apps.qe, "decide", return_value=False)
    with pytest.raises(InternalError):
        apps.lefschetz_report(parse("0 = 0"), prime_bound=3)


def test_lefschetz_needs_a_sentence():
    with pytest.raises(NotASentenceError):
        apps.lefschetz_report(parse("x = 0"))
