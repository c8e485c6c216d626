#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Exact sparse multivariate polynomials over the rationals and prime fields.

A :class:`MultiPoly` wraps an element of a :mod:`sympy.polys.rings` ring in
graded lexicographic order whose generators are exactly the variables that
occur, sorted by name. Equal polynomials therefore live in equal rings, and
the sympy ring machinery does the arithmetic, pseudo-division, exact
division and gcds. Coefficients are exposed in native form
(:class:`fractions.Fraction` over the rationals, residues ``0 .. p - 1``
over GF(p)) through :attr:`MultiPoly.terms`.

Resultants are determinants of Sylvester matrices over the polynomial ring
domain, which sympy computes with fraction-free Bareiss elimination.

Extension fields GF(p^k) only serve the brute-force oracles, so they get a
small hand-rolled element encoding (:class:`GaloisField`) and polynomial
type (:class:`ExtensionPoly`).
"""

##############################################################################
# Imports
##############################################################################

import functools
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import sympy
from sympy.polys import galoistools
from sympy.polys.domains import GF, QQ as SYMPY_QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from .errors import InputError, InternalError, ResourceError

##############################################################################
# Constants
##############################################################################

logger = logging.getLogger(__name__)

#: Degree reported for the zero polynomial.
DEGREE_OF_ZERO = -math.inf

#: Largest field the brute-force oracle will enumerate.
EXTENSION_FIELD_LIMIT = 10 ** 6

Monomial = Tuple[Tuple[str, int], ...]


class PolynomialError(InputError):
    """Field mismatches, invalid divisors and bad reductions."""


##############################################################################
# Irreducible moduli
##############################################################################


@functools.lru_cache(maxsize=None)
def first_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """Find the lexicographically first monic irreducible polynomial of degree k over GF(p).

    Candidates run through (c_{k-1}, ..., c_0) in lexicographic order.

    Returns:
        the coefficients, lowest degree first
    """
    for tail in itertools.product(range(p), repeat=k):
        dense = [1] + list(tail)
        if galoistools.gf_irreducible_p(dense, p, ZZ):
            return tuple(reversed(dense))
    raise InternalError("no irreducible polynomial of degree {} over GF({})".format(k, p))


##############################################################################
# Coefficient Fields
##############################################################################


class CoefField(object):
    """Arithmetic on single coefficients in their native form.

    Polynomial arithmetic happens in sympy rings over :attr:`domain`; these
    scalar methods serve evaluation, the oracles and atom folding.
    """

    characteristic = 0
    domain = None

    def zero(self) -> Any:
        return 0

    def one(self) -> Any:
        return 1

    def coerce(self, value: Union[int, Fraction]) -> Any:
        raise NotImplementedError()

    def to_domain(self, value: Any) -> Any:
        """Native coefficient to an element of :attr:`domain`."""
        raise PolynomialError("polynomials over {} are not supported".format(self))

    def from_domain(self, value: Any) -> Any:
        raise NotImplementedError()

    def add(self, a: Any, b: Any) -> Any:
        raise NotImplementedError()

    def sub(self, a: Any, b: Any) -> Any:
        raise NotImplementedError()

    def mul(self, a: Any, b: Any) -> Any:
        raise NotImplementedError()

    def neg(self, a: Any) -> Any:
        raise NotImplementedError()

    def inverse(self, a: Any) -> Any:
        raise NotImplementedError()

    def is_zero(self, a: Any) -> bool:
        return a == 0

    def is_one(self, a: Any) -> bool:
        return a == 1

    def power(self, a: Any, exponent: int) -> Any:
        result = self.one()
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def is_unit(self, a: Any) -> bool:
        """True if the element is invertible in every field of this characteristic's family.

        Over the rationals only ±1 qualify: an integer such as 2 vanishes in
        characteristic 2, and elimination keeps such constants symbolic.
        """
        return not self.is_zero(a)

    def format(self, a: Any) -> Tuple[bool, str]:
        """Return (is_negative, magnitude) for printing."""
        return False, str(a)


@dataclass(frozen=True)
class Rationals(CoefField):
    """The field of rational numbers."""

    characteristic = 0
    domain = SYMPY_QQ

    def coerce(self, value):
        return Fraction(value)

    def to_domain(self, value):
        value = Fraction(value)
        return SYMPY_QQ(value.numerator, value.denominator)

    def from_domain(self, value):
        return Fraction(int(value.numerator), int(value.denominator))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inverse(self, a):
        if a == 0:
            raise PolynomialError("division by zero")
        return 1 / Fraction(a)

    def is_unit(self, a):
        return a in (1, -1)

    def format(self, a):
        return a < 0, str(abs(a))

    def __str__(self) -> str:
        return "QQ"


#: The shared instance of the rationals.
QQ = Rationals()


@functools.lru_cache(maxsize=None)
def _prime_domain(p: int):
    return GF(p)


@dataclass(frozen=True)
class PrimeField(CoefField):
    """The field of residues modulo a prime."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not sympy.isprime(self.p):
            raise PolynomialError("{} is not a prime".format(self.p))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def domain(self):
        return _prime_domain(self.p)

    @property
    def size(self) -> int:
        return self.p

    def coerce(self, value):
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise PolynomialError(
                    "denominator of {} is divisible by {}".format(value, self.p)
                )
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def to_domain(self, value):
        return self.domain(self.coerce(value))

    def from_domain(self, value):
        return self.domain.to_int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inverse(self, a):
        if a % self.p == 0:
            raise PolynomialError("division by zero")
        return pow(a, -1, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def __str__(self) -> str:
        return "GF({})".format(self.p)


@dataclass(frozen=True)
class GaloisField(CoefField):
    """The field with p^k elements, realised as GF(p)[t]/(m(t)).

    Elements are encoded as integers: c_0 + c_1 t + ... is stored as
    c_0 + c_1 p + ..., so the prime subfield is exactly 0 .. p - 1.
    ``coerce`` maps integers and rationals into the prime subfield, never
    onto encodings.
    """

    p: int
    k: int = 1
    modulus: Tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not sympy.isprime(self.p):
            raise PolynomialError("{} is not a prime".format(self.p))
        if self.k < 1:
            raise PolynomialError("extension degree must be positive")
        if self.p ** self.k > EXTENSION_FIELD_LIMIT:
            raise ResourceError(
                "GF({}^{}) exceeds the enumeration limit of {}".format(self.p, self.k, EXTENSION_FIELD_LIMIT)
            )
        object.__setattr__(self, "modulus", first_irreducible(self.p, self.k))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def size(self) -> int:
        return self.p ** self.k

    def _decode(self, a: int) -> List[int]:
        """Digits of an encoding, highest power of t first."""
        digits = []
        while a:
            a, digit = divmod(a, self.p)
            digits.append(digit)
        return digits[::-1]

    def _encode(self, digits: Sequence[int]) -> int:
        value = 0
        for digit in digits:
            value = value * self.p + int(digit)
        return value

    def element(self, index: int) -> int:
        if not 0 <= index < self.size:
            raise PolynomialError("{} does not encode an element of {}".format(index, self))
        return index

    def coerce(self, value):
        return PrimeField(self.p).coerce(value)

    def add(self, a, b):
        return self._encode(galoistools.gf_add(self._decode(a), self._decode(b), self.p, ZZ))

    def neg(self, a):
        return self._encode(galoistools.gf_neg(self._decode(a), self.p, ZZ))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a < self.p and b < self.p:
            return a * b % self.p
        product = galoistools.gf_mul(self._decode(a), self._decode(b), self.p, ZZ)
        return self._encode(galoistools.gf_rem(product, list(reversed(self.modulus)), self.p, ZZ))

    def inverse(self, a):
        if a == 0:
            raise PolynomialError("division by zero")
        return self.power(a, self.size - 2)

    def elements(self) -> Iterator[int]:
        return iter(range(self.size))

    def __str__(self) -> str:
        if self.k == 1:
            return "GF({})".format(self.p)
        return "GF({}^{})".format(self.p, self.k)


##############################################################################
# Monomials
##############################################################################


def _normalize_monomial(monomial: Union[Monomial, Mapping[str, int]]) -> Monomial:
    pairs = monomial.items() if isinstance(monomial, Mapping) else monomial
    exponents: Dict[str, int] = {}
    for name, exponent in pairs:
        if exponent < 0:
            raise PolynomialError("negative exponent for {}".format(name))
        if exponent:
            exponents[name] = exponents.get(name, 0) + exponent
    return tuple(sorted(exponents.items()))


def _order_key(monomial: Monomial, variables: Sequence[str]) -> Tuple[int, Tuple[int, ...]]:
    """Graded lexicographic key with the first variable most significant."""
    exponents = dict(monomial)
    return sum(exponents.values()), tuple(exponents.get(name, 0) for name in variables)


@functools.lru_cache(maxsize=4096)
def _ring(names: Tuple[str, ...], domain) -> PolyRing:
    return PolyRing(tuple(sympy.Symbol(name) for name in names), domain, grlex)


def _names(ring: PolyRing) -> Tuple[str, ...]:
    return tuple(symbol.name for symbol in ring.symbols)


##############################################################################
# Polynomials
##############################################################################


class MultiPoly(object):
    """A polynomial with exact coefficients in the rationals or a prime field.

    Instances are immutable values: arithmetic returns new polynomials, and
    equality and hashing follow the canonical term map.
    """

    __slots__ = ("field", "element", "_terms")

    def __init__(self, field: CoefField, terms: Optional[Mapping[Any, Any]] = None):
        """Build a polynomial, coercing coefficients and dropping zeros.

        Args:
            field: coefficient field (:data:`QQ` or a :class:`PrimeField`)
            terms: monomial (pairs or a name -> exponent mapping) to coefficient

        Raises:
            PolynomialError: for fields without a ring backend, or bad coefficients
        """
        domain = field.domain
        if domain is None:
            raise PolynomialError("polynomials over {} are not supported".format(field))
        cleaned: Dict[Monomial, Any] = {}
        for monomial, coefficient in (terms or {}).items():
            key = _normalize_monomial(monomial)
            cleaned[key] = cleaned.get(key, domain.zero) + field.to_domain(coefficient)
        names = tuple(sorted({name for monomial in cleaned for name, _ in monomial}))
        ring = _ring(names, domain)
        element = ring.from_dict({
            tuple(dict(monomial).get(name, 0) for name in names): coefficient
            for monomial, coefficient in cleaned.items()
        })
        self._adopt(field, element)

    def _adopt(self, field: CoefField, element: PolyElement):
        ring = element.ring
        used = [i for i in range(ring.ngens) if any(m[i] for m in element.itermonoms())]
        if len(used) != ring.ngens:
            target = _ring(tuple(ring.symbols[i].name for i in used), ring.domain)
            element = target.from_dict({tuple(m[i] for i in used): c for m, c in element.iterterms()})
        self.field = field
        self.element = element
        self._terms = None

    @classmethod
    def wrap(cls, field: CoefField, element: PolyElement) -> "MultiPoly":
        """Adopt a sympy ring element, shrinking its ring to the variables that occur."""
        poly = cls.__new__(cls)
        poly._adopt(field, element)
        return poly

    @classmethod
    def zero(cls, field: CoefField = QQ) -> "MultiPoly":
        return cls(field)

    @classmethod
    def one(cls, field: CoefField = QQ) -> "MultiPoly":
        return cls(field, {(): 1})

    @classmethod
    def constant(cls, value: Union[int, Fraction], field: CoefField = QQ) -> "MultiPoly":
        return cls(field, {(): value})

    @classmethod
    def variable(cls, name: str, field: CoefField = QQ) -> "MultiPoly":
        return cls(field, {((name, 1),): 1})

    ####################
    # Inspection
    ####################

    @property
    def ring(self) -> PolyRing:
        return self.element.ring

    @property
    def variables(self) -> Tuple[str, ...]:
        return _names(self.ring)

    @property
    def terms(self) -> Dict[Monomial, Any]:
        """Monomial -> native coefficient."""
        if self._terms is None:
            names = self.variables
            self._terms = {
                tuple((name, e) for name, e in zip(names, exponents) if e): self.field.from_domain(c)
                for exponents, c in self.element.iterterms()
            }
        return self._terms

    def is_zero(self) -> bool:
        return not self.element

    def is_constant(self) -> bool:
        return self.ring.ngens == 0

    def constant_value(self) -> Any:
        """The coefficient of the empty monomial."""
        return self.terms.get((), self.field.zero())

    def total_degree(self) -> Union[int, float]:
        if self.is_zero():
            return DEGREE_OF_ZERO
        return max(sum(monomial) for monomial in self.element.itermonoms())

    def _index(self, var: str) -> Optional[int]:
        names = self.variables
        return names.index(var) if var in names else None

    def degree(self, var: str) -> Union[int, float]:
        """Largest exponent of ``var``; :data:`DEGREE_OF_ZERO` for the zero polynomial."""
        if self.is_zero():
            return DEGREE_OF_ZERO
        index = self._index(var)
        return 0 if index is None else self.element.degree(index)

    def coefficients(self, var: str) -> Dict[int, "MultiPoly"]:
        """View as a polynomial in ``var``: exponent -> coefficient free of ``var``."""
        if self.is_zero():
            return {}
        index = self._index(var)
        if index is None:
            return {0: self}
        exponents = sorted({monomial[index] for monomial in self.element.itermonoms()})
        return {e: MultiPoly.wrap(self.field, self.element.coeff_wrt(index, e)) for e in exponents}

    def coefficient(self, var: str, exponent: int) -> "MultiPoly":
        return self.coefficients(var).get(exponent, MultiPoly.zero(self.field))

    def leading_coefficient(self, var: str) -> "MultiPoly":
        if self.is_zero():
            return self
        return self.coefficient(var, self.degree(var))

    def leading_term(self) -> Tuple[Monomial, Any]:
        """Leading monomial and coefficient in graded lexicographic order."""
        exponents = self.element.LM
        monomial = tuple((name, e) for name, e in zip(self.variables, exponents) if e)
        return monomial, self.field.from_domain(self.element.LC)

    def sort_key(self) -> Tuple:
        return tuple(sorted(self.terms.items()))

    ####################
    # Arithmetic
    ####################

    def _lift(self, other: Any) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.field != self.field:
                raise PolynomialError("field mismatch: {} and {}".format(self.field, other.field))
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        f, g = _common(self, other)
        return MultiPoly.wrap(self.field, f + g)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly.wrap(self.field, -self.element)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        f, g = _common(self, other)
        return MultiPoly.wrap(self.field, f - g)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        f, g = _common(self, other)
        return MultiPoly.wrap(self.field, f * g)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise PolynomialError("exponent must be a natural number")
        return MultiPoly.wrap(self.field, self.element ** exponent)

    def scale(self, factor: Any) -> "MultiPoly":
        """Multiply every coefficient by a native field element."""
        return MultiPoly.wrap(self.field, self.element.mul_ground(self.field.to_domain(factor)))

    def monic(self) -> "MultiPoly":
        """Divide by the leading coefficient (graded lexicographic order)."""
        return MultiPoly.wrap(self.field, self.element.monic())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(other, self.field)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.variables == other.variables and self.element == other.element

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __reduce__(self):
        # worker processes rebuild their own rings
        return MultiPoly, (self.field, self.terms)

    ####################
    # Evaluation & Substitution
    ####################

    def evaluate(self, point: Mapping[str, Any], field: Optional[CoefField] = None) -> Any:
        """Evaluate at a point given as variable -> element of ``field``.

        Args:
            point: values for every variable of the polynomial
            field: where the point lives (defaults to the coefficient field);
                coefficients are coerced into it

        Raises:
            PolynomialError: if a variable has no value
        """
        target = field or self.field
        missing = [name for name in self.variables if name not in point]
        if missing:
            raise PolynomialError("no value for variable {}".format(missing[0]))
        total = target.zero()
        for monomial, coefficient in self.terms.items():
            value = coefficient if target == self.field else target.coerce(coefficient)
            for name, exponent in monomial:
                value = target.mul(value, target.power(point[name], exponent))
            total = target.add(total, value)
        return total

    def substitute(self, var: str, replacement: "MultiPoly") -> "MultiPoly":
        """Replace ``var`` by a polynomial."""
        replacement = self._lift(replacement)
        if self._index(var) is None:
            return self
        f, g = _common(self, replacement)
        generator = f.ring.gens[_names(f.ring).index(var)]
        return MultiPoly.wrap(self.field, f.compose(generator, g))

    def map_coefficients(self, field: CoefField) -> "MultiPoly":
        """Coerce every coefficient into another field (e.g. rationals into GF(p))."""
        return MultiPoly(field, self.terms)

    ####################
    # Printing
    ####################

    def to_text(self) -> str:
        """Render in the formula grammar, highest terms first, e.g. ``x^2 - 2*a*x + 1``."""
        return _render(self.terms, self.variables, self.field)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return "MultiPoly({}, {})".format(self.field, self.to_text())


def _render(terms: Mapping[Monomial, Any], variables: Sequence[str], field: CoefField) -> str:
    if not terms:
        return "0"
    ordered = sorted(terms, key=lambda m: _order_key(m, variables), reverse=True)
    pieces = []
    for index, monomial in enumerate(ordered):
        negative, magnitude = field.format(terms[monomial])
        factors = [name if e == 1 else "{}^{}".format(name, e) for name, e in monomial]
        if magnitude != "1" or not factors:
            factors.insert(0, magnitude)
        body = "*".join(factors)
        if index == 0:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


def _common(f: MultiPoly, g: MultiPoly) -> Tuple[PolyElement, PolyElement]:
    """Both elements moved into the ring over the union of their variables."""
    if f.ring == g.ring:
        return f.element, g.element
    names = tuple(sorted(set(f.variables) | set(g.variables)))
    ring = _ring(names, f.ring.domain)
    return f.element.set_ring(ring), g.element.set_ring(ring)


##############################################################################
# Extension field polynomials
##############################################################################


class ExtensionPoly(object):
    """A polynomial over GF(p^k) in the integer encoding of :class:`GaloisField`.

    Only the factor search needs these, so they carry just multiplication,
    subtraction and exact division.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: GaloisField, terms: Optional[Mapping[Any, int]] = None):
        self.field = field
        cleaned: Dict[Monomial, int] = {}
        for monomial, coefficient in (terms or {}).items():
            key = _normalize_monomial(monomial)
            cleaned[key] = field.add(cleaned.get(key, 0), coefficient)
        self.terms = {m: c for m, c in cleaned.items() if c}

    @classmethod
    def from_poly(cls, f: MultiPoly, field: GaloisField) -> "ExtensionPoly":
        """Reduce a rational or GF(p) polynomial into GF(p^k)."""
        return cls(field, {m: field.coerce(c) for m, c in f.terms.items()})

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(sorted({name for monomial in self.terms for name, _ in monomial}))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> Union[int, float]:
        if not self.terms:
            return DEGREE_OF_ZERO
        return max(sum(e for _, e in monomial) for monomial in self.terms)

    def _leading(self, variables: Sequence[str]) -> Monomial:
        return max(self.terms, key=lambda m: _order_key(m, variables))

    def __sub__(self, other: "ExtensionPoly") -> "ExtensionPoly":
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            terms[monomial] = self.field.sub(terms.get(monomial, 0), coefficient)
        return ExtensionPoly(self.field, terms)

    def __mul__(self, other: "ExtensionPoly") -> "ExtensionPoly":
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = _normalize_monomial(m1 + m2)
                terms[monomial] = self.field.add(terms.get(monomial, 0), self.field.mul(c1, c2))
        return ExtensionPoly(self.field, terms)

    def divide_exact(self, divisor: "ExtensionPoly") -> Optional["ExtensionPoly"]:
        """Return self / divisor when the division is exact, else None."""
        if divisor.is_zero():
            raise PolynomialError("division by the zero polynomial")
        variables = tuple(sorted(set(self.variables) | set(divisor.variables)))
        lead = divisor._leading(variables)
        lead_inverse = self.field.inverse(divisor.terms[lead])
        quotient: Dict[Monomial, int] = {}
        remainder = self
        while not remainder.is_zero():
            top = remainder._leading(variables)
            shift = dict(top)
            for name, exponent in lead:
                shift[name] = shift.get(name, 0) - exponent
            if any(e < 0 for e in shift.values()):
                return None
            step = ExtensionPoly(self.field, {tuple(shift.items()): self.field.mul(remainder.terms[top], lead_inverse)})
            quotient.update(step.terms)
            remainder = remainder - step * divisor
        return ExtensionPoly(self.field, quotient)

    def __eq__(self, other):
        if not isinstance(other, ExtensionPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def to_text(self) -> str:
        return _render(self.terms, self.variables, self.field)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return "ExtensionPoly({}, {})".format(self.field, self.to_text())


##############################################################################
# Operations
##############################################################################


def _check_same_field(f: MultiPoly, g: MultiPoly):
    if f.field != g.field:
        raise PolynomialError("field mismatch: {} and {}".format(f.field, g.field))


def arith(op: str, f: MultiPoly, g: Union[MultiPoly, int, None] = None) -> MultiPoly:
    """Ring operation by name: add, sub, mul, neg or pow (``g`` is then the exponent).

    Raises:
        PolynomialError: on a field mismatch or an unknown operation
    """
    if op == "neg":
        return -f
    if op == "pow":
        return f ** g
    if isinstance(g, MultiPoly):
        _check_same_field(f, g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise PolynomialError("unknown operation '{}'".format(op))


def degree(f: MultiPoly, var: str) -> Union[int, float]:
    return f.degree(var)


def _check_divisor(g: MultiPoly, var: str) -> int:
    dg = g.degree(var)
    if g.is_zero() or dg < 1:
        raise PolynomialError("divisor must have positive degree in {}".format(var))
    return int(dg)


def pseudo_remainder(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """The remainder r of :func:`pseudo_divide`."""
    _check_same_field(f, g)
    dg = _check_divisor(g, var)
    if f.is_zero() or f.degree(var) < dg:
        return f
    F, G = _common(f, g)
    return MultiPoly.wrap(f.field, F.prem(G, _names(F.ring).index(var)))


def pseudo_divide(f: MultiPoly, g: MultiPoly, var: str) -> Tuple[MultiPoly, MultiPoly, int]:
    """Pseudo-divide f by g with respect to ``var``.

    Returns (q, r, e) with ``lc(g)^e * f = q * g + r`` and
    ``degree(r, var) < degree(g, var)``. The multiplier is
    ``lc(g)^(deg f - deg g + 1)`` except that monic divisors, and dividends
    of lower degree, report e = 0.

    Raises:
        PolynomialError: if g is zero or constant in ``var``
    """
    _check_same_field(f, g)
    dg = _check_divisor(g, var)
    zero = MultiPoly.zero(f.field)
    if f.is_zero() or f.degree(var) < dg:
        return zero, f, 0
    lead = g.leading_coefficient(var)
    exponent = 0 if lead == 1 else int(f.degree(var)) - dg + 1
    remainder = pseudo_remainder(f, g, var)
    quotient = divide_exact(lead ** exponent * f - remainder, g)
    if quotient is None:
        raise InternalError("pseudo-quotient of {} by {} is not exact".format(f, g))
    return quotient, remainder, exponent


def divide_exact(f: MultiPoly, g: MultiPoly) -> Optional[MultiPoly]:
    """Return f / g when g divides f exactly, else None."""
    _check_same_field(f, g)
    if g.is_zero():
        raise PolynomialError("division by the zero polynomial")
    F, G = _common(f, g)
    try:
        return MultiPoly.wrap(f.field, F.exquo(G))
    except ExactQuotientFailed:
        return None


def _sylvester_rows(F: PolyElement, G: PolyElement, index: int) -> List[List[PolyElement]]:
    m, n = max(F.degree(index), 0), max(G.degree(index), 0)
    zero = F.ring.zero
    rows = []
    for element, degree, count in ((F, m, n), (G, n, m)):
        coefficients = [element.coeff_wrt(index, e) for e in range(degree + 1)]
        for shift in range(count):
            row = [zero] * (m + n)
            row[shift:shift + degree + 1] = coefficients
            rows.append(row)
    return rows


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> List[List[MultiPoly]]:
    """Sylvester matrix with f's rows first and columns in ascending powers of ``var``.

    This convention gives Res(x - a, x - b) = b - a.
    """
    _check_same_field(f, g)
    F, G = _common(f, g)
    names = _names(F.ring)
    if var not in names:
        return []
    rows = _sylvester_rows(F, G, names.index(var))
    return [[MultiPoly.wrap(f.field, entry) for entry in row] for row in rows]


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Resultant of f and g with respect to ``var`` (a polynomial free of ``var``).

    Raises:
        PolynomialError: if either polynomial is zero or both are constant in ``var``
    """
    _check_same_field(f, g)
    if f.is_zero() or g.is_zero():
        raise PolynomialError("resultant of the zero polynomial")
    if f.degree(var) < 1 and g.degree(var) < 1:
        raise PolynomialError("both polynomials are constant in {}".format(var))
    F, G = _common(f, g)
    rows = _sylvester_rows(F, G, _names(F.ring).index(var))
    matrix = DomainMatrix(rows, (len(rows), len(rows)), F.ring.to_domain())
    return MultiPoly.wrap(f.field, matrix.det())


def _univariate_variable(*polys: MultiPoly) -> Optional[str]:
    names = set()
    for poly in polys:
        names.update(poly.variables)
    if len(names) > 1:
        raise PolynomialError("expected univariate polynomials, found variables {}".format(sorted(names)))
    return names.pop() if names else None


def gcd_univariate(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic greatest common divisor; gcd(f, 0) = monic(f)."""
    _check_same_field(f, g)
    _univariate_variable(f, g)
    F, G = _common(f, g)
    if F.ring.ngens == 0:
        return MultiPoly.one(f.field) if F or G else MultiPoly.zero(f.field)
    return MultiPoly.wrap(f.field, F.gcd(G).monic())


def reduce_mod_p(f: MultiPoly, p: int) -> MultiPoly:
    """Reduce a rational polynomial's coefficients modulo p.

    Raises:
        PolynomialError: if f is not over the rationals, p is not prime or a
            denominator is divisible by p
    """
    if not isinstance(f.field, Rationals):
        raise PolynomialError("reduction modulo p expects a rational polynomial, got {}".format(f.field))
    return f.map_coefficients(PrimeField(p))


def roots_in_Fq(f: MultiPoly, k: int = 1) -> List[int]:  # noqa: N802
    """All roots of a univariate polynomial over GF(p) inside GF(p^k), by exhaustive evaluation.

    Elements are reported in the integer encoding of :class:`GaloisField`, so
    roots in the prime field are plain residues.

    Raises:
        PolynomialError: if f is zero, not univariate or not over a prime field
        ResourceError: if p^k is beyond :data:`EXTENSION_FIELD_LIMIT`
    """
    if not isinstance(f.field, PrimeField):
        raise PolynomialError("roots_in_Fq expects a polynomial over a prime field")
    if f.is_zero():
        raise PolynomialError("the zero polynomial vanishes everywhere")
    var = _univariate_variable(f)
    extension = GaloisField(f.field.characteristic, k)
    if var is None:
        return []
    dense = f.coefficients(var)
    top = int(f.degree(var))
    coefficients = [dense[e].constant_value() if e in dense else 0 for e in range(top + 1)]
    roots = []
    for element in extension.elements():
        value = 0
        for coefficient in reversed(coefficients):
            value = extension.add(extension.mul(value, element), coefficient)
        if value == 0:
            roots.append(element)
    logger.debug("roots of %s in %s: %s", f, extension, roots)
    return roots
