"""
Sparse multivariate polynomials with exact coefficients. Terms are stored as
`{exponents: coefficient}` without zero coefficients; variables flagged in
`laurent` may carry negative exponents.
"""
import logging
import re
from fractions import Fraction

from homnambu.errors import (ArityError, FormatError, InvalidParameterError,
                             NonInvertibleError)
from homnambu.scalars._gaussian import is_scalar, parse_scalar, reciprocal
from homnambu.scalars._text import format_terms

_log = logging.getLogger(__name__)

# a signed term; a sign right after "^" belongs to the exponent
_TERM = re.compile(r"([+-]?)((?:[^+\-^]|\^[+-]?)+)")


def default_names(arity, prefix="x"):
    return tuple(f"{prefix}{j + 1}" for j in range(arity))


class MultiPoly:
    """
    A polynomial in `arity` variables. Instances are immutable by convention:
    every operation returns a new polynomial.
    """
    __slots__ = ("terms", "arity", "laurent")

    def __init__(self, terms=None, arity=None, laurent=None):
        """
        Args:
            terms (dict, optional): `{exponents: coefficient}` association.
                Zero coefficients are dropped. Defaults to the zero
                polynomial.
            arity (int, optional): Number of variables. Inferred from the
                first exponent tuple when omitted.
            laurent (tuple, optional): One flag per variable allowing
                negative exponents. Defaults to no Laurent variables.

        Raises:
            ArityError: When an exponent tuple has the wrong length.
            InvalidParameterError: When a negative exponent sits on a
                variable that is not flagged invertible.
        """
        terms = terms or {}
        if arity is None:
            arity = len(next(iter(terms))) if terms else 0
        if laurent is None:
            laurent = (False,) * arity
        laurent = tuple(bool(flag) for flag in laurent)
        if len(laurent) != arity:
            raise ArityError(f"Got {len(laurent)} Laurent flags for "
                             f"{arity} variables")

        clean = {}
        for exponents, coefficient in terms.items():
            exponents = tuple(exponents)
            if len(exponents) != arity:
                raise ArityError(f"Exponent vector {exponents} does not "
                                 f"match arity {arity}")
            for exponent, flag in zip(exponents, laurent):
                if exponent < 0 and not flag:
                    raise InvalidParameterError(
                        f"Negative exponent in {exponents} on a variable "
                        f"that is not invertible")
            if coefficient:
                clean[exponents] = coefficient

        self.terms = clean
        self.arity = arity
        self.laurent = laurent

    @classmethod
    def _clean(cls, terms, arity, laurent):
        poly = cls.__new__(cls)
        poly.terms = {e: c for e, c in terms.items() if c}
        poly.arity = arity
        poly.laurent = laurent
        return poly

    @classmethod
    def zero(cls, arity, laurent=None):
        return cls({}, arity, laurent)

    @classmethod
    def constant(cls, value, arity, laurent=None):
        return cls({(0,) * arity: value}, arity, laurent)

    @classmethod
    def variable(cls, index, arity, laurent=None):
        exponents = [0] * arity
        exponents[index] = 1
        return cls({tuple(exponents): 1}, arity, laurent)

    @classmethod
    def monomial(cls, exponents, coefficient=1, laurent=None):
        return cls({tuple(exponents): coefficient}, len(exponents), laurent)

    @classmethod
    def parse(cls, text, names, laurent=None):
        """
        Parse a sum of products such as "3/2*x2^2*x3 - k4 + 2".

        Args:
            text (str): Polynomial text. Coefficients are rationals or
                Gaussian rationals without inner signs.
            names ([str]): Variable names in slot order.
            laurent (tuple, optional): Laurent flags per variable.
                Signed exponents such as "q^-1" need the flag.
        Returns:
            MultiPoly: Parsed polynomial of arity `len(names)`.

        Raises:
            FormatError: When a factor is neither a known name nor a scalar.
        """
        arity = len(names)
        index = {name: j for j, name in enumerate(names)}
        compact = "".join(str(text).split())
        if compact in ("", "0"):
            return cls.zero(arity, laurent)

        terms = {}
        for sign, body in _TERM.findall(compact):
            coefficient = Fraction(-1 if sign == "-" else 1)
            exponents = [0] * arity
            for factor in body.split("*"):
                name, _, power = factor.partition("^")
                if name in index:
                    try:
                        exponents[index[name]] += int(power) if power else 1
                    except ValueError as e:
                        raise FormatError(f"Bad exponent in '{factor}' of "
                                          f"'{text}'") from e
                else:
                    coefficient = coefficient * parse_scalar(factor)
            key = tuple(exponents)
            terms[key] = terms.get(key, 0) + coefficient

        return cls(terms, arity, laurent)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ArityError(f"Arity mismatch: {self.arity} and "
                                 f"{other.arity}")
            return other
        if is_scalar(other):
            return MultiPoly.constant(other, self.arity, self.laurent)
        return None

    def _laurent_union(self, other):
        if self.laurent == other.laurent:
            return self.laurent
        return tuple(a or b for a, b in zip(self.laurent, other.laurent))

    def degree(self):
        """
        Maximal total degree, -1 for the zero polynomial.
        """
        return max((sum(e) for e in self.terms), default=-1)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return MultiPoly._clean(terms, self.arity, self._laurent_union(other))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._clean({e: -c for e, c in self.terms.items()},
                                self.arity, self.laurent)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            if not other:
                return MultiPoly.zero(self.arity, self.laurent)
            return MultiPoly._clean(
                {e: c * other for e, c in self.terms.items()},
                self.arity, self.laurent)

        other = self._coerce(other)
        if other is None:
            return NotImplemented

        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                value = terms.get(exponents)
                product = c1 * c2
                terms[exponents] = product if value is None \
                    else value + product
        return MultiPoly._clean(terms, self.arity, self._laurent_union(other))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self._inverse_monomial() ** -exponent

        result = MultiPoly.constant(1, self.arity, self.laurent)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _inverse_monomial(self):
        if len(self.terms) != 1:
            raise NonInvertibleError(f"Polynomial '{self}' is not a unit")
        exponents, coefficient = next(iter(self.terms.items()))
        for exponent, flag in zip(exponents, self.laurent):
            if exponent and not flag:
                raise NonInvertibleError(f"Polynomial '{self}' is not a "
                                         f"unit: its variables are not "
                                         f"invertible")
        return MultiPoly._clean(
            {tuple(-e for e in exponents): reciprocal(coefficient)},
            self.arity, self.laurent)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        if is_scalar(other):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.arity: other}
        return NotImplemented

    def __hash__(self):
        if not self.terms:
            return hash(0)
        if len(self.terms) == 1 and (0,) * self.arity in self.terms:
            return hash(self.terms[(0,) * self.arity])
        return hash(frozenset(self.terms.items()))

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.arity, 0)

    def partial(self, index):
        return poly_partial(self, index)

    def substitute(self, images, cache=None, reduce=None):
        return poly_substitute(self, images, cache=cache, reduce=reduce)

    def truncate(self, start, order):
        """
        Drop terms whose total degree in the variables `start, start+1, ...`
        exceeds `order`.
        """
        return MultiPoly._clean(
            {e: c for e, c in self.terms.items() if sum(e[start:]) <= order},
            self.arity, self.laurent)

    def split(self, head):
        """
        Group terms by their first `head` exponents.

        Returns:
            dict: `{head exponents: MultiPoly in the remaining variables}`.
        """
        groups = {}
        for exponents, coefficient in self.terms.items():
            groups.setdefault(exponents[:head], {})[exponents[head:]] = \
                coefficient
        laurent = self.laurent[head:]
        return {key: MultiPoly(terms, self.arity - head, laurent)
                for key, terms in groups.items()}

    def format(self, names=None):
        if names is None:
            names = default_names(self.arity)
        return format_terms(self.terms, names)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultiPoly('{self}', arity={self.arity})"


def poly_arith(p, q, op):
    """
    Exact sparse arithmetic on two polynomials of equal arity.

    Args:
        p (MultiPoly): Left operand.
        q (MultiPoly): Right operand.
        op (str): One of "add", "sub" or "mul".

    Returns:
        MultiPoly: Result in canonical form.

    Raises:
        ArityError: When the arities differ.
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"Unknown polynomial operation '{op}'")


def poly_partial(p, index):
    """
    Formal partial derivative of `p` in the variable `index` (0-based).

    Raises:
        ArityError: When `index` is outside the arity of `p`.
    """
    if not 0 <= index < p.arity:
        raise ArityError(f"Variable index {index} outside arity {p.arity}")

    terms = {}
    for exponents, coefficient in p.terms.items():
        exponent = exponents[index]
        if exponent:
            shifted = exponents[:index] + (exponent - 1,) + \
                exponents[index + 1:]
            terms[shifted] = coefficient * exponent
    return MultiPoly._clean(terms, p.arity, p.laurent)


def poly_substitute(p, images, cache=None, reduce=None):
    """
    Compose `p` with one image polynomial per variable, `p(images)`. The map
    `p -> p(images)` is a ring morphism.

    Args:
        p (MultiPoly): Polynomial without negative exponents.
        images ([MultiPoly]): One polynomial per variable of `p`, all of the
            same arity.
        cache (dict, optional): Caller-owned cache of image powers, keyed by
            `(variable, exponent)`. Only valid for one fixed `images`.
        reduce (function, optional): Applied to every intermediate product,
            e.g. a truncation. Must be a ring morphism for the result to be
            meaningful.

    Returns:
        MultiPoly: The composite polynomial.

    Raises:
        ArityError: When the number or arity of images does not fit.
        InvalidParameterError: When `p` carries negative exponents.
    """
    if len(images) != p.arity:
        raise ArityError(f"Got {len(images)} images for a polynomial in "
                         f"{p.arity} variables")
    arity = next((image.arity for image in images
                  if isinstance(image, MultiPoly)), None)
    if arity is None:
        raise ArityError("At least one image must be a polynomial")
    images = [image if isinstance(image, MultiPoly)
              else MultiPoly.constant(image, arity) for image in images]
    if any(image.arity != arity for image in images):
        raise ArityError("Image polynomials must share one arity")
    if cache is None:
        cache = {}
    if reduce is None:
        def reduce(x):
            return x

    def power(index, exponent):
        key = (index, exponent)
        if key not in cache:
            if exponent == 1:
                cache[key] = reduce(images[index])
            else:
                cache[key] = reduce(power(index, exponent - 1) *
                                    images[index])
        return cache[key]

    laurent = images[0].laurent
    terms = {}
    for exponents, coefficient in p.terms.items():
        if any(e < 0 for e in exponents):
            raise InvalidParameterError("Cannot substitute into negative "
                                        "exponents")
        term = MultiPoly.constant(coefficient, arity, laurent)
        for index, exponent in enumerate(exponents):
            if exponent:
                term = reduce(term * power(index, exponent))
        for e, c in term.terms.items():
            terms[e] = terms.get(e, 0) + c

    return MultiPoly._clean(terms, arity, laurent)


def _univariate_divmod(a, b):
    lead_b_exponent, lead_b = max(b.terms.items())
    remainder = a
    while remainder and remainder.degree() >= b.degree():
        lead_exponent, lead = max(remainder.terms.items())
        factor = MultiPoly.monomial((lead_exponent[0] - lead_b_exponent[0],),
                                    lead * reciprocal(lead_b))
        remainder = remainder - factor * b
    return remainder


def _monic(p):
    if not p:
        return p
    _, lead = max(p.terms.items())
    return p * reciprocal(lead)


def univariate_gcd(p, q):
    """
    Monic greatest common divisor of two polynomials in one variable.

    Raises:
        ArityError: When either polynomial is not univariate.
    """
    if p.arity != 1 or q.arity != 1:
        raise ArityError("univariate_gcd expects polynomials in one variable")
    a, b = _monic(p), _monic(q)
    while b:
        a, b = b, _monic(_univariate_divmod(a, b))
    _log.debug(f"gcd({p}, {q}) = {a}")
    return _monic(a)
