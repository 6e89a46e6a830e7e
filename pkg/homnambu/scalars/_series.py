"""
Multivariate formal power series truncated by total degree. A `TruncSeries`
of order N is an element of K[[t1, ..., tn]] modulo the ideal of monomials of
total degree N+1.
"""
import logging
from math import factorial
from fractions import Fraction

from homnambu.errors import (ArityError, InvalidParameterError,
                             NonInvertibleError)
from homnambu.scalars._gaussian import is_scalar, reciprocal
from homnambu.scalars._text import ascending_order, format_terms

_log = logging.getLogger(__name__)


def series_names(arity):
    if arity == 1:
        return ("t",)
    return tuple(f"t{j + 1}" for j in range(arity))


class TruncSeries:
    """
    Sparse truncated series. Terms of total degree above `order` are never
    stored, and every arithmetic result is truncated again.
    """
    __slots__ = ("terms", "arity", "order")

    def __init__(self, terms=None, arity=None, order=0):
        """
        Args:
            terms (dict, optional): `{exponents: coefficient}` association.
            arity (int, optional): Number of formal parameters. Inferred from
                the exponent tuples when omitted.
            order (int): Truncation order N, the maximal total degree kept.

        Raises:
            ArityError: When an exponent tuple has the wrong length.
            InvalidParameterError: On a negative order or exponent.
        """
        terms = terms or {}
        if arity is None:
            arity = len(next(iter(terms))) if terms else 1
        if order < 0:
            raise InvalidParameterError(f"Truncation order must be "
                                        f"nonnegative, got {order}")

        clean = {}
        for exponents, coefficient in terms.items():
            exponents = tuple(exponents)
            if len(exponents) != arity:
                raise ArityError(f"Exponent vector {exponents} does not "
                                 f"match arity {arity}")
            if any(e < 0 for e in exponents):
                raise InvalidParameterError(f"Negative exponent in "
                                            f"{exponents}")
            if coefficient and sum(exponents) <= order:
                clean[exponents] = coefficient

        self.terms = clean
        self.arity = arity
        self.order = order

    @classmethod
    def _clean(cls, terms, arity, order):
        series = cls.__new__(cls)
        series.terms = {e: c for e, c in terms.items()
                        if c and sum(e) <= order}
        series.arity = arity
        series.order = order
        return series

    @classmethod
    def constant(cls, value, arity, order):
        return cls({(0,) * arity: value}, arity, order)

    @classmethod
    def variable(cls, index, arity, order):
        exponents = [0] * arity
        exponents[index] = 1
        return cls({tuple(exponents): 1}, arity, order)

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            if other.arity != self.arity:
                raise ArityError(f"Arity mismatch: {self.arity} and "
                                 f"{other.arity} parameters")
            return other
        if is_scalar(other):
            return TruncSeries.constant(other, self.arity, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return TruncSeries._clean(terms, self.arity,
                                  min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._clean({e: -c for e, c in self.terms.items()},
                                  self.arity, self.order)

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
            return TruncSeries._clean(
                {e: c * other for e, c in self.terms.items()},
                self.arity, self.order)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            return self * reciprocal(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return series_mul(self, series_invert(other))

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return series_invert(self) ** -exponent

        result = TruncSeries.constant(1, self.arity, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = series_mul(result, base)
            base = series_mul(base, base)
            exponent >>= 1
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            if self.arity != other.arity:
                return False
            if self.order == other.order:
                return self.terms == other.terms
            order = min(self.order, other.order)
            return self.truncate(order).terms == other.truncate(order).terms
        if is_scalar(other):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.arity: other}
        return NotImplemented

    def __hash__(self):
        return hash(self.constant_term())

    def truncate(self, order):
        """
        Re-truncate to a lower order.

        Raises:
            InvalidParameterError: When `order` exceeds the current order.
        """
        if order > self.order:
            raise InvalidParameterError(f"Cannot raise truncation order "
                                        f"from {self.order} to {order}")
        return TruncSeries._clean(self.terms, self.arity, order)

    def constant_term(self):
        return self.terms.get((0,) * self.arity, 0)

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), 0)

    def __str__(self):
        return format_terms(self.terms, series_names(self.arity),
                            key=ascending_order)

    def __repr__(self):
        return (f"TruncSeries('{self}', arity={self.arity}, "
                f"order={self.order})")


def series_mul(a, b):
    """
    Product of two series, truncated to the smaller of their orders.

    Raises:
        ArityError: When the parameter counts differ.
    """
    if a.arity != b.arity:
        raise ArityError(f"Arity mismatch: {a.arity} and {b.arity} "
                         f"parameters")
    order = min(a.order, b.order)
    left = sorted(a.terms.items(), key=lambda item: sum(item[0]))
    right = sorted(b.terms.items(), key=lambda item: sum(item[0]))

    terms = {}
    for e1, c1 in left:
        d1 = sum(e1)
        if d1 > order:
            break
        for e2, c2 in right:
            if d1 + sum(e2) > order:
                break
            exponents = tuple(x + y for x, y in zip(e1, e2))
            value = terms.get(exponents)
            product = c1 * c2
            terms[exponents] = product if value is None else value + product
    return TruncSeries._clean(terms, a.arity, order)


def series_invert(a):
    """
    Multiplicative inverse through the geometric series: with
    `a = c * (1 - u)` and `u` without constant term,
    `1/a = (1/c) * (1 + u + ... + u^N)`.

    Raises:
        NonInvertibleError: When the constant term of `a` is zero.
    """
    c = a.constant_term()
    if not c:
        raise NonInvertibleError(f"Series '{a}' has no constant term and is "
                                 f"not invertible")
    _log.debug(f"Inverting series of order {a.order} with constant term {c}")
    inverse_c = reciprocal(c)
    u = 1 - a * inverse_c

    result = TruncSeries.constant(1, a.arity, a.order)
    power = TruncSeries.constant(1, a.arity, a.order)
    for _ in range(a.order):
        power = series_mul(power, u)
        if not power:
            break
        result = result + power
    return result * inverse_c


def _check_trig_arguments(index, order, arity):
    if order < 0:
        raise InvalidParameterError(f"Truncation order must be nonnegative, "
                                    f"got {order}")
    if arity is None:
        arity = index + 1
    if not 0 <= index < arity:
        raise ArityError(f"Parameter index {index} outside arity {arity}")
    return arity


def _power_exponents(index, arity, exponent):
    exponents = [0] * arity
    exponents[index] = exponent
    return tuple(exponents)


def series_cos(index, order, arity=None):
    """
    Truncated cosine `sum (-1)^k t^(2k) / (2k)!` in the parameter `index`.

    Args:
        index (int): 0-based parameter index.
        order (int): Truncation order N.
        arity (int, optional): Number of parameters. Defaults to `index + 1`.

    Returns:
        TruncSeries: cos(t_index) modulo degree N+1.
    """
    arity = _check_trig_arguments(index, order, arity)
    terms = {_power_exponents(index, arity, 2 * k):
             Fraction((-1) ** k, factorial(2 * k))
             for k in range(order // 2 + 1)}
    return TruncSeries(terms, arity, order)


def series_sin(index, order, arity=None):
    """
    Truncated sine `sum (-1)^k t^(2k+1) / (2k+1)!` in the parameter `index`.
    Arguments as for `series_cos`.
    """
    arity = _check_trig_arguments(index, order, arity)
    terms = {_power_exponents(index, arity, 2 * k + 1):
             Fraction((-1) ** k, factorial(2 * k + 1))
             for k in range((order - 1) // 2 + 1) if 2 * k + 1 <= order}
    return TruncSeries(terms, arity, order)
