"""
Exact trigonometric coefficients. Elements of Q[c1, s1, c2, s2] modulo the
relations `s_k^2 = 1 - c_k^2` are kept in the normal form where every
`s_k` exponent is at most 1.
"""
from math import comb

from homnambu.errors import ArityError, InvalidParameterError
from homnambu.scalars._gaussian import is_scalar
from homnambu.scalars._poly import MultiPoly

TRIG_NAMES = ("c1", "s1", "c2", "s2")
_COS_SLOTS = (0, 2)
_SIN_SLOTS = (1, 3)


def _reduce_terms(terms):
    reduced = {}
    for exponents, coefficient in terms.items():
        # s^(2k+r) = s^r * (1 - c^2)^k, expanded binomially per angle
        partial = {tuple(exponents): coefficient}
        for c_slot, s_slot in zip(_COS_SLOTS, _SIN_SLOTS):
            expanded = {}
            for e, value in partial.items():
                k, r = divmod(e[s_slot], 2)
                for j in range(k + 1):
                    new = list(e)
                    new[s_slot] = r
                    new[c_slot] = e[c_slot] + 2 * j
                    new = tuple(new)
                    expanded[new] = expanded.get(new, 0) + \
                        value * comb(k, j) * (-1) ** j
            partial = expanded
        for e, value in partial.items():
            reduced[e] = reduced.get(e, 0) + value
    return reduced


def trig_reduce(p):
    """
    Normal form of a polynomial in (c1, s1, c2, s2) under `s_k^2 -> 1 - c_k^2`.

    Args:
        p (MultiPoly): Polynomial of arity 4 without negative exponents.

    Returns:
        TrigRingElem: The unique normal-form representative.

    Raises:
        ArityError: When `p` does not have arity 4.
    """
    if p.arity != 4:
        raise ArityError(f"Trigonometric polynomials have 4 variables, got "
                         f"{p.arity}")
    if any(flag for flag in p.laurent):
        raise InvalidParameterError("Trigonometric variables are not "
                                    "invertible")
    return TrigRingElem._wrap(MultiPoly(_reduce_terms(p.terms), 4))


class TrigRingElem:
    """
    An element of the trigonometric quotient ring for two angles. Multiply
    and add like any coefficient; results stay in normal form.
    """
    __slots__ = ("poly",)

    def __init__(self, poly):
        """
        Args:
            poly (MultiPoly|scalar): Any representative; it is reduced.
        """
        if is_scalar(poly):
            poly = MultiPoly.constant(poly, 4)
        self.poly = trig_reduce(poly).poly

    @classmethod
    def _wrap(cls, poly):
        element = cls.__new__(cls)
        element.poly = poly
        return element

    @classmethod
    def constant(cls, value):
        return cls._wrap(MultiPoly.constant(value, 4))

    @classmethod
    def cos(cls, angle):
        """
        cos of angle 1 or 2.
        """
        return cls._wrap(MultiPoly.variable(_COS_SLOTS[angle - 1], 4))

    @classmethod
    def sin(cls, angle):
        return cls._wrap(MultiPoly.variable(_SIN_SLOTS[angle - 1], 4))

    def _coerce(self, other):
        if isinstance(other, TrigRingElem):
            return other.poly
        if is_scalar(other):
            return MultiPoly.constant(other, 4)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TrigRingElem._wrap(self.poly + other)

    __radd__ = __add__

    def __neg__(self):
        return TrigRingElem._wrap(-self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TrigRingElem._wrap(self.poly - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TrigRingElem._wrap(other - self.poly)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return trig_reduce(self.poly * other)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = TrigRingElem.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.poly == other

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return self.poly.format(TRIG_NAMES)

    def __repr__(self):
        return f"TrigRingElem('{self}')"
