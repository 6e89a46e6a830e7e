"""
Descriptors of the coefficient rings algebra elements may live over. A ring
knows how to lift scalars, how to split an element into
`{exponents: scalar}` terms and how to rebuild it, which is all the
polynomial substitution and component extraction code needs.
"""
from collections import namedtuple

from homnambu.errors import InvalidParameterError
from homnambu.scalars._gaussian import format_scalar, is_scalar
from homnambu.scalars._poly import MultiPoly, default_names
from homnambu.scalars._series import TruncSeries, series_names
from homnambu.scalars._trig import TRIG_NAMES, TrigRingElem

RING_KINDS = ("scalar", "poly", "series", "trig")

_CoefficientRing = namedtuple("CoefficientRing",
                              ["kind", "arity", "order", "laurent", "names"])


class CoefficientRing(_CoefficientRing):
    """
    Immutable ring descriptor.

    Fields:
        kind (str): One of "scalar", "poly", "series" or "trig".
        arity (int): Number of ring variables (0 for scalars, 4 for trig).
        order (int): Truncation order for series, None otherwise.
        laurent (tuple): Laurent flags of polynomial variables.
        names (tuple): Variable names used when rendering elements.
    """
    __slots__ = ()

    @classmethod
    def scalar(cls):
        return cls("scalar", 0, None, (), ())

    @classmethod
    def poly(cls, arity, laurent=None, names=None):
        if laurent is None:
            laurent = (False,) * arity
        if names is None:
            names = default_names(arity, prefix="u")
        return cls("poly", arity, None, tuple(laurent), tuple(names))

    @classmethod
    def series(cls, arity, order):
        if order is None or order < 0:
            raise InvalidParameterError(f"Series rings need a nonnegative "
                                        f"order, got {order}")
        return cls("series", arity, order, (False,) * arity,
                   series_names(arity))

    @classmethod
    def trig(cls):
        return cls("trig", 4, None, (False,) * 4, TRIG_NAMES)

    def lift(self, value):
        """
        Embed a scalar (or an element already in the ring) into the ring.
        """
        if not is_scalar(value):
            return value
        if self.kind == "poly":
            return MultiPoly.constant(value, self.arity, self.laurent)
        if self.kind == "series":
            return TruncSeries.constant(value, self.arity, self.order)
        if self.kind == "trig":
            return TrigRingElem.constant(value)
        return value

    def variable(self, index):
        if self.kind == "poly":
            return MultiPoly.variable(index, self.arity, self.laurent)
        if self.kind == "series":
            return TruncSeries.variable(index, self.arity, self.order)
        if self.kind == "trig":
            return TrigRingElem._wrap(MultiPoly.variable(index, 4))
        raise InvalidParameterError("The scalar ring has no variables")

    def terms(self, value):
        """
        Split a ring element into `{exponents: scalar}`. Scalars of the
        scalar ring use the empty exponent tuple.
        """
        if self.kind == "scalar":
            return {(): value} if value else {}
        value = self.lift(value)
        if self.kind == "trig":
            return dict(value.poly.terms)
        return dict(value.terms)

    def from_terms(self, terms):
        if self.kind == "scalar":
            return terms.get((), 0)
        if self.kind == "poly":
            return MultiPoly(terms, self.arity, self.laurent)
        if self.kind == "series":
            return TruncSeries(terms, self.arity, self.order)
        return TrigRingElem(MultiPoly(terms, 4))

    def truncate(self, value, order):
        if self.kind != "series":
            raise InvalidParameterError(f"Cannot truncate in a {self.kind} "
                                        f"ring")
        return self.lift(value).truncate(order)

    def with_order(self, order):
        return CoefficientRing.series(self.arity, order)

    def constant_term(self, value):
        return self.terms(value).get((0,) * self.arity, 0)

    def coefficient(self, value, exponents):
        return self.terms(value).get(tuple(exponents), 0)

    def format(self, value):
        if is_scalar(value):
            return format_scalar(value)
        if self.kind == "poly":
            return value.format(self.names)
        return str(value)

    def describe(self):
        if self.kind == "scalar":
            return "scalar"
        if self.kind == "series":
            return f"series(arity={self.arity}, order={self.order})"
        if self.kind == "poly":
            return f"poly({', '.join(self.names)})"
        return "trig(c1, s1, c2, s2)"
