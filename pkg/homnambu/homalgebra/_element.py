"""
Finite linear combinations of basis keys. Coefficients are scalars or
elements of a coefficient ring (polynomials, truncated series, trigonometric
ring elements).
"""
from homnambu.homalgebra._keys import BasisKey
from homnambu.scalars import format_coefficient, is_scalar, join_terms


class AlgebraElement:
    """
    An element `sum c_k * k` of a carrier, stored as `{key: coefficient}`
    without zero coefficients.
    """
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def _wrap(cls, terms):
        element = cls.__new__(cls)
        element.terms = terms
        return element

    @classmethod
    def basis(cls, key, coefficient=1):
        return cls({key: coefficient})

    @classmethod
    def zero(cls):
        return cls._wrap({})

    def keys(self):
        return sorted(self.terms, key=lambda k: k.sort_key())

    def items(self):
        return [(k, self.terms[k]) for k in self.keys()]

    def coefficient(self, key):
        return self.terms.get(key, 0)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        terms = dict(self.terms)
        for key, coefficient in other.terms.items():
            value = terms.get(key)
            terms[key] = coefficient if value is None else value + coefficient
        return AlgebraElement(terms)

    def __neg__(self):
        return AlgebraElement._wrap({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, coefficient):
        if isinstance(coefficient, (AlgebraElement, BasisKey)):
            return NotImplemented
        if is_scalar(coefficient) and not coefficient:
            return AlgebraElement.zero()
        return AlgebraElement({k: c * coefficient
                               for k, c in self.terms.items()})

    def __rmul__(self, coefficient):
        if isinstance(coefficient, (AlgebraElement, BasisKey)):
            return NotImplemented
        if is_scalar(coefficient) and not coefficient:
            return AlgebraElement.zero()
        return AlgebraElement({k: coefficient * c
                               for k, c in self.terms.items()})

    def map_coefficients(self, function):
        """
        Apply `function` to every coefficient, dropping the ones sent to
        zero.
        """
        return AlgebraElement({k: function(c) for k, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        if is_scalar(other) and not other:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def format(self, ring=None):
        """
        Render the element, coefficients through `ring.format` when a
        coefficient ring is given.
        """
        render = str if ring is None else ring.format
        parts = []
        for key, coefficient in self.items():
            if coefficient == 1 or coefficient == -1:
                parts.append(format_coefficient(coefficient, str(key)))
            else:
                parts.append(format_coefficient(render(coefficient),
                                                str(key)))
        return join_terms(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"AlgebraElement('{self}')"


def as_element(value):
    """
    Promote a basis key to the corresponding basis element.
    """
    if isinstance(value, BasisKey):
        return AlgebraElement.basis(value)
    return value
