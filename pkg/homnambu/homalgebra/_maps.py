"""
Linear maps on carriers. A map is defined by its action on basis keys; the
action on elements is the linear extension. Basis images are memoized per
map instance.
"""
import logging
from abc import ABC, abstractmethod

from homnambu.errors import ArityError, CarrierMismatchError
from homnambu.homalgebra._element import AlgebraElement, as_element
from homnambu.homalgebra._keys import Coordinate, Generator, Monomial
from homnambu.scalars import (CoefficientRing, MultiPoly, is_scalar,
                              reciprocal)

_log = logging.getLogger(__name__)


class LinearMap(ABC):
    """
    Base of linear maps. `ring` is the coefficient ring of the images, None
    when the map keeps the ring of its arguments.
    """
    name = "linear"

    def __init__(self, ring=None):
        self.ring = ring
        self._basis_cache = {}

    @abstractmethod
    def image(self, key):
        """
        Image of the basis key `key` as an AlgebraElement.
        """
        pass

    def on_basis(self, key):
        try:
            return self._basis_cache[key]
        except KeyError:
            value = self.image(key)
            self._basis_cache[key] = value
            return value

    def __call__(self, element):
        element = as_element(element)
        result = {}
        for key, coefficient in element.terms.items():
            for k, c in self.on_basis(key).terms.items():
                product = coefficient * c
                value = result.get(k)
                result[k] = product if value is None else value + product
        return AlgebraElement(result)

    def is_identity(self):
        return False

    def __str__(self):
        return self.name


class IdentityMap(LinearMap):
    name = "id"

    def image(self, key):
        return AlgebraElement.basis(key)

    def __call__(self, element):
        return as_element(element)

    def is_identity(self):
        return True


class MatrixMap(LinearMap):
    """
    Map of a coordinate carrier given by a square matrix with
    `rho(e_l) = sum_i matrix[i][l] * e_i` (1-based keys, 0-based rows).
    """
    name = "matrix"

    def __init__(self, matrix, ring=None, name=None):
        super().__init__(ring)
        self.matrix = tuple(tuple(row) for row in matrix)
        self.dimension = len(self.matrix)
        if any(len(row) != self.dimension for row in self.matrix):
            raise ArityError("Matrix maps need a square matrix")
        if name is not None:
            self.name = name

    def image(self, key):
        if type(key) is not Coordinate or \
                not 1 <= key.index <= self.dimension:
            raise CarrierMismatchError(f"Matrix map of dimension "
                                       f"{self.dimension} cannot act on "
                                       f"'{key}'")
        column = key.index - 1
        return AlgebraElement({Coordinate(i + 1): self.matrix[i][column]
                               for i in range(self.dimension)})


def element_to_poly(element, ring):
    """
    Flatten a monomial-carrier element with coefficients in `ring` into one
    polynomial in `x1, x2, x3` followed by the ring variables.
    """
    arity = 3 + ring.arity
    laurent = (False,) * 3 + tuple(ring.laurent)
    terms = {}
    for key, coefficient in as_element(element).terms.items():
        if type(key) is not Monomial:
            raise CarrierMismatchError(f"'{key}' is not a monomial")
        for exponents, value in ring.terms(coefficient).items():
            terms[key.exponents + tuple(exponents)] = value
    return MultiPoly(terms, arity, laurent)


def poly_to_element(poly, ring):
    """
    Inverse of `element_to_poly`.
    """
    if poly.arity != 3 + ring.arity:
        raise ArityError(f"Expected a polynomial in {3 + ring.arity} "
                         f"variables, got {poly.arity}")
    return AlgebraElement({Monomial(exponents): ring.from_terms(part.terms)
                           for exponents, part in poly.split(3).items()})


class SubstitutionMap(LinearMap):
    """
    The map `q(x) -> q(images)` on a monomial carrier. `images` are
    polynomials in `x1, x2, x3` and the variables of `ring`; for series rings
    every intermediate product is truncated at the ring order.
    """
    name = "substitution"

    def __init__(self, images, ring=None, name=None):
        super().__init__(ring or CoefficientRing.scalar())
        arity = 3 + self.ring.arity
        images = [image if isinstance(image, MultiPoly)
                  else MultiPoly.constant(image, arity) for image in images]
        if len(images) != 3 or any(i.arity != arity for i in images):
            raise ArityError(f"A substitution needs three images in {arity} "
                             f"variables")
        self.images = tuple(images)
        self._power_cache = {}
        if name is not None:
            self.name = name

    def _reduce(self, poly):
        if self.ring.kind == "series":
            return poly.truncate(3, self.ring.order)
        return poly

    def substitute(self, poly):
        """
        Substitute into a polynomial in `x1, x2, x3` and the ring variables;
        ring variables are left unchanged.
        """
        variables = [MultiPoly.variable(3 + j, poly.arity, poly.laurent)
                     for j in range(self.ring.arity)]
        if not variables:
            return poly.substitute(self.images, cache=self._power_cache,
                                   reduce=self._reduce)
        # split off the ring part so the cached powers stay valid
        result = MultiPoly.zero(poly.arity, poly.laurent)
        for head, rest in poly.split(3).items():
            image = MultiPoly.monomial(head + (0,) * self.ring.arity) \
                .substitute(list(self.images) + variables,
                            cache=self._power_cache, reduce=self._reduce)
            tail = MultiPoly({(0, 0, 0) + e: c for e, c in rest.terms.items()},
                             poly.arity, poly.laurent)
            result = result + self._reduce(image * tail)
        return result

    def image(self, key):
        if type(key) is not Monomial:
            raise CarrierMismatchError(f"Substitution maps act on monomials, "
                                       f"not '{key}'")
        return poly_to_element(
            self.substitute(element_to_poly(AlgebraElement.basis(key),
                                            self.ring)),
            self.ring)

    def __call__(self, element):
        element = as_element(element)
        if not element:
            return element
        return poly_to_element(
            self.substitute(element_to_poly(element, self.ring)), self.ring)


def scalar_power(value, exponent):
    """
    `value ** exponent` in the value's own ring, negative exponents through
    exact inverses.
    """
    if exponent >= 0:
        return value ** exponent
    if is_scalar(value):
        return reciprocal(value) ** -exponent
    return value ** exponent


class ScalingMap(LinearMap):
    """
    Graded scaling of a generator carrier: `Q_n -> q^n Q_n`, `R_n -> q^n R_n`.
    """
    name = "scaling"

    def __init__(self, factor, ring=None, name=None):
        super().__init__(ring)
        self.factor = factor
        if name is not None:
            self.name = name

    def image(self, key):
        if type(key) is not Generator:
            raise CarrierMismatchError(f"Scaling maps act on generators, not "
                                       f"'{key}'")
        return AlgebraElement.basis(key, scalar_power(self.factor, key.index))


class TableMap(LinearMap):
    """
    Map given by an explicit table of basis images. Keys missing from the
    table raise CarrierMismatchError.
    """
    name = "table"

    def __init__(self, table, ring=None, name=None):
        super().__init__(ring)
        self.table = {key: as_element(value) for key, value in table.items()}
        if name is not None:
            self.name = name

    def image(self, key):
        try:
            return self.table[key]
        except KeyError as e:
            raise CarrierMismatchError(f"Key '{key}' is outside the "
                                       f"tabulated basis") from e


class CoefficientMap(LinearMap):
    """
    A map followed by a function applied to every output coefficient, such
    as a truncation or the evaluation at zero parameters.
    """
    def __init__(self, inner, function, ring=None, name=None):
        super().__init__(ring)
        self.inner = inner
        self.function = function
        self.name = name or str(inner)

    def image(self, key):
        return self.inner.on_basis(key).map_coefficients(self.function)

    def __call__(self, element):
        return self.inner(element).map_coefficients(self.function)

    def is_identity(self):
        return self.inner.is_identity()
