"""
The Jacobian algebra on K[x1, x2, x3] and its unimodular substitution
endomorphisms.
"""
import logging

from homnambu.errors import (FormatError, InvalidParameterError,
                             NotUnimodularError)
from homnambu.homalgebra import (AlgebraElement, Carrier, Monomial,
                                 SubstitutionMap, TernaryHomAlgebra,
                                 element_to_poly, poly_to_element)
from homnambu.scalars import (CoefficientRing, MultiPoly, parse_scalar,
                              poly_partial)

_log = logging.getLogger(__name__)

JACOBIAN_CARRIER = Carrier("monomial", 3)
X_NAMES = ("x1", "x2", "x3")


def jacobian3_det(q1, q2, q3, reduce=None):
    """
    `det(dq_i/dx_j)` for three polynomials whose first three variables are
    x1, x2, x3; further variables are parameters and are not differentiated.

    Args:
        q1, q2, q3 (MultiPoly): Polynomials of one arity, at least 3.
        reduce (function, optional): Applied after every product, e.g. a
            truncation in the parameters.

    Returns:
        MultiPoly: The Jacobian determinant by cofactor expansion.
    """
    if reduce is None:
        def reduce(x):
            return x

    rows = [[poly_partial(q, j) for j in range(3)] for q in (q1, q2, q3)]

    def minor(a, b, c, d):
        return reduce(a * d) - reduce(b * c)

    m0 = minor(rows[1][1], rows[1][2], rows[2][1], rows[2][2])
    m1 = minor(rows[1][0], rows[1][2], rows[2][0], rows[2][2])
    m2 = minor(rows[1][0], rows[1][1], rows[2][0], rows[2][1])
    return reduce(rows[0][0] * m0) - reduce(rows[0][1] * m1) + \
        reduce(rows[0][2] * m2)


def _monomial_poly(key, arity=3):
    return MultiPoly.monomial(key.exponents + (0,) * (arity - 3))


def jacobian3_bracket(q1, q2, q3):
    """
    The Jacobian bracket of three polynomials in x1, x2, x3.
    """
    return jacobian3_det(q1, q2, q3)


def jacobian3_algebra(ring=None):
    """
    The ternary Nambu-Lie algebra `(K[x1, x2, x3], det J)`.

    Args:
        ring (CoefficientRing, optional): Coefficient ring of elements.
            Defaults to scalars.
    """
    ring = ring or CoefficientRing.scalar()
    reduce = None
    if ring.kind == "series":
        def reduce(p):
            return p.truncate(3, ring.order)

    def rule(k1, k2, k3):
        det = jacobian3_det(*(_monomial_poly(k) for k in (k1, k2, k3)))
        return AlgebraElement({Monomial(e): c for e, c in det.terms.items()})

    def evaluate(x, y, z):
        polys = (element_to_poly(v, ring) for v in (x, y, z))
        return poly_to_element(jacobian3_det(*polys, reduce=reduce), ring)

    return TernaryHomAlgebra("jacobian3", JACOBIAN_CARRIER, rule, ring=ring,
                             evaluate=evaluate)


def _as_poly(value, arity=3):
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, str):
        return MultiPoly.parse(value, X_NAMES)
    return MultiPoly.constant(value, arity)


def _as_scalar(value):
    if isinstance(value, str):
        return parse_scalar(value)
    return value


def _check_variables(poly, allowed, label):
    for exponents in poly.terms:
        for j, exponent in enumerate(exponents):
            if exponent and j not in allowed:
                names = ", ".join(X_NAMES[a] for a in allowed) or "nothing"
                raise InvalidParameterError(
                    f"{label} = {poly.format(X_NAMES)} may only depend on "
                    f"{names}")


class GammaMap:
    """
    A triangular polynomial self-map of K^3 with `k1*k2*k3 = 1`,

        upper:    (k1*x1 + p1(x2, x3), k2*x2 + p2(x3), k3*x3 + k4)
        mirrored: (k1*x1 + k4, k2*x2 + p2(x1), k3*x3 + p1(x1, x2))
    """
    def __init__(self, k1=1, k2=1, k3=1, k4=0, p1=0, p2=0, mirrored=False):
        """
        Args:
            k1, k2, k3, k4 (scalar|str): Scalars, or their text.
            p1 (MultiPoly|str|scalar): Polynomial in two of the variables.
            p2 (MultiPoly|str|scalar): Polynomial in one of the variables.
            mirrored (bool): Use the lower-triangular form.

        Raises:
            NotUnimodularError: When `k1*k2*k3 != 1`.
            InvalidParameterError: When p1 or p2 depend on a forbidden
                variable.
        """
        self.k1, self.k2, self.k3, self.k4 = \
            (_as_scalar(k) for k in (k1, k2, k3, k4))
        self.p1, self.p2 = _as_poly(p1), _as_poly(p2)
        self.mirrored = bool(mirrored)

        product = self.k1 * self.k2 * self.k3
        if product != 1:
            raise NotUnimodularError(f"k1*k2*k3 = {product}, expected 1")
        if self.mirrored:
            _check_variables(self.p1, (0, 1), "p1")
            _check_variables(self.p2, (0,), "p2")
        else:
            _check_variables(self.p1, (1, 2), "p1")
            _check_variables(self.p2, (2,), "p2")

    @classmethod
    def parse(cls, text):
        """
        Parse "k1=1,k2=1,k3=1,k4=2,p1=x2^2,p2=3*x3[,mirrored=true]". Missing
        keys take their defaults.

        Raises:
            FormatError: On unknown keys or malformed pairs.
        """
        params = {}
        for pair in filter(None, (p.strip() for p in str(text).split(","))):
            key, sep, value = pair.partition("=")
            key = key.strip()
            if not sep or key not in ("k1", "k2", "k3", "k4", "p1", "p2",
                                      "mirrored"):
                raise FormatError(f"Bad gamma entry '{pair}' in '{text}'")
            params[key] = value.strip()
        if "mirrored" in params:
            params["mirrored"] = params["mirrored"].lower() in \
                ("1", "true", "yes")
        return cls(**params)

    def images(self):
        x1, x2, x3 = (MultiPoly.variable(j, 3) for j in range(3))
        if self.mirrored:
            return (x1 * self.k1 + self.k4, x2 * self.k2 + self.p2,
                    x3 * self.k3 + self.p1)
        return (x1 * self.k1 + self.p1, x2 * self.k2 + self.p2,
                x3 * self.k3 + self.k4)

    def is_identity(self):
        x = [MultiPoly.variable(j, 3) for j in range(3)]
        return list(self.images()) == x

    def describe(self):
        text = (f"k1={self.k1},k2={self.k2},k3={self.k3},k4={self.k4},"
                f"p1={self.p1.format(X_NAMES)},p2={self.p2.format(X_NAMES)}")
        if self.mirrored:
            text += ",mirrored=true"
        return text

    def __str__(self):
        return "gamma(" + ", ".join(p.format(X_NAMES)
                                    for p in self.images()) + ")"


def check_unimodular(images, reduce=None):
    """
    Raises:
        NotUnimodularError: When `det J(images)` is not the constant 1.
    """
    det = jacobian3_det(*images, reduce=reduce)
    if det != 1:
        raise NotUnimodularError(f"det J(gamma) = {det}, expected 1")


def gamma_endo(gamma, ring=None, k4_variable=None):
    """
    The substitution endomorphism `q(x) -> q(gamma(x))` of the Jacobian
    algebra.

    Args:
        gamma (GammaMap|str): The unimodular map, or its text.
        ring (CoefficientRing, optional): Coefficient ring of the elements it
            acts on. Defaults to scalars.
        k4_variable (int, optional): Index of a ring variable added to the
            translation k4, which makes the translation symbolic. Defaults to
            None.

    Returns:
        SubstitutionMap: rho_gamma.

    Raises:
        NotUnimodularError: When `det J(gamma) != 1`.
        InvalidParameterError: When `k4_variable` is not a variable of a
            polynomial or series ring.
    """
    if isinstance(gamma, str):
        gamma = GammaMap.parse(gamma)
    ring = ring or CoefficientRing.scalar()
    images = gamma.images()
    check_unimodular(images)
    if ring.arity:
        images = [MultiPoly({e + (0,) * ring.arity: c
                             for e, c in p.terms.items()},
                            3 + ring.arity, (False,) * 3 + ring.laurent)
                  for p in images]
    if k4_variable is not None:
        if ring.kind not in ("poly", "series") or \
                not 0 <= k4_variable < ring.arity:
            raise InvalidParameterError(f"k4_variable={k4_variable} is not a "
                                        f"variable of {ring.describe()}")
        translated = 0 if gamma.mirrored else 2
        images[translated] = images[translated] + MultiPoly.variable(
            3 + k4_variable, 3 + ring.arity, (False,) * 3 + ring.laurent)
    _log.debug(f"Built substitution endomorphism for {gamma}",
               extra={"gamma": gamma.describe(), "k4_variable": k4_variable})
    return SubstitutionMap(images, ring, name=f"rho_{gamma}")
