"""
Builders of the three formal deformations: the q-deformed Virasoro-Witt
algebra with q = 1 + t, the rotated cross product with cosines and sines
expanded as series, and the Jacobian algebra twisted by a unimodular
substitution whose free coefficients become the formal parameters.
"""
import logging

from voluptuous import All, Any, Boolean, Coerce, ExactSequence, Optional, \
    Range, Schema

from homnambu.creator import RegistryCreator
from homnambu.deformation._family import DeformationFamily
from homnambu.errors import InvalidParameterError, NotUnimodularError
from homnambu.homalgebra import SubstitutionMap, twist_by_endomorphism
from homnambu.models import (DEFAULT_VW_RANGE, Theta, check_unimodular,
                             cross4_algebra, cross4_basis, cross4_triples,
                             cross4_tuples, is_nambu_lie_z, jacobian3_algebra,
                             jacobian_monomials, jacobian_triples,
                             jacobian_tuples, parse_range, rho_q, rho_theta,
                             vw_algebra, vw_generators, vw_triples,
                             vw_tuples)
from homnambu.scalars import (CoefficientRing, MultiPoly, TruncSeries,
                              format_scalar, parse_scalar)

_log = logging.getLogger(__name__)

DEFAULT_ORDERS = {"qvw": 4, "cross4": 6, "jacobian": 4}

_ORDER = All(Coerce(int), Range(min=0))

# samples on which rho is checked to be an endomorphism before twisting
RHO_CHECK_RANGE = (-1, 1)
RHO_CHECK_DEGREE = 1


def build_qvw_deformation(order=DEFAULT_ORDERS["qvw"], z="2i",
                          allow_any_z=False, range=DEFAULT_VW_RANGE):
    """
    The one-parameter family `rho_q o [.,.,.]` with `q = 1 + t`.

    Args:
        order (int): Truncation order N.
        z (scalar|str): Constant of the Virasoro-Witt bracket.
        allow_any_z (bool, optional): Build the family even when the base
            algebra is not Nambu-Lie. Defaults to False.
        range (str|tuple, optional): Generator index range of the default
            sample. Defaults to -2..2.

    Returns:
        DeformationFamily: Family in the single parameter t.

    Raises:
        InvalidParameterError: When z is not 2i or -2i and `allow_any_z` is
            not set.
    """
    z = parse_scalar(z) if isinstance(z, str) else z
    index_range = parse_range(range)
    if not is_nambu_lie_z(z):
        if not allow_any_z:
            raise InvalidParameterError(
                f"z = {format_scalar(z)} does not give a Nambu-Lie base "
                f"algebra; only 2i and -2i do")
        _log.warning(f"Building the q-deformation over z = "
                     f"{format_scalar(z)}, whose base is not Nambu-Lie",
                     extra={"z": format_scalar(z)})

    base = vw_algebra(z)
    q = TruncSeries({(0,): 1, (1,): 1}, 1, order)
    rho = rho_q(q)
    deformed = twist_by_endomorphism(base, rho, vw_triples(RHO_CHECK_RANGE),
                                     name=f"q{base}[q=1+t]")
    params = {"z": format_scalar(z), "allow_any_z": bool(allow_any_z),
              "range": f"{index_range[0]}..{index_range[1]}"}
    return DeformationFamily(
        "qvw", base, deformed, 1, order, params,
        basis=vw_generators((-1, 1)),
        tuples=lambda: vw_tuples(index_range))


build_qvw_deformation.SCHEMA = Schema({
    Optional("order", default=DEFAULT_ORDERS["qvw"]): _ORDER,
    Optional("z", default="2i"): Coerce(str),
    Optional("allow_any_z", default=False): Boolean(),
    Optional("range", default=list(DEFAULT_VW_RANGE)):
        Any(ExactSequence([Coerce(int), Coerce(int)]), Coerce(str)),
})


def build_cross_deformation(order=DEFAULT_ORDERS["cross4"]):
    """
    The two-parameter family `rho_theta o cross4` with
    `cos(theta_j), sin(theta_j)` replaced by their series in `t_j`.

    Args:
        order (int): Truncation order N.

    Returns:
        DeformationFamily: Family in t1, t2.
    """
    theta = Theta.series(order)
    rho = rho_theta(theta).to_map("rho_theta")
    base = cross4_algebra()
    deformed = twist_by_endomorphism(base, rho, cross4_triples(),
                                     name=f"cross4[theta=series:{order}]")
    return DeformationFamily("cross4", base, deformed, 2, order, {},
                             basis=cross4_basis(), tuples=cross4_tuples,
                             triples=cross4_triples)


build_cross_deformation.SCHEMA = Schema({
    Optional("order", default=DEFAULT_ORDERS["cross4"]): _ORDER,
})


def _split_triple(value):
    if isinstance(value, str):
        return [part.strip() for part in value.split(",")]
    return value


def jacobian_parameter_shape(degree):
    """
    Monomials whose coefficients in p1(x2, x3) and p2(x3) become formal
    parameters: x2^a x3^b with `1 <= a + b <= degree` for p1 and x3^c with
    `1 <= c <= degree` for p2.

    Returns:
        tuple: `(p1 exponents, p2 exponents)`, exponents as `(a, b, c)` on
        x1, x2, x3.
    """
    if degree < 0:
        raise InvalidParameterError(f"Degree bound must be nonnegative, got "
                                    f"{degree}")
    p1 = [(0, a, d - a) for d in range(1, degree + 1)
          for a in range(d, -1, -1)]
    p2 = [(0, 0, c) for c in range(1, degree + 1)]
    return p1, p2


def jacobian_parameter_names(degree):
    """
    Descriptions of t1..tn: t1 is k4, the rest are coefficients of p1, p2.
    """
    p1, p2 = jacobian_parameter_shape(degree)

    def monomial(exponents):
        return MultiPoly.monomial(exponents).format(("x1", "x2", "x3"))

    return (["k4"] + [f"p1[{monomial(e)}]" for e in p1] +
            [f"p2[{monomial(e)}]" for e in p2])


def build_jacobian_deformation(order=DEFAULT_ORDERS["jacobian"],
                               k=(1, 1, 1), degree=1):
    """
    The family `rho_gamma o det J` where

        gamma = (k1*x1 + p1(x2, x3), k2*x2 + p2(x3), k3*x3 + k4)

    with k1, k2, k3 fixed and k4 and every coefficient of p1, p2 a formal
    parameter. For the default degree bound 1 that is
    `p1 = t2*x2 + t3*x3`, `p2 = t4*x3`, `k4 = t1`.

    Args:
        order (int): Truncation order N.
        k (tuple, optional): Scalars `(k1, k2, k3)`, or their text.
        degree (int, optional): Degree bound of p1 and p2. Defaults to 1.

    Returns:
        DeformationFamily: Family in `1 + #p1 + #p2` parameters.

    Raises:
        NotUnimodularError: When `k1*k2*k3 != 1`.
    """
    k1, k2, k3 = (parse_scalar(v) if isinstance(v, str) else v for v in k)
    if k1 * k2 * k3 != 1:
        raise NotUnimodularError(f"k1*k2*k3 = {k1 * k2 * k3}, expected 1")

    p1, p2 = jacobian_parameter_shape(degree)
    arity = 1 + len(p1) + len(p2)
    width = 3 + arity

    def x(j):
        return MultiPoly.variable(j, width)

    def t(j):
        return MultiPoly.variable(3 + j, width)

    def monomial(exponents):
        return MultiPoly.monomial(tuple(exponents) + (0,) * arity)

    first = x(0) * k1
    for j, exponents in enumerate(p1, start=1):
        first = first + t(j) * monomial(exponents)
    second = x(1) * k2
    for j, exponents in enumerate(p2, start=1 + len(p1)):
        second = second + t(j) * monomial(exponents)
    third = x(2) * k3 + t(0)
    images = (first, second, third)
    check_unimodular(images)

    ring = CoefficientRing.series(arity, order)
    rho = SubstitutionMap(images, ring, name="rho_gamma")
    base = jacobian3_algebra()
    deformed = twist_by_endomorphism(jacobian3_algebra(ring), rho,
                                     jacobian_triples(RHO_CHECK_DEGREE),
                                     name=f"jacobian3[gamma, n={arity}]")
    params = {"k": [format_scalar(v) for v in (k1, k2, k3)],
              "degree": degree,
              "parameters": jacobian_parameter_names(degree)}
    _log.debug(f"Jacobian deformation with {arity} parameters",
               extra={"parameters": params["parameters"]})
    return DeformationFamily("jacobian", base, deformed, arity, order, params,
                             basis=jacobian_monomials(2),
                             tuples=jacobian_tuples)


build_jacobian_deformation.SCHEMA = Schema({
    Optional("order", default=DEFAULT_ORDERS["jacobian"]): _ORDER,
    Optional("k", default=[1, 1, 1]):
        All(_split_triple, ExactSequence([Coerce(str)] * 3)),
    Optional("degree", default=1): All(Coerce(int), Range(min=0)),
})


families = {
    "qvw": build_qvw_deformation,
    "cross4": build_cross_deformation,
    "jacobian": build_jacobian_deformation,
}

family_creator = RegistryCreator(families, kind="deformation family")


def add_family(name, builder):
    """
    Register a family builder under `name`. A `SCHEMA` attribute on the
    builder, if any, validates its params.
    """
    families[name] = builder


def remove_family(name):
    return families.pop(name, None)


def create_family(name, params=None):
    """
    Build a registered family from its id and parameter dictionary.

    Raises:
        UnknownNameError: For an unregistered id.
        InvalidParameterError: When params fail the builder schema.
    """
    family = family_creator.create({name: params})
    _log.info(f"Built deformation family {family}",
              extra={"family": name, "params": family.params})
    return family
