"""
Model registry. Every model bundles a base algebra, the algebra it is
checked as (twisted when an endomorphism parameter is given) and its default
samples.
"""
import logging

from voluptuous import All, Any, Coerce, ExactSequence, In, Optional, Schema

from homnambu.creator import RegistryCreator
from homnambu.errors import FormatError
from homnambu.homalgebra import twist_by_endomorphism
from homnambu.models._cross4 import Theta, cross4_algebra, rho_theta
from homnambu.models._jacobian import GammaMap, gamma_endo, jacobian3_algebra
from homnambu.models._samples import (DEFAULT_JACOBIAN_DEGREE,
                                      DEFAULT_VW_RANGE, cross4_basis,
                                      cross4_triples, cross4_tuples,
                                      jacobian_monomials, jacobian_triples,
                                      jacobian_tuples, vw_generators,
                                      vw_triples, vw_tuples)
from homnambu.models._virasoro import rho_q, vw_algebra
from homnambu.scalars import TruncSeries, format_scalar, parse_scalar

_log = logging.getLogger(__name__)

_TEXT = Any(None, Coerce(str))


def parse_range(value):
    """
    Parse an index range "a..b" (or a pair) into `(a, b)` with `a <= b`.

    Raises:
        FormatError: On malformed input.
    """
    if isinstance(value, str):
        low, sep, high = value.partition("..")
        if not sep:
            raise FormatError(f"Index range must look like 'a..b', got "
                              f"'{value}'")
        value = (low, high)
    try:
        low, high = (int(v) for v in value)
    except (TypeError, ValueError) as e:
        raise FormatError(f"Bad index range {value!r}") from e
    if low > high:
        raise FormatError(f"Empty index range {low}..{high}")
    return low, high


def parse_q(value):
    """
    Parse a q-mode: a scalar text, "laurent", or "series:N" for q = 1 + t.
    """
    if not isinstance(value, str):
        return value
    text = value.strip()
    if text.startswith("series:"):
        try:
            order = int(text.partition(":")[2])
        except ValueError as e:
            raise FormatError(f"Bad series order in '{value}'") from e
        return TruncSeries({(0,): 1, (1,): 1}, 1, order)
    if text == "laurent":
        return text
    return parse_scalar(text)


class Cross4Model:
    """
    The cross product on K^4, twisted by rho_theta when `theta` is given.
    """
    name = "cross4"
    SCHEMA = Schema({
        Optional("theta", default=None): _TEXT,
        Optional("method", default="determinant"):
            In(["determinant", "epsilon"]),
    })

    def __init__(self, theta=None, method="determinant"):
        if isinstance(theta, str):
            theta = Theta.parse(theta)
        self.theta = theta
        self.method = method
        self.base = cross4_algebra(method)
        if theta is None:
            self.algebra = self.base
        else:
            rho = rho_theta(theta).to_map("rho_theta")
            self.algebra = twist_by_endomorphism(
                self.base, rho, self.triples(),
                name=f"cross4[theta={theta.describe()}]")

    def triples(self):
        return cross4_triples()

    def tuples(self):
        return cross4_tuples(curated=self.theta is not None)

    def vectors(self):
        return cross4_basis()

    def params(self):
        return {"theta": None if self.theta is None
                else self.theta.describe(), "method": self.method}


class Jacobian3Model:
    """
    The Jacobian determinant on K[x1, x2, x3], twisted by rho_gamma when
    `gamma` is given.
    """
    name = "jacobian3"
    SCHEMA = Schema({
        Optional("gamma", default=None): _TEXT,
        Optional("degree", default=DEFAULT_JACOBIAN_DEGREE):
            All(Coerce(int), lambda d: d >= 0),
    })

    def __init__(self, gamma=None, degree=DEFAULT_JACOBIAN_DEGREE):
        if isinstance(gamma, str):
            gamma = GammaMap.parse(gamma)
        self.gamma = gamma
        self.degree = degree
        self.base = jacobian3_algebra()
        if gamma is None:
            self.algebra = self.base
        else:
            # endomorphism pre-check on triples of degree at most 2
            self.algebra = twist_by_endomorphism(
                self.base, gamma_endo(gamma),
                jacobian_triples(min(degree, 2)),
                name=f"jacobian3[gamma={gamma.describe()}]")

    def triples(self):
        return jacobian_triples(self.degree)

    def tuples(self):
        return jacobian_tuples()

    def vectors(self):
        return jacobian_monomials(self.degree)

    def params(self):
        return {"gamma": None if self.gamma is None
                else self.gamma.describe(), "degree": self.degree}


class VirasoroWittModel:
    """
    The ternary Virasoro-Witt algebra, twisted by rho_q when `q` is given.
    """
    name = "vw"
    SCHEMA = Schema({
        Optional("z", default="2i"): Coerce(str),
        Optional("q", default=None): _TEXT,
        Optional("range", default=list(DEFAULT_VW_RANGE)):
            Any(ExactSequence([Coerce(int), Coerce(int)]), Coerce(str)),
    })

    def __init__(self, z="2i", q=None, range=DEFAULT_VW_RANGE):
        self.z = parse_scalar(z) if isinstance(z, str) else z
        self.q = parse_q(q)
        self.range = parse_range(range)
        self.base = vw_algebra(self.z)
        if self.q is None:
            self.algebra = self.base
        else:
            rho = rho_q(self.q)
            self.algebra = twist_by_endomorphism(
                self.base, rho, self.triples(),
                name=f"{self.base}[{rho}]")

    def triples(self):
        return vw_triples(self.range)

    def tuples(self):
        return vw_tuples(self.range)

    def vectors(self):
        return vw_generators(self.range)

    def params(self):
        q = self.q
        if q is not None and not isinstance(q, str):
            q = str(q) if isinstance(q, TruncSeries) else format_scalar(q)
        return {"z": format_scalar(self.z), "q": q,
                "range": f"{self.range[0]}..{self.range[1]}"}


models = {
    Cross4Model.name: Cross4Model,
    Jacobian3Model.name: Jacobian3Model,
    VirasoroWittModel.name: VirasoroWittModel,
}

model_creator = RegistryCreator(models, kind="model")


def add_model(name, cls):
    """
    Register a model class under `name`.
    """
    models[name] = cls


def remove_model(name):
    return models.pop(name, None)


def create_model(name, params=None):
    """
    Create a registered model from its id and parameter dictionary.

    Raises:
        UnknownNameError: For an unregistered id.
        InvalidParameterError: When params fail the model schema.
    """
    model = model_creator.create({name: params})
    _log.info(f"Created model '{name}' as '{model.algebra}'",
              extra={"model": name, "params": model.params()})
    return model
