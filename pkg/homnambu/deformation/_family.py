"""
Multi-parameter formal deformations. A family stores one algebra over the
ring of truncated series in t1..tn; its graded components `[.,.,.]_i`,
`alpha_i`, `beta_i` are read off as the coefficients of `t^i`.
"""
import logging
from dataclasses import dataclass, field

from homnambu.decorators import timing
from homnambu.errors import ArityError, InvalidParameterError
from homnambu.homalgebra import (as_element, bracket_eval,
                                 check_skew_symmetry, hom_nambu_residual)
from homnambu.scalars import CoefficientRing, TruncSeries
from homnambu.scalars._text import ascending_order

_log = logging.getLogger(__name__)

DEFORMATION_REPORT_SCHEMA = "homnambu.deformation-report/1"


class MultiIndex(tuple):
    """
    An exponent vector `(i1, ..., in)` of naturals.
    """
    def __new__(cls, values):
        values = tuple(int(v) for v in values)
        if any(v < 0 for v in values):
            raise InvalidParameterError(f"Multi-index entries must be "
                                        f"natural numbers, got {values}")
        return super().__new__(cls, values)

    @property
    def degree(self):
        return sum(self)

    def leq(self, other):
        """
        Componentwise comparison.
        """
        if len(self) != len(other):
            raise ArityError(f"Cannot compare multi-indices of arity "
                             f"{len(self)} and {len(other)}")
        return all(a <= b for a, b in zip(self, other))

    @classmethod
    def enumerate(cls, arity, order):
        """
        All multi-indices of `arity` entries with degree at most `order`, by
        ascending degree.
        """
        def build(prefix, remaining, slots):
            if slots == 0:
                yield prefix
                return
            for value in range(remaining + 1):
                yield from build(prefix + (value,), remaining - value,
                                 slots - 1)

        indices = [cls(values) for values in build((), order, arity)]
        return sorted(indices, key=ascending_order)

    def __str__(self):
        return " ".join(str(v) for v in self)


def series_coefficient(element, index):
    """
    The coefficient of `t^index` of a series-valued element, as an element
    with scalar coefficients.
    """
    index = tuple(index)

    def take(value):
        if isinstance(value, TruncSeries):
            return value.coefficient(index)
        return value if not any(index) else 0

    return element.map_coefficients(take)


def split_by_index(element, arity):
    """
    Group a series-valued element by monomial `t^i`. Scalar coefficients
    count as constant series.

    Returns:
        dict: `{MultiIndex: AlgebraElement}` without zero components.
    """
    indices = set()
    for value in element.terms.values():
        if isinstance(value, TruncSeries):
            indices.update(value.terms)
        elif value:
            indices.add((0,) * arity)
    return {MultiIndex(i): series_coefficient(element, i)
            for i in sorted(indices, key=ascending_order)}


class DeformationFamily:
    def __init__(self, name, base, deformed, arity, order, params=None,
                 basis=None, tuples=None, triples=None):
        """
        An n-parameter formal ternary hom-Nambu(-Lie) deformation, truncated
        at total degree `order`.

        Args:
            name (str): Family id, e.g. "qvw".
            base (TernaryHomAlgebra): The algebra at t = 0.
            deformed (TernaryHomAlgebra): The algebra over truncated series.
            arity (int): Number of formal parameters n.
            order (int): Truncation order N.
            params (dict, optional): Builder parameters, for reports and the
                text format.
            basis (list, optional): Finite basis used when tabulating
                components.
            tuples (function, optional): Default 5-tuple sample.
            triples (function, optional): Default triple sample.
        """
        self.name = name
        self.base = base
        self.deformed = deformed
        self.arity = arity
        self.order = order
        self.params = dict(params or {})
        self.basis = list(basis or [])
        self._tuples = tuples
        self._triples = triples

    @property
    def ring(self):
        return CoefficientRing.series(self.arity, self.order)

    def tuples(self):
        return list(self._tuples()) if self._tuples else []

    def triples(self):
        if self._triples:
            return list(self._triples())
        return triples_from_tuples(self.tuples())

    def bracket_component(self, index, x, y, z):
        return series_coefficient(self.deformed.bracket(x, y, z), index)

    def alpha_component(self, index, v):
        return series_coefficient(self.deformed.alpha(as_element(v)), index)

    def beta_component(self, index, v):
        return series_coefficient(self.deformed.beta(as_element(v)), index)

    def components(self, triples=None, vectors=None):
        """
        Tabulate the nonzero graded components on basis triples and vectors.

        Args:
            triples (list, optional): Basis triples. Defaults to all ordered
                triples of `basis`.
            vectors (list, optional): Basis vectors. Defaults to `basis`.

        Returns:
            dict: `{MultiIndex: {"bracket": {triple: element},
            "alpha": {key: element}, "beta": {key: element}}}`.
        """
        if vectors is None:
            vectors = self.basis
        if triples is None:
            triples = [(a, b, c) for a in vectors for b in vectors
                       for c in vectors]

        table = {}

        def store(part, key, value):
            for index, component in split_by_index(value,
                                                     self.arity).items():
                entry = table.setdefault(index, {"bracket": {}, "alpha": {},
                                                 "beta": {}})
                entry[part][key] = component

        for triple in triples:
            store("bracket", tuple(triple), self.deformed.bracket(*triple))
        for v in vectors:
            store("alpha", v, self.deformed.alpha(as_element(v)))
            store("beta", v, self.deformed.beta(as_element(v)))
        return {index: table[index]
                for index in sorted(table, key=ascending_order)}

    def truncate(self, order):
        """
        The same family re-truncated at a lower order.
        """
        if order > self.order:
            raise InvalidParameterError(f"Cannot raise the order of "
                                        f"'{self.name}' from {self.order} "
                                        f"to {order}")
        ring = CoefficientRing.series(self.arity, order)

        def cut(value):
            return value.truncate(order) if isinstance(value, TruncSeries) \
                else value

        deformed = self.deformed.map_coefficients(cut, ring=ring)
        return DeformationFamily(self.name, self.base, deformed, self.arity,
                                 order, self.params, self.basis,
                                 self._tuples, self._triples)

    def specialize(self, name=None):
        """
        The algebra at t = 0, i.e. the degree-0 components.
        """
        def at_zero(value):
            if isinstance(value, TruncSeries):
                return value.constant_term()
            return value

        return self.deformed.map_coefficients(
            at_zero, ring=CoefficientRing.scalar(),
            name=name or f"{self.deformed.name}|t=0")

    def describe(self):
        return {
            "family": self.name,
            "base": str(self.base),
            "arity": self.arity,
            "order": self.order,
            "params": dict(self.params),
        }

    def __str__(self):
        return f"{self.name}(n={self.arity}, N={self.order})"


def triples_from_tuples(tuples):
    """
    The distinct triples `(x1, x2, x3)` and `(x3, x4, x5)` of 5-tuples.
    """
    seen, triples = set(), []
    for xs in tuples:
        for triple in (tuple(xs[:3]), tuple(xs[2:])):
            key = tuple(str(x) for x in triple)
            if key not in seen:
                seen.add(key)
                triples.append(triple)
    return triples


def eval_deformed_bracket(F, x, y, z):
    """
    `[x, y, z]_t = sum_i [x, y, z]_i t^i`, truncated at the family order.

    Args:
        F (DeformationFamily): The family.
        x, y, z (AlgebraElement|BasisKey): Arguments, with scalar or series
            coefficients.

    Returns:
        AlgebraElement: Element with series coefficients.

    Raises:
        CarrierMismatchError: For keys outside the carrier.
        ArityError: For series coefficients with another parameter count.
    """
    return bracket_eval(F.deformed, x, y, z)


@dataclass(frozen=True)
class OrderedResidual:
    witness: tuple
    coefficients: dict

    def degrees(self):
        return sorted({index.degree for index in self.coefficients})

    def to_dict(self):
        return {
            "witness": [str(x) for x in self.witness],
            "coefficients": {str(index): str(value)
                             for index, value in self.coefficients.items()},
        }


@dataclass(frozen=True)
class DegreeRow:
    degree: int
    checked: int
    failing: int

    @property
    def passed(self):
        return self.failing == 0


@dataclass(frozen=True)
class DeformationReport:
    family: str
    arity: int
    order: int
    sample_size: int
    degrees: tuple
    skew: object
    failures: tuple = field(default_factory=tuple)

    @property
    def passed(self):
        return not self.failures and self.skew.passed

    def to_dict(self):
        return {
            "schema": DEFORMATION_REPORT_SCHEMA,
            "family": self.family,
            "arity": self.arity,
            "order": self.order,
            "sample_size": self.sample_size,
            "passed": self.passed,
            "degrees": [{"degree": row.degree, "checked": row.checked,
                         "failing": row.failing, "passed": row.passed}
                        for row in self.degrees],
            "skew_symmetry": self.skew.to_dict(),
            "failures": [f.to_dict() for f in self.failures],
        }


@timing("verify_deformation")
def verify_deformation(F, tuples=None, triples=None):
    """
    Verify the hom-Nambu identity of a family modulo degree N+1: every
    coefficient of `t^i`, `|i| <= N`, of the residual must vanish. The
    series-valued bracket is also checked for skew-symmetry, which holds iff
    every component `[.,.,.]_i` is skew-symmetric.

    Args:
        F (DeformationFamily): The family.
        tuples (list, optional): 5-tuples of base elements. Defaults to the
            family sample.
        triples (list, optional): Triples for the skew-symmetry check.
            Defaults to triples taken from the 5-tuples.

    Returns:
        DeformationReport: Per-degree table and failing residuals.
    """
    tuples = F.tuples() if tuples is None else list(tuples)
    if triples is None:
        triples = triples_from_tuples(tuples) if tuples else F.triples()
    if not tuples:
        raise InvalidParameterError("verify_deformation needs a nonempty "
                                    "sample")

    failing = [0] * (F.order + 1)
    failures = []
    for xs in tuples:
        residual = hom_nambu_residual(F.deformed, xs)
        if not residual:
            continue
        coefficients = split_by_index(residual, F.arity)
        for degree in sorted({index.degree for index in coefficients}):
            failing[degree] += 1
        failures.append(OrderedResidual(tuple(xs), coefficients))

    skew = check_skew_symmetry(F.deformed, triples)
    rows = tuple(DegreeRow(d, len(tuples), failing[d])
                 for d in range(F.order + 1))
    report = DeformationReport(str(F), F.arity, F.order, len(tuples), rows,
                               skew, tuple(failures))
    _log.info(f"Deformation '{F}': {len(failures)} failing tuples of "
              f"{len(tuples)}, skew-symmetry "
              f"{'passed' if skew.passed else 'failed'}",
              extra={"family": F.name, "order": F.order,
                     "failures": len(failures)})
    return report
