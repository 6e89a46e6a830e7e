"""
Checkers for the defining identities of ternary hom-Nambu(-Lie) algebras.
A failing identity is a finding, not an error: it is recorded as a
`Violation` in the returned `Report`.
"""
import logging
from dataclasses import dataclass, field

from homnambu.decorators import timing
from homnambu.errors import InvalidParameterError, NotAnEndomorphismError
from homnambu.homalgebra._algebra import _check_carrier, hom_nambu_residual
from homnambu.homalgebra._element import as_element

_log = logging.getLogger(__name__)

REPORT_SCHEMA = "homnambu.report/1"

# (permutation, sign) for every element of S3
PERMUTATIONS = (
    ((0, 1, 2), 1),
    ((1, 2, 0), 1),
    ((2, 0, 1), 1),
    ((1, 0, 2), -1),
    ((0, 2, 1), -1),
    ((2, 1, 0), -1),
)


@dataclass(frozen=True)
class Violation:
    witness: tuple
    residual: object
    detail: str = None

    def to_dict(self):
        return {
            "witness": [str(x) for x in self.witness],
            "residual": str(self.residual),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Report:
    check: str
    algebra: str
    sample_size: int
    violations: tuple = field(default_factory=tuple)

    @property
    def passed(self):
        return not self.violations

    def merge(self, other, check=None):
        return Report(check or self.check, self.algebra,
                      self.sample_size + other.sample_size,
                      self.violations + other.violations)

    def to_dict(self):
        return {
            "schema": REPORT_SCHEMA,
            "check": self.check,
            "algebra": self.algebra,
            "sample_size": self.sample_size,
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
        }


def _finish(check, A, sample_size, violations):
    report = Report(check, str(A), sample_size, tuple(violations))
    _log.info(f"{check} on '{A}': {len(report.violations)} violations in "
              f"{sample_size} samples",
              extra={"check": check, "algebra": str(A),
                     "sample_size": sample_size,
                     "violations": len(report.violations)})
    for violation in report.violations:
        _log.debug(f"{check} violation at "
                   f"({', '.join(str(x) for x in violation.witness)}): "
                   f"{violation.residual}")
    return report


def _nonempty(sample, check):
    sample = list(sample)
    if not sample:
        raise InvalidParameterError(f"{check} needs a nonempty sample")
    return sample


@timing("check_skew_symmetry")
def check_skew_symmetry(A, triples):
    """
    Verify `[x_s(1), x_s(2), x_s(3)] = sgn(s) [x1, x2, x3]` for every
    permutation s of S3 on every sampled triple.

    Args:
        A (TernaryHomAlgebra): The algebra.
        triples (list): Triples of elements or basis keys.

    Returns:
        Report: One violation per failing (triple, permutation) pair.

    Raises:
        InvalidParameterError: When `triples` is empty.
    """
    triples = _nonempty(triples, "check_skew_symmetry")
    violations = []
    for triple in triples:
        xs = tuple(as_element(x) for x in triple)
        value = A.bracket(*xs)
        for permutation, sign in PERMUTATIONS[1:]:
            permuted = A.bracket(*(xs[j] for j in permutation))
            residual = permuted - value * sign
            if residual:
                violations.append(Violation(
                    tuple(triple), residual,
                    f"permutation {tuple(j + 1 for j in permutation)}"))
    return _finish("skew_symmetry", A, len(triples), violations)


@timing("check_hom_nambu_identity")
def check_hom_nambu_identity(A, tuples, plain=False):
    """
    Evaluate the hom-Nambu residual on every sampled 5-tuple.

    Args:
        A (TernaryHomAlgebra): The algebra.
        tuples (list): 5-tuples of elements or basis keys.
        plain (bool, optional): Check the untwisted Nambu identity of A's
            bracket instead. Defaults to False.

    Returns:
        Report: One violation per 5-tuple with a nonzero residual.

    Raises:
        InvalidParameterError: When `tuples` is empty.
    """
    tuples = _nonempty(tuples, "check_hom_nambu_identity")
    violations = []
    for xs in tuples:
        residual = hom_nambu_residual(A, xs, plain=plain)
        if residual:
            violations.append(Violation(tuple(xs), residual))
    check = "nambu_identity" if plain else "hom_nambu_identity"
    return _finish(check, A, len(tuples), violations)


def _sample_vectors(triples):
    seen = []
    for triple in triples:
        for x in triple:
            if not any(x is y or x == y for y in seen):
                seen.append(x)
    return seen


@timing("check_morphism")
def check_morphism(f, A, A2, triples, vectors=None):
    """
    Verify that `f: A -> A2` is a morphism: `f([x, y, z]) = [f x, f y, f z]'`
    on the sampled triples, `f o alpha = alpha' o f` and
    `f o beta = beta' o f` on the sampled vectors.

    Args:
        f (LinearMap): The candidate morphism.
        A (TernaryHomAlgebra): Source algebra.
        A2 (TernaryHomAlgebra): Target algebra.
        triples (list): Triples of elements or basis keys of A.
        vectors (list, optional): Vectors for the intertwining conditions.
            Defaults to the distinct entries of `triples`.

    Returns:
        Report: Violations tagged "bracket", "alpha" or "beta".

    Raises:
        CarrierMismatchError: When a sampled vector is outside A's carrier.
        InvalidParameterError: When `triples` is empty.
    """
    triples = _nonempty(triples, "check_morphism")
    if vectors is None:
        vectors = _sample_vectors(triples)
    vectors = list(vectors)
    _check_carrier(A, vectors)
    for triple in triples:
        _check_carrier(A, triple)

    violations = []
    for triple in triples:
        xs = tuple(as_element(x) for x in triple)
        residual = f(A.bracket(*xs)) - A2.bracket(*(f(x) for x in xs))
        if residual:
            violations.append(Violation(tuple(triple), residual, "bracket"))

    for name, twist, twist2 in (("alpha", A.alpha, A2.alpha),
                                ("beta", A.beta, A2.beta)):
        if twist.is_identity() and twist2.is_identity():
            continue
        for v in vectors:
            x = as_element(v)
            residual = f(twist(x)) - twist2(f(x))
            if residual:
                violations.append(Violation((v,), residual, name))

    return _finish("morphism", A, len(triples) + len(vectors), violations)


def twist_by_endomorphism(A, rho, triples=None, name=None, ring=None):
    """
    Turn a ternary Nambu(-Lie) algebra and an endomorphism `rho` into the
    multiplicative hom-Nambu(-Lie) algebra `(V, rho o [.,.,.], (rho, rho))`.

    Args:
        A (TernaryHomAlgebra): Algebra with identity twists.
        rho (LinearMap): Endomorphism of A.
        triples (list, optional): Sample on which rho is checked to be an
            endomorphism first. No check when omitted.
        name (str, optional): Name of the twisted algebra.
        ring (CoefficientRing, optional): Coefficient ring of the result,
            when rho has coefficients outside A's ring.

    Returns:
        TernaryHomAlgebra: The twisted algebra.

    Raises:
        InvalidParameterError: When A has non-identity twists.
        NotAnEndomorphismError: When rho fails the endomorphism check.
    """
    if not (A.alpha.is_identity() and A.beta.is_identity()):
        raise InvalidParameterError(f"Algebra '{A}' already has non-identity "
                                    f"twists")
    if triples is not None:
        report = check_morphism(rho, A, A, triples)
        if not report.passed:
            witness = report.violations[0].witness
            raise NotAnEndomorphismError(
                f"'{rho}' is not an endomorphism of '{A}': "
                f"{len(report.violations)} violations, first at "
                f"({', '.join(str(x) for x in witness)})")

    twisted = A.twisted(rho, name=name, ring=ring)
    _log.debug(f"Twisted '{A}' by '{rho}' into '{twisted}'",
               extra={"algebra": str(A), "map": str(rho)})
    return twisted


@timing("check_multiplicative")
def check_multiplicative(A, triples, vectors=None):
    """
    Verify `alpha = beta` on the sampled vectors and that alpha is an
    endomorphism of A on the sampled triples.

    Returns:
        Report: Violations tagged "alpha != beta", "bracket", "alpha" or
            "beta".

    Raises:
        InvalidParameterError: When `triples` is empty.
    """
    triples = _nonempty(triples, "check_multiplicative")
    if vectors is None:
        vectors = _sample_vectors(triples)
    vectors = list(vectors)

    violations = []
    if A.alpha is not A.beta:
        for v in vectors:
            x = as_element(v)
            residual = A.alpha(x) - A.beta(x)
            if residual:
                violations.append(Violation((v,), residual, "alpha != beta"))

    morphism = check_morphism(A.alpha, A, A, triples, vectors)
    return _finish("multiplicative", A, len(triples) + len(vectors),
                   violations + list(morphism.violations))
