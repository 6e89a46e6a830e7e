"""
The two explicit failures of the untwisted Nambu identity on twisted
brackets: the rotated cross product at right angles and the Jacobian
bracket twisted by a translation in x3.
"""
import logging
from dataclasses import dataclass
from functools import reduce

from homnambu.homalgebra import (AlgebraElement, Coordinate, element_to_poly,
                                 hom_nambu_sides, twist_by_endomorphism)
from homnambu.models._cross4 import Theta, cross4_algebra, rho_theta
from homnambu.models._jacobian import GammaMap, gamma_endo, jacobian3_algebra
from homnambu.models._samples import (cross4_counterexample_tuple,
                                      cross4_triples, jacobian_triples,
                                      jacobian_tuples)
from homnambu.scalars import (CoefficientRing, MultiPoly, parse_scalar,
                              univariate_gcd)

_log = logging.getLogger(__name__)

COUNTEREXAMPLE_SCHEMA = "homnambu.counterexample/1"
K4_NAMES = ("x1", "x2", "x3", "k4")


@dataclass(frozen=True)
class Counterexample:
    name: str
    setting: str
    witness: tuple
    lhs: str
    rhs: str
    residual: str
    expected_lhs: str
    expected_rhs: str
    matches_expected: bool
    verdict: str = None

    @property
    def holds(self):
        return self.residual == "0"

    def to_dict(self):
        data = {
            "schema": COUNTEREXAMPLE_SCHEMA,
            "counterexample": self.name,
            "setting": self.setting,
            "witness": list(self.witness),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "expected_lhs": self.expected_lhs,
            "expected_rhs": self.expected_rhs,
            "matches_expected": self.matches_expected,
        }
        if self.verdict is not None:
            data["verdict"] = self.verdict
        return data


def cross4_theta_counterexample():
    """
    The untwisted Nambu identity for `rho_theta o [.,.,.]` at
    theta1 = theta2 = pi/2, i.e. (c, s) = (0, 1), on the tuple
    (e1, e2, e3, e4, e1 + e2 + e4).

    Returns:
        Counterexample: LHS `[x1, x2, [x3, x4, x5]]` and the sum of the three
            right-hand terms, both evaluated in the twisted bracket.
    """
    theta = Theta.exact(0, 1, 0, 1)
    algebra = twist_by_endomorphism(cross4_algebra(),
                                    rho_theta(theta).to_map("rho_theta"),
                                    cross4_triples(),
                                    name="cross4[theta=exact:0,1,0,1]")
    witness = cross4_counterexample_tuple()
    lhs, rhs = hom_nambu_sides(algebra, witness, plain=True)

    e = [Coordinate(i) for i in range(1, 5)]
    expected_lhs = AlgebraElement({e[0]: 1, e[1]: 1})
    expected_rhs = -expected_lhs
    result = Counterexample(
        name="cross4-theta",
        setting="theta1 = theta2 = pi/2 (c = 0, s = 1)",
        witness=tuple(str(x) for x in witness),
        lhs=str(lhs), rhs=str(rhs), residual=str(lhs - rhs),
        expected_lhs=str(expected_lhs), expected_rhs=str(expected_rhs),
        matches_expected=lhs == expected_lhs and rhs == expected_rhs)
    _log.info(f"cross4-theta: lhs = {result.lhs}, rhs = {result.rhs}",
              extra={"counterexample": result.name})
    return result


def _k4_variables():
    return [MultiPoly.variable(j, 4) for j in range(4)]


def _root_verdict(difference):
    """
    Decide for which k4 a polynomial in x1, x2, x3, k4 vanishes, through the
    gcd of its coefficients in k4.
    """
    if not difference:
        return "equal for every k4"
    gcd = reduce(univariate_gcd, difference.split(3).values(),
                 MultiPoly.zero(1))
    if gcd.is_constant():
        return "never equal"
    return f"equal iff {gcd.format(('k4',))} = 0"


def jacobian_k4_counterexample(k4=None):
    """
    The untwisted Nambu identity for `rho_gamma o det J` with
    gamma = (x1, x2, x3 + k4) on (x1, x2, x3^3, x1^2, x2*x3). The bracket is
    the Jacobian model twisted over the polynomial ring in k4.

    Args:
        k4 (scalar|str, optional): Value bound to k4. Symbolic when None.

    Returns:
        Counterexample: Both sides as polynomials in x1, x2, x3, k4 and the
            verdict on k4.
    """
    ring = CoefficientRing.poly(1, names=("k4",))
    rho = gamma_endo(GammaMap(), ring, k4_variable=0)
    algebra = twist_by_endomorphism(jacobian3_algebra(ring), rho,
                                    jacobian_triples(1),
                                    name="jacobian3[gamma=(x1, x2, x3 + k4)]")
    witness = jacobian_tuples()[0]
    lhs, rhs = (element_to_poly(side, ring)
                for side in hom_nambu_sides(algebra, witness, plain=True))

    x1, x2, x3, t = _k4_variables()
    expected_lhs = 18 * x1 * (x3 + 2 * t) ** 2
    expected_rhs = 6 * x1 * (x3 + t) * (3 * x3 + 5 * t)
    factored_lhs = "18*x1*(x3 + 2*k4)^2"
    factored_rhs = "6*x1*(x3 + k4)*(3*x3 + 5*k4)"
    setting = "p1 = p2 = 0, k1 = k2 = k3 = 1, k4 symbolic"

    if k4 is not None:
        k4 = parse_scalar(k4) if isinstance(k4, str) else k4
        point = [x1, x2, x3, MultiPoly.constant(k4, 4)]
        lhs, rhs, expected_lhs, expected_rhs = (
            p.substitute(point)
            for p in (lhs, rhs, expected_lhs, expected_rhs))
        setting = f"p1 = p2 = 0, k1 = k2 = k3 = 1, k4 = {k4}"

    difference = lhs - rhs
    verdict = _root_verdict(difference) if k4 is None else \
        ("equal" if not difference else "not equal")
    result = Counterexample(
        name="jacobian-k4", setting=setting,
        witness=tuple(str(x) for x in witness),
        lhs=lhs.format(K4_NAMES), rhs=rhs.format(K4_NAMES),
        residual=difference.format(K4_NAMES),
        expected_lhs=factored_lhs if k4 is None
        else expected_lhs.format(K4_NAMES),
        expected_rhs=factored_rhs if k4 is None
        else expected_rhs.format(K4_NAMES),
        matches_expected=lhs == expected_lhs and rhs == expected_rhs,
        verdict=verdict)
    _log.info(f"jacobian-k4: {verdict}",
              extra={"counterexample": result.name, "k4": str(k4)})
    return result


counterexamples = {
    "cross4-theta": cross4_theta_counterexample,
    "jacobian-k4": jacobian_k4_counterexample,
}
