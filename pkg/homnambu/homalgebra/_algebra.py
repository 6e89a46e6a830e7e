import logging

from homnambu.errors import CarrierMismatchError
from homnambu.homalgebra._element import AlgebraElement, as_element
from homnambu.homalgebra._maps import CoefficientMap, IdentityMap
from homnambu.scalars import CoefficientRing

_log = logging.getLogger(__name__)


class TernaryHomAlgebra:
    def __init__(self, name, carrier, rule, alpha=None, beta=None, ring=None,
                 evaluate=None):
        """
        A ternary hom-algebra `(V, [.,.,.], (alpha, beta))`.

        Args:
            name (str): Identifier used in reports.
            carrier (Carrier): The vector space V.
            rule (function): Bracket of three basis keys, returning an
                AlgebraElement. Extended trilinearly; results are memoized.
            alpha (LinearMap, optional): First twisting map. Defaults to the
                identity.
            beta (LinearMap, optional): Second twisting map. Defaults to the
                identity.
            ring (CoefficientRing, optional): Ring of the bracket and twist
                coefficients. Defaults to scalars.
            evaluate (function, optional): Bracket of three whole elements.
                When given it replaces the trilinear expansion of `rule`;
                it must agree with it.
        """
        self.name = name
        self.carrier = carrier
        self.rule = rule
        self.alpha = alpha or IdentityMap()
        self.beta = beta or IdentityMap()
        self.ring = ring or CoefficientRing.scalar()
        self.evaluate = evaluate
        self._rule_cache = {}

    def basis_bracket(self, k1, k2, k3):
        key = (k1, k2, k3)
        try:
            return self._rule_cache[key]
        except KeyError:
            value = self.rule(k1, k2, k3)
            self._rule_cache[key] = value
            return value

    def bracket(self, x, y, z):
        x, y, z = as_element(x), as_element(y), as_element(z)
        if not (x and y and z):
            return AlgebraElement.zero()
        if self.evaluate is not None:
            return self.evaluate(x, y, z)

        result = {}
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                c12 = c1 * c2
                for k3, c3 in z.terms.items():
                    value = self.basis_bracket(k1, k2, k3)
                    if not value:
                        continue
                    c123 = c12 * c3
                    for k, c in value.terms.items():
                        product = c123 * c
                        current = result.get(k)
                        result[k] = product if current is None \
                            else current + product
        return AlgebraElement(result)

    def twisted(self, rho, name=None, ring=None):
        """
        The algebra `(V, rho o [.,.,.], (rho, rho))`, without any check.
        The coefficient ring of the result is `ring`, else the ring of rho,
        else the ring of A.
        """
        rule = self.rule

        def twisted_rule(k1, k2, k3):
            return rho(rule(k1, k2, k3))

        evaluate = None
        if self.evaluate is not None:
            inner = self.evaluate

            def evaluate(x, y, z):
                return rho(inner(x, y, z))

        return TernaryHomAlgebra(name or f"{self.name}[{rho}]", self.carrier,
                                 twisted_rule, rho, rho,
                                 ring or rho.ring or self.ring,
                                 evaluate)

    def map_coefficients(self, function, ring=None, name=None):
        """
        Post-compose every bracket and twist coefficient with `function`,
        which must be a ring morphism (a truncation, an evaluation).
        """
        rule = self.rule

        def mapped_rule(k1, k2, k3):
            return rule(k1, k2, k3).map_coefficients(function)

        evaluate = None
        if self.evaluate is not None:
            inner = self.evaluate

            def evaluate(x, y, z):
                return inner(x, y, z).map_coefficients(function)

        alpha = CoefficientMap(self.alpha, function)
        beta = alpha if self.beta is self.alpha \
            else CoefficientMap(self.beta, function)
        return TernaryHomAlgebra(name or self.name, self.carrier, mapped_rule,
                                 alpha, beta, ring or self.ring, evaluate)

    def __str__(self):
        return self.name

    def __repr__(self):
        return (f"TernaryHomAlgebra('{self.name}', carrier='{self.carrier}', "
                f"alpha='{self.alpha}', beta='{self.beta}', "
                f"ring='{self.ring.describe()}')")


def _check_carrier(A, elements):
    for element in elements:
        for key in as_element(element).terms:
            if not A.carrier.admits(key):
                raise CarrierMismatchError(f"'{key}' does not belong to the "
                                           f"carrier '{A.carrier}' of "
                                           f"'{A.name}'")


def bracket_eval(A, x, y, z):
    """
    Evaluate `[x, y, z]` in `A`.

    Args:
        A (TernaryHomAlgebra): The algebra.
        x, y, z (AlgebraElement|BasisKey): Arguments on A's carrier.

    Returns:
        AlgebraElement: The trilinear extension of A's basis rule.

    Raises:
        CarrierMismatchError: When an argument has a key outside the carrier.
    """
    _check_carrier(A, (x, y, z))
    return A.bracket(x, y, z)


def hom_nambu_sides(A, xs, plain=False):
    """
    Both sides of the ternary hom-Nambu identity on the 5-tuple `xs`:

        [a(x1), b(x2), [x3, x4, x5]]
        = [[x1, x2, x3], a(x4), b(x5)] + [a(x3), [x1, x2, x4], b(x5)]
          + [a(x3), b(x4), [x1, x2, x5]]

    Args:
        A (TernaryHomAlgebra): The algebra.
        xs (tuple): Five elements or basis keys.
        plain (bool, optional): Use identity twists (the untwisted Nambu
            identity on A's bracket). Defaults to False.

    Returns:
        tuple: `(lhs, rhs)` as AlgebraElements.
    """
    x1, x2, x3, x4, x5 = (as_element(x) for x in xs)
    if plain:
        alpha = beta = IdentityMap()
    else:
        alpha, beta = A.alpha, A.beta
    bracket = A.bracket

    lhs = bracket(alpha(x1), beta(x2), bracket(x3, x4, x5))
    a3 = alpha(x3)
    rhs = bracket(bracket(x1, x2, x3), alpha(x4), beta(x5)) + \
        bracket(a3, bracket(x1, x2, x4), beta(x5)) + \
        bracket(a3, beta(x4), bracket(x1, x2, x5))
    return lhs, rhs


def hom_nambu_residual(A, xs, plain=False):
    """
    `lhs - rhs` of the hom-Nambu identity, see `hom_nambu_sides`.
    """
    lhs, rhs = hom_nambu_sides(A, xs, plain=plain)
    return lhs - rhs
