"""
Default finite samples. The identities are multilinear, so basis samples
stand in for the infinite-dimensional carriers.
"""
from itertools import combinations_with_replacement, product

from homnambu.homalgebra import AlgebraElement, Coordinate, Generator, Monomial
from homnambu.homalgebra import GENERATOR_KINDS, parse_key

DEFAULT_VW_RANGE = (-2, 2)
DEFAULT_JACOBIAN_DEGREE = 3


def cross4_basis():
    return [Coordinate(i) for i in range(1, 5)]


def cross4_triples():
    return list(product(cross4_basis(), repeat=3))


def cross4_counterexample_tuple():
    """
    (e1, e2, e3, e4, e1 + e2 + e4).
    """
    e = cross4_basis()
    return (e[0], e[1], e[2], e[3],
            AlgebraElement({e[0]: 1, e[1]: 1, e[3]: 1}))


def cross4_tuples(curated=False):
    """
    All 1024 basis 5-tuples, followed by the rotation counterexample tuple
    when `curated` is set.
    """
    tuples = list(product(cross4_basis(), repeat=5))
    if curated:
        tuples.append(cross4_counterexample_tuple())
    return tuples


def jacobian_monomials(degree=DEFAULT_JACOBIAN_DEGREE):
    """
    All monomials in x1, x2, x3 of total degree at most `degree`, 20 for the
    default degree 3.
    """
    monomials = [Monomial((a, b, c))
                 for a in range(degree + 1)
                 for b in range(degree + 1 - a)
                 for c in range(degree + 1 - a - b)]
    return sorted(monomials, key=lambda m: m.sort_key())


def jacobian_triples(degree=DEFAULT_JACOBIAN_DEGREE):
    """
    Unordered monomial triples; the skew-symmetry checker permutes them.
    """
    return list(combinations_with_replacement(jacobian_monomials(degree), 3))


_JACOBIAN_TUPLES = (
    ("x1", "x2", "x3^3", "x1^2", "x2*x3"),
    ("x1", "x2", "x3", "x1", "x2"),
    ("x1^2", "x2^2", "x3^2", "x1*x2", "x2*x3"),
    ("x1*x3", "x2", "x3^2", "x1^2*x2", "x3"),
    ("x2^3", "x1*x2*x3", "x1", "x3^2", "x1^2"),
    ("x1^3", "x2^2*x3", "x3", "x1*x2", "x2"),
    ("x3", "x1*x3", "x2^2", "x1^2*x3", "x1*x2^2"),
    ("x1*x2", "x2*x3", "x1*x3", "x1", "x2^3"),
)


def jacobian_tuples():
    """
    Curated monomial 5-tuples of degree at most 3. The first one is the
    tuple on which a translation in x3 breaks the plain Nambu identity.
    """
    return [tuple(parse_key(text) for text in row) for row in _JACOBIAN_TUPLES]


def vw_generators(index_range=DEFAULT_VW_RANGE):
    low, high = index_range
    return [Generator(kind, n) for kind in GENERATOR_KINDS
            for n in range(low, high + 1)]


def vw_triples(index_range=DEFAULT_VW_RANGE):
    return list(product(vw_generators(index_range), repeat=3))


def vw_tuples(index_range=DEFAULT_VW_RANGE):
    """
    All generator 5-tuples with indices in `index_range`, of every kind
    pattern: `(2 * (high - low + 1)) ** 5` tuples, 10^5 for [-2, 2].
    """
    return list(product(vw_generators(index_range), repeat=5))
