"""
The cross-product algebra on K^4: the bracket of three vectors is the formal
4x4 determinant with the basis vectors in the last column. Its rotation
endomorphisms rho_theta act by one rotation in the e1e3-plane and one in the
e2e4-plane.
"""
import logging
from collections import namedtuple
from itertools import permutations, product

from homnambu.decorators import timing
from homnambu.errors import FormatError, InvalidParameterError
from homnambu.homalgebra import (AlgebraElement, Carrier, Coordinate,
                                 MatrixMap, Report, TernaryHomAlgebra,
                                 Violation, as_element)
from homnambu.scalars import (CoefficientRing, TrigRingElem, parse_scalar,
                              series_cos, series_sin)

_log = logging.getLogger(__name__)

DIMENSION = 4
CROSS4_CARRIER = Carrier("coordinate", DIMENSION)


def levi_civita4(i, j, k, l):
    """
    Sign of the permutation `(i, j, k, l)` of `(1, 2, 3, 4)`, 0 on repeats.
    """
    indices = (i, j, k, l)
    if len(set(indices)) != 4:
        return 0
    inversions = sum(1 for a in range(4) for b in range(a + 1, 4)
                     if indices[a] > indices[b])
    return -1 if inversions % 2 else 1


def _coordinates(x):
    x = as_element(x)
    return [x.coefficient(Coordinate(i)) for i in range(1, DIMENSION + 1)]


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _cross_determinant(x, y, z):
    columns = [_coordinates(v) for v in (x, y, z)]
    terms = {}
    for s in range(DIMENSION):
        # cofactor of the basis vector e_{s+1} in the last column
        minor = [[columns[c][r] for c in range(3)]
                 for r in range(DIMENSION) if r != s]
        sign = 1 if (s + 1 + DIMENSION) % 2 == 0 else -1
        terms[Coordinate(s + 1)] = _det3(minor) * sign
    return AlgebraElement(terms)


def _cross_epsilon(x, y, z):
    x, y, z = (_coordinates(v) for v in (x, y, z))
    terms = {}
    for p, q, r in permutations(range(1, DIMENSION + 1), 3):
        s = 10 - p - q - r
        coefficient = x[p - 1] * y[q - 1] * z[r - 1]
        if coefficient:
            key = Coordinate(s)
            sign = levi_civita4(p, q, r, s)
            terms[key] = terms.get(key, 0) + coefficient * sign
    return AlgebraElement(terms)


_CROSS_METHODS = {
    "determinant": _cross_determinant,
    "epsilon": _cross_epsilon,
}


def cross4_bracket(x, y, z, method="determinant"):
    """
    The cross product of three vectors of K^4.

    Args:
        x, y, z (AlgebraElement|Coordinate): Vectors in the basis e1..e4.
        method (str, optional): "determinant" for cofactor expansion along
            the basis column, "epsilon" for the contraction
            `eps(p, q, r, s) x^p y^q z^r e_s`. Defaults to "determinant".

    Returns:
        AlgebraElement: The bracket `[x, y, z]`.
    """
    try:
        function = _CROSS_METHODS[method]
    except KeyError as e:
        raise InvalidParameterError(f"Unknown cross product method "
                                    f"'{method}'") from e
    return function(x, y, z)


def cross4_algebra(method="determinant"):
    """
    The ternary Nambu-Lie algebra of the cross product on K^4.
    """
    def rule(k1, k2, k3):
        return cross4_bracket(k1, k2, k3, method=method)

    return TernaryHomAlgebra("cross4", CROSS4_CARRIER, rule)


class EndoMatrix:
    """
    A 4x4 matrix of ring entries acting by `rho(e_l) = sum_i a[i][l] e_i`.
    """
    def __init__(self, entries, ring=None):
        self.entries = tuple(tuple(row) for row in entries)
        self.ring = ring or CoefficientRing.scalar()
        if len(self.entries) != DIMENSION or \
                any(len(row) != DIMENSION for row in self.entries):
            raise InvalidParameterError("Endomorphism matrices are 4x4")

    @classmethod
    def identity(cls, ring=None):
        ring = ring or CoefficientRing.scalar()
        return cls([[ring.lift(1 if i == l else 0) for l in range(DIMENSION)]
                    for i in range(DIMENSION)], ring)

    def entry(self, i, l):
        """
        Coefficient of `e_i` in `rho(e_l)`, 1-based.
        """
        return self.entries[i - 1][l - 1]

    def __mul__(self, other):
        if isinstance(other, EndoMatrix):
            return EndoMatrix(
                [[sum((self.entries[i][k] * other.entries[k][l]
                       for k in range(DIMENSION)), self.ring.lift(0))
                  for l in range(DIMENSION)] for i in range(DIMENSION)],
                self.ring)
        return EndoMatrix([[a * other for a in row] for row in self.entries],
                          self.ring)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, EndoMatrix) and \
            self.entries == other.entries

    __hash__ = None

    def to_map(self, name="rho"):
        return MatrixMap(self.entries, ring=self.ring, name=name)

    def __str__(self):
        return "\n".join("  ".join(str(a) for a in row)
                         for row in self.entries)


_Theta = namedtuple("Theta", ["mode", "c1", "s1", "c2", "s2", "order"])


class Theta(_Theta):
    """
    Cosines and sines of the two rotation angles, in one of three modes:
    "symbolic" (trigonometric quotient ring), "series" (truncated power
    series in t1, t2) or "exact" (rationals with c^2 + s^2 = 1).
    """
    __slots__ = ()

    @classmethod
    def symbolic(cls):
        return cls("symbolic", TrigRingElem.cos(1), TrigRingElem.sin(1),
                   TrigRingElem.cos(2), TrigRingElem.sin(2), None)

    @classmethod
    def series(cls, order):
        return cls("series", series_cos(0, order, 2), series_sin(0, order, 2),
                   series_cos(1, order, 2), series_sin(1, order, 2), order)

    @classmethod
    def exact(cls, c1, s1, c2, s2):
        """
        Raises:
            InvalidParameterError: When `c^2 + s^2 != 1` for an angle.
        """
        for angle, c, s in ((1, c1, s1), (2, c2, s2)):
            if c * c + s * s != 1:
                raise InvalidParameterError(
                    f"cos^2 + sin^2 of angle {angle} is {c * c + s * s}, "
                    f"not 1")
        return cls("exact", c1, s1, c2, s2, None)

    @classmethod
    def parse(cls, text):
        """
        Parse "symbolic", "series:N" or "exact:c1,s1,c2,s2".

        Raises:
            FormatError: On malformed text.
        """
        mode, _, argument = str(text).strip().partition(":")
        if mode == "symbolic" and not argument:
            return cls.symbolic()
        if mode == "series":
            try:
                return cls.series(int(argument))
            except ValueError as e:
                raise FormatError(f"Bad series order in '{text}'") from e
        if mode == "exact":
            values = [parse_scalar(v) for v in argument.split(",")]
            if len(values) != 4:
                raise FormatError(f"Exact theta needs c1,s1,c2,s2, got "
                                  f"'{text}'")
            return cls.exact(*values)
        raise FormatError(f"Unknown theta mode in '{text}'")

    @property
    def ring(self):
        if self.mode == "symbolic":
            return CoefficientRing.trig()
        if self.mode == "series":
            return CoefficientRing.series(2, self.order)
        return CoefficientRing.scalar()

    def inverse(self):
        """
        The angles negated.
        """
        return self._replace(s1=-self.s1, s2=-self.s2)

    def describe(self):
        if self.mode == "series":
            return f"series:{self.order}"
        if self.mode == "exact":
            return "exact:" + ",".join(str(v) for v in
                                       (self.c1, self.s1, self.c2, self.s2))
        return "symbolic"


def _rotation(theta, first, second, c, s):
    ring = theta.ring
    matrix = [[ring.lift(1 if i == l else 0) for l in range(DIMENSION)]
              for i in range(DIMENSION)]
    matrix[first][first] = c
    matrix[second][first] = s
    matrix[first][second] = -s
    matrix[second][second] = c
    return EndoMatrix(matrix, ring)


def rotation_13(theta):
    """
    Rotation by the first angle in the e1e3-plane.
    """
    return _rotation(theta, 0, 2, theta.c1, theta.s1)


def rotation_24(theta):
    return _rotation(theta, 1, 3, theta.c2, theta.s2)


def rho_theta(theta):
    """
    The endomorphism matrix of a pair of rotations.

    Args:
        theta (Theta|str): Angle representation, or its text form.

    Returns:
        EndoMatrix: `rotation_13(theta) * rotation_24(theta)`.
    """
    if isinstance(theta, str):
        theta = Theta.parse(theta)
    return rotation_13(theta) * rotation_24(theta)


@timing("check_cross_endo_equations")
def check_cross_endo_equations(A):
    """
    Evaluate the 256 endomorphism equations of the cross product,

        eps(l, m, n, s) a[t][s] = eps(p, q, r, t) a[p][l] a[q][m] a[r][n],

    over 1 <= l, m, n, t <= 4.

    Args:
        A (EndoMatrix): Candidate endomorphism.

    Returns:
        Report: One violation per `(l, m, n, t)` with a nonzero residual.
    """
    ring = A.ring
    zero = ring.lift(0)
    indices = range(1, DIMENSION + 1)
    violations = []
    for l, m, n, t in product(indices, repeat=4):
        lhs = zero
        for s in indices:
            sign = levi_civita4(l, m, n, s)
            if sign:
                lhs = lhs + A.entry(t, s) * sign
        rhs = zero
        for p, q, r in permutations(indices, 3):
            sign = levi_civita4(p, q, r, t)
            if not sign:
                continue
            a_p, a_q, a_r = A.entry(p, l), A.entry(q, m), A.entry(r, n)
            if a_p and a_q and a_r:
                rhs = rhs + a_p * a_q * a_r * sign
        residual = lhs - rhs
        if residual:
            violations.append(Violation((l, m, n, t), residual,
                                        f"l,m,n,t = {l},{m},{n},{t}"))

    report = Report("cross_endo_equations", f"matrix[{ring.describe()}]",
                    DIMENSION ** 4, tuple(violations))
    _log.info(f"Cross product endomorphism equations: "
              f"{len(violations)} nonzero residuals of 256",
              extra={"violations": len(violations)})
    return report
