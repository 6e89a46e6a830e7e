"""
The ternary Virasoro-Witt algebra on generators Q_n, R_n (n in Z):

    [Q_k, Q_m, Q_n] = (k - m)(m - n)(k - n) R_{k+m+n}
    [Q_k, Q_m, R_n] = (k - m)(Q_{k+m+n} + z n R_{k+m+n})
    [Q_k, R_m, R_n] = (n - m) R_{k+m+n}
    [R_k, R_m, R_n] = 0

Other argument orders follow by skew-symmetry. It is Nambu-Lie exactly when
z = 2i or z = -2i.
"""
import logging

from homnambu.errors import InvalidParameterError
from homnambu.homalgebra import (AlgebraElement, Carrier, Generator,
                                 ScalingMap, TernaryHomAlgebra, as_element)
from homnambu.scalars import (CoefficientRing, I, MultiPoly, TruncSeries,
                              is_scalar, parse_scalar)

_log = logging.getLogger(__name__)

VW_CARRIER = Carrier("generator")
NAMBU_LIE_Z = (2 * I, -2 * I)


def _canonical(keys):
    """
    Stable sort by kind (Q before R) and the sign of that permutation.
    """
    order = sorted(range(3), key=lambda j: keys[j].kind)
    inversions = sum(1 for a in range(3) for b in range(a + 1, 3)
                     if order[a] > order[b])
    return [keys[j] for j in order], -1 if inversions % 2 else 1


def _vw_rule(k1, k2, k3, z):
    (a, b, c), sign = _canonical((k1, k2, k3))
    k, m, n = a.index, b.index, c.index
    total = k + m + n
    pattern = a.kind + b.kind + c.kind

    if pattern == "QQQ":
        terms = {Generator("R", total): (k - m) * (m - n) * (k - n)}
    elif pattern == "QQR":
        terms = {Generator("Q", total): k - m,
                 Generator("R", total): (k - m) * z * n}
    elif pattern == "QRR":
        terms = {Generator("R", total): n - m}
    else:
        terms = {}
    return AlgebraElement({key: c * sign for key, c in terms.items()})


def vw_bracket(g1, g2, g3, z):
    """
    The ternary Virasoro-Witt bracket, extended trilinearly.

    Args:
        g1, g2, g3 (Generator|AlgebraElement): Arguments.
        z (scalar): The algebra constant.

    Returns:
        AlgebraElement: The bracket; every term has index k + m + n.
    """
    x, y, w = (as_element(g) for g in (g1, g2, g3))
    result = AlgebraElement.zero()
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            for k3, c3 in w.terms.items():
                result = result + _vw_rule(k1, k2, k3, z) * (c1 * c2 * c3)
    return result


def _as_z(z):
    if isinstance(z, str):
        return parse_scalar(z)
    return z


def vw_algebra(z=2 * I):
    """
    The ternary Virasoro-Witt algebra for the constant `z` (scalar or text).
    """
    z = _as_z(z)

    def rule(k1, k2, k3):
        return _vw_rule(k1, k2, k3, z)

    return TernaryHomAlgebra(f"vw(z={z})", VW_CARRIER, rule)


def is_nambu_lie_z(z):
    return _as_z(z) in NAMBU_LIE_Z


def rho_q(q):
    """
    The graded scaling endomorphism `Q_n -> q^n Q_n`, `R_n -> q^n R_n`.

    Args:
        q (scalar|str|MultiPoly|TruncSeries): A nonzero scalar (or its text),
            "laurent" for the invertible variable q, or a series with a unit
            constant term.

    Returns:
        ScalingMap: rho_q, carrying the ring its images live in.

    Raises:
        InvalidParameterError: For q = 0 or a series without constant term.
    """
    if isinstance(q, str):
        if q.strip() == "laurent":
            ring = CoefficientRing.poly(1, (True,), ("q",))
            return ScalingMap(ring.variable(0), ring, name="rho_q")
        q = parse_scalar(q)

    if is_scalar(q):
        if not q:
            raise InvalidParameterError("q = 0 is not invertible")
        return ScalingMap(q, CoefficientRing.scalar(), name=f"rho_q(q={q})")

    if isinstance(q, TruncSeries):
        if not q.constant_term():
            raise InvalidParameterError(f"Series q = {q} is not a unit")
        ring = CoefficientRing.series(q.arity, q.order)
        return ScalingMap(q, ring, name=f"rho_q(q={q})")

    if isinstance(q, MultiPoly):
        if len(q.terms) != 1 or not all(q.laurent):
            raise InvalidParameterError(f"Polynomial q = {q} is not a unit")
        ring = CoefficientRing.poly(q.arity, q.laurent, ("q",) * q.arity
                                    if q.arity == 1 else None)
        return ScalingMap(q, ring, name="rho_q")

    raise InvalidParameterError(f"Unsupported q value {q!r}")
