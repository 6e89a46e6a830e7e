"""
Exact scalars. Rationals are plain `int` or `fractions.Fraction`; Gaussian
rationals `a + b*i` with rational `a`, `b` are `GaussianRational`. Results
with a vanishing imaginary part are demoted back to rationals, so `2i * 2i`
is the rational `-4`.
"""
import logging
import operator
from fractions import Fraction

from homnambu.errors import FormatError, ScalarDivisionError

_log = logging.getLogger(__name__)


def is_scalar(x):
    """
    Test whether `x` is an exact scalar (int, Fraction or GaussianRational).

    Args:
        x (object): Test subject.

    Returns:
        bool: True for exact scalars. Booleans are rejected.
    """
    if isinstance(x, bool):
        return False
    return isinstance(x, (int, Fraction, GaussianRational))


def _make(real, imag):
    if imag == 0:
        return real
    return GaussianRational(real, imag)


class GaussianRational:
    """
    An element `real + imag*i` of the Gaussian rationals Q(i).
    """
    __slots__ = ("_real", "_imag")

    def __init__(self, real=0, imag=0):
        self._real = Fraction(real)
        self._imag = Fraction(imag)

    @property
    def real(self):
        return self._real

    @property
    def imag(self):
        return self._imag

    @staticmethod
    def _parts(other):
        if isinstance(other, GaussianRational):
            return other._real, other._imag
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return other, 0
        return None

    def conjugate(self):
        return GaussianRational(self._real, -self._imag)

    def norm(self):
        return self._real * self._real + self._imag * self._imag

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return _make(self._real + parts[0], self._imag + parts[1])

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return _make(self._real - parts[0], self._imag - parts[1])

    def __rsub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return _make(parts[0] - self._real, parts[1] - self._imag)

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        a, b = self._real, self._imag
        c, d = parts
        return _make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        c, d = parts
        norm = c * c + d * d
        if norm == 0:
            raise ScalarDivisionError(f"Division of {self} by zero")
        a, b = self._real, self._imag
        return _make((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return GaussianRational(*parts) / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (1 / self) ** -exponent
        result, base = Fraction(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self._real, -self._imag)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self._real) or bool(self._imag)

    def __eq__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return self._real == parts[0] and self._imag == parts[1]

    def __hash__(self):
        if self._imag == 0:
            return hash(self._real)
        return hash((self._real, self._imag))

    def __repr__(self):
        return f"GaussianRational('{self}')"

    def __str__(self):
        return format_scalar(self)


I = GaussianRational(0, 1)

_OPERATIONS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def reciprocal(x):
    """
    Exact multiplicative inverse of a nonzero scalar.

    Raises:
        ScalarDivisionError: When `x` is zero.
    """
    if not x:
        raise ScalarDivisionError("Zero has no inverse")
    if isinstance(x, GaussianRational):
        return 1 / x
    return Fraction(1) / x


def scalar_arith(a, b, op):
    """
    Exact field arithmetic on two scalars.

    Args:
        a (int|Fraction|GaussianRational): Left operand.
        b (int|Fraction|GaussianRational): Right operand.
        op (str): One of "add", "sub", "mul" or "div".

    Returns:
        int|Fraction|GaussianRational: Result in canonical reduced form.

    Raises:
        ScalarDivisionError: When `op` is "div" and `b` is zero.
        ValueError: When `op` is not a known operation.
    """
    try:
        function = _OPERATIONS[op]
    except KeyError as e:
        raise ValueError(f"Unknown scalar operation '{op}'") from e

    if op == "div":
        if not b:
            raise ScalarDivisionError(f"Division of {a} by zero")
        if not isinstance(a, GaussianRational) and \
                not isinstance(b, GaussianRational):
            return Fraction(a) / b

    return function(a, b)


def format_scalar(x):
    """
    Canonical text of a scalar: "3", "-3/2", "2i", "-i", "1/2+3i".
    """
    if not isinstance(x, GaussianRational):
        return str(Fraction(x))

    real, imag = x.real, x.imag
    if imag == 0:
        return str(real)
    if imag == 1:
        imag_text = "i"
    elif imag == -1:
        imag_text = "-i"
    else:
        imag_text = f"{imag}i"

    if real == 0:
        return imag_text
    if imag > 0:
        return f"{real}+{imag_text}"
    return f"{real}{imag_text}"


def _parse_rational(text, original):
    if text in ("", "+"):
        return Fraction(1)
    if text == "-":
        return Fraction(-1)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError(f"Cannot parse scalar '{original}'") from e


def parse_scalar(text):
    """
    Parse the canonical scalar text produced by `format_scalar`. Rationals
    like "3/2" and Gaussian rationals like "2i", "-i", "1/2-3i" are accepted.

    Args:
        text (str): Scalar text. Whitespace is ignored.

    Returns:
        Fraction|GaussianRational: Parsed scalar.

    Raises:
        FormatError: When the text is not a scalar.
    """
    original = text
    text = "".join(str(text).split())
    if not text:
        raise FormatError("Cannot parse an empty scalar")

    if not text.endswith("i"):
        return _parse_rational(text, original)

    body = text[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        real = _parse_rational(body[:split], original)
        imag = _parse_rational(body[split:], original)
    else:
        real = Fraction(0)
        imag = _parse_rational(body, original)

    _log.debug(f"Parsed scalar '{original}' as {real} + {imag}*i")
    return _make(real, imag)
