"""
Basis keys of the three carriers: coordinate vectors `e1..ed`, monomials
`x1^l*x2^m*x3^n` and graded generators `Q_n`, `R_n`.
"""
import re

from homnambu.errors import FormatError
from homnambu.scalars._text import descending_order, format_monomial

MONOMIAL_NAMES = ("x1", "x2", "x3")
GENERATOR_KINDS = ("Q", "R")


class BasisKey:
    """
    Common base of basis keys. Keys of one variant are totally ordered
    through `sort_key`; variants never mix inside one algebra.
    """
    __slots__ = ()

    def sort_key(self):
        raise NotImplementedError

    def __lt__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.sort_key() < other.sort_key()


class Coordinate(BasisKey):
    __slots__ = ("index",)

    def __init__(self, index):
        self.index = index

    def sort_key(self):
        return (self.index,)

    def __eq__(self, other):
        return type(other) is Coordinate and other.index == self.index

    def __hash__(self):
        return hash(("e", self.index))

    def __str__(self):
        return f"e{self.index}"

    def __repr__(self):
        return f"Coordinate({self.index})"


class Monomial(BasisKey):
    __slots__ = ("exponents",)

    def __init__(self, exponents):
        self.exponents = tuple(exponents)

    def degree(self):
        return sum(self.exponents)

    def sort_key(self):
        return descending_order(self.exponents)

    def __eq__(self, other):
        return type(other) is Monomial and other.exponents == self.exponents

    def __hash__(self):
        return hash(("x", self.exponents))

    def __str__(self):
        return format_monomial(self.exponents, MONOMIAL_NAMES) or "1"

    def __repr__(self):
        return f"Monomial({self.exponents})"


class Generator(BasisKey):
    __slots__ = ("kind", "index")

    def __init__(self, kind, index):
        self.kind = kind
        self.index = index

    def sort_key(self):
        return (GENERATOR_KINDS.index(self.kind), self.index)

    def __eq__(self, other):
        return type(other) is Generator and other.kind == self.kind \
            and other.index == self.index

    def __hash__(self):
        return hash((self.kind, self.index))

    def __str__(self):
        return f"{self.kind}_{self.index}"

    def __repr__(self):
        return f"Generator('{self.kind}', {self.index})"


_COORDINATE = re.compile(r"e(\d+)")
_GENERATOR = re.compile(r"([QR])_(-?\d+)")
_FACTOR = re.compile(r"x([123])(?:\^(\d+))?")


def parse_key(text):
    """
    Parse the text of a basis key: "e3", "Q_-1", "x1^2*x3" or "1".

    Raises:
        FormatError: When the text is not a basis key.
    """
    text = text.strip()
    match = _COORDINATE.fullmatch(text)
    if match:
        return Coordinate(int(match.group(1)))
    match = _GENERATOR.fullmatch(text)
    if match:
        return Generator(match.group(1), int(match.group(2)))
    if text == "1":
        return Monomial((0, 0, 0))

    exponents = [0, 0, 0]
    for factor in text.split("*"):
        match = _FACTOR.fullmatch(factor)
        if not match:
            raise FormatError(f"Cannot parse basis key '{text}'")
        exponents[int(match.group(1)) - 1] += int(match.group(2) or 1)
    return Monomial(exponents)


class Carrier:
    """
    Descriptor of the vector space an algebra lives on.

    Args:
        kind (str): "coordinate", "monomial" or "generator".
        dimension (int, optional): Number of coordinates for coordinate
            carriers, number of variables for monomial carriers.
    """
    __slots__ = ("kind", "dimension")

    _KEY_TYPES = {
        "coordinate": Coordinate,
        "monomial": Monomial,
        "generator": Generator,
    }

    def __init__(self, kind, dimension=None):
        if kind not in self._KEY_TYPES:
            raise FormatError(f"Unknown carrier kind '{kind}'")
        self.kind = kind
        self.dimension = dimension

    def admits(self, key):
        if type(key) is not self._KEY_TYPES[self.kind]:
            return False
        if self.kind == "coordinate":
            return 1 <= key.index <= self.dimension
        if self.kind == "monomial":
            return len(key.exponents) == self.dimension and \
                all(e >= 0 for e in key.exponents)
        return key.kind in GENERATOR_KINDS

    def __eq__(self, other):
        return isinstance(other, Carrier) and \
            (self.kind, self.dimension) == (other.kind, other.dimension)

    def __hash__(self):
        return hash((self.kind, self.dimension))

    def __str__(self):
        if self.dimension is None:
            return self.kind
        return f"{self.kind}:{self.dimension}"

    @classmethod
    def parse(cls, text):
        kind, _, dimension = text.partition(":")
        return cls(kind, int(dimension) if dimension else None)
