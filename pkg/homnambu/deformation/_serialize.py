"""
Text format of deformation families (suffix `.hnd`):

    homnambu-deformation 1
    family cross4
    base cross4(determinant)
    carrier coordinate:4
    params {}
    arity 2
    order 1
    basis e1 e2 e3 e4
    component 0 0
    bracket e1 e2 e3 = e4:1
    alpha e1 = e1:1
    ...
    component 0 1
    bracket e1 e2 e3 = e2:-1
    ...
    end

Components are listed by ascending multi-index, bracket lines by basis
triple in basis order, then alpha and beta lines by basis key. Only nonzero
values are written; `params` is one line of JSON with sorted keys.
"""
import json
import logging
from itertools import product

from homnambu.deformation._family import DeformationFamily, MultiIndex
from homnambu.errors import CarrierMismatchError, FormatError
from homnambu.homalgebra import (AlgebraElement, Carrier, TableMap,
                                 TernaryHomAlgebra, parse_key)
from homnambu.resource import open_
from homnambu.resource.parsers import add_parser
from homnambu.scalars import (CoefficientRing, TruncSeries, format_scalar,
                              parse_scalar)

_log = logging.getLogger(__name__)

MAGIC = "homnambu-deformation"
FORMAT_VERSION = 1
MIMETYPE = "text/x-homnambu-deformation"


def _format_element(element):
    return " ".join(f"{key}:{format_scalar(value)}"
                    for key, value in element.items())


def _parse_element(text, where):
    terms = {}
    for pair in text.split():
        key, sep, value = pair.partition(":")
        if not sep:
            raise FormatError(f"{where}: expected 'key:coefficient', got "
                              f"'{pair}'")
        terms[parse_key(key)] = parse_scalar(value)
    return AlgebraElement(terms)


def dumps(F):
    """
    Serialize the components of a family on its tabulated basis.

    Args:
        F (DeformationFamily): Family with a nonempty `basis`.

    Returns:
        str: The text form, newline terminated.
    """
    if not F.basis:
        raise FormatError(f"Family '{F}' has no tabulated basis")
    lines = [
        f"{MAGIC} {FORMAT_VERSION}",
        f"family {F.name}",
        f"base {F.base}",
        f"carrier {F.base.carrier}",
        f"params {json.dumps(F.params, sort_keys=True)}",
        f"arity {F.arity}",
        f"order {F.order}",
        "basis " + " ".join(str(key) for key in F.basis),
    ]
    triples = list(product(F.basis, repeat=3))
    for index, table in F.components(triples, F.basis).items():
        lines.append(f"component {index}")
        for triple in triples:
            value = table["bracket"].get(triple)
            if value:
                keys = " ".join(str(key) for key in triple)
                lines.append(f"bracket {keys} = {_format_element(value)}")
        for part in ("alpha", "beta"):
            for key in F.basis:
                value = table[part].get(key)
                if value:
                    lines.append(f"{part} {key} = {_format_element(value)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


_HEADER = ("family", "base", "carrier", "params", "arity", "order", "basis")


def _read_header(lines):
    if not lines or lines[0].split() != [MAGIC, str(FORMAT_VERSION)]:
        raise FormatError(f"Not a version {FORMAT_VERSION} deformation file")
    header = {}
    for number, field in enumerate(_HEADER, start=2):
        try:
            line = lines[number - 1]
        except IndexError as e:
            raise FormatError(f"Missing header field '{field}'") from e
        name, _, value = line.partition(" ")
        if name != field:
            raise FormatError(f"line {number}: expected '{field}', got "
                              f"'{name}'")
        header[field] = value.strip()
    return header


def loads(text):
    """
    Rebuild a family from its text form. The loaded family is defined by
    its tables: bracket triples inside the basis not listed are zero, keys
    outside the basis raise CarrierMismatchError.

    Raises:
        FormatError: On malformed text.
    """
    lines = [line.rstrip("\n") for line in text.splitlines()]
    header = _read_header(lines)
    try:
        params = json.loads(header["params"])
        arity = int(header["arity"])
        order = int(header["order"])
    except ValueError as e:
        raise FormatError(f"Bad deformation header: {e}") from e
    carrier = Carrier.parse(header["carrier"])
    basis = [parse_key(key) for key in header["basis"].split()]
    known = set(basis)

    # {part: {key: {exponents: {basis key: scalar}}}}
    tables = {"bracket": {}, "alpha": {}, "beta": {}}
    index = None
    body = lines[len(_HEADER) + 1:]
    if not body or body[-1] != "end":
        raise FormatError("Deformation file does not end with 'end'")

    for number, line in enumerate(body[:-1], start=len(_HEADER) + 2):
        where = f"line {number}"
        kind, _, rest = line.partition(" ")
        if kind == "component":
            try:
                index = MultiIndex(int(v) for v in rest.split())
            except ValueError as e:
                raise FormatError(f"{where}: bad multi-index") from e
            if len(index) != arity or index.degree > order:
                raise FormatError(f"{where}: multi-index {index} outside "
                                  f"arity {arity} and order {order}")
            continue
        if kind not in tables:
            raise FormatError(f"{where}: unknown entry '{kind}'")
        if index is None:
            raise FormatError(f"{where}: entry before the first component")

        keys, sep, value = rest.partition(" = ")
        if not sep:
            raise FormatError(f"{where}: missing ' = '")
        keys = tuple(parse_key(k) for k in keys.split())
        if len(keys) != (3 if kind == "bracket" else 1) or \
                not set(keys) <= known:
            raise FormatError(f"{where}: bad {kind} arguments")
        key = keys if kind == "bracket" else keys[0]

        per_index = tables[kind].setdefault(key, {})
        for basis_key, coefficient in \
                _parse_element(value, where).terms.items():
            per_index.setdefault(basis_key, {})[tuple(index)] = coefficient

    def to_element(entry):
        return AlgebraElement({key: TruncSeries(terms, arity, order)
                               for key, terms in entry.items()})

    brackets = {triple: to_element(entry)
                for triple, entry in tables["bracket"].items()}
    ring = CoefficientRing.series(arity, order)
    zero = AlgebraElement.zero()
    table_map = {"alpha": {}, "beta": {}}
    for part in table_map:
        for key in basis:
            table_map[part][key] = to_element(tables[part].get(key, {}))
    alpha = TableMap(table_map["alpha"], ring, name="alpha_t")
    beta = alpha if table_map["beta"] == table_map["alpha"] else \
        TableMap(table_map["beta"], ring, name="beta_t")

    def rule(k1, k2, k3):
        for key in (k1, k2, k3):
            if key not in known:
                raise CarrierMismatchError(f"Key '{key}' is outside the "
                                           f"tabulated basis")
        return brackets.get((k1, k2, k3), zero)

    deformed = TernaryHomAlgebra(f"{header['family']}[loaded]", carrier,
                                 rule, alpha, beta, ring)
    family = DeformationFamily(header["family"], None, deformed, arity,
                               order, params, basis=basis)
    family.base = family.specialize(name=header["base"])
    _log.debug(f"Loaded deformation family {family}",
               extra={"family": family.name, "components": len(brackets)})
    return family


def save(F, url):
    """
    Write `dumps(F)` to a local path or file URL.
    """
    with open_(url, "w") as f:
        f.write(dumps(F))
    _log.info(f"Saved deformation family {F} to '{url}'",
              extra={"family": F.name, "url": str(url)})


def _parse_file(f):
    return loads(f.read())


def load(url):
    """
    Read a family written by `save`.
    """
    with open_(url) as f:
        return _parse_file(f)


add_parser(MIMETYPE, _parse_file, ".hnd")
