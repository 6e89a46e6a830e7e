"""
Shared rendering of sparse sums, used by polynomials, series and algebra
elements so that every report prints terms the same way.
"""


def format_coefficient(coefficient, body):
    """
    Render `coefficient * body`. An empty body or "1" prints the coefficient
    alone; compound coefficients are parenthesized.

    Args:
        coefficient (object): Any ring element with a readable `str`.
        body (str): Rendered basis element or monomial.

    Returns:
        str: Rendered term.
    """
    if not body or body == "1":
        return str(coefficient)
    if coefficient == 1:
        return body
    if coefficient == -1:
        return f"-{body}"

    text = str(coefficient)
    if "+" in text[1:] or "-" in text[1:] or " " in text:
        return f"({text})*{body}"
    return f"{text}*{body}"


def join_terms(parts):
    """
    Join rendered terms into a signed sum, "0" when there are none.
    """
    if not parts:
        return "0"

    text = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            text += f" - {part[1:]}"
        else:
            text += f" + {part}"
    return text


def format_monomial(exponents, names):
    factors = []
    for name, exponent in zip(names, exponents):
        if exponent == 1:
            factors.append(name)
        elif exponent:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors)


def descending_order(exponents):
    """
    Sort key listing monomials by descending total degree, then descending
    lexicographic exponents.
    """
    return (-sum(exponents), tuple(-e for e in exponents))


def ascending_order(exponents):
    """
    Sort key listing monomials by ascending total degree, earlier variables
    first within a degree.
    """
    return (sum(exponents), tuple(-e for e in exponents))


def format_terms(terms, names, key=descending_order):
    """
    Render a sparse `{exponents: coefficient}` association.

    Args:
        terms (dict): Exponent tuples mapped to nonzero coefficients.
        names ([str]): Variable names, one per exponent slot.
        key (function, optional): Sort key on exponent tuples. Defaults to
            `descending_order`.

    Returns:
        str: Rendered sum.
    """
    parts = [format_coefficient(terms[exponents],
                                format_monomial(exponents, names))
             for exponents in sorted(terms, key=key)]
    return join_terms(parts)
