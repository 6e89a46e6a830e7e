"""
Exceptions raised by homnambu. Every leaf class also derives from the closest
builtin exception, so callers may catch either.

Failing identities are never reported through exceptions; they are data in
`homnambu.homalgebra.Report`.
"""


class HomNambuError(Exception):
    pass


class ScalarDivisionError(HomNambuError, ZeroDivisionError):
    pass


class NonInvertibleError(HomNambuError, ZeroDivisionError):
    pass


class ArityError(HomNambuError, ValueError):
    pass


class CarrierMismatchError(HomNambuError, ValueError):
    pass


class NotUnimodularError(HomNambuError, ValueError):
    pass


class NotAnEndomorphismError(HomNambuError, ValueError):
    pass


class InvalidParameterError(HomNambuError, ValueError):
    pass


class FormatError(HomNambuError, ValueError):
    pass


class UnknownNameError(HomNambuError, KeyError):
    pass
