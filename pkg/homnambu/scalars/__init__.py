from homnambu.scalars._gaussian import GaussianRational, I, is_scalar  # noqa
from homnambu.scalars._gaussian import format_scalar, parse_scalar  # noqa
from homnambu.scalars._gaussian import reciprocal, scalar_arith  # noqa
from homnambu.scalars._poly import MultiPoly, default_names  # noqa
from homnambu.scalars._poly import poly_arith, poly_partial  # noqa
from homnambu.scalars._poly import poly_substitute, univariate_gcd  # noqa
from homnambu.scalars._series import TruncSeries, series_names  # noqa
from homnambu.scalars._series import series_cos, series_sin  # noqa
from homnambu.scalars._series import series_invert, series_mul  # noqa
from homnambu.scalars._trig import TRIG_NAMES, TrigRingElem  # noqa
from homnambu.scalars._trig import trig_reduce  # noqa
from homnambu.scalars._rings import RING_KINDS, CoefficientRing  # noqa
from homnambu.scalars._text import format_coefficient, join_terms  # noqa
