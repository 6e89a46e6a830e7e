from homnambu.homalgebra._keys import BasisKey, Carrier, Coordinate  # noqa
from homnambu.homalgebra._keys import Generator, Monomial, parse_key  # noqa
from homnambu.homalgebra._keys import GENERATOR_KINDS, MONOMIAL_NAMES  # noqa
from homnambu.homalgebra._element import AlgebraElement, as_element  # noqa
from homnambu.homalgebra._maps import LinearMap, IdentityMap  # noqa
from homnambu.homalgebra._maps import MatrixMap, SubstitutionMap  # noqa
from homnambu.homalgebra._maps import ScalingMap, TableMap  # noqa
from homnambu.homalgebra._maps import CoefficientMap, scalar_power  # noqa
from homnambu.homalgebra._maps import element_to_poly  # noqa
from homnambu.homalgebra._maps import poly_to_element  # noqa
from homnambu.homalgebra._algebra import TernaryHomAlgebra  # noqa
from homnambu.homalgebra._algebra import bracket_eval  # noqa
from homnambu.homalgebra._algebra import hom_nambu_residual  # noqa
from homnambu.homalgebra._algebra import hom_nambu_sides  # noqa
from homnambu.homalgebra._checks import Report, Violation  # noqa
from homnambu.homalgebra._checks import REPORT_SCHEMA, PERMUTATIONS  # noqa
from homnambu.homalgebra._checks import check_skew_symmetry  # noqa
from homnambu.homalgebra._checks import check_hom_nambu_identity  # noqa
from homnambu.homalgebra._checks import check_morphism  # noqa
from homnambu.homalgebra._checks import check_multiplicative  # noqa
from homnambu.homalgebra._checks import twist_by_endomorphism  # noqa
