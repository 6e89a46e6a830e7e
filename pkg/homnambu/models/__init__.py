from homnambu.models._cross4 import CROSS4_CARRIER, EndoMatrix, Theta  # noqa
from homnambu.models._cross4 import check_cross_endo_equations  # noqa
from homnambu.models._cross4 import cross4_algebra, cross4_bracket  # noqa
from homnambu.models._cross4 import levi_civita4, rho_theta  # noqa
from homnambu.models._cross4 import rotation_13, rotation_24  # noqa
from homnambu.models._jacobian import JACOBIAN_CARRIER, GammaMap  # noqa
from homnambu.models._jacobian import check_unimodular, gamma_endo  # noqa
from homnambu.models._jacobian import jacobian3_algebra  # noqa
from homnambu.models._jacobian import jacobian3_bracket  # noqa
from homnambu.models._jacobian import jacobian3_det  # noqa
from homnambu.models._virasoro import NAMBU_LIE_Z, VW_CARRIER  # noqa
from homnambu.models._virasoro import is_nambu_lie_z, rho_q  # noqa
from homnambu.models._virasoro import vw_algebra, vw_bracket  # noqa
from homnambu.models._samples import DEFAULT_VW_RANGE  # noqa
from homnambu.models._samples import DEFAULT_JACOBIAN_DEGREE  # noqa
from homnambu.models._samples import cross4_basis, cross4_triples  # noqa
from homnambu.models._samples import cross4_tuples  # noqa
from homnambu.models._samples import cross4_counterexample_tuple  # noqa
from homnambu.models._samples import jacobian_monomials  # noqa
from homnambu.models._samples import jacobian_triples  # noqa
from homnambu.models._samples import jacobian_tuples  # noqa
from homnambu.models._samples import vw_generators, vw_triples  # noqa
from homnambu.models._samples import vw_tuples  # noqa
from homnambu.models._registry import Cross4Model, Jacobian3Model  # noqa
from homnambu.models._registry import VirasoroWittModel  # noqa
from homnambu.models._registry import add_model, create_model  # noqa
from homnambu.models._registry import model_creator, models  # noqa
from homnambu.models._registry import parse_q, parse_range  # noqa
from homnambu.models._registry import remove_model  # noqa
from homnambu.models._counterexamples import COUNTEREXAMPLE_SCHEMA  # noqa
from homnambu.models._counterexamples import Counterexample  # noqa
from homnambu.models._counterexamples import counterexamples  # noqa
from homnambu.models._counterexamples import cross4_theta_counterexample  # noqa
from homnambu.models._counterexamples import jacobian_k4_counterexample  # noqa
