from homnambu.deformation._family import MultiIndex, DeformationFamily  # noqa
from homnambu.deformation._family import DeformationReport  # noqa
from homnambu.deformation._family import DegreeRow, OrderedResidual  # noqa
from homnambu.deformation._family import DEFORMATION_REPORT_SCHEMA  # noqa
from homnambu.deformation._family import eval_deformed_bracket  # noqa
from homnambu.deformation._family import verify_deformation  # noqa
from homnambu.deformation._family import series_coefficient  # noqa
from homnambu.deformation._family import split_by_index  # noqa
from homnambu.deformation._family import triples_from_tuples  # noqa
from homnambu.deformation._builders import DEFAULT_ORDERS  # noqa
from homnambu.deformation._builders import build_qvw_deformation  # noqa
from homnambu.deformation._builders import build_cross_deformation  # noqa
from homnambu.deformation._builders import build_jacobian_deformation  # noqa
from homnambu.deformation._builders import jacobian_parameter_shape  # noqa
from homnambu.deformation._builders import jacobian_parameter_names  # noqa
from homnambu.deformation._builders import families, family_creator  # noqa
from homnambu.deformation._builders import add_family, remove_family  # noqa
from homnambu.deformation._builders import create_family  # noqa
from homnambu.deformation._serialize import dumps, loads, save, load  # noqa
from homnambu.deformation._serialize import MIMETYPE  # noqa
