from homnambu.config._config import ENVIRONMENT_VARIABLE  # noqa
from homnambu.config._config import from_dict, from_env, from_url  # noqa
from homnambu.config._config import get_hook, load, merge  # noqa
from homnambu.config._schema import COMMANDS, FORMATS, RUN_CONFIG  # noqa
