from homnambu.resource import parsers  # noqa
from homnambu.resource._load import load, local_path, open_  # noqa
