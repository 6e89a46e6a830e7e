from homnambu.resource.parsers._parsers import add_parser, remove_parser  # noqa
from homnambu.resource.parsers._parsers import get_parser, guess_type  # noqa
from homnambu.resource.parsers._parsers import parsers, suffixes  # noqa

from homnambu.resource.parsers import yaml  # noqa
