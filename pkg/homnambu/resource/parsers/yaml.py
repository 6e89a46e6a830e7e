from ruamel.yaml import YAML

from homnambu.resource.parsers._parsers import add_parser


def safe_load(stream):
    return YAML(typ="safe", pure=True).load(stream)


add_parser("application/yaml", safe_load, ".yml", ".yaml")
