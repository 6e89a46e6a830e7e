"""
Voluptuous schema of a run configuration, as read from a YAML/JSON file or
assembled from command line flags.
"""
from voluptuous import (All, Any, Coerce, ExactSequence, In, Optional, Range,
                        Schema)

COMMANDS = ("verify", "counterexample", "deform", "list-models")
FORMATS = ("text", "json")

_TEXT = Any(None, Coerce(str))

PARAMS = Schema({
    Optional("z"): _TEXT,
    Optional("theta"): _TEXT,
    Optional("gamma"): _TEXT,
    Optional("q"): _TEXT,
    Optional("k"): Any(None, ExactSequence([Coerce(str)] * 3),
                       Coerce(str)),
    Optional("k4"): _TEXT,
    Optional("allow_any_z"): Any(None, bool),
})

SAMPLE = Schema({
    Optional("range"): Any(None, ExactSequence([Coerce(int), Coerce(int)]),
                           Coerce(str)),
    Optional("degree"): Any(None, All(Coerce(int), Range(min=0))),
})

RUN_CONFIG = Schema({
    Optional("command", default="verify"): In(COMMANDS),
    Optional("model", default=None): _TEXT,
    Optional("name", default=None): _TEXT,
    Optional("params", default=dict): PARAMS,
    Optional("sample", default=dict): SAMPLE,
    Optional("order", default=None): Any(None,
                                         All(Coerce(int), Range(min=0))),
    Optional("format", default="text"): In(FORMATS),
    Optional("plain_nambu", default=False): bool,
    Optional("save", default=None): _TEXT,
})
