"""
The `homnambu` command line front end.
"""
from homnambu.cli._main import main, resolve_config  # noqa
from homnambu.cli._parser import build_parser, args_to_config  # noqa
from homnambu.cli._parser import join_signed_values  # noqa
from homnambu.cli._commands import cmd_verify, cmd_counterexample  # noqa
from homnambu.cli._commands import cmd_deform, cmd_list_models  # noqa
from homnambu.cli._commands import commands, render_json  # noqa
from homnambu.cli._commands import EXIT_PASSED, EXIT_FAILED  # noqa
from homnambu.cli._commands import EXIT_USAGE  # noqa
