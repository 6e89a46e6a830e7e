import logging
import os
import sys

import homnambu.resource
from homnambu import config
from homnambu.cli._commands import EXIT_PASSED, EXIT_USAGE, commands
from homnambu.cli._parser import args_to_config, build_parser
from homnambu.errors import HomNambuError, InvalidParameterError

_log = logging.getLogger(__name__)


def _read_config(url):
    data = homnambu.resource.load(url)
    if not isinstance(data, dict):
        raise InvalidParameterError(f"Configuration '{url}' does not hold a "
                                    f"mapping")
    return data


def resolve_config(args, environ=None):
    """
    Merge the run configuration: the file named by HOMNAMBU_CONFIG, then
    `--config FILE`, then command line flags, each overriding the previous.

    Returns:
        Munch: Validated configuration.

    Raises:
        InvalidParameterError: When the merged configuration is invalid.
    """
    environ = os.environ if environ is None else environ
    merged = {}
    if environ.get(config.ENVIRONMENT_VARIABLE):
        merged = config.merge(
            merged, _read_config(environ[config.ENVIRONMENT_VARIABLE]))
    if getattr(args, "config", None):
        merged = config.merge(merged, _read_config(args.config))
    merged = config.merge(merged, args_to_config(args))
    return config.from_dict(merged)


def main(argv=None, environ=None):
    """
    Run the command line interface.

    Args:
        argv ([str], optional): Arguments without the program name. Defaults
            to `sys.argv[1:]`.
        environ (dict, optional): Environment. Defaults to `os.environ`.

    Returns:
        int: 0 when every check passes, 1 on violations, 2 on usage errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASSED
    logging.basicConfig(level=getattr(args, "log_level", "WARNING"))
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        cfg = resolve_config(args, environ)
        status, text = commands[args.command](cfg)
    except (HomNambuError, OSError) as e:
        _log.debug("Command failed", exc_info=True)
        print(f"homnambu: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(text)
    return status
