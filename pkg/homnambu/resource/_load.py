"""
Local resources: paths and `file://` URLs, parsed by suffix. The package
reads configuration files and saved deformation families this way.
"""
import logging
import os
from urllib.parse import ParseResult, urlparse

from homnambu.errors import FormatError
from homnambu.resource.parsers import get_parser

_log = logging.getLogger(__name__)


def local_path(url):
    """
    Filesystem path of a plain path or `file://` URL, with `~` expanded.

    Raises:
        FormatError: For any other URL scheme.
    """
    parsed = url if isinstance(url, ParseResult) else urlparse(str(url))
    if parsed.scheme not in ("", "file"):
        raise FormatError(f"Only local resources are supported, got scheme "
                          f"'{parsed.scheme}' in '{url}'")
    path = parsed.path if parsed.scheme else str(url)
    return os.path.expanduser(path)


def open_(url, mode="r", encoding="utf-8"):
    """
    Open a local resource.

    Args:
        url (str): Path or file URL.
        mode (str, optional): File mode. Defaults to "r".
        encoding (str, optional): Text encoding, ignored in binary modes.
            Defaults to "utf-8".

    Returns:
        file: An open file object.
    """
    path = local_path(url)
    if "b" in mode:
        return open(path, mode)
    return open(path, mode, encoding=encoding)


def load(url, mimetype=None, parser=None, hook=None, parser_kwargs=None,
         hook_kwargs=None):
    """
    Read a local resource, parse it by mimetype and pass the result through
    an optional hook.

    Args:
        url (str): Path or `file://` URL.
        mimetype (str, optional): Enforced mimetype instead of the one
            guessed from the suffix. Defaults to None.
        parser (function, optional): Parser used instead of the registered
            ones. Defaults to None.
        hook (callable, optional): Called on the parsed data, e.g. a config
            validator. Defaults to None.
        parser_kwargs (dict, optional): Extra parser arguments.
        hook_kwargs (dict, optional): Extra hook arguments.

    Returns:
        object: Parsed data, after the hook if one is given.
    """
    parser = parser or get_parser(local_path(url), mimetype=mimetype)
    _log.debug(f"Load resource '{url}'", extra={"url": str(url),
                                                 "mimetype": mimetype})
    with open_(url) as f:
        data = parser(f, **(parser_kwargs or {}))

    if hook is None:
        return data
    return hook(data, **(hook_kwargs or {}))
