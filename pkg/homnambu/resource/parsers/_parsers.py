"""
Registry of resource parsers. A parser is any function taking an open text
file; it is found through the mimetype of a resource, which in turn is
guessed from the file suffix.
"""
import json
import logging
import os.path

_log = logging.getLogger(__name__)


def _read_text(f, *args, **kwargs):
    return f.read(*args, **kwargs)


# {mimetype: parser}
parsers = {
    "application/json": json.load,
    "text/plain": _read_text,
}

# {suffix: mimetype}
suffixes = {
    ".json": "application/json",
    ".txt": "text/plain",
}


def add_parser(mimetype, parser, *extensions):
    """
    Register `parser` for `mimetype` and map every suffix in `extensions`
    to that mimetype.

    Args:
        mimetype (str): Mimetype the parser handles.
        parser (function): Function of an open file.
        *extensions (str): Suffixes such as ".yaml", dot included.
    """
    mimetype = mimetype.lower()
    for extension in extensions:
        _log.debug(f"Suffix {extension.lower()} -> {mimetype}")
        suffixes[extension.lower()] = mimetype
    parsers[mimetype] = parser


def remove_parser(mimetype):
    """
    Unregister the parser of `mimetype`; its suffixes stay mapped and fall
    back to plain file objects.
    """
    return parsers.pop(mimetype.lower(), None)


def guess_type(path):
    """
    Mimetype registered for the suffix of `path`, None if unknown.
    """
    _, extension = os.path.splitext(str(path))
    return suffixes.get(extension.lower())


def get_parser(path, mimetype=None):
    """
    Parser for a local path, by the given mimetype or else the one guessed
    from its suffix. Unknown types get the identity parser.

    Args:
        path (str): Local path or the path part of a file URL.
        mimetype (str, optional): Enforced mimetype. Defaults to None.

    Returns:
        function: A parser function.
    """
    mimetype = mimetype or guess_type(path)
    return parsers.get(mimetype, lambda f: f)
