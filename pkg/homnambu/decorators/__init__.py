import logging
import time
from functools import wraps

_log = logging.getLogger(__name__)


def _resolve_level(log_level):
    """
    Numeric logging level of an int or a level name; None stays None and
    turns logging off.

    Raises:
        ValueError: For names logging does not know.
    """
    if log_level is None or isinstance(log_level, int):
        return log_level
    level = logging.getLevelName(str(log_level).upper())
    if not isinstance(level, int):
        raise ValueError(f"log_level='{log_level}' is not a valid log level "
                         f"name")
    return level


def timing(label=None, log_level=logging.DEBUG):
    """
    Decorator logging the wall time of every call, with the call label and
    duration in the record's `extra` fields `call` and `seconds`.

    Args:
        label (str, optional): Name in the record. Defaults to the function
            name.
        log_level (int|str, optional): Level of the record; None disables
            it. Defaults to DEBUG.
    """
    level = _resolve_level(log_level)

    def decorator(func):
        name = label or func.__name__

        @wraps(func)
        def timed(*args, **kwargs):
            if level is None or not _log.isEnabledFor(level):
                return func(*args, **kwargs)
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                seconds = time.perf_counter() - start
                _log.log(level, f"Call '{name}' took {seconds:.6f} sec",
                         extra={"call": name, "seconds": seconds})
        return timed
    return decorator
