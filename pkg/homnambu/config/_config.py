import logging
import os

import voluptuous
from munch import munchify

import homnambu.resource
from homnambu.config._schema import RUN_CONFIG
from homnambu.errors import InvalidParameterError

_log = logging.getLogger(__name__)

ENVIRONMENT_VARIABLE = "HOMNAMBU_CONFIG"


def get_hook(validator=None):
    """
    Get homnambu.resource.load compatible hook validating input dictionary and
    creating a Munch object.

    Args:
        validator (Callable): Callable to use for validation. Defaults to the
            RUN_CONFIG schema.

    Returns:
        function: A function for validating and converting dictionary to Munch
    """
    if validator is None:
        validator = RUN_CONFIG

    def hook(dictionary):
        """
        Validate and munchify input dictionary.

        Args:
            dictionary (dict): Input to validate and munchify.

        Returns:
            Munch: Validated output.

        Raises:
            InvalidParameterError: When validation fails.
        """
        try:
            return munchify(validator(dictionary or {}))
        except voluptuous.Invalid as e:
            raise InvalidParameterError(f"Invalid configuration: {e}") from e
    return hook


def from_dict(dictionary, validator=None):
    """
    Validate and munchify dictionary using custom validator.

    Args:
        dictionary (dict): Input dictionary
        validator (Callable): Callable to use for validation

    Returns:
        Munch: Validated output.
    """
    return get_hook(validator)(dictionary)


def from_url(url, validator=None):
    """
    Validate and munchify dictionary loaded from a YAML or JSON file.

    Args:
        url (str): Path or file URL of the resource containing a dictionary.
        validator (Callable): Callable to use for validation

    Returns:
        Munch: Validated output.
    """
    hook = get_hook(validator)
    _log.debug(f"Loading configuration from '{url}'")
    return homnambu.resource.load(url, hook=hook)


def from_env(environment_variable=ENVIRONMENT_VARIABLE, validator=None):
    """
    Validate and munchify dictionary loaded from the file named in the
    environment variable `environment_variable`.

    Args:
        environment_variable (str): Environment variable name containing
            the path to a resource containing a dictionary
        validator (Callable): Callable to use for validation

    Returns:
        Munch: Validated output.

    Raises:
        InvalidParameterError: When the variable is not set.
    """
    if environment_variable not in os.environ:
        raise InvalidParameterError(f"Environment variable "
                                    f"'{environment_variable}' is not set")
    url = os.environ[environment_variable]
    return from_url(url, validator)


def load(value, validator=None):
    """
    Based on type and value of argument `value`, pick whether to call
    `from_dict`, `from_env` or `from_url`.

    Args:
        value (str or dict): One of the following:
            1. Dictionary
            2. Environment variable name of the variable containing the path
               to the resource containing a dictionary
            3. Path or file URL of the resource containing a dictionary
        validator (Callable): Callable to use for validation

    Returns:
        Munch: Validated output.
    """
    # 1. Dictionary
    if isinstance(value, dict):
        return from_dict(value, validator=validator)

    # if not a dictionary, it must be a string
    if not isinstance(value, str):
        raise TypeError("Argument `value` should be either a string or a dict")

    # 2. Environment variable
    if value in os.environ:
        return from_env(value, validator=validator)

    # 3. Resource URL
    return from_url(value, validator=validator)


def merge(base, override):
    """
    Merge dictionary `override` into `base` recursively. Keys of `override`
    holding None are skipped, so unset command line flags keep the values of
    a configuration file.

    Args:
        base (dict): A dictionary to merge into
        override (dict): A dictionary to merge from

    Returns:
        dict: Merged dictionary
    """
    new = dict(base or {})
    for key, value in (override or {}).items():
        if value is None:
            continue
        if isinstance(value, dict):
            current = new.get(key)
            new[key] = merge(current if isinstance(current, dict) else {},
                             value)
        else:
            new[key] = value
    return new
