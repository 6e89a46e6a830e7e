import logging
from abc import ABC, abstractmethod
from collections.abc import Iterable

import voluptuous

from homnambu.errors import InvalidParameterError, UnknownNameError

_log = logging.getLogger(__name__)


def _is_non_string_iterable(x):
    """
    Test whether `x` is a non-string iterable.

    Args:
        x (object): Test subject.

    Returns:
        bool: True if non-string iterable. False otherwise
    """
    return isinstance(x, Iterable) and not isinstance(x, str)


class BaseCreator(ABC):
    """
    Base creator class containing abstract method BaseCreator.create(). This
    pattern is used for creating instances from pure dictionaries, allowing
    complete configuration of models and deformation families.
    """
    @abstractmethod
    def create(self, config, *args, **kwargs):
        pass

    def __call__(self, config, *args, **kwargs):
        return self.create(config, *args, **kwargs)

    @staticmethod
    def unpack_and_create(cls, config):
        """
        Unpack if config is a dict or non-string iterable and pass it when
        calling `cls.__init__`.

        Args:
            cls (type): A class to make an instance of
            config (object): An object to use as when creating an instance

        Returns:
            object: An instance of class `cls`
        """
        if isinstance(config, dict):
            instance = cls(**config)
        elif _is_non_string_iterable(config):
            instance = cls(*config)
        else:
            instance = cls(config)

        _log.debug(f"Created instance of class '{cls.__name__}'",
                   extra={
                       "class": {
                           "module": cls.__module__,
                           "name": cls.__name__
                       },
                       "config": config,
                       "config_type": type(config)})
        return instance


class RegistryCreator(BaseCreator):
    def __init__(self, registry, kind="object"):
        """
        A creator that requires a registry mapping from key to python class.
        This way it is easy to create an instance from dictionaries such as

                            {
                                "vw": {
                                    "z": "2i",
                                    "range": [-2, 2]
                                }
                            }

        A registered class may declare a voluptuous schema as its `SCHEMA`
        attribute; params are validated (and defaults filled in) with it
        before the class is called.

        Args:
            registry (dict): A registry mapping from keys to classes.
            kind (str, optional): What the registry holds, used in messages.
                Defaults to "object".
        """
        self.registry = registry
        self.kind = kind

    def get(self, name):
        """
        Raises:
            UnknownNameError: When `name` is not registered.
        """
        try:
            return self.registry[name]
        except KeyError as e:
            raise UnknownNameError(
                f"Unknown {self.kind} '{name}', expected one of "
                f"{', '.join(sorted(self.registry))}") from e

    def validate(self, name, params):
        """
        Validate params of the class registered under `name`.

        Returns:
            dict: Validated params with defaults filled in.

        Raises:
            UnknownNameError: When `name` is not registered.
            InvalidParameterError: When params fail the class schema.
        """
        cls = self.get(name)
        if params is None:
            params = {}
        schema = getattr(cls, "SCHEMA", None)
        if schema is None:
            return params
        try:
            return schema(dict(params))
        except voluptuous.Invalid as e:
            raise InvalidParameterError(
                f"Invalid parameters for {self.kind} '{name}': {e}") from e

    def create(self, config):
        """
        Extract registry key along with params from config and create an
        instance.

        Args:
            config (dict): A config dictionary to use for extraction of
                registry key and class params.

        Returns:
            object: Instance created from config.

        Raises:
            InvalidParameterError: When `config` does not contain exactly one
                key, or when params fail the class schema.
            UnknownNameError: When the registry key extracted from the config
                is not registered
        """
        if len(config) != 1:
            raise InvalidParameterError(
                f"Expected a single {{name: params}} pair, got {len(config)}")
        name, params = next(iter(config.items()))
        cls = self.get(name)
        params = self.validate(name, params)

        instance = BaseCreator.unpack_and_create(cls, params)
        _log.debug(f"RegistryCreator created {self.kind} '{name}' as "
                   f"'{cls.__module__}.{cls.__name__}'",
                   extra={
                       "class": {
                           "name": cls.__name__,
                           "module": cls.__module__
                       },
                       "config": config,
                       "params": params
                   })

        return instance

    def parameter_keys(self, name):
        """
        Parameter keys the schema of `name` declares, None when the class has
        no schema and takes any params.

        Raises:
            UnknownNameError: When `name` is not registered.
        """
        schema = getattr(self.get(name), "SCHEMA", None)
        if schema is None:
            return None
        return sorted(str(key) for key in schema.schema)

    def describe(self):
        """
        Registered names with the parameter keys of their schemas.

        Returns:
            dict: `{name: [parameter keys]}` in name order.
        """
        return {name: self.parameter_keys(name) or []
                for name in sorted(self.registry)}
