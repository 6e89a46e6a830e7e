from homnambu.creator._creators import BaseCreator, RegistryCreator  # noqa
