"""
Dummy module used for saving the homnambu package version only.
"""
from homnambu.version.version import __version__  # noqa
