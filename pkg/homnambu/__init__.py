"""
Exact verification of ternary hom-Nambu-Lie algebras and their
multi-parameter formal deformations.
"""
from homnambu.version import __version__  # noqa
