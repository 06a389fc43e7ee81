"""
@file
@brief Shortcuts to *data*.
"""

from .potentials import indicator_of_zero, constant_potential, haar_tie, unit_step_table
from .potentials import random_step_table, binary_expansion, signed_symbols, named_potential
