"""
@file
@brief Shortcuts to *haar*.
"""

from .haar_table import HaarIndex, HaarTable, haar_evaluate, coefficients_from_cylinder_values, reconstruct
from .potential import Potential, StepTable, CylinderValues, EvaluatorPotential
from .potential import approximation_An, coefficient_sup_bound, potential_from_json
