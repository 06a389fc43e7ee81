"""
@file
@brief Shortcuts to *symbolic*.
"""

from .words import Word, PeriodicPoint, enumerate_periodic_points, first_disagreement
from .decay import DecayModel, MetricValue, metric_d_a
from .variation import variation_of_step_table, step_values_to_array
