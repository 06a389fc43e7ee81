"""
@file
@brief Shortcuts to *lab*.
"""

from .brick import Gauge, BrickSample, BrickSumPotential, sample_brick, gap_of_sum
from .brick import level_threshold, ratio_condition_level
from .confidence import clopper_pearson_upper, clopper_pearson_lower
from .experiments import ExperimentReport, verify_conditional_gap_bound, verify_level_bound
from .experiments import prevalence_experiment
