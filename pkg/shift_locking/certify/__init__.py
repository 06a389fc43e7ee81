"""
@file
@brief Shortcuts to *certify*.
"""

from .locking import tail_majorant, certify_at_level, find_locking_level
from .locking import LockingCertificate, CriterionFailure, LockingNotFound
from .soundness import soundness_check, SoundnessReport
