"""
Matroïdes nommés et recensement.
"""

from .named_matroids import C_INTRO, FANO, FIG36, M1_37, M2_37, PAPPUS, named_matroid

__all__ = ["FANO", "PAPPUS", "FIG36", "C_INTRO", "M1_37", "M2_37", "named_matroid"]
