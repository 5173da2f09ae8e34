"""
Core - Types centraux : erreurs et matroïdes.

Les modèles de données (``core.data_models``), le moteur de pipelines
(``core.engine``) et la configuration (``core.settings``) s'importent
depuis leurs modules.
"""

from .errors import InputError, PropertyFailure, TropicalError
from .matroid import Matroid, validate

__all__ = ["InputError", "PropertyFailure", "TropicalError", "Matroid", "validate"]
