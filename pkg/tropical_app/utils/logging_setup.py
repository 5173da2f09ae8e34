"""
Configuration du logging pour la CLI et les scripts.
"""

import logging
import sys


LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: int = logging.WARNING) -> None:
    """
    Configure le logger racine sur stderr.

    stdout reste réservé aux rapports pour que la sortie JSON soit stable.

    Args:
        level: Niveau de logging (logging.INFO, ...)
    """
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
