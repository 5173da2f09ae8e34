"""
Configuration lue depuis les variables d'environnement.

Variables d'environnement:
    TROPICAL_WORKERS: Nombre de processus pour les balayages (défaut: 1)
    TROPICAL_LOG_LEVEL: Niveau de log (défaut: WARNING)
    TROPICAL_MAX_FACTORS: Facteurs maximum d'un témoin d'unité (défaut: 3)
    TROPICAL_OUTPUT_FORMAT: json ou text (défaut: json)
    TROPICAL_DATA_DIR: Répertoire des données (défaut: data/ du dépôt)
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path


DEFAULT_DATA_DIR = Path(__file__).resolve().parents[2] / "data"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    """
    Paramètres d'exécution.

    Attributes:
        workers: Nombre de processus (>= 1)
        log_level: Niveau de logging
        max_factors: Borne du nombre de facteurs pour unit_witness
        output_format: Format de sortie par défaut
        data_dir: Répertoire des fichiers de données
    """
    workers: int = 1
    log_level: str = "WARNING"
    max_factors: int = 3
    output_format: str = "json"
    data_dir: Path = DEFAULT_DATA_DIR

    def __post_init__(self):
        """Validation des paramètres."""
        if self.workers < 1:
            raise ValueError("workers doit être au moins 1")
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"niveau de log inconnu: {self.log_level}")
        if self.max_factors < 1:
            raise ValueError("max_factors doit être positif")
        if self.output_format not in ("json", "text"):
            raise ValueError("output_format doit valoir json ou text")

    @property
    def numeric_log_level(self) -> int:
        return getattr(logging, self.log_level)


def load_settings() -> Settings:
    """
    Construit les paramètres depuis l'environnement.

    Returns:
        Settings validés

    Raises:
        ValueError: Si une variable a une valeur invalide
    """
    try:
        workers = int(os.getenv("TROPICAL_WORKERS", "1"))
        max_factors = int(os.getenv("TROPICAL_MAX_FACTORS", "3"))
    except ValueError:
        raise ValueError("TROPICAL_WORKERS et TROPICAL_MAX_FACTORS doivent être des entiers") from None
    return Settings(
        workers=workers,
        log_level=os.getenv("TROPICAL_LOG_LEVEL", "WARNING").upper(),
        max_factors=max_factors,
        output_format=os.getenv("TROPICAL_OUTPUT_FORMAT", "json"),
        data_dir=Path(os.getenv("TROPICAL_DATA_DIR", str(DEFAULT_DATA_DIR))),
    )
