"""
Interface abstraite des pipelines exposés par la CLI.
"""

import argparse
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict

from .errors import MalformedInput
from tropical_app.utils.serialization import file_digest, stable_hash


# Options dont la valeur est un chemin de fichier d'entrée
FILE_OPTIONS = ("weight", "matroid", "matrix", "fan", "tree")

# Options sans effet sur le résultat
RUNTIME_OPTIONS = ("workers", "format", "out", "log_level", "command", "pipeline")


class IPipeline(ABC):
    """
    Interface pour toutes les procédures de calcul.

    Une implémentation par sous-commande :
    - ``configure`` déclare ses options argparse
    - ``run`` calcule le résultat JSON à partir des arguments
    """

    name: str = ""
    description: str = ""

    @abstractmethod
    def configure(self, parser: argparse.ArgumentParser) -> None:
        """
        Déclare les options de la sous-commande.

        Args:
            parser: Sous-parseur argparse dédié
        """
        pass

    @abstractmethod
    def run(self, args: argparse.Namespace) -> dict:
        """
        Exécute la procédure.

        Args:
            args: Arguments analysés

        Returns:
            dict: Résultat sérialisable en JSON

        Raises:
            InputError: Entrée invalide
            PropertyFailure: Propriété certifiée fausse
        """
        pass

    def input_digests(self, args: argparse.Namespace) -> Dict[str, str]:
        """
        Empreintes SHA-256 des fichiers d'entrée et des autres arguments.

        Raises:
            MalformedInput: Fichier d'entrée illisible
        """
        digests = {}
        options = {}
        for key, value in sorted(vars(args).items()):
            if key in RUNTIME_OPTIONS or callable(value):
                continue
            if key in FILE_OPTIONS and value is not None and Path(value).is_file():
                try:
                    digests[key] = file_digest(value)
                except OSError as e:
                    raise MalformedInput(f"lecture impossible de {value}: {e}") from None
            else:
                options[key] = value if isinstance(value, (int, str, bool, type(None))) else str(value)
        digests["arguments"] = stable_hash(options)
        return digests
