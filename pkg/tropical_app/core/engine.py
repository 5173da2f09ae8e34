"""
Moteur d'exécution des pipelines.
"""

import argparse
import logging
import time
from typing import Dict, List, Optional

from .data_models import RunReport
from .errors import InputError, PropertyFailure, UnknownSubcommand
from .pipeline import IPipeline
from .settings import Settings


logger = logging.getLogger(__name__)


class PipelineEngine:
    """
    Moteur orchestrant les pipelines.

    Gère :
    - L'enregistrement des pipelines par nom
    - L'exécution chronométrée et les empreintes des entrées
    - La conversion des erreurs en statut de rapport
    """

    def __init__(self, settings: Optional[Settings] = None):
        """
        Initialise le moteur.

        Args:
            settings: Paramètres d'exécution (défauts si None)
        """
        self._settings = settings or Settings()
        self._pipelines: Dict[str, IPipeline] = {}

    @property
    def settings(self) -> Settings:
        return self._settings

    def register(self, pipeline: IPipeline) -> None:
        """
        Enregistre un pipeline sous son nom.

        Raises:
            ValueError: Si le nom est vide ou déjà pris
        """
        if not pipeline.name:
            raise ValueError("un pipeline doit avoir un nom")
        if pipeline.name in self._pipelines:
            raise ValueError(f"pipeline déjà enregistré: {pipeline.name}")
        self._pipelines[pipeline.name] = pipeline

    def names(self) -> List[str]:
        return list(self._pipelines)

    def get(self, name: str) -> IPipeline:
        """
        Raises:
            UnknownSubcommand: Si aucun pipeline ne porte ce nom
        """
        if name not in self._pipelines:
            raise UnknownSubcommand(f"sous-commande inconnue: {name}", name=name)
        return self._pipelines[name]

    def dispatch(self, name: str, args: argparse.Namespace) -> RunReport:
        """
        Exécute un pipeline et construit son rapport.

        Statuts :
        - ok : succès
        - property_failed : PropertyFailure, ou certificat ``ok`` faux
        - input_error : InputError

        Args:
            name: Nom de la sous-commande
            args: Arguments analysés

        Returns:
            RunReport
        """
        start = time.perf_counter()
        digests: Dict[str, str] = {}
        try:
            pipeline = self.get(name)
            digests = pipeline.input_digests(args)
            payload = pipeline.run(args)
            status = "ok"
            certificate = payload.get("certificate")
            if isinstance(certificate, dict) and certificate.get("ok") is False:
                status = "property_failed"
                payload.setdefault("witness", certificate.get("failures", certificate))
        except InputError as e:
            logger.error(f"[{name}] entrée invalide: {e}")
            status = "input_error"
            payload = {"error": str(e), "error_type": type(e).__name__, "witness": e.witness()}
        except PropertyFailure as e:
            logger.warning(f"[{name}] propriété en échec: {e}")
            status = "property_failed"
            payload = {"error": str(e), "error_type": type(e).__name__, "witness": e.witness()}

        elapsed = time.perf_counter() - start
        report = RunReport(
            subcommand=name,
            input_digests=digests,
            payload=payload,
            status=status,
            elapsed_seconds=elapsed,
        )
        logger.info(str(report))
        return report
