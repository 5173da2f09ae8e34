"""
Interface abstraite pour les destinations des rapports d'exécution.

Ce module définit l'interface IOutput implémentée par les formats de
sortie (JSON canonique, texte lisible).
"""

from abc import ABC, abstractmethod

from tropical_app.core.data_models import RunReport


class IOutput(ABC):
    """
    Interface pour les destinations de sortie des rapports.

    Toute nouvelle destination doit implémenter cette interface pour
    être utilisable par la CLI.
    """

    @abstractmethod
    def send(self, report: RunReport) -> bool:
        """
        Écrit un rapport vers la destination.

        Args:
            report: Rapport d'exécution

        Returns:
            bool: True si l'écriture a réussi, False sinon
        """
        pass

    @abstractmethod
    def close(self) -> None:
        """
        Ferme proprement la destination (fichier, flux).
        """
        pass

    def __enter__(self):
        """
        Support du context manager (with statement).

        Permet d'utiliser:
            with JsonOutput() as output:
                output.send(report)
        """
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Fermeture automatique, y compris en cas d'exception."""
        self.close()
        return False  # Ne supprime pas les exceptions
