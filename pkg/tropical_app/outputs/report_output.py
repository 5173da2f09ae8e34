"""
Sorties JSON et texte des rapports d'exécution.

Ce module fournit JsonOutput et TextOutput, deux implémentations de
IOutput écrivant sur un flux (stdout par défaut) ou dans un fichier.
"""

import io
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, TextIO, Union

from .base_output import IOutput
from tropical_app.core.data_models import RunReport
from tropical_app.utils.serialization import canonical_json


# Configuration du logger
logger = logging.getLogger(__name__)

FORMATS = ("json", "text")


class _StreamOutput(IOutput):
    """Écriture sur un flux ouvert ou un fichier créé à la demande."""

    def __init__(self, stream: Optional[TextIO] = None, path: Optional[Union[str, Path]] = None):
        """
        Args:
            stream: Flux de destination (stdout si None et sans chemin)
            path: Fichier de destination, prioritaire sur ``stream``
        """
        self._owned = path is not None
        if path is not None:
            self._stream = open(path, "w", encoding="utf-8", newline="\n")
        else:
            self._stream = stream if stream is not None else sys.stdout
        self.report_count = 0

    def render(self, report: RunReport) -> str:
        raise NotImplementedError

    def send(self, report: RunReport) -> bool:
        """
        Écrit le rendu du rapport.

        Returns:
            bool: True si l'écriture a réussi, False sinon
        """
        try:
            self._stream.write(self.render(report))
            self._stream.flush()
            self.report_count += 1
            return True
        except OSError as e:
            logger.error(f"Erreur lors de l'écriture du rapport: {e}")
            return False

    def close(self) -> None:
        if self._owned:
            self._stream.close()
            logger.debug(f"sortie fermée - {self.report_count} rapports écrits")


class JsonOutput(_StreamOutput):
    """
    JSON canonique : clés triées, rationnels en chaînes, sans durée.

    Deux exécutions sur la même entrée produisent les mêmes octets.
    """

    def render(self, report: RunReport) -> str:
        return canonical_json(report.to_dict(include_timing=False)) + "\n"


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "oui" if value else "non"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return canonical_json(value)
    return str(value)


def _render(value: Any, indent: int, lines: List[str]) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, dict) or (isinstance(item, list) and any(isinstance(v, (dict, list)) for v in item)):
                lines.append(f"{pad}{key}:")
                _render(item, indent + 1, lines)
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")


class TextOutput(_StreamOutput):
    """Résumé lisible; la liste d'adjacence est affichée en premier si présente."""

    def render(self, report: RunReport) -> str:
        lines = [f"{report.subcommand}: {report.status}"]
        payload = dict(report.payload)
        adjacency = payload.pop("adjacency", None)
        if adjacency is not None:
            lines.append("adjacence:")
            for vertex in sorted(adjacency, key=int):
                neighbours = " ".join(str(v) for v in adjacency[vertex])
                lines.append(f"  {vertex}: {neighbours}")
        _render(payload, 0, lines)
        return "\n".join(lines) + "\n"


def make_output(fmt: str, stream: Optional[TextIO] = None, path: Optional[Union[str, Path]] = None) -> IOutput:
    """
    Raises:
        ValueError: Format inconnu
    """
    if fmt == "json":
        return JsonOutput(stream=stream, path=path)
    if fmt == "text":
        return TextOutput(stream=stream, path=path)
    raise ValueError(f"format de sortie inconnu: {fmt}")


def emit(report: RunReport, fmt: str = "json") -> bytes:
    """Rendu d'un rapport en octets UTF-8."""
    buffer = io.StringIO()
    with make_output(fmt, stream=buffer) as output:
        output.send(report)
    return buffer.getvalue().encode("utf-8")
