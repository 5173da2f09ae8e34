"""
Module outputs - Destinations des rapports d'exécution.

Toutes les destinations implémentent l'interface IOutput.

Usage:
    from tropical_app.outputs import JsonOutput

    with JsonOutput() as output:
        output.send(report)
"""

from .base_output import IOutput
from .report_output import JsonOutput, TextOutput, emit, make_output

__all__ = [
    "IOutput",
    "JsonOutput",
    "TextOutput",
    "emit",
    "make_output",
]
