"""
Pipelines sur les matroïdes : recensement et matroïdes nommés.
"""

import argparse
import logging

from tropical_app.core.matroid import flats_and_lines, is_connected, simplicity_report
from tropical_app.core.pipeline import IPipeline
from tropical_app.matroids.census import census_report
from tropical_app.matroids.named_matroids import named_matroid


logger = logging.getLogger(__name__)


class EnumeratePipeline(IPipeline):
    """Classes d'isomorphie de (d,[n])-matroïdes."""

    name = "enumerate"
    description = "Recensement des matroïdes de rang d sur [n] (n <= 6)"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--d", type=int, required=True, help="Rang")
        parser.add_argument("--n", type=int, required=True, help="Taille de l'ensemble de base")
        parser.add_argument(
            "--expected",
            type=int,
            default=None,
            help="Nombre de classes attendu; un écart donne le statut property_failed",
        )

    def run(self, args: argparse.Namespace) -> dict:
        report = census_report(args.d, args.n, args.expected)
        payload = report.to_json()
        if args.expected is not None:
            payload["certificate"] = {
                "ok": report.matches,
                "failures": [] if report.matches else [
                    {"count": report.count, "expected": report.expected}
                ],
            }
        return payload


class NamedPipeline(IPipeline):
    """Description d'un matroïde prédéfini."""

    name = "named"
    description = "Bases, droites et simplicité d'un matroïde nommé"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("name", help="fano, pappus, fig36, c_intro, m1_37, m2_37, m_124, mprime_124...")

    def run(self, args: argparse.Namespace) -> dict:
        M = named_matroid(args.name)
        _, lines = flats_and_lines(M)
        report = simplicity_report(M)
        payload = M.to_json()
        payload.update({
            "name": args.name,
            "basis_count": len(M.bases),
            "lines": [list(line) for line in lines],
            "loops": list(report.loops),
            "parallel_classes": [list(c) for c in report.parallel_classes],
            "simple": report.is_simple,
            "connected": is_connected(M),
        })
        return payload
