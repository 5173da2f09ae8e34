"""
Pipelines sur les éventails : test des droites dans les étoiles, f-vecteurs
modulo symétrie et conversion de fichiers.
"""

import argparse
import logging

from tropical_app.core.errors import MalformedInput
from tropical_app.core.pipeline import IPipeline
from tropical_app.fans.fan_scan import (
    CONVENTIONS,
    convert_fan,
    f_vector,
    orbit_fvector,
    orbit_representatives,
    star_scan,
)
from tropical_app.pipelines.inputs import add_fan_options, load_fan_input, parse_cone
from tropical_app.utils.serialization import load_json


logger = logging.getLogger(__name__)


class StarScanPipeline(IPipeline):
    """Test τ ∩ (−τ′) = 0 sur l'étoile d'un cône, ou de tous les cônes."""

    name = "star-scan"
    description = "Absence de droites dans les étoiles des cônes d'un éventail"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_fan_options(parser)
        parser.add_argument("--cone", default="", help="Rayons 1-based du cône σ (vide: origine)")
        parser.add_argument("--all", action="store_true", help="Balayer tous les cônes de l'éventail")

    def run(self, args: argparse.Namespace) -> dict:
        F = load_fan_input(args)
        workers = getattr(args, "workers", 1) or 1
        if args.all:
            cones = [()] + F.all_cones()
        else:
            cones = [parse_cone(args.cone)]
        reports = [star_scan(F, sigma, workers=workers) for sigma in cones]
        failures = [
            {"center": r.to_json()["center"], **failure}
            for r in reports for failure in r.failures
        ]
        payload = {
            "cones_scanned": len(reports),
            "pairs_checked": sum(r.pairs_checked for r in reports),
            "certificate": {"ok": not failures, "failures": failures},
        }
        if len(reports) == 1:
            payload.update(reports[0].to_json())
        return payload


class OrbitFVectorPipeline(IPipeline):
    """f-vecteur et f-vecteur modulo l'action de S_n."""

    name = "orbit-fvector"
    description = "Nombre d'orbites de cônes par dimension"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_fan_options(parser)

    def run(self, args: argparse.Namespace) -> dict:
        F = load_fan_input(args)
        representatives = orbit_representatives(F)
        return {
            "f_vector": list(f_vector(F)),
            "orbit_f_vector": list(orbit_fvector(F)),
            "representatives": {
                str(dim): [[i + 1 for i in cone] for cone in cones]
                for dim, cones in representatives.items()
            },
        }


class ConvertFanPipeline(IPipeline):
    """Conversion d'un fichier d'éventail entre conventions d'indices."""

    name = "convert-fan"
    description = "Normalise les conventions d'indices d'un fichier d'éventail"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--fan", required=True, help="Fichier JSON de l'éventail")
        parser.add_argument("--to", default="lex1", choices=CONVENTIONS, help="Convention cible (défaut: lex1)")

    def run(self, args: argparse.Namespace) -> dict:
        data = load_json(args.fan)
        if "d" not in data or "n" not in data:
            raise MalformedInput("l'éventail doit préciser d et n")
        converted, table = convert_fan(data, args.to)
        return {"fan": converted, "permutation_table": table}
