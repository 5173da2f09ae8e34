#!/usr/bin/env python3
"""
Point d'entrée principal de la CLI tropical_app.
Permet d'exécuter via: python -m tropical_app <sous-commande> [options]

Codes de sortie : 0 = ok, 1 = propriété en échec, 2 = entrée invalide.
"""

import argparse
import logging
import sys
from dataclasses import replace
from typing import List, Optional

from tropical_app.core.engine import PipelineEngine
from tropical_app.core.settings import LOG_LEVELS, load_settings
from tropical_app.outputs import make_output
from tropical_app.pipelines import build_engine
from tropical_app.utils.logging_setup import configure_logging


logger = logging.getLogger("tropical_app")


def parse_arguments(engine: PipelineEngine, argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse les arguments de ligne de commande."""
    parser = argparse.ArgumentParser(
        prog="tropical_app",
        description="Subdivisions matroïdales, algèbre de Plücker et éventails tropicaux",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m tropical_app subdivide --weight data/intro_w.json
  python -m tropical_app --format text dual-graph --weight data/intro_w.json
  python -m tropical_app valuation --matrix data/fano_matrix.json
  python -m tropical_app jacobian --named m2_37 --basis 1,2,3
  python -m tropical_app --workers 4 star-scan --tree-fan 5 --all
        """
    )
    settings = engine.settings

    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        type=str.upper,
        default=settings.log_level,
        help=f"Niveau de log sur stderr (défaut: {settings.log_level})"
    )

    parser.add_argument(
        "--workers",
        type=int,
        default=settings.workers,
        help=f"Nombre de processus pour les balayages (défaut: {settings.workers})"
    )

    parser.add_argument(
        "--format",
        choices=["json", "text"],
        default=settings.output_format,
        help=f"Format du rapport (défaut: {settings.output_format})"
    )

    parser.add_argument(
        "--out",
        default=None,
        help="Fichier de sortie (défaut: stdout)"
    )

    subparsers = parser.add_subparsers(dest="command", metavar="SOUS-COMMANDE")
    subparsers.required = True
    for name in engine.names():
        pipeline = engine.get(name)
        sub = subparsers.add_parser(name, help=pipeline.description, description=pipeline.description)
        pipeline.configure(sub)

    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    """Fonction principale."""
    try:
        settings = load_settings()
    except ValueError as e:
        print(f"Erreur de configuration: {e}", file=sys.stderr)
        return 2

    engine = build_engine(settings)
    try:
        args = parse_arguments(engine, argv)
    except SystemExit as e:
        # argparse a déjà affiché l'usage
        return e.code if isinstance(e.code, int) else 2

    if args.workers < 1:
        print("Erreur: --workers doit être au moins 1", file=sys.stderr)
        return 2
    settings = replace(settings, workers=args.workers, log_level=args.log_level, output_format=args.format)
    configure_logging(settings.numeric_log_level)
    if getattr(args, "max_factors", 0) is None:
        args.max_factors = settings.max_factors

    logger.info(f"sous-commande {args.command} ({settings.workers} processus)")
    report = engine.dispatch(args.command, args)

    try:
        with make_output(settings.output_format, path=args.out) as output:
            if not output.send(report):
                return 2
    except OSError as e:
        print(f"Erreur: écriture impossible de {args.out}: {e}", file=sys.stderr)
        return 2

    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
