"""
Pipelines algébriques : relations de Plücker, formes initiales, cartes
affines, jacobiennes et valuations.
"""

import argparse
import logging

from tropical_app.algebra.charts import (
    affine_chart,
    affine_presentation,
    jacobian_minors,
    raw_affine_generators,
    unit_witnesses,
)
from tropical_app.algebra.plucker import (
    PlueckerContext,
    context_for,
    four_point_quadrics,
    limit_ideal_generators,
    plucker_initial_form,
    thin_schubert_generators,
)
from tropical_app.algebra.polynomials import format_polynomial, format_polynomials, parse_polynomial
from tropical_app.algebra.valuation import matrix_from_json, pluecker_valuation
from tropical_app.core.errors import MalformedInput
from tropical_app.core.pipeline import IPipeline
from tropical_app.core.settings import load_settings
from tropical_app.pipelines.inputs import (
    add_matroid_options,
    add_weight_option,
    load_matroid,
    load_weight,
    matroid_for_weight,
    parse_basis,
)
from tropical_app.polytopes.subdivision import regular_subdivision
from tropical_app.utils.serialization import load_json, subset_key


logger = logging.getLogger(__name__)


def _add_char_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--char",
        type=int,
        default=0,
        help="Caractéristique du corps des coefficients (0 ou p premier, défaut: 0)",
    )


class RelationsPipeline(IPipeline):
    """Générateurs de I_M, ou de I_{M,w} si un poids est donné."""

    name = "relations"
    description = "Relations de Plücker d'une cellule de Schubert mince ou d'une subdivision"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_matroid_options(parser)
        add_weight_option(parser, required=False)
        _add_char_option(parser)

    def run(self, args: argparse.Namespace) -> dict:
        if args.weight:
            w = load_weight(args)
            S = regular_subdivision(matroid_for_weight(args, w), w)
            gens = limit_ideal_generators(S)
            source = "limit"
        else:
            M = load_matroid(args)
            gens = thin_schubert_generators(M, context_for(M, args.char))
            source = "matroid"
        return {"source": source, "count": len(gens), "generators": format_polynomials(gens)}


class InitialFormPipeline(IPipeline):
    """Formes initiales in_w(f) de polynômes en coordonnées de Plücker."""

    name = "initial-form"
    description = "Formes initiales d'un polynôme de Plücker pour un poids w"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_weight_option(parser)
        parser.add_argument(
            "--poly",
            action="append",
            default=[],
            help="Polynôme en p124, p135... (répétable); par défaut les T_ijkl si d=2",
        )

    def run(self, args: argparse.Namespace) -> dict:
        w = load_weight(args)
        ctx = PlueckerContext(w.d, w.n)
        if args.poly:
            polys = [parse_polynomial(ctx.ring, text) for text in args.poly]
        elif w.d == 2:
            polys = four_point_quadrics(ctx)
        else:
            raise MalformedInput("--poly est requis quand d != 2")
        forms = []
        for f in polys:
            forms.append({
                "polynomial": format_polynomial(f),
                "initial_form": format_polynomial(plucker_initial_form(f, w, ctx)),
            })
        return {"forms": forms}


class ChartPipeline(IPipeline):
    """Carte affine en une base β : matrice, unités et présentation."""

    name = "chart"
    description = "Carte affine de Gr_M et présentation de l'idéal affine"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_matroid_options(parser, required=True)
        parser.add_argument("--basis", required=True, help="Base β (ex. 1,2,3)")
        parser.add_argument("--raw", action="store_true", help="Générateurs bruts, sans élimination")
        _add_char_option(parser)

    def run(self, args: argparse.Namespace) -> dict:
        M = load_matroid(args)
        C = affine_chart(M, parse_basis(args.basis), args.char)
        payload = C.to_json()
        payload["matrix"] = [[format_polynomial(e) for e in row] for row in C.matrix]
        payload["units"] = [
            {"lambda": list(lam), "unit": format_polynomial(a)} for lam, a in C.units
        ]
        payload["consistency_violations"] = [list(v) for v in C.consistency_violations()]
        if args.raw:
            payload["generators"] = format_polynomials(raw_affine_generators(C))
        else:
            presentation = affine_presentation(C)
            payload["presentation"] = presentation.to_json()
            payload["generators"] = format_polynomials(presentation.generators)
        return payload


class JacobianPipeline(IPipeline):
    """Critère jacobien : mineurs maximaux et certificats d'unité."""

    name = "jacobian"
    description = "Jacobienne de l'idéal affine et mineurs produits d'unités"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_matroid_options(parser, required=True)
        parser.add_argument("--basis", required=True, help="Base β (ex. 1,2,3)")
        parser.add_argument("--vars", help="Variables de dérivation (ex. X12,X23); par défaut celles restantes")
        parser.add_argument("--raw", action="store_true", help="Générateurs bruts, sans élimination")
        parser.add_argument("--max-factors", type=int, default=None, help="Facteurs maximum d'un certificat")
        _add_char_option(parser)

    def run(self, args: argparse.Namespace) -> dict:
        M = load_matroid(args)
        C = affine_chart(M, parse_basis(args.basis), args.char)
        if args.raw:
            gens = raw_affine_generators(C)
            names = C.active_names
        else:
            presentation = affine_presentation(C)
            gens = presentation.generators
            names = presentation.variables
        if args.vars:
            names = [v.strip() for v in args.vars.split(",") if v.strip()]
        try:
            variables = [C.variable(name) for name in names]
        except (KeyError, ValueError):
            raise MalformedInput(f"variables inconnues: {names}") from None
        result = jacobian_minors(gens, variables)
        max_factors = args.max_factors if args.max_factors is not None else load_settings().max_factors
        if max_factors < 1:
            raise MalformedInput(f"--max-factors doit être au moins 1 (reçu {max_factors})")
        certificates = unit_witnesses(result.minor_polynomials, C, max_factors)
        payload = result.to_json()
        payload["generators"] = format_polynomials(gens)
        payload["unit_certificates"] = [c.to_json() for c in certificates]
        payload["max_factors"] = max_factors
        payload["certificate"] = {
            "ok": bool(certificates),
            "failures": [] if certificates else [
                {"minors": len(result.minors), "max_factors": max_factors}
            ],
        }
        return payload


class ValuationPipeline(IPipeline):
    """Valuation t-adique des coordonnées de Plücker d'une matrice."""

    name = "valuation"
    description = "Vecteur w_λ = val_t(det A_λ) d'une matrice sur k[t]"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--matrix", required=True, help="Fichier JSON {char, rows}")

    def run(self, args: argparse.Namespace) -> dict:
        mat = matrix_from_json(load_json(args.matrix))
        w = pluecker_valuation(mat)
        support = sorted(lam for lam, v in w.entries.items() if v > 0)
        return {
            "weight": w.to_json(),
            "support": [subset_key(lam, w.n) for lam in support],
        }
