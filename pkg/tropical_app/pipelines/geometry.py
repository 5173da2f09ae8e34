"""
Pipelines géométriques : subdivision, graphe dual, facettes et arbres.
"""

import argparse
import logging

from tropical_app.algebra.plucker import face_generator_check
from tropical_app.algebra.polynomials import format_polynomial
from tropical_app.core.errors import ExchangeViolation, MalformedInput
from tropical_app.core.matroid import face_matroid
from tropical_app.core.pipeline import IPipeline
from tropical_app.pipelines.inputs import (
    add_matroid_options,
    add_weight_option,
    load_matroid,
    load_weight,
    matroid_for_weight,
)
from tropical_app.polytopes.polytope import facets
from tropical_app.polytopes.subdivision import (
    center_decomposition,
    common_vertex,
    dual_graph,
    regular_subdivision,
)
from tropical_app.trees.phylo_tree import tree_from_json
from tropical_app.trees.tree_space import (
    combinatorial_type,
    four_point_check,
    tree_distance,
    tree_from_weight,
)
from tropical_app.utils.serialization import load_json, parse_index_list


logger = logging.getLogger(__name__)


class SubdividePipeline(IPipeline):
    """Subdivision régulière Δ_{M,w} avec certificat matroïdal."""

    name = "subdivide"
    description = "Subdivision régulière de Δ_M induite par w"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_weight_option(parser)
        add_matroid_options(parser)

    def run(self, args: argparse.Namespace) -> dict:
        w = load_weight(args)
        S = regular_subdivision(matroid_for_weight(args, w), w)
        payload = S.to_json()
        payload["cell_count"] = len(S.cells)
        return payload


class DualGraphPipeline(IPipeline):
    """Graphe dual Γ_w et décomposition centre/feuilles."""

    name = "dual-graph"
    description = "Graphe dual de la subdivision (cellules et facettes communes)"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_weight_option(parser)
        add_matroid_options(parser)

    def run(self, args: argparse.Namespace) -> dict:
        w = load_weight(args)
        S = regular_subdivision(matroid_for_weight(args, w), w)
        G = dual_graph(S)
        payload = G.to_json()
        payload["adjacency"] = {
            str(v): sorted(G.graph.neighbors(v)) for v in sorted(G.graph.nodes)
        }
        if len(G.vertices) >= 3:
            try:
                decomposition = center_decomposition(G, S)
            except ExchangeViolation as e:
                payload["decomposition"] = {"error": str(e), "witness": e.witness()}
            else:
                vertex = common_vertex(S, decomposition.center_indices)
                payload["decomposition"] = {
                    "center_indices": decomposition.center_indices,
                    "leaf_indices": decomposition.leaf_indices,
                    "center": decomposition.center.to_json(),
                    "leaf_facets": [facet.to_json() for _, facet in decomposition.leaves],
                    "common_vertex": list(vertex) if vertex is not None else None,
                }
        return payload


class FacetsPipeline(IPipeline):
    """Facettes de Δ_M et, sur demande, contrôle des générateurs d'une face."""

    name = "facets"
    description = "Facettes du polytope de matroïde Δ_M"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_matroid_options(parser, required=True)
        parser.add_argument(
            "--facet-flat",
            help="Plat η (ex. 1,2,4) : matroïde de face M_η et contrôle des générateurs",
        )

    def run(self, args: argparse.Namespace) -> dict:
        M = load_matroid(args)
        payload = {
            "matroid": M.to_json(),
            "facets": [{**f.to_json(), "inequality": str(f)} for f in facets(M)],
        }
        if args.facet_flat:
            eta = parse_index_list(args.facet_flat)
            if any(not 1 <= i <= M.n for i in eta):
                raise MalformedInput(f"plat hors de [{M.n}]: {eta}")
            mismatches = face_generator_check(M, eta)
            payload["face"] = face_matroid(M, eta).to_json()
            payload["certificate"] = {
                "ok": not mismatches,
                "failures": [
                    {
                        "lambda": list(m.lam),
                        "mu": list(m.mu),
                        "face_generator": format_polynomial(m.face_generator),
                        "full_generator": format_polynomial(m.full_generator),
                    }
                    for m in mismatches
                ],
            }
        return payload


class TreePipeline(IPipeline):
    """Espace des arbres : condition des quatre points, reconstruction, distances."""

    name = "tree"
    description = "Arbres phylogénétiques et vecteurs de poids (d=2)"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("action", choices=["check", "from-metric", "distance"])
        add_weight_option(parser, required=False)
        parser.add_argument("--tree", help="Fichier JSON de l'arbre {n, edges}")

    def run(self, args: argparse.Namespace) -> dict:
        if args.action == "distance":
            if not args.tree:
                raise MalformedInput("--tree est requis pour distance")
            T = tree_from_json(load_json(args.tree))
            return {"weight": tree_distance(T).to_json()}
        w = load_weight(args)
        if args.action == "check":
            report = four_point_check(w)
            return {
                "holds": report.holds,
                "certificate": {
                    "ok": report.holds,
                    "failures": [list(report.witness)] if report.witness else [],
                },
            }
        T = tree_from_weight(w)
        return {
            "tree": T.to_json(),
            "type": [[list(block) for block in partition] for partition in combinatorial_type(T)],
        }
