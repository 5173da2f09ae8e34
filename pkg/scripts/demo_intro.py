#!/usr/bin/env python3
"""
Script de démonstration : subdivision de Δ(3,7) en sept cellules
Calcule la subdivision, son graphe dual en étoile et la décomposition
centre/feuilles.
"""

import sys
import os
import logging

# Ajouter le répertoire parent au path pour les imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from tropical_app.core.data_models import WeightVector
from tropical_app.core.matroid import flats_and_lines, uniform_matroid
from tropical_app.matroids.named_matroids import INTRO_TRIPLES
from tropical_app.polytopes.polytope import relative_volume
from tropical_app.polytopes.subdivision import (
    center_decomposition,
    common_vertex,
    dual_graph,
    regular_subdivision,
)


logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


def main():
    """Exécute la démonstration de la subdivision à sept cellules."""
    w = WeightVector.from_support(3, 7, INTRO_TRIPLES)
    print("=" * 60)
    print("DÉMONSTRATION - SUBDIVISION DE Δ(3,7)")
    print("=" * 60)
    print(f"Poids: {w}")
    print("=" * 60)
    print()

    S = regular_subdivision(uniform_matroid(3, 7), w)
    G = dual_graph(S)

    for index, cell in enumerate(G.vertices):
        _, lines = flats_and_lines(cell)
        print(f"Cellule {index}: {len(cell.bases)} bases, degré {G.degree(index)}, droites {lines}")

    decomposition = center_decomposition(G, S)
    print()
    print("=" * 60)
    print("DÉCOMPOSITION")
    print("=" * 60)
    print(f"Centre: {len(decomposition.center.bases)} bases")
    print(f"Feuilles: {decomposition.leaf_indices}")
    print(f"Sommet commun du centre: {common_vertex(S, decomposition.center_indices)}")
    total = sum(relative_volume(cell) for cell in G.vertices)
    print(f"Somme des volumes: {total} (Δ(3,7): {relative_volume(uniform_matroid(3, 7))})")
    print("=" * 60)


if __name__ == "__main__":
    main()
