#!/usr/bin/env python3
"""
Script de démonstration : espace des arbres
Parcourt les types d'arbres à 5 feuilles, reconstruit chaque arbre depuis
ses distances et teste l'éventail TGr(2,5).
"""

import sys
import os
import logging
import random

# Ajouter le répertoire parent au path pour les imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from tropical_app.fans.fan_scan import f_vector, orbit_fvector, star_scan, tgr2_fan_builder
from tropical_app.trees.phylo_tree import tree_from_splits
from tropical_app.trees.tree_space import (
    combinatorial_type,
    enumerate_split_systems,
    tree_distance,
    tree_from_weight,
)


logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


def main():
    """Exécute la démonstration de l'espace des arbres."""
    n = 5
    rng = random.Random(0)
    print("=" * 60)
    print(f"DÉMONSTRATION - ARBRES À {n} FEUILLES")
    print("=" * 60)

    systems = enumerate_split_systems(n)
    recovered = 0
    for system in systems:
        T = tree_from_splits(n, system, internal_weight=-rng.randint(1, 5))
        rebuilt = tree_from_weight(tree_distance(T))
        if combinatorial_type(rebuilt) == combinatorial_type(T):
            recovered += 1
    print(f"Types d'arbres: {len(systems)}, reconstruits: {recovered}")

    F = tgr2_fan_builder(n)
    report = star_scan(F, ())
    print()
    print("=" * 60)
    print("ÉVENTAIL TGr(2,5)")
    print("=" * 60)
    print(f"f-vecteur: {f_vector(F)}")
    print(f"f-vecteur modulo S_5: {orbit_fvector(F)}")
    print(f"Étoile de l'origine: {report.pairs_checked} paires, {len(report.failures)} échecs")
    print("=" * 60)


if __name__ == "__main__":
    main()
