#!/usr/bin/env python3
"""
Script de démonstration : cartes affines et témoins d'unité
Pour chaque matroïde (3,[6]) ou (3,[7]) de la démonstration, affiche la
relation de la carte en β = 123 et un mineur jacobien inversible.
"""

import sys
import os
import logging

# Ajouter le répertoire parent au path pour les imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from tropical_app.algebra.charts import affine_chart, affine_presentation, jacobian_minors, unit_witness
from tropical_app.algebra.polynomials import format_polynomial
from tropical_app.matroids.named_matroids import named_matroid


logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


def main():
    """Exécute la démonstration des cartes affines."""
    print("=" * 60)
    print("DÉMONSTRATION - CARTES AFFINES")
    print("=" * 60)

    for name in ("fig36", "m2_37", "m1_37"):
        chart = affine_chart(named_matroid(name), (1, 2, 3))
        presentation = affine_presentation(chart)
        variables = [chart.variable(x) for x in presentation.variables]
        result = jacobian_minors(presentation.generators, variables)
        certificate = unit_witness(result.minor_polynomials, chart)

        print(f"\n{name}:")
        print(f"  Variables éliminées: {[x for x, _, _ in presentation.eliminated]}")
        for g in presentation.generators:
            print(f"  Relation: {format_polynomial(g)}")
        if certificate is None:
            print("  Aucun mineur inversible trouvé")
        else:
            print(f"  Mineur inversible: {format_polynomial(certificate.minor)} = A_λ pour λ ∈ {list(certificate.factors)}")
    print("=" * 60)


if __name__ == "__main__":
    main()
