"""
Matroïdes nommés pré-configurés et fabriques des matroïdes M_ijk / M'_ijk.
"""

import itertools
import re
from typing import Dict, Sequence

from tropical_app.core.errors import BadIndex, UnknownName
from tropical_app.core.matroid import Matroid, matroid_from_lines, to_mask, validate


# Droites du plan de Fano (7 points, caractéristique 2)
FANO_LINES = ((1, 2, 4), (1, 3, 5), (1, 6, 7), (2, 3, 6), (2, 5, 7), (3, 4, 7), (4, 5, 6))

# Configuration de Pappus (9 points, 9 droites)
PAPPUS_LINES = (
    (1, 2, 4), (1, 3, 5), (1, 8, 9), (2, 3, 6), (2, 7, 9),
    (3, 7, 8), (4, 5, 7), (4, 6, 8), (5, 6, 9),
)

# Matroïde (3,[6]) à quatre droites
FIG36_LINES = ((1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6))

# Matroïde C : le plan de Fano privé de la droite {4,5,6}
C_INTRO_LINES = FANO_LINES[:6]

M1_37_LINES = ((1, 2, 4), (1, 3, 5), (2, 3, 6), (3, 4, 7), (5, 6, 7))
M2_37_LINES = C_INTRO_LINES

# Triplets utilisés pour le vecteur de poids de l'introduction
INTRO_TRIPLES = C_INTRO_LINES

FANO = matroid_from_lines(7, FANO_LINES)
PAPPUS = matroid_from_lines(9, PAPPUS_LINES)
FIG36 = matroid_from_lines(6, FIG36_LINES)
C_INTRO = matroid_from_lines(7, C_INTRO_LINES)
M1_37 = matroid_from_lines(7, M1_37_LINES)
M2_37 = matroid_from_lines(7, M2_37_LINES)

NAMED_MATROIDS: Dict[str, Matroid] = {
    "fano": FANO,
    "pappus": PAPPUS,
    "fig36": FIG36,
    "c_intro": C_INTRO,
    "m1_37": M1_37,
    "m2_37": M2_37,
}

_PARAMETRIC = re.compile(r"^(m|mprime)_(?:ijk\((\d+),(\d+),(\d+)\)|(\d)(\d)(\d))$")


def _check_triple(triple: Sequence[int]) -> tuple:
    triple = tuple(sorted(triple))
    if len(set(triple)) != 3 or any(not 1 <= i <= 7 for i in triple):
        raise BadIndex(f"triplet invalide {triple}: trois éléments distincts de [7]")
    return triple


def create_m_ijk(i: int, j: int, k: int) -> Matroid:
    """
    Crée M_ijk : bases β de U(3,7) avec |β ∩ {i,j,k}| >= 2.

    Args:
        i, j, k: Éléments distincts de [7]

    Returns:
        Matroid de rang 3 sur [7]
    """
    eta = to_mask(_check_triple((i, j, k)))
    bases = [
        b for b in itertools.combinations(range(1, 8), 3)
        if (to_mask(b) & eta).bit_count() >= 2
    ]
    return validate(bases, 7, 3)


def create_mprime_ijk(i: int, j: int, k: int) -> Matroid:
    """
    Crée M'_ijk : bases β de U(3,7) avec |β ∩ {i,j,k}| = 2.

    C'est la facette commune de C et M_ijk quand {i,j,k} est une droite de C.
    """
    eta = to_mask(_check_triple((i, j, k)))
    bases = [
        b for b in itertools.combinations(range(1, 8), 3)
        if (to_mask(b) & eta).bit_count() == 2
    ]
    return validate(bases, 7, 3)


def named_matroid(name: str) -> Matroid:
    """
    Retourne un matroïde par son nom.

    Noms acceptés : fano, pappus, fig36, m1_37, m2_37, c_intro,
    m_ijk(i,j,k) ou m_ijk, mprime_ijk(i,j,k) ou mprime_ijk.

    Raises:
        UnknownName: Si le nom n'est pas reconnu
    """
    key = name.strip().lower().replace(" ", "")
    if key in NAMED_MATROIDS:
        return NAMED_MATROIDS[key]
    match = _PARAMETRIC.match(key)
    if match is None:
        raise UnknownName(f"matroïde inconnu: {name!r}", name=name)
    kind = match.group(1)
    digits = [g for g in match.groups()[1:] if g is not None]
    triple = tuple(int(g) for g in digits)
    factory = create_m_ijk if kind == "m" else create_mprime_ijk
    return factory(*triple)
