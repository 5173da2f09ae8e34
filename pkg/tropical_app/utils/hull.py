"""
Enveloppes convexes exactes par double description (pycddlib, arithmétique
rationnelle).

Conventions cdd :
- générateurs : ligne [1, x...] pour un point, [0, x...] pour un rayon
- inégalités : ligne [b, a...] pour b + a·x >= 0 (égalité si dans lin_set)
"""

import logging
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Tuple

import cdd

from tropical_app.core.errors import EmptyInput
from tropical_app.utils.linalg import exact_rank


logger = logging.getLogger(__name__)

NUMBER_TYPE = 'fraction'

Row = Tuple[Fraction, ...]


def _build_matrix(rows: List[list], linear_rows: List[list], rep_type) -> "cdd.Matrix":
    if rows:
        mat = cdd.Matrix(rows, number_type=NUMBER_TYPE)
        if linear_rows:
            mat.extend(linear_rows, linear=True)
    else:
        mat = cdd.Matrix(linear_rows, linear=True, number_type=NUMBER_TYPE)
    mat.rep_type = rep_type
    return mat


def _split_rows(mat) -> Tuple[List[Row], List[Row]]:
    lin = mat.lin_set
    regular, linear = [], []
    for i in range(mat.row_size):
        row = tuple(Fraction(x) for x in mat[i])
        (linear if i in lin else regular).append(row)
    return regular, linear


def h_representation(
    points: Sequence[Sequence],
    rays: Sequence[Sequence] = (),
    lines: Sequence[Sequence] = (),
) -> Tuple[List[Row], List[Row]]:
    """
    Inégalités et égalités de conv(points) + cone(rays) + span(lines).

    Args:
        points: Points (au moins un)
        rays: Rayons
        lines: Directions de linéalité

    Returns:
        (inégalités, égalités) en lignes [b, a...], représentation minimale

    Raises:
        EmptyInput: Si aucun point n'est donné
    """
    if not points:
        raise EmptyInput("au moins un point est requis")
    rows = [[1] + [Fraction(x) for x in p] for p in points]
    rows += [[0] + [Fraction(x) for x in r] for r in rays]
    linear = [[0] + [Fraction(x) for x in v] for v in lines]
    mat = _build_matrix(rows, linear, cdd.RepType.GENERATOR)
    inequalities = cdd.Polyhedron(mat).get_inequalities()
    inequalities.canonicalize()
    regular, equalities = _split_rows(inequalities)
    logger.debug(f"double description: {len(points)} points -> {len(regular)} facettes")
    return regular, equalities


def v_representation(
    inequalities: Sequence[Sequence],
    equalities: Sequence[Sequence] = (),
) -> Tuple[List[Row], List[Row], List[Row]]:
    """
    Générateurs d'un polyèdre donné par inégalités et égalités.

    Returns:
        (points, rayons, droites), sans la colonne d'homogénéisation
    """
    rows = [[Fraction(x) for x in r] for r in inequalities]
    linear = [[Fraction(x) for x in r] for r in equalities]
    if not rows and not linear:
        raise EmptyInput("au moins une contrainte est requise")
    mat = _build_matrix(rows, linear, cdd.RepType.INEQUALITY)
    generators = cdd.Polyhedron(mat).get_generators()
    regular, linear_gens = _split_rows(generators)
    points = [r[1:] for r in regular if r[0] != 0]
    rays = [r[1:] for r in regular if r[0] == 0]
    lines = [r[1:] for r in linear_gens]
    return points, rays, lines


def affine_dimension(points: Sequence[Sequence]) -> int:
    """Dimension de l'enveloppe affine d'un ensemble de points."""
    if not points:
        raise EmptyInput("ensemble de points vide")
    base = [Fraction(x) for x in points[0]]
    return exact_rank([[Fraction(x) - b for x, b in zip(p, base)] for p in points[1:]])


def facet_vertex_sets(points: Sequence[Sequence]) -> List[FrozenSet[int]]:
    """
    Ensembles d'indices des points situés sur chaque facette.

    Returns:
        Une entrée par facette, dans l'ordre de cdd
    """
    inequalities, _ = h_representation(points)
    facets = []
    for row in inequalities:
        b, a = row[0], row[1:]
        tight = frozenset(
            i for i, p in enumerate(points)
            if b + sum(ai * Fraction(x) for ai, x in zip(a, p)) == 0
        )
        facets.append(tight)
    return facets


def cone_h_representation(
    rays: Sequence[Sequence],
    lines: Sequence[Sequence],
    dim: Optional[int] = None,
) -> Tuple[List[Row], List[Row]]:
    """Inégalités homogènes du cône cone(rays) + span(lines)."""
    if dim is None:
        if not rays and not lines:
            raise EmptyInput("dimension ambiante inconnue pour un cône sans générateur")
        dim = len(rays[0]) if rays else len(lines[0])
    return h_representation([[0] * dim], rays, lines)
