"""
Polytopes de matroïdes Δ_M : dimension, sommets, facettes, critère GGMS et
volume exact.
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import FrozenSet, List, Sequence, Set, Tuple

from tropical_app.core.data_models import FacetDescription
from tropical_app.core.errors import DimensionMismatch, EmptyInput
from tropical_app.core.matroid import (
    Matroid,
    components,
    contraction,
    face_matroid,
    flats,
    from_mask,
    full_mask,
    is_connected,
    restriction,
    to_mask,
)
from tropical_app.utils.hull import affine_dimension, facet_vertex_sets
from tropical_app.utils.linalg import determinant


logger = logging.getLogger(__name__)


def polytope_dim(M: Matroid) -> int:
    """dim Δ_M = n − nombre de composantes."""
    return M.n - len(components(M))


def indicator(subset: Sequence[int], n: int) -> Tuple[int, ...]:
    """Vecteur u_λ."""
    members = set(subset)
    return tuple(1 if i in members else 0 for i in range(1, n + 1))


def matroid_polytope_vertices(M: Matroid) -> List[Tuple[int, ...]]:
    """Sommets u_β de Δ_M, triés."""
    return sorted(indicator(b, M.n) for b in M.sorted_bases)


def _is_root_direction(u: Sequence[int], v: Sequence[int]) -> bool:
    diff = [a - b for a, b in zip(u, v)]
    return sorted(diff) == [-1] + [0] * (len(diff) - 2) + [1]


def polytope_edges(vertices: Sequence[Sequence[int]]) -> List[Tuple[int, int]]:
    """
    Arêtes de l'enveloppe convexe (indices de sommets).

    Deux sommets forment une arête si l'intersection des facettes qui les
    contiennent tous deux ne contient aucun autre sommet.
    """
    if len(vertices) < 2:
        return []
    facets = facet_vertex_sets(vertices)
    everything = frozenset(range(len(vertices)))
    edges = []
    for i, j in combinations(range(len(vertices)), 2):
        face = everything
        for facet in facets:
            if i in facet and j in facet:
                face = face & facet
        if face == {i, j}:
            edges.append((i, j))
    return edges


def ggms_is_matroid_polytope(vertices: Sequence[Sequence[int]]) -> bool:
    """
    Critère GGMS : toute arête est parallèle à un u_i − u_j.

    Args:
        vertices: Vecteurs 0/1 de même somme

    Raises:
        EmptyInput: Si la liste est vide
    """
    if not vertices:
        raise EmptyInput("aucun sommet")
    vertices = [tuple(v) for v in sorted(set(tuple(v) for v in vertices))]
    for i, j in polytope_edges(vertices):
        if not _is_root_direction(vertices[i], vertices[j]):
            logger.debug(f"arête non GGMS: {vertices[i]} - {vertices[j]}")
            return False
    return True


def face_of(M: Matroid, facet: FacetDescription) -> Matroid:
    """Matroïde de la face définie par une facette."""
    if facet.kind == "lower_bound":
        i = facet.subset[0]
        return face_matroid(M, from_mask(full_mask(M.n) & ~to_mask((i,))))
    return face_matroid(M, facet.subset)


def _connected_facets(M: Matroid) -> List[FacetDescription]:
    """Facettes d'un matroïde connexe à au moins deux éléments."""
    target = polytope_dim(M) - 1
    out = []
    for i in range(1, M.n + 1):
        candidate = FacetDescription("lower_bound", (i,), 0)
        if polytope_dim(face_of(M, candidate)) == target:
            out.append(candidate)
    ground = full_mask(M.n)
    for eta in flats(M):
        mask = to_mask(eta)
        if not eta or mask == ground:
            continue
        if is_connected(restriction(M, eta)) and is_connected(contraction(M, eta)):
            out.append(FacetDescription("flat_bound", eta, M.rank(mask)))
    return out


def facets(M: Matroid) -> List[FacetDescription]:
    """
    Facettes de Δ_M : bornes x_i >= 0 et x_η <= ρ(η) pour les plats non
    dégénérés (restriction et contraction connexes).

    Pour un matroïde non connexe, les facettes sont assemblées bloc par bloc.

    Returns:
        Bornes inférieures triées par élément, puis plats par (taille, éléments)
    """
    lower, upper = [], []
    for block in components(M):
        if len(block) < 2:
            continue
        sub = restriction(M, block)
        for facet in _connected_facets(sub):
            lifted = FacetDescription(facet.kind, tuple(block[k - 1] for k in facet.subset), facet.bound)
            (lower if lifted.kind == "lower_bound" else upper).append(lifted)
    result = sorted(lower, key=lambda f: f.subset) + sorted(upper, key=lambda f: (len(f.subset), f.subset))
    target = polytope_dim(M) - 1
    for facet in result:
        assert polytope_dim(face_of(M, facet)) == target, f"face de dimension incorrecte: {facet}"
    return result


def hull_facets(M: Matroid) -> Set[FrozenSet[int]]:
    """Bases de chaque facette de Δ_M, calculées par enveloppe convexe exacte."""
    vertices = [indicator(b, M.n) for b in M.sorted_bases]
    masks = [to_mask(b) for b in M.sorted_bases]
    if len(vertices) < 2:
        return set()
    return {frozenset(masks[i] for i in facet) for facet in facet_vertex_sets(vertices)}


def _triangulate(points: List[Tuple[Fraction, ...]], indices: List[int]) -> List[List[int]]:
    """Triangulation par placement : cône depuis un sommet sur les facettes opposées."""
    subset = [points[i] for i in indices]
    dim = affine_dimension(subset)
    if len(indices) == dim + 1:
        return [list(indices)]
    apex = indices[0]
    simplices = []
    for facet in facet_vertex_sets(subset):
        facet_indices = [indices[k] for k in sorted(facet)]
        if apex in facet_indices:
            continue
        for simplex in _triangulate(points, facet_indices):
            simplices.append(simplex + [apex])
    return simplices


def relative_volume(M: Matroid) -> Fraction:
    """
    Volume exact de Δ_M projeté sur les n−1 premières coordonnées.

    Raises:
        DimensionMismatch: Si Δ_M n'est pas de dimension n−1
    """
    dim = polytope_dim(M)
    if dim != M.n - 1:
        raise DimensionMismatch(f"Δ_M de dimension {dim}, volume défini en dimension {M.n - 1}")
    points = [tuple(Fraction(x) for x in v[:-1]) for v in matroid_polytope_vertices(M)]
    if dim == 0:
        return Fraction(1)
    total = Fraction(0)
    for simplex in _triangulate(points, list(range(len(points)))):
        base = points[simplex[0]]
        rows = [[a - b for a, b in zip(points[k], base)] for k in simplex[1:]]
        total += abs(determinant(rows))
    return total / factorial(dim)
