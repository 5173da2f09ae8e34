"""
Subdivisions régulières de Δ_M induites par un vecteur de poids, certificat
matroïdal, graphe dual et décomposition centre/feuilles.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from tropical_app.core.data_models import WeightVector
from tropical_app.core.errors import (
    DimensionMismatch,
    EmptyInput,
    ExchangeViolation,
    NonMatroidCell,
    TooFewCells,
)
from tropical_app.core.matroid import (
    Matroid,
    exchange_violation,
    from_mask,
    validate,
)
from tropical_app.polytopes.polytope import indicator, polytope_dim
from tropical_app.utils.hull import affine_dimension, h_representation
from tropical_app.utils.linalg import solve_exact
from tropical_app.utils.serialization import rational_vector


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubdivisionCell:
    """
    Cellule maximale de Δ_{M,w}.

    Attributes:
        bases: Masques des sommets de la cellule
        witness: Fonctionnelle c dont l'argmin de w_β − <c,u_β> est la cellule
        matroid: Le matroïde de la cellule, ou None si l'échange échoue
        violation: Contre-exemple à l'échange le cas échéant
    """
    bases: FrozenSet[int]
    witness: Tuple[Fraction, ...]
    matroid: Optional[Matroid]
    violation: Optional[ExchangeViolation] = None

    @property
    def sorted_bases(self) -> List[Tuple[int, ...]]:
        return sorted(from_mask(b) for b in self.bases)

    @property
    def is_matroid(self) -> bool:
        return self.matroid is not None


@dataclass
class SubdivisionComplex:
    """
    Subdivision régulière Δ_{M,w}.

    Attributes:
        ambient: Matroïde M
        weight: Vecteur de poids w
        cells: Cellules maximales, triées par liste de bases
    """
    ambient: Matroid
    weight: WeightVector
    cells: List[SubdivisionCell] = field(default_factory=list)

    @property
    def maximal_cells(self) -> List[Matroid]:
        """
        Matroïdes des cellules maximales.

        Raises:
            NonMatroidCell: Si une cellule n'est pas un matroïde
        """
        out = []
        for index, cell in enumerate(self.cells):
            if cell.matroid is None:
                raise NonMatroidCell(index, cell.violation)
            out.append(cell.matroid)
        return out

    @property
    def cell_witnesses(self) -> List[Tuple[Fraction, ...]]:
        return [cell.witness for cell in self.cells]

    @property
    def is_matroid_subdivision(self) -> bool:
        return all(cell.is_matroid for cell in self.cells)

    @property
    def certificate(self) -> dict:
        """Verdict d'échange par cellule."""
        failures = [
            {"cell": i, **cell.violation.witness()}
            for i, cell in enumerate(self.cells) if cell.violation is not None
        ]
        return {"ok": not failures, "cells": len(self.cells), "failures": failures}

    def cell_basis_sets(self) -> FrozenSet[FrozenSet[int]]:
        """Ensemble des cellules, pour comparer deux subdivisions."""
        return frozenset(cell.bases for cell in self.cells)

    @cached_property
    def adjacency(self) -> List[Tuple[int, int, Matroid]]:
        """Paires de cellules partageant une facette, avec le matroïde commun."""
        return _adjacency(self.maximal_cells)

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "weight": self.weight.to_json(),
            "cells": [
                {"bases": [list(b) for b in cell.sorted_bases],
                 "is_matroid": cell.is_matroid,
                 "witness": rational_vector(cell.witness)}
                for cell in self.cells
            ],
            "certificate": self.certificate,
        }


def _witness_from_facet(row: Sequence[Fraction], n: int) -> Tuple[Fraction, ...]:
    a_x = row[1:n + 1]
    a_h = row[n + 1]
    return tuple(-a / a_h for a in a_x)


def _affine_witness(bases: List[int], w: WeightVector, n: int) -> Tuple[Fraction, ...]:
    """c tel que w_β − <c,u_β> est constant sur toutes les bases."""
    rows = [list(indicator(from_mask(b), n)) + [1] for b in bases]
    rhs = [w.get(from_mask(b)) for b in bases]
    solution = solve_exact(rows, rhs)
    assert solution is not None, "relèvement affine sans solution"
    return tuple(solution[:n])


def _make_cell(bases: FrozenSet[int], witness: Tuple[Fraction, ...], M: Matroid) -> SubdivisionCell:
    violation = exchange_violation(bases)
    matroid = Matroid(n=M.n, d=M.d, bases=bases) if violation is None else None
    return SubdivisionCell(bases=bases, witness=witness, matroid=matroid, violation=violation)


def regular_subdivision(M: Matroid, w: WeightVector) -> SubdivisionComplex:
    """
    Subdivision régulière de Δ_M induite par w.

    Les cellules maximales sont les projections des facettes inférieures
    (normale intérieure de dernière coordonnée positive) de
    conv{(u_β, w_β)}. Une cellule non matroïdale est signalée dans le
    certificat, sans exception.

    Args:
        M: Matroïde ambiant
        w: Poids sur Λ(d,n)

    Returns:
        SubdivisionComplex avec témoins exacts
    """
    if (w.d, w.n) != (M.d, M.n):
        raise DimensionMismatch(f"poids (d={w.d}, n={w.n}) pour un matroïde (d={M.d}, n={M.n})")
    bases = sorted(M.bases, key=from_mask)
    lifted = [list(indicator(from_mask(b), M.n)) + [w.get(from_mask(b))] for b in bases]

    if affine_dimension(lifted) == polytope_dim(M):
        witness = _affine_witness(bases, w, M.n)
        cells = [_make_cell(frozenset(bases), witness, M)]
    else:
        inequalities, _ = h_representation(lifted)
        cells = []
        for row in inequalities:
            if row[-1] <= 0:
                continue
            tight = frozenset(
                b for b, point in zip(bases, lifted)
                if row[0] + sum(a * x for a, x in zip(row[1:], point)) == 0
            )
            cells.append(_make_cell(tight, _witness_from_facet(row, M.n), M))
        cells.sort(key=lambda c: c.sorted_bases)

    complex_ = SubdivisionComplex(ambient=M, weight=w, cells=cells)
    logger.info(
        f"subdivision de {M}: {len(cells)} cellules maximales, "
        f"matroïdale={complex_.is_matroid_subdivision}"
    )
    return complex_


def witness_is_sound(S: SubdivisionComplex, index: int) -> bool:
    """Vérifie que l'argmin de w_β − <c,u_β> est exactement la cellule."""
    cell = S.cells[index]
    values = {}
    for b in S.ambient.bases:
        u = indicator(from_mask(b), S.ambient.n)
        values[b] = S.weight.get(from_mask(b)) - sum(c * x for c, x in zip(cell.witness, u))
    low = min(values.values())
    return frozenset(b for b, v in values.items() if v == low) == cell.bases


def _adjacency(cells: List[Matroid]) -> List[Tuple[int, int, Matroid]]:
    edges = []
    for i, j in combinations(range(len(cells)), 2):
        common = cells[i].bases & cells[j].bases
        if not common:
            continue
        assert exchange_violation(common) is None, "intersection de cellules non matroïdale"
        meet = Matroid(n=cells[i].n, d=cells[i].d, bases=frozenset(common))
        if polytope_dim(meet) == polytope_dim(cells[i]) - 1:
            edges.append((i, j, meet))
    return edges


@dataclass
class DualGraph:
    """
    Graphe dual Γ_w : une cellule maximale par sommet, une arête par
    facette commune étiquetée par son matroïde.
    """
    vertices: List[Matroid]
    edges: List[Tuple[int, int, Matroid]]

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        for index, cell in enumerate(self.vertices):
            g.add_node(index, matroid=cell)
        for i, j, meet in self.edges:
            g.add_edge(i, j, matroid=meet)
        return g

    def degree(self, index: int) -> int:
        return self.graph.degree[index]

    def to_json(self) -> dict:
        return {
            "vertices": [cell.to_json() for cell in self.vertices],
            "edges": [{"i": i, "j": j, "matroid": meet.to_json()} for i, j, meet in self.edges],
        }


def dual_graph(S: SubdivisionComplex) -> DualGraph:
    """
    Graphe dual de la subdivision.

    Raises:
        NonMatroidCell: Si une cellule n'est pas un matroïde
    """
    cells = S.maximal_cells
    return DualGraph(vertices=cells, edges=list(S.adjacency))


@dataclass
class CenterDecomposition:
    """
    Centre C (union des cellules non feuilles) et feuilles avec leur
    facette commune avec le centre.
    """
    center: Matroid
    leaves: List[Tuple[Matroid, Matroid]]
    leaf_indices: List[int]
    center_indices: List[int]


def center_decomposition(G: DualGraph, S: SubdivisionComplex) -> CenterDecomposition:
    """
    Sépare les cellules feuilles (sommets de degré 1 de Γ_w) du centre.

    Raises:
        TooFewCells: Moins de trois cellules maximales
        ExchangeViolation: Si le centre n'est pas un matroïde
    """
    if len(G.vertices) <= 2:
        raise TooFewCells(f"{len(G.vertices)} cellules: au moins 3 requises", cells=len(G.vertices))
    leaf_indices = [i for i in range(len(G.vertices)) if G.degree(i) == 1]
    center_indices = [i for i in range(len(G.vertices)) if i not in leaf_indices]
    union = set()
    for i in center_indices:
        union |= G.vertices[i].bases
    ambient = S.ambient
    center = validate((from_mask(b) for b in union), ambient.n, ambient.d)
    leaves = []
    for i in leaf_indices:
        leaf = G.vertices[i]
        facet = Matroid(n=ambient.n, d=ambient.d, bases=frozenset(leaf.bases & center.bases))
        leaves.append((leaf, facet))
    logger.info(f"décomposition: centre de {len(center.bases)} bases, {len(leaves)} feuilles")
    return CenterDecomposition(center=center, leaves=leaves,
                               leaf_indices=leaf_indices, center_indices=center_indices)


def common_vertex(S: SubdivisionComplex, cells: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """
    Plus petite base (ordre lexicographique) commune aux cellules choisies.

    Raises:
        EmptyInput: Si aucune cellule n'est donnée
    """
    if not cells:
        raise EmptyInput("au moins une cellule est requise")
    common = set(S.cells[cells[0]].bases)
    for index in cells[1:]:
        common &= S.cells[index].bases
    if not common:
        return None
    return min(from_mask(b) for b in common)
