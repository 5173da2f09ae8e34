"""
Espace des arbres (d = 2) : distances d'arbre, condition des quatre points,
matroïdes de sommets et reconstruction d'un arbre depuis sa subdivision.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx

from tropical_app.core.data_models import WeightVector
from tropical_app.core.errors import (
    DimensionMismatch,
    FourPointViolation,
    MalformedInput,
    TooLarge,
)
from tropical_app.core.matroid import Matroid, partition_matroid, simplicity_report, uniform_matroid
from tropical_app.polytopes.subdivision import dual_graph, regular_subdivision
from tropical_app.trees.phylo_tree import (
    Partition,
    PhyloTree,
    leaf_name,
    tree_from_splits,
)
from tropical_app.utils.linalg import solve_exact


logger = logging.getLogger(__name__)

MAX_TREE_LEAVES = 8


def tree_distance(T: PhyloTree) -> WeightVector:
    """
    Distances d'arbre : w_ij = somme des poids sur le chemin de i à j.

    Returns:
        WeightVector sur Λ(2,n)
    """
    entries = {}
    for i in range(1, T.n + 1):
        paths = nx.single_source_shortest_path(T.graph, leaf_name(i))
        for j in range(i + 1, T.n + 1):
            path = paths[leaf_name(j)]
            entries[(i, j)] = sum((T.weight(a, b) for a, b in zip(path, path[1:])), start=0)
    return WeightVector(2, T.n, entries)


@dataclass(frozen=True)
class FourPointReport:
    """Verdict de la condition des quatre points, avec quadruplet fautif."""
    holds: bool
    witness: Optional[Tuple[int, int, int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


def four_point_check(w: WeightVector) -> FourPointReport:
    """
    Condition des quatre points : pour tout {i,j,k,l}, le minimum de
    w_ij+w_kl, w_ik+w_jl, w_il+w_jk est atteint au moins deux fois.

    Raises:
        DimensionMismatch: Si w n'est pas défini sur Λ(2,n)
    """
    if w.d != 2:
        raise DimensionMismatch(f"condition des quatre points définie pour d=2, pas d={w.d}")
    for i, j, k, l in itertools.combinations(range(1, w.n + 1), 4):
        sums = sorted((
            w.get((i, j)) + w.get((k, l)),
            w.get((i, k)) + w.get((j, l)),
            w.get((i, l)) + w.get((j, k)),
        ))
        if sums[0] != sums[1]:
            logger.debug(f"quatre points violée sur {(i, j, k, l)}: {sums}")
            return FourPointReport(False, (i, j, k, l))
    return FourPointReport(True)


def vertex_split_matroid(T: PhyloTree, v: str) -> Matroid:
    """
    Matroïde de partition des feuilles induit par T ∖ {v}.

    Raises:
        NotInternal: Si v n'est pas interne
    """
    return partition_matroid(T.leaf_partition(v))


def combinatorial_type(T: PhyloTree) -> Tuple[Partition, ...]:
    """Multiensemble trié des partitions de feuilles des sommets internes."""
    return tuple(sorted(T.leaf_partition(v) for v in T.internal_vertices))


def tree_from_weight(w: WeightVector) -> PhyloTree:
    """
    Arbre associé à w via la subdivision de Δ^{2,n}.

    Un sommet interne par cellule maximale, une arête interne par
    facette commune, la feuille i rattachée à la cellule où {i} est une
    classe parallèle. Les poids d'arêtes sont obtenus en résolvant
    exactement le système des sommes de chemins.

    Raises:
        FourPointViolation: Avec le quadruplet fautif
        MalformedInput: Moins de 3 feuilles
    """
    report = four_point_check(w)
    if not report:
        raise FourPointViolation(report.witness)
    n = w.n
    if n < 3:
        raise MalformedInput(f"au moins 3 feuilles sont nécessaires (n={n})")
    S = regular_subdivision(uniform_matroid(2, n), w)
    G = dual_graph(S)

    names = [f"v{k + 1}" for k in range(len(G.vertices))]
    edges: List[Tuple[str, str]] = [(names[i], names[j]) for i, j, _ in G.edges]
    for index, cell in enumerate(G.vertices):
        for block in simplicity_report(cell).parallel_classes:
            if len(block) == 1:
                edges.append((names[index], leaf_name(block[0])))

    topology = nx.Graph(edges)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    columns = {tuple(sorted(e)): c for c, e in enumerate(edges)}
    rows = []
    for i, j in pairs:
        path = nx.shortest_path(topology, leaf_name(i), leaf_name(j))
        row = [0] * len(edges)
        for a, b in zip(path, path[1:]):
            row[columns[tuple(sorted((a, b)))]] = 1
        rows.append(row)
    solution = solve_exact(rows, [w.get(p) for p in pairs])
    assert solution is not None, "système des distances sans solution"
    tree = PhyloTree.from_edges(n, [(a, b, x) for (a, b), x in zip(edges, solution)])
    logger.info(f"arbre reconstruit: {len(names)} sommets internes")
    return tree


def enumerate_split_systems(n: int) -> List[FrozenSet[FrozenSet[int]]]:
    """
    Systèmes de bipartitions compatibles sur [n], un par type d'arbre.

    Les arbres binaires sont construits par insertion de feuilles sur une
    arête; les autres types s'obtiennent en contractant des arêtes internes.
    """
    binary = [frozenset({frozenset({2}), frozenset({3}), frozenset({2, 3})})]
    for k in range(3, n):
        new_leaf = k + 1
        grown = []
        for edges in binary:
            for target in edges:
                updated = {target, frozenset({new_leaf})}
                for s in edges:
                    updated.add(s | {new_leaf} if target <= s else s)
                grown.append(frozenset(updated))
        binary = grown

    systems = set()
    for edges in binary:
        nontrivial = [s for s in edges if 2 <= len(s) <= n - 2]
        for size in range(len(nontrivial) + 1):
            for subset in itertools.combinations(nontrivial, size):
                systems.add(frozenset(subset))
    return sorted(systems, key=lambda s: (len(s), sorted(sorted(x) for x in s)))


def enumerate_trees(n: int) -> List[PhyloTree]:
    """
    Un arbre par type combinatoire, poids internes -1 et poids de feuilles 0.

    Raises:
        TooLarge: Si n > 8
    """
    if n > MAX_TREE_LEAVES:
        raise TooLarge(f"énumération limitée à n <= {MAX_TREE_LEAVES}", n=n)
    if n < 3:
        raise MalformedInput("au moins 3 feuilles sont nécessaires")
    trees = [tree_from_splits(n, system) for system in enumerate_split_systems(n)]
    logger.info(f"{len(trees)} types d'arbres à {n} feuilles")
    return trees
