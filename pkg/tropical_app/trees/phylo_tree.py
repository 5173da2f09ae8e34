"""
Arbres phylogénétiques pondérés (graphe networkx) et leur format JSON.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from tropical_app.core.errors import InvalidTree, MalformedInput, NotInternal
from tropical_app.utils.serialization import format_rational, parse_rational


logger = logging.getLogger(__name__)

Partition = Tuple[Tuple[int, ...], ...]


def leaf_name(i: int) -> str:
    return f"leaf{i}"


def leaf_index(name: str) -> int:
    return int(name[len("leaf"):])


def is_leaf_name(name: str) -> bool:
    return name.startswith("leaf") and name[len("leaf"):].isdigit()


@dataclass
class PhyloTree:
    """
    Arbre sans sommet de degré 2 dont les feuilles sont leaf1..leafn.

    Les arêtes portent un poids rationnel ``w``; les arêtes internes
    (entre deux sommets internes) ont un poids <= 0.

    Attributes:
        n: Nombre de feuilles
        graph: Graphe networkx non orienté
    """
    n: int
    graph: nx.Graph

    def __post_init__(self):
        """Validation de la structure et des poids."""
        g = self.graph
        if g.number_of_nodes() == 0 or not nx.is_tree(g):
            raise InvalidTree("le graphe n'est pas un arbre")
        expected = {leaf_name(i) for i in range(1, self.n + 1)}
        leaves = {v for v in g.nodes if g.degree[v] == 1}
        if leaves != expected:
            raise InvalidTree(
                f"feuilles attendues leaf1..leaf{self.n}",
                leaves=sorted(leaves),
            )
        for v in g.nodes:
            if g.degree[v] == 2:
                raise InvalidTree(f"sommet de degré 2: {v}", vertex=v)
        for a, b, data in g.edges(data=True):
            weight = Fraction(data.get("w", 0))
            g.edges[a, b]["w"] = weight
            if a not in expected and b not in expected and weight > 0:
                raise InvalidTree(
                    f"arête interne {a}-{b} de poids positif {format_rational(weight)}",
                    edge=[a, b],
                )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[str, str, object]]) -> "PhyloTree":
        g = nx.Graph()
        for a, b, w in edges:
            g.add_edge(a, b, w=Fraction(w))
        return cls(n=n, graph=g)

    @cached_property
    def internal_vertices(self) -> List[str]:
        return sorted(v for v in self.graph.nodes if not is_leaf_name(v))

    def internal_edges(self) -> List[Tuple[str, str]]:
        return sorted(
            tuple(sorted((a, b))) for a, b in self.graph.edges
            if not is_leaf_name(a) and not is_leaf_name(b)
        )

    def weight(self, a: str, b: str) -> Fraction:
        return self.graph.edges[a, b]["w"]

    def leaf_partition(self, v: str) -> Partition:
        """
        Partition des feuilles selon les composantes de T ∖ {v}.

        Raises:
            NotInternal: Si v n'est pas un sommet interne
        """
        if v not in self.graph or is_leaf_name(v):
            raise NotInternal(f"{v} n'est pas un sommet interne", vertex=v)
        rest = self.graph.subgraph(u for u in self.graph.nodes if u != v)
        blocks = []
        for comp in nx.connected_components(rest):
            blocks.append(tuple(sorted(leaf_index(u) for u in comp if is_leaf_name(u))))
        return tuple(sorted(blocks))

    def splits(self) -> FrozenSet[FrozenSet[int]]:
        """Bipartitions non triviales, chacune donnée par le côté sans la feuille 1."""
        out = set()
        for a, b in self.internal_edges():
            g = self.graph.copy()
            g.remove_edge(a, b)
            side = {leaf_index(u) for u in nx.node_connected_component(g, a) if is_leaf_name(u)}
            if 1 in side:
                side = set(range(1, self.n + 1)) - side
            out.add(frozenset(side))
        return frozenset(out)

    def to_json(self) -> dict:
        edges = []
        for a, b in sorted(tuple(sorted(e)) for e in self.graph.edges):
            edges.append({"a": a, "b": b, "w": format_rational(self.weight(a, b))})
        return {"n": self.n, "edges": edges}

    def __str__(self) -> str:
        return f"Arbre(n={self.n}, {len(self.internal_vertices)} sommets internes)"


def tree_from_json(data: dict) -> PhyloTree:
    """
    Lit {"n":5,"edges":[{"a":"v1","b":"leaf3","w":"-1"},...]}.

    Raises:
        MalformedInput: Champs absents
        InvalidTree: Structure invalide
    """
    try:
        n = int(data["n"])
        edges = [(str(e["a"]), str(e["b"]), parse_rational(e.get("w", 0))) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"JSON d'arbre invalide: {e}") from None
    return PhyloTree.from_edges(n, edges)


def star_tree(n: int, leaf_weights: Sequence = ()) -> PhyloTree:
    """Arbre étoile, poids de feuilles optionnels."""
    weights = list(leaf_weights) or [0] * n
    return PhyloTree.from_edges(n, [("v1", leaf_name(i), weights[i - 1]) for i in range(1, n + 1)])


def tree_from_splits(
    n: int,
    splits: Iterable[FrozenSet[int]],
    internal_weight=-1,
    leaf_weights: Dict[int, object] = None,
) -> PhyloTree:
    """
    Construit l'arbre d'un système de bipartitions compatibles.

    Chaque bipartition est donnée par le côté qui ne contient pas 1.
    Les sommets internes sont nommés v1, v2, ... par taille décroissante
    du côté correspondant.
    """
    leaf_weights = leaf_weights or {}
    root = frozenset(range(2, n + 1))
    family = set(frozenset(s) for s in splits) | {frozenset({i}) for i in range(2, n + 1)} | {root}
    clusters = sorted((s for s in family if len(s) > 1), key=lambda s: (-len(s), sorted(s)))
    names = {s: f"v{k + 1}" for k, s in enumerate(clusters)}
    for s in family:
        if len(s) == 1:
            names[s] = leaf_name(next(iter(s)))

    edges = [(leaf_name(1), names[root], leaf_weights.get(1, 0))]
    for s in family:
        if s == root:
            continue
        parent = min((t for t in family if s < t), key=len)
        weight = leaf_weights.get(next(iter(s)), 0) if len(s) == 1 else internal_weight
        edges.append((names[parent], names[s], weight))
    return PhyloTree.from_edges(n, edges)
