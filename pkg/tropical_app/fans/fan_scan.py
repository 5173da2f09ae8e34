"""
Éventails indexés : étoile d'un cône et test des droites, f-vecteurs modulo
S_n, éventail des arbres TGr(2,n) et lecture/écriture des fichiers
d'éventails.
"""

import itertools
import logging
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from tropical_app.core.data_models import Cone, FanData, WeightVector, plucker_indices
from tropical_app.core.errors import (
    ActionInvalid,
    DimensionMismatch,
    MalformedInput,
    TooLarge,
    UnknownCone,
)
from tropical_app.fans.cones import (
    LineTestResult,
    check_permutation,
    lineality_NH,
    pair_line_test,
    symmetric_action,
)
from tropical_app.trees.tree_space import enumerate_split_systems, four_point_check
from tropical_app.utils.linalg import modulo_span_reducer, primitive_integer_vector
from tropical_app.utils.serialization import load_json, subset_key


logger = logging.getLogger(__name__)

MIN_TREE_FAN_LEAVES = 4
MAX_TREE_FAN_LEAVES = 7

CONVENTIONS = ("lex1", "lex0", "website0", "revlex0")


# ============================================================================
# ÉTOILE D'UN CÔNE
# ============================================================================

@dataclass
class StarScanReport:
    """
    Résultat du test des droites sur St(σ).

    Attributes:
        center: Indices (0-based) des rayons de σ
        star: Cônes maximaux contenant σ
        pairs_checked: Nombre de paires {τ, τ′} testées
        failures: Paires en échec (indices dans ``star``) avec témoin
    """
    center: Tuple[int, ...]
    star: List[Tuple[int, ...]]
    pairs_checked: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        """Indices de rayons 1-based, comme dans la convention lex1."""
        return {
            "center": [i + 1 for i in self.center],
            "star": [[i + 1 for i in c] for c in self.star],
            "pairs_checked": self.pairs_checked,
            "failures": self.failures,
        }


def star(F: FanData, sigma: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    Cônes maximaux dont l'ensemble de rayons contient σ.

    Raises:
        UnknownCone: Si σ n'est ni l'origine ni un cône de F
    """
    sigma = tuple(sorted(int(i) for i in sigma))
    if sigma and sigma not in F.all_cones():
        raise UnknownCone(f"le cône {sigma} n'appartient pas à l'éventail", cone=list(sigma))
    members = set(sigma)
    return [c for c in F.maximal_cones() if members <= set(c)]


def _pair_task(args) -> LineTestResult:
    center, tau, tau_prime = args
    return pair_line_test(center, tau, tau_prime)


def star_scan(
    F: FanData,
    sigma: Sequence[int],
    lineality: Optional[Sequence[Sequence[int]]] = None,
    workers: int = 1,
) -> StarScanReport:
    """
    Test τ ∩ (−τ′) = 0 dans N(σ) pour toutes les paires de St(σ), τ = τ′
    compris.

    Args:
        F: Éventail
        sigma: Indices 0-based des rayons de σ (vide pour l'origine)
        lineality: Linéalité globale (celle de F par défaut)
        workers: Nombre de processus (> 1 : multiprocessing.Pool)

    Raises:
        UnknownCone: Si σ n'est pas un cône de F
    """
    sigma = tuple(sorted(int(i) for i in sigma))
    cones = star(F, sigma)
    if lineality is None:
        lineality = F.lineality if F.lineality is not None else []
    center = Cone(
        rays=tuple(F.ray(i) for i in sigma),
        lineality=tuple(tuple(int(x) for x in v) for v in lineality),
    )
    extras = [[F.ray(i) for i in c if i not in sigma] for c in cones]
    pairs = list(itertools.combinations_with_replacement(range(len(cones)), 2))
    tasks = [(center, extras[i], extras[j]) for i, j in pairs]

    if workers > 1 and len(tasks) > 1:
        with Pool(processes=workers) as pool:
            results = pool.map(_pair_task, tasks)
    else:
        results = [_pair_task(t) for t in tasks]

    report = StarScanReport(center=sigma, star=cones, pairs_checked=len(pairs))
    for (i, j), result in zip(pairs, results):
        if not result:
            report.failures.append({"i": i, "j": j, "witness": result.witness})
    logger.info(
        f"étoile de {sigma}: {len(cones)} cônes, {len(pairs)} paires, "
        f"{len(report.failures)} échecs"
    )
    return report


# ============================================================================
# F-VECTEURS ET ORBITES
# ============================================================================

def f_vector(F: FanData) -> Tuple[int, ...]:
    """Nombre de cônes par dimension, de 1 à la dimension maximale."""
    dims = [k for k in F.cones_by_dim if k >= 1 and F.cones_by_dim[k]]
    if not dims:
        return ()
    return tuple(len(F.cones_by_dim.get(k, [])) for k in range(1, max(dims) + 1))


def _ray_keys(F: FanData) -> List[Tuple[int, ...]]:
    """Représentants primitifs des rayons modulo la linéalité."""
    basis = [list(v) for v in F.lineality] if F.lineality is not None else []
    reduce_vector = modulo_span_reducer(basis)
    return [tuple(primitive_integer_vector(reduce_vector(F.ray(i)))) for i in range(F.rays.shape[0])]


def ray_action(F: FanData, sigma: Sequence[int], keys: Optional[List[Tuple[int, ...]]] = None) -> List[int]:
    """
    Permutation des rayons induite par σ.

    Raises:
        ActionInvalid: Si l'image d'un rayon n'est pas un rayon de F
    """
    sigma = check_permutation(sigma, F.n)
    keys = keys if keys is not None else _ray_keys(F)
    position = {k: i for i, k in enumerate(keys)}
    basis = [list(v) for v in F.lineality] if F.lineality is not None else []
    reduce_vector = modulo_span_reducer(basis)
    images = []
    for i in range(F.rays.shape[0]):
        moved = symmetric_action(sigma, F.ray(i), F.d, F.n)
        key = tuple(primitive_integer_vector(reduce_vector(moved)))
        if key not in position:
            raise ActionInvalid(
                f"l'image du rayon {i} par {sigma} n'est pas un rayon",
                ray=i, permutation=list(sigma),
            )
        images.append(position[key])
    return images


def _orbit_graphs(F: FanData, group: Optional[Sequence[Sequence[int]]]) -> Dict[int, nx.Graph]:
    generators = [tuple(g) for g in (group if group is not None else F.symmetry)]
    keys = _ray_keys(F)
    actions = [ray_action(F, g, keys) for g in generators]
    graphs = {}
    for dim, cones in F.cones_by_dim.items():
        if dim < 1:
            continue
        known = set(cones)
        G = nx.Graph()
        G.add_nodes_from(cones)
        for cone in cones:
            for g, images in zip(generators, actions):
                image = tuple(sorted(images[i] for i in cone))
                if image not in known:
                    raise ActionInvalid(
                        f"l'image du cône {cone} par {g} n'est pas un cône",
                        cone=list(cone), permutation=list(g),
                    )
                G.add_edge(cone, image)
        graphs[dim] = G
    return graphs


def orbit_fvector(F: FanData, group: Optional[Sequence[Sequence[int]]] = None) -> Tuple[int, ...]:
    """
    Nombre d'orbites de cônes par dimension sous le groupe engendré par
    ``group`` (par défaut la symétrie enregistrée dans F).

    Raises:
        ActionInvalid: Si un rayon ou un cône permuté est absent
    """
    graphs = _orbit_graphs(F, group)
    if not graphs:
        return ()
    top = max(graphs)
    counts = tuple(
        nx.number_connected_components(graphs[k]) if k in graphs else 0
        for k in range(1, top + 1)
    )
    logger.info(f"f-vecteur modulo symétrie: {counts}")
    return counts


def orbit_representatives(
    F: FanData,
    group: Optional[Sequence[Sequence[int]]] = None,
) -> Dict[int, List[Tuple[int, ...]]]:
    """Plus petit cône (ordre lexicographique) de chaque orbite, par dimension."""
    graphs = _orbit_graphs(F, group)
    return {
        dim: sorted(min(component) for component in nx.connected_components(G))
        for dim, G in graphs.items()
    }


# ============================================================================
# ÉVENTAIL DES ARBRES
# ============================================================================

def split_ray(n: int, split: Sequence[int]) -> List[int]:
    """Distance d'arbre de la bipartition seule : -1 si i et j sont séparés."""
    side = set(split)
    return [-1 if (i in side) != (j in side) else 0 for i, j in plucker_indices(2, n)]


def tree_fan_violations(F: FanData) -> List[Tuple[int, ...]]:
    """Cônes dont le barycentre des rayons viole la condition des quatre points."""
    bad = []
    for cone in F.all_cones():
        total = [sum(F.ray(i)[k] for i in cone) for k in range(F.ambient_dim)]
        if not four_point_check(WeightVector.from_list(2, F.n, total)):
            bad.append(cone)
    return bad


def tgr2_fan_builder(n: int) -> FanData:
    """
    Éventail des arbres phylogénétiques à n feuilles.

    Un rayon par bipartition non triviale (côté sans la feuille 1), un
    cône par type d'arbre, linéalité N^H de rang n.

    Raises:
        TooLarge: Si n > 7
        MalformedInput: Si n < 4
    """
    if n > MAX_TREE_FAN_LEAVES:
        raise TooLarge(f"éventail des arbres limité à n <= {MAX_TREE_FAN_LEAVES}", n=n)
    if n < MIN_TREE_FAN_LEAVES:
        raise MalformedInput(f"l'éventail des arbres exige n >= {MIN_TREE_FAN_LEAVES}")
    splits = sorted(
        (s for size in range(2, n - 1) for s in itertools.combinations(range(2, n + 1), size)),
        key=lambda s: (len(s), s),
    )
    position = {frozenset(s): k for k, s in enumerate(splits)}
    cones_by_dim: Dict[int, List[Tuple[int, ...]]] = {}
    for system in enumerate_split_systems(n):
        if not system:
            continue
        cone = tuple(sorted(position[s] for s in system))
        cones_by_dim.setdefault(len(cone), []).append(cone)

    identity = list(range(1, n + 1))
    swap = tuple([2, 1] + identity[2:])
    cycle = tuple(identity[1:] + [1])
    F = FanData(
        d=2, n=n,
        rays=[split_ray(n, s) for s in splits],
        cones_by_dim=cones_by_dim,
        symmetry=[swap, cycle],
        lineality=lineality_NH(2, n),
    )
    bad = tree_fan_violations(F)
    assert not bad, f"cônes hors de l'espace des arbres: {bad}"
    logger.info(f"éventail TGr(2,{n}): {len(splits)} rayons, f = {f_vector(F)}")
    return F


# ============================================================================
# FICHIERS D'ÉVENTAILS
# ============================================================================

def coordinate_order(convention: str, d: int, n: int) -> List[Tuple[int, ...]]:
    """
    Ordre des coordonnées Λ(d,n) dans un fichier.

    lex1, lex0 et website0 : lexicographique; revlex0 : tri sur les
    indices lus de droite à gauche.
    """
    if convention not in CONVENTIONS:
        raise MalformedInput(f"convention d'indices inconnue: {convention!r}")
    index = plucker_indices(d, n)
    if convention == "revlex0":
        return sorted(index, key=lambda lam: lam[::-1])
    return index


def permutation_table(convention: str, d: int, n: int) -> List[dict]:
    """Correspondance position dans le fichier -> position lexicographique."""
    lex = {lam: k for k, lam in enumerate(plucker_indices(d, n))}
    return [
        {"file": k, "lex": lex[lam], "subset": subset_key(lam, n)}
        for k, lam in enumerate(coordinate_order(convention, d, n))
    ]


def _to_lex(rows: Sequence[Sequence[int]], table: List[dict], width: int) -> List[List[int]]:
    out = []
    for row in rows:
        if len(row) != width:
            raise DimensionMismatch(f"vecteur de longueur {len(row)} pour {width} coordonnées")
        lex = [0] * width
        for entry in table:
            lex[entry["lex"]] = int(row[entry["file"]])
        out.append(lex)
    return out


def fan_from_json(data: dict) -> FanData:
    """
    Lit un éventail {"d","n","index_convention","rays","cones"[,"lineality","symmetry"]}.

    Raises:
        MalformedInput: Champs absents ou convention inconnue
        DimensionMismatch: Rayon de mauvaise longueur
    """
    try:
        d = int(data["d"])
        n = int(data["n"])
        convention = data.get("index_convention", "lex1")
        rays = data["rays"]
        cones = data["cones"]
        offset = 1 if convention == "lex1" else 0
        cones_by_dim: Dict[int, List[Tuple[int, ...]]] = {}
        for block in cones:
            cells = [tuple(int(i) - offset for i in cell) for cell in block["cells"]]
            cones_by_dim.setdefault(int(block["dim"]), []).extend(cells)
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"JSON d'éventail invalide: {e}") from None
    table = permutation_table(convention, d, n)
    width = len(table)
    lineality = data.get("lineality")
    F = FanData(
        d=d, n=n,
        rays=_to_lex(rays, table, width),
        cones_by_dim=cones_by_dim,
        symmetry=[check_permutation(s, n) for s in data.get("symmetry", [])],
        lineality=_to_lex(lineality, table, width) if lineality else None,
    )
    logger.info(f"éventail lu ({convention}): {F.rays.shape[0]} rayons, f = {f_vector(F)}")
    return F


def load_fan(path: Union[str, Path]) -> FanData:
    return fan_from_json(load_json(path))


def dump_fan(F: FanData, convention: str = "lex1") -> dict:
    """Sérialise F dans la convention demandée."""
    table = permutation_table(convention, F.d, F.n)
    offset = 1 if convention == "lex1" else 0

    def to_file(row) -> List[int]:
        return [int(row[entry["lex"]]) for entry in table]

    data = {
        "d": F.d,
        "n": F.n,
        "index_convention": convention,
        "rays": [to_file(F.rays[i]) for i in range(F.rays.shape[0])],
        "cones": [
            {"dim": dim, "cells": [[i + offset for i in c] for c in cones]}
            for dim, cones in F.cones_by_dim.items()
        ],
    }
    if F.lineality is not None:
        data["lineality"] = [to_file(v) for v in F.lineality]
    if F.symmetry:
        data["symmetry"] = [list(s) for s in F.symmetry]
    return data


def convert_fan(data: dict, target: str = "lex1") -> Tuple[dict, List[dict]]:
    """
    Convertit un fichier d'éventail vers la convention ``target``.

    Returns:
        (éventail converti, table de permutation des coordonnées source)
    """
    F = fan_from_json(data)
    source = data.get("index_convention", "lex1")
    return dump_fan(F, target), permutation_table(source, F.d, F.n)
