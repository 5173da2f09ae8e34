"""
Représentation des matroïdes par leurs bases.

Les sous-ensembles de [n] = {1,...,n} sont codés en masques de bits
(GroundSubset) : l'élément i correspond au bit i-1.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    DimensionMismatch,
    ExchangeViolation,
    InvalidPartition,
    MalformedInput,
    OverlapError,
)


logger = logging.getLogger(__name__)

GroundSubset = int


def to_mask(elements: Iterable[int]) -> GroundSubset:
    """Convertit des éléments 1-indexés en masque."""
    mask = 0
    for i in elements:
        mask |= 1 << (i - 1)
    return mask


def from_mask(mask: GroundSubset) -> Tuple[int, ...]:
    """Convertit un masque en tuple trié d'éléments 1-indexés."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> GroundSubset:
    return (1 << n) - 1


def _lex_key(mask: GroundSubset) -> Tuple[int, ...]:
    return from_mask(mask)


@dataclass(frozen=True)
class Matroid:
    """
    Matroïde de rang d sur [n], déterminé par ses bases.

    Le constructeur vérifie la forme (cardinalités, bornes); l'axiome
    d'échange est vérifié par ``validate``.

    Attributes:
        n: Taille de l'ensemble de base
        d: Rang
        bases: Bases codées en masques
    """
    n: int
    d: int
    bases: frozenset

    def __post_init__(self):
        """Validation de la forme."""
        if self.n < 0:
            raise MalformedInput("n doit être positif ou nul")
        if not 0 <= self.d <= self.n:
            raise MalformedInput("le rang doit vérifier 0 <= d <= n")
        if not self.bases:
            raise MalformedInput("un matroïde possède au moins une base")
        limit = full_mask(self.n)
        for b in self.bases:
            if b & ~limit or b.bit_count() != self.d:
                raise MalformedInput(
                    f"base invalide {from_mask(b)} pour (d={self.d}, n={self.n})"
                )

    @cached_property
    def sorted_bases(self) -> List[Tuple[int, ...]]:
        """Bases en tuples, ordre lexicographique."""
        return sorted(from_mask(b) for b in self.bases)

    @cached_property
    def _rank_cache(self) -> dict:
        return {}

    def rank(self, subset: GroundSubset) -> int:
        """Rang d'un masque : max |β ∩ λ| sur les bases."""
        cache = self._rank_cache
        value = cache.get(subset)
        if value is None:
            value = max((b & subset).bit_count() for b in self.bases)
            cache[subset] = value
        return value

    def is_basis(self, subset: Iterable[int]) -> bool:
        return to_mask(subset) in self.bases

    def closure(self, subset: GroundSubset) -> GroundSubset:
        r = self.rank(subset)
        out = subset
        for i in range(self.n):
            bit = 1 << i
            if not subset & bit and self.rank(subset | bit) == r:
                out |= bit
        return out

    @cached_property
    def loops(self) -> Tuple[int, ...]:
        union = 0
        for b in self.bases:
            union |= b
        return from_mask(full_mask(self.n) & ~union)

    @cached_property
    def coloops(self) -> Tuple[int, ...]:
        inter = full_mask(self.n)
        for b in self.bases:
            inter &= b
        return from_mask(inter)

    def to_json(self) -> dict:
        """Matroïde au format JSON 1-indexé."""
        return {
            "n": self.n,
            "d": self.d,
            "bases": [list(b) for b in self.sorted_bases],
        }

    def __str__(self) -> str:
        return f"Matroïde(d={self.d}, n={self.n}, {len(self.bases)} bases)"


def matroid_from_json(data: dict) -> Matroid:
    """
    Construit et valide un matroïde depuis son JSON.

    Raises:
        MalformedInput: Champs absents ou mal typés
        ExchangeViolation: Bases ne formant pas un matroïde
    """
    try:
        n = int(data["n"])
        d = int(data["d"])
        bases = [tuple(int(i) for i in b) for b in data["bases"]]
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"JSON de matroïde invalide: {e}") from None
    return validate(bases, n, d)


def validate(bases: Iterable[Sequence[int]], n: int, d: int) -> Matroid:
    """
    Vérifie l'axiome d'échange et retourne le matroïde certifié.

    Args:
        bases: d-sous-ensembles de [n]
        n: Taille de l'ensemble de base
        d: Rang

    Returns:
        Matroid: Le matroïde si l'échange est satisfait

    Raises:
        ExchangeViolation: Avec un contre-exemple (β1, β2, x)
    """
    masks = set()
    for b in bases:
        if len(set(b)) != len(tuple(b)) or any(not 1 <= i <= n for i in b):
            raise MalformedInput(f"sous-ensemble invalide {tuple(b)} pour n={n}")
        masks.add(to_mask(b))
    matroid = Matroid(n=n, d=d, bases=frozenset(masks))
    violation = exchange_violation(matroid.bases)
    if violation is not None:
        raise violation
    return matroid


def exchange_violation(bases: Iterable[GroundSubset]) -> Optional[ExchangeViolation]:
    """
    Cherche un contre-exemple à l'axiome d'échange.

    Returns:
        ExchangeViolation ou None si la famille satisfait l'échange
    """
    family = set(bases)
    ordered = sorted(family, key=_lex_key)
    for b1 in ordered:
        for b2 in ordered:
            diff1 = b1 & ~b2
            if not diff1:
                continue
            diff2 = b2 & ~b1
            for x in from_mask(diff1):
                reduced = b1 & ~(1 << (x - 1))
                if not any(reduced | (1 << (y - 1)) in family for y in from_mask(diff2)):
                    return ExchangeViolation(from_mask(b1), from_mask(b2), x)
    return None


def rank(M: Matroid, subset: Iterable[int]) -> int:
    """
    Rang de λ dans M.

    Examples:
        >>> rank(named_matroid("fano"), (1, 2, 4))
        2
    """
    return M.rank(to_mask(subset))


def uniform_matroid(d: int, n: int) -> Matroid:
    """Matroïde uniforme U(d,n)."""
    bases = frozenset(to_mask(c) for c in itertools.combinations(range(1, n + 1), d))
    return Matroid(n=n, d=d, bases=bases)


def matroid_from_lines(n: int, lines: Iterable[Sequence[int]]) -> Matroid:
    """
    Matroïde simple de rang 3 dont les non-bases sont les triplets contenus
    dans une des droites données.
    """
    line_masks = [to_mask(line) for line in lines]
    bases = []
    for triple in itertools.combinations(range(1, n + 1), 3):
        t = to_mask(triple)
        if not any(t & line == t for line in line_masks):
            bases.append(triple)
    return validate(bases, n, 3)


@dataclass(frozen=True)
class SimplicityReport:
    """Boucles, classes parallèles et simplicité d'un matroïde."""
    loops: Tuple[int, ...]
    parallel_classes: Tuple[Tuple[int, ...], ...]
    is_simple: bool


def flats(M: Matroid) -> List[Tuple[int, ...]]:
    """Tous les plats de M, triés par (rang, éléments)."""
    seen = set()
    for mask in range(1 << M.n):
        seen.add(M.closure(mask))
    return [from_mask(f) for f in sorted(seen, key=lambda f: (M.rank(f), from_mask(f)))]


def flats_and_lines(M: Matroid) -> Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]]]:
    """
    Plats et droites (plats de rang 2 à au moins 3 éléments).

    Returns:
        (plats, droites), chacun trié
    """
    all_flats = flats(M)
    lines = sorted(f for f in all_flats if M.rank(to_mask(f)) == 2 and len(f) >= 3)
    return all_flats, lines


def simplicity_report(M: Matroid) -> SimplicityReport:
    """Boucles, classes parallèles sur les non-boucles, simplicité."""
    loops = M.loops
    remaining = [i for i in range(1, M.n + 1) if i not in loops]
    classes = []
    assigned = set()
    for i in remaining:
        if i in assigned:
            continue
        block = tuple(j for j in remaining if j not in assigned and M.rank(to_mask((i, j))) == 1)
        assigned.update(block)
        classes.append(block)
    is_simple = not loops and all(len(c) == 1 for c in classes)
    return SimplicityReport(loops=loops, parallel_classes=tuple(classes), is_simple=is_simple)


def dual(M: Matroid) -> Matroid:
    """Matroïde dual : bases complémentaires."""
    full = full_mask(M.n)
    return Matroid(n=M.n, d=M.n - M.d, bases=frozenset(full & ~b for b in M.bases))


def components(M: Matroid) -> List[Tuple[int, ...]]:
    """
    Composantes connexes de M, triées par plus petit élément.

    Deux éléments sont dans la même composante s'ils appartiennent à un
    même circuit fondamental relatif à une base fixée.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(1, M.n + 1))
    basis = min(M.bases, key=_lex_key)
    for e in range(1, M.n + 1):
        bit = 1 << (e - 1)
        if basis & bit:
            continue
        for b in from_mask(basis):
            if (basis & ~(1 << (b - 1))) | bit in M.bases:
                graph.add_edge(e, b)
    blocks = [tuple(sorted(c)) for c in nx.connected_components(graph)]
    return sorted(blocks)


def is_connected(M: Matroid) -> bool:
    return len(components(M)) == 1


def _relabel_onto(M: Matroid, ground: Sequence[int], bases: Iterable[GroundSubset], d: int) -> Matroid:
    """Renumérote l'ensemble ``ground`` (trié) en 1..len(ground)."""
    position = {e: k + 1 for k, e in enumerate(sorted(ground))}
    new_bases = frozenset(to_mask(position[e] for e in from_mask(b)) for b in bases)
    return Matroid(n=len(ground), d=d, bases=new_bases)


def minor(M: Matroid, delete: Iterable[int], contract: Iterable[int]) -> Matroid:
    """
    Mineur M / contract \\ delete, renuméroté de façon croissante.

    Convention de rang : ρ'(λ) = ρ(λ ∪ C) − ρ(C), ce qui autorise un
    ensemble contracté dépendant.

    Raises:
        OverlapError: Si delete ∩ contract ≠ ∅
    """
    d_mask = to_mask(delete)
    c_mask = to_mask(contract)
    if d_mask & c_mask:
        raise OverlapError(
            f"supprimé et contracté se recoupent: {from_mask(d_mask & c_mask)}",
            overlap=list(from_mask(d_mask & c_mask)),
        )
    rest = full_mask(M.n) & ~(d_mask | c_mask)
    ground = from_mask(rest)
    rho_c = M.rank(c_mask)
    new_rank = M.rank(rest | c_mask) - rho_c
    bases = [
        to_mask(cand)
        for cand in itertools.combinations(ground, new_rank)
        if M.rank(to_mask(cand) | c_mask) - rho_c == new_rank
    ]
    return _relabel_onto(M, ground, bases, new_rank)


def restriction(M: Matroid, subset: Iterable[int]) -> Matroid:
    """Restriction M|λ."""
    keep = to_mask(subset)
    return minor(M, from_mask(full_mask(M.n) & ~keep), ())


def contraction(M: Matroid, subset: Iterable[int]) -> Matroid:
    """Contraction M/λ."""
    return minor(M, (), subset)


def face_matroid(M: Matroid, eta: Iterable[int]) -> Matroid:
    """
    Matroïde de la face de Δ_M où x_η = ρ_M(η).

    Returns:
        Matroid: bases β de M avec |β ∩ η| = ρ_M(η)
    """
    eta_mask = to_mask(eta)
    r = M.rank(eta_mask)
    bases = frozenset(b for b in M.bases if (b & eta_mask).bit_count() == r)
    face = Matroid(n=M.n, d=M.d, bases=bases)
    violation = exchange_violation(bases)
    assert violation is None, f"face non matroïdale pour η={from_mask(eta_mask)}"
    return face


def partition_matroid(blocks: Sequence[Sequence[int]]) -> Matroid:
    """
    Matroïde de rang 2 associé à une partition de [n].

    Les bases sont les paires rencontrant deux blocs distincts;
    les plats de rang 1 sont les blocs.

    Raises:
        InvalidPartition: Bloc vide, blocs non disjoints, recouvrement
            incomplet, ou moins de deux blocs
    """
    blocks = [tuple(sorted(b)) for b in blocks]
    if len(blocks) < 2:
        raise InvalidPartition("au moins deux blocs sont nécessaires", blocks=[list(b) for b in blocks])
    if any(not b for b in blocks):
        raise InvalidPartition("bloc vide", blocks=[list(b) for b in blocks])
    elements = [i for b in blocks for i in b]
    n = len(elements)
    if sorted(elements) != list(range(1, n + 1)):
        raise InvalidPartition(
            "les blocs doivent partitionner [n]", blocks=[list(b) for b in blocks]
        )
    owner = {i: k for k, b in enumerate(blocks) for i in b}
    bases = frozenset(
        to_mask((i, j))
        for i, j in itertools.combinations(range(1, n + 1), 2)
        if owner[i] != owner[j]
    )
    return Matroid(n=n, d=2, bases=bases)


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """Somme directe, les éléments de M2 décalés de n1."""
    bases = frozenset(b1 | (b2 << M1.n) for b1 in M1.bases for b2 in M2.bases)
    return Matroid(n=M1.n + M2.n, d=M1.d + M2.d, bases=bases)


def relabel(M: Matroid, sigma: Sequence[int]) -> Matroid:
    """
    Image de M par la permutation σ (σ[i-1] est l'image de i).
    """
    if sorted(sigma) != list(range(1, M.n + 1)):
        raise MalformedInput(f"permutation invalide: {tuple(sigma)}")
    bases = frozenset(to_mask(sigma[i - 1] for i in from_mask(b)) for b in M.bases)
    return Matroid(n=M.n, d=M.d, bases=bases)


def _element_degrees(M: Matroid) -> List[int]:
    return [sum(1 for b in M.bases if b >> i & 1) for i in range(M.n)]


def is_isomorphic(M1: Matroid, M2: Matroid) -> Optional[Tuple[int, ...]]:
    """
    Cherche une renumérotation σ avec σ(B(M1)) = B(M2).

    Recherche exhaustive sur S_n, restreinte aux permutations qui
    préservent le nombre de bases contenant chaque élément.

    Returns:
        σ (σ[i-1] image de i) ou None

    Raises:
        DimensionMismatch: Si (n, d) diffèrent
    """
    if (M1.n, M1.d) != (M2.n, M2.d):
        raise DimensionMismatch(
            f"(n,d) différents: {(M1.n, M1.d)} et {(M2.n, M2.d)}"
        )
    if len(M1.bases) != len(M2.bases):
        return None
    deg1 = _element_degrees(M1)
    deg2 = _element_degrees(M2)
    if sorted(deg1) != sorted(deg2):
        return None
    if len(flats_and_lines(M1)[1]) != len(flats_and_lines(M2)[1]):
        return None

    classes = sorted(set(deg1))
    sources = [[i + 1 for i in range(M1.n) if deg1[i] == c] for c in classes]
    targets = [[i + 1 for i in range(M2.n) if deg2[i] == c] for c in classes]
    for choice in itertools.product(*(itertools.permutations(t) for t in targets)):
        sigma = [0] * M1.n
        for src, img in zip(sources, choice):
            for a, b in zip(src, img):
                sigma[a - 1] = b
        if all(to_mask(sigma[i - 1] for i in from_mask(b)) in M2.bases for b in M1.bases):
            return tuple(sigma)
    return None
