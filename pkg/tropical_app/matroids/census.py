"""
Recensement des matroïdes de rang d sur [n] à isomorphisme près.
"""

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from tropical_app.core.errors import MalformedInput, TooLarge
from tropical_app.core.matroid import (
    Matroid,
    exchange_violation,
    from_mask,
    is_isomorphic,
    to_mask,
)


logger = logging.getLogger(__name__)

MAX_CENSUS_N = 6

# Nombres de classes annoncés pour les matroïdes (3,[n])
REFERENCE_COUNTS = {(3, 6): 36, (3, 7): 108}


def _signature(M: Matroid) -> Tuple:
    degrees = sorted(sum(1 for b in M.bases if b >> i & 1) for i in range(M.n))
    return (len(M.bases), tuple(degrees))


def canonical_form(M: Matroid) -> Matroid:
    """Représentant dont la liste triée des bases est minimale sur S_n."""
    best = None
    for perm in itertools.permutations(range(1, M.n + 1)):
        image = sorted(tuple(sorted(perm[i - 1] for i in from_mask(b))) for b in M.bases)
        if best is None or image < best:
            best = image
    return Matroid(n=M.n, d=M.d, bases=frozenset(to_mask(b) for b in best))


def _extensions(M: Matroid) -> List[Matroid]:
    """
    Extensions à un élément n+1 qui n'est pas un isthme.

    Les bases contenant n+1 sont β ∪ {n+1} pour une famille de
    (d-1)-sous-ensembles indépendants de M; la famille vide donne une boucle.
    """
    n, d = M.n, M.d
    new_bit = 1 << n
    independent = [
        to_mask(c) for c in itertools.combinations(range(1, n + 1), d - 1)
        if M.rank(to_mask(c)) == d - 1
    ] if d >= 1 else []
    out = []
    for size in range(len(independent) + 1):
        for family in itertools.combinations(independent, size):
            bases = set(M.bases) | {f | new_bit for f in family}
            if exchange_violation(bases) is None:
                out.append(Matroid(n=n + 1, d=d, bases=frozenset(bases)))
    return out


def _coloop_extension(M: Matroid) -> Matroid:
    new_bit = 1 << M.n
    return Matroid(n=M.n + 1, d=M.d + 1, bases=frozenset(b | new_bit for b in M.bases))


@lru_cache(maxsize=None)
def _classes(d: int, n: int) -> Tuple[Matroid, ...]:
    if d == 0 or d == n:
        full = (1 << n) - 1 if d == n else 0
        return (Matroid(n=n, d=d, bases=frozenset({full})),)
    candidates = []
    for base in _classes(d, n - 1):
        candidates.extend(_extensions(base))
    for base in _classes(d - 1, n - 1):
        candidates.append(_coloop_extension(base))

    buckets: Dict[Tuple, List[Matroid]] = defaultdict(list)
    for cand in candidates:
        bucket = buckets[_signature(cand)]
        if not any(is_isomorphic(cand, rep) is not None for rep in bucket):
            bucket.append(cand)
    reps = [canonical_form(m) for bucket in buckets.values() for m in bucket]
    reps.sort(key=lambda m: (len(m.bases), m.sorted_bases))
    logger.debug(f"({d},{n}): {len(candidates)} candidats, {len(reps)} classes")
    return tuple(reps)


def enumerate_matroids(d: int, n: int) -> List[Matroid]:
    """
    Un représentant canonique par classe d'isomorphisme de matroïdes (d,[n]).

    Construction récursive : l'élément n est soit un isthme (extension
    d'un matroïde (d-1,[n-1])), soit obtenu par extension d'un matroïde
    (d,[n-1]). Doublons éliminés par is_isomorphic.

    Args:
        d: Rang
        n: Taille de l'ensemble de base (<= 6)

    Returns:
        Classes triées par (nombre de bases, liste des bases)

    Raises:
        TooLarge: Si n > 6
    """
    if n > MAX_CENSUS_N:
        raise TooLarge(f"recensement limité à n <= {MAX_CENSUS_N}", n=n)
    if n < 0 or not 0 <= d <= n:
        raise MalformedInput(f"paramètres invalides (d={d}, n={n})")
    classes = list(_classes(d, n))
    logger.info(f"recensement ({d},{n}): {len(classes)} classes")
    return classes


@dataclass
class CensusReport:
    """
    Résultat d'un recensement comparé à une valeur attendue.

    Attributes:
        d, n: Paramètres
        count: Nombre de classes trouvées
        expected: Valeur attendue (None si inconnue)
        classes: Représentants
    """
    d: int
    n: int
    count: int
    expected: Optional[int]
    classes: List[Matroid] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return self.expected is None or self.count == self.expected

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "count": self.count,
            "expected": self.expected,
            "matches": self.matches,
            "classes": [m.to_json() for m in self.classes],
        }


def census_report(d: int, n: int, expected: Optional[int] = None) -> CensusReport:
    """
    Recense les classes et compare au nombre attendu.

    Sans ``expected``, la valeur de référence connue pour (d,n) est
    utilisée. Un écart est journalisé avec la liste des classes.
    """
    if expected is None:
        expected = REFERENCE_COUNTS.get((d, n))
    classes = enumerate_matroids(d, n)
    report = CensusReport(d=d, n=n, count=len(classes), expected=expected, classes=classes)
    if not report.matches:
        logger.warning(
            f"recensement ({d},{n}): {report.count} classes trouvées, {expected} attendues"
        )
    return report
