"""
Cônes polyédraux exacts : espace de linéalité N^H, dimension, test
d'absence de droites dans l'étoile d'un cône et action de S_n sur les
coordonnées de Plücker.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from tropical_app.core.data_models import Cone, plucker_indices
from tropical_app.core.errors import DimensionMismatch, MalformedInput
from tropical_app.utils.hull import cone_h_representation, v_representation
from tropical_app.utils.linalg import exact_rank, in_span, primitive_integer_vector


logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


def lineality_NH(d: int, n: int) -> np.ndarray:
    """
    Générateurs de N^H : la ligne i vaut Σ_{λ ∋ i} e_λ.

    Returns:
        Matrice entière n × C(n,d), colonnes en ordre lexicographique
    """
    if not 1 <= d <= n:
        raise MalformedInput(f"N^H exige 1 <= d <= n (d={d}, n={n})")
    index = plucker_indices(d, n)
    return np.array(
        [[1 if i in lam else 0 for lam in index] for i in range(1, n + 1)],
        dtype=np.int64,
    )


def cone_dim(c: Cone) -> int:
    """Dimension de l'espace engendré par rayons et linéalité."""
    return exact_rank(list(c.rays) + list(c.lineality))


@dataclass(frozen=True)
class LineTestResult:
    """
    Verdict de τ ∩ (−τ′) = 0 dans le quotient par le centre.

    Attributes:
        holds: Vrai si l'intersection se réduit au centre
        witness: Vecteur entier primitif de l'intersection hors du centre
    """
    holds: bool
    witness: Optional[List[int]] = None

    def __bool__(self) -> bool:
        return self.holds


def _ambient(center: Cone, tau: Sequence[Sequence], tau_prime: Sequence[Sequence]) -> Optional[int]:
    lengths = {len(v) for v in list(center.rays) + list(center.lineality) + list(tau) + list(tau_prime)}
    if len(lengths) > 1:
        raise DimensionMismatch(f"vecteurs de longueurs différentes: {sorted(lengths)}")
    return lengths.pop() if lengths else None


def pair_line_test(
    center: Cone,
    tau: Sequence[Sequence[int]],
    tau_prime: Sequence[Sequence[int]],
) -> LineTestResult:
    """
    Compare dim(T ∩ −T′) à dim(centre), où T = cône(τ) + span(centre).

    Les rayons du centre sont traités comme de la linéalité : on travaille
    dans le quotient par l'espace qu'il engendre.

    Args:
        center: Cône σ plus la linéalité globale
        tau: Rayons propres de τ (hors σ)
        tau_prime: Rayons propres de τ′

    Raises:
        DimensionMismatch: Vecteurs de longueurs différentes
    """
    dim = _ambient(center, tau, tau_prime)
    if dim is None:
        return LineTestResult(True)
    span = [list(v) for v in center.rays] + [list(v) for v in center.lineality]
    ineq_t, eq_t = cone_h_representation([list(v) for v in tau], span, dim)
    ineq_n, eq_n = cone_h_representation([[-x for x in v] for v in tau_prime], span, dim)
    inequalities = ineq_t + ineq_n
    equalities = eq_t + eq_n
    if not inequalities and not equalities:
        return LineTestResult(True)

    _, rays, lines = v_representation(inequalities, equalities)
    generators = list(rays) + list(lines)
    center_dim = exact_rank(span)
    if exact_rank(generators) == center_dim:
        return LineTestResult(True)
    for v in generators:
        if not in_span(v, span):
            witness = primitive_integer_vector(v)
            logger.debug(f"droite trouvée hors du centre: {witness}")
            return LineTestResult(False, witness)
    # rang supérieur implique un générateur hors du centre
    raise AssertionError("intersection plus grande que le centre sans témoin")


def check_permutation(sigma: Sequence[int], n: int) -> Permutation:
    sigma = tuple(int(i) for i in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise MalformedInput(f"permutation invalide de [{n}]: {sigma}")
    return sigma


def compose(sigma: Sequence[int], pi: Sequence[int]) -> Permutation:
    """(σ∘π)(i) = σ(π(i))."""
    return tuple(sigma[p - 1] for p in pi)


def coordinate_permutation(sigma: Sequence[int], d: int, n: int) -> List[int]:
    """Position lexicographique de σ(λ) pour chaque λ ∈ Λ(d,n)."""
    sigma = check_permutation(sigma, n)
    index = plucker_indices(d, n)
    position = {lam: k for k, lam in enumerate(index)}
    return [position[tuple(sorted(sigma[i - 1] for i in lam))] for lam in index]


def symmetric_action(sigma: Sequence[int], v: Sequence, d: int, n: int) -> list:
    """
    Action de σ ∈ S_n : la coordonnée σ(λ) du résultat vaut v_λ.

    Raises:
        DimensionMismatch: Si len(v) != C(n,d)
    """
    target = coordinate_permutation(sigma, d, n)
    if len(v) != len(target):
        raise DimensionMismatch(f"vecteur de longueur {len(v)} pour {len(target)} coordonnées")
    result = [None] * len(target)
    for k, value in enumerate(v):
        result[target[k]] = value
    return result
