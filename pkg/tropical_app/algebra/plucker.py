"""
Anneau de Plücker k[p_λ], relations quadratiques et générateurs des
idéaux des cellules de Schubert minces.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement, PolyRing

from tropical_app.algebra.polynomials import (
    dedup_up_to_scalar,
    initial_form,
    make_ring,
)
from tropical_app.core.data_models import WeightVector, plucker_indices
from tropical_app.core.errors import BadIndex, DimensionMismatch
from tropical_app.core.matroid import Matroid, face_matroid, to_mask


logger = logging.getLogger(__name__)


def plucker_name(lam: Sequence[int], n: int) -> str:
    if n <= 9:
        return "p" + "".join(str(i) for i in lam)
    return "p" + "_".join(str(i) for i in lam)


def permutation_sign(values: Sequence[int]) -> int:
    """Signe de la permutation qui trie ``values`` (0 si répétition)."""
    if len(set(values)) != len(values):
        return 0
    inversions = sum(1 for a, b in itertools.combinations(values, 2) if a > b)
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class PlueckerContext:
    """
    Variables p_λ, λ ∈ Λ(d,n) en ordre lexicographique.

    Attributes:
        d: Rang
        n: Taille de l'ensemble de base
        characteristic: 0 (Q) ou p premier
    """
    d: int
    n: int
    characteristic: int = 0

    @cached_property
    def indices(self) -> List[Tuple[int, ...]]:
        return plucker_indices(self.d, self.n)

    @cached_property
    def ring(self) -> PolyRing:
        return make_ring([plucker_name(lam, self.n) for lam in self.indices], self.characteristic)

    @cached_property
    def _position(self) -> Dict[Tuple[int, ...], int]:
        return {lam: k for k, lam in enumerate(self.indices)}

    def var(self, lam: Sequence[int]) -> PolyElement:
        """Variable p_λ pour λ trié."""
        return self.ring.gens[self._position[tuple(lam)]]

    def p(self, *indices: int) -> PolyElement:
        """
        p avec indices non triés : sgn(σ)·p_trié, nul si un indice se répète.

        Raises:
            BadIndex: Mauvais nombre d'indices ou indice hors de [n]
        """
        if len(indices) != self.d or any(not 1 <= i <= self.n for i in indices):
            raise BadIndex(f"indices de Plücker invalides {indices} pour (d={self.d}, n={self.n})")
        sign = permutation_sign(indices)
        if sign == 0:
            return self.ring.zero
        return sign * self.var(tuple(sorted(indices)))

    def weights_of(self, w: WeightVector) -> List:
        """Poids de chaque variable, dans l'ordre de l'anneau."""
        if (w.d, w.n) != (self.d, self.n):
            raise DimensionMismatch("vecteur de poids et contexte de Plücker incompatibles")
        return [w.get(lam) for lam in self.indices]

    def variable_index(self, lam: Sequence[int]) -> int:
        return self._position[tuple(lam)]


def context_for(M: Matroid, characteristic: int = 0) -> PlueckerContext:
    return PlueckerContext(M.d, M.n, characteristic)


def plucker_sign(i: int, lam: Sequence[int], mu: Sequence[int]) -> int:
    """
    sgn(i; λ, μ) = (-1)^ℓ, ℓ = #{j ∈ μ : i < j} + #{j ∈ λ : j < i}.

    Raises:
        BadIndex: Si i ∉ μ ou i ∈ λ
    """
    if i not in mu or i in lam:
        raise BadIndex(f"l'indice {i} doit appartenir à μ={tuple(mu)} et pas à λ={tuple(lam)}", i=i)
    ell = sum(1 for j in mu if i < j) + sum(1 for j in lam if j < i)
    return -1 if ell % 2 else 1


def plucker_generator(
    M: Matroid,
    lam: Sequence[int],
    mu: Sequence[int],
    ctx: Optional[PlueckerContext] = None,
) -> PolyElement:
    """
    Σ sgn(i;λ,μ) p_{λ∪i} p_{μ∖i} sur les i ∈ μ∖λ avec λ∪i et μ∖i bases de M.
    """
    ctx = ctx or context_for(M)
    lam = tuple(sorted(lam))
    mu = tuple(sorted(mu))
    total = ctx.ring.zero
    for i in mu:
        if i in lam:
            continue
        first = tuple(sorted(lam + (i,)))
        second = tuple(j for j in mu if j != i)
        if to_mask(first) in M.bases and to_mask(second) in M.bases:
            total += plucker_sign(i, lam, mu) * ctx.var(first) * ctx.var(second)
    return total


class AdmissiblePair(NamedTuple):
    lam: Tuple[int, ...]
    mu: Tuple[int, ...]


def admissible_pairs(M: Matroid) -> List[AdmissiblePair]:
    """Paires (λ, μ) : λ indépendant de taille d-1, μ de taille d+1 et de rang d, λ ⊄ μ."""
    if M.d == 0 or M.d == M.n:
        return []
    ground = range(1, M.n + 1)
    lams = [lam for lam in itertools.combinations(ground, M.d - 1) if M.rank(to_mask(lam)) == M.d - 1]
    mus = [mu for mu in itertools.combinations(ground, M.d + 1) if M.rank(to_mask(mu)) == M.d]
    return [
        AdmissiblePair(lam, mu) for lam in lams for mu in mus
        if not set(lam) <= set(mu)
    ]


def thin_schubert_generators(M: Matroid, ctx: Optional[PlueckerContext] = None) -> List[PolyElement]:
    """
    Générateurs quadratiques de l'idéal I_M.

    Un générateur par paire admissible, sans les polynômes nuls,
    dédoublonnés au signe près.
    """
    ctx = ctx or context_for(M)
    gens = [plucker_generator(M, pair.lam, pair.mu, ctx) for pair in admissible_pairs(M)]
    result = dedup_up_to_scalar(gens)
    logger.debug(f"{M}: {len(result)} générateurs")
    return result


@dataclass(frozen=True)
class GeneratorMismatch:
    """Paire (λ, μ) dont le générateur de la face diffère de celui de M."""
    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    face_generator: PolyElement
    full_generator: PolyElement


def face_generator_check(M: Matroid, eta: Sequence[int]) -> List[GeneratorMismatch]:
    """
    Compare, pour chaque générateur non nul de M_η, la somme sur B(M_η)
    et la même somme sur B(M).

    Returns:
        Liste des désaccords (vide si la propriété est vérifiée)
    """
    face = face_matroid(M, eta)
    ctx = context_for(M)
    mismatches = []
    for pair in admissible_pairs(face):
        g_face = plucker_generator(face, pair.lam, pair.mu, ctx)
        if not g_face:
            continue
        g_full = plucker_generator(M, pair.lam, pair.mu, ctx)
        if g_face != g_full:
            mismatches.append(GeneratorMismatch(pair.lam, pair.mu, g_face, g_full))
    return mismatches


def limit_ideal_generators(S) -> List[PolyElement]:
    """
    Générateurs de I_{M,w} : réunion des générateurs des cellules maximales.

    Raises:
        NonMatroidCell: Si une cellule n'est pas un matroïde
    """
    cells = S.maximal_cells
    ctx = context_for(S.ambient)
    gens = []
    for cell in cells:
        gens.extend(thin_schubert_generators(cell, ctx))
    return dedup_up_to_scalar(gens)


def reduce_by_matroid(f: PolyElement, M: Matroid, ctx: Optional[PlueckerContext] = None) -> PolyElement:
    """red_M(f) : annule les p_λ avec λ non base de M."""
    ctx = ctx or context_for(M)
    zeros = [(ctx.var(lam), 0) for lam in ctx.indices if to_mask(lam) not in M.bases]
    if not zeros:
        return f
    return f.subs(zeros)


def T_quadric(ctx: PlueckerContext, i: int, j: int, k: int, l: int) -> PolyElement:
    """T_ijkl = p_ij p_kl − p_ik p_jl + p_il p_jk."""
    p = ctx.p
    return p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k)


def B_binomial(ctx: PlueckerContext, i: int, j: int, k: int, l: int) -> PolyElement:
    """B_{ij,kl} = −p_ik p_jl + p_il p_jk."""
    p = ctx.p
    return -p(i, k) * p(j, l) + p(i, l) * p(j, k)


def plucker_initial_form(f: PolyElement, w: WeightVector, ctx: PlueckerContext) -> PolyElement:
    """in_w(f) pour un poids sur Λ(d,n)."""
    return initial_form(f, ctx.weights_of(w))


def four_point_quadrics(ctx: PlueckerContext) -> List[PolyElement]:
    """Les T_ijkl pour i<j<k<l (d = 2)."""
    if ctx.d != 2:
        raise DimensionMismatch("les quadriques T_ijkl sont définies pour d=2")
    return [T_quadric(ctx, *q) for q in itertools.combinations(range(1, ctx.n + 1), 4)]
