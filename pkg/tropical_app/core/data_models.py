"""
Modèles de données : vecteurs de poids, facettes, cônes, éventails et
rapports d'exécution.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BadIndex, DimensionMismatch, MalformedInput
from tropical_app.utils.serialization import (
    format_rational,
    parse_rational,
    parse_subset_key,
    subset_key,
)


def plucker_indices(d: int, n: int) -> List[Tuple[int, ...]]:
    """Λ(d,n) en ordre lexicographique, 1-indexé."""
    return list(itertools.combinations(range(1, n + 1), d))


@dataclass(frozen=True)
class WeightVector:
    """
    Vecteur de poids rationnel sur Λ(d,n).

    Les clés absentes valent 0; les zéros ne sont pas stockés.

    Attributes:
        d: Rang
        n: Taille de l'ensemble de base
        entries: Poids par d-sous-ensemble trié
    """
    d: int
    n: int
    entries: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        """Validation et normalisation des entrées."""
        if not 0 <= self.d <= self.n:
            raise MalformedInput("le vecteur de poids exige 0 <= d <= n")
        clean = {}
        for key, value in self.entries.items():
            key = tuple(key)
            if (len(key) != self.d or list(key) != sorted(set(key))
                    or any(not 1 <= i <= self.n for i in key)):
                raise BadIndex(f"indice de Plücker invalide {key} pour (d={self.d}, n={self.n})")
            value = Fraction(value)
            if value != 0:
                clean[key] = value
        object.__setattr__(self, "entries", clean)

    @classmethod
    def zero(cls, d: int, n: int) -> "WeightVector":
        return cls(d, n, {})

    @classmethod
    def from_support(cls, d: int, n: int, subsets: Sequence[Sequence[int]], value=1) -> "WeightVector":
        """Somme des e_λ (fois ``value``) sur les sous-ensembles donnés."""
        return cls(d, n, {tuple(sorted(s)): Fraction(value) for s in subsets})

    @classmethod
    def from_list(cls, d: int, n: int, values: Sequence) -> "WeightVector":
        """Depuis une liste de longueur C(n,d) dans l'ordre lexicographique."""
        index = plucker_indices(d, n)
        if len(values) != len(index):
            raise DimensionMismatch(f"{len(values)} valeurs pour {len(index)} coordonnées")
        return cls(d, n, {lam: Fraction(v) for lam, v in zip(index, values)})

    def get(self, lam: Sequence[int]) -> Fraction:
        return self.entries.get(tuple(lam), Fraction(0))

    def as_list(self) -> List[Fraction]:
        """Valeurs dans l'ordre lexicographique de Λ(d,n)."""
        return [self.get(lam) for lam in plucker_indices(self.d, self.n)]

    def shift(self, c) -> "WeightVector":
        """w + c·(1,...,1)."""
        c = Fraction(c)
        return WeightVector(self.d, self.n, {lam: self.get(lam) + c for lam in plucker_indices(self.d, self.n)})

    def scale(self, c) -> "WeightVector":
        c = Fraction(c)
        return WeightVector(self.d, self.n, {k: v * c for k, v in self.entries.items()})

    def add(self, other: "WeightVector") -> "WeightVector":
        if (self.d, self.n) != (other.d, other.n):
            raise DimensionMismatch("vecteurs de poids de tailles différentes")
        keys = set(self.entries) | set(other.entries)
        return WeightVector(self.d, self.n, {k: self.get(k) + other.get(k) for k in keys})

    def permute(self, sigma: Sequence[int]) -> "WeightVector":
        """Action de σ ∈ S_n : la coordonnée σ(λ) reçoit w_λ."""
        return WeightVector(
            self.d, self.n,
            {tuple(sorted(sigma[i - 1] for i in lam)): v for lam, v in self.entries.items()},
        )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "entries": {subset_key(k, self.n): format_rational(v) for k, v in sorted(self.entries.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeightVector":
        """
        Lit le format {"d":3,"n":7,"entries":{"124":1,...}}.

        Raises:
            MalformedInput: Champs absents ou valeurs non rationnelles
        """
        try:
            d = int(data["d"])
            n = int(data["n"])
            raw = data.get("entries", {})
            if not isinstance(raw, dict):
                raise TypeError("entries doit être un objet")
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInput(f"JSON de poids invalide: {e}") from None
        entries = {parse_subset_key(k, n): parse_rational(v) for k, v in raw.items()}
        return cls(d, n, entries)

    def __str__(self) -> str:
        support = ", ".join(
            f"{subset_key(k, self.n)}:{format_rational(v)}" for k, v in sorted(self.entries.items())
        )
        return f"w(d={self.d}, n={self.n}) {{{support}}}"


@dataclass(frozen=True)
class FacetDescription:
    """
    Inégalité définissant une facette de Δ_M.

    Attributes:
        kind: "lower_bound" (x_i >= 0) ou "flat_bound" (x_η <= ρ(η))
        subset: {i} pour lower_bound, η pour flat_bound
        bound: 0 pour lower_bound, ρ_M(η) pour flat_bound
    """
    kind: str
    subset: Tuple[int, ...]
    bound: int

    def __post_init__(self):
        if self.kind not in ("lower_bound", "flat_bound"):
            raise MalformedInput(f"type de facette inconnu: {self.kind}")
        if self.kind == "lower_bound" and (len(self.subset) != 1 or self.bound != 0):
            raise MalformedInput("une borne inférieure porte sur un seul élément, borne 0")

    def to_json(self) -> dict:
        return {"kind": self.kind, "subset": list(self.subset), "bound": self.bound}

    def __str__(self) -> str:
        label = "".join(str(i) for i in self.subset)
        if self.kind == "lower_bound":
            return f"x_{label} >= 0"
        return f"x_{label} <= {self.bound}"


@dataclass(frozen=True)
class Cone:
    """
    Cône polyédral rationnel : rayons positifs + espace de linéalité.

    Attributes:
        rays: Vecteurs entiers
        lineality: Vecteurs entiers engendrant l'espace de linéalité
    """
    rays: Tuple[Tuple[int, ...], ...] = ()
    lineality: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in v) for v in self.rays)
        lin = tuple(tuple(int(x) for x in v) for v in self.lineality)
        lengths = {len(v) for v in rays + lin}
        if len(lengths) > 1:
            raise DimensionMismatch(f"vecteurs de longueurs différentes: {sorted(lengths)}")
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "lineality", lin)

    @property
    def ambient_dim(self) -> Optional[int]:
        for v in self.rays + self.lineality:
            return len(v)
        return None


@dataclass
class FanData:
    """
    Éventail indexé : liste de rayons et cônes en tuples d'indices.

    Attributes:
        d, n: Paramètres de Λ(d,n)
        rays: Matrice entière (un rayon par ligne)
        cones_by_dim: Cônes par dimension (indices 0-based de rayons)
        symmetry: Générateurs de l'action de S_n (permutations de [n])
        lineality: Générateurs de l'espace de linéalité
    """
    d: int
    n: int
    rays: np.ndarray
    cones_by_dim: Dict[int, List[Tuple[int, ...]]]
    symmetry: List[Tuple[int, ...]] = field(default_factory=list)
    lineality: Optional[np.ndarray] = None

    def __post_init__(self):
        """Validation des indices de rayons."""
        self.rays = np.asarray(self.rays, dtype=np.int64).reshape(-1, len(plucker_indices(self.d, self.n)))
        count = self.rays.shape[0]
        clean = {}
        for dim, cones in self.cones_by_dim.items():
            dim = int(dim)
            normalized = []
            for cone in cones:
                cone = tuple(sorted(int(i) for i in cone))
                if any(not 0 <= i < count for i in cone):
                    raise MalformedInput(f"indice de rayon invalide dans le cône {cone}")
                normalized.append(cone)
            clean[dim] = sorted(set(normalized))
        self.cones_by_dim = dict(sorted(clean.items()))
        for sigma in self.symmetry:
            if sorted(sigma) != list(range(1, self.n + 1)):
                raise MalformedInput(f"générateur de symétrie invalide: {tuple(sigma)}")
        if self.lineality is not None:
            self.lineality = np.asarray(self.lineality, dtype=np.int64)

    @property
    def ambient_dim(self) -> int:
        return self.rays.shape[1]

    def all_cones(self) -> List[Tuple[int, ...]]:
        return [c for dim in self.cones_by_dim for c in self.cones_by_dim[dim]]

    def maximal_cones(self) -> List[Tuple[int, ...]]:
        """Cônes de dimension maximale (les éventails traités sont purs)."""
        if not self.cones_by_dim:
            return []
        return list(self.cones_by_dim[max(self.cones_by_dim)])

    def ray(self, index: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.rays[index])


STATUS_EXIT_CODES = {"ok": 0, "property_failed": 1, "input_error": 2}


@dataclass
class RunReport:
    """
    Rapport d'exécution d'une sous-commande.

    Attributes:
        subcommand: Nom de la sous-commande
        input_digests: Empreintes SHA-256 des entrées
        payload: Résultat JSON
        status: ok, property_failed ou input_error
        elapsed_seconds: Durée d'exécution
    """
    subcommand: str
    input_digests: Dict[str, str]
    payload: dict
    status: str = "ok"
    elapsed_seconds: float = 0.0

    def __post_init__(self):
        if self.status not in STATUS_EXIT_CODES:
            raise ValueError(f"statut inconnu: {self.status}")
        if self.status == "property_failed" and "witness" not in self.payload:
            raise ValueError("un échec de propriété doit porter un témoin")

    @property
    def exit_code(self) -> int:
        return STATUS_EXIT_CODES[self.status]

    def to_dict(self, include_timing: bool = False) -> dict:
        """
        Convertit le rapport en dictionnaire.

        La durée est exclue par défaut pour que la sortie JSON soit
        identique d'une exécution à l'autre.
        """
        data = {
            "subcommand": self.subcommand,
            "input_digests": dict(self.input_digests),
            "payload": self.payload,
            "status": self.status,
        }
        if include_timing:
            data["elapsed_seconds"] = round(self.elapsed_seconds, 6)
        return data

    def __str__(self) -> str:
        return f"[{self.subcommand}] statut={self.status} ({self.elapsed_seconds:.3f}s)"
