"""
Valuation t-adique des coordonnées de Plücker d'une matrice à coefficients
dans k[t], k = Q ou F_p.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List

from sympy.polys.rings import PolyElement, PolyRing

from tropical_app.algebra.polynomials import determinant, make_ring, parse_polynomial
from tropical_app.core.data_models import WeightVector
from tropical_app.core.errors import MalformedInput, SingularMinor


logger = logging.getLogger(__name__)


@dataclass
class PolynomialMatrix:
    """
    Matrice d×n d'éléments de k[t].

    Attributes:
        characteristic: 0 ou p premier
        ring: Anneau k[t]
        rows: Entrées
    """
    characteristic: int
    ring: PolyRing
    rows: List[List[PolyElement]]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if not self.rows or len(widths) != 1:
            raise MalformedInput("la matrice doit avoir des lignes non vides de même longueur")
        if len(self.rows) > widths.pop():
            raise MalformedInput("la matrice doit avoir au moins autant de colonnes que de lignes")

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])


def matrix_from_json(data: dict) -> PolynomialMatrix:
    """
    Lit {"char":2,"rows":[["1","0","t",...],...]}.

    Raises:
        MalformedInput: Champs absents ou entrées illisibles
    """
    try:
        characteristic = int(data.get("char", 0))
        raw_rows = data["rows"]
        if not isinstance(raw_rows, list):
            raise TypeError("rows doit être une liste")
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"JSON de matrice invalide: {e}") from None
    ring = make_ring(["t"], characteristic)
    rows = [[parse_polynomial(ring, str(entry)) for entry in row] for row in raw_rows]
    return PolynomialMatrix(characteristic=characteristic, ring=ring, rows=rows)


def t_adic_valuation(f: PolyElement) -> int:
    """Plus petit degré en t d'un polynôme non nul."""
    return min(m[0] for m in f.monoms())


def pluecker_valuation(mat: PolynomialMatrix) -> WeightVector:
    """
    w_λ = val_t(det A_λ) pour chaque λ ∈ Λ(d,n).

    Raises:
        SingularMinor: Si un mineur maximal est identiquement nul
    """
    entries = {}
    for lam in itertools.combinations(range(1, mat.n + 1), mat.d):
        sub = [[row[c - 1] for c in lam] for row in mat.rows]
        det = determinant(sub, mat.ring)
        if not det:
            raise SingularMinor(lam)
        entries[lam] = t_adic_valuation(det)
    w = WeightVector(mat.d, mat.n, entries)
    logger.info(f"valuation de Plücker: support {len(w.entries)} sur {len(entries)} coordonnées")
    return w
