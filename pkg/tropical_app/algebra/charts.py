"""
Cartes affines des cellules de Schubert minces : matrice A avec identité
sur les colonnes d'une base β, mineurs A_λ, générateurs de I_M^A,
jacobiennes et témoins d'unité.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement, PolyRing

from tropical_app.algebra.polynomials import (
    dedup_up_to_scalar,
    determinant,
    format_polynomial,
    make_ring,
    normalize,
    strip_monomial_factor,
)
from tropical_app.core.errors import EmptyInput, MoreGensThanVars, NotABasis
from tropical_app.core.matroid import Matroid, to_mask


logger = logging.getLogger(__name__)


def chart_variable_name(i: int, j: int) -> str:
    if i < 10 and j < 10:
        return f"X{i}{j}"
    return f"X{i}_{j}"


@dataclass(frozen=True)
class AffineChart:
    """
    Carte affine de Gr_M associée à une base β.

    Après renumérotation croissante envoyant β sur {1,...,d}, A a
    l'identité sur les d premières colonnes et la colonne d+j vaut
    (X_1j, ..., X_dj). Les variables X_ij avec λ_ij ∉ B(M) sont nulles.

    Attributes:
        matroid: Matroïde M
        basis: Base β (étiquettes d'origine)
        characteristic: 0 ou p premier
    """
    matroid: Matroid
    basis: Tuple[int, ...]
    characteristic: int = 0

    @cached_property
    def order(self) -> Tuple[int, ...]:
        """Étiquettes d'origine dans l'ordre des colonnes de A."""
        rest = tuple(e for e in range(1, self.matroid.n + 1) if e not in self.basis)
        return self.basis + rest

    @cached_property
    def position(self) -> Dict[int, int]:
        """Étiquette d'origine → colonne (1-indexée) de A."""
        return {e: k + 1 for k, e in enumerate(self.order)}

    @property
    def d(self) -> int:
        return self.matroid.d

    @property
    def width(self) -> int:
        return self.matroid.n - self.matroid.d

    @cached_property
    def variable_names(self) -> List[str]:
        """Ordre colonne par colonne : X11, X21, ..., Xd1, X12, ..."""
        return [chart_variable_name(i, j) for j in range(1, self.width + 1) for i in range(1, self.d + 1)]

    @cached_property
    def ring(self) -> PolyRing:
        return make_ring(self.variable_names, self.characteristic)

    def X(self, i: int, j: int) -> PolyElement:
        return self.ring.gens[(j - 1) * self.d + (i - 1)]

    def variable(self, name: str) -> PolyElement:
        return self.ring.gens[self.variable_names.index(name)]

    def lambda_ij(self, i: int, j: int) -> Tuple[int, ...]:
        """λ_ij = (1,...,i-1,i+1,...,d,d+j) en étiquettes d'origine, trié."""
        columns = [k for k in range(1, self.d + 1) if k != i] + [self.d + j]
        return tuple(sorted(self.order[c - 1] for c in columns))

    @cached_property
    def active_pairs(self) -> List[Tuple[int, int]]:
        return [
            (i, j) for j in range(1, self.width + 1) for i in range(1, self.d + 1)
            if to_mask(self.lambda_ij(i, j)) in self.matroid.bases
        ]

    @cached_property
    def active_variables(self) -> List[PolyElement]:
        return [self.X(i, j) for i, j in self.active_pairs]

    @cached_property
    def active_names(self) -> List[str]:
        return [chart_variable_name(i, j) for i, j in self.active_pairs]

    @cached_property
    def matrix(self) -> List[List[PolyElement]]:
        """A, variables inactives déjà nulles."""
        ring = self.ring
        active = set(self.active_pairs)
        rows = []
        for i in range(1, self.d + 1):
            row = [ring.one if k == i else ring.zero for k in range(1, self.d + 1)]
            row += [self.X(i, j) if (i, j) in active else ring.zero for j in range(1, self.width + 1)]
            rows.append(row)
        return rows

    def minor(self, lam: Sequence[int]) -> PolyElement:
        """A_λ : déterminant des colonnes de λ, dans l'ordre des colonnes de A."""
        columns = sorted(self.position[e] - 1 for e in lam)
        rows = [[row[c] for c in columns] for row in self.matrix]
        return determinant(rows, self.ring)

    @cached_property
    def units(self) -> List[Tuple[Tuple[int, ...], PolyElement]]:
        """
        Éléments inversibles A_λ, λ ∈ B(M), non constants et distincts à un
        scalaire près (premier λ en ordre lexicographique conservé).
        """
        seen = set()
        out = []
        for lam in self.matroid.sorted_bases:
            a = self.minor(lam)
            if not a or a.is_ground:
                continue
            key = normalize(a)
            if key in seen:
                continue
            seen.add(key)
            out.append((lam, a))
        return out

    def consistency_violations(self) -> List[Tuple[int, int]]:
        """Variables actives pour lesquelles X_ij ≠ (-1)^(i-1) A_{λ_ij}."""
        bad = []
        for i, j in self.active_pairs:
            if self.X(i, j) != (-1) ** (i - 1) * self.minor(self.lambda_ij(i, j)):
                bad.append((i, j))
        return bad

    def to_json(self) -> dict:
        return {
            "basis": list(self.basis),
            "variables": list(self.variable_names),
            "active": list(self.active_names),
        }


def affine_chart(M: Matroid, beta: Sequence[int], characteristic: int = 0) -> AffineChart:
    """
    Carte affine de M en la base β.

    Raises:
        NotABasis: Si β n'est pas une base de M
    """
    beta = tuple(sorted(beta))
    if to_mask(beta) not in M.bases or len(beta) != M.d:
        raise NotABasis(f"{beta} n'est pas une base de {M}", basis=list(beta))
    return AffineChart(matroid=M, basis=beta, characteristic=characteristic)


def raw_affine_generators(C: AffineChart) -> List[PolyElement]:
    """{A_λ : λ ∉ B(M)} non nuls, dédoublonnés à un scalaire près."""
    gens = [
        C.minor(lam)
        for lam in itertools.combinations(range(1, C.matroid.n + 1), C.d)
        if to_mask(lam) not in C.matroid.bases
    ]
    return dedup_up_to_scalar(gens)


@dataclass
class AffinePresentation:
    """
    Présentation réduite de l'idéal affine.

    Attributes:
        variables: Variables actives restantes
        generators: Générateurs restants
        eliminated: (variable, numérateur, dénominateur) dans l'ordre d'élimination
    """
    variables: List[str]
    generators: List[PolyElement]
    eliminated: List[Tuple[str, PolyElement, PolyElement]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "generators": [format_polynomial(g) for g in self.generators],
            "eliminated": [
                {"variable": x, "numerator": format_polynomial(num), "denominator": format_polynomial(den)}
                for x, num, den in self.eliminated
            ],
        }


def _binomial_pivot(g: PolyElement, index: int):
    """
    Si g = c1·x·u + c2·r avec x de degré 1 dans un seul terme, retourne
    (c1·u, -c2·r) tels que x = -c2·r / (c1·u).
    """
    terms = g.terms()
    if len(terms) != 2:
        return None
    with_x = [(m, c) for m, c in terms if m[index] > 0]
    without_x = [(m, c) for m, c in terms if m[index] == 0]
    if len(with_x) != 1 or len(without_x) != 1 or with_x[0][0][index] != 1:
        return None
    ring = g.ring
    m1, c1 = with_x[0]
    m2, c2 = without_x[0]
    u = tuple(0 if k == index else e for k, e in enumerate(m1))
    return ring.from_dict({u: c1}), ring.from_dict({m2: -c2})


def _substitute(h: PolyElement, index: int, numerator: PolyElement, denominator: PolyElement) -> PolyElement:
    """h(x = num/den) multiplié par den^deg_x(h)."""
    ring = h.ring
    degree = max((m[index] for m in h.monoms()), default=0)
    if degree == 0:
        return h
    total = ring.zero
    for m, c in h.terms():
        k = m[index]
        rest = tuple(0 if t == index else e for t, e in enumerate(m))
        total += ring.from_dict({rest: c}) * numerator ** k * denominator ** (degree - k)
    return total


def affine_presentation(C: AffineChart) -> AffinePresentation:
    """
    Élimine successivement une variable par un générateur binomial
    u·x − r (u, r monômes en variables actives, donc x s'exprime par des
    unités) tant qu'il reste au moins deux générateurs. Les dénominateurs
    sont chassés et les facteurs monomiaux retirés.
    """
    gens = raw_affine_generators(C)
    names = list(C.active_names)
    eliminated = []
    while len(gens) >= 2:
        pivot = None
        for name in reversed(names):
            index = C.variable_names.index(name)
            for g in gens:
                found = _binomial_pivot(g, index)
                if found is not None:
                    pivot = (name, index, g, found)
                    break
            if pivot is not None:
                break
        if pivot is None:
            break
        name, index, g, (denominator, numerator) = pivot
        updated = []
        for h in gens:
            if h is g:
                continue
            reduced = _substitute(h, index, numerator, denominator)
            _, reduced = strip_monomial_factor(reduced)
            updated.append(reduced)
        gens = dedup_up_to_scalar(updated)
        names.remove(name)
        eliminated.append((name, numerator, denominator))
        logger.debug(f"élimination de {name}: {len(gens)} générateurs restants")
    return AffinePresentation(variables=names, generators=gens, eliminated=eliminated)


def affine_ideal_generators(C: AffineChart, eliminate: bool = True) -> List[PolyElement]:
    """
    Générateurs de I_M^A par substitution.

    Args:
        C: Carte affine
        eliminate: Si vrai, présentation réduite (affine_presentation);
            sinon l'ensemble brut {A_λ : λ ∉ B(M)}
    """
    if not eliminate:
        return raw_affine_generators(C)
    return affine_presentation(C).generators


@dataclass
class JacobianResult:
    """
    Matrice jacobienne et ses mineurs maximaux.

    Attributes:
        variables: Noms des variables (colonnes)
        matrix: Dérivées partielles ∂g_r/∂t_c
        minors: (colonnes, mineur) non nuls, dédoublonnés au signe près
    """
    variables: List[str]
    matrix: List[List[PolyElement]]
    minors: List[Tuple[Tuple[str, ...], PolyElement]]

    @property
    def minor_polynomials(self) -> List[PolyElement]:
        return [m for _, m in self.minors]

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "matrix": [[format_polynomial(e) for e in row] for row in self.matrix],
            "minors": [{"columns": list(cols), "minor": format_polynomial(m)} for cols, m in self.minors],
        }


def jacobian_minors(gens: Sequence[PolyElement], variables: Sequence[PolyElement]) -> JacobianResult:
    """
    Jacobienne des générateurs par rapport aux variables, et ses mineurs
    de taille len(gens).

    Raises:
        EmptyInput: Aucun générateur
        MoreGensThanVars: Plus de générateurs que de variables
    """
    if not gens:
        raise EmptyInput("au moins un générateur est requis")
    if len(gens) > len(variables):
        raise MoreGensThanVars(
            f"{len(gens)} générateurs pour {len(variables)} variables",
            generators=len(gens), variables=len(variables),
        )
    ring = gens[0].ring
    names = [str(v.as_expr()) for v in variables]
    matrix = [[g.diff(x) for x in variables] for g in gens]
    size = len(gens)
    minors = []
    seen = set()
    for cols in itertools.combinations(range(len(variables)), size):
        value = determinant([[row[c] for c in cols] for row in matrix], ring)
        if not value:
            continue
        key = normalize(value)
        if key in seen:
            continue
        seen.add(key)
        minors.append((tuple(names[c] for c in cols), value))
    return JacobianResult(variables=names, matrix=matrix, minors=minors)


@dataclass(frozen=True)
class UnitCertificate:
    """
    Mineur égal, à un scalaire près, à un produit d'unités A_λ (λ ∈ B(M)).

    Attributes:
        minor_index: Position du mineur dans la liste fournie
        factors: Les λ des facteurs (avec répétition)
        minor: Le mineur
    """
    minor_index: int
    factors: Tuple[Tuple[int, ...], ...]
    minor: PolyElement

    def to_json(self) -> dict:
        return {
            "minor_index": self.minor_index,
            "minor": format_polynomial(self.minor),
            "factors": [list(lam) for lam in self.factors],
        }


def unit_witnesses(
    minors: Sequence[PolyElement],
    C: AffineChart,
    max_factors: int = 3,
) -> List[UnitCertificate]:
    """
    Tous les certificats : pour chaque mineur, chaque produit d'au plus
    max_factors unités égal au mineur à un scalaire près.
    """
    units = C.units
    degrees = [sum(a.LM) for _, a in units]
    certificates = []
    for index, minor in enumerate(minors):
        if not minor:
            continue
        if minor.is_ground:
            certificates.append(UnitCertificate(index, (), minor))
            continue
        target = normalize(minor)
        target_degree = sum(target.LM)
        for size in range(1, max_factors + 1):
            for combo in itertools.combinations_with_replacement(range(len(units)), size):
                if sum(degrees[k] for k in combo) != target_degree:
                    continue
                product = C.ring.one
                for k in combo:
                    product = product * units[k][1]
                if normalize(product) == target:
                    certificates.append(UnitCertificate(index, tuple(units[k][0] for k in combo), minor))
    return certificates


def unit_witness(
    minors: Sequence[PolyElement],
    C: AffineChart,
    max_factors: int = 3,
) -> Optional[UnitCertificate]:
    """
    Premier certificat d'unité trouvé (le moins de facteurs d'abord).

    Un certificat montre que l'idéal jacobien contient une unité de R_M^A.
    """
    found = unit_witnesses(minors, C, max_factors)
    if not found:
        return None
    return min(found, key=lambda c: (len(c.factors), c.minor_index, c.factors))
