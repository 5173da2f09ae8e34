"""
Polynômes exacts sur Q ou F_p (anneaux creux sympy, ordre grlex) :
formes initiales, normalisation, déterminants symboliques, lecture et
écriture.
"""

import itertools
import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import sympy
from sympy.combinatorics import Permutation
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
from sympy.polys.domains import GF, QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement, PolyRing

from tropical_app.core.errors import MalformedInput, ZeroPolynomial


logger = logging.getLogger(__name__)

MAX_CHARACTERISTIC = 1 << 16

TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication_application)


def coefficient_domain(characteristic: int = 0):
    """
    Corps des coefficients : Q pour 0, F_p pour p premier < 2^16.

    Raises:
        MalformedInput: Caractéristique non première ou trop grande
    """
    if characteristic == 0:
        return QQ
    if not 1 < characteristic < MAX_CHARACTERISTIC or not sympy.isprime(characteristic):
        raise MalformedInput(f"caractéristique invalide: {characteristic}")
    return GF(characteristic)


def make_ring(names: Sequence[str], characteristic: int = 0) -> PolyRing:
    """Anneau de polynômes en ``names`` (ordre grlex)."""
    return PolyRing(list(names), coefficient_domain(characteristic), grlex)


def is_zero(f: PolyElement) -> bool:
    return not f


def normalize(f: PolyElement) -> PolyElement:
    """Représentant unitaire (division par le coefficient dominant)."""
    if not f:
        return f
    return f.monic()


def poly_key(f: PolyElement) -> Tuple:
    """Clé de tri déterministe."""
    g = normalize(f)
    return (
        max((sum(m) for m in g.monoms()), default=-1),
        tuple(tuple(-e for e in m) for m in g.monoms()),
        tuple(str(c) for c in g.coeffs()),
    )


def same_up_to_scalar(f: PolyElement, g: PolyElement) -> bool:
    return normalize(f) == normalize(g)


def dedup_up_to_scalar(polys: Iterable[PolyElement]) -> List[PolyElement]:
    """
    Supprime les polynômes nuls et les doublons à un scalaire près.

    La première occurrence est conservée; le résultat est trié par poly_key.
    """
    seen = {}
    for f in polys:
        if not f:
            continue
        key = normalize(f)
        if key not in seen:
            seen[key] = f
    return sorted(seen.values(), key=poly_key)


def weight_of(monom: Sequence[int], weights: Sequence) -> Fraction:
    return sum((Fraction(w) * e for w, e in zip(weights, monom)), start=Fraction(0))


def initial_form(f: PolyElement, weights: Sequence) -> PolyElement:
    """
    Forme initiale in_w(f) : somme des termes de poids <w,z> minimal.

    Args:
        f: Polynôme non nul
        weights: Un poids rationnel par variable de l'anneau

    Raises:
        ZeroPolynomial: Si f est nul
    """
    if not f:
        raise ZeroPolynomial("forme initiale du polynôme nul")
    values = {m: weight_of(m, weights) for m in f.monoms()}
    low = min(values.values())
    return f.ring.from_dict({m: c for m, c in f.terms() if values[m] == low})


def strip_monomial_factor(f: PolyElement) -> Tuple[Tuple[int, ...], PolyElement]:
    """Retire le plus grand monôme divisant f; retourne (exposants, quotient)."""
    if not f:
        return tuple(0 for _ in f.ring.gens), f
    poly = sympy.Poly.from_dict(dict(f), *f.ring.symbols, domain=f.ring.domain)
    monom, rest = poly.terms_gcd()
    return monom, f.ring.from_dict(rest.rep.to_dict())


def determinant(rows: Sequence[Sequence[PolyElement]], ring: PolyRing) -> PolyElement:
    """Déterminant symbolique par la formule de Leibniz."""
    size = len(rows)
    total = ring.zero
    for perm in itertools.permutations(range(size)):
        term = ring.one
        for r, c in enumerate(perm):
            entry = rows[r][c]
            if not entry:
                term = ring.zero
                break
            term = term * entry
        if term:
            total += Permutation(list(perm)).signature() * term
    return total


def parse_polynomial(ring: PolyRing, text: str) -> PolyElement:
    """
    Lit un polynôme écrit avec les variables de l'anneau.

    Accepte "^" pour la puissance et la multiplication implicite ("2t").

    Raises:
        MalformedInput: Expression illisible ou hors de l'anneau
    """
    local = {str(s): s for s in ring.symbols}
    try:
        expr = parse_expr(str(text).replace("−", "-"), local_dict=local, transformations=TRANSFORMATIONS)
        return ring.from_expr(expr)
    except (SyntaxError, TypeError, ValueError, CoercionFailed, sympy.SympifyError) as e:
        raise MalformedInput(f"polynôme invalide {text!r}: {e}") from None


def format_polynomial(f: PolyElement) -> str:
    return str(f.as_expr()) if f else "0"


def format_polynomials(polys: Iterable[PolyElement]) -> List[str]:
    return [format_polynomial(f) for f in polys]
