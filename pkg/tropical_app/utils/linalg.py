"""
Algèbre linéaire exacte sur Q (matrices sympy).
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Callable, List, Optional, Sequence

import sympy
from sympy import Matrix, Rational


def to_fraction(value) -> Fraction:
    """Rationnel sympy, entier ou Fraction vers Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    r = Rational(value)
    return Fraction(int(r.p), int(r.q))


def _to_sympy(x):
    if isinstance(x, Fraction):
        return Rational(x.numerator, x.denominator)
    return sympy.sympify(int(x)) if hasattr(x, "__index__") else sympy.sympify(x)


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Lignes rationnelles vers une matrice sympy exacte."""
    return Matrix([[_to_sympy(x) for x in row] for row in rows])


def exact_rank(vectors: Sequence[Sequence]) -> int:
    """Rang exact d'une famille de vecteurs (0 si vide)."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return to_matrix(vectors).rank()


def in_span(vector: Sequence, basis: Sequence[Sequence]) -> bool:
    """Vrai si ``vector`` appartient à l'espace engendré par ``basis``."""
    if not any(vector):
        return True
    return exact_rank(list(basis) + [vector]) == exact_rank(basis)


def determinant(rows: Sequence[Sequence]) -> Fraction:
    return to_fraction(to_matrix(rows).det())


def solve_exact(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
    """
    Résout A x = b exactement.

    Returns:
        Une solution (paramètres libres fixés à 0) ou None si incompatible
    """
    A = to_matrix(rows)
    b = to_matrix([[x] for x in rhs])
    try:
        solution, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return [to_fraction(x) for x in solution]


def primitive_integer_vector(values: Sequence) -> List[int]:
    """
    Multiple entier primitif d'un vecteur rationnel (même direction).
    """
    fracs = [Fraction(v) if not isinstance(v, Fraction) else v for v in values]
    denom = reduce(lcm, (f.denominator for f in fracs), 1)
    ints = [int(f * denom) for f in fracs]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return ints
    return [x // g for x in ints]


def modulo_span_reducer(basis: Sequence[Sequence]) -> Callable[[Sequence], List[Fraction]]:
    """
    Réduction modulo l'espace engendré par ``basis``, forme échelonnée
    calculée une seule fois.

    Les coordonnées pivots de la forme échelonnée réduite sont annulées,
    ce qui donne un représentant canonique.
    """
    rows = []
    if len(basis):
        rref, pivots = to_matrix(basis).rref()
        rows = [(col, [to_fraction(x) for x in rref.row(r)]) for r, col in enumerate(pivots)]

    def reduce_vector(vector: Sequence) -> List[Fraction]:
        v = [Fraction(x) for x in vector]
        for col, row in rows:
            coeff = v[col]
            if coeff:
                v = [x - coeff * r for x, r in zip(v, row)]
        return v

    return reduce_vector


def reduce_modulo_span(vector: Sequence, basis: Sequence[Sequence]) -> List[Fraction]:
    """Représentant canonique de ``vector`` modulo l'espace engendré."""
    return modulo_span_reducer(basis)(vector)
