"""
Hiérarchie d'exceptions de la bibliothèque.

Deux familles :
- InputError : précondition violée par l'entrée (statut ``input_error``, code 2)
- PropertyFailure : propriété certifiée fausse (statut ``property_failed``, code 1)

Chaque exception expose son témoin via ``witness()``.
"""

from typing import Any, Optional


class TropicalError(Exception):
    """Racine de toutes les erreurs de tropical_app."""

    def __init__(self, message: str, **witness: Any):
        super().__init__(message)
        self._witness = witness

    def witness(self) -> dict:
        """
        Retourne le témoin lisible par machine.

        Returns:
            dict: Données du contre-exemple (peut être vide)
        """
        return dict(self._witness)


class InputError(TropicalError, ValueError):
    """Entrée invalide ou hors du domaine d'une opération."""


class PropertyFailure(TropicalError):
    """Une propriété vérifiée a échoué, avec témoin."""


class ExchangeViolation(InputError):
    """L'axiome d'échange des bases est violé."""

    def __init__(self, beta1: tuple, beta2: tuple, x: int):
        super().__init__(
            f"axiome d'échange violé: base {beta1}, base {beta2}, élément {x}",
            beta1=list(beta1), beta2=list(beta2), x=x,
        )
        self.beta1 = beta1
        self.beta2 = beta2
        self.x = x


class OverlapError(InputError):
    """Ensembles supprimé et contracté non disjoints."""


class InvalidPartition(InputError):
    """Partition de [n] invalide."""


class UnknownName(InputError):
    """Nom de matroïde inconnu."""


class DimensionMismatch(InputError):
    """Dimensions incompatibles entre deux objets."""


class TooLarge(InputError):
    """Taille d'entrée au-delà de la limite d'énumération."""


class NotABasis(InputError):
    """L'ensemble donné n'est pas une base du matroïde."""


class BadIndex(InputError):
    """Indice hors des conditions requises."""


class ZeroPolynomial(InputError):
    """Polynôme nul là où un polynôme non nul est attendu."""


class SingularMinor(InputError):
    """Un mineur maximal est identiquement nul."""

    def __init__(self, columns: tuple):
        super().__init__(
            f"mineur identiquement nul pour les colonnes {columns}",
            columns=list(columns),
        )
        self.columns = columns


class MoreGensThanVars(InputError):
    """Plus de générateurs que de variables dans la jacobienne."""


class UnknownCone(InputError):
    """Le cône demandé n'appartient pas à l'éventail."""


class ActionInvalid(InputError):
    """L'action de symétrie ne permute pas l'ensemble des rayons."""


class NotInternal(InputError):
    """Le sommet n'est pas un sommet interne de l'arbre."""


class InvalidTree(InputError):
    """Arbre phylogénétique invalide."""


class EmptyInput(InputError):
    """Entrée vide."""


class TooFewCells(InputError):
    """Subdivision avec trop peu de cellules maximales."""


class MalformedInput(InputError):
    """Fichier ou argument mal formé (JSON, entier, rationnel...)."""


class UnknownSubcommand(InputError):
    """Sous-commande CLI inconnue."""


class NonMatroidCell(PropertyFailure):
    """Une cellule de la subdivision n'est pas un polytope de matroïde."""

    def __init__(self, cell_index: int, violation: Optional[ExchangeViolation] = None):
        details = violation.witness() if violation is not None else {}
        super().__init__(
            f"la cellule {cell_index} n'est pas un matroïde",
            cell=cell_index, **details,
        )
        self.cell_index = cell_index
        self.violation = violation


class FourPointViolation(PropertyFailure):
    """La condition des quatre points échoue sur un quadruplet."""

    def __init__(self, quadruple: tuple):
        super().__init__(
            f"condition des quatre points violée sur {quadruple}",
            quadruple=list(quadruple),
        )
        self.quadruple = quadruple
