"""
Sérialisation canonique : rationnels en chaînes, clés de sous-ensembles,
JSON trié et empreintes SHA-256.
"""

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Sequence, Union

from tropical_app.core.errors import MalformedInput


Rational = Union[int, Fraction]


def parse_rational(value: Any) -> Fraction:
    """
    Convertit une valeur JSON en rationnel exact.

    Accepte les entiers et les chaînes ("3/2", "-1", "0.5").
    Les flottants sont refusés pour éviter toute dérive.

    Raises:
        MalformedInput: Si la valeur n'est pas un rationnel exact
    """
    if isinstance(value, bool):
        raise MalformedInput(f"rationnel invalide: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"rationnel invalide: {value!r}") from None
    raise MalformedInput(f"rationnel invalide: {value!r}")


def format_rational(value: Rational) -> str:
    """Rationnel vers chaîne ("3/2", "-1", "0")."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def subset_key(subset: Sequence[int], n: int) -> str:
    """
    Clé textuelle d'un sous-ensemble trié.

    Examples:
        >>> subset_key((1, 2, 4), 7)
        '124'
        >>> subset_key((1, 10), 11)
        '1,10'
    """
    if n <= 9:
        return "".join(str(i) for i in subset)
    return ",".join(str(i) for i in subset)


def parse_subset_key(key: str, n: int) -> tuple:
    """Inverse de subset_key; accepte aussi la forme avec virgules."""
    try:
        if "," in key or n > 9:
            parts = [int(p) for p in key.split(",") if p.strip()]
        else:
            parts = [int(c) for c in key.strip()]
    except ValueError:
        raise MalformedInput(f"clé de sous-ensemble invalide: {key!r}") from None
    return tuple(sorted(parts))


def parse_index_list(text: str) -> tuple:
    """Analyse "1,2,4" (ou "124") en tuple trié d'entiers."""
    text = text.strip()
    try:
        if "," in text:
            return tuple(sorted(int(p) for p in text.split(",") if p.strip()))
        return tuple(sorted(int(c) for c in text))
    except ValueError:
        raise MalformedInput(f"liste d'indices invalide: {text!r}") from None


def canonical_json(value: Any) -> str:
    """JSON canonique : clés triées, séparateurs compacts."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def stable_hash(value: Any) -> str:
    """Empreinte SHA-256 du JSON canonique."""
    return hashlib.sha256(canonical_json(value).encode("utf-8")).hexdigest()


def file_digest(path: Union[str, Path]) -> str:
    """Empreinte SHA-256 du contenu brut d'un fichier."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def load_json(path: Union[str, Path]) -> dict:
    """
    Charge un objet JSON depuis un fichier.

    Raises:
        MalformedInput: Fichier absent, JSON invalide ou racine non objet
    """
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise MalformedInput(f"lecture impossible de {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise MalformedInput(f"JSON invalide dans {path}: {e}") from None
    if not isinstance(data, dict):
        raise MalformedInput(f"la racine JSON doit être un objet: {path}")
    return data


def rational_vector(values: Iterable[Rational]) -> list:
    """Vecteur rationnel sérialisé en chaînes."""
    return [format_rational(v) for v in values]
