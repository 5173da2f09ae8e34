"""
Options argparse partagées et chargement des entrées des pipelines.
"""

import argparse
from typing import Optional

from tropical_app.core.data_models import FanData, WeightVector
from tropical_app.core.errors import MalformedInput
from tropical_app.core.matroid import Matroid, matroid_from_json, uniform_matroid
from tropical_app.fans.fan_scan import load_fan, tgr2_fan_builder
from tropical_app.matroids.named_matroids import named_matroid
from tropical_app.utils.serialization import load_json, parse_index_list


def add_matroid_options(parser: argparse.ArgumentParser, required: bool = False) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--matroid", help="Fichier JSON du matroïde {n, d, bases}")
    group.add_argument("--named", help="Nom d'un matroïde prédéfini (fano, pappus, m_124, ...)")


def add_weight_option(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--weight",
        required=required,
        help="Fichier JSON du vecteur de poids {d, n, entries}",
    )


def add_fan_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--fan", help="Fichier JSON de l'éventail")
    group.add_argument(
        "--tree-fan",
        type=int,
        metavar="N",
        help="Éventail des arbres TGr(2,N) construit en interne (4 <= N <= 7)",
    )


def load_matroid(args: argparse.Namespace, default: Optional[Matroid] = None) -> Matroid:
    """
    Matroïde désigné par --matroid ou --named, sinon ``default``.

    Raises:
        MalformedInput: Aucun matroïde fourni et pas de défaut
    """
    if getattr(args, "matroid", None):
        return matroid_from_json(load_json(args.matroid))
    if getattr(args, "named", None):
        return named_matroid(args.named)
    if default is not None:
        return default
    raise MalformedInput("--matroid ou --named est requis")


def load_weight(args: argparse.Namespace) -> WeightVector:
    if not getattr(args, "weight", None):
        raise MalformedInput("--weight est requis")
    return WeightVector.from_json(load_json(args.weight))


def matroid_for_weight(args: argparse.Namespace, w: WeightVector) -> Matroid:
    """Matroïde explicite, ou U(d,n) aux dimensions du poids."""
    return load_matroid(args, default=uniform_matroid(w.d, w.n))


def load_fan_input(args: argparse.Namespace) -> FanData:
    if getattr(args, "tree_fan", None) is not None:
        return tgr2_fan_builder(args.tree_fan)
    return load_fan(args.fan)


def parse_basis(text: Optional[str]) -> tuple:
    if not text:
        raise MalformedInput("--basis est requis (ex. 1,2,3)")
    return parse_index_list(text)


def parse_cone(text: Optional[str]) -> tuple:
    """Indices de rayons 1-based vers 0-based; vide pour l'origine."""
    if not text:
        return ()
    try:
        indices = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise MalformedInput(f"liste d'indices de rayons invalide: {text!r}") from None
    if any(i < 1 for i in indices):
        raise MalformedInput(f"indices de rayons 1-based attendus: {text!r}")
    return tuple(sorted(i - 1 for i in indices))
