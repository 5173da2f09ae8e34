"""
Tests pour les modèles de données et la sérialisation.
"""

from fractions import Fraction

import pytest

from tropical_app.core.data_models import (
    Cone,
    FacetDescription,
    FanData,
    RunReport,
    WeightVector,
    plucker_indices,
)
from tropical_app.core.errors import BadIndex, DimensionMismatch, MalformedInput
from tropical_app.utils.serialization import (
    canonical_json,
    format_rational,
    parse_index_list,
    parse_rational,
    parse_subset_key,
    stable_hash,
    subset_key,
)


class TestWeightVector:
    """Tests pour la classe WeightVector."""

    def test_creation(self):
        """Test de création et d'accès aux entrées."""
        w = WeightVector(3, 7, {(1, 2, 4): 1, (1, 3, 5): Fraction(-3, 2)})
        assert w.get((1, 2, 4)) == 1
        assert w.get((1, 3, 5)) == Fraction(-3, 2)
        assert w.get((5, 6, 7)) == 0

    def test_zeros_not_stored(self):
        """Test de la suppression des entrées nulles."""
        w = WeightVector(2, 4, {(1, 2): 0, (3, 4): 2})
        assert w.entries == {(3, 4): Fraction(2)}

    def test_invalid_index(self):
        """Test du rejet d'un indice de mauvaise taille."""
        with pytest.raises(BadIndex):
            WeightVector(3, 7, {(1, 2): 1})
        with pytest.raises(BadIndex):
            WeightVector(2, 4, {(1, 5): 1})

    def test_invalid_dimensions(self):
        """Test du rejet de d > n."""
        with pytest.raises(MalformedInput):
            WeightVector(5, 4)

    def test_from_list(self):
        """Test de la construction depuis une liste lexicographique."""
        w = WeightVector.from_list(2, 4, [1, 0, 0, 0, 0, 2])
        assert w.get((1, 2)) == 1
        assert w.get((3, 4)) == 2
        assert w.as_list() == [1, 0, 0, 0, 0, 2]

    def test_from_list_wrong_length(self):
        """Test d'une liste de mauvaise longueur."""
        with pytest.raises(DimensionMismatch):
            WeightVector.from_list(2, 4, [1, 2, 3])

    def test_shift(self):
        """Test de l'ajout d'une constante."""
        w = WeightVector.zero(2, 4).shift(3)
        assert all(v == 3 for v in w.as_list())

    def test_permute(self):
        """Test de l'action d'une permutation sur les indices."""
        w = WeightVector.from_support(2, 4, [(1, 2)])
        moved = w.permute((3, 4, 1, 2))
        assert moved.entries == {(3, 4): Fraction(1)}

    def test_json(self):
        """Test du format JSON à clés compactes et rationnels en chaînes."""
        w = WeightVector(2, 4, {(1, 2): Fraction(1, 2)})
        data = w.to_json()
        assert data == {"d": 2, "n": 4, "entries": {"12": "1/2"}}
        assert WeightVector.from_json(data) == w

    def test_from_json_malformed(self):
        """Test d'un JSON sans champ d."""
        with pytest.raises(MalformedInput):
            WeightVector.from_json({"n": 4, "entries": {}})


class TestFacetDescription:
    """Tests pour la classe FacetDescription."""

    def test_str(self):
        """Test de l'affichage des inégalités."""
        assert str(FacetDescription("lower_bound", (3,), 0)) == "x_3 >= 0"
        assert str(FacetDescription("flat_bound", (1, 2, 4), 2)) == "x_124 <= 2"

    def test_invalid_kind(self):
        """Test d'un type de facette inconnu."""
        with pytest.raises(MalformedInput):
            FacetDescription("upper", (1,), 1)

    def test_lower_bound_single_element(self):
        """Test d'une borne inférieure sur deux éléments."""
        with pytest.raises(MalformedInput):
            FacetDescription("lower_bound", (1, 2), 0)


class TestCone:
    """Tests pour la classe Cone."""

    def test_mixed_lengths(self):
        """Test du rejet de vecteurs de longueurs différentes."""
        with pytest.raises(DimensionMismatch):
            Cone(rays=((1, 0),), lineality=((1, 0, 0),))

    def test_ambient_dim(self):
        """Test de la dimension ambiante."""
        assert Cone(rays=((1, 0, 0),)).ambient_dim == 3
        assert Cone().ambient_dim is None


class TestFanData:
    """Tests pour la classe FanData."""

    def test_normalizes_cones(self):
        """Test du tri et du dédoublonnage des cônes."""
        F = FanData(d=1, n=2, rays=[[1, 0], [0, 1]], cones_by_dim={1: [(1,), (0,), (0,)]})
        assert F.cones_by_dim == {1: [(0,), (1,)]}
        assert F.maximal_cones() == [(0,), (1,)]

    def test_bad_ray_index(self):
        """Test d'un indice de rayon hors bornes."""
        with pytest.raises(MalformedInput):
            FanData(d=1, n=2, rays=[[1, 0]], cones_by_dim={1: [(3,)]})

    def test_bad_symmetry(self):
        """Test d'un générateur de symétrie invalide."""
        with pytest.raises(MalformedInput):
            FanData(d=1, n=2, rays=[[1, 0]], cones_by_dim={1: [(0,)]}, symmetry=[(1, 1)])


class TestRunReport:
    """Tests pour la classe RunReport."""

    def test_exit_codes(self):
        """Test du contrat des codes de sortie."""
        assert RunReport("x", {}, {}, "ok").exit_code == 0
        assert RunReport("x", {}, {"witness": {}}, "property_failed").exit_code == 1
        assert RunReport("x", {}, {}, "input_error").exit_code == 2

    def test_failure_needs_witness(self):
        """Test d'un échec sans témoin."""
        with pytest.raises(ValueError):
            RunReport("x", {}, {}, "property_failed")

    def test_timing_excluded_by_default(self):
        """Test de l'absence de durée dans le dictionnaire par défaut."""
        report = RunReport("x", {}, {}, "ok", elapsed_seconds=1.5)
        assert "elapsed_seconds" not in report.to_dict()
        assert report.to_dict(include_timing=True)["elapsed_seconds"] == 1.5


class TestSerialization:
    """Tests pour les fonctions de sérialisation."""

    def test_rationals(self):
        """Test de lecture et d'écriture des rationnels."""
        assert parse_rational("-3/2") == Fraction(-3, 2)
        assert parse_rational(2) == 2
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 2)) == "-3/2"

    def test_rational_rejects_garbage(self):
        """Test d'un rationnel illisible."""
        with pytest.raises(MalformedInput):
            parse_rational("abc")

    def test_subset_keys(self):
        """Test des clés de sous-ensembles."""
        assert subset_key((1, 2, 4), 7) == "124"
        assert subset_key((1, 10), 11) == "1,10"
        assert parse_subset_key("421", 7) == (1, 2, 4)
        assert parse_subset_key("1,10", 11) == (1, 10)

    def test_index_list(self):
        """Test de la lecture des listes d'indices."""
        assert parse_index_list("3,1,2") == (1, 2, 3)
        assert parse_index_list("124") == (1, 2, 4)
        with pytest.raises(MalformedInput):
            parse_index_list("1,x")

    def test_canonical_json(self):
        """Test du tri des clés et de la stabilité de l'empreinte."""
        assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
        assert stable_hash({"b": 1, "a": 2}) == stable_hash({"a": 2, "b": 1})

    def test_plucker_indices_lex(self):
        """Test de l'ordre lexicographique de Λ(d,n)."""
        assert plucker_indices(2, 4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
