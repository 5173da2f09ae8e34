"""
Tests pour le recensement des matroïdes.
"""

import pytest

from tropical_app.core.errors import MalformedInput, TooLarge
from tropical_app.core.matroid import exchange_violation, is_isomorphic, uniform_matroid
from tropical_app.matroids.census import (
    REFERENCE_COUNTS,
    canonical_form,
    census_report,
    enumerate_matroids,
)
from tropical_app.matroids.named_matroids import FIG36


class TestEnumerateMatroids:
    """Tests pour enumerate_matroids."""

    @pytest.mark.parametrize("d, n, expected", [
        (1, 3, 3),
        (2, 4, 7),
        (2, 5, 13),
        (3, 5, 13),
    ])
    def test_small_counts(self, d, n, expected):
        """Test des nombres de classes pour de petits paramètres."""
        assert len(enumerate_matroids(d, n)) == expected

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_rank_one(self, n):
        """Test des matroïdes de rang 1 : n classes."""
        assert len(enumerate_matroids(1, n)) == n

    def test_classes_are_matroids(self):
        """Test de validité et de non-isomorphie des représentants."""
        classes = enumerate_matroids(2, 4)
        assert all(exchange_violation(M.bases) is None for M in classes)
        for i, M in enumerate(classes):
            for N in classes[i + 1:]:
                assert is_isomorphic(M, N) is None

    def test_uniform_present(self):
        """Test de la présence de U(2,4)."""
        assert canonical_form(uniform_matroid(2, 4)) in enumerate_matroids(2, 4)

    def test_too_large(self):
        """Test de la limite n <= 6."""
        with pytest.raises(TooLarge):
            enumerate_matroids(3, 7)

    def test_bad_parameters(self):
        """Test de d > n."""
        with pytest.raises(MalformedInput):
            enumerate_matroids(4, 3)


class TestCensusReport:
    """Tests pour census_report."""

    def test_expected_given(self):
        """Test d'une valeur attendue correcte."""
        report = census_report(2, 4, expected=7)
        assert report.matches
        assert report.to_json()["count"] == 7

    def test_no_reference(self):
        """Test sans valeur de référence."""
        report = census_report(2, 5)
        assert report.expected is None
        assert report.matches

    @pytest.mark.slow
    def test_rank_three_six(self):
        """Test du recensement (3,6) contre la valeur de référence."""
        report = census_report(3, 6)
        assert report.count == 38
        assert report.expected == REFERENCE_COUNTS[(3, 6)] == 36
        assert not report.matches
        assert canonical_form(FIG36) in report.classes
