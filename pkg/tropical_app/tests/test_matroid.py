"""
Tests pour le cœur matroïdal et les matroïdes nommés.
"""

import itertools

import pytest

from tropical_app.core.errors import (
    BadIndex,
    DimensionMismatch,
    ExchangeViolation,
    InvalidPartition,
    MalformedInput,
    OverlapError,
    UnknownName,
)
from tropical_app.core.matroid import (
    Matroid,
    components,
    contraction,
    direct_sum,
    dual,
    face_matroid,
    flats_and_lines,
    full_mask,
    is_connected,
    is_isomorphic,
    matroid_from_json,
    minor,
    partition_matroid,
    rank,
    relabel,
    restriction,
    simplicity_report,
    to_mask,
    uniform_matroid,
    validate,
)
from tropical_app.matroids.census import enumerate_matroids
from tropical_app.matroids.named_matroids import (
    FANO,
    FANO_LINES,
    M1_37,
    M2_37,
    PAPPUS,
    create_m_ijk,
    create_mprime_ijk,
    named_matroid,
)


class TestValidate:
    """Tests pour validate et l'axiome d'échange."""

    def test_uniform_is_valid(self):
        """Test de validation de U(2,3)."""
        M = validate([(1, 2), (1, 3), (2, 3)], 3, 2)
        assert M == uniform_matroid(2, 3)

    def test_exchange_violation_witness(self):
        """Test du contre-exemple à l'échange."""
        with pytest.raises(ExchangeViolation) as exc:
            validate([(1, 2), (3, 4)], 4, 2)
        assert exc.value.witness() == {"beta1": [1, 2], "beta2": [3, 4], "x": 1}

    def test_wrong_cardinality(self):
        """Test d'une base de mauvaise taille."""
        with pytest.raises(MalformedInput):
            validate([(1, 2, 3)], 4, 2)

    def test_out_of_range(self):
        """Test d'un élément hors de [n]."""
        with pytest.raises(MalformedInput):
            validate([(1, 5)], 4, 2)

    def test_from_json(self):
        """Test de lecture JSON d'un matroïde."""
        data = {"n": 3, "d": 2, "bases": [[1, 2], [1, 3], [2, 3]]}
        M = matroid_from_json(data)
        assert M.to_json() == data

    def test_from_json_malformed(self):
        """Test d'un JSON sans bases."""
        with pytest.raises(MalformedInput):
            matroid_from_json({"n": 3, "d": 2})


class TestRankAndFlats:
    """Tests pour le rang, les plats et la simplicité."""

    def test_fano_rank(self):
        """Test du rang dans le plan de Fano."""
        assert rank(FANO, (1, 2, 4)) == 2
        assert rank(FANO, (1, 2, 3)) == 3
        assert rank(FANO, ()) == 0

    def test_fano_bases_and_lines(self):
        """Test des bases et des droites du plan de Fano."""
        assert len(FANO.bases) == 28
        _, lines = flats_and_lines(FANO)
        assert lines == sorted(FANO_LINES)

    def test_pappus_bases(self):
        """Test du nombre de bases de Pappus."""
        assert len(PAPPUS.bases) == 75

    def test_simplicity(self):
        """Test des classes parallèles et des boucles."""
        report = simplicity_report(partition_matroid([(1, 2), (3, 4)]))
        assert report.parallel_classes == ((1, 2), (3, 4))
        assert not report.is_simple
        assert simplicity_report(FANO).is_simple

    def test_loops(self):
        """Test de détection d'une boucle."""
        M = validate([(1,), (2,)], 3, 1)
        assert M.loops == (3,)
        assert simplicity_report(M).loops == (3,)


class TestConstructions:
    """Tests pour les dual, mineurs, sommes et faces."""

    def test_dual_uniform(self):
        """Test du dual de U(2,4)."""
        assert dual(uniform_matroid(2, 4)) == uniform_matroid(2, 4)

    def test_contraction_restriction(self):
        """Test de contraction et restriction de U(3,5)."""
        assert contraction(uniform_matroid(3, 5), (1,)) == uniform_matroid(2, 4)
        assert restriction(uniform_matroid(3, 5), (1, 2, 3)) == uniform_matroid(3, 3)

    def test_minor_overlap(self):
        """Test d'ensembles supprimé et contracté non disjoints."""
        with pytest.raises(OverlapError) as exc:
            minor(uniform_matroid(2, 4), (1, 2), (2,))
        assert exc.value.witness() == {"overlap": [2]}

    def test_partition_matroid(self):
        """Test du matroïde de partition."""
        M = partition_matroid([(1, 2), (3,)])
        assert M.sorted_bases == [(1, 3), (2, 3)]

    def test_invalid_partition(self):
        """Test de partitions invalides."""
        with pytest.raises(InvalidPartition):
            partition_matroid([(1, 2), (2, 3)])
        with pytest.raises(InvalidPartition):
            partition_matroid([(1, 2, 3)])

    def test_direct_sum_components(self):
        """Test des composantes d'une somme directe."""
        M = direct_sum(uniform_matroid(1, 1), uniform_matroid(1, 1))
        assert components(M) == [(1,), (2,)]
        assert not is_connected(M)
        assert is_connected(uniform_matroid(2, 4))

    def test_face_matroid(self):
        """Test de la face x_12 = 2 de Δ(2,4)."""
        face = face_matroid(uniform_matroid(2, 4), (1, 2))
        assert face.sorted_bases == [(1, 2)]

    def test_isomorphism(self):
        """Test de la recherche d'isomorphisme."""
        sigma = (2, 3, 4, 5, 6, 7, 1)
        assert is_isomorphic(relabel(FANO, sigma), FANO) is not None
        assert is_isomorphic(create_m_ijk(1, 2, 4), create_m_ijk(1, 3, 5)) is not None
        assert is_isomorphic(create_m_ijk(1, 2, 4), create_mprime_ijk(1, 2, 4)) is None

    def test_isomorphism_dimension_mismatch(self):
        """Test de matroïdes de tailles différentes."""
        with pytest.raises(DimensionMismatch):
            is_isomorphic(uniform_matroid(2, 4), uniform_matroid(2, 5))

    def test_matroid_shape_validation(self):
        """Test de la validation de forme du constructeur."""
        with pytest.raises(MalformedInput):
            Matroid(n=3, d=2, bases=frozenset())
        with pytest.raises(MalformedInput):
            Matroid(n=3, d=2, bases=frozenset({to_mask((1, 2, 3))}))


class TestNamedMatroids:
    """Tests pour les matroïdes nommés."""

    def test_m_ijk(self):
        """Test des bases de M_124 et M'_124."""
        assert len(create_m_ijk(1, 2, 4).bases) == 13
        assert len(create_mprime_ijk(1, 2, 4).bases) == 12

    def test_parametric_names(self):
        """Test des deux formes de noms paramétrés."""
        assert named_matroid("m_124") == create_m_ijk(1, 2, 4)
        assert named_matroid("mprime_ijk(1,3,5)") == create_mprime_ijk(1, 3, 5)
        assert named_matroid("Fano") == FANO

    def test_unknown_name(self):
        """Test d'un nom inconnu."""
        with pytest.raises(UnknownName):
            named_matroid("vamos")

    def test_bad_triple(self):
        """Test d'un triplet avec répétition."""
        with pytest.raises(BadIndex):
            named_matroid("m_118")


@pytest.fixture(scope="module")
def rank_three_matroids():
    return enumerate_matroids(3, 6) + [FANO]


@pytest.mark.slow
class TestMatroidAxioms:
    """Tests des propriétés structurelles sur le recensement (3,[6]) et Fano."""

    def test_submodularity(self, rank_three_matroids):
        """Test de ρ(λ∩μ) + ρ(λ∪μ) ≤ ρ(λ) + ρ(μ) pour toutes les paires."""
        for M in rank_three_matroids:
            masks = range(full_mask(M.n) + 1)
            for a in masks:
                for b in masks:
                    assert M.rank(a & b) + M.rank(a | b) <= M.rank(a) + M.rank(b), (M.sorted_bases, a, b)

    def test_dual_involution(self, rank_three_matroids):
        """Test de dual(dual(M)) = M."""
        for M in rank_three_matroids:
            assert dual(dual(M)) == M

    def test_loops_are_dual_coloops(self, rank_three_matroids):
        """Test des boucles de M égales aux isthmes du dual."""
        for M in rank_three_matroids:
            assert M.loops == dual(M).coloops
            assert M.coloops == dual(M).loops

    def test_face_composability(self, rank_three_matroids):
        """Test de la composition de deux faces."""
        for M in rank_three_matroids:
            for eta1 in itertools.combinations(range(1, M.n + 1), 2):
                face = face_matroid(M, eta1)
                r1 = rank(M, eta1)
                for eta2 in itertools.combinations(range(1, M.n + 1), 3):
                    r2 = rank(face, eta2)
                    expected = {
                        b for b in M.bases
                        if (b & to_mask(eta1)).bit_count() == r1
                        and (b & to_mask(eta2)).bit_count() == r2
                    }
                    assert face_matroid(face, eta2).bases == expected

    def test_census_pairwise_non_isomorphic(self):
        """Test des représentants du recensement deux à deux non isomorphes."""
        census = enumerate_matroids(3, 6)
        for M in census:
            assert validate(M.sorted_bases, M.n, M.d) == M
        for M1, M2 in itertools.combinations(census, 2):
            assert is_isomorphic(M1, M2) is None


class TestWorkedExamples:
    """Tests d'exemples calculés à la main."""

    def test_partition_rank_formula(self):
        """Test du rang d'un matroïde de partition : 0, 1 dans un bloc, 2 sinon."""
        blocks = [(1, 2), (3,), (4, 5)]
        M = partition_matroid(blocks)
        for size in range(6):
            for subset in itertools.combinations(range(1, 6), size):
                if not subset:
                    expected = 0
                elif any(set(subset) <= set(block) for block in blocks):
                    expected = 1
                else:
                    expected = 2
                assert rank(M, subset) == expected, subset

    def test_fano_contraction(self):
        """Test de Fano / {1} : trois paires parallèles."""
        M = contraction(FANO, (1,))
        assert (M.n, M.d) == (6, 2)
        # 2,4 | 3,5 | 6,7 renumérotés
        assert simplicity_report(M).parallel_classes == ((1, 3), (2, 4), (5, 6))

    def test_m1_m2_not_isomorphic(self):
        """Test de M1 et M2 (5 et 6 droites) non isomorphes."""
        assert is_isomorphic(M1_37, M2_37) is None

    def test_two_component_matroid(self):
        """Test des composantes de {{1,3},{2,3}}."""
        M = validate([(1, 3), (2, 3)], 3, 2)
        assert components(M) == [(1, 2), (3,)]

    def test_edge_matroid_is_face(self):
        """Test de M'_124 comme face x_3567 = 1 de M_124."""
        M = create_m_ijk(1, 2, 4)
        assert face_matroid(M, (3, 5, 6, 7)) == create_mprime_ijk(1, 2, 4)
        assert face_matroid(M, (1, 2, 4)).sorted_bases == [(1, 2, 4)]
