"""
Tests pour l'anneau de Plücker et les générateurs des cellules minces.
"""

import itertools
import random
from fractions import Fraction

import pytest

from tropical_app.algebra.plucker import (
    B_binomial,
    PlueckerContext,
    T_quadric,
    admissible_pairs,
    face_generator_check,
    four_point_quadrics,
    limit_ideal_generators,
    plucker_generator,
    plucker_initial_form,
    plucker_sign,
    reduce_by_matroid,
    thin_schubert_generators,
)
from tropical_app.algebra.polynomials import (
    format_polynomial,
    initial_form,
    normalize,
    parse_polynomial,
    same_up_to_scalar,
)
from tropical_app.core.data_models import WeightVector
from tropical_app.core.errors import BadIndex, DimensionMismatch, MalformedInput, ZeroPolynomial
from tropical_app.core.matroid import partition_matroid, relabel, uniform_matroid
from tropical_app.matroids.census import enumerate_matroids
from tropical_app.matroids.named_matroids import FANO, FANO_LINES, M1_37
from tropical_app.polytopes.polytope import facets
from tropical_app.polytopes.subdivision import regular_subdivision
from tropical_app.trees.phylo_tree import tree_from_splits
from tropical_app.trees.tree_space import enumerate_trees, tree_distance, vertex_split_matroid


@pytest.fixture
def ctx24():
    return PlueckerContext(2, 4)


class TestPlueckerContext:
    """Tests pour PlueckerContext."""

    def test_variables(self, ctx24):
        """Test des noms de variables en ordre lexicographique."""
        assert [str(g.as_expr()) for g in ctx24.ring.gens] == ["p12", "p13", "p14", "p23", "p24", "p34"]

    def test_unsorted_indices(self, ctx24):
        """Test du signe pour des indices non triés."""
        assert ctx24.p(2, 1) == -ctx24.p(1, 2)
        assert ctx24.p(1, 1) == ctx24.ring.zero

    def test_bad_indices(self, ctx24):
        """Test d'indices hors de [n] ou en mauvais nombre."""
        with pytest.raises(BadIndex):
            ctx24.p(1, 5)
        with pytest.raises(BadIndex):
            ctx24.p(1, 2, 3)

    def test_weights_dimension(self, ctx24):
        """Test d'un poids de mauvaises dimensions."""
        with pytest.raises(DimensionMismatch):
            ctx24.weights_of(WeightVector.zero(2, 5))


class TestPluckerSign:
    """Tests pour plucker_sign."""

    def test_values(self):
        """Test de la règle de signe."""
        assert plucker_sign(2, (1,), (2, 3, 4)) == -1
        assert plucker_sign(3, (1,), (2, 3, 4)) == 1
        assert plucker_sign(4, (1,), (2, 3, 4)) == -1

    def test_index_not_in_mu(self):
        """Test d'un indice hors de μ."""
        with pytest.raises(BadIndex):
            plucker_sign(1, (1,), (2, 3, 4))


class TestThinSchubertGenerators:
    """Tests pour les générateurs de I_M."""

    def test_uniform_two_four(self, ctx24):
        """Test de l'unique relation de Plücker de Gr(2,4)."""
        gens = thin_schubert_generators(uniform_matroid(2, 4))
        assert len(gens) == 1
        assert same_up_to_scalar(gens[0], T_quadric(ctx24, 1, 2, 3, 4))

    def test_single_generator(self, ctx24):
        """Test du générateur pour λ = 1, μ = 234."""
        g = plucker_generator(uniform_matroid(2, 4), (1,), (2, 3, 4), ctx24)
        assert g == -T_quadric(ctx24, 1, 2, 3, 4)

    def test_admissible_pairs_exclude_contained(self):
        """Test de l'exclusion des paires λ ⊂ μ."""
        pairs = admissible_pairs(uniform_matroid(2, 4))
        assert len(pairs) == 4
        assert all(not set(p.lam) <= set(p.mu) for p in pairs)

    def test_reduce_by_matroid(self, ctx24):
        """Test de red_M sur la quadrique T_1234."""
        M = partition_matroid([(1, 2), (3, 4)])
        assert reduce_by_matroid(T_quadric(ctx24, 1, 2, 3, 4), M, ctx24) == B_binomial(ctx24, 1, 2, 3, 4)

    def test_fano_generators_nonzero(self):
        """Test de la présence de générateurs pour le plan de Fano."""
        gens = thin_schubert_generators(FANO)
        assert gens
        assert all(g for g in gens)


class TestInitialForms:
    """Tests pour les formes initiales."""

    def test_quartet_initial_form(self, ctx24):
        """Test de in_w(T_1234) pour la métrique d'un quartet."""
        w = tree_distance(tree_from_splits(4, [frozenset({2, 3})]))
        form = plucker_initial_form(T_quadric(ctx24, 1, 2, 3, 4), w, ctx24)
        p = ctx24.p
        assert form == p(1, 2) * p(3, 4) - p(1, 3) * p(2, 4)

    def test_zero_weight(self, ctx24):
        """Test du poids nul : forme initiale égale au polynôme."""
        T = T_quadric(ctx24, 1, 2, 3, 4)
        assert plucker_initial_form(T, WeightVector.zero(2, 4), ctx24) == T

    def test_zero_polynomial(self, ctx24):
        """Test du polynôme nul."""
        with pytest.raises(ZeroPolynomial):
            initial_form(ctx24.ring.zero, [0] * 6)

    def test_four_point_quadrics(self):
        """Test du nombre de quadriques T_ijkl."""
        assert len(four_point_quadrics(PlueckerContext(2, 5))) == 5
        with pytest.raises(DimensionMismatch):
            four_point_quadrics(PlueckerContext(3, 6))

    def test_limit_ideal_of_split(self, ctx24):
        """Test de I_{M,w} pour la subdivision en deux pyramides."""
        S = regular_subdivision(uniform_matroid(2, 4), WeightVector.from_support(2, 4, [(1, 2)]))
        gens = limit_ideal_generators(S)
        assert len(gens) == 1
        assert same_up_to_scalar(gens[0], B_binomial(ctx24, 1, 2, 3, 4))


class TestPolynomialIO:
    """Tests de lecture et d'écriture des polynômes."""

    def test_parse_and_format(self, ctx24):
        """Test de la lecture avec puissance et signe unicode."""
        f = parse_polynomial(ctx24.ring, "p12*p34 − p13^2")
        assert f == ctx24.p(1, 2) * ctx24.p(3, 4) - ctx24.p(1, 3) ** 2
        assert format_polynomial(ctx24.ring.zero) == "0"

    def test_parse_garbage(self, ctx24):
        """Test d'une expression illisible."""
        with pytest.raises(MalformedInput):
            parse_polynomial(ctx24.ring, "p12 +* ")


class TestFaceGenerators:
    """Tests pour face_generator_check."""

    @pytest.mark.parametrize("line", FANO_LINES)
    def test_fano_lines(self, line):
        """Test des faces du plan de Fano le long de ses droites."""
        assert face_generator_check(FANO, line) == []

    def test_uniform_face(self):
        """Test d'une face de U(3,6)."""
        assert face_generator_check(uniform_matroid(3, 6), (1, 2)) == []

    @pytest.mark.slow
    def test_all_rank_three_six(self):
        """Test de toutes les facettes des matroïdes (3,[6])."""
        for M in enumerate_matroids(3, 6):
            for facet in facets(M):
                if facet.kind == "flat_bound":
                    assert face_generator_check(M, facet.subset) == []


def _splitting_vertices(T, quadruple):
    """Sommets internes séparant le quadruplet en au moins trois parties."""
    found = []
    for v in T.internal_vertices:
        parts = [block for block in T.leaf_partition(v) if set(block) & set(quadruple)]
        if len(parts) >= 3:
            found.append(v)
    return found


@pytest.mark.slow
class TestTreeInitialIdeals:
    """Tests des formes initiales des T_ijkl pour toutes les métriques d'arbres."""

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_initial_form_is_vertex_reduction(self, n):
        """Test de in_w T_ijkl = red_v T_ijkl pour chaque sommet séparant."""
        ctx = PlueckerContext(2, n)
        for T in enumerate_trees(n):
            w = tree_distance(T)
            for quadruple in itertools.combinations(range(1, n + 1), 4):
                quadric = T_quadric(ctx, *quadruple)
                form = plucker_initial_form(quadric, w, ctx)
                vertices = _splitting_vertices(T, quadruple)
                assert vertices, f"aucun sommet séparant {quadruple} dans {T}"
                for v in vertices:
                    reduced = reduce_by_matroid(quadric, vertex_split_matroid(T, v), ctx)
                    assert same_up_to_scalar(form, reduced), (str(T), quadruple, v)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_limit_ideal_matches_initial_forms(self, n):
        """Test de I_{0,w} = {in_w T_ijkl} à un scalaire près."""
        ctx = PlueckerContext(2, n)
        for T in enumerate_trees(n):
            w = tree_distance(T)
            S = regular_subdivision(uniform_matroid(2, n), w)
            expected = {normalize(plucker_initial_form(q, w, ctx)) for q in four_point_quadrics(ctx)}
            found = {normalize(g) for g in limit_ideal_generators(S)}
            assert found == expected, str(T)


def _random_polynomial(ctx, rng, terms=4, degree=3):
    f = ctx.ring.zero
    for _ in range(terms):
        term = ctx.ring.one * rng.choice([-3, -2, -1, 1, 2, 3])
        for _ in range(rng.randint(0, degree)):
            term *= rng.choice(ctx.ring.gens)
        f += term
    return f if f else ctx.ring.one


def _relabel_polynomial(f, sigma, ctx):
    """Image de f par p_λ ↦ p_σ(λ) (avec le signe du tri)."""
    image = ctx.ring.zero
    for monom, coeff in f.terms():
        term = ctx.ring.one * coeff
        for lam, e in zip(ctx.indices, monom):
            if e:
                term *= ctx.p(*(sigma[i - 1] for i in lam)) ** e
        image += term
    return image


class TestRingProperties:
    """Tests des propriétés algébriques de l'anneau de Plücker."""

    def test_initial_form_multiplicative(self, ctx24):
        """Test de in_w(fg) = in_w(f)·in_w(g)."""
        rng = random.Random(17)
        for _ in range(50):
            f = _random_polynomial(ctx24, rng)
            g = _random_polynomial(ctx24, rng)
            weights = [rng.randint(-3, 3) for _ in ctx24.ring.gens]
            assert initial_form(f * g, weights) == initial_form(f, weights) * initial_form(g, weights)

    def test_initial_form_shift(self):
        """Test de l'invariance des quadriques homogènes sous w + c."""
        rng = random.Random(19)
        ctx = PlueckerContext(3, 7)
        quadrics = thin_schubert_generators(FANO, ctx)
        for _ in range(10):
            w = WeightVector.from_list(3, 7, [rng.randint(-4, 4) for _ in ctx.indices])
            shifted = w.shift(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
            for q in quadrics:
                assert plucker_initial_form(q, w, ctx) == plucker_initial_form(q, shifted, ctx)

    def test_product_rule(self, ctx24):
        """Test de ∂(fg) = f·∂g + g·∂f."""
        rng = random.Random(23)
        for _ in range(30):
            f = _random_polynomial(ctx24, rng)
            g = _random_polynomial(ctx24, rng)
            x = rng.choice(ctx24.ring.gens)
            assert (f * g).diff(x) == f * g.diff(x) + g * f.diff(x)

    @pytest.mark.parametrize("sigma", [(2, 1, 3, 4, 5, 6, 7), (3, 5, 7, 1, 2, 4, 6), (7, 6, 5, 4, 3, 2, 1)])
    def test_generators_equivariant(self, sigma):
        """Test de thin_schubert_generators(σ·M) = σ·thin_schubert_generators(M)."""
        ctx = PlueckerContext(3, 7)
        for M in (FANO, M1_37):
            moved = thin_schubert_generators(relabel(M, sigma), ctx)
            image = [_relabel_polynomial(f, sigma, ctx) for f in thin_schubert_generators(M, ctx)]
            assert {normalize(f) for f in moved} == {normalize(f) for f in image}
