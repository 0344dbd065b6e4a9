import itertools

import pytest

from pglrep.classify import invariant_classes
from pglrep.construct import (
    BadDimension,
    PairKind,
    PairSpec,
    build_representation,
    catalogue_matrix,
    pair_for,
)
from pglrep.linalg import OrthComponent, RatMatrix, commutator, component
from pglrep.surfrep import InvalidClass, InvariantClass, Mu2Value, invariants

SO = OrthComponent.SO
OM = OrthComponent.O_MINUS


class TestCatalogueMatrix:
    def test_x4_block_structure(self):
        x2 = RatMatrix([[0, 1], [1, 0]])
        assert catalogue_matrix("X", 4) == RatMatrix.block_diag(x2, x2)

    def test_z4_block_structure(self):
        z2 = RatMatrix([[0, -1], [1, 0]])
        xp2 = RatMatrix([[1, 0], [0, -1]])
        assert catalogue_matrix("Z", 4) == RatMatrix.block_diag(z2, xp2)

    def test_y6_pads_with_identity(self):
        y2 = RatMatrix([[1, 0], [0, -1]])
        assert catalogue_matrix("Y", 6) == RatMatrix.block_diag(y2, RatMatrix.identity(4))

    def test_odd_dimension_rejected(self):
        with pytest.raises(BadDimension):
            catalogue_matrix("X", 5)

    def test_w_needs_four(self):
        with pytest.raises(BadDimension):
            catalogue_matrix("W", 2)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            catalogue_matrix("Q", 4)


def test_catalogue_component_facts():
    for n in range(4, 13, 2):
        mod0 = n % 4 == 0
        assert (component(catalogue_matrix("X", n)) == SO) == mod0
        assert (component(catalogue_matrix("X'", n)) == SO) == mod0
        assert component(catalogue_matrix("Y", n)) == OM
        assert component(catalogue_matrix("Y'", n)) == OM
        assert (component(catalogue_matrix("Z", n)) == OM) == mod0
        assert (component(catalogue_matrix("W", n)) == SO) == (not mod0)
        assert (component(catalogue_matrix("W'", n)) == SO) == (not mod0)


def test_catalogue_commutation_facts():
    for n in range(4, 13, 2):
        i_n = RatMatrix.identity(n)
        assert commutator(catalogue_matrix("X", n), catalogue_matrix("X'", n)) == -i_n
        assert commutator(catalogue_matrix("Y", n), catalogue_matrix("Y'", n)) == i_n
        assert commutator(catalogue_matrix("Z", n), catalogue_matrix("X", n)) == -i_n
        assert commutator(catalogue_matrix("W", n), catalogue_matrix("W'", n)) == -i_n


class TestPairFor:
    def test_commuting_mixed_pair_uses_identity(self):
        for n in (4, 6, 8):
            a, b = pair_for(PairSpec(PairKind.COMMUTING, (SO, OM)), n)
            assert a == RatMatrix.identity(n)
            assert b == catalogue_matrix("Y", n)

    def test_anticommuting_rotations_mod0(self):
        a, b = pair_for(PairSpec(PairKind.ANTICOMMUTING, (SO, SO)), 4)
        assert (a, b) == (catalogue_matrix("X", 4), catalogue_matrix("X'", 4))

    def test_anticommuting_reflections_mod2(self):
        a, b = pair_for(PairSpec(PairKind.ANTICOMMUTING, (OM, OM)), 6)
        assert (a, b) == (catalogue_matrix("X", 6), catalogue_matrix("X'", 6))

    def test_every_pair_has_requested_components_and_sign(self):
        for n in (4, 6):
            for kind in PairKind:
                for comps in itertools.product((SO, OM), repeat=2):
                    a, b = pair_for(PairSpec(kind, comps), n)
                    assert (component(a), component(b)) == comps
                    expected = RatMatrix.identity(n)
                    if kind == PairKind.ANTICOMMUTING:
                        expected = -expected
                    assert commutator(a, b) == expected

    def test_dimension_checked(self):
        with pytest.raises(BadDimension):
            pair_for(PairSpec(PairKind.COMMUTING, (SO, SO)), 2)


class TestBuildRepresentation:
    def test_trivial_class(self):
        rep = build_representation(2, 4, InvariantClass((0, 0, 0, 0), Mu2Value.ZERO))
        assert all(m == RatMatrix.identity(4) for m in rep.gens)

    def test_reflection_anticommuting_class_uses_w_pair(self):
        target = InvariantClass((1, 1, 0, 0), Mu2Value.OMEGA)
        rep = build_representation(2, 4, target)
        assert rep.gens[0] == catalogue_matrix("W", 4)
        assert rep.gens[1] == catalogue_matrix("W'", 4)
        assert rep.gens[2] == RatMatrix.identity(4)

    def test_commuting_reflection_class_uses_y_pair(self):
        target = InvariantClass((1, 1, 0, 0), Mu2Value.ZERO)
        rep = build_representation(2, 4, target)
        assert rep.gens[0] == catalogue_matrix("Y", 4)
        assert rep.gens[1] == catalogue_matrix("Y'", 4)

    def test_spin_obstructed_class(self):
        target = InvariantClass((0, 0, 0, 0), Mu2Value.ONE)
        rep = build_representation(2, 4, target)
        assert invariants(rep) == target
        assert rep.gens[0] == RatMatrix.diagonal([-1, -1, 1, 1])
        assert rep.gens[1] == RatMatrix.diagonal([-1, 1, -1, 1])

    def test_wrong_mu1_length(self):
        with pytest.raises(InvalidClass):
            build_representation(3, 4, InvariantClass((0, 0, 0, 0), Mu2Value.ZERO))

    @pytest.mark.parametrize("g,n", [(2, 4), (2, 6), (3, 4), (3, 6)])
    def test_exhaustive_round_trip(self, g, n):
        for target in invariant_classes(g, n):
            rep = build_representation(g, n, target)
            assert invariants(rep) == target
