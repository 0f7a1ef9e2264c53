# Copyright (C) 2024 metricLie Working Group
# Author(s): metricLie developers
#
# Disclaimer:
# metricLie is under the LGPL v3 license found in the root directory LICENSE.md
# Everyone is permitted to copy and distribute verbatim copies of this license
# document, but changing it is not allowed.
#
# This version of the GNU Lesser General Public License incorporates the terms
# and conditions of version 3 of the GNU General Public License,
# supplemented by the additional permissions listed below.
#
# Modifications:
#

import pytest

from sympy import Matrix, diag, eye, zeros

from metriclie.algebra import equivar, liealg
from metriclie.algebra.equivar import (EquivStructure, GradingKind, Relation,
                                       RelationKind)
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.algebra.metric import MetricLieAlgebra
from metriclie.catalog import basic
from metriclie.exceptions import algebra_exceptions
from metriclie.utils.exactlin import SymForm
from metriclie.utils.subspace import Subspace

J = Matrix([[0, -1], [1, 0]])
cartan = diag(1, -1, -1)


def sl2_metric():
    L = basic.sl2()
    return MetricLieAlgebra(L, liealg.killing_form(L))


def rotation():
    """ ad(X)/2 rotates the (H, Y) plane of sl(2) """
    return basic.sl2().ad('X') / 2


def plane():
    return MetricLieAlgebra(LieAlgebra.abelian(2), SymForm.standard(0, 2))


class TestPresets:

    @pytest.mark.parametrize('label', ['z2', 'complex', 'para_complex',
                                       'quaternionic', 'para_quaternionic',
                                       'extrinsic_RZ2'])
    def test_labels(self, label):
        assert GradingKind.from_label(label).label == label

    def test_unknown_preset(self):
        with pytest.raises(algebra_exceptions.GradingRelationError):
            EquivStructure(2, preset='octonionic')

    def test_relation_text(self):
        assert str(Relation(RelationKind.CUBE, ('D',), -1)) == 'D^3 = -1 D'
        assert str(Relation(RelationKind.ANTICOMMUTE, ('D', 'theta'))) == \
            'Dtheta = -thetaD'
        assert RelationKind.from_label('bracket') is RelationKind.BRACKET
        with pytest.raises(algebra_exceptions.GradingRelationError):
            RelationKind.from_label('braid')

    def test_complex(self):
        """ theta = 1 + 2 D^2 is the rotation by pi """
        phi = EquivStructure.complex(rotation())
        assert phi.theta == diag(-1, 1, -1)
        assert equivar.validate_preset(phi)
        assert equivar.check_equivariant(sl2_metric(), phi)

    def test_para_complex(self):
        phi = EquivStructure.para_complex(basic.sl2().ad('H') / 2)
        assert phi.theta == cartan
        assert equivar.check_equivariant(sl2_metric(), phi)
        components = equivar.isotypic_split(phi)
        assert {k: U.dim for k, U in components.items()} == \
            {'trivial': 1, 'sigma': 1, 'sigma_dual': 1}

    def test_missing_generator(self):
        phi = EquivStructure(3, {'D': zeros(3, 3)}, preset='complex')
        check = equivar.validate_preset(phi)
        assert check.violation == 'missing generator theta'
        with pytest.raises(algebra_exceptions.GradingRelationError):
            equivar.isotypic_split(phi)

    def test_failed_relation(self):
        phi = EquivStructure(2, {'D': diag(1, 0)}, {'theta': eye(2)},
                             preset='complex')
        assert equivar.validate_preset(phi).violation == 'D^3 = -1 D'

    def test_no_preset(self):
        with pytest.raises(algebra_exceptions.GradingRelationError):
            equivar.isotypic_split(EquivStructure.trivial(2))
        assert equivar.validate_preset(EquivStructure.trivial(2))

    def test_generator_shape(self):
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            EquivStructure(2, {'D': zeros(3, 3)})

    def test_unknown_generator(self):
        with pytest.raises(algebra_exceptions.GradingRelationError):
            EquivStructure.trivial(2).matrix('theta')


class TestCheckEquivariant:

    def test_cartan_involution(self):
        phi = EquivStructure.z2(cartan)
        assert equivar.check_equivariant(sl2_metric(), phi)
        assert equivar.check_equivariant(basic.sl2(), phi)

    def test_not_automorphism(self):
        check = equivar.check_equivariant(sl2_metric(),
                                          EquivStructure.z2(diag(1, 1, -1)))
        assert check.violation == "theta is not an automorphism on "\
            "('H', 'X')"

    def test_not_antisymmetric(self):
        phi = EquivStructure(2, {'D': diag(1, 0)})
        assert equivar.check_equivariant(plane(), phi).violation == \
            'D is not antisymmetric'

    def test_not_invertible(self):
        phi = EquivStructure(2, {}, {'k': diag(1, 0)})
        assert equivar.check_equivariant(plane(), phi).violation == \
            'k is not invertible'

    def test_not_isometry(self):
        phi = EquivStructure(2, {}, {'k': diag(2, 1)})
        assert equivar.check_equivariant(plane(), phi).violation == \
            'k is not an isometry'

    def test_dimension(self):
        assert not equivar.check_equivariant(plane(),
                                             EquivStructure.trivial(3))

    def test_module_compatibility(self):
        """ theta = -1 on l needs theta anticommuting with rho on a """
        line = LieAlgebra.abelian(1)
        module = LieModule(line, [J])
        phi_l = EquivStructure.z2(Matrix([[-1]]))
        check = equivar.check_module_compatibility(
            module, phi_l, EquivStructure.z2(diag(1, -1)),
            SymForm.standard(0, 2))
        assert check
        check = equivar.check_module_compatibility(
            module, phi_l, EquivStructure.trivial(2))
        assert check.violation == 'theta on e0'


class TestSplits:

    def test_z2_split(self):
        split = equivar.z2_split(sl2_metric(), cartan)
        assert split.plus == Subspace.coordinate(3, [0])
        assert split.minus == Subspace.coordinate(3, [1, 2])
        assert split.proper
        assert equivar.check_symmetric_pair(basic.sl2(), cartan)

    def test_empty_plus(self):
        """ theta = -1 on an abelian plane leaves g_+ = 0 = [g_-, g_-] """
        split = equivar.z2_split(plane(), -eye(2))
        assert split.plus.is_zero()
        assert split.proper

    def test_not_involution(self):
        with pytest.raises(algebra_exceptions.NotInvolutionError):
            equivar.z2_split(plane(), J)

    def test_not_isometry(self):
        with pytest.raises(algebra_exceptions.NotIsometryError):
            equivar.z2_split(plane(), Matrix([[1, 1], [0, -1]]))

    def test_extrinsic_split(self):
        split = equivar.extrinsic_split(sl2_metric(), rotation(), cartan)
        assert split.plus == Subspace.coordinate(3, [1])
        assert split.minus == Subspace.coordinate(3, [0, 2])
        assert split.tau == diag(-1, 1, -1)
        dims = {key: U.dim for key, U in split.fourfold.items()}
        assert dims == {('+', '+'): 0, ('+', '-'): 1, ('-', '+'): 1,
                        ('-', '-'): 1}
        assert split.fourfold[('-', '+')] == Subspace.coordinate(3, [1])

    def test_extrinsic_cube(self):
        with pytest.raises(algebra_exceptions.GradingRelationError):
            equivar.extrinsic_split(sl2_metric(), diag(1, 0, 0))

    def test_extrinsic_structure(self):
        phi = EquivStructure.extrinsic(rotation(), cartan)
        assert equivar.check_equivariant(sl2_metric(), phi)
        assert phi.automorphisms['tau_D'] == diag(-1, 1, -1)
        assert equivar.isotypic_split(phi)['trivial'].dim == 1


class TestStructures:

    def test_direct_sum(self):
        """ missing generators act by zero and by the identity """
        phi = EquivStructure.complex(J).direct_sum(
            EquivStructure.z2(Matrix([[-1]])))
        assert phi.dim == 3
        assert phi.derivations['D'] == diag(J, 0)
        assert phi.theta == diag(-1, -1, -1)
        assert phi.preset is None

    def test_restrict(self):
        phi = EquivStructure.complex(rotation())
        restricted = phi.restrict(Subspace.coordinate(3, [0, 2]))
        assert restricted.dim == 2
        assert restricted.derivations['D'] == Matrix([[0, 1], [-1, 0]])
        assert equivar.validate_preset(restricted)

    def test_standard_model_structure(self):
        phi = equivar.standard_model_structure(
            EquivStructure.z2(diag(1, -1)), EquivStructure.trivial(1))
        assert phi.dim == 5
        assert phi.theta == diag(1, -1, 1, 1, -1)
        assert phi.preset == 'z2'

    def test_trivial(self):
        assert EquivStructure.trivial(2).is_trivial()
        assert not EquivStructure.complex(J).is_trivial()


class TestInvariantCochains:

    @pytest.mark.parametrize('theta,degree,expected',
                             [(diag(1, -1), 2, 0), (-eye(2), 2, 1),
                              (diag(1, -1), 1, 1), (eye(2), 1, 2)])
    def test_involution(self, theta, degree, expected):
        cochains = equivar.invariant_cochains(2, EquivStructure.z2(theta),
                                              degree, scalar=True)
        assert len(cochains) == expected

    @pytest.mark.parametrize('degree,expected', [(1, 0), (2, 1)])
    def test_rotation(self, degree, expected):
        """ the area form is the only rotation invariant """
        cochains = equivar.invariant_cochains(2, EquivStructure.complex(J),
                                              degree, scalar=True)
        assert len(cochains) == expected

    def test_trivial_structure(self):
        assert len(equivar.invariant_cochains(3, None, 2, vdim=2)) == 6
