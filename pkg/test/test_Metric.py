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

from sympy import Matrix, diag, eye

from metriclie.algebra import liealg, metric
from metriclie.algebra.liealg import LieAlgebra
from metriclie.algebra.metric import MetricLieAlgebra
from metriclie.catalog import basic, lorentzian
from metriclie.exceptions import algebra_exceptions
from metriclie.utils.exactlin import SymForm
from metriclie.utils.subspace import Subspace


def killing_metric(build):
    L = build()
    return MetricLieAlgebra(L, liealg.killing_form(L))


def plane(form):
    return MetricLieAlgebra(LieAlgebra.abelian(2), form, 'R^2')


class TestMetricLieAlgebra:

    @pytest.mark.parametrize('build,signature', [(basic.sl2, (1, 2, 0)),
                                                 (basic.su2, (3, 0, 0))])
    def test_killing_metric(self, build, signature):
        g = killing_metric(build)
        assert metric.check_metric(g)
        assert tuple(g.signature()) == signature
        assert g.validate() is g

    def test_not_invariant(self):
        """ the identity form is not ad(H)-invariant on sl(2) """
        g = MetricLieAlgebra(basic.sl2(), eye(3))
        check = metric.check_metric(g)
        assert not check
        assert check.violation == ('H', 'X', 'Y')
        with pytest.raises(algebra_exceptions.NotMetricError):
            g.validate()

    def test_degenerate(self):
        g = MetricLieAlgebra(basic.heisenberg(), SymForm.zero(3))
        assert metric.check_metric(g).violation == 'degenerate'

    def test_dimension_mismatch(self):
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            MetricLieAlgebra(basic.sl2(), SymForm.hyperbolic(1))

    def test_direct_sum(self):
        """ repeated basis names are suffixed """
        g = killing_metric(basic.sl2).direct_sum(killing_metric(basic.su2))
        assert g.dim == 6
        assert g.basis_names[0] == 'H_1'
        assert tuple(g.signature()) == (4, 2, 0)
        assert metric.check_metric(g)

    def test_permuted(self):
        g = killing_metric(basic.sl2).permuted([1, 0, 2])
        assert g.basis_names == ('X', 'H', 'Y')
        assert g.gram == diag(-8, 8, 8)
        assert metric.check_metric(g)

    def test_metric_index(self):
        assert metric.metric_index(lorentzian.osc([1]).g) == 1


class TestIsotropy:

    def test_perp(self):
        g = plane(SymForm.hyperbolic(1))
        U = Subspace.coordinate(2, [0])
        assert metric.is_isotropic(g, U)
        assert metric.perp(g, U) == U
        assert metric.perp(g, Subspace.zero(2)).dim == 2

    def test_not_isotropic(self):
        g = plane(SymForm.standard(1, 1))
        assert not metric.is_isotropic(g, Subspace.coordinate(2, [1]))


class TestCanonicalIdeal:

    def test_oscillator(self):
        """ ri of the oscillator algebra is its center """
        g = lorentzian.osc([1]).g
        ideal = metric.canonical_isotropic_ideal(g)
        assert [R.dim for R in ideal.chain] == [4, 3, 1, 0]
        assert ideal.ri == Subspace.coordinate(4, [0])
        assert ideal.quotient_abelian
        assert ideal.invariant is None

    def test_semisimple(self):
        ideal = metric.canonical_isotropic_ideal(killing_metric(basic.sl2))
        assert ideal.ri.is_zero()
        assert not ideal.quotient_abelian

    def test_abelian(self):
        ideal = metric.canonical_isotropic_ideal(plane(SymForm.standard(0, 2)))
        assert ideal.ri.is_zero()
        assert ideal.quotient_abelian


class TestDecompose:

    def test_sum_of_simple(self):
        g = killing_metric(basic.sl2).direct_sum(killing_metric(basic.su2))
        decision = metric.decompose(g, seed=5)
        assert decision.is_yes
        splitting = decision.witness
        assert {splitting.first.dim, splitting.second.dim} == {3}
        assert splitting.projector * splitting.projector == \
            splitting.projector

    def test_euclidean_plane(self):
        decision = metric.decompose(plane(SymForm.standard(0, 2)))
        assert decision.is_yes
        assert decision.witness.first.dim == 1

    def test_simple(self):
        """ the symmetric centroid of sl(2) is the scalars """
        g = killing_metric(basic.sl2)
        assert len(metric.symmetric_centroid(g)) == 1
        assert metric.decompose(g).is_no

    def test_oscillator(self):
        assert not metric.decompose(lorentzian.osc([1]).g).is_yes


class TestTripleSignature:

    def test_signature(self):
        g = killing_metric(basic.sl2)
        assert tuple(metric.triple_signature(g, diag(1, -1, -1))) == (1, 1, 0)
        assert tuple(metric.triple_signature(g, diag(1, 1, -1))) == (0, 1, 0)

    def test_not_involution(self):
        with pytest.raises(algebra_exceptions.NotInvolutionError):
            metric.triple_signature(killing_metric(basic.sl2),
                                    diag(2, 1, 1))

    def test_not_isometry(self):
        swap = Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        with pytest.raises(algebra_exceptions.NotIsometryError):
            metric.triple_signature(killing_metric(basic.sl2), swap)


def test_fingerprint():
    f = metric.fingerprint(killing_metric(basic.sl2))
    assert f.dim == 3
    assert f.signature == (1, 2)
    assert f.derived_dims == (3,)
    assert f.lower_central_dims == (3,)
    assert f.center_dim == 0
    assert f.nilindex is None
    assert f.centroid_dim == 1
    assert f.radical_chain_dims == (3, 0)
    assert f.ri_dim == 0
