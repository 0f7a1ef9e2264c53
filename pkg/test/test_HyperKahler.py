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

from sympy import Matrix, Rational, diag, eye, zeros

from metriclie.algebra import metric
from metriclie.algebra.liealg import LieAlgebra
from metriclie.catalog import basic, hyperkahler
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import OrthogonalModule
from metriclie.exceptions import catalog_exceptions, cochain_exceptions
from metriclie.utils.subspace import Subspace

# lambda, complex dimension of h_S
quartic_lambdas = [(1, 3), (2, 3), (0, 2), (6, 2)]


class TestQuartics:

    def test_monomials(self):
        assert hyperkahler.monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
        assert len(hyperkahler.monomials(4, 3)) == 20

    def test_tensor(self):
        T = hyperkahler.quartic_tensor(hyperkahler.s_lambda(3), 2)
        assert T[(0, 0, 0, 0)] == 1
        assert T[(0, 1, 0, 1)] == T[(0, 0, 1, 1)] == Rational(1, 2)
        assert len(T) == 8

    @pytest.mark.parametrize('S', [{(3, 0): 1}, {(4, 0, 0): 1},
                                   {('a', 4): 1}, {(5, -1): 1}])
    def test_bad_quartic(self, S):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            hyperkahler.quartic(S, 2)

    def test_gaussian(self):
        S = hyperkahler.quartic({(4, 0): '1/2', (0, 4): 0}, 2)
        assert S == {(4, 0): Rational(1, 2)}

    def test_tau_invariance(self):
        assert hyperkahler.is_tau_invariant(hyperkahler.s_lambda(5), 1)
        assert not hyperkahler.is_tau_invariant({(3, 1): 1}, 1)

    def test_j_matrix(self):
        """ J is antilinear with J^2 = -1 """
        J = hyperkahler.j_matrix(2, 1)
        C = hyperkahler.complex_unit(2)
        assert J * J == -eye(4)
        assert J * C == -C * J
        assert hyperkahler.j_matrix(2, 2).shape == (6, 6)


class TestHolonomy:

    @pytest.mark.parametrize('lam, dim', quartic_lambdas)
    def test_span(self, lam, dim):
        S = hyperkahler.s_lambda(lam, 4)
        assert len(hyperkahler.hs_span(S, 2)) == dim
        assert hyperkahler.check_quartic_invariance(S, 2)
        assert hyperkahler.hs_is_abelian(S, 2)

    def test_tame(self):
        S = hyperkahler.s_lambda(1, 4)
        plus = eye(4)[:, :2]
        assert hyperkahler.is_tame_witness(S, 2, plus)
        assert not hyperkahler.is_tame_witness(S, 2, eye(4)[:, 2:])
        check = hyperkahler.is_tame_witness(S, 2, Matrix.hstack(
            eye(4)[:, 0], eye(4)[:, 2]))
        assert check.violation == 'E_+ is not isotropic'

    def test_contraction(self):
        """ S_{v,w} lies in sp(E, omega) """
        S = hyperkahler.s_lambda(1, 4)
        T = hyperkahler.quartic_tensor(S, 4)
        Omega = hyperkahler.standard_omega(2)
        A = hyperkahler.contraction(T, eye(4)[:, 2], eye(4)[:, 3], 2)
        assert not A.is_zero_matrix
        assert (A.T * Omega + Omega * A).is_zero_matrix

    def test_quotient(self):
        quotient = hyperkahler.nondegenerate_quotient(Subspace.whole(3),
                                                      diag(1, 0, -1))
        assert tuple(quotient.form.signature()) == (1, 1, 0)
        assert quotient.project(Matrix([0, 1, 0])) == zeros(2, 1)


class TestGS:

    @pytest.mark.parametrize('lam, dim', quartic_lambdas)
    def test_split(self, lam, dim):
        entry = hyperkahler.build_gJS(hyperkahler.s_lambda(lam, 4), 2)
        assert entry.extras['hs_dim'] == dim
        assert entry.g.dim == dim + 8
        assert basic.verify_entry(entry)
        assert entry.phi.preset == 'para_quaternionic'

    @pytest.mark.parametrize('lam, dim', quartic_lambdas[:2])
    def test_quaternionic(self, lam, dim):
        entry = hyperkahler.build_gJS(hyperkahler.s_lambda(lam, 4), 2,
                                      quaternionic=True)
        assert entry.g.dim == dim + 8
        assert basic.verify_entry(entry)
        assert entry.phi.preset == 'quaternionic'

    def test_odd_m(self):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            hyperkahler.build_gJS(hyperkahler.s_lambda(1), 1,
                                  quaternionic=True)

    def test_complex_split(self):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            hyperkahler.build_gJS({(4, 0): 'I'}, 1)


class TestAbelianHolonomy:

    @pytest.mark.parametrize('lam, dim', [(1, 11), (2, 11), (0, 10),
                                          (6, 10)])
    def test_dimension(self, lam, dim):
        entry = hyperkahler.hk_abelian_holonomy(1, hyperkahler.s_lambda(lam))
        assert entry.g.dim == dim
        assert basic.verify_entry(entry)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            (4, 4, 0)

    def test_nilindex(self):
        entry = hyperkahler.hk_abelian_holonomy()
        assert basic.nilindex_profile(entry) == (3, 1, 1)
        assert entry.name == 'hk_abelian(1)'

    def test_twin(self):
        entry = hyperkahler.hk_abelian_holonomy(hypersymplectic=True)
        assert entry.g.dim == 11
        assert entry.phi.preset == 'para_quaternionic'
        assert basic.verify_entry(entry)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            (4, 4, 0)

    @pytest.mark.parametrize('n, S, twin', [(0, None, False),
                                            (1, {(3, 1): 1}, False),
                                            (1, {(4, 0): 'I'}, True)])
    def test_invalid(self, n, S, twin):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            hyperkahler.hk_abelian_holonomy(n, S, twin)


class TestNonabelianHolonomy:

    @pytest.mark.parametrize('p, signature', [(0, (4, 12, 0)),
                                              (1, (12, 4, 0))])
    def test_entry(self, p, signature):
        entry = hyperkahler.hk_nonabelian_holonomy(1, p)
        assert entry.witness.l.dim == 7
        assert entry.witness.module.dim == 8
        assert entry.g.dim == 22
        assert basic.verify_entry(entry)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            signature

    def test_nilindex(self):
        entry = hyperkahler.hk_nonabelian_holonomy(1, 0)
        assert basic.nilindex_profile(entry) == (5, 2, 2)
        assert entry.params == {'n': 1, 'p': 0}

    def test_twin(self):
        entry = hyperkahler.hk_nonabelian_holonomy(1, hypersymplectic=True)
        assert entry.g.dim == 22
        assert basic.verify_entry(entry)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            (8, 8, 0)
        assert entry.params == {'n': 1}

    def test_invalid(self):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            hyperkahler.hk_nonabelian_holonomy(1, 2)


class TestSolvePlusGamma:

    @staticmethod
    def module():
        L = LieAlgebra.abelian(4)
        return OrthogonalModule.trivial(L, Matrix([[1]]))

    def test_zero(self):
        module = self.module()
        alpha = Cochain.from_dict(4, 2, 1, {(0, 1): [1]})
        gamma = hyperkahler.solve_plus_gamma(alpha, module, [])
        assert gamma.is_zero()

    @pytest.mark.parametrize('indices', [[], range(4)])
    def test_not_exact(self, indices):
        """ on abelian l every 3-form is closed and d vanishes """
        module = self.module()
        alpha = Cochain.from_dict(4, 2, 1, {(0, 1): [1], (2, 3): [1]})
        with pytest.raises(cochain_exceptions.QuadraticExtensionError):
            hyperkahler.solve_plus_gamma(alpha, module, indices)
