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

from sympy import Matrix, Rational, diag, eye

from metriclie.algebra import metric
from metriclie.catalog import basic, lorentzian
from metriclie.cohomology.cochain import Cochain
from metriclie.exceptions import catalog_exceptions
from metriclie.utils.subspace import Subspace

oscillators = [([1], 4), ([1, 2], 6), ([Rational(1, 2), 3, 3], 8)]

bad_lambdas = [[], [1, 0], ['x']]


class TestOscillator:

    @pytest.mark.parametrize('lam, dim', oscillators)
    def test_dimension(self, lam, dim):
        entry = lorentzian.osc(lam)
        assert entry.g.dim == dim
        assert tuple(entry.g.signature()) == (1, dim - 1, 0)
        assert basic.verify_entry(entry)
        assert entry.phi is None

    def test_name(self):
        assert lorentzian.osc([1, 2]).name == 'osc([1, 2])'

    @pytest.mark.parametrize('lam', bad_lambdas)
    def test_bad_parameters(self, lam):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            lorentzian.osc(lam)

    @pytest.mark.parametrize('lam, normal', [([-2, 4], (1, 2)),
                                             ([3, -3, 6], (1, 1, 2)),
                                             ([Rational(1, 3)], (1,))])
    def test_normalize(self, lam, normal):
        assert lorentzian.osc_normalize(lam) == normal

    @pytest.mark.parametrize('lam, dim', oscillators)
    def test_double_extension(self, lam, dim):
        assert lorentzian.osc_as_double_extension(lam) == \
            lorentzian.osc(lam).g

    def test_canonical_ideal(self):
        ideal = metric.canonical_isotropic_ideal(lorentzian.osc([1, 2]).g)
        assert ideal.ri == Subspace.coordinate(6, [0])
        assert ideal.quotient_abelian


class TestCahenWallach:

    @pytest.mark.parametrize('p, q, lam, mu, signature',
                             [(1, 0, [1], [], (2, 2, 0)),
                              (0, 1, [], [1], (1, 3, 0)),
                              (1, 1, [1], [2], (2, 4, 0))])
    def test_entry(self, p, q, lam, mu, signature):
        entry = lorentzian.cahen_wallach(p, q, lam, mu)
        assert entry.g.dim == 2 * p + 2 * q + 2
        assert tuple(entry.g.signature()) == signature
        assert basic.verify_entry(entry)
        assert entry.phi.preset == 'z2'

    @pytest.mark.parametrize('p, q, lam, mu', [(1, 0, [1], []),
                                               (0, 2, [], [1, 2]),
                                               (2, 1, [1, 3], [2])])
    def test_triple_signature(self, p, q, lam, mu):
        """ g_- is Lorentzian of dimension p + q + 2 """
        entry = lorentzian.cahen_wallach(p, q, lam, mu)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            (1, p + q + 1, 0)

    def test_theta(self):
        entry = lorentzian.cahen_wallach(0, 1, [], [1])
        assert entry.theta == diag(-1, 1, -1, -1)
        assert basic.holonomy_is_abelian(entry)
        assert basic.nilindex_profile(entry) == (None, 1, 1)

    @pytest.mark.parametrize('p, q, lam, mu', [(0, 0, [], []),
                                               (1, 0, [], []),
                                               (-1, 2, [], [1, 1]),
                                               (0, 1, [], [1, 2])])
    def test_bad_parameters(self, p, q, lam, mu):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            lorentzian.cw_params(p, q, lam, mu)

    def test_normalize(self):
        assert lorentzian.cw_normalize(1, 1, [-2], [4]) == ((1,), (2,))
        assert lorentzian.cw_normalize(0, 2, [], [3, -6]) == ((), (1, 2))
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            lorentzian.cw_normalize(1, 1, [0], [1])


class TestGroupLaw:

    def test_metric(self):
        params = lorentzian.cw_params(1, 1, [1], [2])
        form = lorentzian.cw_metric_at(params, [0, 3, 5, 0])
        assert form.matrix == Matrix([[0, 0, 0, 1],
                                      [0, 1, 0, 0],
                                      [0, 0, 1, 0],
                                      [1, 0, 0, -91]])

    def test_metric_point(self):
        params = lorentzian.cw_params(1, 0, [1])
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            lorentzian.cw_metric_at(params, [0, 1])

    def test_unit(self):
        params = lorentzian.cw_params(1, 1, [1], [2])
        x = [1, 2, Rational(1, 2), -1, 3, 5]
        assert lorentzian.cw_multiply(params, x, [0] * 6) == Matrix(x)

    def test_translations(self):
        """ elements with L = 0 multiply through the Heisenberg law """
        params = lorentzian.cw_params(0, 1, [], [1])
        product = lorentzian.cw_multiply(params, [0, 1, 0, 0],
                                         [0, 0, 1, 0])
        # [A1, A2] = <rho(L) A1, A2> Z_L = 1
        assert product == Matrix([Rational(1, 2), 1, 1, 0])

    @pytest.mark.parametrize('p, q, lam, mu', [(1, 0, [1], []),
                                               (0, 1, [], [2])])
    def test_associative(self, p, q, lam, mu):
        params = lorentzian.cw_params(p, q, lam, mu)
        x = [1, 2, -1, 1]
        y = [0, Rational(1, 2), 3, 2]
        w = [-1, 1, 1, Rational(-1, 3)]
        assert lorentzian.cw_is_associative(params, x, y, w)

    def test_symbolic(self):
        params = lorentzian.cw_params(1, 0, [1])
        assert lorentzian.cw_symbolic_associativity(params)

    def test_size(self):
        params = lorentzian.cw_params(1, 0, [1])
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            lorentzian.cw_multiply(params, [0, 0, 0], [0, 0, 0, 0])


class TestIndex2:

    def test_entry(self):
        entry = lorentzian.index2_h1([(1, 0)])
        assert entry.g.dim == 9
        assert entry.name == 'index2_h1([(1, 0)], [], 1)'
        assert tuple(entry.g.signature()) == (4, 5, 0)
        assert basic.verify_entry(entry)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            (2, 4, 0)

    def test_variant(self):
        entry = lorentzian.index2_h1([(1, 0)], [(0, 1)], 2)
        assert entry.extras['module'].dim == 6
        assert entry.g.dim == 12
        assert basic.verify_entry(entry)

    def test_cocycle_space(self):
        module = lorentzian.index2_h1_module([(1, 0)])
        space = lorentzian.index2_h1_cocycle_space(module)
        assert len(space) == 2
        alpha = Cochain.from_dict(3, 2, 3, {(0, 1): [0, 0, 1]})
        assert not lorentzian.is_index2_h1_admissible(alpha, module)
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            lorentzian.index2_h1([(1, 0)], alpha=alpha)

    @pytest.mark.parametrize('lam, variant', [([(0, 0)], 1),
                                              ([(1, 0, 1)], 1),
                                              ([(1, 0)], 3)])
    def test_bad_parameters(self, lam, variant):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            lorentzian.index2_h1(lam, variant=variant)

    def test_automorphisms(self):
        automorphisms = lorentzian.h1_theta_automorphisms()
        assert len(automorphisms) == 4
        assert automorphisms[3] == diag(-1, 1, -1)
        h = basic.heisenberg()
        for k in automorphisms:
            assert k * h.bracket(0, 1) == h.bracket(k[:, 0], k[:, 1])
        assert eye(3) not in automorphisms
