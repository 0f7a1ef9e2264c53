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

from metriclie.algebra.equivar import EquivStructure
from metriclie.algebra.liealg import LieAlgebra
from metriclie.applications import extrinsic
from metriclie.catalog import basic
from metriclie.catalog import extrinsic as extrinsic_catalog
from metriclie.cohomology.qcohom import OrthogonalModule, QuadCocycle
from metriclie.exceptions import algebra_exceptions, catalog_exceptions
from metriclie.extensions.quadext import standard_model
from metriclie.utils.exactlin import SymForm

simple_cases = [(case, n, c) for case in ('sl2', 'su2') for n in (1, 2)
                for c in (0, 1)]

ROTATION = Matrix([[0, -1], [1, 0]])


def flat_plane():
    """ l = R^2 with a rotation D and a reflection theta, a = 0 """
    L = LieAlgebra.abelian(2)
    phi_l = EquivStructure.extrinsic(ROTATION, diag(1, -1))
    empty = EquivStructure.extrinsic(zeros(0, 0), zeros(0, 0))
    module = basic.module_sum(L, [], empty)
    return QuadCocycle.zero(module), phi_l


class TestCatalog:

    @pytest.mark.parametrize('case, n, c', simple_cases)
    def test_entry(self, case, n, c):
        entry = extrinsic_catalog.extrinsic_simple(case, n, c)
        assert entry.g.dim == 6 + 3 * n
        assert basic.verify_entry(entry)
        assert entry.phi.preset == 'extrinsic_RZ2'
        xi = entry.extras['xi']
        assert entry.g.alg.ad(xi) == entry.phi.derivations['D']
        assert entry.theta * xi == -xi

    def test_name(self):
        entry = extrinsic_catalog.extrinsic_simple('su2', 2, '1/2')
        assert entry.name == 'extrinsic(su2, 2, 1/2)'
        assert entry.params['n'] == 2

    def test_grading(self):
        L, phi = extrinsic_catalog.extrinsic_grading('sl2')
        assert L == basic.sl2()
        assert phi.theta == diag(1, -1, -1)
        assert phi.derivations['D'] ** 3 == -phi.derivations['D']

    @pytest.mark.parametrize('case, n, c', [('so3', 1, 0), ('sl2', 0, 0),
                                            ('sl2', True, 0),
                                            ('su2', 1, 'c')])
    def test_invalid(self, case, n, c):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            extrinsic_catalog.extrinsic_simple(case, n, c)


class TestCheckExtrinsic:

    @pytest.mark.parametrize('case, n, c', simple_cases)
    def test_catalog_triples(self, case, n, c):
        """ the catalog triples are full extrinsic symmetric triples """
        t = extrinsic.triple_from_entry(
            extrinsic_catalog.extrinsic_simple(case, n, c))
        report = extrinsic.check_extrinsic(t)
        assert report.holds
        assert list(report.checks) == ['skew', 'cube', 'inner', 'proper',
                                       'plus proper']
        assert t.g.alg.ad(report.xi) == t.D
        assert extrinsic.check_fullness(t)

    def test_recomputed_xi(self):
        entry = extrinsic_catalog.extrinsic_simple('sl2')
        t = extrinsic.triple_from_entry(entry)._replace(xi=None)
        xi = extrinsic.inner_xi(t)
        assert entry.g.alg.ad(xi) == t.D
        assert entry.theta * xi == -xi

    def test_outer(self):
        z, phi_l = flat_plane()
        w = standard_model(z, phi_l)
        t = extrinsic.ExtrinsicTriple(w.g, w.phi.derivations['D'],
                                      w.phi.theta)
        report = extrinsic.check_extrinsic(t)
        assert not report
        assert report.xi is None
        assert report.checks['skew'] and report.checks['cube']
        assert report.checks['inner'].violation == 'D is outer'
        assert not report.checks['proper']
        assert extrinsic.complex_grading_is_proper(t)

    def test_not_anticommuting(self):
        t = extrinsic.triple_from_entry(
            extrinsic_catalog.extrinsic_simple('sl2'))
        with pytest.raises(algebra_exceptions.GradingRelationError):
            extrinsic.check_extrinsic(t._replace(theta=eye(t.g.dim)))
        with pytest.raises(algebra_exceptions.NotInvolutionError):
            extrinsic.check_extrinsic(t._replace(theta=2 * eye(t.g.dim)))


class TestInnerness:

    @pytest.mark.parametrize('case, n, c', simple_cases)
    def test_catalog(self, case, n, c):
        entry = extrinsic_catalog.extrinsic_simple(case, n, c)
        decision = extrinsic.check_O4(entry.extras['cocycle'],
                                      entry.witness.phi_l)
        assert decision.is_yes
        witness = decision.witness
        assert witness.z.rows == 3
        assert witness.a.rows == 3 * n
        assert witness.l.rows == 3

    def test_outer(self):
        z, phi_l = flat_plane()
        decision = extrinsic.check_O4(z, phi_l)
        assert decision.is_no
        assert decision.reason == 'the derivation is not inner on g_-'

    def test_no_structure(self):
        """ neither l nor a carries a derivation D """
        module = OrthogonalModule.trivial(LieAlgebra.abelian(2),
                                          SymForm.zero(0))
        with pytest.raises(algebra_exceptions.GradingRelationError):
            extrinsic.check_O4(QuadCocycle.zero(module),
                               EquivStructure.z2(diag(1, -1)))
