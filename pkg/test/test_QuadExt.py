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

from metriclie.algebra import liealg, metric
from metriclie.algebra.equivar import EquivStructure
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.algebra.metric import MetricLieAlgebra
from metriclie.catalog import basic, lorentzian
from metriclie.cohomology import qcohom
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import (OrthogonalModule, QuadCochain,
                                         QuadCocycle)
from metriclie.exceptions import algebra_exceptions, cochain_exceptions
from metriclie.extensions import quadext
from metriclie.utils.exactlin import SymForm
from metriclie.utils.subspace import Subspace

J = Matrix([[0, -1], [1, 0]])


def heisenberg_translate():
    """ (0, 0) . (sigma^Z, 0) over h(1) with the trivial line """
    module = OrthogonalModule.trivial(basic.heisenberg(),
                                      SymForm.standard(0, 1))
    tau = Cochain.from_dict(3, 1, 1, {(2,): [1]})
    return qcohom.act(QuadCocycle.zero(module),
                      QuadCochain(tau, Cochain.zero(3, 2, scalar=True)))


class TestStandardModel:

    def test_oscillator(self):
        """ basis l^*, a, l and the form pairing l^* with l """
        w = lorentzian.osc([1]).witness
        assert w.g.dim == 4
        assert w.g.basis_names == ('Z_L', 'A1', 'A2', 'L')
        assert w.ri == Subspace.coordinate(4, [0])
        assert w.g.form_value(0, 3) == 1
        assert tuple(w.g.signature()) == (1, 3, 0)
        assert quadext.verify_quadratic_extension(w)

    def test_double_extension(self):
        """ osc(lambda) is the double extension of R^2 by a rotation """
        assert lorentzian.osc_as_double_extension([1, 2]) == \
            lorentzian.osc([1, 2]).g

    def test_brackets(self):
        w = quadext.standard_model(heisenberg_translate())
        g = w.g
        # [L_X, L_Y] = -1/2 Z_Z - A1 + L_Z
        assert g.alg.bracket(4, 5) == \
            Matrix([0, 0, Rational(-1, 2), -1, 0, 0, 1])
        assert metric.check_metric(g)
        assert len(w.p_map.tolist()) == 3

    def test_not_cocycle(self):
        L = LieAlgebra.abelian(3)
        module = OrthogonalModule(LieModule(L, [J, zeros(2, 2),
                                                zeros(2, 2)]),
                                  SymForm.standard(0, 2))
        alpha = Cochain.from_dict(3, 2, 2, {(1, 2): [1, 0]})
        z = QuadCocycle(alpha, Cochain.zero(3, 3, scalar=True), module)
        with pytest.raises(cochain_exceptions.NotCocycleError):
            quadext.standard_model(z)

    def test_equivariant(self):
        """ theta = -1 on l = R induces theta on the oscillator """
        z = lorentzian.osc([1]).extras['cocycle']
        phi_l = EquivStructure.z2(Matrix([[-1]]))
        module = OrthogonalModule(z.module.module, z.module.form,
                                  EquivStructure.z2(diag(1, -1)))
        w = quadext.standard_model(QuadCocycle(z.alpha, z.gamma, module),
                                   phi_l)
        assert w.phi.theta == diag(-1, 1, -1, -1)
        assert quadext.verify_quadratic_extension(w)


class TestDoubleExtension:

    def test_not_antisymmetric(self):
        flat = MetricLieAlgebra(LieAlgebra.abelian(2),
                                SymForm.standard(0, 2))
        with pytest.raises(algebra_exceptions.NotDerivationError):
            quadext.double_extension(flat, LieAlgebra.abelian(1),
                                     [diag(1, 0)])

    def test_pi_length(self):
        flat = MetricLieAlgebra(LieAlgebra.abelian(2),
                                SymForm.standard(0, 2))
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            quadext.double_extension(flat, LieAlgebra.abelian(2), [J])

    @pytest.mark.parametrize('build', [basic.heisenberg, basic.sl2,
                                       basic.g41])
    def test_cotangent(self, build):
        h = build()
        g = quadext.cotangent(h)
        assert g.dim == 2 * h.dim
        assert tuple(g.signature()) == (h.dim, h.dim, 0)
        assert metric.check_metric(g)
        assert liealg.is_ideal(g.alg, Subspace.coordinate(
            g.dim, range(h.dim)))


class TestSections:

    def test_isotropic_section(self):
        w = quadext.standard_model(heisenberg_translate())
        s = quadext.isotropic_section(w)
        assert quadext.validate_section(w, s)
        assert w.p_map * s == eye(3)

    def test_correction(self):
        """ a section with non-isotropic image is corrected along ri """
        w = quadext.standard_model(heisenberg_translate())
        s0 = Matrix.vstack(eye(3), zeros(1, 3), eye(3))
        s = quadext.isotropic_section(w, s0)
        assert s == Matrix.vstack(zeros(4, 3), eye(3))

    def test_bad_section(self):
        w = quadext.standard_model(heisenberg_translate())
        with pytest.raises(cochain_exceptions.SectionError):
            quadext.isotropic_section(w, zeros(7, 3))
        assert not quadext.validate_section(w, zeros(7, 2))


class TestExtraction:

    def test_round_trip(self):
        """ the standard section recovers the cocycle exactly """
        z = heisenberg_translate()
        w = quadext.standard_model(z)
        assert quadext.extract_cocycle(w, check_class=False) == z

    def test_class_check(self):
        z = heisenberg_translate()
        w = quadext.standard_model(z)
        extracted = quadext.extract_cocycle(w, seed=3)
        assert qcohom.equivalent(z, extracted).is_yes

    def test_canonical_oscillator(self):
        """ l = R and a = R^2 from osc(1) """
        w = quadext.canonical_extension(lorentzian.osc([1]).g)
        assert w.l.dim == 1
        assert w.module.dim == 2
        assert w.ri == Subspace.coordinate(4, [0])
        assert quadext.verify_quadratic_extension(w)
        z = quadext.extract_cocycle(w)
        assert qcohom.is_cocycle(z.alpha, z.gamma, w.module)

    def test_canonical_semisimple(self):
        g = MetricLieAlgebra(basic.sl2(), liealg.killing_form(basic.sl2()))
        with pytest.warns(UserWarning):
            with pytest.raises(cochain_exceptions.QuadraticExtensionError):
                quadext.canonical_extension(g)
