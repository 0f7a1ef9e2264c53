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

from sympy import Matrix, Rational, diag, zeros

from metriclie.algebra.equivar import EquivStructure
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.catalog import basic, lorentzian
from metriclie.cohomology import balanced
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import OrthogonalModule, QuadCocycle
from metriclie.exceptions import algebra_exceptions, warning_formatting
from metriclie.utils.exactlin import SymForm
from metriclie.utils.settings import Settings
from metriclie.utils.subspace import Subspace

J = Matrix([[0, -1], [1, 0]])

# a nilpotent antisymmetric operator for the form with antidiagonal Gram
# matrix
nilpotent = Matrix([[0, 1, 0], [0, 0, -1], [0, 0, 0]])
antidiagonal = Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def trivial_line(L):
    return OrthogonalModule.trivial(L, SymForm.standard(0, 1))


def heisenberg_cocycle(form):
    """ alpha(Z, X) = a_1, alpha(Z, Y) = a_2 over h(1) """
    module = OrthogonalModule.trivial(basic.heisenberg(), form)
    alpha = Cochain.from_dict(3, 2, 2, {(2, 0): [1, 0], (2, 1): [0, 1]})
    return QuadCocycle(alpha, Cochain.zero(3, 3, scalar=True), module)


def rotation_cocycle():
    """
    h(1) with X rotating two planes of R^{0,6} at the same speed,
    alpha(Z, X) = a_5 and alpha(Z, Y) = a_6 in the trivial part
    """
    L = basic.heisenberg()
    module = OrthogonalModule(LieModule(L, [diag(J, J, zeros(2, 2)),
                                            zeros(6, 6), zeros(6, 6)]),
                              SymForm.standard(0, 6))
    alpha = Cochain.from_dict(3, 2, 6, {(2, 0): [0, 0, 0, 0, 1, 0],
                                        (2, 1): [0, 0, 0, 0, 0, 1]})
    return QuadCocycle(alpha, Cochain.zero(3, 3, scalar=True), module)


# a = R^{p,q} of the two lines and three planes over h(1)
heisenberg_forms = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 1)]


def random_heisenberg_terms(rng, vdim):
    """ rational values of alpha on X ^ Y, Z ^ X and Z ^ Y """
    terms = {}
    for pair in [(0, 1), (2, 0), (2, 1)]:
        numerators = rng.integers(-2, 3, size=vdim)
        denominators = rng.integers(1, 4, size=vdim)
        terms[pair] = [Rational(int(a), int(b))
                       for a, b in zip(numerators, denominators)]
    return terms


class TestIsBalanced:

    def test_oscillator(self):
        """ osc(1) is balanced and ri(osc) = l^* """
        z = lorentzian.osc([1]).extras['cocycle']
        report = balanced.is_balanced(z, cross_check=True)
        assert report.aggregate.is_yes
        assert bool(report)
        assert report.m == 0
        assert list(report.conditions) == ['A0', 'B0']
        assert report.cross_check is True

    def test_trivial_line(self):
        """ a central line acting trivially violates (A_0) """
        z = QuadCocycle.zero(trivial_line(LieAlgebra.abelian(1)))
        report = balanced.is_balanced(z, cross_check=True)
        assert report.aggregate.is_no
        decision = report.conditions['A0']
        assert decision.is_no
        assert decision.witness.L0 == Matrix([1])
        assert report.cross_check is False

    def test_heisenberg(self):
        """ alpha(Z, l) spanning the Euclidean plane is balanced """
        report = balanced.is_balanced(
            heisenberg_cocycle(SymForm.standard(0, 2)), cross_check=True)
        assert report.m == 1
        assert list(report.conditions) == ['A0', 'B0', 'A1', 'B1']
        assert all(d.is_yes for d in report.conditions.values())
        assert report.aggregate.is_yes
        assert report.cross_check is True

    def test_heisenberg_zero(self):
        z = QuadCocycle.zero(trivial_line(basic.heisenberg()))
        report = balanced.is_balanced(z)
        assert report.conditions['A0'].is_no
        assert report.aggregate.is_no
        assert report.cross_check is None

    def test_not_semisimple(self):
        """ no class over a non-semisimple module is balanced """
        module = OrthogonalModule(LieModule(LieAlgebra.abelian(1),
                                            [nilpotent]), antidiagonal)
        report = balanced.is_balanced(QuadCocycle.zero(module))
        assert report.aggregate.is_no
        assert len(report.conditions) == 0

    def test_unknown_condition_kept(self):
        """ an undecided (B_1) stays Unknown, the class follows ri """
        with pytest.warns(warning_formatting.UnknownDecisionWarning):
            report = balanced.is_balanced(rotation_cocycle())
        assert report.conditions['B1'].is_unknown
        assert report.aggregate.is_yes
        assert report.aggregate.reason == 'ri(d) = l*'
        assert report.cross_check is True

    def test_phi_l_unused(self):
        z = heisenberg_cocycle(SymForm.standard(0, 2))
        phi = EquivStructure.z2(diag(-1, -1, 1))
        with_phi = balanced.is_balanced(z, phi)
        without = balanced.is_balanced(z)
        assert with_phi.aggregate.kind == without.aggregate.kind
        assert [d.kind for d in with_phi.conditions.values()] == \
            [d.kind for d in without.conditions.values()]


class TestHeisenbergSweep:
    """ is_balanced against the normal form criterion over h(1) """

    @pytest.mark.parametrize('seed,signature',
                             list(enumerate(heisenberg_forms)))
    def test_random_classes(self, seed, signature):
        module = OrthogonalModule.trivial(basic.heisenberg(),
                                          SymForm.standard(*signature))
        vdim = module.dim
        rng = Settings.rng(seed)
        for _ in range(12):
            terms = random_heisenberg_terms(rng, vdim)
            alpha = Cochain.from_dict(3, 2, vdim, terms)
            normal = Cochain.from_dict(3, 2, vdim,
                                       {(2, 0): terms[(2, 0)],
                                        (2, 1): terms[(2, 1)]})
            z = QuadCocycle(alpha, Cochain.zero(3, 3, scalar=True), module)
            report = balanced.is_balanced(z)
            assert not report.aggregate.is_unknown
            assert report.aggregate.is_yes == \
                balanced.heisenberg_balanced_set_member(normal, module)

    @pytest.mark.parametrize('signature', heisenberg_forms)
    def test_zero(self, signature):
        module = OrthogonalModule.trivial(basic.heisenberg(),
                                          SymForm.standard(*signature))
        assert balanced.is_balanced(QuadCocycle.zero(module)).aggregate.is_no

    @pytest.mark.parametrize('terms,expected',
                             [({(2, 0): [1, 1]}, False),
                              ({(2, 0): [1, 1], (2, 1): [1, -1]}, True),
                              ({(0, 1): [1, 0]}, False),
                              ({(0, 1): [1, 0], (2, 1): [0, 1]}, True)])
    def test_lorentzian_plane(self, terms, expected):
        """ a null line alpha(Z, l) in R^{1,1} is not balanced """
        module = OrthogonalModule.trivial(basic.heisenberg(),
                                          SymForm.standard(1, 1))
        alpha = Cochain.from_dict(3, 2, 2, terms)
        z = QuadCocycle(alpha, Cochain.zero(3, 3, scalar=True), module)
        assert balanced.is_balanced(z).aggregate.is_yes is expected


class TestConditions:

    def test_B0(self):
        z = heisenberg_cocycle(SymForm.standard(0, 2))
        decision = balanced.check_B0(z.alpha, z.module)
        assert decision.is_yes
        assert decision.witness.dim == 2

    def test_B0_degenerate(self):
        """ an isotropic image fails (B_0) """
        module = OrthogonalModule.trivial(basic.heisenberg(),
                                          SymForm.hyperbolic(1))
        alpha = Cochain.from_dict(3, 2, 2, {(2, 0): [1, 0]})
        decision = balanced.check_B0(alpha, module)
        assert decision.is_no
        assert decision.witness == Subspace.coordinate(2, [0])

    def test_Ak_beyond_chain(self):
        z = heisenberg_cocycle(SymForm.standard(0, 2))
        assert balanced.check_Ak(z.alpha, z.gamma, z.module, 5).is_yes
        assert balanced.check_Bk(z.alpha, z.module, 5).witness.is_zero()

    def test_ri_criterion(self):
        assert balanced.ri_criterion(lorentzian.osc([2]).extras['cocycle'])
        assert not balanced.ri_criterion(
            QuadCocycle.zero(trivial_line(LieAlgebra.abelian(1))))


class TestAlphaSplit:

    def test_split(self):
        """ the trivial summand and the rotation plane """
        L = LieAlgebra.abelian(2)
        module = OrthogonalModule(LieModule(L, [diag(0, J), zeros(3, 3)]),
                                  SymForm.standard(0, 3))
        alpha = Cochain.from_dict(2, 2, 3, {(0, 1): [1, 1, 0]})
        split = balanced.alpha_split(alpha, module)
        assert split.alpha0.to_dict() == {(0, 1): [1, 0, 0]}
        assert split.alpha1.to_dict() == {(0, 1): [0, 1, 0]}

    def test_not_semisimple(self):
        module = OrthogonalModule(LieModule(LieAlgebra.abelian(1),
                                            [nilpotent]), antidiagonal)
        with pytest.raises(algebra_exceptions.ModuleNotSemisimpleError):
            balanced.alpha_split(Cochain.zero(1, 2, 3), module)


class TestHeisenbergNormalForm:

    @pytest.mark.parametrize('entries,form,expected',
                             [({(2, 0): [1, 0], (2, 1): [0, 1]},
                               SymForm.standard(0, 2), True),
                              ({(2, 0): [1, 0]}, SymForm.hyperbolic(1),
                               False),
                              ({(2, 0): [1, 0]}, SymForm.standard(1, 1),
                               True),
                              ({(0, 1): [1, 0], (2, 0): [0, 1]},
                               SymForm.standard(0, 2), False),
                              ({}, SymForm.standard(0, 2), False)])
    def test_member(self, entries, form, expected):
        module = OrthogonalModule.trivial(basic.heisenberg(), form)
        alpha = Cochain.from_dict(3, 2, 2, entries)
        assert balanced.heisenberg_balanced_set_member(alpha, module) is \
            expected


class TestAdmissible:

    def test_oscillator(self):
        """ theta = -1 on the line of osc(1) """
        z = lorentzian.osc([1]).extras['cocycle']
        assert balanced.admissible(z, Matrix([[-1]])).is_yes

    def test_T1(self):
        z = QuadCocycle.zero(trivial_line(LieAlgebra.abelian(2)))
        decision = balanced.admissible(z, diag(1, -1))
        assert decision.is_no
        assert decision.reason.startswith('(T_1)')

    def test_T2(self):
        """ a^l_+ = a is not reached by alpha_0 = 0 """
        z = QuadCocycle.zero(trivial_line(LieAlgebra.abelian(1)))
        decision = balanced.admissible(z, Matrix([[-1]]))
        assert decision.is_no
        assert decision.reason == '(T_2) fails'
