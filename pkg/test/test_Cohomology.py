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

from metriclie.algebra import liealg
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.catalog import basic
from metriclie.cohomology import qcohom
from metriclie.cohomology.cochain import Cochain, sort_sign
from metriclie.cohomology.qcohom import (DecompositionPart, OrthogonalModule,
                                         QuadCochain, QuadCocycle)
from metriclie.exceptions import algebra_exceptions, cochain_exceptions
from metriclie.utils.exactlin import SymForm
from metriclie.utils.settings import Settings

J = Matrix([[0, -1], [1, 0]])

scalar_cohomology = [(basic.heisenberg, [1, 2, 2, 1]),
                     (basic.sl2, [1, 0, 0, 1]),
                     (lambda: basic.abelian(3), [1, 3, 3, 1])]


def line_module(L):
    """ the trivial module R with form 1 """
    return OrthogonalModule.trivial(L, SymForm.standard(0, 1))


def sigma_z():
    """ tau = sigma^Z (x) e on h(1) """
    return Cochain.from_dict(3, 1, 1, {(2,): [1]})


class TestCochain:

    @pytest.mark.parametrize('indices,expected', [((0, 1, 2), 1),
                                                  ((1, 0), -1),
                                                  ((2, 0, 1), 1),
                                                  ((2, 1, 0), -1),
                                                  ((1, 1), 0)])
    def test_sort_sign(self, indices, expected):
        assert sort_sign(indices)[0] == expected

    def test_alternating(self):
        c = Cochain.from_dict(3, 2, 1, {(1, 0): 5}, scalar=True)
        assert c.scalar_value((0, 1)) == -5
        assert c.scalar_value((1, 0)) == 5
        assert c.scalar_value((1, 1)) == 0
        assert c.to_dict() == {(0, 1): [-5]}

    def test_evaluate(self):
        """ sigma^{01} on R^2 is the determinant """
        c = Cochain.from_dict(2, 2, 1, {(0, 1): 1}, scalar=True)
        assert c.evaluate([1, 2], [3, 4]) == Matrix([-2])
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            c.evaluate([1, 2])

    def test_arithmetic(self):
        c = Cochain.from_dict(3, 1, 2, {(0,): [1, 2]})
        assert (c + c) == 2 * c
        assert (c - c).is_zero()
        assert (Rational(1, 2) * c).value((0,)) == Matrix([Rational(1, 2), 1])
        assert (-c).value((0,)) == Matrix([-1, -2])

    def test_incompatible(self):
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            Cochain.zero(3, 1, 2) + Cochain.zero(3, 2, 2)

    @pytest.mark.parametrize('entries', [{(0, 0): 1}, {(0, 3): 1},
                                         {(0,): 1}])
    def test_bad_indices(self, entries):
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            Cochain.from_dict(3, 2, 1, entries, scalar=True)

    def test_vector_coordinates(self):
        """ subset-major coordinates """
        c = Cochain.from_dict(3, 1, 2, {(1,): [3, 4]})
        assert list(c.to_vector()) == [0, 0, 3, 4, 0, 0]
        assert Cochain.from_vector(3, 1, 2, c.to_vector()) == c

    def test_size(self):
        assert Cochain.size(4, 2, 3) == 18


class TestDifferential:

    def test_heisenberg(self):
        """ d sigma^Z = -sigma^{XY} """
        c = Cochain.from_dict(3, 1, 1, {(2,): 1}, scalar=True)
        dc = qcohom.d(c, basic.heisenberg())
        assert dc.to_dict() == {(0, 1): [-1]}

    def test_square_zero(self):
        """ d o d = 0 with values in the adjoint module of sl(2) """
        module = LieModule.adjoint(basic.sl2())
        c = Cochain.from_dict(3, 1, 3, {(0,): [1, 2, 3], (2,): [0, 1, 0]})
        assert not qcohom.d(c, module).is_zero()
        assert qcohom.d(qcohom.d(c, module), module).is_zero()

    def test_wrong_algebra(self):
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            qcohom.d(Cochain.zero(2, 1, scalar=True), basic.heisenberg())

    @pytest.mark.parametrize('build,expected', scalar_cohomology)
    def test_cohomology_dimension(self, build, expected):
        L = build()
        assert [qcohom.cohomology_dimension(L, p, scalar=True)
                for p in range(4)] == expected


class TestWedge:

    def test_scalar(self):
        first = Cochain.from_dict(2, 1, 1, {(0,): 1}, scalar=True)
        second = Cochain.from_dict(2, 1, 1, {(1,): 1}, scalar=True)
        assert qcohom.wedge(first, second).scalar_value((0, 1)) == 1
        assert qcohom.wedge(second, first).scalar_value((0, 1)) == -1

    def test_needs_form(self):
        c = Cochain.zero(2, 1, 2)
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            qcohom.wedge(c, c)

    def test_form(self):
        first = Cochain.from_dict(2, 1, 2, {(0,): [1, 0]})
        second = Cochain.from_dict(2, 1, 2, {(1,): [0, 1]})
        assert qcohom.wedge(first, second,
                            SymForm.hyperbolic(1)).scalar_value((0, 1)) == 1
        assert qcohom.wedge(first, second,
                            SymForm.standard(1, 1)).is_zero()


class TestOrthogonalModule:

    def test_check(self):
        line = LieAlgebra.abelian(1)
        assert OrthogonalModule(LieModule(line, [J]),
                                SymForm.standard(0, 2)).check()
        check = OrthogonalModule(LieModule(line, [J]), diag(1, 2)).check()
        assert check.violation == 'rho(e0) is not antisymmetric'
        with pytest.raises(algebra_exceptions.NotMetricError):
            OrthogonalModule(LieModule(line, [J]), diag(1, 2)).validate()

    def test_invariant_projection(self):
        module = OrthogonalModule(LieModule(LieAlgebra.abelian(1),
                                            [diag(J, 0)]),
                                  SymForm.standard(0, 3))
        assert module.invariant_projection() == diag(0, 0, 1)

    def test_not_semisimple(self):
        N = Matrix([[0, 1], [0, 0]])
        module = OrthogonalModule(LieModule(LieAlgebra.abelian(1), [N]),
                                  SymForm.hyperbolic(1))
        with pytest.raises(algebra_exceptions.ModuleNotSemisimpleError):
            module.invariant_projection()

    def test_direct_sum(self):
        L = LieAlgebra.abelian(1)
        module = line_module(L).direct_sum(
            OrthogonalModule(LieModule(L, [J]), SymForm.standard(0, 2)))
        assert module.dim == 3
        assert module.equiv is None
        assert module.check()


class TestQuadCocycle:

    def test_shapes(self):
        module = line_module(basic.heisenberg())
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            QuadCocycle(Cochain.zero(3, 1, 1), Cochain.zero(3, 3, scalar=True),
                        module)
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            QuadCocycle(Cochain.zero(3, 2, 1), Cochain.zero(3, 3, 1), module)

    def test_is_cocycle(self):
        """ rho(e0) = J on R^2 does not close sigma^{12} (x) a_0 """
        L = LieAlgebra.abelian(3)
        module = OrthogonalModule(LieModule(L, [J, zeros(2, 2),
                                                zeros(2, 2)]),
                                  SymForm.standard(0, 2))
        alpha = Cochain.from_dict(3, 2, 2, {(1, 2): [1, 0]})
        gamma = Cochain.zero(3, 3, scalar=True)
        assert qcohom.is_cocycle(alpha, gamma, module).violation == \
            'd alpha != 0'
        z = QuadCocycle(alpha, gamma, module)
        with pytest.raises(cochain_exceptions.NotCocycleError):
            qcohom.act(z, QuadCochain.zero(3, 2))

    def test_act(self):
        """ (0, 0) . (sigma^Z, 0) = (-sigma^{XY}, -1/2 sigma^{XYZ}) """
        module = line_module(basic.heisenberg())
        z = qcohom.act(QuadCocycle.zero(module),
                       QuadCochain(sigma_z(), Cochain.zero(3, 2,
                                                           scalar=True)))
        assert z.alpha.to_dict() == {(0, 1): [-1]}
        assert z.gamma.scalar_value((0, 1, 2)) == Rational(-1, 2)
        assert qcohom.is_cocycle(z.alpha, z.gamma, module)

    def test_compose(self):
        module = line_module(basic.heisenberg())
        x = Cochain.from_dict(3, 1, 1, {(0,): [1]})
        c = qcohom.c1q_compose(QuadCochain(x, Cochain.zero(3, 2,
                                                           scalar=True)),
                               QuadCochain(sigma_z(),
                                           Cochain.zero(3, 2, scalar=True)),
                               module.form)
        assert c.tau.to_dict() == {(0,): [1], (2,): [1]}
        assert c.sigma.scalar_value((0, 2)) == Rational(1, 2)
        inverse = qcohom.c1q_inverse(c)
        assert (inverse.tau + c.tau).is_zero()


def random_cochain(rng, ldim, degree, vdim=1, scalar=False):
    """ small rationals in every coordinate """
    count = Cochain.size(ldim, degree, 1 if scalar else vdim)
    numerators = rng.integers(-2, 3, size=count)
    denominators = rng.integers(1, 4, size=count)
    return Cochain.from_vector(ldim, degree, vdim,
                               [Rational(int(a), int(b)) for a, b in
                                zip(numerators, denominators)], scalar)


def random_quad_cochain(rng, module):
    ldim = module.algebra.dim
    return QuadCochain(random_cochain(rng, ldim, 1, module.dim),
                       random_cochain(rng, ldim, 2, scalar=True))


def rotating_plane():
    return OrthogonalModule(LieModule(basic.abelian(3),
                                      [J, zeros(2, 2), zeros(2, 2)]),
                            SymForm.standard(0, 2))


random_modules = [
    lambda: OrthogonalModule.trivial(basic.heisenberg(),
                                     SymForm.hyperbolic(1)),
    lambda: OrthogonalModule(LieModule.adjoint(basic.sl2()),
                             liealg.killing_form(basic.sl2())),
    lambda: OrthogonalModule(LieModule.adjoint(basic.su2()),
                             liealg.killing_form(basic.su2())),
    rotating_plane,
    lambda: OrthogonalModule.trivial(basic.g41(), SymForm.standard(0, 1)),
    lambda: OrthogonalModule.trivial(basic.heisenberg_plus_line(),
                                     SymForm.standard(1, 0))]


class TestRandomLaws:
    """ seeded draws of cochains over six orthogonal modules """

    draws = 35

    @pytest.mark.parametrize('seed,build', list(enumerate(random_modules)))
    def test_square_zero(self, seed, build):
        module = build()
        ldim = module.algebra.dim
        rng = Settings.rng(seed)
        for _ in range(self.draws):
            for degree in (0, 1):
                c = random_cochain(rng, ldim, degree, module.dim)
                assert qcohom.d(qcohom.d(c, module), module).is_zero()
                s = random_cochain(rng, ldim, degree, scalar=True)
                assert qcohom.d(qcohom.d(s, module.algebra),
                                module.algebra).is_zero()

    @pytest.mark.parametrize('seed,build', list(enumerate(random_modules)))
    def test_tau_wedge_tau(self, seed, build):
        module = build()
        rng = Settings.rng(seed)
        for _ in range(self.draws):
            tau = random_cochain(rng, module.algebra.dim, 1, module.dim)
            assert qcohom.wedge(tau, tau, module.form).is_zero()

    @pytest.mark.parametrize('seed,build', list(enumerate(random_modules)))
    def test_right_action(self, seed, build):
        """ z.c1.c2 is a cocycle and equals z.(c1 c2) """
        module = build()
        zero = QuadCocycle.zero(module)
        rng = Settings.rng(seed)
        for draw in range(self.draws):
            c1 = random_quad_cochain(rng, module)
            c2 = random_quad_cochain(rng, module)
            z = qcohom.act(zero, c1)
            assert qcohom.is_cocycle(z.alpha, z.gamma, module)
            twice = qcohom.act(z, c2)
            assert qcohom.is_cocycle(twice.alpha, twice.gamma, module)
            assert twice == qcohom.act(
                zero, qcohom.c1q_compose(c1, c2, module.form))
            if draw < 5:
                assert qcohom.equivalent(z, twice).is_yes


class TestEquivalence:

    def test_orbit(self):
        """ a cocycle is equivalent to its translate """
        module = line_module(basic.heisenberg())
        zero = QuadCocycle.zero(module)
        z = qcohom.act(zero, QuadCochain(sigma_z(),
                                         Cochain.zero(3, 2, scalar=True)))
        decision = qcohom.equivalent(zero, z)
        assert decision.is_yes
        assert qcohom.act(zero, decision.witness) == z

    def test_gamma_residue(self):
        """ (-sigma^{XY}, 0) differs from the orbit of 0 in gamma only """
        module = line_module(basic.heisenberg())
        alpha = Cochain.from_dict(3, 2, 1, {(0, 1): [-1]})
        z = QuadCocycle(alpha, Cochain.zero(3, 3, scalar=True), module)
        decision = qcohom.equivalent(QuadCocycle.zero(module), z)
        assert decision.is_no
        assert decision.reason == 'the gamma residue cannot be removed'

    def test_alpha_class(self):
        """ sigma^{01} is not exact on the abelian plane """
        module = line_module(LieAlgebra.abelian(2))
        alpha = Cochain.from_dict(2, 2, 1, {(0, 1): [1]})
        z = QuadCocycle(alpha, Cochain.zero(2, 3, scalar=True), module)
        decision = qcohom.equivalent(z, QuadCocycle.zero(module))
        assert decision.is_no
        assert decision.reason == 'alpha_2 - alpha_1 is not a coboundary'

    def test_different_modules(self):
        first = QuadCocycle.zero(line_module(basic.heisenberg()))
        second = QuadCocycle.zero(OrthogonalModule.trivial(
            basic.heisenberg(), SymForm.standard(0, 2)))
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            qcohom.equivalent(first, second)

    def test_normalize_heisenberg(self):
        """ the translate of 0 normalizes back to 0 """
        module = line_module(basic.heisenberg())
        z = qcohom.act(QuadCocycle.zero(module),
                       QuadCochain(sigma_z(), Cochain.zero(3, 2,
                                                           scalar=True)))
        normalized, applied = qcohom.normalize_heisenberg_cocycle(z)
        assert normalized.alpha.is_zero()
        assert normalized.gamma.is_zero()
        assert qcohom.act(z, applied) == normalized

    def test_heisenberg_basis(self):
        assert qcohom.heisenberg_basis(basic.heisenberg()) == (0, 1, 2)
        with pytest.raises(algebra_exceptions.DimensionMismatchError):
            qcohom.heisenberg_basis(basic.sl2())


class TestPullback:

    def test_scalar(self):
        c = Cochain.from_dict(2, 2, 1, {(0, 1): 1}, scalar=True)
        pulled = qcohom.pullback(c, diag(2, 3))
        assert pulled.scalar_value((0, 1)) == 6

    def test_not_morphism(self):
        c = Cochain.zero(3, 2, 1, scalar=True)
        S = Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
        with pytest.raises(cochain_exceptions.MorphismOfPairsError):
            qcohom.pullback(c, S, source=basic.heisenberg(),
                            target=basic.heisenberg())

    def test_class_decomposition(self):
        """ the zero cocycle of R + R splits into two zero cocycles """
        plane = LieAlgebra.abelian(2)
        line = LieAlgebra.abelian(1)
        module = OrthogonalModule.trivial(plane, SymForm.standard(0, 2))
        z = QuadCocycle.zero(module)
        parts = [DecompositionPart(q, j, QuadCocycle.zero(line_module(line)))
                 for q, j in [(Matrix([[1, 0]]), Matrix([1, 0])),
                              (Matrix([[0, 1]]), Matrix([0, 1]))]]
        assert qcohom.verify_class_decomposition(z, *parts)
        with pytest.raises(cochain_exceptions.DecompositionNotDirectError):
            qcohom.verify_class_decomposition(z, parts[0], parts[0])
