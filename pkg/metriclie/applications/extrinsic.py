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
"""
Extrinsic symmetric triples: (R, Z2)-equivariant metric Lie algebras
(g, D, theta) with D inner, D^3 = -D and both (g, theta) and
(g_+, tau_D) proper; fullness and the innerness condition on standard
model data.
"""
import logging

from typing import Dict, NamedTuple, Optional

from sympy import Matrix, eye

from metriclie.algebra import liealg
from metriclie.algebra.equivar import (EquivStructure, extrinsic_split,
                                       z2_split)
from metriclie.catalog.basic import CatalogEntry
from metriclie.cohomology.qcohom import QuadCocycle
from metriclie.exceptions import algebra_exceptions
from metriclie.extensions.quadext import standard_model
from metriclie.utils.decision import Check, Decision
from metriclie.utils.exactlin import LinearSystem
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


class ExtrinsicTriple(NamedTuple):
    """
    Attributes
    ----------
    g : MetricLieAlgebra
    D : Matrix
        derivation with D^3 = -D
    theta : Matrix
        involutive isometric automorphism anticommuting with D
    xi : Matrix
        element of g_- with ad(xi) = D, None when not known
    """
    g: object
    D: Matrix
    theta: Matrix
    xi: Optional[Matrix] = None


def triple_from_entry(entry: CatalogEntry) -> ExtrinsicTriple:
    return ExtrinsicTriple(entry.g, entry.phi.derivations['D'], entry.theta,
                           entry.extras.get('xi'))


class ExtrinsicReport(NamedTuple):
    """
    Attributes
    ----------
    checks : dict
        condition -> Check
    xi : Matrix
        element of g_- with ad(xi) = D, None when D is outer
    """
    checks: Dict[str, Check]
    xi: Optional[Matrix]

    @property
    def holds(self) -> bool:
        return all(self.checks.values())

    def __bool__(self):
        return self.holds


def _require_structure(t: ExtrinsicTriple):
    """
    Raises
    ------
        NotDerivationError, NotInvolutionError, NotIsometryError,
        GradingRelationError
    """
    L = t.g.alg
    D, theta = Matrix(t.D), Matrix(t.theta)
    check = liealg.check_derivation(L, D)
    if not check:
        raise algebra_exceptions.NotDerivationError(
            'D', 'fails on the pair {}'.format(check.violation))
    if theta * theta != eye(L.dim):
        raise algebra_exceptions.NotInvolutionError('theta')
    if theta.T * t.g.gram * theta != t.g.gram:
        raise algebra_exceptions.NotIsometryError('theta')
    if D * theta != -theta * D:
        raise algebra_exceptions.GradingRelationError(
            'extrinsic_RZ2', 'D theta = -theta D')


def inner_xi(t: ExtrinsicTriple) -> Optional[Matrix]:
    """ the given xi when it works, else the theta-odd solution of ad = D """
    D, theta = Matrix(t.D), Matrix(t.theta)
    if t.xi is not None:
        xi = Matrix(t.xi)
        if t.g.alg.ad(xi) == D and theta * xi == -xi:
            return xi
    decision = liealg.inner_derivation_solve(t.g.alg, D)
    if not decision.is_yes:
        return None
    x = decision.witness.particular
    return (x - theta * x) / 2


def check_extrinsic(t: ExtrinsicTriple) -> ExtrinsicReport:
    """
    Decides the axioms of an extrinsic symmetric triple

    Returns
    -------
        ExtrinsicReport with the checks 'skew', 'cube', 'inner',
        'proper' and 'plus proper'

    Raises
    ------
        NotDerivationError: D is not a derivation
        NotInvolutionError: theta is not involutive
    """
    _require_structure(t)
    g = t.g
    D, theta = Matrix(t.D), Matrix(t.theta)
    checks = {}
    checks['skew'] = Check.ok() if (D.T * g.gram + g.gram * D).is_zero_matrix \
        else Check.failed('D is not skew for the form')
    checks['cube'] = Check.ok() if D * D * D == -D \
        else Check.failed('D^3 != -D')
    xi = inner_xi(t)
    checks['inner'] = Check.ok() if xi is not None \
        else Check.failed('D is outer')
    checks['proper'] = Check.ok() if z2_split(g, theta).proper \
        else Check.failed('[g_-, g_-] != g_+')
    checks['plus proper'] = _plus_proper(t) if checks['cube'] \
        else Check.failed('tau_D needs D^3 = -D')
    report = ExtrinsicReport(checks, xi)
    metriclie_log.info("extrinsic triple of dimension {}: {}".format(
        g.dim, {k: bool(v) for k, v in checks.items()}))
    return report


def _plus_proper(t: ExtrinsicTriple) -> Check:
    """ (g_+, tau_D restricted) is proper """
    D, theta = Matrix(t.D), Matrix(t.theta)
    n = t.g.dim
    plus = Subspace.kernel(theta - eye(n))
    tau = eye(n) + 2 * D * D
    if not liealg.is_subalgebra(t.g.alg, plus):
        return Check.failed('g_+ is not a subalgebra')
    g_plus = t.g.alg.subalgebra(plus)
    if z2_split(g_plus, plus.restrict_operator(tau)).proper:
        return Check.ok()
    return Check.failed('(g_+, tau_D) is not proper')


def check_fullness(t: ExtrinsicTriple) -> Check:
    """ [g_+^-, g_-^-] = g_-^+ (theta sign first, D sign second) """
    _require_structure(t)
    parts = extrinsic_split(t.g, t.D, t.theta).fourfold
    span = liealg.bracket_span(t.g.alg, parts[('+', '-')], parts[('-', '-')])
    if span == parts[('-', '+')]:
        return Check.ok()
    return Check.failed('[g_+^-, g_-^-] has dimension {}, g_-^+ has '
                        'dimension {}'.format(span.dim,
                                              parts[('-', '+')].dim))


def complex_grading_is_proper(t: ExtrinsicTriple) -> bool:
    """ the grading by D alone is proper: [g^-, g^-] = g^+ """
    split = extrinsic_split(t.g, t.D)
    return liealg.bracket_span(t.g.alg, split.minus, split.minus) == \
        split.plus


class InnerWitness(NamedTuple):
    """ xi = z + a + l with z in l_-^*, a in a_-, l in l_- """
    z: Matrix
    a: Matrix
    l: Matrix


def check_O4(z: QuadCocycle, phi_l: EquivStructure) -> Decision:
    """
    Whether the derivation -D_l^* + D_a + D_l of d_{alpha,gamma}(l, a)
    is ad(xi) for some xi in l_-^* + a_- + l_-; the structure of a is the
    equivariant structure of the module

    Returns
    -------
        Decision, Yes with the InnerWitness (z, a, l) of the first
        solution in echelon order
    """
    w = standard_model(z, phi_l)
    g, phi = w.g, w.phi
    if phi is None or 'D' not in phi.derivations or phi.theta is None:
        raise algebra_exceptions.GradingRelationError(
            'extrinsic_RZ2', 'a derivation D and an involution theta')
    n, m = phi_l.dim, z.module.dim
    D = phi.derivations['D']
    minus = Subspace.kernel(phi.theta + eye(g.dim))
    basis = minus.vectors()
    system = LinearSystem(len(basis))
    ads = [g.alg.ad(v) for v in basis]
    for row in range(g.dim):
        for column in range(g.dim):
            system.add_equation({i: A[row, column] for i, A in
                                 enumerate(ads) if A[row, column] != 0},
                                D[row, column])
    solution = system.solve()
    if not solution.solvable:
        return Decision.no(None, 'the derivation is not inner on g_-')
    xi = sum((c * v for c, v in zip(solution.particular, basis)),
             Matrix.zeros(g.dim, 1))
    return Decision.yes(InnerWitness(xi[:n, 0], xi[n:n + m, 0],
                                     xi[n + m:, 0]))
