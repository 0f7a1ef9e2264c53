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
Full and normal extrinsic symmetric triples over sl(2,R) and su(2)
whose g_+ is a Cahen-Wallach triple d(n, 0, (1,...,1), ()) resp.
d(0, n, (), (1,...,1)).
"""
import logging

from sympy import Matrix, Rational, diag

from metriclie.algebra import liealg
from metriclie.algebra.equivar import EquivStructure
from metriclie.algebra.liealg import LieModule
from metriclie.catalog.basic import (CatalogEntry, entry_from_witness,
                                     killing_cocycle, label, module_sum,
                                     sl2, su2)
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import OrthogonalModule, QuadCocycle
from metriclie.exceptions import catalog_exceptions
from metriclie.extensions.quadext import standard_model
from metriclie.utils.exactlin import to_rational

metriclie_log = logging.getLogger('metriclie')

EXTRINSIC_CASES = ('sl2', 'su2')


def extrinsic_grading(case: str):
    """
    (l, Phi_l) with l_+ = R H, l_- = span{X, Y} and D_l = ad(X)/2 on the
    basis (H, X, Y)
    """
    L = sl2() if case == 'sl2' else su2()
    D = L.ad_matrices[1] / 2
    return L, EquivStructure.extrinsic(D, diag(1, -1, -1), 'l ' + case)


def extrinsic_simple(case: str = 'sl2', n: int = 1, c=0,
                     name: str = '') -> CatalogEntry:
    """
    The standard model d_{0, gamma}(l, a) with a the sum of n adjoint
    modules carrying B (sl2) or -B (su2), B the Killing form,
    Phi_a = (D_l, -theta_l) and gamma = c B(., [., .])

    Returns
    -------
        CatalogEntry whose grading is the (R, Z2) structure (D, theta);
        extras['xi'] is the element of g_- with ad(xi) = D

    Raises
    ------
        InvalidFamilyParameterError: unknown case, n < 1 or c not rational
    """
    family = 'extrinsic'
    if case not in EXTRINSIC_CASES:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, 'case must be one of {}, got {}'.format(
                EXTRINSIC_CASES, case))
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, 'n must be a positive integer, got {}'.format(n))
    try:
        c = to_rational(c)
    except Exception as error:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, 'c is not rational: {}'.format(error))
    L, phi_l = extrinsic_grading(case)
    B = Matrix(liealg.killing_form(L).matrix)
    sign = 1 if case == 'sl2' else -1
    copy = EquivStructure.extrinsic(phi_l.derivations['D'], -phi_l.theta)
    module = module_sum(L, [OrthogonalModule(LieModule.adjoint(L),
                                             sign * B, copy)
                            for _ in range(n)], copy)
    z = QuadCocycle(Cochain.zero(L.dim, 2, module.dim), killing_cocycle(L, c),
                    module)
    name = name or label(family, case, n, c)
    w = standard_model(z, phi_l, name)
    entry = entry_from_witness(w, name, {'case': case, 'n': n, 'c': c},
                               cocycle=z)
    xi = inner_element(entry)
    if xi is None:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, 'the derivation D of {} is outer'.format(name))
    return CatalogEntry(entry.name, entry.g, entry.phi, entry.witness,
                        entry.params, {**entry.extras, 'xi': xi})


def inner_element(entry: CatalogEntry):
    """
    xi in g_- with ad(xi) = D, None when D is outer; the theta-odd part of
    the echelon-order particular solution
    """
    D = entry.phi.derivations['D']
    decision = liealg.inner_derivation_solve(entry.g.alg, D)
    if not decision.is_yes:
        return None
    x = decision.witness.particular
    return Rational(1, 2) * (x - entry.theta * x)
