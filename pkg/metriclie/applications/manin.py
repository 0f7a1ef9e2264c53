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
Manin pairs and Manin triples: verification, the construction of Manin
pairs from quadratic extension data, and the Lie bialgebra structure
(cobracket) carried by a Manin triple.
"""
import logging

from itertools import combinations
from typing import List, NamedTuple, Optional

from sympy import Matrix, zeros

from metriclie.algebra import liealg
from metriclie.algebra.liealg import LieAlgebra
from metriclie.algebra.metric import MetricLieAlgebra
from metriclie.cohomology import qcohom
from metriclie.cohomology.qcohom import QuadCocycle
from metriclie.exceptions import cochain_exceptions
from metriclie.extensions.quadext import standard_model
from metriclie.utils.decision import Check
from metriclie.utils.exactlin import inverse
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


class ManinWitness(NamedTuple):
    """
    A Manin pair (g, h1) or, with h2, a Manin triple (g, h1, h2)

    Attributes
    ----------
    g : MetricLieAlgebra
    h1 : Subspace
    h2 : Subspace
        complementary isotropic subalgebra, None for a pair
    """
    g: MetricLieAlgebra
    h1: Subspace
    h2: Optional[Subspace] = None


def _closed(g: MetricLieAlgebra, h: Subspace) -> Check:
    for x, y in combinations(h.vectors(), 2):
        value = g.alg.bracket(x, y)
        if not h.contains(value):
            return Check.failed('[{}, {}] = {} leaves the subalgebra'.format(
                list(x), list(y), list(value)))
    return Check.ok()


def _isotropic(g: MetricLieAlgebra, h: Subspace) -> Check:
    if h.dim == 0:
        return Check.ok()
    B = Matrix(h.basis)
    if not (B.T * g.gram * B).is_zero_matrix:
        return Check.failed('the subspace is not isotropic')
    return Check.ok()


def check_manin_pair(g: MetricLieAlgebra, h: Subspace) -> Check:
    """
    g of signature (n, n) and h an n-dimensional isotropic subalgebra

    Returns
    -------
        Check whose violation names the failing condition (a leaving
        bracket for a non-closed h)
    """
    signature = g.signature()
    if signature.p != signature.q:
        return Check.failed('the signature {} is not neutral'.format(
            tuple(signature[:2])))
    if 2 * h.dim != g.dim:
        return Check.failed('dim h = {} is not half of dim g = {}'.format(
            h.dim, g.dim))
    check = _isotropic(g, h)
    if not check:
        return check
    return _closed(g, h)


def check_manin_triple(g: MetricLieAlgebra, h1: Subspace,
                       h2: Subspace) -> Check:
    for label, h in (('h1', h1), ('h2', h2)):
        check = check_manin_pair(g, h)
        if not check:
            return Check.failed('{}: {}'.format(label, check.violation))
    if not (h1 & h2).is_zero():
        return Check.failed('h1 and h2 intersect')
    return Check.ok()


def _embed(vectors: List[Matrix], offset: int, total: int) -> List[Matrix]:
    embedded = []
    for v in vectors:
        x = zeros(total, 1)
        x[offset:offset + v.rows, 0] = v
        embedded.append(x)
    return embedded


def manin_pair_build(l_prime: Subspace, a_prime: Subspace, z: QuadCocycle,
                     name: str = '') -> ManinWitness:
    """
    The Manin pair (d, Ann(l') + a' + l') for d = d_{alpha,gamma}(l, a)

    Parameters
    ----------
        l_prime: Subspace
            subalgebra l' of l
        a_prime: Subspace
            isotropic l'-invariant subspace of a of half dimension
        z: QuadCocycle
            (alpha, gamma) with alpha(l', l') in a' and
            gamma(l', l', l') = 0
        name: str

    Raises
    ------
        ManinPreconditionError: names the first failing precondition
    """
    module = z.module
    L = module.algebra
    n, m = L.dim, module.dim
    if not liealg.is_subalgebra(L, l_prime):
        raise cochain_exceptions.ManinPreconditionError(
            "l' is a subalgebra")
    signature = module.form.signature()
    if signature.p != signature.q:
        raise cochain_exceptions.ManinPreconditionError(
            'a has neutral signature')
    if 2 * a_prime.dim != m or a_prime.dim and not \
            (Matrix(a_prime.basis).T * module.gram *
             Matrix(a_prime.basis)).is_zero_matrix:
        raise cochain_exceptions.ManinPreconditionError(
            "a' is isotropic of half dimension")
    for x in l_prime.vectors():
        if not all(a_prime.contains(module.rho(x) * v)
                   for v in a_prime.vectors()):
            raise cochain_exceptions.ManinPreconditionError(
                "a' is l'-invariant")
    for x, y in combinations(l_prime.vectors(), 2):
        if not a_prime.contains(z.alpha.evaluate(x, y)):
            raise cochain_exceptions.ManinPreconditionError(
                "alpha(l', l') lies in a'")
    for x, y, w in combinations(l_prime.vectors(), 3):
        if not z.gamma.evaluate(x, y, w).is_zero_matrix:
            raise cochain_exceptions.ManinPreconditionError(
                "gamma(l', l', l') = 0")
    if not qcohom.is_cocycle(z.alpha, z.gamma, module):
        raise cochain_exceptions.ManinPreconditionError(
            '(alpha, gamma) is a cocycle')
    g = standard_model(z, None, name or 'Manin pair').g
    annihilator = Subspace.kernel(Matrix(l_prime.basis).T) \
        if l_prime.dim else Subspace.whole(n)
    h = Subspace(g.dim, _embed(annihilator.vectors(), 0, g.dim) +
                 _embed(a_prime.vectors(), n, g.dim) +
                 _embed(l_prime.vectors(), n + m, g.dim))
    check = check_manin_pair(g, h)
    if not check:
        raise cochain_exceptions.ManinPreconditionError(
            'the result is a Manin pair ({})'.format(check.violation))
    metriclie_log.info("Manin pair of dimension {} with h of dimension {}"
                       "".format(g.dim, h.dim))
    return ManinWitness(g, h)


class Cobracket(NamedTuple):
    """
    Lie bialgebra structure of h1 from a Manin triple (g, h1, h2)

    Attributes
    ----------
    h1 : LieAlgebra
        h1 on the echelon basis x_1, ..., x_k
    delta : list of Matrix
        delta(x_i) as the antisymmetric matrix C_i with
        delta(x_i) = sum_{j<k} C_i[j, k] x_j ^ x_k
    dual : LieAlgebra
        the bracket of h1^* = h2 on the basis dual to x_1, ..., x_k
    cocycle : Check
        delta is a 1-cocycle with values in the adjoint module on
        Lambda^2 h1
    cojacobi : Check
        the dual bracket satisfies the Jacobi identity
    """
    h1: LieAlgebra
    delta: List[Matrix]
    dual: LieAlgebra
    cocycle: Check
    cojacobi: Check


def _delta_cocycle(h1: LieAlgebra, delta: List[Matrix]) -> Check:
    """ delta([x, y]) = ad_x delta(y) - ad_y delta(x) on the basis """
    k = h1.dim

    def value(v):
        return sum((v[i] * delta[i] for i in range(k)), zeros(k, k))

    for i, j in combinations(range(k), 2):
        A, B = Matrix(h1.ad_matrices[i]), Matrix(h1.ad_matrices[j])
        left = value(h1.bracket(i, j))
        right = A * delta[j] + delta[j] * A.T - \
            (B * delta[i] + delta[i] * B.T)
        if left != right:
            return Check.failed((i, j))
    return Check.ok()


def cobracket_from_triple(w: ManinWitness) -> Cobracket:
    """
    The cobracket delta: h1 -> Lambda^2 h1 dual to the bracket of h2
    under the pairing h2 = h1^*, <delta(x), xi ^ eta> = <x, [xi, eta]>

    Raises
    ------
        ManinPreconditionError: (g, h1, h2) is not a Manin triple
    """
    if w.h2 is None:
        raise cochain_exceptions.ManinPreconditionError('h2 is given')
    check = check_manin_triple(w.g, w.h1, w.h2)
    if not check:
        raise cochain_exceptions.ManinPreconditionError(
            'Manin triple ({})'.format(check.violation))
    g = w.g
    X, Y = Matrix(w.h1.basis), Matrix(w.h2.basis)
    k = X.cols
    # dual basis of h2: <x_i, y^j> = delta_ij
    Ydual = Y * inverse(X.T * g.gram * Y)
    h1 = g.alg.subalgebra(w.h1)
    coefficients = {}
    for j, l in combinations(range(k), 2):
        value = g.alg.bracket(Ydual[:, j], Ydual[:, l])
        coefficients[(j, l)] = X.T * g.gram * value
    delta = []
    for i in range(k):
        C = zeros(k, k)
        for (j, l), c in coefficients.items():
            C[j, l], C[l, j] = c[i], -c[i]
        delta.append(C)
    brackets = {(j, l): {i: c[i] for i in range(k) if c[i] != 0}
                for (j, l), c in coefficients.items()}
    dual = LieAlgebra(k, {key: v for key, v in brackets.items() if v},
                      ['x{}*'.format(i + 1) for i in range(k)], 'h1^*')
    return Cobracket(h1, delta, dual, _delta_cocycle(h1, delta),
                     liealg.check_jacobi(dual))
