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
Lorentzian and index 2 families: oscillator algebras, the Cahen-Wallach
symmetric triples d(p, q, lambda, mu) together with their metric and
group law in global coordinates, and the index 2 symmetric triples over
the Heisenberg algebra h(1).
"""
import logging

from typing import List, NamedTuple, Sequence, Tuple

from sympy import (Matrix, Rational, Symbol, cos, cosh, exp, expand, eye,
                   powsimp, simplify, sin, sinh, sympify, zeros)

from metriclie.algebra.equivar import EquivStructure
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.algebra.metric import MetricLieAlgebra
from metriclie.catalog.basic import (CatalogEntry, entry_from_witness,
                                     heisenberg, label, nonnegative_int,
                                     rationals)
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import OrthogonalModule, QuadCocycle
from metriclie.exceptions import catalog_exceptions
from metriclie.extensions.quadext import double_extension, standard_model
from metriclie.utils.exactlin import SymForm, block_diagonal, unit_vector
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


# oscillator algebras

def _oscillator_rho(lam) -> Matrix:
    m = len(lam)
    rho = zeros(2 * m, 2 * m)
    for i, value in enumerate(lam):
        rho[2 * i + 1, 2 * i] = value
        rho[2 * i, 2 * i + 1] = -value
    return rho


def _oscillator_parameters(lam) -> Tuple:
    lam = rationals('osc', lam)
    if len(lam) == 0:
        raise catalog_exceptions.InvalidFamilyParameterError(
            'osc', 'lambda must have at least one entry')
    if any(value == 0 for value in lam):
        raise catalog_exceptions.InvalidFamilyParameterError(
            'osc', 'the entries of lambda must be nonzero, got {}'
            ''.format(lam))
    return lam


def osc(lam: Sequence) -> CatalogEntry:
    """
    The oscillator algebra d_{0,0}(R, a_lambda): R acts on the Euclidean
    space R^{2m} by rotations with speeds lambda_1, ..., lambda_m

    Parameters
    ----------
        lam: sequence of rationals
            nonzero entries

    Returns
    -------
        CatalogEntry of dimension 2m + 2 and signature (1, 2m + 1)

    Raises
    ------
        InvalidFamilyParameterError: empty lambda or a zero entry
    """
    lam = _oscillator_parameters(lam)
    m = len(lam)
    line = LieAlgebra.abelian(1, ['L'], 'R')
    module = OrthogonalModule(LieModule(line, [_oscillator_rho(lam)],
                                        'rho_lambda'),
                              SymForm.standard(0, 2 * m))
    z = QuadCocycle.zero(module)
    name = label('osc', lam)
    return entry_from_witness(standard_model(z, name=name), name,
                              {'lam': lam}, cocycle=z)


def osc_normalize(lam: Sequence) -> Tuple:
    """
    Normal form 1 = lambda_1 <= lambda_2 <= ... <= lambda_m: signs are
    removed, the entries sorted and scaled by the smallest one
    """
    lam = _oscillator_parameters(lam)
    values = sorted(abs(value) for value in lam)
    return tuple(value / values[0] for value in values)


def osc_as_double_extension(lam: Sequence) -> MetricLieAlgebra:
    """
    d_pi(a_lambda, R): the double extension of the abelian Euclidean
    algebra R^{2m} by the rotation pi(L) = rho_lambda(L). Its basis
    (Z_L, A1, ..., A2m, L) matches the one of osc(lambda).
    """
    lam = _oscillator_parameters(lam)
    m = len(lam)
    names = ['A{}'.format(b + 1) for b in range(2 * m)]
    flat = MetricLieAlgebra(LieAlgebra.abelian(2 * m, names),
                            SymForm.standard(0, 2 * m), 'R^{}'.format(2 * m))
    line = LieAlgebra.abelian(1, ['L'], 'R')
    return double_extension(flat, line, [_oscillator_rho(lam)],
                            name=label('osc_de', lam))


# Cahen-Wallach triples

class CWParams(NamedTuple):
    """
    Parameters of d(p, q, lambda, mu)

    Attributes
    ----------
    p : int
    q : int
    lam : tuple
        p rationals
    mu : tuple
        q rationals
    """
    p: int
    q: int
    lam: Tuple
    mu: Tuple

    @property
    def module_dim(self) -> int:
        return 2 * self.p + 2 * self.q


def cw_params(p: int, q: int, lam: Sequence = (),
              mu: Sequence = ()) -> CWParams:
    """
    Raises
    ------
        InvalidFamilyParameterError: negative or zero dimensions, or
        lambda, mu of the wrong length
    """
    p = nonnegative_int('cahen_wallach', 'p', p)
    q = nonnegative_int('cahen_wallach', 'q', q)
    if p + q == 0:
        raise catalog_exceptions.InvalidFamilyParameterError(
            'cahen_wallach', 'p + q must be positive')
    lam = rationals('cahen_wallach', lam)
    mu = rationals('cahen_wallach', mu)
    if len(lam) != p or len(mu) != q:
        raise catalog_exceptions.InvalidFamilyParameterError(
            'cahen_wallach', 'expected {} values of lambda and {} of mu, '
            'got {} and {}'.format(p, q, len(lam), len(mu)))
    return CWParams(p, q, lam, mu)


def _cw_rho(params: CWParams) -> Matrix:
    """
    rho(L) e_i = lambda_i e_{p+i}, rho(L) e_{p+i} = lambda_i e_i on
    R^{p,p}, rho(L) e'_j = mu_j e'_{q+j}, rho(L) e'_{q+j} = -mu_j e'_j on
    R^{0,2q}
    """
    p, q = params.p, params.q
    rho = zeros(params.module_dim, params.module_dim)
    for i, value in enumerate(params.lam):
        rho[p + i, i] = value
        rho[i, p + i] = value
    offset = 2 * p
    for j, value in enumerate(params.mu):
        rho[offset + q + j, offset + j] = value
        rho[offset + j, offset + q + j] = -value
    return rho


def _cw_module(params: CWParams) -> OrthogonalModule:
    p, q = params.p, params.q
    line = LieAlgebra.abelian(1, ['L'], 'R')
    form = SymForm(Matrix.diag(*([-1] * p + [1] * (p + 2 * q))))
    theta = Matrix.diag(*([1] * p + [-1] * p + [1] * q + [-1] * q))
    return OrthogonalModule(LieModule(line, [_cw_rho(params)], 'rho_lm'),
                            form, EquivStructure.z2(theta))


def cahen_wallach(p: int, q: int, lam: Sequence = (),
                  mu: Sequence = ()) -> CatalogEntry:
    """
    The Cahen-Wallach symmetric triple d(p, q, lambda, mu) =
    d_{0,0}(R, a): l = R with theta_l = -1 and a = R^{p,p} + R^{0,2q},
    a_+ spanned by e_1..e_p, e'_1..e'_q

    Returns
    -------
        CatalogEntry with a z2 grading; g_- has signature (1, p + q + 1).
        extras['params'] is the CWParams of the group law.
    """
    params = cw_params(p, q, lam, mu)
    module = _cw_module(params)
    z = QuadCocycle.zero(module)
    name = label('cahen_wallach', p, q, params.lam, params.mu)
    w = standard_model(z, EquivStructure.z2(Matrix([[-1]])), name)
    return entry_from_witness(w, name, params._asdict(), cocycle=z,
                              params=params)


def cw_normalize(p: int, q: int, lam: Sequence,
                 mu: Sequence) -> Tuple[Tuple, Tuple]:
    """
    The normal form in M_{p,q}: absolute values sorted ascending and a
    common scaling with lambda_1 = 1 if p > 0, else mu_1 = 1

    Raises
    ------
        InvalidFamilyParameterError: a zero entry
    """
    params = cw_params(p, q, lam, mu)
    if any(v == 0 for v in params.lam + params.mu):
        raise catalog_exceptions.InvalidFamilyParameterError(
            'cahen_wallach', 'normalization needs nonzero lambda and mu')
    lam = sorted(abs(v) for v in params.lam)
    mu = sorted(abs(v) for v in params.mu)
    scale = lam[0] if p > 0 else mu[0]
    return tuple(v / scale for v in lam), tuple(v / scale for v in mu)


def cw_metric_at(params: CWParams, point: Sequence) -> SymForm:
    """
    The metric 2 dz dl + sum da_i^2 + sum da'_j^2 +
    (sum lambda_i^2 a_i^2 - sum mu_j^2 a'_j^2) dl^2 at a point

    Parameters
    ----------
        params: CWParams
        point: sequence
            coordinates (z, a_1, ..., a_p, a'_1, ..., a'_q, l)

    Returns
    -------
        SymForm on the coordinates (z, a, a', l)
    """
    p, q = params.p, params.q
    point = rationals('cahen_wallach', point)
    n = p + q + 2
    if len(point) != n:
        raise catalog_exceptions.InvalidFamilyParameterError(
            'cahen_wallach', 'a point has {} coordinates, got {}'
            ''.format(n, len(point)))
    g = zeros(n, n)
    g[0, n - 1] = g[n - 1, 0] = 1
    for k in range(1, n - 1):
        g[k, k] = 1
    a, b = point[1:1 + p], point[1 + p:1 + p + q]
    g[n - 1, n - 1] = sum((lam ** 2 * x ** 2 for lam, x in
                           zip(params.lam, a)), Rational(0)) - \
        sum((mu ** 2 * x ** 2 for mu, x in zip(params.mu, b)), Rational(0))
    return SymForm(g)


def _flow(params: CWParams, t) -> Matrix:
    """ exp(-t rho(L)) on a """
    p, q = params.p, params.q
    E = eye(params.module_dim)
    for i, lam in enumerate(params.lam):
        E[i, i] = E[p + i, p + i] = cosh(lam * t)
        E[i, p + i] = E[p + i, i] = -sinh(lam * t)
    offset = 2 * p
    for j, mu in enumerate(params.mu):
        a, b = offset + j, offset + q + j
        E[a, a] = E[b, b] = cos(mu * t)
        E[a, b] = sin(mu * t)
        E[b, a] = -sin(mu * t)
    return E


def _split(params: CWParams, x) -> Tuple:
    x = Matrix([sympify(v) for v in x])
    if len(x) != params.module_dim + 2:
        raise catalog_exceptions.InvalidFamilyParameterError(
            'cahen_wallach', 'a group element has {} coordinates, got {}'
            ''.format(params.module_dim + 2, len(x)))
    return x[0], x[1:params.module_dim + 1, 0], x[params.module_dim + 1]


def cw_multiply(params: CWParams, x, y) -> Matrix:
    """
    (Z, A, L)(Z', A', L') = (Z + Z' + 1/2 [e^{-ad L'} A, A'],
    e^{-ad L'} A + A', L + L')

    Parameters
    ----------
        params: CWParams
        x, y: sequences (Z, A_1, ..., A_{2p+2q}, L)
            entries may be rationals or sympy expressions

    Returns
    -------
        Matrix column of the product
    """
    Z1, A1, L1 = _split(params, x)
    Z2, A2, L2 = _split(params, y)
    rho = _cw_rho(params)
    G = _cw_module(params).gram
    moved = _flow(params, L2) * A1
    # [A, A'] = <rho(L) A, A'> Z_L
    bracket = ((rho * moved).T * G * A2)[0, 0]
    return Matrix([Z1 + Z2 + Rational(1, 2) * bracket] +
                  list(moved + A2) + [L1 + L2])


def _vanishes(expr) -> bool:
    expr = powsimp(expand(sympify(expr).rewrite(exp)))
    return expr == 0 or simplify(expr) == 0


def cw_is_associative(params: CWParams, x, y, w) -> bool:
    """ (x y) w = x (y w), compared after rewriting in exponentials """
    left = cw_multiply(params, cw_multiply(params, x, y), w)
    right = cw_multiply(params, x, cw_multiply(params, y, w))
    return all(_vanishes(a - b) for a, b in zip(left, right))


def cw_symbolic_associativity(params: CWParams) -> bool:
    """
    Associativity as an identity: all coordinates of the three factors
    are independent symbols
    """
    size = params.module_dim + 2
    elements = [[Symbol('x{}_{}'.format(k, c), real=True)
                 for c in range(size)] for k in range(3)]
    result = cw_is_associative(params, *elements)
    metriclie_log.debug("symbolic associativity of d({}, {}): {}"
                        "".format(params.p, params.q, result))
    return result


# index 2 triples over h(1)

def _covectors(name: str, values) -> List[Tuple]:
    result = []
    for value in values:
        pair = rationals('index2_h1', value)
        if len(pair) != 2:
            raise catalog_exceptions.InvalidFamilyParameterError(
                'index2_h1', '{} must consist of pairs (value on X, value '
                'on Y), got {}'.format(name, value))
        if pair == (0, 0):
            raise catalog_exceptions.InvalidFamilyParameterError(
                'index2_h1', '{} contains the zero covector'.format(name))
        result.append(pair)
    return result


def index2_h1_module(lam: Sequence = (), mu: Sequence = (),
                     variant: int = 1) -> OrthogonalModule:
    """
    The orthogonal (h(1), theta)-module a = a_+^{p,q} + a_-^{0,p+q} +
    a_-^{0,variant} with rho_{lambda,mu} on the first two summands and
    the trivial action on the last one. Basis: e_1..e_2p, e'_1..e'_2q,
    f_1..f_variant.
    """
    lam = _covectors('lambda', lam)
    mu = _covectors('mu', mu)
    if variant not in (1, 2):
        raise catalog_exceptions.InvalidFamilyParameterError(
            'index2_h1', 'variant must be 1 or 2, got {}'.format(variant))
    p, q = len(lam), len(mu)
    m = 2 * p + 2 * q + variant
    rho = [zeros(m, m) for _ in range(3)]
    for generator in (0, 1):
        R = rho[generator]
        for i, covector in enumerate(lam):
            R[p + i, i] = R[i, p + i] = covector[generator]
        offset = 2 * p
        for j, covector in enumerate(mu):
            R[offset + q + j, offset + j] = covector[generator]
            R[offset + j, offset + q + j] = -covector[generator]
    form = SymForm(Matrix.diag(*([-1] * p + [1] * (m - p))))
    theta = Matrix.diag(*([1] * p + [-1] * p + [1] * q + [-1] * q +
                          [-1] * variant))
    return OrthogonalModule(LieModule(heisenberg(), rho, 'a_lm'), form,
                            EquivStructure.z2(theta))


def index2_h1_cocycle_space(module: OrthogonalModule) -> List[Cochain]:
    """
    Basis of the alphas with alpha(X, Y) = 0 and alpha(Z, l) in a_-^l
    (indices X, Y, Z = 0, 1, 2)
    """
    theta = module.equiv.theta
    fixed = module.module.invariants() & \
        Subspace.kernel(theta + eye(module.dim))
    basis = []
    for target in (0, 1):
        for v in fixed.vectors():
            basis.append(Cochain.from_dict(3, 2, module.dim,
                                           {(2, target): v}))
    return basis


def is_index2_h1_admissible(alpha: Cochain, module: OrthogonalModule) -> bool:
    """ alpha(X, Y) = 0 and alpha(Z, l) = a_-^l """
    theta = module.equiv.theta
    fixed = module.module.invariants() & \
        Subspace.kernel(theta + eye(module.dim))
    if not alpha.value((0, 1)).is_zero_matrix:
        return False
    return Subspace(module.dim, [alpha.value((2, 0)),
                                 alpha.value((2, 1))]) == fixed


def h1_theta_automorphisms() -> List[Matrix]:
    """
    Generators diag(A, det A) of the automorphisms of (h(1), theta) for A
    running through generators of GL(2, Q)
    """
    generators = [Matrix([[1, 1], [0, 1]]), Matrix([[0, 1], [1, 0]]),
                  Matrix([[2, 0], [0, 1]]), Matrix([[-1, 0], [0, 1]])]
    return [block_diagonal(A, Matrix([[A.det()]])) for A in generators]


def index2_h1(lam: Sequence = (), mu: Sequence = (), variant: int = 1,
              alpha: Cochain = None) -> CatalogEntry:
    """
    The index 2 symmetric triple d_{alpha,0}(h(1), a_{variant,lambda,mu})
    with theta_l = (-1, -1, 1) on (X, Y, Z)

    Parameters
    ----------
        lam, mu: sequences of covectors (value on X, value on Y)
            all nonzero
        variant: int
            dimension of the trivial summand a_-^{0,variant}
        alpha: Cochain
            an admissible cocycle, default alpha(Z, X) = f_1 and for
            variant 2 also alpha(Z, Y) = f_2

    Returns
    -------
        CatalogEntry; extras carry the module, the basis of the
        admissible cocycle space and the automorphism generators

    Raises
    ------
        InvalidFamilyParameterError: zero covector, bad variant or an
        alpha outside the admissible set
    """
    module = index2_h1_module(lam, mu, variant)
    m = module.dim
    if alpha is None:
        entries = {(2, 0): unit_vector(m, m - variant)}
        if variant == 2:
            entries[(2, 1)] = unit_vector(m, m - 1)
        alpha = Cochain.from_dict(3, 2, m, entries)
    if not is_index2_h1_admissible(alpha, module):
        raise catalog_exceptions.InvalidFamilyParameterError(
            'index2_h1', 'alpha is not in the admissible set')
    z = QuadCocycle(alpha, Cochain.zero(3, 3, scalar=True), module)
    lam_, mu_ = _covectors('lambda', lam), _covectors('mu', mu)
    name = label('index2_h1', [str(c) for c in lam_], [str(c) for c in mu_],
                 variant)
    phi_l = EquivStructure.z2(Matrix.diag(-1, -1, 1))
    w = standard_model(z, phi_l, name)
    return entry_from_witness(
        w, name, {'lam': tuple(lam_), 'mu': tuple(mu_), 'variant': variant},
        cocycle=z, module=module,
        cocycle_space=index2_h1_cocycle_space(module),
        automorphisms=h1_theta_automorphisms())
