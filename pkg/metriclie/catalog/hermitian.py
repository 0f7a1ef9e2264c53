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
Pseudo-Hermitian and para-Hermitian symmetric triples of index 2, given
by their complex (para-complex) graded data (l, Phi_l, a, alpha, gamma),
and the nilpotent pseudo-Hermitian family g(m).
"""
import logging

from sympy import I, Matrix, eye, kronecker_product, zeros

from metriclie.algebra import liealg
from metriclie.algebra.equivar import EquivStructure
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.algebra.metric import MetricLieAlgebra
from metriclie.catalog.basic import (J2, CatalogEntry, abelian,
                                     alpha_from_terms, complex_block,
                                     entry_from_witness, heisenberg,
                                     killing_cocycle, label, module_sum,
                                     nonnegative_int, sl2, su2)
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import OrthogonalModule, QuadCocycle
from metriclie.exceptions import catalog_exceptions
from metriclie.extensions.quadext import standard_model
from metriclie.utils.decision import Check
from metriclie.utils.exactlin import SymForm, to_rational

metriclie_log = logging.getLogger('metriclie')

PSEUDO_HERMITIAN_CASES = ('1a', '1b', '2', '3', '4')
PARA_HERMITIAN_CASES = ('1', '2', '3')

# the symplectic form of R^2 and of C on (1, i)
OMEGA = Matrix([[0, 1], [-1, 0]])


def _check_case(family: str, case, cases) -> str:
    case = str(case)
    if case not in cases:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, 'unknown case {}, the cases are {}'
            ''.format(case, ', '.join(cases)))
    return case


def _plane_over_line(sign: int, D_l: Matrix, kind: str):
    """
    l = R^2 with the grading D_l, a = R with the form sign, trivial
    rho and Phi_a, alpha = sigma^{12} (x) e_1
    """
    L = abelian(2, 'E')
    phi_a = EquivStructure.complex(zeros(1, 1)) if kind == 'complex' \
        else EquivStructure.para_complex(zeros(1, 1))
    module = OrthogonalModule(LieModule.trivial(L, 1), Matrix([[sign]]),
                              phi_a)
    alpha = alpha_from_terms(2, 1, [((0, 1), 0)])
    return L, module, QuadCocycle(alpha, Cochain.zero(2, 3, scalar=True),
                                  module)


def _su2_modules(p: int, r: int):
    L = su2()
    ad_h = L.ad_matrices[0]
    D_l = ad_h / 2
    rho_1 = [complex_block(M) for M in
             (Matrix([[I, 0], [0, -I]]), Matrix([[0, 1], [-1, 0]]),
              Matrix([[0, I], [I, 0]]))]
    first = OrthogonalModule(
        LieModule(L, rho_1, 'C^2'), SymForm.standard(0, 4),
        EquivStructure.complex(Matrix.diag(J2, zeros(2, 2))))
    second = OrthogonalModule(
        LieModule.adjoint(L),
        -Matrix(liealg.killing_form(L).matrix),
        EquivStructure.complex(D_l))
    summands = [first] * (p - r) + [second] * r
    return L, D_l, module_sum(L, summands,
                              EquivStructure.complex(zeros(0, 0)))


def _sl2_modules(p: int, r: int):
    L = sl2()
    ad_x = L.ad_matrices[1]
    D_l = ad_x / 2
    # the standard representation on (e_1, e_2): H, X, Y
    standard = (Matrix([[1, 0], [0, -1]]), Matrix([[0, 1], [-1, 0]]),
                Matrix([[0, 1], [1, 0]]))
    rho_1 = [kronecker_product(M, eye(2)) for M in standard]
    D_1 = (kronecker_product(standard[1], eye(2)) +
           kronecker_product(eye(2), J2)) / 2
    # omega (x) omega, the sign making a_- positive
    first = OrthogonalModule(LieModule(L, rho_1, 'R^2 (x) C'),
                             kronecker_product(OMEGA, OMEGA),
                             EquivStructure.complex(D_1))
    second = OrthogonalModule(LieModule.adjoint(L),
                              Matrix(liealg.killing_form(L).matrix),
                              EquivStructure.complex(D_l))
    summands = [first] * (p - r) + [second] * r
    return L, D_l, module_sum(L, summands,
                              EquivStructure.complex(zeros(0, 0)))


def pseudo_hermitian(case: str, p: int = 0, r: int = 0,
                     c=0) -> CatalogEntry:
    """
    The indecomposable pseudo-Hermitian symmetric triples of signature
    (2, 2q) which are neither semisimple nor abelian

    Parameters
    ----------
        case: str
            '1a', '1b' (q = 1, l = C, a = R with either sign),
            '2' (q = 2, l = h(1)), '3' (l = su(2)) or '4' (l = sl(2,R))
        p: int
            cases 3 and 4, q = 1 + p
        r: int
            cases 3 and 4, 0 <= r <= p adjoint summands
        c: rational
            cases 3 and 4, gamma = c B([., .], .)

    Returns
    -------
        CatalogEntry with a complex grading

    Raises
    ------
        InvalidFamilyParameterError
    """
    case = _check_case('pseudo_hermitian', case, PSEUDO_HERMITIAN_CASES)
    params = {'case': case}
    if case in ('1a', '1b'):
        D_l = J2
        sign = 1 if case == '1a' else -1
        L, module, z = _plane_over_line(sign, D_l, 'complex')
    elif case == '2':
        L = heisenberg()
        D_l = Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
        module = OrthogonalModule(LieModule.trivial(L, 2),
                                  SymForm.standard(0, 2),
                                  EquivStructure.complex(J2))
        # alpha(z, x) = z x for z in C = span{X, Y} and x in z(l)
        alpha = alpha_from_terms(3, 2, [((0, 2), 0), ((1, 2), 1)])
        z = QuadCocycle(alpha, Cochain.zero(3, 3, scalar=True), module)
    else:
        p = nonnegative_int('pseudo_hermitian', 'p', p)
        r = nonnegative_int('pseudo_hermitian', 'r', r)
        if r > p:
            raise catalog_exceptions.InvalidFamilyParameterError(
                'pseudo_hermitian', 'r must not exceed p, got r = {} > '
                'p = {}'.format(r, p))
        c = to_rational(c)
        L, D_l, module = _su2_modules(p, r) if case == '3' else \
            _sl2_modules(p, r)
        z = QuadCocycle(Cochain.zero(3, 2, module.dim),
                        killing_cocycle(L, c), module)
        params.update(p=p, r=r, c=c)
    name = label('pseudo_hermitian', *params.values())
    w = standard_model(z, EquivStructure.complex(D_l), name)
    return entry_from_witness(w, name, params, cocycle=z)


def para_hermitian(case: str, c=0) -> CatalogEntry:
    """
    The indecomposable para-Hermitian symmetric triples of index at most
    2 which are neither semisimple nor abelian: l = R + R^* with a = R of
    either sign (cases 1, 2) and the family over sl(2,R) with a = 0
    (case 3)
    """
    case = _check_case('para_hermitian', case, PARA_HERMITIAN_CASES)
    params = {'case': case}
    if case in ('1', '2'):
        D_l = Matrix.diag(1, -1)
        L, module, z = _plane_over_line(1 if case == '1' else -1, D_l,
                                        'para_complex')
    else:
        L = sl2()
        # 1/2 ad(H), the derivative of Ad(diag(t, 1))
        D_l = L.ad_matrices[0] / 2
        c = to_rational(c)
        module = OrthogonalModule(LieModule.trivial(L, 0), SymForm.zero(0),
                                  EquivStructure.para_complex(zeros(0, 0)))
        z = QuadCocycle(Cochain.zero(3, 2, 0), killing_cocycle(L, c),
                        module)
        params['c'] = c
    name = label('para_hermitian', *params.values())
    w = standard_model(z, EquivStructure.para_complex(D_l), name)
    return entry_from_witness(w, name, params, cocycle=z)


def gm_family(m: int) -> CatalogEntry:
    """
    g(m) = C^{m+1} + R^m with basis E_i, F_i = iE_i, Z_k and brackets
    [E_i, F_j] = Z_{i+j-1}, [Z_k, E_i] = F_{i+k}, [Z_k, F_j] = -E_{k+j};
    nilpotent of nilindex 2m + 1 with abelian g(m)_+ = R^m
    """
    m = nonnegative_int('gm', 'm', m)
    n = m + 1
    E = list(range(n))
    F = list(range(n, 2 * n))
    Z = list(range(2 * n, 2 * n + m))
    names = ['E{}'.format(i + 1) for i in range(n)] + \
        ['F{}'.format(i + 1) for i in range(n)] + \
        ['Z{}'.format(k + 1) for k in range(m)]
    brackets = {}
    for i in range(n):
        for j in range(n):
            # 0-based: Z_{i+j}, F_{i+k+1}, E_{k+j+1}
            if i + j < m:
                brackets[(E[i], F[j])] = {Z[i + j]: 1}
    for k in range(m):
        for i in range(n):
            if i + k + 1 < n:
                brackets[(Z[k], E[i])] = {F[i + k + 1]: 1}
                brackets[(Z[k], F[i])] = {E[i + k + 1]: -1}
    dim = 2 * n + m
    G = zeros(dim, dim)
    for i in range(n):
        G[E[i], E[n - 1 - i]] = G[F[i], F[n - 1 - i]] = 1
    for k in range(m):
        G[Z[k], Z[m - 1 - k]] = 1
    name = label('gm', m)
    g = MetricLieAlgebra(LieAlgebra(dim, brackets, names, name),
                         SymForm(G), name).validate()
    D = zeros(dim, dim)
    for i in range(n):
        D[F[i], E[i]] = 1
        D[E[i], F[i]] = -1
    metriclie_log.info("catalog entry {} built, dimension {}"
                       "".format(name, dim))
    return CatalogEntry(name, g, EquivStructure.complex(D, name), None,
                        {'m': m})


def check_radical_nilpotent(entry: CatalogEntry) -> Check:
    """
    The solvable radical of a properly complex or para-complex graded l
    is nilpotent
    """
    L = entry.witness.l if entry.witness is not None else entry.g.alg
    rad = liealg.radical(L)
    if rad.is_zero():
        return Check.ok()
    if liealg.series(L.subalgebra(rad)).nilpotent:
        return Check.ok()
    return Check.failed('the radical of {} is not nilpotent'
                        ''.format(L.name))
