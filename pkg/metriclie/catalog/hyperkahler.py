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
Hyper-Kähler and hypersymplectic symmetric triples: the quartic
machinery (h_S, its invariance condition, tameness and the Lie algebras
g_S and g_{J,S}) and the two quaternionic standard model families with
abelian and non-abelian holonomy, each with its hypersymplectic twin.

Conventions
-----------
V = C^{2n} carries the antilinear quaternionic structure J with
J e_{2a} = e_{2a+1} and J e_{2a+1} = -e_{2a}. Complex vectors and
polynomials are stored on real coordinates (Re c_1, Im c_1, Re c_2, ...),
the same layout complex_block uses. Symmetric powers S^k V are
polynomials {exponent tuple: coefficient} in the basis vectors e_k, and
the quartic S is a polynomial of degree 4 in the coordinates of V.
The hypersymplectic twins replace the quaternionic line by R^2 with the
split quaternions acting on it and V by a real symplectic space E_0.
"""
import logging

from itertools import combinations, combinations_with_replacement, \
    permutations, product
from math import factorial, prod
from typing import Callable, Dict, List, NamedTuple, Tuple

from sympy import (I, Matrix, Rational, conjugate, expand, eye, im,
                   kronecker_product, re, sympify, zeros)

from metriclie.algebra.equivar import EquivStructure
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.algebra.metric import MetricLieAlgebra
from metriclie.catalog.basic import (CatalogEntry, abelian, complex_block,
                                     entry_from_witness, label,
                                     nonnegative_int, realify)
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import (OrthogonalModule, QuadCocycle,
                                         differential_matrix, wedge)
from metriclie.exceptions import catalog_exceptions, cochain_exceptions
from metriclie.extensions.quadext import standard_model
from metriclie.utils.decision import Check
from metriclie.utils.exactlin import (SymForm, block_diagonal, inverse,
                                      solve_affine, to_rational)
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')

OMEGA = Matrix([[0, 1], [-1, 0]])
# the split quaternions on R^2
SPLIT_I = Matrix([[0, -1], [1, 0]])
SPLIT_J = Matrix([[1, 0], [0, -1]])
SPLIT_K = Matrix([[0, 1], [1, 0]])

Polynomial = Dict[Tuple[int, ...], object]


# polynomials

def _exponent(indices, nvars: int) -> Tuple[int, ...]:
    exponent = [0] * nvars
    for index in indices:
        exponent[index] += 1
    return tuple(exponent)


def _indices(exponent) -> List[int]:
    return [k for k, e in enumerate(exponent) for _ in range(e)]


def _weight(exponent) -> int:
    """ mu! """
    return prod(factorial(e) for e in exponent)


def monomials(nvars: int, degree: int) -> List[Tuple[int, ...]]:
    """ exponents of degree-monomials, ordered as increasing index tuples """
    return [_exponent(ix, nvars) for ix in
            combinations_with_replacement(range(nvars), degree)]


def _linear(v) -> Polynomial:
    return {_exponent((k,), len(v)): c for k, c in enumerate(v) if c != 0}


def _multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    result = {}
    for (m1, c1), (m2, c2) in product(p.items(), q.items()):
        m = tuple(a + b for a, b in zip(m1, m2))
        result[m] = result.get(m, 0) + c1 * c2
    return result


def _subtract(p: Polynomial, q: Polynomial) -> Polynomial:
    result = dict(p)
    for m, c in q.items():
        result[m] = result.get(m, 0) - c
    return result


def _coefficients(p: Polynomial, basis) -> List:
    return [expand(p.get(m, 0)) for m in basis]


def _gaussian(value):
    value = sympify(value)
    return to_rational(re(value)) + I * to_rational(im(value))


def _to_real(values) -> Matrix:
    """ interleaved real coordinates of complex values """
    real = []
    for value in values:
        value = sympify(value)
        real += [to_rational(re(value)), to_rational(im(value))]
    return Matrix(real)


def _to_complex(x) -> List:
    return [x[2 * k] + I * x[2 * k + 1] for k in range(len(x) // 2)]


def _unit_complex(i: int, nvars: int) -> List:
    """ the complex vector of the i-th real basis vector of V """
    v = [0] * nvars
    v[i // 2] = 1 if i % 2 == 0 else I
    return v


def j_matrix(nvars: int, degree: int) -> Matrix:
    """
    Real matrix of the structure induced by J on S^degree V,
    J(c x^mu) = conj(c) (J e)^mu
    """
    basis = monomials(nvars, degree)
    position = {m: a for a, m in enumerate(basis)}
    R = zeros(2 * len(basis), 2 * len(basis))
    for a, mu in enumerate(basis):
        swapped = tuple(mu[k ^ 1] for k in range(nvars))
        sign = (-1) ** sum(mu[1::2])
        b = position[swapped]
        R[2 * b, 2 * a] = sign
        R[2 * b + 1, 2 * a + 1] = -sign
    return R


def complex_unit(size: int) -> Matrix:
    """ multiplication by i on interleaved coordinates of C^size """
    return complex_block(I * eye(size))


def _induced_form(pairing: Matrix, basis) -> Matrix:
    """
    Form induced on symmetric monomials by a pairing of the variables,
    <x^mu, x^nu> = sum over matchings of the products of pairings
    """
    indices = [_indices(m) for m in basis]
    G = zeros(len(basis), len(basis))
    for a, b in product(range(len(basis)), repeat=2):
        G[a, b] = sum(prod(pairing[i, j] for i, j in zip(indices[a], perm))
                      for perm in permutations(indices[b]))
    return G


def standard_omega(m: int) -> Matrix:
    """ omega = [[0, 1], [-1, 0]] in blocks of size m """
    return Matrix([[zeros(m, m), eye(m)], [-eye(m), zeros(m, m)]])


# quartics

def quartic(S, nvars: int, family: str = 'quartic') -> Polynomial:
    """
    Parses a quartic {exponent tuple: coefficient}, coefficients Gaussian
    rationals

    Raises
    ------
        InvalidFamilyParameterError
    """
    result = {}
    for key, value in dict(S).items():
        try:
            exponent = tuple(int(e) for e in key)
            value = _gaussian(value)
        except Exception as error:
            raise catalog_exceptions.InvalidFamilyParameterError(
                family, 'unreadable quartic term {}: {}'.format(key, error))
        if len(exponent) != nvars or sum(exponent) != 4 or \
                min(exponent) < 0:
            raise catalog_exceptions.InvalidFamilyParameterError(
                family, '{} is not a quartic exponent in {} variables'
                ''.format(key, nvars))
        if value != 0:
            result[exponent] = result.get(exponent, 0) + value
    return result


def s_lambda(lam=1, nvars: int = 2) -> Polynomial:
    """ x_1^4 + lam x_1^2 x_2^2 + x_2^4 in the first two variables """
    def term(a, b):
        return (a, b) + (0,) * (nvars - 2)
    return {term(4, 0): 1, term(2, 2): to_rational(lam), term(0, 4): 1}


def is_tau_invariant(S: Polynomial, n: int) -> bool:
    """ S(J v) = conj(S(v)) on V = C^{2n} """
    image = {}
    for mu, c in S.items():
        swapped = tuple(mu[k ^ 1] for k in range(2 * n))
        image[swapped] = (-1) ** sum(mu[0::2]) * conjugate(c)
    return all(expand(image.get(m, 0) - S.get(m, 0)) == 0
               for m in set(image) | set(S))


def quartic_tensor(S: Polynomial, nvars: int) -> Dict[Tuple[int, ...],
                                                       object]:
    """ the symmetric 4-tensor T with S = sum T_abcd x_a x_b x_c x_d """
    T = {}
    for ix in product(range(nvars), repeat=4):
        mu = _exponent(ix, nvars)
        if mu in S:
            T[ix] = S[mu] * Rational(_weight(mu), 24)
    return T


def _pair_form(S: Polynomial, basis) -> Matrix:
    """ b_S(x^mu, x^nu) = T on the concatenated indices """
    nvars = len(basis[0]) if basis else 0
    B = zeros(len(basis), len(basis))
    for a, b in product(range(len(basis)), repeat=2):
        mu = tuple(x + y for x, y in zip(basis[a], basis[b]))
        if mu in S:
            B[a, b] = S[mu] * Rational(_weight(mu), 24)
    return B if nvars else zeros(0, 0)


def _complex_gram(B: Matrix) -> Matrix:
    """ real part of a complex bilinear form on interleaved coordinates """
    G = zeros(2 * B.rows, 2 * B.cols)
    for a, b in product(range(B.rows), range(B.cols)):
        value = sympify(B[a, b])
        x, y = to_rational(re(value)), to_rational(im(value))
        G[2 * a, 2 * b] = x
        G[2 * a, 2 * b + 1] = G[2 * a + 1, 2 * b] = -y
        G[2 * a + 1, 2 * b + 1] = -x
    return G


class QuotientData(NamedTuple):
    """
    A space of vectors modulo the radical of a form: project maps an
    ambient vector of the space to quotient coordinates
    """
    project: Callable
    form: SymForm


def nondegenerate_quotient(space: Subspace, G: Matrix) -> QuotientData:
    if space.dim == 0:
        return QuotientData(lambda x: zeros(0, 1), SymForm.zero(0))
    F = Matrix(space.basis)
    Gf = F.T * G * F
    rad = Subspace.kernel(Gf)
    complement = rad.complement_in(Subspace.whole(space.dim))
    k = len(complement)
    if k == 0:
        return QuotientData(lambda x: zeros(0, 1), SymForm.zero(0))
    W = Matrix.hstack(*complement)
    Q = inverse(Matrix.hstack(*(complement + rad.vectors())))[:k, :]
    return QuotientData(lambda x: Q * space.coordinates(x),
                        SymForm(W.T * Gf * W))


# the Lie algebras h_S, g_S and g_{J,S} on E = K^{2m} with omega

def contraction(T, v, w, m: int) -> Matrix:
    """
    S_{v,w} in sp(E, omega): the endomorphism A with
    omega(A x, y) = T(omega(v, .), omega(w, .), omega(x, .), omega(y, .))
    """
    Omega = standard_omega(m)
    xi, eta = Omega.T * Matrix(v), Omega.T * Matrix(w)
    M = zeros(2 * m, 2 * m)
    for (a, b, c, e), value in T.items():
        M[c, e] += value * xi[a] * eta[b]
    return M * Omega


def act(A: Matrix, T) -> Dict:
    """ the derivative action of A in gl(E) on a 4-tensor """
    result = {}
    for ix, value in T.items():
        for slot in range(4):
            for a in range(A.rows):
                if A[a, ix[slot]] != 0:
                    target = ix[:slot] + (a,) + ix[slot + 1:]
                    result[target] = result.get(target, 0) + \
                        A[a, ix[slot]] * value
    return {ix: v for ix, v in result.items() if expand(v) != 0}


class HolonomyGenerator(NamedTuple):
    """ S_{e_a, e_b} with its index pair """
    pair: Tuple[int, int]
    matrix: Matrix


def _flatten(A: Matrix) -> Matrix:
    return complex_block(A).reshape(4 * A.rows * A.cols, 1)


def hs_span(S: Polynomial, m: int) -> List[HolonomyGenerator]:
    """
    A basis of h_S = span{S_{v,w}} over the field of the coefficients of
    S, chosen among the S_{e_a, e_b}
    """
    T = quartic_tensor(S, 2 * m)
    unit = eye(2 * m)
    chosen = Subspace.zero(16 * m * m)
    basis = []
    for a, b in combinations_with_replacement(range(2 * m), 2):
        A = contraction(T, unit[:, a], unit[:, b], m)
        grown = chosen + Subspace(chosen.ambient_dim,
                                  [_flatten(A), _flatten(I * A)])
        if grown.dim > chosen.dim:
            chosen = grown
            basis.append(HolonomyGenerator((a, b), A))
    return basis


def check_quartic_invariance(S: Polynomial, m: int) -> Check:
    """ h_S annihilates S """
    T = quartic_tensor(S, 2 * m)
    for generator in hs_span(S, m):
        image = act(generator.matrix, T)
        if image:
            return Check.failed('S_{{e{}, e{}}} moves S'.format(
                *(k + 1 for k in generator.pair)))
    return Check.ok()


def hs_is_abelian(S: Polynomial, m: int) -> bool:
    basis = [g.matrix for g in hs_span(S, m)]
    return all((A * B - B * A).is_zero_matrix
               for A, B in combinations(basis, 2))


def is_tame_witness(S: Polynomial, m: int, Eplus) -> Check:
    """
    E_+ (columns) is Lagrangian and S lies in S^4 E_+, that is every
    covector annihilating E_+ contracts S to zero
    """
    E = Matrix(Eplus)
    if E.rows != 2 * m or E.rank() != m:
        return Check.failed('E_+ is not of dimension {}'.format(m))
    if not (E.T * standard_omega(m) * E).is_zero_matrix:
        return Check.failed('E_+ is not isotropic')
    T = quartic_tensor(S, 2 * m)
    for eta in Subspace.kernel(E.T).vectors():
        contracted = {}
        for (a, b, c, e), value in T.items():
            contracted[(b, c, e)] = contracted.get((b, c, e), 0) + \
                eta[a] * value
        if any(expand(v) != 0 for v in contracted.values()):
            return Check.failed('S has a component outside S^4 E_+')
    return Check.ok()


def _solve(basis: List[Matrix], target: Matrix) -> List:
    """ complex coordinates of target in the span of basis """
    columns = [_flatten(B) for B in basis] + \
        [_flatten(I * B) for B in basis]
    solution = solve_affine(Matrix.hstack(*columns), list(_flatten(target)))
    if not solution.solvable:
        raise catalog_exceptions.InvalidFamilyParameterError(
            'g_S', 'h_S is not closed, the quartic is not invariant')
    x = solution.particular
    k = len(basis)
    return [x[a] + I * x[k + a] for a in range(k)]


def _gs_structure(S: Polynomial, m: int):
    """ structure constants and form of g_S = h_S + K^2 (x) E """
    check = check_quartic_invariance(S, m)
    if not check:
        raise catalog_exceptions.InvalidFamilyParameterError(
            'g_S', check.violation)
    T = quartic_tensor(S, 2 * m)
    generators = hs_span(S, m)
    basis = [g.matrix for g in generators]
    h = len(basis)
    size = 2 * m
    Omega = standard_omega(m)
    unit = eye(size)

    def v_index(r, a):
        return h + r * size + a

    brackets = {}

    def add(i, j, values):
        values = {k: c for k, c in values.items() if expand(c) != 0}
        if values:
            brackets[(i, j)] = values

    for a, b in combinations(range(h), 2):
        add(a, b, dict(enumerate(
            _solve(basis, basis[a] * basis[b] - basis[b] * basis[a]))))
    for k, A in enumerate(basis):
        for r, a in product(range(2), range(size)):
            add(k, v_index(r, a),
                {v_index(r, c): A[c, a] for c in range(size)})
    for (r, a), (s, b) in combinations(list(product(range(2),
                                                    range(size))), 2):
        if OMEGA[r, s] == 0:
            continue
        S_ab = contraction(T, unit[:, a], unit[:, b], m)
        add(v_index(r, a), v_index(s, b),
            {k: OMEGA[r, s] * c for k, c in
             enumerate(_solve(basis, S_ab))})
    G = zeros(h + 2 * size, h + 2 * size)
    for k, l in product(range(h), repeat=2):
        a, b = generators[l].pair
        G[k, l] = ((basis[k] * unit[:, a]).T * Omega * unit[:, b])[0, 0]
    G[h:, h:] = kronecker_product(OMEGA, Omega)
    names = ['A{}'.format(k + 1) for k in range(h)] + \
        ['{}{}'.format(p, a + 1) for p in 'pq' for a in range(size)]
    return brackets, G, names, h


def build_gJS(S, m: int, quaternionic: bool = False,
              name: str = '') -> CatalogEntry:
    """
    The symmetric triple g_S = h_S + R^2 (x) E (split real form, with
    the hypersymplectic grading) or, with quaternionic=True, the real
    form g_{J,S} = (h_S + H (x) E)^tau for E = C^{2m} with J, m even

    Parameters
    ----------
        S: dict
            quartic on E, invariant under h_S
        m: int
            E has dimension 2m
        quaternionic: bool

    Raises
    ------
        InvalidFamilyParameterError: S is not a quartic in 2m variables,
        violates the invariance condition, or (quaternionic) is not tau
        invariant or m is odd
    """
    family = 'g_JS' if quaternionic else 'g_S'
    m = nonnegative_int(family, 'm', m)
    S = quartic(S, 2 * m, family)
    name = name or label(family, m)
    if not quaternionic:
        if any(im(c) != 0 for c in S.values()):
            raise catalog_exceptions.InvalidFamilyParameterError(
                family, 'the split form needs a real quartic')
        brackets, G, names, h = _gs_structure(S, m)
        g = MetricLieAlgebra(LieAlgebra(G.rows, brackets, names, name),
                             SymForm(G), name).validate()
        size = 2 * m

        def lift(A):
            return block_diagonal(zeros(h, h),
                                  kronecker_product(A, eye(size)))

        phi = EquivStructure.para_quaternionic(lift(SPLIT_I), lift(SPLIT_J),
                                               lift(SPLIT_K))
        return CatalogEntry(name, g, phi, None, {'m': m, 'S': S},
                            {'hs_dim': h})
    if m % 2:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, 'J needs m even, got {}'.format(m))
    if not is_tau_invariant(S, m):
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, 'S is not invariant under the real structure')
    brackets, G, names, h = _gs_structure(S, m)
    N = G.rows
    complex_g = realify(N, brackets, G, names, name + ' complexified')
    size = 2 * m
    # J_E = P conj on E
    P = zeros(size, size)
    for a in range(0, size, 2):
        P[a + 1, a], P[a, a + 1] = 1, -1
    basis = [g.matrix for g in hs_span(S, m)]
    tau = zeros(N, N)
    for k, A in enumerate(basis):
        image = -P * A.applyfunc(conjugate) * P
        for l, c in enumerate(_solve(basis, image)):
            tau[l, k] = c
    tau[h:, h:] = kronecker_product(P, P)
    R = Matrix([[tau.applyfunc(re), tau.applyfunc(im)],
                [tau.applyfunc(im), -tau.applyfunc(re)]])
    fixed = Subspace.kernel(R - eye(2 * N))
    alg = complex_g.alg.subalgebra(fixed)
    g = MetricLieAlgebra(alg, complex_g.form.restrict(Matrix(fixed.basis)),
                         name).validate()

    def lift(A):
        D = block_diagonal(zeros(h, h), kronecker_product(A, eye(size)))
        real = Matrix([[D.applyfunc(re), -D.applyfunc(im)],
                       [D.applyfunc(im), D.applyfunc(re)]])
        return fixed.restrict_operator(real)

    phi = EquivStructure.quaternionic(
        lift(Matrix([[I, 0], [0, -I]])), lift(SPLIT_I),
        lift(Matrix([[0, -I], [-I, 0]])))
    metriclie_log.info("{} of dimension {} built from h_S of complex "
                       "dimension {}".format(name, g.dim, h))
    return CatalogEntry(name, g, phi, None, {'m': m, 'S': S},
                        {'hs_dim': h})


# standard model families

def _positive(family: str, name: str, value) -> int:
    value = nonnegative_int(family, name, value)
    if value == 0:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, '{} must be positive'.format(name))
    return value


def _twin_components(i: int, nvars: int) -> List[List]:
    """ the i-th basis vector of R^2 (x) E_0 as its two E_0 components """
    r, a = divmod(i, nvars)
    components = [[0] * nvars, [0] * nvars]
    components[r][a] = 1
    return components


def _quaternionic_phi(nvars: int) -> EquivStructure:
    C, J = complex_unit(nvars), j_matrix(nvars, 1)
    return EquivStructure.quaternionic(-C, -J, C * J)


def _split_phi(nvars: int) -> EquivStructure:
    return EquivStructure.para_quaternionic(
        *(kronecker_product(A, eye(nvars))
          for A in (SPLIT_I, SPLIT_J, SPLIT_K)))


def _zero_phi(dim: int, hypersymplectic: bool) -> EquivStructure:
    zero = zeros(dim, dim)
    if hypersymplectic:
        return EquivStructure.para_quaternionic(zero, zero, zero)
    return EquivStructure.quaternionic(zero, zero, zero)


def hk_abelian_holonomy(n: int = 1, S=None, hypersymplectic: bool = False,
                        name: str = '') -> CatalogEntry:
    """
    Standard model d_{alpha_S, 0}(H^n, a_S) with abelian l = H^n and
    alpha(v, w) = v Jw - w Jv in a_S = (S^2 V)^tau / rad(b_S), b_S the
    polarization of the quartic S. The hypersymplectic twin uses
    l = R^2 (x) E_0, alpha(x, y) = x_1 y_2 - x_2 y_1 and a_S = S^2 E_0 /
    rad(b_S).

    Parameters
    ----------
        n: int
        S: dict
            quartic on V (tau invariant) or on E_0, default
            x_1^4 + x_1^2 x_2^2 + x_2^4
        hypersymplectic: bool

    Raises
    ------
        InvalidFamilyParameterError
    """
    family = 'hs_abelian' if hypersymplectic else 'hk_abelian'
    n = _positive(family, 'n', n)
    nvars = 2 * n
    S = quartic(s_lambda(1, nvars) if S is None else S, nvars, family)
    basis2 = monomials(nvars, 2)
    B = _pair_form(S, basis2)
    if hypersymplectic:
        if any(im(c) != 0 for c in S.values()):
            raise catalog_exceptions.InvalidFamilyParameterError(
                family, 'the quartic must be real')
        quotient = nondegenerate_quotient(Subspace.whole(len(basis2)), B)

        def value(i, j):
            x, y = _twin_components(i, nvars), _twin_components(j, nvars)
            poly = _subtract(_multiply(_linear(x[0]), _linear(y[1])),
                             _multiply(_linear(x[1]), _linear(y[0])))
            return quotient.project(Matrix(_coefficients(poly, basis2)))

        phi_l = _split_phi(nvars)
    else:
        if not is_tau_invariant(S, n):
            raise catalog_exceptions.InvalidFamilyParameterError(
                family, 'S is not invariant under J')
        fixed = Subspace.kernel(j_matrix(nvars, 2) - eye(2 * len(basis2)))
        quotient = nondegenerate_quotient(fixed, _complex_gram(B))

        def value(i, j):
            v, w = _unit_complex(i, nvars), _unit_complex(j, nvars)
            Jv = _to_complex(j_matrix(nvars, 1) * _to_real(v))
            Jw = _to_complex(j_matrix(nvars, 1) * _to_real(w))
            poly = _subtract(_multiply(_linear(v), _linear(Jw)),
                             _multiply(_linear(w), _linear(Jv)))
            return quotient.project(_to_real(_coefficients(poly, basis2)))

        phi_l = _quaternionic_phi(nvars)
    L = abelian(2 * nvars, 'v')
    k = quotient.form.matrix.rows
    module = OrthogonalModule(LieModule.trivial(L, k), quotient.form,
                              _zero_phi(k, hypersymplectic))
    alpha = Cochain.from_function(L.dim, 2, k, lambda s: value(*s))
    z = QuadCocycle(alpha, Cochain.zero(L.dim, 3, scalar=True), module)
    name = name or label(family, n)
    w = standard_model(z, phi_l, name)
    return entry_from_witness(w, name, {'n': n, 'S': S}, cocycle=z)


def solve_plus_gamma(alpha: Cochain, module: OrthogonalModule,
                     indices) -> Cochain:
    """
    The 3-form gamma supported on the given indices with
    d gamma = 1/2 <alpha ^ alpha>

    Raises
    ------
        QuadraticExtensionError: no such gamma exists
    """
    L = module.algebra
    target = Rational(1, 2) * wedge(alpha, alpha, module.form)
    subsets = list(combinations(indices, 3))
    if not subsets:
        if target.is_zero():
            return Cochain.zero(L.dim, 3, scalar=True)
        raise cochain_exceptions.QuadraticExtensionError(
            '<alpha ^ alpha> is not exact')
    D = differential_matrix(L, 3, scalar=True)
    position = Cochain.zero(L.dim, 3, scalar=True).position
    A = Matrix.hstack(*(Matrix(D[:, position(s)]) for s in subsets))
    solution = solve_affine(A, list(target.to_vector()))
    if not solution.solvable:
        raise cochain_exceptions.QuadraticExtensionError(
            '<alpha ^ alpha> is not the differential of a 3-form on the '
            'given span')
    return Cochain.from_dict(L.dim, 3, 1,
                             dict(zip(subsets, solution.particular)),
                             scalar=True)


def hk_nonabelian_holonomy(n: int = 1, p: int = 0,
                           hypersymplectic: bool = False,
                           name: str = '') -> CatalogEntry:
    """
    Standard model d_{alpha, gamma}(l, a) with l = l_- + l_+,
    l_- = H^n, central l_+ = (S^2 V)^tau, [v, w] = v Jw - w Jv,
    a = S^3 V with the real part of the Hermitian form of signature
    (2p, 2(n - p)) induced from V, alpha(v, L) = v L and gamma the
    3-form on l_+ solving the cocycle condition.

    The hypersymplectic twin (p is then ignored) uses l_- = R^2 (x) E_0,
    l_+ = S^2 E_0, [x, y] = x_1 y_2 - x_2 y_1, a = R^2 (x) S^3 E_0 with
    omega (x) omega_3 and alpha(x, L) = e_1 (x) x_1 L + e_2 (x) x_2 L.

    Raises
    ------
        InvalidFamilyParameterError, QuadraticExtensionError
    """
    family = 'hs_nonabelian' if hypersymplectic else 'hk_nonabelian'
    n = _positive(family, 'n', n)
    p = nonnegative_int(family, 'p', p)
    if p > n:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, 'p must lie in [0, n], got {}'.format(p))
    nvars = 2 * n
    basis2, basis3 = monomials(nvars, 2), monomials(nvars, 3)
    minus = 2 * nvars
    brackets, values = {}, {}
    if hypersymplectic:
        plus = len(basis2)
        plus_polys = [{m: 1} for m in basis2]
        for i, j in combinations(range(minus), 2):
            x, y = _twin_components(i, nvars), _twin_components(j, nvars)
            poly = _subtract(_multiply(_linear(x[0]), _linear(y[1])),
                             _multiply(_linear(x[1]), _linear(y[0])))
            brackets[(i, j)] = {minus + k: c for k, c in
                                enumerate(_coefficients(poly, basis2))
                                if c != 0}
        for i, k in product(range(minus), range(plus)):
            x = _twin_components(i, nvars)
            values[(i, minus + k)] = Matrix.vstack(*(
                Matrix(_coefficients(_multiply(_linear(x[r]),
                                               plus_polys[k]), basis3))
                for r in range(2)))
        G = kronecker_product(OMEGA, _induced_form(standard_omega(n),
                                                   basis3))
        phi_a = _split_phi(len(basis3))
        phi_minus = _split_phi(nvars)
    else:
        J1 = j_matrix(nvars, 1)
        fixed = Subspace.kernel(j_matrix(nvars, 2) - eye(2 * len(basis2)))
        plus = fixed.dim
        plus_polys = [dict(zip(basis2, _to_complex(F)))
                      for F in fixed.vectors()]
        for i, j in combinations(range(minus), 2):
            v, w = _unit_complex(i, nvars), _unit_complex(j, nvars)
            Jv, Jw = (_to_complex(J1 * _to_real(u)) for u in (v, w))
            poly = _subtract(_multiply(_linear(v), _linear(Jw)),
                             _multiply(_linear(w), _linear(Jv)))
            coordinates = fixed.coordinates(
                _to_real(_coefficients(poly, basis2)))
            brackets[(i, j)] = {minus + k: c for k, c in
                                enumerate(coordinates) if c != 0}
        for i, k in product(range(minus), range(plus)):
            v = _unit_complex(i, nvars)
            values[(i, minus + k)] = _to_real(_coefficients(
                _multiply(_linear(v), plus_polys[k]), basis3))
        signs = Matrix.diag(*([-1] * (2 * p) + [1] * (nvars - 2 * p)))
        G = kronecker_product(_induced_form(signs, basis3), eye(2))
        C3, J3 = complex_unit(len(basis3)), j_matrix(nvars, 3)
        phi_a = EquivStructure.quaternionic(-C3, -J3, C3 * J3)
        phi_minus = _quaternionic_phi(nvars)
    brackets = {ij: v for ij, v in brackets.items() if v}
    names = ['v{}'.format(i + 1) for i in range(minus)] + \
        ['L{}'.format(k + 1) for k in range(plus)]
    name = name or (label(family, n) if hypersymplectic
                    else label(family, n, p))
    L = LieAlgebra(minus + plus, brackets, names, 'l ' + name)

    def extend(A):
        return block_diagonal(A, zeros(plus, plus))

    phi_l = EquivStructure(
        L.dim, {k: extend(A) for k, A in phi_minus.derivations.items()},
        {'theta': block_diagonal(-eye(minus), eye(plus))},
        phi_minus.relations, phi_minus.preset)
    module = OrthogonalModule(LieModule.trivial(L, G.rows), SymForm(G),
                              phi_a)
    alpha = Cochain.from_dict(L.dim, 2, G.rows, values)
    gamma = solve_plus_gamma(alpha, module, range(minus, minus + plus))
    z = QuadCocycle(alpha, gamma, module)
    w = standard_model(z, phi_l, name)
    params = {'n': n} if hypersymplectic else {'n': n, 'p': p}
    return entry_from_witness(w, name, params, cocycle=z)
