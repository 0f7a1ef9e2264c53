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
Quadratic cohomology: the cochain complex of a Lie algebra with values in
an orthogonal module, the wedge pairing, the group of quadratic
1-cochains and its action on quadratic 2-cocycles.

Conventions
-----------
(d c)(L_1, ..., L_p+1) = sum_i (-1)^(i-1) rho(L_i) c(.., ^L_i, ..)
    + sum_i<j (-1)^(i+j) c([L_i, L_j], .., ^L_i, .., ^L_j, ..)

<c1 ^ c2>(L_1, ..., L_p+q) = sum over (p, q)-shuffles s of
    sign(s) <c1(L_s1, ..., L_sp), c2(L_sp+1, ..., L_sp+q)>
"""
import logging

from functools import lru_cache
from itertools import combinations
from typing import List, NamedTuple, Optional

from sympy import (ImmutableMatrix, ImmutableSparseMatrix, Matrix, Rational,
                   eye, zeros)

from metriclie.algebra.equivar import EquivStructure, invariant_cochains
from metriclie.algebra.liealg import LieAlgebra, LieModule, is_homomorphism
from metriclie.cohomology.cochain import Cochain, sort_sign
from metriclie.exceptions import algebra_exceptions, cochain_exceptions
from metriclie.utils.decision import Check, Decision
from metriclie.utils.exactlin import SymForm, inverse, rank, solve_affine
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


class OrthogonalModule():
    """
    Representation of a Lie algebra l on a with an invariant nondegenerate
    form, optionally with an equivariant structure on a

    Parameters
    ----------
        module: LieModule
        form: SymForm or Matrix
        equiv: EquivStructure
            phi_a, optional

    Methods
    -------
    rho
    check
    validate
    invariant_projection
    trivial
    direct_sum
    """

    def __init__(self, module: LieModule, form,
                 equiv: Optional[EquivStructure] = None):
        if not isinstance(form, SymForm):
            form = SymForm(form)
        if form.dim != module.dim:
            raise algebra_exceptions.DimensionMismatchError(
                'module form', module.dim, form.dim)
        self.module = module
        self.form = form
        self.equiv = equiv

    def __str__(self):
        return "OrthogonalModule of dimension {} and signature {} over {}"\
            "".format(self.dim, tuple(self.form.signature()),
                      self.algebra.name)

    def __eq__(self, other):
        return isinstance(other, OrthogonalModule) and \
            self.module == other.module and self.form == other.form

    def __hash__(self):
        return hash((self.module, self.form))

    @property
    def algebra(self) -> LieAlgebra:
        return self.module.algebra

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def gram(self) -> Matrix:
        return Matrix(self.form.matrix)

    def rho(self, x) -> Matrix:
        return self.module.rho(x)

    def check(self) -> Check:
        """ representation, antisymmetry of every rho(e_i), nondegeneracy """
        check = self.module.check()
        if not check:
            return Check.failed('rho is not a representation on {}'
                                ''.format(check.violation))
        G = self.gram
        for i, A in enumerate(self.module.rho_matrices):
            if not (A.T * G + G * A).is_zero_matrix:
                return Check.failed('rho({}) is not antisymmetric'.format(
                    self.algebra.basis_names[i]))
        if not self.form.is_nondegenerate():
            return Check.failed('the form on a is degenerate')
        return Check.ok()

    def validate(self) -> 'OrthogonalModule':
        check = self.check()
        if not check:
            raise algebra_exceptions.NotMetricError('module',
                                                    check.violation)
        return self

    def invariant_projection(self) -> Matrix:
        """
        Projection of a onto a^l along rho(l)a

        Raises
        ------
            ModuleNotSemisimpleError: a^l and rho(l)a are not complementary
        """
        invariants = self.module.invariants()
        moving = self.module.moving_part()
        if invariants.dim + moving.dim != self.dim or \
                not (invariants & moving).is_zero():
            raise algebra_exceptions.ModuleNotSemisimpleError(
                'a^l and rho(l)a are not complementary')
        if invariants.dim == 0:
            return zeros(self.dim, self.dim)
        B = Matrix.hstack(*(invariants.vectors() + moving.vectors()))
        coordinates = inverse(B)
        P = zeros(self.dim, self.dim)
        P[:, :invariants.dim] = Matrix(invariants.basis)
        return P * coordinates

    @classmethod
    def trivial(cls, algebra: LieAlgebra, form) -> 'OrthogonalModule':
        form = form if isinstance(form, SymForm) else SymForm(form)
        return cls(LieModule.trivial(algebra, form.dim), form)

    def direct_sum(self, other: 'OrthogonalModule') -> 'OrthogonalModule':
        equiv = None
        if self.equiv is not None or other.equiv is not None:
            equiv = (self.equiv or EquivStructure.trivial(self.dim)
                     ).direct_sum(other.equiv or
                                  EquivStructure.trivial(other.dim))
        return OrthogonalModule(self.module.direct_sum(other.module),
                                self.form.direct_sum(other.form), equiv)


class QuadCocycle():
    """
    Pair (alpha, gamma) with alpha in C^2(l, a) and gamma in C^3(l)

    Parameters
    ----------
        alpha: Cochain
        gamma: Cochain
        module: OrthogonalModule

    Methods
    -------
    zero
    """

    def __init__(self, alpha: Cochain, gamma: Cochain,
                 module: OrthogonalModule):
        n = module.algebra.dim
        if (alpha.ldim, alpha.degree, alpha.vdim, alpha.scalar) != \
                (n, 2, module.dim, False):
            raise algebra_exceptions.DimensionMismatchError(
                'alpha', 'a-valued 2-cochain on {} dimensions'.format(n),
                str(alpha))
        if (gamma.ldim, gamma.degree, gamma.scalar) != (n, 3, True):
            raise algebra_exceptions.DimensionMismatchError(
                'gamma', 'scalar 3-cochain on {} dimensions'.format(n),
                str(gamma))
        self.alpha = alpha
        self.gamma = gamma
        self.module = module

    def __str__(self):
        return "QuadCocycle over {} with a of dimension {}"\
            "".format(self.module.algebra.name, self.module.dim)

    def __eq__(self, other):
        return isinstance(other, QuadCocycle) and \
            self.alpha == other.alpha and self.gamma == other.gamma and \
            self.module == other.module

    def __hash__(self):
        return hash((self.alpha, self.gamma))

    def __add__(self, other: 'QuadCocycle') -> 'QuadCocycle':
        return QuadCocycle(self.alpha + other.alpha,
                           self.gamma + other.gamma, self.module)

    @property
    def algebra(self) -> LieAlgebra:
        return self.module.algebra

    @classmethod
    def zero(cls, module: OrthogonalModule) -> 'QuadCocycle':
        n = module.algebra.dim
        return cls(Cochain.zero(n, 2, module.dim),
                   Cochain.zero(n, 3, scalar=True), module)


class QuadCochain(NamedTuple):
    """
    Element (tau, sigma) of the group of quadratic 1-cochains

    Attributes
    ----------
    tau : Cochain
        a-valued 1-cochain
    sigma : Cochain
        scalar 2-cochain
    """
    tau: Cochain
    sigma: Cochain

    @classmethod
    def zero(cls, ldim: int, vdim: int) -> 'QuadCochain':
        return cls(Cochain.zero(ldim, 1, vdim),
                   Cochain.zero(ldim, 2, scalar=True))


def _module_data(module):
    """ (algebra, rho matrices or None) for any accepted module argument """
    if isinstance(module, OrthogonalModule):
        return module.algebra, module.module.rho_matrices
    if isinstance(module, LieModule):
        return module.algebra, module.rho_matrices
    return module, None


@lru_cache(maxsize=128)
def _differential(algebra: LieAlgebra, rho_matrices, degree: int,
                  vdim: int) -> ImmutableSparseMatrix:
    n = algebra.dim
    source = {s: a for a, s in enumerate(combinations(range(n), degree))}
    targets = list(combinations(range(n), degree + 1))
    constants = algebra.structure_constants()
    rho = [A.tolist() for A in rho_matrices] if rho_matrices else None
    entries = {}

    def add(row, column, value):
        entries[(row, column)] = entries.get((row, column), 0) + value

    for t, subset in enumerate(targets):
        if rho is not None:
            for i, x in enumerate(subset):
                rest = subset[:i] + subset[i + 1:]
                s = source[rest]
                sign = (-1)**i
                for a in range(vdim):
                    for b in range(vdim):
                        if rho[x][a][b] != 0:
                            add(t * vdim + a, s * vdim + b,
                                sign * rho[x][a][b])
        for i, j in combinations(range(degree + 1), 2):
            bracket = constants.get((subset[i], subset[j]))
            if not bracket:
                continue
            rest = subset[:i] + subset[i + 1:j] + subset[j + 1:]
            for k, c in bracket.items():
                order, ordered = sort_sign((k,) + rest)
                if order == 0:
                    continue
                s = source[ordered]
                for a in range(vdim):
                    add(t * vdim + a, s * vdim + a,
                        (-1)**(i + j) * order * c)
    entries = {key: v for key, v in entries.items() if v != 0}
    return ImmutableSparseMatrix(len(targets) * vdim, len(source) * vdim,
                                 entries)


def differential_matrix(module, degree: int,
                        scalar: bool = False) -> ImmutableSparseMatrix:
    """
    Matrix of d: C^p -> C^p+1 on the coordinates of Cochain.to_vector

    Parameters
    ----------
        module: OrthogonalModule, LieModule or LieAlgebra
            a LieAlgebra (or scalar=True) means scalar cochains
        degree: int
            p
        scalar: bool
    """
    algebra, rho = _module_data(module)
    if scalar or rho is None:
        return _differential(algebra, None, degree, 1)
    vdim = module.dim
    return _differential(algebra, tuple(ImmutableMatrix(A) for A in rho),
                         degree, vdim)


def d(c: Cochain, module) -> Cochain:
    """
    Differential of a cochain

    Parameters
    ----------
        c: Cochain
        module: OrthogonalModule, LieModule or LieAlgebra
            only the algebra is used for scalar cochains

    Returns
    -------
        Cochain of degree c.degree + 1
    """
    algebra, _ = _module_data(module)
    if c.ldim != algebra.dim:
        raise algebra_exceptions.DimensionMismatchError(
            'cochain', algebra.dim, c.ldim)
    D = differential_matrix(module, c.degree, c.scalar)
    return Cochain.from_vector(c.ldim, c.degree + 1, c.vdim,
                               D * c.to_vector(), c.scalar)


def wedge(c1: Cochain, c2: Cochain, form=None) -> Cochain:
    """
    <c1 ^ c2>, the exterior product contracted with the form of a

    Parameters
    ----------
        c1, c2: Cochain
            a-valued (or both scalar, then form is not needed)
        form: SymForm or Matrix

    Returns
    -------
        scalar Cochain of degree p + q
    """
    if c1.ldim != c2.ldim or c1.scalar != c2.scalar:
        raise algebra_exceptions.DimensionMismatchError(
            'wedge factors', str(c1), str(c2))
    if c1.scalar:
        G = eye(1)
    else:
        if form is None:
            raise algebra_exceptions.DimensionMismatchError(
                'wedge', 'a form on a', 'no form')
        G = Matrix(form.matrix if isinstance(form, SymForm) else form)
        if G.rows != c1.vdim or c2.vdim != c1.vdim:
            raise algebra_exceptions.DimensionMismatchError(
                'wedge values', G.rows, (c1.vdim, c2.vdim))
    p, q = c1.degree, c2.degree
    left = [Matrix(c1.values[:, a]).T * G for a in range(c1.values.cols)]

    def value(subset):
        total = Rational(0)
        for chosen in combinations(range(p + q), p):
            S = tuple(subset[i] for i in chosen)
            T = tuple(subset[i] for i in range(p + q) if i not in chosen)
            sign, _ = sort_sign(S + T)
            pairing = (left[c1.position(S)] *
                       Matrix(c2.values[:, c2.position(T)]))[0, 0]
            total += sign * pairing
        return total

    return Cochain.from_function(c1.ldim, p + q, 1, value, scalar=True)


def _check_morphism(S: Matrix, U: Optional[Matrix], source, target):
    """ S homomorphism, U rho_2(S L) = rho_1(L) U and U isometric """
    if source is None or target is None:
        return
    source_algebra, _ = _module_data(source)
    target_algebra, _ = _module_data(target)
    check = is_homomorphism(S, source_algebra, target_algebra)
    if not check:
        raise cochain_exceptions.MorphismOfPairsError(
            'S is not a homomorphism on {}'.format(check.violation))
    if U is None or not isinstance(source, (OrthogonalModule, LieModule)):
        return
    for i in range(source_algebra.dim):
        if U * target.rho(S[:, i]) != source.rho(i) * U:
            raise cochain_exceptions.MorphismOfPairsError(
                'U does not intertwine rho on {}'.format(
                    source_algebra.basis_names[i]))
    if isinstance(source, OrthogonalModule) and \
            isinstance(target, OrthogonalModule) and \
            U.T * source.gram * U != target.gram:
        raise cochain_exceptions.MorphismOfPairsError('U is not isometric')


def pullback(c: Cochain, S, U=None, source=None, target=None) -> Cochain:
    """
    (S, U)^* c = U o c(S., ..., S.) for S: l_1 -> l_2 and U: a_2 -> a_1;
    scalar cochains are pulled back by S alone

    Parameters
    ----------
        c: Cochain
            cochain on l_2
        S: Matrix
            dim l_2 x dim l_1
        U: Matrix
            dim a_1 x dim a_2, ignored for scalar cochains
        source, target: OrthogonalModule, LieModule or LieAlgebra
            when both are given the morphism condition is verified

    Raises
    ------
        MorphismOfPairsError
    """
    S = Matrix(S)
    if S.rows != c.ldim:
        raise algebra_exceptions.DimensionMismatchError(
            'pullback map S', c.ldim, S.rows)
    U = None if c.scalar else (eye(c.vdim) if U is None else Matrix(U))
    _check_morphism(S, U, source, target)
    ldim = S.cols
    vdim = 1 if c.scalar else U.rows
    columns = [S[:, i] for i in range(ldim)]

    def value(subset):
        image = c.evaluate(*[columns[i] for i in subset])
        return image if c.scalar else U * image

    return Cochain.from_function(ldim, c.degree, vdim, value, c.scalar)


def pullback_cocycle(z: QuadCocycle, S, U,
                     source: OrthogonalModule) -> QuadCocycle:
    """ (S, U)^* applied to both components, over the source module """
    _check_morphism(Matrix(S), Matrix(U), source, z.module)
    return QuadCocycle(pullback(z.alpha, S, U), pullback(z.gamma, S),
                       source)


def c1q_compose(c1: QuadCochain, c2: QuadCochain, form) -> QuadCochain:
    """ (tau_1 + tau_2, sigma_1 + sigma_2 + 1/2 <tau_1 ^ tau_2>) """
    return QuadCochain(c1.tau + c2.tau,
                       c1.sigma + c2.sigma +
                       Rational(1, 2) * wedge(c1.tau, c2.tau, form))


def c1q_inverse(c: QuadCochain) -> QuadCochain:
    """ (-tau, -sigma), since <tau ^ tau> = 0 """
    return QuadCochain(-c.tau, -c.sigma)


def is_cocycle(alpha: Cochain, gamma: Cochain,
               module: OrthogonalModule) -> Check:
    """
    Membership in Z^2_Q: d alpha = 0 and d gamma = 1/2 <alpha ^ alpha>

    Returns
    -------
        Check whose violation names the failing equation
    """
    if not d(alpha, module).is_zero():
        return Check.failed('d alpha != 0')
    rest = d(gamma, module.algebra) - \
        Rational(1, 2) * wedge(alpha, alpha, module.form)
    if not rest.is_zero():
        return Check.failed('d gamma != 1/2 <alpha ^ alpha>')
    return Check.ok()


def _require_cocycle(z: QuadCocycle):
    check = is_cocycle(z.alpha, z.gamma, z.module)
    if not check:
        raise cochain_exceptions.NotCocycleError(check.violation)


def act(z: QuadCocycle, c: QuadCochain) -> QuadCocycle:
    """
    Right action (alpha + d tau, gamma + d sigma + <(alpha + 1/2 d tau) ^
    tau>)

    Raises
    ------
        NotCocycleError: z is not a quadratic cocycle
    """
    _require_cocycle(z)
    module = z.module
    dtau = d(c.tau, module)
    alpha = z.alpha + dtau
    gamma = z.gamma + d(c.sigma, module.algebra) + \
        wedge(z.alpha + Rational(1, 2) * dtau, c.tau, module.form)
    return QuadCocycle(alpha, gamma, module)


def _basis(ldim: int, degree: int, vdim: int, phi_l, phi_a,
           scalar: bool) -> List[Cochain]:
    if phi_l is None:
        size = Cochain.size(ldim, degree, 1 if scalar else vdim)
        return [Cochain.from_vector(ldim, degree, vdim,
                                    [1 if i == j else 0
                                     for i in range(size)], scalar)
                for j in range(size)]
    return invariant_cochains(ldim, phi_l, degree, vdim, phi_a, scalar)


def equivalent(z1: QuadCocycle, z2: QuadCocycle,
               phi_l: Optional[EquivStructure] = None,
               phi_a: Optional[EquivStructure] = None) -> Decision:
    """
    Decides whether z2 lies in the orbit of z1. With d tau = alpha_2 -
    alpha_1 the gamma condition reads d sigma + 1/2 <(alpha_1 + alpha_2)
    ^ tau> = gamma_2 - gamma_1, which is linear, so (tau, sigma) solve
    one joint linear system.

    Parameters
    ----------
        z1, z2: QuadCocycle
            over the same module
        phi_l, phi_a: EquivStructure
            when given, (tau, sigma) range over invariant cochains

    Returns
    -------
        Decision, Yes with the QuadCochain (tau, sigma) as witness

    Raises
    ------
        NotCocycleError
    """
    _require_cocycle(z1)
    _require_cocycle(z2)
    module = z1.module
    if z2.module != module:
        raise algebra_exceptions.DimensionMismatchError(
            'equivalence', str(module), str(z2.module))
    n, m = module.algebra.dim, module.dim
    if phi_a is None:
        phi_a = module.equiv
    taus = _basis(n, 1, m, phi_l, phi_a, False)
    sigmas = _basis(n, 2, 1, phi_l, None, True)
    mean = Rational(1, 2) * (z1.alpha + z2.alpha)
    alpha_rows = Cochain.size(n, 2, m)
    gamma_rows = Cochain.size(n, 3, 1)
    columns = []
    for tau in taus:
        columns.append(Matrix.vstack(
            d(tau, module).to_vector(),
            wedge(mean, tau, module.form).to_vector()))
    for sigma in sigmas:
        columns.append(Matrix.vstack(zeros(alpha_rows, 1),
                                     d(sigma, module.algebra).to_vector()))
    rhs = Matrix.vstack((z2.alpha - z1.alpha).to_vector(),
                        (z2.gamma - z1.gamma).to_vector())
    if not columns:
        return Decision.from_bool(rhs.is_zero_matrix,
                                  QuadCochain.zero(n, m))
    A = Matrix.hstack(*columns)
    metriclie_log.debug("equivalence system {} x {}".format(A.rows, A.cols))
    solution = solve_affine(A, list(rhs))
    if not solution.solvable:
        alpha_part = solve_affine(A[:alpha_rows, :len(taus)],
                                  list(rhs[:alpha_rows, :])) \
            if taus else None
        if alpha_part is not None and not alpha_part.solvable:
            return Decision.no(None, 'alpha_2 - alpha_1 is not a coboundary')
        return Decision.no(None, 'the gamma residue cannot be removed')
    x = solution.particular
    tau = Cochain.zero(n, 1, m)
    for coefficient, basis in zip(x[:len(taus), 0], taus):
        tau = tau + coefficient * basis
    sigma = Cochain.zero(n, 2, scalar=True)
    for coefficient, basis in zip(x[len(taus):, 0], sigmas):
        sigma = sigma + coefficient * basis
    return Decision.yes(QuadCochain(tau, sigma))


class DecompositionPart(NamedTuple):
    """
    Morphism of pairs (q, j): (l, a) -> (l_i, a_i) and a cocycle over
    (l_i, a_i)

    Attributes
    ----------
    q : Matrix
        dim l_i x dim l, homomorphism
    j : Matrix
        dim a x dim a_i, isometric embedding
    cocycle : QuadCocycle
        over the module a_i of l_i
    """
    q: Matrix
    j: Matrix
    cocycle: QuadCocycle


def verify_class_decomposition(z: QuadCocycle, first: DecompositionPart,
                               second: DecompositionPart,
                               phi_l: Optional[EquivStructure] = None,
                               phi_a: Optional[EquivStructure] = None
                               ) -> bool:
    """
    Verifies z ~ (q_1, j_1)^* z_1 + (q_2, j_2)^* z_2

    Raises
    ------
        DecompositionNotDirectError: the morphisms do not decompose the
        pair (l, a) non-trivially
    """
    module = z.module
    Q = Matrix.vstack(Matrix(first.q), Matrix(second.q))
    J = Matrix.hstack(Matrix(first.j), Matrix(second.j))
    if Q.rows != Q.cols or Q.rows != module.algebra.dim or Q.det() == 0:
        raise cochain_exceptions.DecompositionNotDirectError(
            'q_1 + q_2 is not an isomorphism of l')
    if J.rows != J.cols or J.rows != module.dim or \
            (J.rows and J.det() == 0):
        raise cochain_exceptions.DecompositionNotDirectError(
            'j_1 + j_2 is not an isomorphism onto a')
    if not (Matrix(first.j).T * module.gram * Matrix(second.j)).is_zero_matrix:
        raise cochain_exceptions.DecompositionNotDirectError(
            'the images of j_1 and j_2 are not orthogonal')
    for part in (first, second):
        if Matrix(part.q).rows == 0 and Matrix(part.j).cols == 0:
            raise cochain_exceptions.DecompositionNotDirectError(
                'one of the morphisms is zero')
    try:
        pulled = [pullback_cocycle(part.cocycle, part.q, part.j, module)
                  for part in (first, second)]
    except cochain_exceptions.MorphismOfPairsError as error:
        raise cochain_exceptions.DecompositionNotDirectError(
            error.violation)
    return equivalent(z, pulled[0] + pulled[1], phi_l, phi_a).is_yes


def cohomology_dimension(module, degree: int, scalar: bool = False) -> int:
    """
    dim H^p(l, a) = dim C^p - rank d_p - rank d_p-1

    Parameters
    ----------
        module: OrthogonalModule, LieModule or LieAlgebra
        degree: int
        scalar: bool
            H^p(l) with trivial coefficients
    """
    algebra, rho = _module_data(module)
    vdim = 1 if scalar or rho is None else module.dim
    size = Cochain.size(algebra.dim, degree, vdim)
    outgoing = rank(Matrix(differential_matrix(module, degree, scalar)))
    incoming = 0 if degree == 0 else \
        rank(Matrix(differential_matrix(module, degree - 1, scalar)))
    return size - outgoing - incoming


def heisenberg_basis(algebra: LieAlgebra):
    """ indices (x, y, z) of X, Y, Z in h(1) = {[X, Y] = Z} """
    names = algebra.basis_names
    indices = [names.index(n) for n in ('X', 'Y', 'Z')] \
        if all(n in names for n in ('X', 'Y', 'Z')) else [0, 1, 2]
    x, y, zz = indices
    expected = {tuple(sorted((x, y))): {zz: 1 if x < y else -1}}
    if algebra.dim != 3 or algebra.structure_constants() != expected:
        raise algebra_exceptions.DimensionMismatchError(
            'Heisenberg algebra', '{[X,Y]=Z}', str(algebra))
    return x, y, zz


def normalize_heisenberg_cocycle(z: QuadCocycle):
    """
    Over l = h(1) = {[X, Y] = Z} with a semisimple module: moves the class
    to a representative with alpha(l, l) in a^l, alpha(X, Y) = 0 and,
    when possible, gamma = 0

    Returns
    -------
        (normalized QuadCocycle, the QuadCochain that was applied)
    """
    _require_cocycle(z)
    module = z.module
    x, y, zz = heisenberg_basis(module.algebra)
    n, m = 3, module.dim
    P = module.invariant_projection()
    complement = eye(m) - P
    # alpha + d tau with values in a^l
    taus = _basis(n, 1, m, None, None, False)
    columns = [(complement * Matrix(d(tau, module).values)).reshape(
        Cochain.size(n, 2, m), 1) for tau in taus]
    rhs = -(complement * Matrix(z.alpha.values)).reshape(
        Cochain.size(n, 2, m), 1)
    solution = solve_affine(Matrix.hstack(*columns), list(rhs))
    # H(l, a) = H(l, a^l) for nilpotent l and semisimple a
    assert solution.solvable
    tau = Cochain.from_vector(n, 1, m, solution.particular)
    applied = QuadCochain(tau, Cochain.zero(n, 2, scalar=True))
    current = act(z, applied)
    shift = current.alpha.value((x, y))
    second = QuadCochain(
        Cochain.from_dict(n, 1, m, {(zz,): list(shift)}),
        Cochain.zero(n, 2, scalar=True))
    current = act(current, second)
    applied = c1q_compose(applied, second, module.form)
    target = QuadCocycle(current.alpha, Cochain.zero(n, 3, scalar=True),
                         module)
    if is_cocycle(target.alpha, target.gamma, module):
        decision = equivalent(current, target)
        if decision.is_yes:
            applied = c1q_compose(applied, decision.witness, module.form)
            current = target
    return current, applied


def is_invariant_cocycle(z: QuadCocycle, phi_l: EquivStructure,
                         phi_a: Optional[EquivStructure] = None) -> bool:
    """ alpha and gamma lie in the invariant cochain spaces """
    phi_a = phi_a or z.module.equiv
    n, m = z.algebra.dim, z.module.dim
    alphas = invariant_cochains(n, phi_l, 2, m, phi_a)
    gammas = invariant_cochains(n, phi_l, 3, scalar=True)
    return _in_span(z.alpha, alphas) and _in_span(z.gamma, gammas)


def _in_span(c: Cochain, basis: List[Cochain]) -> bool:
    if c.is_zero():
        return True
    if not basis:
        return False
    U = Subspace(len(c.to_vector()), [b.to_vector() for b in basis])
    return U.contains(c.to_vector())
