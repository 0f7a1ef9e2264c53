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
Lie algebras given by structure constants, their representations and the
radical, socle and semisimplification machinery built on them.

Conventions
-----------
The bracket of basis vectors is [e_i, e_j] = sum_k c_ij^k e_k and the
matrix ad(e_i) has entry (k, j) equal to c_ij^k, so that ad(x) y = [x, y]
for column vectors x, y.
"""
import logging

from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, Matrix, Rational, zeros

from metriclie.exceptions import algebra_exceptions
from metriclie.utils.decision import Check, Decision
from metriclie.utils.exactlin import (LinearSystem, SymForm, block_diagonal,
                                      evaluate_polynomial, inverse,
                                      minimal_polynomial, nullspace,
                                      solve_affine, squarefree_part,
                                      spectral_idempotents, to_rational,
                                      unit_vector)
from metriclie.utils.settings import Settings
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


def _as_vector(x, dim: int) -> Matrix:
    """ basis index or coordinate sequence to a column vector """
    if isinstance(x, int):
        return unit_vector(dim, x)
    x = Matrix(x)
    if len(x) != dim:
        raise algebra_exceptions.DimensionMismatchError('vector', dim, len(x))
    return x.reshape(dim, 1)


class LieAlgebra():
    """
    Finite dimensional Lie algebra over Q given by sparse structure
    constants

    Parameters
    ----------
        dim: int
            dimension
        brackets: dict
            {(i, j): {k: c_ij^k}}, only one of (i, j) and (j, i) needs to
            be given, missing pairs are zero
        basis_names: list of str
            names of the basis vectors, default e0, e1, ...
        name: str
            label used in messages and documents

    Methods
    -------
    bracket
    ad
    structure_constants
    validate
    direct_sum
    permuted
    subalgebra
    quotient
    abelian
    from_names
    """

    def __init__(self, dim: int, brackets: Dict = None,
                 basis_names: Sequence[str] = None, name: str = ''):
        self.dim = dim
        self.name = name
        if basis_names is None:
            basis_names = ['e{}'.format(i) for i in range(dim)]
        if len(basis_names) != dim:
            raise algebra_exceptions.DimensionMismatchError(
                'basis names of {}'.format(name), dim, len(basis_names))
        self.basis_names = tuple(basis_names)
        table: Dict[Tuple[int, int], Dict[int, Rational]] = {}
        for (i, j), values in (brackets or {}).items():
            for index in (i, j, *values.keys()):
                if not 0 <= index < dim:
                    raise algebra_exceptions.DimensionMismatchError(
                        'basis index of {}'.format(name), dim, index)
            values = {k: to_rational(c) for k, c in values.items()
                      if to_rational(c) != 0}
            if i == j:
                if values:
                    raise algebra_exceptions.AntisymmetryError(i, j)
                continue
            key, sign = ((i, j), 1) if i < j else ((j, i), -1)
            values = {k: sign * c for k, c in values.items()}
            if key in table and table[key] != values:
                raise algebra_exceptions.AntisymmetryError(i, j)
            if values:
                table[key] = values
        self._table = table
        ads = [zeros(dim, dim) for _ in range(dim)]
        for (i, j), values in table.items():
            for k, c in values.items():
                ads[i][k, j] = c
                ads[j][k, i] = -c
        self.ad_matrices = tuple(ImmutableMatrix(A) for A in ads)

    def __str__(self):
        return "LieAlgebra {} of dimension {} with basis {}"\
            "".format(self.name, self.dim, ', '.join(self.basis_names))

    def __repr__(self):
        return "LieAlgebra({}, {})".format(self.dim,
                                           self.structure_constants())

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.dim == other.dim and \
            self._table == other._table

    def __hash__(self):
        return hash((self.dim, tuple(sorted(
            (key, tuple(sorted(v.items())))
            for key, v in self._table.items()))))

    @classmethod
    def from_names(cls, basis_names: Sequence[str], table: Dict,
                   name: str = '') -> 'LieAlgebra':
        """
        Builds an algebra from brackets written with basis names,
        e.g. {('X', 'Y'): {'Z': 1}} for the Heisenberg algebra
        """
        index = {n: i for i, n in enumerate(basis_names)}
        brackets = {(index[a], index[b]): {index[k]: c
                                           for k, c in values.items()}
                    for (a, b), values in table.items()}
        return cls(len(basis_names), brackets, basis_names, name)

    @classmethod
    def from_ad(cls, ad_matrices: Sequence[Matrix],
                basis_names: Sequence[str] = None,
                name: str = '') -> 'LieAlgebra':
        """ algebra whose ad(e_i) are the given matrices """
        dim = len(ad_matrices)
        brackets = {}
        for i, j in combinations(range(dim), 2):
            column = Matrix(ad_matrices[i])[:, j]
            values = {k: column[k] for k in range(dim) if column[k] != 0}
            if values:
                brackets[(i, j)] = values
        return cls(dim, brackets, basis_names, name)

    @classmethod
    def abelian(cls, dim: int, basis_names: Sequence[str] = None,
                name: str = '') -> 'LieAlgebra':
        return cls(dim, {}, basis_names, name or 'R^{}'.format(dim))

    def structure_constants(self) -> Dict[Tuple[int, int],
                                          Dict[int, Rational]]:
        """ {(i, j): {k: c_ij^k}} for i < j with nonzero entries only """
        return {key: dict(values) for key, values in sorted(
            self._table.items())}

    def index(self, name: str) -> int:
        return self.basis_names.index(name)

    def vector(self, x) -> Matrix:
        """ vector from an index, a basis name or coordinates """
        if isinstance(x, str):
            return unit_vector(self.dim, self.index(x))
        return _as_vector(x, self.dim)

    def ad(self, x) -> Matrix:
        if isinstance(x, int):
            return Matrix(self.ad_matrices[x])
        x = self.vector(x)
        result = zeros(self.dim, self.dim)
        for i in range(self.dim):
            if x[i] != 0:
                result += x[i] * self.ad_matrices[i]
        return result

    def bracket(self, x, y) -> Matrix:
        return self.ad(x) * self.vector(y)

    def is_abelian(self) -> bool:
        return len(self._table) == 0

    def validate(self):
        """
        Raises
        ------
            JacobiIdentityError: the Jacobi identity fails on a basis triple
        """
        check = check_jacobi(self)
        if not check:
            raise algebra_exceptions.JacobiIdentityError(self.name,
                                                         check.violation)
        return self

    def direct_sum(self, other: 'LieAlgebra',
                   name: str = '') -> 'LieAlgebra':
        """ self + other with the basis of self first """
        n = self.dim
        brackets = dict(self._table)
        for (i, j), values in other._table.items():
            brackets[(n + i, n + j)] = {n + k: c for k, c in values.items()}
        names = [*self.basis_names, *other.basis_names]
        if len(set(names)) < len(names):
            names = ['{}_1'.format(a) for a in self.basis_names] + \
                ['{}_2'.format(b) for b in other.basis_names]
        return LieAlgebra(n + other.dim, brackets, names,
                          name or '{}+{}'.format(self.name, other.name))

    def permuted(self, order: Sequence[int]) -> 'LieAlgebra':
        """ the same algebra with new basis f_a = e_order[a] """
        position = {old: new for new, old in enumerate(order)}
        brackets = {(position[i], position[j]):
                    {position[k]: c for k, c in values.items()}
                    for (i, j), values in self._table.items()}
        return LieAlgebra(self.dim, brackets,
                          [self.basis_names[i] for i in order], self.name)

    def change_basis(self, B: Matrix,
                     basis_names: Sequence[str] = None) -> 'LieAlgebra':
        """ structure constants in the basis given by the columns of B """
        sub = Subspace(self.dim, [B[:, a] for a in range(B.cols)])
        if sub.dim != self.dim or B.cols != self.dim:
            raise algebra_exceptions.DimensionMismatchError(
                'change of basis', 'invertible matrix', B.shape)
        return _structure_on(self, B, basis_names, self.name)

    def subalgebra(self, U: Subspace,
                   basis_names: Sequence[str] = None) -> 'LieAlgebra':
        """ the subalgebra U (checked to be closed) in its echelon basis """
        if not is_subalgebra(self, U):
            raise algebra_exceptions.DimensionMismatchError(
                'subalgebra', 'subspace closed under the bracket',
                'non-closed subspace')
        return _structure_on(self, Matrix(U.basis), basis_names,
                             '{} subalgebra'.format(self.name))

    def quotient(self, ideal: Subspace, basis_names: Sequence[str] = None):
        """
        Quotient algebra by an ideal

        Returns
        -------
            (quotient LieAlgebra, projection matrix, complement vectors
            whose classes form the basis of the quotient)
        """
        if not is_ideal(self, ideal):
            raise algebra_exceptions.DimensionMismatchError(
                'quotient', 'ideal', 'subspace which is not an ideal')
        whole = Subspace.whole(self.dim)
        complement = ideal.complement_in(whole)
        m = len(complement)
        full = Matrix.hstack(*(ideal.vectors() + complement)) if self.dim \
            else zeros(0, 0)
        coordinates = inverse(full) if self.dim else zeros(0, 0)
        projection = coordinates[ideal.dim:, :] if m else zeros(0, self.dim)
        brackets = {}
        for a, b in combinations(range(m), 2):
            image = projection * self.bracket(complement[a], complement[b])
            values = {k: image[k] for k in range(m) if image[k] != 0}
            if values:
                brackets[(a, b)] = values
        if basis_names is None:
            basis_names = ['q{}'.format(a) for a in range(m)]
        quotient = LieAlgebra(m, brackets, basis_names,
                              '{}/ideal'.format(self.name))
        return quotient, projection, complement


def _structure_on(L: LieAlgebra, B: Matrix, basis_names, name) -> LieAlgebra:
    """ structure constants of L on the columns of B (closed span) """
    k = B.cols
    brackets = {}
    for a, b in combinations(range(k), 2):
        value = L.bracket(B[:, a], B[:, b])
        coordinates = _coordinates_in(B, value)
        values = {c: coordinates[c] for c in range(k) if coordinates[c] != 0}
        if values:
            brackets[(a, b)] = values
    return LieAlgebra(k, brackets, basis_names, name)


def _coordinates_in(B: Matrix, v: Matrix) -> Matrix:
    """ coordinates of v in the (independent) columns of B """
    solution = solve_affine(B, list(v))
    if not solution.solvable:
        raise algebra_exceptions.DimensionMismatchError(
            'coordinates', 'vector in the span', 'vector outside the span')
    return solution.particular


class LieModule():
    """
    Representation rho of a Lie algebra on Q^dim, one matrix per basis
    vector of the algebra

    Methods
    -------
    rho
    check
    trivial
    adjoint
    coadjoint
    direct_sum
    restrict
    quotient
    """

    def __init__(self, algebra: LieAlgebra, rho_matrices: Sequence[Matrix],
                 name: str = '', dim: int = None):
        if len(rho_matrices) != algebra.dim:
            raise algebra_exceptions.DimensionMismatchError(
                'representation matrices', algebra.dim, len(rho_matrices))
        matrices = [ImmutableMatrix(Matrix(A).applyfunc(to_rational))
                    for A in rho_matrices]
        dims = {A.shape for A in matrices}
        if len(dims) > 1 or any(r != c for r, c in dims):
            raise algebra_exceptions.DimensionMismatchError(
                'representation matrices', 'square matrices of one size',
                dims)
        self.algebra = algebra
        self.dim = matrices[0].rows if matrices else (dim or 0)
        self.rho_matrices = tuple(matrices)
        self.name = name

    def __str__(self):
        return "LieModule {} of dimension {} over {}"\
            "".format(self.name, self.dim, self.algebra.name)

    def __eq__(self, other):
        return isinstance(other, LieModule) and \
            self.algebra == other.algebra and \
            self.rho_matrices == other.rho_matrices

    def __hash__(self):
        return hash((self.algebra, self.rho_matrices))

    def rho(self, x) -> Matrix:
        x = self.algebra.vector(x)
        result = zeros(self.dim, self.dim)
        for i in range(self.algebra.dim):
            if x[i] != 0:
                result += x[i] * self.rho_matrices[i]
        return result

    def is_trivial(self) -> bool:
        return all(A.is_zero_matrix for A in self.rho_matrices)

    def check(self) -> Check:
        """ rho([e_i, e_j]) = [rho(e_i), rho(e_j)] on all basis pairs """
        for i, j in combinations(range(self.algebra.dim), 2):
            A, B = self.rho_matrices[i], self.rho_matrices[j]
            if self.rho(self.algebra.bracket(i, j)) != A * B - B * A:
                return Check.failed((self.algebra.basis_names[i],
                                     self.algebra.basis_names[j]))
        return Check.ok()

    def validate(self) -> 'LieModule':
        check = self.check()
        if not check:
            raise algebra_exceptions.NotDerivationError(
                'representation {}'.format(self.name),
                'rho is not a homomorphism on the pair {}'
                ''.format(check.violation))
        return self

    def invariants(self) -> Subspace:
        """ the joint kernel a^l of all rho(e_i) """
        if self.algebra.dim == 0:
            return Subspace.whole(self.dim)
        return Subspace.kernel(Matrix.vstack(*self.rho_matrices))

    def moving_part(self) -> Subspace:
        """ rho(l) a, the sum of the images of all rho(e_i) """
        U = Subspace.zero(self.dim)
        for A in self.rho_matrices:
            U = U + Subspace.image(Matrix(A))
        return U

    @classmethod
    def trivial(cls, algebra: LieAlgebra, dim: int,
                name: str = '') -> 'LieModule':
        return cls(algebra, [zeros(dim, dim)] * algebra.dim,
                   name or 'trivial', dim)

    @classmethod
    def adjoint(cls, algebra: LieAlgebra) -> 'LieModule':
        return cls(algebra, algebra.ad_matrices, 'ad')

    @classmethod
    def coadjoint(cls, algebra: LieAlgebra) -> 'LieModule':
        """ rho(x) Z = -Z o ad(x), written on the dual basis """
        return cls(algebra, [-Matrix(A).T for A in algebra.ad_matrices],
                   'ad*')

    def direct_sum(self, other: 'LieModule', name: str = '') -> 'LieModule':
        return LieModule(self.algebra,
                         [block_diagonal(Matrix(A), Matrix(B)) for A, B in
                          zip(self.rho_matrices, other.rho_matrices)],
                         name or '{}+{}'.format(self.name, other.name),
                         self.dim + other.dim)

    def restrict(self, U: Subspace) -> 'LieModule':
        """ the submodule U in its echelon basis """
        return LieModule(self.algebra,
                         [U.restrict_operator(Matrix(A))
                          for A in self.rho_matrices],
                         '{} submodule'.format(self.name), U.dim)

    def quotient(self, U: Subspace) -> 'LieModule':
        whole = Subspace.whole(self.dim)
        matrices = [whole.quotient_operator(Matrix(A), U)[0]
                    for A in self.rho_matrices]
        return LieModule(self.algebra, matrices,
                         '{} quotient'.format(self.name),
                         self.dim - U.dim)

    def submodule_closure(self, U: Subspace) -> Subspace:
        return U.closure([Matrix(A) for A in self.rho_matrices])

    def submodule_interior(self, U: Subspace) -> Subspace:
        return U.interior([Matrix(A) for A in self.rho_matrices])

    def is_submodule(self, U: Subspace) -> bool:
        return all(U.contains(A * v) for A in self.rho_matrices
                   for v in U.vectors())


class Series(NamedTuple):
    """
    Derived and lower central series of a Lie algebra

    Attributes
    ----------
    derived : list of Subspace
        g, [g,g], ... until the series becomes stationary
    lower_central : list of Subspace
        g^1 = g, g^{k+1} = [g, g^k], ... until stationary
    center : Subspace
    nilindex : int or None
        smallest k with g^{k+1} = 0, None when g is not nilpotent
    solvable : bool
    nilpotent : bool
    """
    derived: List[Subspace]
    lower_central: List[Subspace]
    center: Subspace
    nilindex: Optional[int]
    solvable: bool
    nilpotent: bool


def bracket_span(L: LieAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """ [U, V], the span of all brackets [u, v] """
    ads = [L.ad(u) for u in U.vectors()]
    return Subspace(L.dim, [A * v for A in ads for v in V.vectors()])


def derived_algebra(L: LieAlgebra) -> Subspace:
    whole = Subspace.whole(L.dim)
    return bracket_span(L, whole, whole)


def centralizer(L: LieAlgebra, U: Subspace,
                within: Subspace = None) -> Subspace:
    """ {x in within : [x, U] = 0} """
    within = Subspace.whole(L.dim) if within is None else within
    if U.dim == 0 or within.dim == 0:
        return within
    B = Matrix(within.basis)
    # [x, u] = -ad(u) x
    rows = Matrix.vstack(*[L.ad(u) * B for u in U.vectors()])
    return Subspace(L.dim, [B * c for c in nullspace(rows)])


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, Subspace.whole(L.dim))


def is_subalgebra(L: LieAlgebra, U: Subspace) -> bool:
    return bracket_span(L, U, U) <= U


def is_ideal(L: LieAlgebra, U: Subspace) -> bool:
    return bracket_span(L, Subspace.whole(L.dim), U) <= U


def ideal_generated(L: LieAlgebra, U: Subspace) -> Subspace:
    return U.closure([Matrix(A) for A in L.ad_matrices])


def check_jacobi(L: LieAlgebra) -> Check:
    """
    Jacobi identity on all basis triples

    Returns
    -------
        Check whose violation is the first failing triple of basis names
    """
    for i, j, k in combinations(range(L.dim), 3):
        total = L.ad(i) * L.bracket(j, k) + L.ad(j) * L.bracket(k, i) + \
            L.ad(k) * L.bracket(i, j)
        if not total.is_zero_matrix:
            return Check.failed((L.basis_names[i], L.basis_names[j],
                                 L.basis_names[k]))
    return Check.ok()


def check_derivation(L: LieAlgebra, D: Matrix) -> Check:
    """ D[x, y] = [Dx, y] + [x, Dy] on basis pairs """
    D = Matrix(D)
    for i, j in combinations(range(L.dim), 2):
        left = D * L.bracket(i, j)
        right = L.bracket(D[:, i], j) + L.bracket(i, D[:, j])
        if left != right:
            return Check.failed((L.basis_names[i], L.basis_names[j]))
    return Check.ok()


def is_homomorphism(S: Matrix, source: LieAlgebra,
                    target: LieAlgebra) -> Check:
    """ S[x, y] = [Sx, Sy] for the linear map S: source -> target """
    S = Matrix(S)
    if S.shape != (target.dim, source.dim):
        raise algebra_exceptions.DimensionMismatchError(
            'homomorphism', (target.dim, source.dim), S.shape)
    for i, j in combinations(range(source.dim), 2):
        if S * source.bracket(i, j) != target.bracket(S[:, i], S[:, j]):
            return Check.failed((source.basis_names[i],
                                 source.basis_names[j]))
    return Check.ok()


def series(L: LieAlgebra) -> Series:
    """
    Derived series, lower central series, center and nilindex

    Parameters
    ----------
        L: LieAlgebra

    Returns
    -------
        Series named tuple; nilindex is None (flagged) when L is not
        nilpotent
    """
    whole = Subspace.whole(L.dim)
    derived = [whole]
    while True:
        step = bracket_span(L, derived[-1], derived[-1])
        if step == derived[-1]:
            break
        derived.append(step)
    lower = [whole]
    while True:
        step = bracket_span(L, whole, lower[-1])
        if step == lower[-1]:
            break
        lower.append(step)
    nilpotent = lower[-1].is_zero()
    nilindex = None
    if nilpotent:
        # lower = [g^1, ..., g^k = 0] or [0] for the zero algebra
        nilindex = len(lower) - 1
    return Series(derived, lower, center(L), nilindex,
                  derived[-1].is_zero(), nilpotent)


def nilindex(L: LieAlgebra) -> Optional[int]:
    return series(L).nilindex


def killing_form(L: LieAlgebra):
    """ kappa(x, y) = tr(ad x ad y) """
    K = zeros(L.dim, L.dim)
    for i in range(L.dim):
        for j in range(i, L.dim):
            K[i, j] = K[j, i] = (L.ad_matrices[i] * L.ad_matrices[j]).trace()
    return SymForm(K)


def radical(L: LieAlgebra) -> Subspace:
    """ the solvable radical, the Killing-orthogonal of [g, g] """
    derived = derived_algebra(L)
    if derived.is_zero():
        return Subspace.whole(L.dim)
    K = Matrix(killing_form(L).matrix)
    return Subspace.kernel(Matrix(derived.basis).T * K)


def nilpotent_radical(L: LieAlgebra) -> Subspace:
    """ R(g) = [r, g] """
    return bracket_span(L, radical(L), Subspace.whole(L.dim))


def _radical_data(algebra: LieAlgebra):
    r = radical(algebra)
    return r, bracket_span(algebra, r, Subspace.whole(algebra.dim))


def module_is_semisimple(M: LieModule, space: Subspace = None,
                         radical_data=None) -> Decision:
    """
    Semisimplicity of a module (or of a submodule space): the nilpotent
    radical acts by zero and every radical basis vector acts by a
    semisimple operator

    Returns
    -------
        Decision, the witness of No names the offending algebra vector
    """
    space = Subspace.whole(M.dim) if space is None else space
    r, nil = radical_data or _radical_data(M.algebra)
    for x in nil.vectors():
        A = M.rho(x)
        if any(not (A * v).is_zero_matrix for v in space.vectors()):
            return Decision.no(x, 'the nilpotent radical acts nontrivially')
    for x in r.vectors():
        A = space.restrict_operator(M.rho(x))
        m = minimal_polynomial(A)
        if m.degree() > 0 and m.gcd(m.diff()).degree() > 0:
            return Decision.no(x, 'a radical element acts by a '
                                  'non-semisimple operator')
    return Decision.yes()


def semisimplification_kernel(M: LieModule, space: Subspace = None,
                              radical_data=None) -> Subspace:
    """
    Smallest submodule W of space with space/W semisimple

    Parameters
    ----------
        M: LieModule
        space: Subspace
            submodule of M to work in, default all of M

    Returns
    -------
        Subspace W
    """
    space = Subspace.whole(M.dim) if space is None else space
    r, nil = radical_data or _radical_data(M.algebra)
    W = M.submodule_closure(Subspace(M.dim, [M.rho(x) * v
                                             for x in nil.vectors()
                                             for v in space.vectors()]))
    iteration = 0
    while True:
        iteration += 1
        defect = []
        for x in r.vectors():
            quotient, complement = space.quotient_operator(M.rho(x), W)
            if not complement:
                break
            s = squarefree_part(minimal_polynomial(quotient))
            image = evaluate_polynomial(s, quotient)
            for column in range(image.cols):
                coefficients = image[:, column]
                if not coefficients.is_zero_matrix:
                    defect.append(sum((coefficients[a] * complement[a]
                                       for a in range(len(complement))),
                                      zeros(M.dim, 1)))
        larger = M.submodule_closure(W + Subspace(M.dim, defect))
        metriclie_log.debug("semisimplification step {}: dim {} -> {}"
                            "".format(iteration, W.dim, larger.dim))
        if larger == W:
            return W
        W = larger


def radical_chain(L: LieAlgebra) -> List[Subspace]:
    """
    The chain R_0 = g > R_1 > ... > R_m+1 = 0 where R_k is the
    semisimplification kernel of the adjoint action of g on R_k-1

    Returns
    -------
        list of Subspace starting with the whole algebra and ending with 0
    """
    adjoint = LieModule.adjoint(L)
    data = _radical_data(L)
    chain = [Subspace.whole(L.dim)]
    while not chain[-1].is_zero():
        step = semisimplification_kernel(adjoint, chain[-1], data)
        # a semisimple quotient of a nonzero module is never all of it
        assert step.dim < chain[-1].dim
        chain.append(step)
    return chain


def socle(M: LieModule, space: Subspace = None,
          radical_data=None) -> Subspace:
    """
    Largest semisimple submodule of space (default all of M)
    """
    S = Subspace.whole(M.dim) if space is None else space
    r, nil = radical_data or _radical_data(M.algebra)
    while True:
        current = S
        for x in nil.vectors():
            S = S & Subspace.kernel(M.rho(x))
        S = M.submodule_interior(S)
        for x in r.vectors():
            if S.is_zero():
                break
            A = S.restrict_operator(M.rho(x))
            s = squarefree_part(minimal_polynomial(A))
            kernel = Subspace.kernel(evaluate_polynomial(s, A))
            B = Matrix(S.basis)
            S = M.submodule_interior(
                Subspace(M.dim, [B * v for v in kernel.vectors()]))
        metriclie_log.debug("socle step: dim {} -> {}".format(current.dim,
                                                               S.dim))
        if S == current:
            return S


def socle_ideal(L: LieAlgebra) -> Subspace:
    """ S(l), the socle of the adjoint module """
    return socle(LieModule.adjoint(L))


def inner_derivation_solve(L: LieAlgebra, D: Matrix) -> Decision:
    """
    Finds x with ad(x) = D

    Parameters
    ----------
        L: LieAlgebra
        D: Matrix
            derivation of L

    Returns
    -------
        Decision; the Yes witness is the full AffineSolution (particular
        x in echelon order plus a basis of the center)

    Raises
    ------
        NotDerivationError: D is not a derivation of L
    """
    D = Matrix(D)
    check = check_derivation(L, D)
    if not check:
        raise algebra_exceptions.NotDerivationError(
            'D', 'fails on the pair {}'.format(check.violation))
    system = LinearSystem(L.dim)
    n = L.dim
    for row in range(n):
        for column in range(n):
            system.add_equation({i: L.ad_matrices[i][row, column]
                                 for i in range(n)}, D[row, column])
    solution = system.solve()
    if not solution.solvable:
        return Decision.no(None, 'the derivation is outer')
    return Decision.yes(solution)


def _intertwiners(source: List[Matrix], target: List[Matrix]) -> List[Matrix]:
    """ basis of {X : X A_i = B_i X} for A_i on Q^p and B_i on Q^q """
    p = source[0].rows if source else 0
    q = target[0].rows if target else 0
    system = LinearSystem(q * p)
    for A, B in zip(source, target):
        A, B = A.tolist(), B.tolist()
        for r in range(q):
            for c in range(p):
                row = {}
                # (X A)[r, c] - (B X)[r, c]
                for k in range(p):
                    if A[k][c] != 0:
                        row[r * p + k] = row.get(r * p + k, 0) + A[k][c]
                for k in range(q):
                    if B[r][k] != 0:
                        row[k * p + c] = row.get(k * p + c, 0) - B[r][k]
                system.add_equation(row)
    return [Matrix(v).reshape(q, p) for v in system.solve().kernel]


def _restricted(M: LieModule, U: Subspace) -> List[Matrix]:
    return [U.restrict_operator(Matrix(A)) for A in M.rho_matrices]


def commutant(M: LieModule, space: Subspace = None) -> List[Matrix]:
    """ basis of End_l(space), matrices in the echelon basis of space """
    space = Subspace.whole(M.dim) if space is None else space
    matrices = _restricted(M, space)
    if not matrices:
        return _intertwiners([zeros(space.dim, space.dim)],
                             [zeros(space.dim, space.dim)])
    return _intertwiners(matrices, matrices)


def module_hom(M: LieModule, first: Subspace, second: Subspace):
    """ basis of Hom_l(first, second) for submodules of M """
    if first.dim == 0 or second.dim == 0:
        return []
    source = _restricted(M, first) or [zeros(first.dim, first.dim)]
    target = _restricted(M, second) or [zeros(second.dim, second.dim)]
    return _intertwiners(source, target)


def _is_field(algebra: List[Matrix], rng, trials: int) -> bool:
    """
    A commutative semisimple matrix algebra is a field when one of its
    elements has an irreducible minimal polynomial of full degree
    """
    e = len(algebra)
    if any(A * B != B * A for A, B in combinations(algebra, 2)):
        return False
    candidates = list(algebra)
    bound = Settings.get('random_coefficient_range')
    for _ in range(trials):
        coefficients = rng.integers(-bound, bound + 1, size=e)
        candidates.append(sum((int(c) * A for c, A in
                               zip(coefficients, algebra)),
                              zeros(algebra[0].rows, algebra[0].rows)))
    for A in candidates:
        m = minimal_polynomial(A)
        if m.degree() == e and m.is_irreducible:
            return True
    return False


def simple_summands(M: LieModule, space: Subspace = None,
                    trials: int = None, seed: int = None) -> Decision:
    """
    Splits a semisimple submodule into simple submodules with spectral
    idempotents of its commutant

    Parameters
    ----------
        M: LieModule
        space: Subspace
            semisimple submodule, default all of M
        trials: int
            random commutant combinations tried per piece
        seed: int

    Returns
    -------
        Decision: Yes with the list of simple pieces when they are
        pairwise non-isomorphic (then they are all the simple
        submodules); No with the pieces when two of them are isomorphic;
        Unknown when a piece could not be certified simple
    """
    space = Subspace.whole(M.dim) if space is None else space
    trials = Settings.get('centroid_random_trials', trials)
    rng = Settings.rng(seed)
    bound = Settings.get('random_coefficient_range')
    pending = [space] if space.dim else []
    pieces = []
    while pending:
        piece = pending.pop()
        if piece.dim == 1:
            pieces.append(piece)
            continue
        algebra = commutant(M, piece)
        if len(algebra) == 1:
            pieces.append(piece)
            continue
        candidates = list(algebra)
        for _ in range(trials):
            coefficients = rng.integers(-bound, bound + 1, size=len(algebra))
            candidates.append(sum((int(c) * A for c, A in
                                   zip(coefficients, algebra)),
                                  zeros(piece.dim, piece.dim)))
        split = None
        for A in candidates:
            projectors = spectral_idempotents(A)
            if len(projectors) > 1:
                split = projectors
                break
        if split is not None:
            B = Matrix(piece.basis)
            for E in split:
                pending.append(Subspace(M.dim, [B * E[:, c]
                                                for c in range(E.cols)]))
            continue
        if _is_field(algebra, rng, trials):
            pieces.append(piece)
            continue
        return Decision.unknown('a summand of dimension {} could not be '
                                'certified simple'.format(piece.dim))
    pieces.sort(key=lambda U: (U.dim, U.pivots))
    metriclie_log.debug("simple summands of dimensions {}".format(
        [U.dim for U in pieces]))
    for first, second in combinations(pieces, 2):
        if first.dim == second.dim and module_hom(M, first, second):
            return Decision.no(pieces, 'isotypic multiplicity')
    return Decision.yes(pieces)
