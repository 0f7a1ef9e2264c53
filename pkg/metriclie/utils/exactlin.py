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
Exact rational scalars, matrices, symmetric forms and polynomials.
Every other module of metricLie does its linear algebra through here so
that no floating point number ever enters a computation.
"""
import logging
import re

from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence

from sympy import (ImmutableMatrix, Integer, Matrix, Poly, QQ, Rational,
                   Symbol, eye, zeros)
from sympy.polys.matrices import DomainMatrix

from metriclie.exceptions import algebra_exceptions

metriclie_log = logging.getLogger('metriclie')

# variable of all minimal polynomials
t = Symbol('t')

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def to_rational(value) -> Rational:
    """
    Converts integers, fractions, sympy rationals and strings "p/q" or "p"
    into a sympy Rational

    Parameters
    ----------
        value: int, str, Fraction or sympy Rational

    Returns
    -------
        sympy Rational in canonical form

    Raises
    ------
        RationalParseError: the value is a float, a malformed string or
            has a zero denominator
    """
    if isinstance(value, bool):
        raise algebra_exceptions.RationalParseError(value)
    if isinstance(value, Rational):
        return value
    if isinstance(value, int):
        return Integer(value)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if match is None:
            raise algebra_exceptions.RationalParseError(value)
        numerator, denominator = match.groups()
        if denominator is not None and int(denominator) == 0:
            raise algebra_exceptions.RationalParseError(value)
        return Rational(int(numerator),
                        1 if denominator is None else int(denominator))
    raise algebra_exceptions.RationalParseError(value)


def rational_str(value) -> str:
    """ "p/q" or "p" for a rational value """
    return str(to_rational(value))


def rational_matrix(rows: Sequence[Sequence]) -> Matrix:
    """ Matrix of rationals from nested sequences of convertible values """
    rows = [list(row) for row in rows]
    if len(rows) == 0:
        return zeros(0, 0)
    return Matrix([[to_rational(entry) for entry in row] for row in rows])


def vector(entries: Iterable) -> Matrix:
    """ column vector of rationals """
    entries = [to_rational(entry) for entry in entries]
    return Matrix(len(entries), 1, entries)


def unit_vector(dim: int, index: int) -> Matrix:
    """ the standard basis vector e_index of Q^dim """
    e = zeros(dim, 1)
    e[index] = 1
    return e


class AffineSolution(NamedTuple):
    """
    Solution set of an affine system A x = b: particular + span(kernel).
    particular is None when the system is inconsistent.
    """
    particular: Optional[Matrix]
    kernel: List[Matrix]

    @property
    def solvable(self) -> bool:
        return self.particular is not None


class Signature(NamedTuple):
    """
    Signature of a symmetric form: p negative directions, q positive
    directions and r the dimension of the radical
    """
    p: int
    q: int
    r: int


def _reduce(rows: List[Dict[int, Rational]], ncols: int):
    """
    Reduced row echelon form of a sparse list of rows

    Returns
    -------
        (dense Matrix with the nonzero rows of the rref, pivot columns)
    """
    data = {}
    for row in rows:
        entries = {j: QQ.from_sympy(to_rational(v)) for j, v in row.items()
                   if v != 0}
        if entries:
            data[len(data)] = entries
    if len(data) == 0 or ncols == 0:
        return zeros(0, ncols), ()
    reduced, pivots = DomainMatrix(data, (len(data), ncols), QQ).rref()
    pivots = tuple(pivots)
    if len(pivots) == 0:
        return zeros(0, ncols), ()
    return reduced[0:len(pivots), :].to_Matrix(), pivots


def _matrix_rows(A: Matrix) -> List[Dict[int, Rational]]:
    return [{j: v for j, v in enumerate(row) if v != 0}
            for row in A.tolist()]


def _kernel_from_rref(reduced: Matrix, pivots: Sequence[int],
                      nvars: int) -> List[Matrix]:
    pivot_set = set(pivots)
    basis = []
    for free in range(nvars):
        if free in pivot_set:
            continue
        v = zeros(nvars, 1)
        v[free] = 1
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, free]
        basis.append(v)
    return basis


class LinearSystem():
    """
    Sparse affine system of equations sum_j c_j x_j = constant over Q,
    built one equation at a time. Used for every linear solve of the
    library (cohomology, balancedness, invariance, equivalence).

    Methods
    -------
    add_equation
    solve
    """

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.rows = []

    def __str__(self):
        return "LinearSystem with {} unknowns and {} equations"\
            "".format(self.nvars, len(self.rows))

    def add_equation(self, coefficients: Dict[int, Rational],
                     constant=0):
        """
        Adds the equation sum_j coefficients[j] x_j = constant. Equations
        with all coefficients zero and zero constant are dropped.
        """
        row = {j: c for j, c in coefficients.items() if c != 0}
        if constant != 0:
            row[self.nvars] = to_rational(constant)
        if row:
            self.rows.append(row)

    def solve(self) -> AffineSolution:
        """ exact solution set, kernel from the reduced echelon form """
        metriclie_log.debug("Solving {}".format(self))
        reduced, pivots = _reduce(self.rows, self.nvars + 1)
        if self.nvars in pivots:
            return AffineSolution(None, _kernel_from_rref(
                reduced[:, :self.nvars], [p for p in pivots
                                          if p != self.nvars], self.nvars))
        particular = zeros(self.nvars, 1)
        for i, p in enumerate(pivots):
            particular[p] = reduced[i, self.nvars]
        kernel = _kernel_from_rref(reduced, pivots, self.nvars)
        return AffineSolution(particular, kernel)


def solve_affine(A: Matrix, b) -> AffineSolution:
    """
    Solves A x = b exactly

    Parameters
    ----------
        A: Matrix
            m x n rational matrix
        b: Matrix or sequence
            right hand side of length m

    Returns
    -------
        AffineSolution with a particular solution (None when inconsistent)
        and a kernel basis derived from the reduced echelon form

    Raises
    ------
        DimensionMismatchError: len(b) differs from the number of rows of A
    """
    b = list(b)
    if len(b) != A.rows:
        raise algebra_exceptions.DimensionMismatchError(
            'right hand side', A.rows, len(b))
    system = LinearSystem(A.cols)
    for row, constant in zip(_matrix_rows(A), b):
        system.add_equation(row, to_rational(constant))
    return system.solve()


def nullspace(A: Matrix) -> List[Matrix]:
    """ kernel basis of A, one column vector per free variable """
    reduced, pivots = _reduce(_matrix_rows(A), A.cols)
    return _kernel_from_rref(reduced, pivots, A.cols)


def rank(A: Matrix) -> int:
    return len(_reduce(_matrix_rows(A), A.cols)[1])


def echelon_basis(vectors: Iterable, dim: int) -> Matrix:
    """
    Canonical basis of the span of the vectors: the nonzero rows of the
    reduced echelon form, returned as the columns of a dim x k matrix
    """
    rows = [{j: v for j, v in enumerate(list(vec)) if v != 0}
            for vec in vectors]
    reduced, pivots = _reduce(rows, dim)
    return reduced.T if len(pivots) else zeros(dim, 0)


def evaluate_polynomial(p: Poly, A: Matrix) -> Matrix:
    """ p(A) by Horner's scheme """
    n = A.rows
    result = zeros(n, n)
    for coefficient in p.all_coeffs():
        result = result * A + coefficient * eye(n)
    return result


def minimal_polynomial(A: Matrix) -> Poly:
    """
    Monic minimal polynomial of a square matrix: the first linear relation
    among the powers I, A, A^2, ...

    Parameters
    ----------
        A: Matrix
            square rational matrix

    Returns
    -------
        Poly in t over QQ with m(A) = 0
    """
    n = A.rows
    if A.cols != n:
        raise algebra_exceptions.DimensionMismatchError(
            'minimal polynomial', 'square matrix', A.shape)
    if n == 0:
        return Poly(1, t, domain=QQ)
    # nilpotent operators are the common case of the catalog
    power = A
    for k in range(1, n + 1):
        if power.is_zero_matrix:
            return Poly(t**k, t, domain=QQ)
        if k < n:
            power = power * A
    powers = [eye(n)]
    for k in range(1, n + 1):
        powers.append(powers[-1] * A)
        columns = Matrix.hstack(*[P.reshape(n * n, 1) for P in powers[:-1]])
        solution = solve_affine(columns, list(powers[-1].reshape(n * n, 1)))
        if solution.solvable:
            coefficients = solution.particular
            expr = t**k - sum(coefficients[i] * t**i for i in range(k))
            return Poly(expr, t, domain=QQ)
    # Cayley-Hamilton makes this unreachable
    return Poly(A.charpoly(t).as_expr(), t, domain=QQ)


def squarefree_part(m: Poly) -> Poly:
    """ m / gcd(m, m'), made monic """
    if m.degree() <= 0:
        return Poly(1, t, domain=QQ)
    g = m.gcd(m.diff(t))
    return m.quo(g).monic()


def is_semisimple_operator(A: Matrix) -> bool:
    """ A is semisimple iff its minimal polynomial is squarefree """
    m = minimal_polynomial(A)
    if m.degree() <= 0:
        return True
    return m.gcd(m.diff(t)).degree() == 0


def _coprime_factors(m: Poly) -> List[Poly]:
    """
    Pairwise coprime factors of m obtainable without factoring over Q:
    the powers (t - r)^e of rational roots and the squarefree-multiplicity
    pieces of the remaining cofactor
    """
    factors = []
    rest = m
    for root, multiplicity in sorted(m.ground_roots().items(),
                                     key=lambda item: item[0]):
        factor = Poly((t - root)**multiplicity, t, domain=QQ)
        factors.append(factor)
        rest = rest.quo(factor)
    if rest.degree() > 0:
        _, pieces = rest.sqf_list()
        for piece, multiplicity in pieces:
            factors.append(piece.monic()**multiplicity)
    return factors


def spectral_idempotents(A: Matrix) -> List[Matrix]:
    """
    Commuting projectors P_i (polynomials in A) with sum_i P_i = I and
    P_i P_j = 0, one for every coprime factor of the minimal polynomial
    found by rational root and gcd splitting. A single projector (the
    identity) means no splitting was found; this is not a proof that A
    has a single eigenvalue over the reals.

    Parameters
    ----------
        A: Matrix
            square rational matrix

    Returns
    -------
        List of projection matrices
    """
    n = A.rows
    m = minimal_polynomial(A)
    factors = _coprime_factors(m)
    if len(factors) <= 1:
        return [eye(n)]
    projectors = []
    for factor in factors:
        cofactor = m.quo(factor)
        _, s, h = factor.gcdex(cofactor)
        # s * cofactor = 1 modulo factor and 0 modulo cofactor
        projector_poly = (s * cofactor).rem(m).quo_ground(h.LC())
        projectors.append(evaluate_polynomial(projector_poly, A))
    return projectors


def signature(S) -> Signature:
    """
    Signature (p, q, r) of a symmetric form by exact congruence
    diagonalization. p counts the negative directions.

    Parameters
    ----------
        S: SymForm or symmetric Matrix

    Returns
    -------
        Signature named tuple
    """
    matrix = S.matrix if isinstance(S, SymForm) else S
    n = matrix.rows
    M = [[to_rational(v) for v in row] for row in matrix.tolist()]
    negative = positive = 0
    k = 0
    while k < n:
        pivot = next((i for i in range(k, n) if M[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n)
                         if M[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # x_i <- x_i + x_j turns the zero diagonal entry into 2 M[i][j]
            for c in range(n):
                M[i][c] += M[j][c]
            for r in range(n):
                M[r][i] += M[r][j]
            pivot = i
        if pivot != k:
            M[k], M[pivot] = M[pivot], M[k]
            for row in M:
                row[k], row[pivot] = row[pivot], row[k]
        d = M[k][k]
        for i in range(k + 1, n):
            factor = M[i][k] / d
            if factor == 0:
                continue
            for c in range(k, n):
                M[i][c] -= factor * M[k][c]
            for r in range(k, n):
                M[r][i] -= factor * M[r][k]
        if d < 0:
            negative += 1
        else:
            positive += 1
        k += 1
    return Signature(negative, positive, n - negative - positive)


class SymForm():
    """
    Symmetric bilinear form given by its Gram matrix on the standard basis

    Methods
    -------
    signature
    radical
    is_nondegenerate
    restrict
    direct_sum
    standard
    hyperbolic
    zero
    """

    def __init__(self, matrix):
        matrix = ImmutableMatrix(rational_matrix(Matrix(matrix).tolist()))
        if matrix.rows != matrix.cols:
            raise algebra_exceptions.DimensionMismatchError(
                'symmetric form', 'square matrix', matrix.shape)
        for i in range(matrix.rows):
            for j in range(i + 1, matrix.cols):
                if matrix[i, j] != matrix[j, i]:
                    raise algebra_exceptions.FormNotSymmetricError(i, j)
        self.matrix = matrix

    def __str__(self):
        return "SymForm of dimension {} and signature {}"\
            "".format(self.dim, tuple(self.signature()))

    def __eq__(self, other):
        return isinstance(other, SymForm) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def __call__(self, x, y) -> Rational:
        return (Matrix(x).T * self.matrix * Matrix(y))[0, 0]

    def signature(self) -> Signature:
        return signature(self)

    def radical(self) -> List[Matrix]:
        return radical_of_form(self)

    def is_nondegenerate(self) -> bool:
        return rank(Matrix(self.matrix)) == self.dim

    def restrict(self, basis: Matrix) -> 'SymForm':
        """ Gram matrix on the columns of basis """
        return SymForm(basis.T * self.matrix * basis)

    def direct_sum(self, other: 'SymForm') -> 'SymForm':
        return SymForm(block_diagonal(self.matrix, other.matrix))

    def scaled(self, factor) -> 'SymForm':
        return SymForm(to_rational(factor) * self.matrix)

    @classmethod
    def standard(cls, p: int, q: int) -> 'SymForm':
        """ the form of R^{p,q}: p entries -1 followed by q entries +1 """
        return cls(Matrix.diag(*([-1] * p + [1] * q))
                   if p + q else zeros(0, 0))

    @classmethod
    def hyperbolic(cls, n: int) -> 'SymForm':
        """ [[0, I_n], [I_n, 0]], signature (n, n) """
        M = zeros(2 * n, 2 * n)
        for i in range(n):
            M[i, n + i] = M[n + i, i] = 1
        return cls(M)

    @classmethod
    def zero(cls, n: int) -> 'SymForm':
        return cls(zeros(n, n))


def radical_of_form(S) -> List[Matrix]:
    """ kernel of the Gram matrix of S """
    matrix = S.matrix if isinstance(S, SymForm) else S
    return nullspace(Matrix(matrix))


def block_diagonal(*blocks) -> Matrix:
    """ block diagonal matrix, tolerating empty blocks """
    size = sum(block.rows for block in blocks)
    M = zeros(size, size)
    offset = 0
    for block in blocks:
        M[offset:offset + block.rows, offset:offset + block.cols] = block
        offset += block.rows
    return M


def inverse(A: Matrix) -> Matrix:
    """ exact inverse of an invertible rational matrix """
    n = A.rows
    columns = []
    for i in range(n):
        solution = solve_affine(A, list(unit_vector(n, i)))
        if not solution.solvable:
            raise algebra_exceptions.DimensionMismatchError(
                'inverse', 'invertible matrix', 'singular matrix')
        columns.append(solution.particular)
    return Matrix.hstack(*columns) if columns else zeros(0, 0)
