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
Linear subspaces of Q^n kept in reduced echelon form, so that equality of
subspaces is equality of their stored bases.
"""
from typing import Iterable, List

from sympy import ImmutableMatrix, Matrix, zeros

from metriclie.exceptions import algebra_exceptions
from metriclie.utils.exactlin import (echelon_basis, nullspace, solve_affine,
                                      unit_vector)


class Subspace():
    """
    Subspace of Q^ambient_dim spanned by the columns of a matrix. The
    stored basis is the reduced echelon basis of the span.

    Methods
    -------
    span
    zero
    whole
    kernel
    image
    contains
    intersect
    apply
    preimage
    annihilator
    coordinates
    complement_in
    restrict_operator
    quotient_operator
    """

    def __init__(self, ambient_dim: int, vectors: Iterable = ()):
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise algebra_exceptions.DimensionMismatchError(
                    'subspace vector', ambient_dim, len(v))
        self.ambient_dim = ambient_dim
        self.basis = ImmutableMatrix(echelon_basis(vectors, ambient_dim))
        self.pivots = tuple(next(i for i in range(ambient_dim)
                                 if self.basis[i, k] != 0)
                            for k in range(self.basis.cols))

    def __str__(self):
        return "Subspace of dimension {} in Q^{}".format(self.dim,
                                                         self.ambient_dim)

    def __repr__(self):
        return "Subspace({}, {})".format(self.ambient_dim,
                                         [list(v) for v in self.vectors()])

    def __eq__(self, other):
        return isinstance(other, Subspace) and \
            self.ambient_dim == other.ambient_dim and \
            self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __len__(self):
        return self.dim

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __add__(self, other: 'Subspace') -> 'Subspace':
        return Subspace(self.ambient_dim, self.vectors() + other.vectors())

    def __and__(self, other: 'Subspace') -> 'Subspace':
        return self.intersect(other)

    def __le__(self, other: 'Subspace') -> bool:
        return all(other.contains(v) for v in self.vectors())

    @property
    def dim(self) -> int:
        return self.basis.cols

    def is_zero(self) -> bool:
        return self.dim == 0

    def vectors(self) -> List[Matrix]:
        return [Matrix(self.basis[:, k]) for k in range(self.dim)]

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable) -> 'Subspace':
        return cls(ambient_dim, vectors)

    @classmethod
    def zero(cls, ambient_dim: int) -> 'Subspace':
        return cls(ambient_dim, [])

    @classmethod
    def whole(cls, ambient_dim: int) -> 'Subspace':
        return cls(ambient_dim, [unit_vector(ambient_dim, i)
                                 for i in range(ambient_dim)])

    @classmethod
    def coordinate(cls, ambient_dim: int, indices: Iterable[int]):
        """ span of the standard basis vectors with the given indices """
        return cls(ambient_dim, [unit_vector(ambient_dim, i)
                                 for i in indices])

    @classmethod
    def kernel(cls, A: Matrix) -> 'Subspace':
        return cls(A.cols, nullspace(A))

    @classmethod
    def image(cls, A: Matrix) -> 'Subspace':
        return cls(A.rows, [A[:, k] for k in range(A.cols)])

    def contains(self, v) -> bool:
        v = Matrix(v)
        residual = v - sum((v[p] * self.basis[:, k]
                            for k, p in enumerate(self.pivots)),
                           zeros(self.ambient_dim, 1))
        return residual.is_zero_matrix

    def coordinates(self, v) -> Matrix:
        """ coordinates of v in the echelon basis (v must lie in U) """
        v = Matrix(v)
        return Matrix([v[p] for p in self.pivots]) if self.dim \
            else zeros(0, 1)

    def annihilator(self) -> Matrix:
        """ matrix Q whose kernel is exactly this subspace """
        rows = nullspace(Matrix(self.basis.T)) if self.dim \
            else [unit_vector(self.ambient_dim, i)
                  for i in range(self.ambient_dim)]
        if len(rows) == 0:
            return zeros(0, self.ambient_dim)
        return Matrix.hstack(*rows).T

    def intersect(self, other: 'Subspace') -> 'Subspace':
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        Q = other.annihilator()
        if Q.rows == 0:
            return self
        B = Matrix(self.basis)
        return Subspace(self.ambient_dim, [B * c for c in nullspace(Q * B)])

    def apply(self, A: Matrix) -> 'Subspace':
        """ the image A(U) """
        return Subspace(A.rows, [A * v for v in self.vectors()])

    def preimage(self, A: Matrix) -> 'Subspace':
        """ {v : A v in U} for A mapping into the ambient space of U """
        Q = self.annihilator()
        if Q.rows == 0:
            return Subspace.whole(A.cols)
        return Subspace.kernel(Q * A)

    def complement_in(self, larger: 'Subspace') -> List[Matrix]:
        """
        vectors of larger completing the basis of this subspace to a basis
        of larger (this subspace must be contained in larger)
        """
        chosen = self
        extra = []
        for v in larger.vectors():
            if not chosen.contains(v):
                extra.append(v)
                chosen = chosen + Subspace(self.ambient_dim, [v])
        return extra

    def restrict_operator(self, A: Matrix) -> Matrix:
        """ matrix of A restricted to this (A-invariant) subspace """
        if self.dim == 0:
            return zeros(0, 0)
        columns = [self.coordinates(A * v) for v in self.vectors()]
        return Matrix.hstack(*columns)

    def quotient_operator(self, A: Matrix, sub: 'Subspace'):
        """
        Induced operator of A on self/sub for A-invariant sub <= self

        Returns
        -------
            (matrix of the induced operator, list of complement vectors
            whose classes form the basis of the quotient)
        """
        complement = sub.complement_in(self)
        if len(complement) == 0:
            return zeros(0, 0), []
        basis = Matrix.hstack(*(sub.vectors() + complement))
        columns = []
        for v in complement:
            solution = solve_affine(basis, list(A * v))
            columns.append(solution.particular[sub.dim:, :])
        return Matrix.hstack(*columns), complement

    def closure(self, operators: List[Matrix]) -> 'Subspace':
        """ smallest subspace containing U and invariant under operators """
        current = self
        while True:
            larger = current + Subspace(
                self.ambient_dim, [A * v for A in operators
                                   for v in current.vectors()])
            if larger.dim == current.dim:
                return current
            current = larger

    def interior(self, operators: List[Matrix]) -> 'Subspace':
        """ largest subspace of U invariant under operators """
        current = self
        while True:
            smaller = current
            for A in operators:
                smaller = smaller & smaller.preimage(A)
            if smaller.dim == current.dim:
                return current
            current = smaller
