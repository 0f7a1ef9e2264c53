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
Alternating multilinear maps on a Lie algebra, stored densely over the
increasing basis index tuples in lexicographic order.
"""
from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

from sympy import ImmutableMatrix, Matrix, zeros

from metriclie.exceptions import algebra_exceptions
from metriclie.utils.exactlin import to_rational


def sort_sign(indices: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """
    Sign of the permutation sorting indices and the sorted tuple; the sign
    is 0 when an index repeats
    """
    indices = list(indices)
    if len(set(indices)) < len(indices):
        return 0, tuple(sorted(indices))
    sign = 1
    for i in range(len(indices)):
        for j in range(i + 1, len(indices)):
            if indices[i] > indices[j]:
                sign = -sign
    return sign, tuple(sorted(indices))


class Cochain():
    """
    Alternating p-linear map from a Lie algebra of dimension ldim into
    Q^vdim (values in a module) or Q (scalar cochains, vdim = 1)

    Parameters
    ----------
        ldim: int
            dimension of the Lie algebra
        degree: int
            p
        vdim: int
            dimension of the value space
        values: Matrix
            vdim x C(ldim, p) matrix, column s is the value on the s-th
            increasing index tuple
        scalar: bool
            scalar valued cochain (C^p(l)) instead of module valued

    Methods
    -------
    subsets
    value
    evaluate
    to_vector
    zero
    from_vector
    from_function
    from_dict
    """

    def __init__(self, ldim: int, degree: int, vdim: int, values=None,
                 scalar: bool = False):
        self.ldim = ldim
        self.degree = degree
        self.vdim = 1 if scalar else vdim
        self.scalar = scalar
        self._subsets = tuple(combinations(range(ldim), degree))
        self._position = {s: a for a, s in enumerate(self._subsets)}
        if values is None:
            values = zeros(self.vdim, len(self._subsets))
        values = Matrix(values)
        if values.shape != (self.vdim, len(self._subsets)):
            raise algebra_exceptions.DimensionMismatchError(
                'cochain values', (self.vdim, len(self._subsets)),
                values.shape)
        self.values = ImmutableMatrix(values)

    def __str__(self):
        kind = 'scalar' if self.scalar else '{}-valued'.format(self.vdim)
        return "{} {}-cochain on a {}-dimensional algebra"\
            "".format(kind, self.degree, self.ldim)

    def __repr__(self):
        return "Cochain({})".format(self.to_dict())

    def _compatible(self, other: 'Cochain'):
        if (self.ldim, self.degree, self.vdim, self.scalar) != \
                (other.ldim, other.degree, other.vdim, other.scalar):
            raise algebra_exceptions.DimensionMismatchError(
                'cochain', str(self), str(other))

    def __eq__(self, other):
        return isinstance(other, Cochain) and \
            (self.ldim, self.degree, self.vdim, self.scalar) == \
            (other.ldim, other.degree, other.vdim, other.scalar) and \
            self.values == other.values

    def __hash__(self):
        return hash((self.ldim, self.degree, self.vdim, self.scalar,
                     self.values))

    def __add__(self, other: 'Cochain') -> 'Cochain':
        self._compatible(other)
        return self._like(self.values + other.values)

    def __sub__(self, other: 'Cochain') -> 'Cochain':
        self._compatible(other)
        return self._like(self.values - other.values)

    def __neg__(self) -> 'Cochain':
        return self._like(-self.values)

    def __rmul__(self, factor) -> 'Cochain':
        return self._like(to_rational(factor) * self.values)

    def _like(self, values) -> 'Cochain':
        return Cochain(self.ldim, self.degree, self.vdim, values, self.scalar)

    def is_zero(self) -> bool:
        return self.values.is_zero_matrix

    def subsets(self) -> Tuple[Tuple[int, ...], ...]:
        return self._subsets

    def position(self, subset: Tuple[int, ...]) -> int:
        return self._position[subset]

    def value(self, indices: Sequence[int]) -> Matrix:
        """ c(e_i1, ..., e_ip) for arbitrary basis indices """
        sign, ordered = sort_sign(indices)
        if sign == 0:
            return zeros(self.vdim, 1)
        return sign * Matrix(self.values[:, self._position[ordered]])

    def scalar_value(self, indices: Sequence[int]):
        return self.value(indices)[0, 0]

    def evaluate(self, *vectors) -> Matrix:
        """
        c(v_1, ..., v_p) for coordinate vectors:
        sum over increasing I of det(V[I, :]) c(e_I)
        """
        if len(vectors) != self.degree:
            raise algebra_exceptions.DimensionMismatchError(
                'cochain arguments', self.degree, len(vectors))
        if self.degree == 0:
            return Matrix(self.values[:, 0])
        V = Matrix.hstack(*[Matrix(v) for v in vectors])
        result = zeros(self.vdim, 1)
        for a, subset in enumerate(self._subsets):
            column = self.values[:, a]
            if column.is_zero_matrix:
                continue
            minor = V.extract(list(subset), list(range(self.degree))).det()
            if minor != 0:
                result += minor * Matrix(column)
        return result

    def to_vector(self) -> Matrix:
        """ coordinates, subset-major: entry s * vdim + a """
        return Matrix(self.values.T).reshape(len(self._subsets) * self.vdim,
                                             1)

    def to_dict(self) -> Dict[Tuple[int, ...], List]:
        """ {subset: values} for the nonzero values only """
        return {s: list(self.values[:, a]) for a, s in
                enumerate(self._subsets)
                if not self.values[:, a].is_zero_matrix}

    @classmethod
    def size(cls, ldim: int, degree: int, vdim: int) -> int:
        return len(list(combinations(range(ldim), degree))) * vdim

    @classmethod
    def zero(cls, ldim: int, degree: int, vdim: int = 1,
             scalar: bool = False) -> 'Cochain':
        return cls(ldim, degree, vdim, None, scalar)

    @classmethod
    def from_vector(cls, ldim: int, degree: int, vdim: int, v,
                    scalar: bool = False) -> 'Cochain':
        vdim = 1 if scalar else vdim
        count = len(list(combinations(range(ldim), degree)))
        values = Matrix(v).reshape(count, vdim).T if count * vdim else \
            zeros(vdim, count)
        return cls(ldim, degree, vdim, values, scalar)

    @classmethod
    def from_function(cls, ldim: int, degree: int, vdim: int,
                      function: Callable, scalar: bool = False) -> 'Cochain':
        """ cochain whose value on e_I (I increasing) is function(I) """
        vdim = 1 if scalar else vdim
        columns = []
        for subset in combinations(range(ldim), degree):
            value = function(subset)
            columns.append(Matrix([value]) if scalar and
                           not isinstance(value, Matrix) else
                           Matrix(value).reshape(vdim, 1))
        values = Matrix.hstack(*columns) if columns else zeros(vdim, 0)
        return cls(ldim, degree, vdim, values, scalar)

    @classmethod
    def from_dict(cls, ldim: int, degree: int, vdim: int, entries: Dict,
                  scalar: bool = False) -> 'Cochain':
        """
        cochain from {index tuple: value}, tuples in any order (the sign
        of the sorting permutation is applied), missing tuples are zero
        """
        vdim = 1 if scalar else vdim
        subsets = list(combinations(range(ldim), degree))
        position = {s: a for a, s in enumerate(subsets)}
        values = zeros(vdim, len(subsets))
        for indices, value in entries.items():
            for index in indices:
                if not 0 <= index < ldim:
                    raise algebra_exceptions.DimensionMismatchError(
                        'cochain index', ldim, index)
            sign, ordered = sort_sign(indices)
            if sign == 0 or len(ordered) != degree:
                raise algebra_exceptions.DimensionMismatchError(
                    'cochain index tuple', 'increasing {}-tuple'
                    ''.format(degree), indices)
            column = Matrix([value]) if scalar else Matrix(value)
            column = column.applyfunc(to_rational)
            values[:, position[ordered]] += sign * column.reshape(vdim, 1)
        return cls(ldim, degree, vdim, values, scalar)
