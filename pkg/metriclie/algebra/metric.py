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
Metric Lie algebras: Lie algebras with an ad-invariant nondegenerate
symmetric bilinear form. Orthogonal complements, the canonical isotropic
ideal, the symmetric centroid and decomposability.
"""
import logging

from itertools import combinations
from typing import List, NamedTuple, Optional, Sequence, Tuple

from sympy import Matrix, eye, zeros

from metriclie.algebra import liealg
from metriclie.algebra.liealg import LieAlgebra
from metriclie.exceptions import algebra_exceptions
from metriclie.utils.decision import Check, Decision
from metriclie.utils.exactlin import (LinearSystem, Signature, SymForm,
                                      nullspace, spectral_idempotents)
from metriclie.utils.settings import Settings
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


class MetricLieAlgebra():
    """
    Lie algebra together with an invariant symmetric form. The form is
    not checked at construction, use validate or check_metric.

    Methods
    -------
    form_value
    validate
    direct_sum
    permuted
    """

    def __init__(self, alg: LieAlgebra, form, name: str = ''):
        if not isinstance(form, SymForm):
            form = SymForm(form)
        if form.dim != alg.dim:
            raise algebra_exceptions.DimensionMismatchError(
                'metric of {}'.format(name or alg.name), alg.dim, form.dim)
        self.alg = alg
        self.form = form
        self.name = name or alg.name

    def __str__(self):
        return "MetricLieAlgebra {} of dimension {} and signature {}"\
            "".format(self.name, self.dim, tuple(self.signature()[:2]))

    def __eq__(self, other):
        return isinstance(other, MetricLieAlgebra) and \
            self.alg == other.alg and self.form == other.form

    def __hash__(self):
        return hash((self.alg, self.form))

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def basis_names(self) -> Tuple[str, ...]:
        return self.alg.basis_names

    @property
    def gram(self) -> Matrix:
        return Matrix(self.form.matrix)

    def form_value(self, x, y):
        return self.form(self.alg.vector(x), self.alg.vector(y))

    def signature(self) -> Signature:
        return self.form.signature()

    def validate(self) -> 'MetricLieAlgebra':
        """
        Raises
        ------
            JacobiIdentityError, NotMetricError
        """
        self.alg.validate()
        check = check_metric(self)
        if not check:
            raise algebra_exceptions.NotMetricError(self.name,
                                                    check.violation)
        return self

    def direct_sum(self, other: 'MetricLieAlgebra',
                   name: str = '') -> 'MetricLieAlgebra':
        return MetricLieAlgebra(self.alg.direct_sum(other.alg, name),
                                self.form.direct_sum(other.form),
                                name or '{}+{}'.format(self.name, other.name))

    def permuted(self, order: Sequence[int]) -> 'MetricLieAlgebra':
        """ the same metric algebra with new basis f_a = e_order[a] """
        M = self.gram
        return MetricLieAlgebra(
            self.alg.permuted(order),
            SymForm(Matrix(len(order), len(order),
                           lambda a, b: M[order[a], order[b]])),
            self.name)


def check_metric(g: MetricLieAlgebra) -> Check:
    """
    Nondegeneracy and ad-invariance <[x,y],z> = -<y,[x,z]> on basis
    triples

    Returns
    -------
        Check, the violation is 'degenerate' or a triple of basis names
    """
    if not g.form.is_nondegenerate():
        return Check.failed('degenerate')
    M = g.gram
    for i in range(g.dim):
        defect = g.alg.ad(i).T * M + M * g.alg.ad(i)
        for j in range(g.dim):
            for k in range(g.dim):
                if defect[j, k] != 0:
                    names = g.basis_names
                    return Check.failed((names[i], names[j], names[k]))
    return Check.ok()


def metric_index(g: MetricLieAlgebra) -> int:
    """ index, the number of negative directions of the form """
    return g.signature().p


def perp(g: MetricLieAlgebra, U: Subspace) -> Subspace:
    """ U^perp, the kernel of the pairing against U """
    if U.is_zero():
        return Subspace.whole(g.dim)
    return Subspace.kernel(Matrix(U.basis).T * g.gram)


def is_isotropic(g: MetricLieAlgebra, U: Subspace) -> bool:
    B = Matrix(U.basis)
    return (B.T * g.gram * B).is_zero_matrix


class CanonicalIdeal(NamedTuple):
    """
    Canonical isotropic ideal ri(g)

    Attributes
    ----------
    ri : Subspace
    chain : list of Subspace
        the chain R_0 > R_1 > ... > 0 it is built from
    quotient_abelian : bool
        whether ri^perp/ri is abelian
    invariant : bool or None
        whether ri is invariant under the given equivariant structure
    """
    ri: Subspace
    chain: List[Subspace]
    quotient_abelian: bool
    invariant: Optional[bool] = None


def canonical_isotropic_ideal(g: MetricLieAlgebra, phi=None) -> CanonicalIdeal:
    """
    ri(g) = sum_k R_k(g) cap R_k(g)^perp

    Parameters
    ----------
        g: MetricLieAlgebra
        phi: EquivStructure, optional
            when given the invariance of ri under its generators is reported

    Returns
    -------
        CanonicalIdeal
    """
    chain = liealg.radical_chain(g.alg)
    ri = Subspace.zero(g.dim)
    for R in chain:
        ri = ri + (R & perp(g, R))
    ri_perp = perp(g, ri)
    quotient_abelian = liealg.bracket_span(g.alg, ri_perp, ri_perp) <= ri
    invariant = None
    if phi is not None:
        invariant = all(ri.apply(Matrix(A)) <= ri
                        for A in phi.all_matrices())
    return CanonicalIdeal(ri, chain, quotient_abelian, invariant)


def _centroid_system(g: MetricLieAlgebra) -> LinearSystem:
    n = g.dim
    M = g.gram.tolist()
    ads = [A.tolist() for A in g.alg.ad_matrices]
    system = LinearSystem(n * n)

    def var(a, b):
        return a * n + b

    # P ad(e_i) = sum_k P_ki ad(e_k)
    for i in range(n):
        for r in range(n):
            for c in range(n):
                coefficients = {}
                for m in range(n):
                    if ads[i][m][c] != 0:
                        key = var(r, m)
                        coefficients[key] = coefficients.get(key, 0) + \
                            ads[i][m][c]
                for k in range(n):
                    if ads[k][r][c] != 0:
                        key = var(k, i)
                        coefficients[key] = coefficients.get(key, 0) - \
                            ads[k][r][c]
                system.add_equation(coefficients)
    # M P symmetric
    for a, b in combinations(range(n), 2):
        coefficients = {}
        for m in range(n):
            if M[a][m] != 0:
                coefficients[var(m, b)] = coefficients.get(var(m, b), 0) + \
                    M[a][m]
            if M[b][m] != 0:
                coefficients[var(m, a)] = coefficients.get(var(m, a), 0) - \
                    M[b][m]
        system.add_equation(coefficients)
    return system


def symmetric_centroid(g: MetricLieAlgebra) -> List[Matrix]:
    """
    Basis of the space of self-adjoint P with P[x,y] = [Px,y]

    Returns
    -------
        list of n x n matrices, echelon ordered
    """
    n = g.dim
    system = _centroid_system(g)
    metriclie_log.debug("symmetric centroid of {}: {}".format(g.name, system))
    kernel = system.solve().kernel
    return [v.reshape(n, n) for v in kernel]


def _generated_algebra(operators: List[Matrix], n: int) -> List[Matrix]:
    """ basis of the associative algebra with 1 generated by operators """
    flat = Subspace(n * n, [eye(n).reshape(n * n, 1)] +
                    [P.reshape(n * n, 1) for P in operators])
    while True:
        basis = [v.reshape(n, n) for v in flat.vectors()]
        larger = flat + Subspace(n * n, [(P * Q).reshape(n * n, 1)
                                         for P in basis for Q in basis])
        if larger.dim == flat.dim:
            return basis
        flat = larger


def _semisimple_quotient_dim(algebra: List[Matrix]) -> int:
    """ dim A - dim rad(A), rad(A) = kernel of the trace form """
    d = len(algebra)
    T = Matrix(d, d, lambda a, b: (algebra[a] * algebra[b]).trace())
    return d - len(nullspace(T))


class Splitting(NamedTuple):
    """
    Orthogonal decomposition g = g1 + g2 into nontrivial ideals

    Attributes
    ----------
    projector : Matrix
        self-adjoint centroid idempotent with image g1 and kernel g2
    first : Subspace
    second : Subspace
    """
    projector: Matrix
    first: Subspace
    second: Subspace


def _nontrivial_projector(projectors: List[Matrix], n: int):
    for E in projectors:
        if not E.is_zero_matrix and E != eye(n):
            return E
    return None


def decompose(g: MetricLieAlgebra, trials: int = None,
              seed: int = None) -> Decision:
    """
    Decides whether g is the orthogonal sum of two nontrivial ideals

    Parameters
    ----------
        g: MetricLieAlgebra
        trials: int
            number of random centroid combinations tried
            (default from settings)
        seed: int
            random seed (default from settings)

    Returns
    -------
        Decision: Yes with a Splitting; No when the algebra generated by
        the symmetric centroid is local; Unknown when no idempotent is
        found by rational spectral splitting
    """
    n = g.dim
    if n == 0:
        return Decision.no(None, 'the zero algebra is not decomposable')
    centroid = symmetric_centroid(g)
    candidates = list(centroid)
    rng = Settings.rng(seed)
    bound = Settings.get('random_coefficient_range')
    for _ in range(Settings.get('centroid_random_trials', trials)):
        coefficients = rng.integers(-bound, bound + 1, size=len(centroid))
        candidates.append(sum((int(c) * P for c, P in
                               zip(coefficients, centroid)), zeros(n, n)))
    for P in candidates:
        E = _nontrivial_projector(spectral_idempotents(P), n)
        if E is not None:
            first = Subspace.image(E)
            second = Subspace.kernel(E)
            return Decision.yes(Splitting(E, first, second))
    if _semisimple_quotient_dim(_generated_algebra(centroid, n)) == 1:
        return Decision.no(None, 'the symmetric centroid generates a local '
                                 'algebra')
    return Decision.unknown('no rational idempotent of the symmetric '
                            'centroid was found', 'decompose')


def _check_involution(g: MetricLieAlgebra, theta: Matrix):
    theta = Matrix(theta)
    if theta * theta != eye(g.dim):
        raise algebra_exceptions.NotInvolutionError('theta')
    if theta.T * g.gram * theta != g.gram:
        raise algebra_exceptions.NotIsometryError('theta')
    return theta


def triple_signature(g: MetricLieAlgebra, theta: Matrix) -> Signature:
    """
    Signature of the form restricted to g_- = ker(theta + 1)

    Raises
    ------
        NotInvolutionError, NotIsometryError
    """
    theta = _check_involution(g, theta)
    minus = Subspace.kernel(theta + eye(g.dim))
    restricted = g.form.restrict(Matrix(minus.basis))
    signature = restricted.signature()
    # g_+ and g_- are orthogonal for an isometric involution
    assert signature.r == 0
    return signature


class Fingerprint(NamedTuple):
    """
    Isomorphism invariants of a metric Lie algebra
    """
    dim: int
    signature: Tuple[int, int]
    derived_dims: Tuple[int, ...]
    lower_central_dims: Tuple[int, ...]
    center_dim: int
    nilindex: Optional[int]
    centroid_dim: int
    radical_chain_dims: Tuple[int, ...]
    ri_dim: int


def fingerprint(g: MetricLieAlgebra) -> Fingerprint:
    s = liealg.series(g.alg)
    ideal = canonical_isotropic_ideal(g)
    signature = g.signature()
    return Fingerprint(g.dim, (signature.p, signature.q),
                       tuple(U.dim for U in s.derived),
                       tuple(U.dim for U in s.lower_central),
                       s.center.dim, s.nilindex,
                       len(symmetric_centroid(g)),
                       tuple(R.dim for R in ideal.chain), ideal.ri.dim)
