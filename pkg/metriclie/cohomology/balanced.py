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
Balanced quadratic cocycles: the conditions (A_k) and (B_k) for
0 <= k <= m, where R_m+1(l) = 0 ends the radical chain of l, the
admissibility conditions (T_1), (T_2) of Z2-equivariant data and the
completion of the anti-invariant part of an isotropic ideal.

A condition that the implemented search cannot settle is Unknown. The
aggregate is then resolved exactly: (alpha, gamma) is balanced if and
only if the canonical isotropic ideal of its standard model is l^*.
"""
import logging

from collections import OrderedDict
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional

from sympy import Matrix, eye, zeros

from metriclie.algebra import liealg
from metriclie.algebra.equivar import z2_split
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.algebra.metric import (MetricLieAlgebra,
                                      canonical_isotropic_ideal,
                                      is_isotropic, perp)
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import (OrthogonalModule, QuadCocycle,
                                         heisenberg_basis)
from metriclie.exceptions import algebra_exceptions
from metriclie.extensions.quadext import standard_model
from metriclie.utils.decision import Check, Decision
from metriclie.utils.exactlin import LinearSystem
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


class AlphaSplit(NamedTuple):
    """
    alpha = alpha_0 + alpha_1 along a = a^l + rho(l)a

    Attributes
    ----------
    alpha0 : Cochain
        values in a^l
    alpha1 : Cochain
        values in rho(l)a
    """
    alpha0: Cochain
    alpha1: Cochain


class CentralWitness(NamedTuple):
    """
    Solution (L_0, A_0, Z_0) of the central equations with L_0 != 0; for
    k >= 1 Z_0 lies in R_k(l)^*, written on the echelon basis of R_k(l)
    """
    L0: Matrix
    A0: Matrix
    Z0: Matrix


class IdealWitness(NamedTuple):
    """
    Nonzero ideal k with a solution (Phi_1, Phi_2) of the (A_k) equations

    Attributes
    ----------
    ideal : Subspace
    phi1 : Matrix
        dim a x dim k, column j is Phi_1 of the j-th basis vector of k
    phi2 : Matrix
        dim R_k x dim k, column j is Phi_2 of the j-th basis vector of k
        on the echelon basis of R_k(l)
    """
    ideal: Subspace
    phi1: Matrix
    phi2: Matrix


class BalanceReport(NamedTuple):
    """
    Outcome of is_balanced

    Attributes
    ----------
    conditions : OrderedDict
        {'A0': Decision, 'B0': Decision, 'A1': ..., 'Bm': ...}
    aggregate : Decision
    m : int
        length of the radical chain, R_m+1(l) = 0
    cross_check : bool or None
        whether ri(standard model) = l^*, None when not computed
    """
    conditions: Dict[str, Decision]
    aggregate: Decision
    m: int
    cross_check: Optional[bool] = None

    def __bool__(self):
        return self.aggregate.is_yes


def _alpha_matrices(alpha: Cochain) -> List[Matrix]:
    """ M_i with M_i v = alpha(e_i, v) """
    n = alpha.ldim
    return [Matrix.hstack(*[alpha.value((i, j)) for j in range(n)])
            if n else zeros(alpha.vdim, 0) for i in range(n)]


def _gamma_matrices(gamma: Cochain) -> List[Matrix]:
    """ C_i with u^T C_i w = gamma(e_i, u, w) """
    n = gamma.ldim
    return [Matrix(n, n, lambda j, k: gamma.scalar_value((i, j, k)))
            for i in range(n)]


def _require_semisimple(module: OrthogonalModule):
    decision = liealg.module_is_semisimple(module.module)
    if not decision.is_yes:
        raise algebra_exceptions.ModuleNotSemisimpleError(decision.reason)


def alpha_split(alpha: Cochain, module: OrthogonalModule) -> AlphaSplit:
    """
    Splits alpha along a = a^l + rho(l)a

    Raises
    ------
        ModuleNotSemisimpleError
    """
    _require_semisimple(module)
    P = module.invariant_projection()
    values = Matrix(alpha.values)
    return AlphaSplit(alpha._like(P * values),
                      alpha._like((eye(module.dim) - P) * values))


def _is_nondegenerate(module: OrthogonalModule, U: Subspace) -> bool:
    """ the zero subspace counts as nondegenerate """
    if U.is_zero():
        return True
    return module.form.restrict(Matrix(U.basis)).is_nondegenerate()


def _central_solutions(alpha: Cochain, gamma: Cochain,
                       module: OrthogonalModule, candidates: Subspace,
                       R: Subspace) -> Decision:
    """
    Solutions (K, A, Z) with K in candidates, A in a, Z in R^* of
        alpha(L, K) = rho(L) A,
        gamma(L, K, r) = -<A, alpha(L, r)> + Z([L, r])
    for all L in l and r in R. Yes when K = 0 is forced.
    """
    if candidates.is_zero():
        return Decision.yes(reason='no candidates')
    L = module.algebra
    n, m = L.dim, module.dim
    c, r = candidates.dim, R.dim
    G = module.gram
    alphas = _alpha_matrices(alpha)
    gammas = _gamma_matrices(gamma)
    K = candidates.vectors()
    rs = R.vectors()
    system = LinearSystem(c + m + r)
    for i in range(n):
        rho = Matrix(module.module.rho_matrices[i])
        images = [alphas[i] * k for k in K]
        for a in range(m):
            row = {x: images[x][a] for x in range(c)}
            for b in range(m):
                row[c + b] = row.get(c + b, 0) - rho[a, b]
            system.add_equation(row)
        for t, rt in enumerate(rs):
            coordinates = R.coordinates(L.bracket(i, rt))
            paired = G * (alphas[i] * rt)
            row = {x: (K[x].T * gammas[i] * rt)[0, 0] for x in range(c)}
            for b in range(m):
                row[c + b] = paired[b]
            for s in range(r):
                row[c + m + s] = row.get(c + m + s, 0) - coordinates[s]
            system.add_equation(row)
    kernel = system.solve().kernel
    metriclie_log.debug("central system: {} unknowns, kernel {}"
                        "".format(c + m + r, len(kernel)))
    B = Matrix(candidates.basis)
    for v in kernel:
        x = v[:c, :]
        if not x.is_zero_matrix:
            return Decision.no(CentralWitness(B * x, v[c:c + m, :],
                                              v[c + m:, :]),
                               'a nonzero central element solves the '
                               'equations')
    return Decision.yes()


def check_A0(alpha: Cochain, gamma: Cochain,
             module: OrthogonalModule) -> Decision:
    """
    (A_0): every L_0 in z(l) cap ker rho admitting A_0 in a and Z_0 in
    l^* with alpha(L, L_0) = rho(L) A_0 and gamma(L, L_0, .) =
    -<A_0, alpha(L, .)> + <Z_0, [L, .]> is zero

    Returns
    -------
        Decision, No with a CentralWitness
    """
    L = module.algebra
    center = liealg.center(L)
    if L.dim and module.dim:
        columns = [Matrix(A).reshape(module.dim ** 2, 1)
                   for A in module.module.rho_matrices]
        kernel = Subspace.kernel(Matrix.hstack(*columns))
    else:
        kernel = Subspace.whole(L.dim)
    return _central_solutions(alpha, gamma, module, center & kernel,
                              Subspace.whole(L.dim))


def _bracket_kernel_pairs(L: LieAlgebra, basis: List[Matrix]) -> List[Matrix]:
    """ kernel of u_p ^ u_q -> [u_p, u_q], coefficients over pairs p < q """
    pairs = list(combinations(range(len(basis)), 2))
    if not pairs:
        return []
    B = Matrix.hstack(*[L.bracket(basis[p], basis[q]) for p, q in pairs])
    return Subspace.kernel(B).vectors()


def check_B0(alpha: Cochain, module: OrthogonalModule) -> Decision:
    """
    (B_0): alpha_0(ker [,]_l) in a^l is nondegenerate

    Returns
    -------
        Decision with the image subspace as witness
    """
    split = alpha_split(alpha, module)
    L = module.algebra
    basis = [L.vector(i) for i in range(L.dim)]
    values = Matrix(split.alpha0.values)
    image = Subspace(module.dim, [values * w for w in
                                  _bracket_kernel_pairs(L, basis)])
    if _is_nondegenerate(module, image):
        return Decision.yes(image)
    return Decision.no(image, "alpha_0(ker [,]) is degenerate")


def _chain_member(L: LieAlgebra, k: int, chain=None) -> Subspace:
    chain = liealg.radical_chain(L) if chain is None else chain
    return chain[k] if k < len(chain) else Subspace.zero(L.dim)


def _ideal_system(alpha: Cochain, gamma: Cochain, module: OrthogonalModule,
                  ideal: Subspace, R: Subspace) -> LinearSystem:
    """
    Affine system in Phi_1(K_j) in a and Phi_2(K_j) in R^*:
        rho(L) Phi_1(K) - Phi_1([L, K]) = alpha(L, K)
        -<Phi_1(K), alpha(L, r)> + Phi_2(K)([L, r]) + Phi_2([L, K])(r)
            = gamma(L, K, r)
    Phi_1(K_j)_a is unknown j * m + a, Phi_2(K_j)_s is d * m + j * r + s.
    """
    L = module.algebra
    n, m = L.dim, module.dim
    d, r = ideal.dim, R.dim
    G = module.gram
    alphas = _alpha_matrices(alpha)
    gammas = _gamma_matrices(gamma)
    K = ideal.vectors()
    rs = R.vectors()
    offset = d * m
    system = LinearSystem(d * (m + r))
    for i in range(n):
        rho = Matrix(module.module.rho_matrices[i]).tolist()
        brackets = [ideal.coordinates(L.bracket(i, k)) for k in K]
        R_brackets = [R.coordinates(L.bracket(i, rt)) for rt in rs]
        paired = [G * (alphas[i] * rt) for rt in rs]
        for j in range(d):
            value = alphas[i] * K[j]
            for a in range(m):
                row = {j * m + b: rho[a][b] for b in range(m)}
                for c in range(d):
                    key = c * m + a
                    row[key] = row.get(key, 0) - brackets[j][c]
                system.add_equation(row, value[a])
            for t in range(r):
                row = {j * m + b: -paired[t][b] for b in range(m)}
                for s in range(r):
                    key = offset + j * r + s
                    row[key] = row.get(key, 0) + R_brackets[t][s]
                for c in range(d):
                    key = offset + c * r + t
                    row[key] = row.get(key, 0) + brackets[j][c]
                system.add_equation(row, (K[j].T * gammas[i] * rs[t])[0, 0])
    return system


def solves_Ak(alpha: Cochain, gamma: Cochain, module: OrthogonalModule,
              k: int, ideal: Subspace, phi1, phi2) -> Check:
    """
    Verifies a candidate (k, Phi_1, Phi_2) of the (A_k) equations

    Parameters
    ----------
        ideal: Subspace
            ideal of l inside S(l) cap R_k(l)
        phi1: Matrix
            dim a x dim k
        phi2: Matrix
            dim R_k x dim k on the echelon basis of R_k(l)

    Returns
    -------
        Check, holds when the candidate solves the equations
    """
    L = module.algebra
    R = _chain_member(L, k)
    if not ideal <= (liealg.socle_ideal(L) & R):
        return Check.failed('the ideal is not contained in S(l) cap R_k(l)')
    if not liealg.is_ideal(L, ideal):
        return Check.failed('not an ideal')
    phi1, phi2 = Matrix(phi1), Matrix(phi2)
    if phi1.shape != (module.dim, ideal.dim) or \
            phi2.shape != (R.dim, ideal.dim):
        return Check.failed('Phi_1 or Phi_2 has the wrong shape')
    x = Matrix.vstack(phi1.T.reshape(ideal.dim * module.dim, 1),
                      phi2.T.reshape(ideal.dim * R.dim, 1))
    system = _ideal_system(alpha, gamma, module, ideal, R)
    for row in system.rows:
        total = sum((c * x[j] for j, c in row.items() if j < system.nvars),
                    0)
        if total != row.get(system.nvars, 0):
            return Check.failed('an equation fails')
    return Check.ok()


def check_Ak(alpha: Cochain, gamma: Cochain, module: OrthogonalModule,
             k: int, chain=None, seed: int = None) -> Decision:
    """
    (A_k), k >= 1: no nonzero ideal of l in S(l) cap R_k(l) admits
    (Phi_1, Phi_2). The central part is settled by one linear solve, the
    minimal non-central ideals are the simple summands of [l, S(l) cap
    R_k(l)] when these are pairwise non-isomorphic.

    Returns
    -------
        Decision: No with a CentralWitness or IdealWitness, Unknown when
        the minimal ideals cannot be enumerated
    """
    L = module.algebra
    R = _chain_member(L, k, chain)
    if R.is_zero():
        return Decision.yes(reason='R_k(l) = 0')
    N = liealg.socle_ideal(L) & R
    decision = _central_solutions(alpha, gamma, module,
                                  N & liealg.center(L), R)
    if decision.is_no:
        return decision
    moving = liealg.bracket_span(L, Subspace.whole(L.dim), N)
    if moving.is_zero():
        return Decision.yes()
    pieces = liealg.simple_summands(LieModule.adjoint(L), moving,
                                    seed=seed)
    if not pieces.is_yes:
        return Decision.unknown('the minimal ideals in S(l) cap R_{}(l) '
                                'could not be enumerated'.format(k),
                                'A{}'.format(k))
    for piece in pieces.witness:
        solution = _ideal_system(alpha, gamma, module, piece, R).solve()
        if solution.solvable:
            x = solution.particular
            d, m = piece.dim, module.dim
            phi1 = x[:d * m, :].reshape(d, m).T
            phi2 = x[d * m:, :].reshape(d, R.dim).T
            return Decision.no(IdealWitness(piece, phi1, phi2),
                               'a minimal ideal solves the equations')
    return Decision.yes()


def _good_piece(alpha: Cochain, module: OrthogonalModule, R: Subspace,
                piece: Subspace) -> bool:
    """
    Solvability of <alpha(L, K) - rho(L) Phi(K) + Phi([L, K]), B> = 0
    for B in piece, Phi(r_t)_a is unknown a * r + t
    """
    L = module.algebra
    m, r = module.dim, R.dim
    G = module.gram
    alphas = _alpha_matrices(alpha)
    rs = R.vectors()
    system = LinearSystem(m * r)
    for i in range(L.dim):
        rho = Matrix(module.module.rho_matrices[i])
        for t, rt in enumerate(rs):
            coordinates = R.coordinates(L.bracket(i, rt))
            value = alphas[i] * rt
            for B in piece.vectors():
                dual = B.T * G
                against_rho = dual * rho
                row = {a * r + t: -against_rho[a] for a in range(m)}
                for s in range(r):
                    if coordinates[s] == 0:
                        continue
                    for a in range(m):
                        key = a * r + s
                        row[key] = row.get(key, 0) + coordinates[s] * dual[a]
                system.add_equation(row, -(dual * value)[0, 0])
    return system.solve().solvable


def check_Bk(alpha: Cochain, module: OrthogonalModule, k: int,
             chain=None, seed: int = None) -> Decision:
    """
    (B_k), k >= 1: the maximal submodule b_k of a for which
    <alpha(L, K), B> = <rho(L) Phi(K) - Phi([L, K]), B> has a solution
    Phi in Hom(R_k(l), a) is nondegenerate.

    b_k is the sum of its isotypic parts. The trivial part is a^l
    orthogonal to alpha_0 of the kernel of the bracket l (x) R_k -> l,
    the non-trivial part is the sum of the simple summands of rho(l)a
    whose system is solvable; this needs rho(l)a multiplicity free.

    Returns
    -------
        Decision with b_k as witness, Unknown when rho(l)a has isotypic
        multiplicity
    """
    L = module.algebra
    R = _chain_member(L, k, chain)
    if R.is_zero():
        return Decision.yes(Subspace.zero(module.dim), 'R_k(l) = 0')
    split = alpha_split(alpha, module)
    n, m = L.dim, module.dim
    rs = R.vectors()
    pairs = [(i, t) for i in range(n) for t in range(len(rs))]
    bracket = Matrix.hstack(*[L.bracket(i, rs[t]) for i, t in pairs])
    alpha0 = _alpha_matrices(split.alpha0)
    values = Matrix.hstack(*[alpha0[i] * rs[t] for i, t in pairs])
    image = Subspace(m, [values * w for w in
                         Subspace.kernel(bracket).vectors()])
    invariants = module.module.invariants()
    trivial = invariants if image.is_zero() else \
        invariants & Subspace.kernel(Matrix(image.basis).T * module.gram)
    moving = module.module.moving_part()
    b = trivial
    if not moving.is_zero():
        pieces = liealg.simple_summands(module.module, moving, seed=seed)
        if not pieces.is_yes:
            return Decision.unknown('rho(l)a is not multiplicity free, the '
                                    'maximal submodule b_{} is not certified'
                                    ''.format(k), 'B{}'.format(k))
        for piece in pieces.witness:
            if _good_piece(alpha, module, R, piece):
                b = b + piece
    metriclie_log.debug("b_{} has dimension {}".format(k, b.dim))
    if _is_nondegenerate(module, b):
        return Decision.yes(b)
    return Decision.no(b, 'b_{} is degenerate'.format(k))


def ri_criterion(z: QuadCocycle) -> bool:
    """ ri(d_{alpha,gamma}(l, a)) = l^* """
    witness = standard_model(z)
    return canonical_isotropic_ideal(witness.g).ri == witness.ri


def is_balanced(z: QuadCocycle, phi_l=None, cross_check: bool = False,
                seed: int = None) -> BalanceReport:
    """
    Checks (A_k) and (B_k) for 0 <= k <= m

    Parameters
    ----------
        z: QuadCocycle
            over a semisimple orthogonal module
        phi_l: EquivStructure
            not used, balancedness depends on the class alone
        cross_check: bool
            always compare with ri(standard model) = l^*
        seed: int

    Returns
    -------
        BalanceReport; the aggregate is No when the module is not
        semisimple (the balanced set is empty)
    """
    metriclie_log.info("balancedness of a cocycle over {}"
                       "".format(z.algebra.name))
    module = z.module
    L = module.algebra
    chain = liealg.radical_chain(L)
    m = max(len(chain) - 2, 0)
    semisimple = liealg.module_is_semisimple(module.module)
    if not semisimple.is_yes:
        return BalanceReport(OrderedDict(), Decision.no(
            None, 'the module is not semisimple, no class is balanced'), m)
    conditions = OrderedDict()
    conditions['A0'] = check_A0(z.alpha, z.gamma, module)
    conditions['B0'] = check_B0(z.alpha, module)
    for k in range(1, m + 1):
        conditions['A{}'.format(k)] = check_Ak(z.alpha, z.gamma, module, k,
                                               chain, seed)
        conditions['B{}'.format(k)] = check_Bk(z.alpha, module, k, chain,
                                               seed)
    for label, decision in conditions.items():
        metriclie_log.debug("{}: {} {}".format(label, decision.kind.name,
                                               decision.reason))
    aggregate = Decision.combine(conditions.values())
    criterion = None
    if aggregate.is_unknown or cross_check:
        criterion = ri_criterion(z)
        # undecided conditions stay Unknown in the report
        if aggregate.is_unknown:
            if criterion:
                aggregate = Decision.yes(reason='ri(d) = l*')
            else:
                aggregate = Decision.no(reason='ri(d) differs from l*')
        elif criterion != aggregate.is_yes:
            metriclie_log.warning("the conditions and ri(d) = l* disagree")
    metriclie_log.info("balanced: {}".format(aggregate.kind.name))
    return BalanceReport(conditions, aggregate, m, criterion)


def heisenberg_balanced_set_member(alpha: Cochain,
                                   module: OrthogonalModule) -> bool:
    """
    Membership of alpha over h(1) = {[X, Y] = Z} in the set of balanced
    normal forms: alpha != 0, alpha(X, Y) = 0 and alpha(Z, l) a
    nondegenerate subspace of a^l
    """
    x, y, zz = heisenberg_basis(module.algebra)
    if alpha.is_zero() or not alpha.value((x, y)).is_zero_matrix:
        return False
    images = Subspace(module.dim, [alpha.value((zz, x)),
                                   alpha.value((zz, y))])
    if not images <= module.module.invariants():
        return False
    return not images.is_zero() and _is_nondegenerate(module, images)


def check_T2(alpha: Cochain, module: OrthogonalModule, theta_l,
             theta_a=None) -> bool:
    """
    (T_2): a^l_+ = alpha_0(ker [,] on Lambda^2 l_-)

    Parameters
    ----------
        theta_l: Matrix
            involution of l
        theta_a: Matrix
            involution of a, default the theta of module.equiv or 1
    """
    L = module.algebra
    if theta_a is None:
        theta_a = module.equiv.theta if module.equiv is not None and \
            module.equiv.theta is not None else eye(module.dim)
    theta_a = Matrix(theta_a)
    minus = z2_split(L, theta_l).minus.vectors()
    split = alpha_split(alpha, module)
    image = Subspace(module.dim, [
        sum((w[a] * split.alpha0.evaluate(minus[p], minus[q])
             for a, (p, q) in enumerate(combinations(range(len(minus)), 2))),
            zeros(module.dim, 1))
        for w in _bracket_kernel_pairs(L, minus)])
    plus = module.module.invariants() & \
        Subspace.kernel(theta_a - eye(module.dim))
    return image == plus


def admissible(z: QuadCocycle, theta_l, theta_a=None,
               seed: int = None) -> Decision:
    """
    (T_1) properness of (l, theta_l), (T_2) and balancedness

    Returns
    -------
        Decision, Unknown only when balancedness is Unknown
    """
    if not z2_split(z.algebra, theta_l).proper:
        return Decision.no(None, '(T_1) fails: (l, theta_l) is not proper')
    if not check_T2(z.alpha, z.module, theta_l, theta_a):
        return Decision.no(None, '(T_2) fails')
    return is_balanced(z, seed=seed).aggregate


class IdealCompletion(NamedTuple):
    """
    Attributes
    ----------
    ri_plus : Subspace
    ri : Subspace
        ri_+ + ri_-
    verified : Check
        ri is an isotropic ideal with ri^perp/ri abelian
    """
    ri_plus: Subspace
    ri: Subspace
    verified: Check


def complete_isotropic_ideal(g: MetricLieAlgebra, theta,
                             ri_minus: Subspace) -> IdealCompletion:
    """
    ri_+ = {X in [g_-, P] : [X, P] = 0} with P = (ri_-)^perp cap g_-

    Raises
    ------
        DimensionMismatchError: ri_- is not contained in g_-
    """
    split = z2_split(g, theta)
    if not ri_minus <= split.minus:
        raise algebra_exceptions.DimensionMismatchError(
            'ri_-', 'subspace of g_-', 'subspace leaving g_-')
    P = perp(g, ri_minus) & split.minus
    span = liealg.bracket_span(g.alg, split.minus, P)
    ri_plus = liealg.centralizer(g.alg, P, span)
    ri = ri_plus + ri_minus
    if not is_isotropic(g, ri):
        verified = Check.failed('ri is not isotropic')
    elif not liealg.is_ideal(g.alg, ri):
        verified = Check.failed('ri is not an ideal')
    else:
        ri_perp = perp(g, ri)
        verified = Check.ok() if \
            liealg.bracket_span(g.alg, ri_perp, ri_perp) <= ri else \
            Check.failed('ri^perp/ri is not abelian')
    if not verified:
        metriclie_log.warning("completed ideal fails: {}"
                              "".format(verified.violation))
    return IdealCompletion(ri_plus, ri, verified)
