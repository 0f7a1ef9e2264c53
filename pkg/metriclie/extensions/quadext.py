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
Quadratic extensions of a Lie algebra l by an orthogonal l-module a:
the standard model d_{alpha,gamma}(l, a), double extensions, cotangent
algebras, the canonical quadratic extension of a metric Lie algebra and
the extraction of a quadratic cocycle from an extension.

Basis conventions
-----------------
A standard model of dimension 2 n + m is written on the basis
(Z_1, ..., Z_n, A_1, ..., A_m, L_1, ..., L_n): the dual basis of l^*
first, then a, then l. Double extensions d_pi(g, h) use (h^*, g, h).
"""
import logging

from itertools import combinations
from typing import List, NamedTuple, Optional

from sympy import Matrix, Rational, eye, zeros

from metriclie.algebra import liealg
from metriclie.algebra.equivar import (EquivStructure, check_equivariant,
                                       standard_model_structure)
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.algebra.metric import (MetricLieAlgebra,
                                      canonical_isotropic_ideal,
                                      check_metric, is_isotropic, perp)
from metriclie.cohomology import qcohom
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import OrthogonalModule, QuadCocycle
from metriclie.exceptions import (algebra_exceptions, cochain_exceptions,
                                  warning_formatting)
from metriclie.utils.decision import Check
from metriclie.utils.exactlin import (LinearSystem, SymForm, inverse, rank,
                                      solve_affine)
from metriclie.utils.settings import Settings
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


class StandardModelData(NamedTuple):
    """
    Input of the standard model construction

    Attributes
    ----------
    cocycle : QuadCocycle
        (alpha, gamma), its module carries l, a and phi_a
    phi_l : EquivStructure
        structure on l, optional
    """
    cocycle: QuadCocycle
    phi_l: Optional[EquivStructure] = None

    @property
    def algebra(self) -> LieAlgebra:
        return self.cocycle.algebra

    @property
    def module(self) -> OrthogonalModule:
        return self.cocycle.module


class QuadExtensionWitness(NamedTuple):
    """
    Quadratic extension (g, ri, i, p) of (l, phi_l) by a

    Attributes
    ----------
    g : MetricLieAlgebra
    ri : Subspace
        isotropic ideal of g
    i_map : Matrix
        dim g x dim a, columns in ri^perp whose classes realise
        i: a -> ri^perp/ri
    p_map : Matrix
        dim l x dim g, the projection g -> l with kernel ri^perp
    l : LieAlgebra
    module : OrthogonalModule
        a as an orthogonal l-module (with phi_a as its equiv)
    phi : EquivStructure
        structure on g, optional
    phi_l : EquivStructure
        structure on l, optional
    """
    g: MetricLieAlgebra
    ri: Subspace
    i_map: Matrix
    p_map: Matrix
    l: LieAlgebra
    module: OrthogonalModule
    phi: Optional[EquivStructure] = None
    phi_l: Optional[EquivStructure] = None


class ExtensionReport(NamedTuple):
    """
    Outcome of verify_quadratic_extension, one Check per axiom

    Attributes
    ----------
    metric : Check
        g is an equivariant metric Lie algebra
    ideal : Check
        ri is an isotropic invariant ideal
    sequence : Check
        0 -> a -> ri^perp/ri, g/ri^perp -> l is exact and compatible with
        rho, the form of a and the equivariant structures
    """
    metric: Check
    ideal: Check
    sequence: Check

    def __bool__(self):
        return self.holds

    @property
    def holds(self) -> bool:
        return bool(self.metric and self.ideal and self.sequence)


def _dual_names(names) -> List[str]:
    return ['Z_{}'.format(n) for n in names]


def _module_names(m: int, taken) -> List[str]:
    names = ['A{}'.format(b + 1) for b in range(m)]
    if set(names) & set(taken):
        names = ['a_{}'.format(b + 1) for b in range(m)]
    return names


def _add(brackets, i, j, k, value):
    if value == 0:
        return
    entry = brackets.setdefault((i, j), {})
    entry[k] = entry.get(k, 0) + value


def standard_model(data, phi_l: Optional[EquivStructure] = None,
                   name: str = '') -> QuadExtensionWitness:
    """
    Builds the standard model d_{alpha,gamma}(l, phi_l, a) with its
    canonical quadratic extension structure ri = l^*

    Parameters
    ----------
        data: StandardModelData or QuadCocycle
        phi_l: EquivStructure
            structure on l, used when data is a bare cocycle
        name: str

    Returns
    -------
        QuadExtensionWitness with g validated (Jacobi identity and
        invariance of the form)

    Raises
    ------
        NotCocycleError: (alpha, gamma) is not an (invariant) cocycle
        JacobiIdentityError, NotMetricError
    """
    if isinstance(data, QuadCocycle):
        data = StandardModelData(data, phi_l)
    z, phi_l = data.cocycle, data.phi_l
    module = z.module
    L = module.algebra
    check = qcohom.is_cocycle(z.alpha, z.gamma, module)
    if not check:
        raise cochain_exceptions.NotCocycleError(check.violation)
    if phi_l is not None and \
            not qcohom.is_invariant_cocycle(z, phi_l, module.equiv):
        raise cochain_exceptions.NotCocycleError(
            'the cocycle is not invariant under the equivariant structure')
    n, m = L.dim, module.dim
    G = module.gram
    rho = [Matrix(A) for A in module.module.rho_matrices]
    Z = list(range(n))
    A = list(range(n, n + m))
    Ls = list(range(n + m, 2 * n + m))
    brackets = {}
    constants = L.structure_constants()
    for i, j in combinations(range(n), 2):
        for k in range(n):
            _add(brackets, Ls[i], Ls[j], Z[k], z.gamma.scalar_value((i, j, k)))
        value = z.alpha.value((i, j))
        for b in range(m):
            _add(brackets, Ls[i], Ls[j], A[b], value[b])
        for k, c in constants.get((i, j), {}).items():
            _add(brackets, Ls[i], Ls[j], Ls[k], c)
    for i in range(n):
        for b in range(m):
            for k in range(n):
                # -<A_b, alpha(L_i, L_k)>
                pairing = (G[b, :] * z.alpha.value((i, k)))[0, 0]
                _add(brackets, Ls[i], A[b], Z[k], -pairing)
            for c in range(m):
                _add(brackets, Ls[i], A[b], A[c], rho[i][c, b])
        for j in range(n):
            for k in range(n):
                # -Z_j o ad(L_i) evaluated on L_k
                _add(brackets, Ls[i], Z[j], Z[k], -L.ad_matrices[i][j, k])
    for b, c in combinations(range(m), 2):
        for k in range(n):
            _add(brackets, A[b], A[c], Z[k], (rho[k].T * G)[b, c])
    names = list(L.basis_names)
    dual = _dual_names(names)
    names = dual + _module_names(m, names + dual) + names
    label = name or 'd({}, a)'.format(L.name)
    algebra = LieAlgebra(2 * n + m, brackets, names, label)
    form = zeros(2 * n + m, 2 * n + m)
    form[n:n + m, n:n + m] = G
    for i in range(n):
        form[Z[i], Ls[i]] = form[Ls[i], Z[i]] = 1
    g = MetricLieAlgebra(algebra, SymForm(form), label).validate()
    phi = None
    if phi_l is not None:
        phi_a = module.equiv or EquivStructure.trivial(m)
        phi = standard_model_structure(phi_l, phi_a, label)
        check = check_equivariant(g, phi)
        if not check:
            raise cochain_exceptions.QuadraticExtensionError(
                'the induced structure fails: {}'.format(check.violation))
    i_map = zeros(2 * n + m, m)
    for b in range(m):
        i_map[A[b], b] = 1
    p_map = zeros(n, 2 * n + m)
    for i in range(n):
        p_map[i, Ls[i]] = 1
    metriclie_log.info("standard model {} of dimension {}".format(label,
                                                                 g.dim))
    return QuadExtensionWitness(g, Subspace.coordinate(2 * n + m, Z),
                                i_map, p_map, L, module, phi, phi_l)


def _check_pi(g: MetricLieAlgebra, h: LieAlgebra, pi: List[Matrix]):
    if len(pi) != h.dim:
        raise algebra_exceptions.DimensionMismatchError(
            'pi', h.dim, len(pi))
    G = g.gram
    for t, D in enumerate(pi):
        if D.shape != (g.dim, g.dim):
            raise algebra_exceptions.DimensionMismatchError(
                'pi({})'.format(h.basis_names[t]), (g.dim, g.dim), D.shape)
        check = liealg.check_derivation(g.alg, D)
        if not check:
            raise algebra_exceptions.NotDerivationError(
                'pi({})'.format(h.basis_names[t]),
                'fails on the pair {}'.format(check.violation))
        if not (D.T * G + G * D).is_zero_matrix:
            raise algebra_exceptions.NotDerivationError(
                'pi({})'.format(h.basis_names[t]), 'not antisymmetric')
    for s, t in combinations(range(h.dim), 2):
        image = zeros(g.dim, g.dim)
        for k, c in h.structure_constants().get((s, t), {}).items():
            image += c * pi[k]
        if pi[s] * pi[t] - pi[t] * pi[s] != image:
            raise algebra_exceptions.NotDerivationError(
                'pi', 'not a homomorphism on ({}, {})'.format(
                    h.basis_names[s], h.basis_names[t]))


def double_extension(g: MetricLieAlgebra, h: LieAlgebra, pi,
                     form_h=None, name: str = '') -> MetricLieAlgebra:
    """
    Double extension d_pi(g, h) on h^* + g + h

    Parameters
    ----------
        g: MetricLieAlgebra
        h: LieAlgebra
        pi: list of Matrix
            pi(H_t) for the basis of h, antisymmetric derivations of g
            forming a representation
        form_h: SymForm or Matrix
            invariant symmetric form on h (may degenerate), default zero
        name: str

    Returns
    -------
        MetricLieAlgebra of dimension dim g + 2 dim h

    Raises
    ------
        NotDerivationError: pi is not a representation by antisymmetric
        derivations
    """
    pi = [Matrix(D) for D in pi]
    _check_pi(g, h, pi)
    k, n = h.dim, g.dim
    form_h = SymForm.zero(k) if form_h is None else \
        (form_h if isinstance(form_h, SymForm) else SymForm(form_h))
    G = g.gram
    Z = list(range(k))
    X = list(range(k, k + n))
    H = list(range(k + n, 2 * k + n))
    brackets = {}
    for a, b in combinations(range(n), 2):
        for c, value in g.alg.structure_constants().get((a, b), {}).items():
            _add(brackets, X[a], X[b], X[c], value)
        for t in range(k):
            # beta(X_a, X_b)(H_t) = <pi(H_t) X_a, X_b>
            _add(brackets, X[a], X[b], Z[t], (pi[t][:, a].T * G[:, b])[0, 0])
    for t in range(k):
        for b in range(n):
            for c in range(n):
                _add(brackets, H[t], X[b], X[c], pi[t][c, b])
        for s in range(k):
            for u in range(k):
                _add(brackets, H[t], Z[s], Z[u], -h.ad_matrices[t][s, u])
    for s, t in combinations(range(k), 2):
        for u, value in h.structure_constants().get((s, t), {}).items():
            _add(brackets, H[s], H[t], H[u], value)
    names = list(h.basis_names)
    dual = _dual_names(names)
    label = name or 'd_pi({}, {})'.format(g.name, h.name)
    algebra = LieAlgebra(2 * k + n, brackets,
                         dual + list(g.basis_names) + names, label)
    form = zeros(2 * k + n, 2 * k + n)
    form[k:k + n, k:k + n] = G
    form[k + n:, k + n:] = Matrix(form_h.matrix)
    for t in range(k):
        form[Z[t], H[t]] = form[H[t], Z[t]] = 1
    result = MetricLieAlgebra(algebra, SymForm(form), label).validate()
    metriclie_log.info("double extension {} of dimension {}"
                       "".format(label, result.dim))
    return result


def cotangent(h: LieAlgebra, form_h=None, name: str = '') -> MetricLieAlgebra:
    """
    h^* semidirect h with <H_1 + Z_1, H_2 + Z_2> = Z_1(H_2) + Z_2(H_1) +
    <H_1, H_2>_h, on the basis (h^*, h); signature (dim h, dim h)
    """
    zero = MetricLieAlgebra(LieAlgebra(0, name='0'), SymForm.zero(0), '0')
    return double_extension(zero, h, [zeros(0, 0)] * h.dim, form_h,
                            name or 'T*{}'.format(h.name))


def _fibre_coordinates(w: QuadExtensionWitness, X: Matrix):
    """ coordinates of X in ri^perp on i(a) modulo ri, None outside """
    m = w.i_map.cols
    basis = Matrix.hstack(w.i_map, *w.ri.vectors()) if w.ri.dim else \
        Matrix(w.i_map)
    if basis.cols == 0:
        return zeros(0, 1) if Matrix(X).is_zero_matrix else None
    solution = solve_affine(basis, list(X))
    if not solution.solvable:
        return None
    return solution.particular[:m, :]


def _matched(phi: EquivStructure, other: Optional[EquivStructure], dim: int):
    """ pairs (generator on phi, generator of the same name on other) """
    pairs = []
    for label, D in phi.derivations.items():
        B = zeros(dim, dim) if other is None else \
            other.derivations.get(label, zeros(dim, dim))
        pairs.append((label, D, B))
    for label, k in phi.automorphisms.items():
        B = eye(dim) if other is None else \
            other.automorphisms.get(label, eye(dim))
        pairs.append((label, k, B))
    return pairs


def _check_sequence(w: QuadExtensionWitness) -> Check:
    g, n = w.g, w.l.dim
    m = w.module.dim
    i_map, p_map = Matrix(w.i_map), Matrix(w.p_map)
    if i_map.shape != (g.dim, m) or p_map.shape != (n, g.dim):
        return Check.failed('i or p has the wrong shape')
    if w.module.algebra.dim != n:
        return Check.failed('the module is not a module of l')
    check = w.module.check()
    if not check:
        return Check.failed('a: {}'.format(check.violation))
    ri_perp = perp(g, w.ri)
    if Subspace.kernel(p_map) != ri_perp or rank(p_map) != n:
        return Check.failed('p is not onto l with kernel ri^perp')
    check = liealg.is_homomorphism(p_map, g.alg, w.l)
    if not check:
        return Check.failed('p is not a homomorphism on {}'
                            ''.format(check.violation))
    image = w.ri + Subspace.image(i_map) if m else w.ri
    if not image <= ri_perp or image.dim != ri_perp.dim or \
            w.ri.dim + m != ri_perp.dim:
        return Check.failed('i is not an isomorphism onto ri^perp/ri')
    if i_map.T * g.gram * i_map != w.module.gram:
        return Check.failed('i is not an isometry')
    for j in range(g.dim):
        R = w.module.rho(p_map[:, j])
        for b in range(m):
            X = g.alg.bracket(j, i_map[:, b]) - i_map * R[:, b]
            if not w.ri.contains(X):
                return Check.failed('[g, i(a)] does not induce rho on {}'
                                    ''.format(g.basis_names[j]))
    if w.phi is not None:
        phi_a = w.module.equiv
        for label, A, B in _matched(w.phi, w.phi_l, n):
            if p_map * A != B * p_map:
                return Check.failed('p is not equivariant under {}'
                                    ''.format(label))
        for label, A, B in _matched(w.phi, phi_a, m):
            for b in range(m):
                if not w.ri.contains(A * i_map[:, b] - i_map * B[:, b]):
                    return Check.failed('i is not equivariant under {}'
                                        ''.format(label))
    return Check.ok()


def verify_quadratic_extension(w: QuadExtensionWitness) -> ExtensionReport:
    """
    Checks the axioms of a quadratic extension

    Parameters
    ----------
        w: QuadExtensionWitness

    Returns
    -------
        ExtensionReport, true when all axioms hold
    """
    metric = check_metric(w.g)
    if metric and w.phi is not None:
        metric = check_equivariant(w.g, w.phi)
    if not is_isotropic(w.g, w.ri):
        ideal = Check.failed('ri is not isotropic')
    elif not liealg.is_ideal(w.g.alg, w.ri):
        ideal = Check.failed('ri is not an ideal')
    elif w.phi is not None and \
            not all(w.ri.apply(A) <= w.ri for A in w.phi.all_matrices()):
        ideal = Check.failed('ri is not invariant')
    else:
        ideal = Check.ok()
    report = ExtensionReport(metric, ideal, _check_sequence(w))
    metriclie_log.debug("quadratic extension axioms: {}".format(report))
    return report


def _section_system(w: QuadExtensionWitness) -> LinearSystem:
    """ unknown S (dim g x dim l, S[r, c] at r * n + c): p S = 1 and S
    intertwines the equivariant structures """
    N, n = w.g.dim, w.l.dim
    p_map = Matrix(w.p_map).tolist()
    system = LinearSystem(N * n)
    for a in range(n):
        for c in range(n):
            system.add_equation({k * n + c: p_map[a][k] for k in range(N)},
                                1 if a == c else 0)
    if w.phi is None:
        return system
    for _, A, B in _matched(w.phi, w.phi_l, n):
        A, B = A.tolist(), B.tolist()
        # (A S - S B)[r, c] = 0
        for r in range(N):
            for c in range(n):
                row = {}
                for k in range(N):
                    if A[r][k] != 0:
                        row[k * n + c] = row.get(k * n + c, 0) + A[r][k]
                for k in range(n):
                    if B[k][c] != 0:
                        row[r * n + k] = row.get(r * n + k, 0) - B[k][c]
                system.add_equation(row)
    return system


def _isotropic_correction(w: QuadExtensionWitness, s0: Matrix) -> Matrix:
    """ s = s0 - 1/2 t with t(L) in ri and <t(L), s0(L')> = <s0 L, s0 L'> """
    n = w.l.dim
    if n == 0:
        return s0
    G = w.g.gram
    B = s0.T * G * s0
    if B.is_zero_matrix:
        return s0
    if w.ri.dim != n:
        raise cochain_exceptions.SectionError(
            'dim ri = {} differs from dim l = {}'.format(w.ri.dim, n))
    R = Matrix(w.ri.basis)
    pairing = R.T * G * s0
    T = R * inverse(pairing.T) * B
    return s0 - Rational(1, 2) * T


def validate_section(w: QuadExtensionWitness, s: Matrix) -> Check:
    """ p s = 1, isotropic image and equivariance """
    s = Matrix(s)
    n = w.l.dim
    if s.shape != (w.g.dim, n):
        return Check.failed('s has shape {}'.format(s.shape))
    if Matrix(w.p_map) * s != eye(n):
        return Check.failed('p s is not the identity')
    if not (s.T * w.g.gram * s).is_zero_matrix:
        return Check.failed('the image of s is not isotropic')
    if w.phi is not None:
        for label, A, B in _matched(w.phi, w.phi_l, n):
            if A * s != s * B:
                return Check.failed('s is not equivariant under {}'
                                    ''.format(label))
    return Check.ok()


def isotropic_section(w: QuadExtensionWitness, s0=None) -> Matrix:
    """
    Equivariant section s of p: g -> l with isotropic image

    Parameters
    ----------
        w: QuadExtensionWitness
        s0: Matrix
            equivariant section to correct, default the one found by the
            exact solve of p s = 1 and the equivariance equations

    Returns
    -------
        dim g x dim l Matrix

    Raises
    ------
        SectionError: no equivariant section exists (the structure does
        not act semisimply) or s0 is not an equivariant section
    """
    if s0 is None:
        solution = _section_system(w).solve()
        if not solution.solvable:
            raise cochain_exceptions.SectionError(
                'no equivariant section of p exists')
        s0 = solution.particular.reshape(w.g.dim, w.l.dim)
    else:
        s0 = Matrix(s0)
        if s0.shape != (w.g.dim, w.l.dim) or \
                Matrix(w.p_map) * s0 != eye(w.l.dim):
            raise cochain_exceptions.SectionError('s0 is not a section of p')
    s = _isotropic_correction(w, s0)
    check = validate_section(w, s)
    if not check:
        raise cochain_exceptions.SectionError(check.violation)
    return s


def _extract(w: QuadExtensionWitness, s: Matrix) -> QuadCocycle:
    n, m = w.l.dim, w.module.dim
    g = w.g
    columns = [s[:, i] for i in range(n)]
    images = {}
    for i, j in combinations(range(n), 2):
        images[(i, j)] = g.alg.bracket(columns[i], columns[j])

    def alpha(subset):
        i, j = subset
        X = images[(i, j)] - s * w.l.bracket(i, j)
        value = _fibre_coordinates(w, X)
        if value is None:
            raise cochain_exceptions.SectionError(
                '[s L1, s L2] - s[L1, L2] leaves ri^perp')
        return value

    def gamma(subset):
        i, j, k = subset
        return (images[(i, j)].T * g.gram * columns[k])[0, 0]

    return QuadCocycle(Cochain.from_function(n, 2, m, alpha),
                       Cochain.from_function(n, 3, 1, gamma, scalar=True),
                       w.module)


def extract_cocycle(w: QuadExtensionWitness, s=None, check_class: bool = True,
                    seed: int = None) -> QuadCocycle:
    """
    The cocycle of a quadratic extension with respect to an isotropic
    equivariant section s: i(alpha(L1, L2)) = [s L1, s L2] - s[L1, L2]
    mod ri and gamma(L1, L2, L3) = <[s L1, s L2], s L3>

    Parameters
    ----------
        w: QuadExtensionWitness
        s: Matrix
            section, default isotropic_section(w)
        check_class: bool
            compare the class with the one of a second, randomly drawn
            section
        seed: int
            seed of the second section, default from settings

    Returns
    -------
        QuadCocycle over w.module

    Raises
    ------
        SectionError: s is not an isotropic equivariant section
        QuadraticExtensionError: the extracted pair is not a cocycle or
        its class depends on the section
    """
    metriclie_log.info("extracting the cocycle of an extension of {}"
                       "".format(w.l.name))
    s = isotropic_section(w) if s is None else Matrix(s)
    check = validate_section(w, s)
    if not check:
        raise cochain_exceptions.SectionError(check.violation)
    z = _extract(w, s)
    check = qcohom.is_cocycle(z.alpha, z.gamma, w.module)
    if not check:
        raise cochain_exceptions.QuadraticExtensionError(check.violation)
    if check_class:
        second = _random_section(w, s, seed)
        other = _extract(w, second)
        decision = qcohom.equivalent(z, other, w.phi_l, w.module.equiv)
        if not decision.is_yes:
            raise cochain_exceptions.QuadraticExtensionError(
                'the class depends on the section: {}'.format(
                    decision.reason))
    metriclie_log.info("extraction done")
    return z


def _random_section(w: QuadExtensionWitness, s: Matrix,
                    seed: int = None) -> Matrix:
    """ isotropic correction of s + a random equivariant map l -> ri^perp """
    kernel = _section_system(w).solve().kernel
    rng = Settings.rng(seed)
    bound = Settings.get('random_coefficient_range')
    shift = zeros(w.g.dim, w.l.dim)
    for v in kernel:
        shift += int(rng.integers(-bound, bound + 1)) * \
            v.reshape(w.g.dim, w.l.dim)
    return _isotropic_correction(w, s + shift)


def _induced_structure(phi: EquivStructure, restrict, dim: int,
                       name: str) -> EquivStructure:
    return EquivStructure(
        dim, {label: restrict(A) for label, A in phi.derivations.items()},
        {label: restrict(k) for label, k in phi.automorphisms.items()},
        phi.relations, phi.preset, name)


def canonical_extension(g: MetricLieAlgebra,
                        phi: Optional[EquivStructure] = None
                        ) -> QuadExtensionWitness:
    """
    The canonical quadratic extension of g: ri = ri(g), l = g/ri^perp and
    a = ri^perp/ri. Meant for metric Lie algebras without simple ideals;
    the abelianity of ri^perp/ri is the runtime guard.

    Parameters
    ----------
        g: MetricLieAlgebra
        phi: EquivStructure
            structure on g, optional

    Returns
    -------
        QuadExtensionWitness

    Raises
    ------
        QuadraticExtensionError: ri^perp/ri is not abelian
    """
    metriclie_log.info("canonical extension of {}".format(g.name))
    ideal = canonical_isotropic_ideal(g, phi)
    if not ideal.quotient_abelian:
        warning_formatting.simple_ideal_warning()
        raise cochain_exceptions.QuadraticExtensionError(
            'ri(g)^perp/ri(g) is not abelian')
    if phi is not None and not ideal.invariant:
        raise cochain_exceptions.QuadraticExtensionError(
            'ri(g) is not invariant under the structure')
    ri = ideal.ri
    ri_perp = perp(g, ri)
    n = g.dim - ri_perp.dim
    l, p_map, lifts = g.alg.quotient(
        ri_perp, ['L{}'.format(i + 1) for i in range(n)])
    l.name = '{}/ri^perp'.format(g.name)
    fibre = ri.complement_in(ri_perp)
    m = len(fibre)
    i_map = Matrix.hstack(*fibre) if m else zeros(g.dim, 0)
    basis = Matrix.hstack(i_map, *ri.vectors()) if ri.dim else i_map

    def fibre_operator(A: Matrix) -> Matrix:
        if m == 0:
            return zeros(0, 0)
        columns = [solve_affine(basis, list(A * i_map[:, b])).particular[:m, :]
                   for b in range(m)]
        return Matrix.hstack(*columns)

    def base_operator(A: Matrix) -> Matrix:
        if n == 0:
            return zeros(0, 0)
        return p_map * A * Matrix.hstack(*lifts)

    rho = [fibre_operator(g.alg.ad(x)) for x in lifts]
    phi_l = phi_a = None
    if phi is not None:
        phi_l = _induced_structure(phi, base_operator, n, 'phi_l')
        phi_a = _induced_structure(phi, fibre_operator, m, 'phi_a')
    module = OrthogonalModule(LieModule(l, rho, 'ri^perp/ri', m),
                              SymForm(i_map.T * g.gram * i_map), phi_a)
    metriclie_log.info("canonical extension: dim l = {}, dim a = {}"
                       "".format(n, m))
    return QuadExtensionWitness(g, ri, i_map, p_map, l, module, phi, phi_l)
