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
Building blocks shared by the catalog families: the small Lie algebras
the families are written over, cochain helpers in the sigma^{ij...}
notation, the CatalogEntry record returned by every constructor and the
check of the classification objects (O1)-(O3).
"""
import logging

from typing import Dict, NamedTuple, Optional, Sequence, Tuple

from sympy import Matrix, eye, im, re, sympify, zeros

from metriclie.algebra import liealg
from metriclie.algebra.equivar import (EquivStructure, check_equivariant,
                                       check_module_compatibility,
                                       validate_preset, z2_split)
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.algebra.metric import (MetricLieAlgebra,
                                     canonical_isotropic_ideal, check_metric,
                                     decompose, perp)
from metriclie.cohomology.balanced import admissible
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import OrthogonalModule
from metriclie.exceptions import catalog_exceptions
from metriclie.extensions.quadext import QuadExtensionWitness, extract_cocycle
from metriclie.utils.decision import Check, Decision
from metriclie.utils.exactlin import SymForm, to_rational, unit_vector
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


class CatalogEntry(NamedTuple):
    """
    A constructed member of a catalog family

    Attributes
    ----------
    name : str
        family tag with its parameters, e.g. osc(1, 2)
    g : MetricLieAlgebra
    phi : EquivStructure
        grading of g, None for ungraded families
    witness : QuadExtensionWitness
        the standard model data when the family is built as
        d_{alpha,gamma}(l, a), else None
    params : dict
        the (normalized) parameters the entry was built from
    extras : dict
        family specific data (group law parameters, cocycle spaces, xi)
    """
    name: str
    g: MetricLieAlgebra
    phi: Optional[EquivStructure] = None
    witness: Optional[QuadExtensionWitness] = None
    params: Dict = {}
    extras: Dict = {}

    @property
    def theta(self) -> Optional[Matrix]:
        return None if self.phi is None else self.phi.theta


def entry_from_witness(w: QuadExtensionWitness, name: str, params: Dict,
                       /, **extras) -> CatalogEntry:
    metriclie_log.info("catalog entry {} built, dimension {}, signature {}"
                       "".format(name, w.g.dim, tuple(w.g.signature()[:2])))
    return CatalogEntry(name, w.g, w.phi, w, dict(params), dict(extras))


def label(family: str, *values) -> str:
    """ family(v1, v2, ...) with tuples written as [a, b] """
    parts = []
    for value in values:
        if isinstance(value, (tuple, list)):
            parts.append('[{}]'.format(', '.join(str(v) for v in value)))
        else:
            parts.append(str(value))
    return '{}({})'.format(family, ', '.join(parts))


def rationals(family: str, values) -> Tuple:
    """ tuple of Rationals, parameter errors reported for the family """
    try:
        return tuple(to_rational(v) for v in values)
    except Exception as error:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, 'not a sequence of rationals: {}'.format(error))


def nonnegative_int(family: str, name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise catalog_exceptions.InvalidFamilyParameterError(
            family, '{} must be a nonnegative integer, got {}'
            ''.format(name, value))
    return value


# small algebras

def heisenberg() -> LieAlgebra:
    return LieAlgebra.from_names(['X', 'Y', 'Z'], {('X', 'Y'): {'Z': 1}},
                                 'h(1)')


def g41() -> LieAlgebra:
    return LieAlgebra.from_names(
        ['X1', 'X2', 'X3', 'X4'],
        {('X1', 'X2'): {'X3': 1}, ('X1', 'X3'): {'X4': 1}}, 'g_{4,1}')


def heisenberg_plus_line() -> LieAlgebra:
    return LieAlgebra.from_names(['X1', 'X2', 'X3', 'X4'],
                                 {('X1', 'X2'): {'X3': 1}}, 'h(1)+R')


def abelian(n: int, prefix: str = 'X') -> LieAlgebra:
    return LieAlgebra.abelian(n, ['{}{}'.format(prefix, i + 1)
                                  for i in range(n)])


def sl2() -> LieAlgebra:
    """ sl(2,R) = {[H,X] = 2Y, [H,Y] = 2X, [X,Y] = 2H}, X compact """
    return LieAlgebra.from_names(
        ['H', 'X', 'Y'],
        {('H', 'X'): {'Y': 2}, ('H', 'Y'): {'X': 2}, ('X', 'Y'): {'H': 2}},
        'sl(2,R)')


def su2() -> LieAlgebra:
    """ su(2) = {[H,X] = 2Y, [H,Y] = -2X, [X,Y] = 2H} """
    return LieAlgebra.from_names(
        ['H', 'X', 'Y'],
        {('H', 'X'): {'Y': 2}, ('H', 'Y'): {'X': -2}, ('X', 'Y'): {'H': 2}},
        'su(2)')


# cochains

def sigma(ldim: int, *terms) -> Cochain:
    """
    Scalar cochain sum c * sigma^{i1...ip}; terms are (indices, c) with
    0-based indices, all of one degree
    """
    degree = len(terms[0][0]) if terms else 3
    return Cochain.from_dict(ldim, degree, 1,
                             {tuple(ix): c for ix, c in terms}, scalar=True)


def alpha_from_terms(ldim: int, vdim: int, terms) -> Cochain:
    """
    alpha = sum sigma^{ij} (x) e_k from ((i, j), k) pairs, 0-based
    """
    entries = {}
    for (i, j), k in terms:
        entries[(i, j)] = entries.get((i, j), zeros(vdim, 1)) + \
            unit_vector(vdim, k)
    return Cochain.from_dict(ldim, 2, vdim, entries)


def killing_cocycle(L: LieAlgebra, c) -> Cochain:
    """ gamma(x, y, z) = c B([x, y], z) with B the Killing form """
    B = Matrix(liealg.killing_form(L).matrix)
    c = to_rational(c)
    return Cochain.from_function(
        L.dim, 3, 1,
        lambda s: c * (L.bracket(s[0], s[1]).T * B[:, s[2]])[0, 0],
        scalar=True)


# complex scalars as real 2 x 2 blocks, i -> J2

J2 = Matrix([[0, -1], [1, 0]])


def complex_block(M) -> Matrix:
    """
    The real matrix of a complex matrix on (Re z_1, Im z_1, Re z_2, ...),
    c + di becomes [[c, -d], [d, c]]
    """
    M = Matrix(M)
    R = zeros(2 * M.rows, 2 * M.cols)
    for a in range(M.rows):
        for b in range(M.cols):
            value = sympify(M[a, b])
            x, y = to_rational(re(value)), to_rational(im(value))
            R[2 * a, 2 * b] = R[2 * a + 1, 2 * b + 1] = x
            R[2 * a, 2 * b + 1] = -y
            R[2 * a + 1, 2 * b] = y
    return R


def module_sum(L: LieAlgebra, summands, equiv: EquivStructure):
    """
    Direct sum of orthogonal modules, the zero module carrying equiv
    when there are no summands
    """
    if not summands:
        return OrthogonalModule(LieModule.trivial(L, 0), SymForm.zero(0),
                                equiv)
    result = summands[0]
    for summand in summands[1:]:
        result = result.direct_sum(summand)
    return result


# checks

def verify_entry(entry: CatalogEntry) -> Check:
    """ Jacobi identity, invariance of the form and the grading """
    check = liealg.check_jacobi(entry.g.alg)
    if not check:
        return Check.failed('Jacobi identity on {}'.format(check.violation))
    check = check_metric(entry.g)
    if not check:
        return check
    if entry.phi is not None:
        return check_equivariant(entry.g, entry.phi)
    return Check.ok()


def check_objects(entry: CatalogEntry, seed: int = None) -> Decision:
    """
    The classification objects of a graded standard model:
    (O1) the grading of l is valid and proper, (O2) a is a graded
    semisimple orthogonal module, (O3) the class is admissible and g is
    indecomposable

    Returns
    -------
        Decision, Unknown when balancedness or indecomposability is
        undecided
    """
    w = entry.witness
    if w is None or w.phi_l is None:
        return Decision.no(None, '{} is not a graded standard model'
                                 ''.format(entry.name))
    phi_l, module = w.phi_l, w.module
    theta_l = phi_l.theta
    if not validate_preset(phi_l) or not z2_split(w.l, theta_l).proper:
        return Decision.no(None, '(O1) fails: the grading of l is not '
                                 'proper')
    if not liealg.module_is_semisimple(module.module).is_yes:
        return Decision.no(None, '(O2) fails: a is not semisimple')
    phi_a = module.equiv or EquivStructure.trivial(module.dim)
    if not check_module_compatibility(module.module, phi_l, phi_a,
                                      module.form):
        return Decision.no(None, '(O2) fails: a is not graded')
    z = entry.extras.get('cocycle')
    if z is None:
        z = extract_cocycle(w, check_class=False)
    admissibility = admissible(z, theta_l, phi_a.theta, seed=seed)
    splitting = decompose(entry.g, seed=seed)
    if splitting.is_yes:
        return Decision.no(splitting.witness, '(O3) fails: decomposable')
    return Decision.combine([admissibility, splitting if
                             splitting.is_unknown else Decision.yes()])


class NilindexProfile(NamedTuple):
    """
    Nilindices of g, of g_+ = ker(theta - 1) and of l = g/ri(g)^perp,
    None where the algebra is not nilpotent
    """
    g: Optional[int]
    plus: Optional[int]
    base: Optional[int]


def nilindex_profile(entry: CatalogEntry) -> NilindexProfile:
    g = entry.g
    plus = Subspace.kernel(entry.theta - eye(g.dim))
    ideal = canonical_isotropic_ideal(g).ri
    base, _, _ = g.alg.quotient(perp(g, ideal))
    return NilindexProfile(liealg.nilindex(g.alg),
                           liealg.nilindex(g.alg.subalgebra(plus)),
                           liealg.nilindex(base))


def holonomy_is_abelian(entry: CatalogEntry) -> bool:
    """ g_+ = ker(theta - 1) is an abelian subalgebra """
    plus = Subspace.kernel(entry.theta - eye(entry.g.dim))
    return liealg.bracket_span(entry.g.alg, plus, plus).is_zero()


# complex algebras

def realify(dim: int, brackets: Dict, form, basis_names: Sequence[str] = None,
            name: str = '') -> MetricLieAlgebra:
    """
    Real form of a complex metric Lie algebra with Gaussian rational data

    Parameters
    ----------
        dim: int
            complex dimension
        brackets: dict
            {(i, j): {k: c}} with c a Gaussian rational (sympy expression
            such as 1 + 2*I, or a string)
        form: nested sequence
            complex invariant symmetric form
        basis_names: list of str

    Returns
    -------
        MetricLieAlgebra on (e_1, ..., e_n, ie_1, ..., ie_n) with the
        real part of the complex form
    """
    names = list(basis_names or ['e{}'.format(i + 1) for i in range(dim)])
    names = names + ['i{}'.format(n) for n in names]

    def parts(value):
        value = sympify(value)
        return to_rational(re(value)), to_rational(im(value))

    table = {}

    def add(i, j, k, c):
        if c != 0:
            table.setdefault((i, j), {})
            table[(i, j)][k] = table[(i, j)].get(k, 0) + c

    for (a, b), values in brackets.items():
        for k, c in values.items():
            x, y = parts(c)
            # [e_a, e_b] = x e_k + y ie_k
            add(a, b, k, x)
            add(a, b, dim + k, y)
            # [e_a, ie_b] = x ie_k - y e_k, the same for [ie_a, e_b]
            add(a, dim + b, dim + k, x)
            add(a, dim + b, k, -y)
            add(dim + a, b, dim + k, x)
            add(dim + a, b, k, -y)
            # [ie_a, ie_b] = -[e_a, e_b]
            add(dim + a, dim + b, k, -x)
            add(dim + a, dim + b, dim + k, -y)
    form = Matrix(form)
    G = zeros(2 * dim, 2 * dim)
    for a in range(dim):
        for b in range(dim):
            x, y = parts(form[a, b])
            G[a, b] = x
            G[a, dim + b] = G[dim + a, b] = -y
            G[dim + a, dim + b] = -x
    label_ = name or 'realified'
    g = MetricLieAlgebra(LieAlgebra(2 * dim, table, names, label_),
                         SymForm(G), label_).validate()
    metriclie_log.info("realified {} of real dimension {}".format(label_,
                                                                  g.dim))
    return g


def sl2c_realified() -> MetricLieAlgebra:
    """ sl(2,C) as a real metric Lie algebra with Re of the Killing form """
    L = sl2()
    killing = liealg.killing_form(L).matrix
    return realify(3, {key: dict(v) for key, v in
                       L.structure_constants().items()},
                   killing, L.basis_names, 'sl(2,C)_R')
