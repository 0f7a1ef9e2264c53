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
Equivariant structures: a Lie algebra h acting by antisymmetric
derivations and a finite list of automorphisms (the component group of
K), given by their generators. Grading presets, Z2 splits and invariant
cochains.

A continuous group is never integrated; invariance is imposed on the
infinitesimal generators and on the automorphism generators.
"""
import enum
import logging

from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy import Matrix, eye, zeros

from metriclie.algebra import liealg
from metriclie.algebra.liealg import LieAlgebra
from metriclie.algebra.metric import MetricLieAlgebra
from metriclie.cohomology.cochain import Cochain, sort_sign
from metriclie.exceptions import algebra_exceptions
from metriclie.utils.decision import Check
from metriclie.utils.exactlin import LinearSystem, block_diagonal, inverse
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')


def _cube(matrices, factor) -> bool:
    A, = matrices
    return A * A * A == factor * A


def _bracket(matrices, factor) -> bool:
    A, B, C = matrices
    return A * B - B * A == factor * C


def _anticommute(matrices, factor) -> bool:
    A, B = matrices
    return A * B == -B * A


def _commute(matrices, factor) -> bool:
    A, B = matrices
    return A * B == B * A


def _involution(matrices, factor) -> bool:
    A, = matrices
    return A * A == eye(A.rows)


def _square_relation(matrices, factor) -> bool:
    theta, D = matrices
    return theta == eye(D.rows) + factor * D * D


def _conjugation(matrices, factor) -> bool:
    k, X, Y = matrices
    return k * X == factor * Y * k


class RelationKind(enum.Enum):
    """
    Identities that can be declared among the generators of an
    equivariant structure

    enumerators:
        CUBE: A^3 = f A
        BRACKET: [A, B] = f C
        ANTICOMMUTE: AB = -BA
        COMMUTE: AB = BA
        INVOLUTION: A^2 = 1
        SQUARE_RELATION: theta = 1 + f D^2
        CONJUGATION: k X k^-1 = f Y
    """
    CUBE = (_cube, 'cube')
    BRACKET = (_bracket, 'bracket')
    ANTICOMMUTE = (_anticommute, 'anticommute')
    COMMUTE = (_commute, 'commute')
    INVOLUTION = (_involution, 'involution')
    SQUARE_RELATION = (_square_relation, 'square_relation')
    CONJUGATION = (_conjugation, 'conjugation')

    # Need this to make the functions callable
    def __call__(self, *args, **kwargs):
        return self.value[0](*args, **kwargs)

    @property
    def label(self) -> str:
        return self.value[1]

    @classmethod
    def from_label(cls, label: str) -> 'RelationKind':
        for kind in cls:
            if kind.label == label:
                return kind
        raise algebra_exceptions.GradingRelationError(
            'declared', 'unknown relation kind {}'.format(label))


class Relation(NamedTuple):
    """
    Declared identity among named generators

    Attributes
    ----------
    kind : RelationKind
    names : tuple of str
        generator names in the order the relation kind expects
    factor : int or Rational
    """
    kind: RelationKind
    names: Tuple[str, ...]
    factor: object = 1

    def __str__(self):
        n = self.names
        f = self.factor
        formats = {
            RelationKind.CUBE: lambda: "{0}^3 = {f} {0}".format(*n, f=f),
            RelationKind.BRACKET:
                lambda: "[{0}, {1}] = {f} {2}".format(*n, f=f),
            RelationKind.ANTICOMMUTE:
                lambda: "{0}{1} = -{1}{0}".format(*n),
            RelationKind.COMMUTE: lambda: "{0}{1} = {1}{0}".format(*n),
            RelationKind.INVOLUTION: lambda: "{0}^2 = 1".format(*n),
            RelationKind.SQUARE_RELATION:
                lambda: "{0} = 1 + {f} {1}^2".format(*n, f=f),
            RelationKind.CONJUGATION:
                lambda: "{0} {1} {0}^-1 = {f} {2}".format(*n, f=f)}
        return formats[self.kind]()

    def holds(self, structure: 'EquivStructure') -> bool:
        return self.kind([structure.matrix(name) for name in self.names],
                         self.factor)


class EquivStructure():
    """
    Generators of an (h, K)-action on Q^dim: named derivation matrices
    (h and the Lie algebra of K) and named automorphism matrices
    (generators of the component group), with declared relations

    Parameters
    ----------
        dim: int
        derivations: dict
            {name: matrix}
        automorphisms: dict
            {name: matrix}
        relations: list of Relation
        preset: str
            GradingKind label, optional
        name: str

    Methods
    -------
    matrix
    all_matrices
    theta
    restrict
    direct_sum
    trivial
    z2
    complex
    para_complex
    quaternionic
    para_quaternionic
    extrinsic
    """

    def __init__(self, dim: int, derivations: Dict[str, Matrix] = None,
                 automorphisms: Dict[str, Matrix] = None,
                 relations: Sequence[Relation] = (),
                 preset: Optional[str] = None, name: str = ''):
        self.dim = dim
        self.derivations = {n: Matrix(A) for n, A in
                            (derivations or {}).items()}
        self.automorphisms = {n: Matrix(A) for n, A in
                              (automorphisms or {}).items()}
        for label, A in [*self.derivations.items(),
                         *self.automorphisms.items()]:
            if A.shape != (dim, dim):
                raise algebra_exceptions.DimensionMismatchError(
                    'generator {}'.format(label), (dim, dim), A.shape)
        self.relations = list(relations)
        if preset is not None:
            GradingKind.from_label(preset)
        self.preset = preset
        self.name = name

    def __str__(self):
        return "EquivStructure {} on Q^{}: derivations {}, automorphisms "\
            "{}, preset {}".format(self.name, self.dim,
                                   list(self.derivations),
                                   list(self.automorphisms), self.preset)

    def matrix(self, name: str) -> Matrix:
        if name in self.derivations:
            return self.derivations[name]
        if name in self.automorphisms:
            return self.automorphisms[name]
        raise algebra_exceptions.GradingRelationError(
            self.preset or 'declared', 'unknown generator {}'.format(name))

    def all_matrices(self) -> List[Matrix]:
        return [*self.derivations.values(), *self.automorphisms.values()]

    def is_trivial(self) -> bool:
        return all(A.is_zero_matrix for A in self.derivations.values()) \
            and all(k == eye(self.dim) for k in self.automorphisms.values())

    @property
    def theta(self) -> Optional[Matrix]:
        return self.automorphisms.get('theta')

    def restrict(self, U: Subspace, name: str = '') -> 'EquivStructure':
        """ the structure on an invariant subspace, in its echelon basis """
        return EquivStructure(
            U.dim,
            {n: U.restrict_operator(A) for n, A in self.derivations.items()},
            {n: U.restrict_operator(A) for n, A in
             self.automorphisms.items()},
            self.relations, self.preset, name or self.name)

    def direct_sum(self, other: 'EquivStructure',
                   name: str = '') -> 'EquivStructure':
        """
        Block sum; a generator missing on one side acts there by zero
        (derivation) or by the identity (automorphism)
        """
        derivations = {}
        for n in [*self.derivations, *(d for d in other.derivations
                                       if d not in self.derivations)]:
            derivations[n] = block_diagonal(
                self.derivations.get(n, zeros(self.dim, self.dim)),
                other.derivations.get(n, zeros(other.dim, other.dim)))
        automorphisms = {}
        for n in [*self.automorphisms, *(k for k in other.automorphisms
                                         if k not in self.automorphisms)]:
            automorphisms[n] = block_diagonal(
                self.automorphisms.get(n, eye(self.dim)),
                other.automorphisms.get(n, eye(other.dim)))
        relations = self.relations + [r for r in other.relations
                                      if r not in self.relations]
        preset = self.preset if self.preset == other.preset or \
            other.preset is None else None
        return EquivStructure(self.dim + other.dim, derivations,
                              automorphisms, relations, preset, name)

    @classmethod
    def trivial(cls, dim: int, name: str = '') -> 'EquivStructure':
        return cls(dim, name=name or 'trivial')

    @classmethod
    def z2(cls, theta, name: str = '') -> 'EquivStructure':
        theta = Matrix(theta)
        return cls(theta.rows, {}, {'theta': theta},
                   GradingKind.Z2.relations(), 'z2', name)

    @classmethod
    def complex(cls, D, name: str = '') -> 'EquivStructure':
        """ U(1) by the generator D (D^3 = -D), theta = 1 + 2 D^2 """
        D = Matrix(D)
        return cls(D.rows, {'D': D}, {'theta': eye(D.rows) + 2 * D * D},
                   GradingKind.COMPLEX.relations(), 'complex', name)

    @classmethod
    def para_complex(cls, D, name: str = '') -> 'EquivStructure':
        """ R^* by the generator D (D^3 = D), theta = 1 - 2 D^2 """
        D = Matrix(D)
        return cls(D.rows, {'D': D}, {'theta': eye(D.rows) - 2 * D * D},
                   GradingKind.PARA_COMPLEX.relations(), 'para_complex',
                   name)

    @classmethod
    def quaternionic(cls, DI, DJ, DK, name: str = '') -> 'EquivStructure':
        DI, DJ, DK = Matrix(DI), Matrix(DJ), Matrix(DK)
        return cls(DI.rows, {'D_I': DI, 'D_J': DJ, 'D_K': DK},
                   {'theta': eye(DI.rows) + 2 * DI * DI},
                   GradingKind.QUATERNIONIC.relations(), 'quaternionic',
                   name)

    @classmethod
    def para_quaternionic(cls, DI, DJ, DK,
                          name: str = '') -> 'EquivStructure':
        DI, DJ, DK = Matrix(DI), Matrix(DJ), Matrix(DK)
        return cls(DI.rows, {'D_I': DI, 'D_J': DJ, 'D_K': DK},
                   {'theta': eye(DI.rows) + 2 * DI * DI},
                   GradingKind.PARA_QUATERNIONIC.relations(),
                   'para_quaternionic', name)

    @classmethod
    def extrinsic(cls, D, theta, name: str = '') -> 'EquivStructure':
        """ R x Z2 by D (D^3 = -D) and theta with D theta = -theta D """
        D, theta = Matrix(D), Matrix(theta)
        return cls(D.rows, {'D': D},
                   {'theta': theta, 'tau_D': eye(D.rows) + 2 * D * D},
                   GradingKind.EXTRINSIC_RZ2.relations(), 'extrinsic_RZ2',
                   name)


def _z2_relations() -> List[Relation]:
    return [Relation(RelationKind.INVOLUTION, ('theta',))]


def _complex_relations() -> List[Relation]:
    return [Relation(RelationKind.CUBE, ('D',), -1),
            Relation(RelationKind.SQUARE_RELATION, ('theta', 'D'), 2)]


def _para_complex_relations() -> List[Relation]:
    return [Relation(RelationKind.CUBE, ('D',), 1),
            Relation(RelationKind.SQUARE_RELATION, ('theta', 'D'), -2)]


def _quaternionic_relations() -> List[Relation]:
    return [Relation(RelationKind.CUBE, ('D_I',), -1),
            Relation(RelationKind.CUBE, ('D_J',), -1),
            Relation(RelationKind.CUBE, ('D_K',), -1),
            Relation(RelationKind.BRACKET, ('D_I', 'D_J', 'D_K'), 2),
            Relation(RelationKind.BRACKET, ('D_J', 'D_K', 'D_I'), 2),
            Relation(RelationKind.BRACKET, ('D_K', 'D_I', 'D_J'), 2),
            Relation(RelationKind.SQUARE_RELATION, ('theta', 'D_I'), 2)]


def _para_quaternionic_relations() -> List[Relation]:
    # sl(2, R) with D_I compact and D_J, D_K split
    return [Relation(RelationKind.CUBE, ('D_I',), -1),
            Relation(RelationKind.CUBE, ('D_J',), 1),
            Relation(RelationKind.CUBE, ('D_K',), 1),
            Relation(RelationKind.BRACKET, ('D_I', 'D_J', 'D_K'), 2),
            Relation(RelationKind.BRACKET, ('D_J', 'D_K', 'D_I'), -2),
            Relation(RelationKind.BRACKET, ('D_K', 'D_I', 'D_J'), 2),
            Relation(RelationKind.SQUARE_RELATION, ('theta', 'D_I'), 2)]


def _extrinsic_relations() -> List[Relation]:
    return [Relation(RelationKind.CUBE, ('D',), -1),
            Relation(RelationKind.INVOLUTION, ('theta',)),
            Relation(RelationKind.ANTICOMMUTE, ('D', 'theta')),
            Relation(RelationKind.SQUARE_RELATION, ('tau_D', 'D'), 2)]


def _z2_components(phi: EquivStructure) -> Dict[str, Subspace]:
    theta = phi.theta
    n = phi.dim
    return {'trivial': Subspace.kernel(theta - eye(n)),
            'sign': Subspace.kernel(theta + eye(n))}


def _rotation_components(phi: EquivStructure) -> Dict[str, Subspace]:
    D = phi.derivations['D']
    return {'trivial': Subspace.kernel(D), 'sigma': Subspace.image(D)}


def _para_complex_components(phi: EquivStructure) -> Dict[str, Subspace]:
    D = phi.derivations['D']
    n = phi.dim
    return {'trivial': Subspace.kernel(D),
            'sigma': Subspace.kernel(D - eye(n)),
            'sigma_dual': Subspace.kernel(D + eye(n))}


def _sp1_components(phi: EquivStructure, key: str) -> Dict[str, Subspace]:
    generators = [phi.derivations[n] for n in ('D_I', 'D_J', 'D_K')]
    moving = Subspace.zero(phi.dim)
    for D in generators:
        moving = moving + Subspace.image(D)
    return {'trivial': Subspace.kernel(Matrix.vstack(*generators)),
            key: moving}


def _quaternionic_components(phi: EquivStructure) -> Dict[str, Subspace]:
    return _sp1_components(phi, 'H')


def _para_quaternionic_components(phi: EquivStructure):
    return _sp1_components(phi, 'sigma')


class GradingKind(enum.Enum):
    """
    Grading presets. Each value holds the builder of the relations its
    generators must satisfy, the builder of the isotypic components and
    the label used in documents.

    enumerators:
        Z2: automorphism theta
        COMPLEX: U(1), derivation D
        PARA_COMPLEX: R^*, derivation D
        QUATERNIONIC: Sp(1), derivations D_I, D_J, D_K
        PARA_QUATERNIONIC: SL(2, R), derivations D_I, D_J, D_K
        EXTRINSIC_RZ2: R x Z2, derivation D and automorphism theta
    """
    Z2 = (_z2_relations, _z2_components, 'z2')
    COMPLEX = (_complex_relations, _rotation_components, 'complex')
    PARA_COMPLEX = (_para_complex_relations, _para_complex_components,
                    'para_complex')
    QUATERNIONIC = (_quaternionic_relations, _quaternionic_components,
                    'quaternionic')
    PARA_QUATERNIONIC = (_para_quaternionic_relations,
                         _para_quaternionic_components, 'para_quaternionic')
    EXTRINSIC_RZ2 = (_extrinsic_relations, _rotation_components,
                     'extrinsic_RZ2')

    # Need this to make the functions callable
    def __call__(self, *args, **kwargs):
        return self.value[0](*args, **kwargs)

    def relations(self) -> List[Relation]:
        return self.value[0]()

    def components(self, phi: EquivStructure) -> Dict[str, Subspace]:
        return self.value[1](phi)

    @property
    def label(self) -> str:
        return self.value[2]

    @classmethod
    def from_label(cls, label: str) -> 'GradingKind':
        for kind in cls:
            if kind.label == label:
                return kind
        raise algebra_exceptions.GradingRelationError(
            label, 'unknown grading kind, expected one of {}'
            ''.format([k.label for k in cls]))


def validate_preset(phi: EquivStructure, kind: str = None) -> Check:
    """
    Checks the relations a grading preset requires of its generators

    Parameters
    ----------
        phi: EquivStructure
        kind: str
            GradingKind label, default the preset of phi

    Returns
    -------
        Check whose violation is the failing relation written out
    """
    kind = kind or phi.preset
    if kind is None:
        return Check.ok()
    grading = GradingKind.from_label(kind)
    for relation in grading.relations():
        missing = [n for n in relation.names
                   if n not in phi.derivations and
                   n not in phi.automorphisms]
        if missing:
            return Check.failed('missing generator {}'.format(missing[0]))
        if not relation.holds(phi):
            return Check.failed(str(relation))
    return Check.ok()


def check_equivariant(g, phi: EquivStructure) -> Check:
    """
    Checks that phi acts on g: derivations (antisymmetric for a metric
    algebra), automorphisms (isometric for a metric algebra), declared
    relations and the preset relations

    Parameters
    ----------
        g: MetricLieAlgebra or LieAlgebra
        phi: EquivStructure on g

    Returns
    -------
        Check with a readable violation
    """
    L = g.alg if isinstance(g, MetricLieAlgebra) else g
    if phi.dim != L.dim:
        return Check.failed('dimension {} != {}'.format(phi.dim, L.dim))
    G = g.gram if isinstance(g, MetricLieAlgebra) else None
    for name, D in phi.derivations.items():
        check = liealg.check_derivation(L, D)
        if not check:
            return Check.failed('{} is not a derivation on {}'
                                ''.format(name, check.violation))
        if G is not None and not (D.T * G + G * D).is_zero_matrix:
            return Check.failed('{} is not antisymmetric'.format(name))
    for name, k in phi.automorphisms.items():
        if k.det() == 0:
            return Check.failed('{} is not invertible'.format(name))
        check = liealg.is_homomorphism(k, L, L)
        if not check:
            return Check.failed('{} is not an automorphism on {}'
                                ''.format(name, check.violation))
        if G is not None and k.T * G * k != G:
            return Check.failed('{} is not an isometry'.format(name))
    for relation in phi.relations:
        if not relation.holds(phi):
            return Check.failed(str(relation))
    return validate_preset(phi)


def check_module_compatibility(module: liealg.LieModule,
                               phi_l: EquivStructure,
                               phi_a: EquivStructure, form=None) -> Check:
    """
    Equivariance of a module: [phi_a(X), rho(L)] = rho(phi_l(X) L) and
    phi_a(k) rho(L) phi_a(k)^-1 = rho(phi_l(k) L), and phi_a preserves
    the form when one is given
    """
    for name, D in phi_l.derivations.items():
        A = phi_a.derivations.get(name, zeros(module.dim, module.dim))
        for i in range(module.algebra.dim):
            R = Matrix(module.rho_matrices[i])
            if A * R - R * A != module.rho(D[:, i]):
                return Check.failed('{} on {}'.format(
                    name, module.algebra.basis_names[i]))
        if form is not None and \
                not (A.T * form.matrix + form.matrix * A).is_zero_matrix:
            return Check.failed('{} is not antisymmetric on the module'
                                ''.format(name))
    for name, k in phi_l.automorphisms.items():
        K = phi_a.automorphisms.get(name, eye(module.dim))
        for i in range(module.algebra.dim):
            R = Matrix(module.rho_matrices[i])
            if K * R != module.rho(k[:, i]) * K:
                return Check.failed('{} on {}'.format(
                    name, module.algebra.basis_names[i]))
        if form is not None and K.T * form.matrix * K != form.matrix:
            return Check.failed('{} is not an isometry of the module'
                                ''.format(name))
    return Check.ok()


class Z2Split(NamedTuple):
    """
    Eigenspaces of an involution

    Attributes
    ----------
    plus : Subspace
        g_+ = ker(theta - 1)
    minus : Subspace
        g_- = ker(theta + 1)
    proper : bool
        [g_-, g_-] = g_+
    """
    plus: Subspace
    minus: Subspace
    proper: bool


def z2_split(g, theta) -> Z2Split:
    """
    Splits g into the eigenspaces of the involutive automorphism theta

    Parameters
    ----------
        g: LieAlgebra or MetricLieAlgebra
        theta: Matrix

    Returns
    -------
        Z2Split

    Raises
    ------
        NotInvolutionError: theta^2 != 1
        NotIsometryError: theta does not preserve the metric
    """
    L = g.alg if isinstance(g, MetricLieAlgebra) else g
    theta = Matrix(theta)
    n = L.dim
    if theta * theta != eye(n):
        raise algebra_exceptions.NotInvolutionError('theta')
    if isinstance(g, MetricLieAlgebra) and theta.T * g.gram * theta != g.gram:
        raise algebra_exceptions.NotIsometryError('theta')
    plus = Subspace.kernel(theta - eye(n))
    minus = Subspace.kernel(theta + eye(n))
    proper = liealg.bracket_span(L, minus, minus) == plus
    return Z2Split(plus, minus, proper)


def check_symmetric_pair(L: LieAlgebra, theta) -> bool:
    """ proper and z(l) contained in l_- """
    split = z2_split(L, theta)
    return split.proper and liealg.center(L) <= split.minus


def isotypic_split(phi: EquivStructure,
                   kind: str = None) -> Dict[str, Subspace]:
    """
    Isotypic components of the space phi acts on

    Parameters
    ----------
        phi: EquivStructure
        kind: str
            GradingKind label, default the preset of phi

    Returns
    -------
        {component label: Subspace}, always with the key 'trivial'

    Raises
    ------
        GradingRelationError: no preset or a preset relation fails
    """
    kind = kind or phi.preset
    if kind is None:
        raise algebra_exceptions.GradingRelationError(
            'unspecified', 'a grading preset is required')
    check = validate_preset(phi, kind)
    if not check:
        raise algebra_exceptions.GradingRelationError(kind, check.violation)
    components = GradingKind.from_label(kind).components(phi)
    # the preset relations force semisimplicity, so the sum is direct
    assert sum(U.dim for U in components.values()) == phi.dim
    return components


class ExtrinsicSplit(NamedTuple):
    """
    Splitting by a derivation D with D^3 = -D

    Attributes
    ----------
    plus : Subspace
        g^+ = ker D
    minus : Subspace
        g^- = {X : D^2 X = -X}
    tau : Matrix
        tau_D = 1 + 2 D^2, +1 on g^+ and -1 on g^-
    fourfold : dict
        {('+', '+'): g_+^+, ...} when theta is given, keys (theta sign,
        D sign)
    """
    plus: Subspace
    minus: Subspace
    tau: Matrix
    fourfold: Optional[Dict[Tuple[str, str], Subspace]] = None


def extrinsic_split(g, D, theta=None) -> ExtrinsicSplit:
    """
    Raises
    ------
        GradingRelationError: D^3 != -D
    """
    D = Matrix(D)
    n = D.rows
    if D * D * D != -D:
        raise algebra_exceptions.GradingRelationError('extrinsic_RZ2',
                                                      'D^3 = -D')
    plus = Subspace.kernel(D)
    minus = Subspace.kernel(D * D + eye(n))
    tau = eye(n) + 2 * D * D
    fourfold = None
    if theta is not None:
        split = z2_split(g, theta)
        fourfold = {('+', '+'): split.plus & plus,
                    ('+', '-'): split.plus & minus,
                    ('-', '+'): split.minus & plus,
                    ('-', '-'): split.minus & minus}
    return ExtrinsicSplit(plus, minus, tau, fourfold)


def standard_model_structure(phi_l: EquivStructure,
                             phi_a: EquivStructure,
                             name: str = '') -> EquivStructure:
    """
    The structure on l^* + a + l induced by phi_l and phi_a: a derivation
    acts by -Z o phi_l(X) + phi_a(X) + phi_l(X), an automorphism by
    Z o phi_l(k)^-1 + phi_a(k) + phi_l(k)
    """
    n, m = phi_l.dim, phi_a.dim
    derivations = {}
    for label in [*phi_l.derivations,
                  *(d for d in phi_a.derivations
                    if d not in phi_l.derivations)]:
        A = phi_l.derivations.get(label, zeros(n, n))
        derivations[label] = block_diagonal(
            -A.T, phi_a.derivations.get(label, zeros(m, m)), A)
    automorphisms = {}
    for label in [*phi_l.automorphisms,
                  *(k for k in phi_a.automorphisms
                    if k not in phi_l.automorphisms)]:
        k = phi_l.automorphisms.get(label, eye(n))
        automorphisms[label] = block_diagonal(
            inverse(k).T, phi_a.automorphisms.get(label, eye(m)), k)
    preset = phi_l.preset if phi_l.preset == phi_a.preset or \
        phi_a.preset is None else None
    return EquivStructure(2 * n + m, derivations, automorphisms,
                          phi_l.relations, preset, name)


def _derivation_equations(system: LinearSystem, ldim: int, degree: int,
                          vdim: int, Al: Matrix, Aa: Matrix, position):
    """ A_a c(e_I) - sum_i c(.., A_l e_Ii, ..) = 0 for all I """
    Al_rows = Al.tolist()
    Aa_rows = Aa.tolist()
    for subset, s in position.items():
        for a in range(vdim):
            row = {}
            for b in range(vdim):
                if Aa_rows[a][b] != 0:
                    row[s * vdim + b] = row.get(s * vdim + b, 0) + \
                        Aa_rows[a][b]
            for slot, index in enumerate(subset):
                for target in range(ldim):
                    c = Al_rows[target][index]
                    if c == 0:
                        continue
                    replaced = list(subset)
                    replaced[slot] = target
                    sign, ordered = sort_sign(replaced)
                    if sign == 0:
                        continue
                    key = position[ordered] * vdim + a
                    row[key] = row.get(key, 0) - sign * c
            system.add_equation(row)


def _automorphism_equations(system: LinearSystem, ldim: int, degree: int,
                            vdim: int, kl: Matrix, ka: Matrix, position):
    """ sum_J det(k_l[J, I]) c(e_J) - k_a c(e_I) = 0 for all I """
    ka_rows = ka.tolist()
    for subset, s in position.items():
        block = kl.extract(list(range(ldim)), list(subset))
        nonzero_rows = [r for r in range(ldim)
                        if not block[r, :].is_zero_matrix]
        minors = {}
        for J in combinations(nonzero_rows, degree):
            minor = block.extract(list(J), list(range(degree))).det() \
                if degree else 1
            if minor != 0:
                minors[J] = minor
        if degree == 0:
            minors = {(): 1}
        for a in range(vdim):
            row = {}
            for J, minor in minors.items():
                key = position[J] * vdim + a
                row[key] = row.get(key, 0) + minor
            for b in range(vdim):
                if ka_rows[a][b] != 0:
                    key = s * vdim + b
                    row[key] = row.get(key, 0) - ka_rows[a][b]
            system.add_equation(row)


def invariant_cochains(ldim: int, phi_l: Optional[EquivStructure],
                       degree: int, vdim: int = 1,
                       phi_a: Optional[EquivStructure] = None,
                       scalar: bool = False) -> List[Cochain]:
    """
    Basis of the invariant p-cochains. Derivation generators are imposed
    infinitesimally, automorphism generators exactly. Generators of
    phi_a are matched to those of phi_l by name; a missing one acts by
    zero (derivations) or the identity (automorphisms).

    Parameters
    ----------
        ldim: int
            dimension of l
        phi_l: EquivStructure or None
            structure on l, None for the trivial structure
        degree: int
        vdim: int
            dimension of the module a (ignored when scalar)
        phi_a: EquivStructure or None
            structure on a
        scalar: bool
            scalar valued cochains C^p(l)

    Returns
    -------
        list of Cochain spanning the invariant subspace
    """
    vdim = 1 if scalar else vdim
    subsets = list(combinations(range(ldim), degree))
    position = {s: a for a, s in enumerate(subsets)}
    nvars = len(subsets) * vdim
    system = LinearSystem(nvars)
    if phi_l is not None:
        for label, Al in phi_l.derivations.items():
            Aa = zeros(vdim, vdim) if scalar or phi_a is None else \
                phi_a.derivations.get(label, zeros(vdim, vdim))
            _derivation_equations(system, ldim, degree, vdim, Al, Aa,
                                  position)
        for label, kl in phi_l.automorphisms.items():
            ka = eye(vdim) if scalar or phi_a is None else \
                phi_a.automorphisms.get(label, eye(vdim))
            _automorphism_equations(system, ldim, degree, vdim, kl, ka,
                                    position)
    metriclie_log.debug("invariant {}-cochains: {}".format(degree, system))
    solution = system.solve()
    return [Cochain.from_vector(ldim, degree, vdim, v, scalar)
            for v in solution.kernel]
