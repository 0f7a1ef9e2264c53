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
Algebra documents: JSON (or YAML) files carrying sparse structure
constants with rationals as strings, plus optional form, equivariant
structure, module, cochain, subspace and vector blocks.

Canonical document layout, keys in this order:

    name, dim, basis, brackets [[i, j, [[k, "c"], ...]], ...] (i < j,
    lexicographic), form, equiv {preset, derivations, automorphisms},
    module {name, dim, rho, form, equiv}, cochains {label: [[subset,
    value], ...]}, subspaces {label: [vector, ...]}, vectors {label:
    vector}
"""
import json
import logging
import yaml

from typing import Dict, NamedTuple, Optional

from sympy import Matrix

from metriclie.algebra.equivar import EquivStructure, GradingKind
from metriclie.algebra.liealg import LieAlgebra, LieModule
from metriclie.algebra.metric import MetricLieAlgebra
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import OrthogonalModule, QuadCocycle
from metriclie.exceptions import algebra_exceptions, document_exceptions
from metriclie.utils.exactlin import SymForm, rational_str, to_rational
from metriclie.utils.subspace import Subspace

metriclie_log = logging.getLogger('metriclie')

# cochain labels and the degree they are stored with, scalar or a-valued
COCHAIN_KINDS = {'alpha': (2, False), 'gamma': (3, True),
                 'tau': (1, False), 'sigma': (2, True)}
SECTIONS = ('name', 'dim', 'basis', 'brackets', 'form', 'equiv', 'module',
            'cochains', 'subspaces', 'vectors')


class AlgebraData(NamedTuple):
    """
    In-memory content of an algebra document

    Attributes
    ----------
    alg : LieAlgebra
    form : SymForm
        invariant form, None when the document has no form block
    equiv : EquivStructure
    module : OrthogonalModule
        a module over alg, for cocycle documents
    cochains : dict
        label ('alpha', 'gamma', 'tau', 'sigma') -> Cochain
    subspaces : dict
        label -> Subspace of alg (of the module for 'a_prime')
    vectors : dict
        label -> column vector
    """
    alg: LieAlgebra
    form: Optional[SymForm] = None
    equiv: Optional[EquivStructure] = None
    module: Optional[OrthogonalModule] = None
    cochains: Dict[str, Cochain] = {}
    subspaces: Dict[str, Subspace] = {}
    vectors: Dict[str, Matrix] = {}

    @property
    def metric(self) -> MetricLieAlgebra:
        if self.form is None:
            raise document_exceptions.DocumentParseError(
                'form', 'a metric Lie algebra needs a form block')
        return MetricLieAlgebra(self.alg, self.form, self.alg.name)

    def cocycle(self, first: str = 'alpha',
                second: str = 'gamma') -> QuadCocycle:
        """ the pair of cochains stored under the two labels """
        if self.module is None:
            raise document_exceptions.DocumentParseError(
                'module', 'a cocycle needs a module block')
        for key in (first, second):
            if key not in self.cochains:
                raise document_exceptions.DocumentParseError(
                    'cochains.{}'.format(key), 'missing cochain')
        return QuadCocycle(self.cochains[first], self.cochains[second],
                           self.module)

    def subspace(self, key: str) -> Subspace:
        if key not in self.subspaces:
            raise document_exceptions.DocumentParseError(
                'subspaces.{}'.format(key), 'missing subspace')
        return self.subspaces[key]

    @classmethod
    def from_metric(cls, g: MetricLieAlgebra,
                    equiv: EquivStructure = None, **blocks) -> 'AlgebraData':
        return cls(g.alg, g.form, equiv, **blocks)

    @classmethod
    def from_cocycle(cls, z: QuadCocycle, equiv: EquivStructure = None,
                     **blocks) -> 'AlgebraData':
        """ l with phi_l, the module a and the cochains alpha, gamma """
        cochains = dict(blocks.pop('cochains', {}))
        cochains.update(alpha=z.alpha, gamma=z.gamma)
        return cls(z.algebra, None, equiv, z.module, cochains, **blocks)


# parsing

def _fail(path: str, reason: str):
    raise document_exceptions.DocumentParseError(path, reason)


def _field(document: Dict, key: str, path: str, kind=None):
    if not isinstance(document, dict) or key not in document:
        _fail(_join(path, key), 'missing field')
    value = document[key]
    if kind is not None and not isinstance(value, kind):
        _fail(_join(path, key), 'expected {}'.format(kind.__name__))
    return value


def _join(path: str, key) -> str:
    if isinstance(key, int):
        return '{}[{}]'.format(path, key)
    return '{}.{}'.format(path, key) if path else key


def _mapping(document: Dict, key: str) -> Dict:
    value = document.get(key, {})
    if not isinstance(value, dict):
        _fail(key, 'expected a mapping')
    return value


def _rational(value, path: str):
    try:
        return to_rational(value)
    except algebra_exceptions.RationalParseError:
        _fail(path, 'malformed rational {!r}'.format(value))


def _index(value, dim: int, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or \
            not 0 <= value < dim:
        _fail(path, 'index {!r} out of range 0..{}'.format(value, dim - 1))
    return value


def _vector(values, dim: int, path: str) -> Matrix:
    if not isinstance(values, list) or len(values) != dim:
        _fail(path, 'expected a list of {} rationals'.format(dim))
    return Matrix(dim, 1, [_rational(v, _join(path, a))
                           for a, v in enumerate(values)])


def _matrix(rows, dim: int, path: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != dim:
        _fail(path, 'expected a {0} x {0} matrix'.format(dim))
    if dim == 0:
        return Matrix.zeros(0, 0)
    return Matrix.hstack(*[_vector(row, dim, _join(path, r))
                           for r, row in enumerate(rows)]).T


def _form(rows, dim: int, path: str) -> SymForm:
    G = _matrix(rows, dim, path)
    if G != G.T:
        _fail(path, 'the form is not symmetric')
    return SymForm(G)


def _brackets(entries, dim: int, path: str) -> Dict:
    if not isinstance(entries, list):
        _fail(path, 'expected a list of [i, j, terms]')
    brackets = {}
    for e, entry in enumerate(entries):
        here = _join(path, e)
        if not isinstance(entry, list) or len(entry) != 3:
            _fail(here, 'expected [i, j, [[k, c], ...]]')
        i = _index(entry[0], dim, _join(here, 0))
        j = _index(entry[1], dim, _join(here, 1))
        if i >= j:
            _fail(here, 'only entries with i < j are stored')
        if (i, j) in brackets:
            _fail(here, 'repeated pair ({}, {})'.format(i, j))
        terms = {}
        if not isinstance(entry[2], list):
            _fail(_join(here, 2), 'expected a list of [k, c]')
        for t, term in enumerate(entry[2]):
            where = _join(_join(here, 2), t)
            if not isinstance(term, list) or len(term) != 2:
                _fail(where, 'expected [k, c]')
            k = _index(term[0], dim, _join(where, 0))
            terms[k] = terms.get(k, 0) + _rational(term[1], _join(where, 1))
        brackets[(i, j)] = terms
    return brackets


def _equiv(block, dim: int, path: str) -> EquivStructure:
    if not isinstance(block, dict):
        _fail(path, 'expected a mapping')
    preset = block.get('preset')
    relations = ()
    if preset is not None:
        try:
            relations = GradingKind.from_label(preset).relations()
        except algebra_exceptions.GradingRelationError:
            _fail(_join(path, 'preset'), 'unknown preset {!r}'.format(preset))
    matrices = {}
    for kind in ('derivations', 'automorphisms'):
        entries = block.get(kind, {})
        if not isinstance(entries, dict):
            _fail(_join(path, kind), 'expected a mapping name -> matrix')
        matrices[kind] = {name: _matrix(rows, dim,
                                        _join(_join(path, kind), name))
                          for name, rows in entries.items()}
    return EquivStructure(dim, matrices['derivations'],
                          matrices['automorphisms'], relations, preset,
                          block.get('name', ''))


def _module(block, alg: LieAlgebra, path: str) -> OrthogonalModule:
    dim = _field(block, 'dim', path, int)
    rho = _field(block, 'rho', path, list)
    if len(rho) != alg.dim:
        _fail(_join(path, 'rho'), 'expected one matrix per basis vector '
              '({})'.format(alg.dim))
    matrices = [_matrix(rows, dim, _join(_join(path, 'rho'), i))
                for i, rows in enumerate(rho)]
    module = LieModule(alg, matrices, block.get('name', ''), dim)
    form = _form(_field(block, 'form', path), dim, _join(path, 'form'))
    equiv = None
    if 'equiv' in block:
        equiv = _equiv(block['equiv'], dim, _join(path, 'equiv'))
    return OrthogonalModule(module, form, equiv)


def _cochain(entries, label: str, ldim: int, vdim: int,
             path: str) -> Cochain:
    degree, scalar = COCHAIN_KINDS[label]
    if not isinstance(entries, list):
        _fail(path, 'expected a list of [subset, value]')
    values = {}
    for e, entry in enumerate(entries):
        here = _join(path, e)
        if not isinstance(entry, list) or len(entry) != 2 or \
                not isinstance(entry[0], list) or len(entry[0]) != degree:
            _fail(here, 'expected [[{} indices], value]'.format(degree))
        subset = tuple(_index(i, ldim, _join(_join(here, 0), a))
                       for a, i in enumerate(entry[0]))
        if list(subset) != sorted(set(subset)):
            _fail(_join(here, 0), 'indices must be strictly increasing')
        if scalar:
            values[subset] = _rational(entry[1], _join(here, 1))
        else:
            values[subset] = list(_vector(entry[1], vdim, _join(here, 1)))
    return Cochain.from_dict(ldim, degree, vdim, values, scalar)


def parse_document(document: Dict) -> AlgebraData:
    """
    Builds the in-memory objects of an algebra document

    Parameters
    ----------
        document: dict
            decoded JSON or YAML

    Returns
    -------
        AlgebraData

    Raises
    ------
        DocumentParseError: with the path of the offending field
            (malformed rational, index out of range, non-symmetric form,
            missing or mistyped field, unknown section)
    """
    if not isinstance(document, dict):
        _fail('', 'a document is a mapping')
    for key in document:
        if key not in SECTIONS:
            _fail(str(key), 'unknown section')
    dim = _field(document, 'dim', '', int)
    name = document.get('name', '')
    basis = document.get('basis')
    if basis is not None and (not isinstance(basis, list) or
                              len(basis) != dim):
        _fail('basis', 'expected {} basis names'.format(dim))
    brackets = _brackets(document.get('brackets', []), dim, 'brackets')
    alg = LieAlgebra(dim, brackets, basis, name)
    form = None
    if 'form' in document:
        form = _form(document['form'], dim, 'form')
    equiv = None
    if 'equiv' in document:
        equiv = _equiv(document['equiv'], dim, 'equiv')
    module = None
    if 'module' in document:
        module = _module(document['module'], alg, 'module')
    cochains = {}
    for label, entries in _mapping(document, 'cochains').items():
        path = _join('cochains', label)
        if label not in COCHAIN_KINDS:
            _fail(path, 'unknown cochain, expected one of {}'
                  ''.format(', '.join(COCHAIN_KINDS)))
        scalar = COCHAIN_KINDS[label][1]
        if module is None and not scalar:
            _fail(path, 'an a-valued cochain needs a module block')
        cochains[label] = _cochain(entries, label, dim,
                                   1 if scalar else module.dim, path)
    subspaces = {}
    for label, vectors in _mapping(document, 'subspaces').items():
        path = _join('subspaces', label)
        ambient = module.dim if label == 'a_prime' and module else dim
        if not isinstance(vectors, list):
            _fail(path, 'expected a list of vectors')
        subspaces[label] = Subspace(ambient, [
            _vector(v, ambient, _join(path, a))
            for a, v in enumerate(vectors)])
    vectors = {label: _vector(v, dim, _join('vectors', label))
               for label, v in _mapping(document, 'vectors').items()}
    metriclie_log.debug("parsed document {} of dimension {}"
                        "".format(name, dim))
    return AlgebraData(alg, form, equiv, module, cochains, subspaces,
                       vectors)


# emission

def _emit_vector(v) -> list:
    return [rational_str(x) for x in v]


def _emit_matrix(A: Matrix) -> list:
    return [_emit_vector(A.row(r)) for r in range(A.rows)]


def _emit_brackets(alg: LieAlgebra) -> list:
    constants = alg.structure_constants()
    return [[i, j, [[k, rational_str(c)] for k, c in
                    sorted(constants[(i, j)].items()) if c != 0]]
            for (i, j) in sorted(constants) if any(constants[(i, j)].values())]


def _emit_equiv(equiv: EquivStructure) -> dict:
    block = {'preset': equiv.preset}
    for kind in ('derivations', 'automorphisms'):
        matrices = getattr(equiv, kind)
        block[kind] = {name: _emit_matrix(matrices[name])
                       for name in sorted(matrices)}
    return block


def _emit_cochain(c: Cochain) -> list:
    entries = []
    for subset, values in c.to_dict().items():
        value = rational_str(values[0]) if c.scalar else \
            _emit_vector(values)
        entries.append([list(subset), value])
    return entries


def emit_document(data: AlgebraData) -> Dict:
    """
    Canonical document of the objects: sections in a fixed order, only
    i < j bracket entries, sparse terms sorted lexicographically, zero
    entries dropped, subspaces by their reduced echelon basis
    """
    alg = data.alg
    document = {'name': alg.name, 'dim': alg.dim,
                'basis': list(alg.basis_names),
                'brackets': _emit_brackets(alg)}
    if data.form is not None:
        document['form'] = _emit_matrix(data.form.matrix)
    if data.equiv is not None:
        document['equiv'] = _emit_equiv(data.equiv)
    if data.module is not None:
        module = data.module
        block = {'name': module.module.name, 'dim': module.dim,
                 'rho': [_emit_matrix(Matrix(A))
                         for A in module.module.rho_matrices],
                 'form': _emit_matrix(module.gram)}
        if module.equiv is not None:
            block['equiv'] = _emit_equiv(module.equiv)
        document['module'] = block
    if data.cochains:
        document['cochains'] = {
            label: _emit_cochain(data.cochains[label])
            for label in COCHAIN_KINDS if label in data.cochains}
    if data.subspaces:
        document['subspaces'] = {
            label: [_emit_vector(v) for v in data.subspaces[label].vectors()]
            for label in sorted(data.subspaces)}
    if data.vectors:
        document['vectors'] = {label: _emit_vector(data.vectors[label])
                               for label in sorted(data.vectors)}
    return document


def dumps(document: Dict) -> str:
    """ deterministic JSON text, key order as built """
    return json.dumps(document, indent=1, ensure_ascii=False) + '\n'


def loads(text: str, path: str = '<stdin>') -> Dict:
    """
    Decodes JSON, falling back to YAML

    Raises
    ------
        DocumentParseError: neither JSON nor YAML
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as err:
        raise document_exceptions.DocumentParseError(
            path, 'neither JSON nor YAML: {}'.format(err))


def read_document(filename: str) -> AlgebraData:
    """ parses the document stored in filename """
    with open(filename, 'r') as document_file:
        return parse_document(loads(document_file.read(), filename))


def write_document(data: AlgebraData, filename: str):
    with open(filename, 'w') as document_file:
        document_file.write(dumps(emit_document(data)))
