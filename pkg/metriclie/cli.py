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
Command line front-end: reads algebra documents (paths or - for standard
input), delegates every command to one library operation and writes a
deterministic report. The exit status is 0 for Yes, 1 for No, 2 for
Unknown and 3 for an input error.
"""
import argparse
import enum
import logging
import sys

from typing import Callable, Dict, List, NamedTuple, Optional

from sympy import Matrix, Rational
from sympy.matrices import MatrixBase

from metriclie.algebra import equivar, liealg, metric
from metriclie.applications import extrinsic, manin
from metriclie.catalog import families, lorentzian
from metriclie.catalog.basic import rationals
from metriclie.cohomology import balanced, qcohom
from metriclie.cohomology.cochain import Cochain
from metriclie.exceptions import (algebra_exceptions, catalog_exceptions,
                                  cochain_exceptions, document_exceptions)
from metriclie.extensions import quadext
from metriclie.io import documents
from metriclie.utils.decision import Check, Decision, DecisionKind
from metriclie.utils.exactlin import rational_str
from metriclie.utils.settings import Settings
from metriclie.utils.subspace import Subspace
from metriclie.version import __version__

metriclie_log = logging.getLogger('metriclie')

INPUT_ERROR = 3

INPUT_ERRORS = (
    algebra_exceptions.RationalParseError,
    algebra_exceptions.DimensionMismatchError,
    algebra_exceptions.FormNotSymmetricError,
    algebra_exceptions.AntisymmetryError,
    algebra_exceptions.JacobiIdentityError,
    algebra_exceptions.NotMetricError,
    algebra_exceptions.NotDerivationError,
    algebra_exceptions.NotIsometryError,
    algebra_exceptions.NotInvolutionError,
    algebra_exceptions.GradingRelationError,
    algebra_exceptions.ModuleNotSemisimpleError,
    catalog_exceptions.InvalidFamilyParameterError,
    catalog_exceptions.UnknownFamilyError,
    cochain_exceptions.NotCocycleError,
    cochain_exceptions.SectionError,
    cochain_exceptions.QuadraticExtensionError,
    document_exceptions.DocumentParseError,
    document_exceptions.UnknownCommandError,
    OSError,
)


class Outcome(NamedTuple):
    """
    Result of a command

    Attributes
    ----------
    payload : dict
        report or document, keys in output order
    kind : DecisionKind
        decides the exit status, None for commands that always succeed
    input_error : bool
        some input of a batch could not be read
    """
    payload: Dict
    kind: Optional[DecisionKind] = None
    input_error: bool = False

    @property
    def exit_code(self) -> int:
        if self.input_error:
            return INPUT_ERROR
        return 0 if self.kind is None else self.kind.exit_code


# serialization of results

def plain(value):
    """ JSON ready form of library values, rationals as strings """
    if isinstance(value, bool) or value is None or \
            isinstance(value, (int, str)):
        return value
    if isinstance(value, Rational):
        return rational_str(value)
    if isinstance(value, enum.Enum):
        return value.name.lower()
    if isinstance(value, Subspace):
        return [plain(list(v)) for v in value.vectors()]
    if isinstance(value, MatrixBase):
        if value.cols == 1:
            return [rational_str(x) for x in value]
        return [[rational_str(x) for x in value.row(r)]
                for r in range(value.rows)]
    if isinstance(value, Cochain):
        return [[list(subset), plain(values[0]) if value.scalar else
                 plain(values)] for subset, values in value.to_dict().items()]
    if isinstance(value, (Decision, Check)):
        return _decision(value)
    if isinstance(value, liealg.LieAlgebra):
        return documents.emit_document(documents.AlgebraData(value))
    if isinstance(value, metric.MetricLieAlgebra):
        return documents.emit_document(
            documents.AlgebraData.from_metric(value))
    if hasattr(value, '_asdict'):
        return {key: plain(item) for key, item in value._asdict().items()}
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    return str(value)


def _decision(result) -> Dict:
    if isinstance(result, Check):
        payload = {'decision': 'yes' if result.holds else 'no'}
        if not result.holds:
            payload['violation'] = plain(result.violation)
        return payload
    payload = {'decision': result.kind.name.lower()}
    if result.reason:
        payload['reason'] = result.reason
    if result.witness is not None:
        payload['witness'] = plain(result.witness)
    return payload


def _kind(result) -> DecisionKind:
    if isinstance(result, Check):
        return DecisionKind.YES if result.holds else DecisionKind.NO
    return result.kind


def worst(kinds) -> DecisionKind:
    """ No before Unknown before Yes """
    kinds = list(kinds)
    for kind in (DecisionKind.NO, DecisionKind.UNKNOWN):
        if kind in kinds:
            return kind
    return DecisionKind.YES


def _flatten(value, prefix: str):
    """ (dotted key, leaf) pairs; lists of plain rows stay leaves """
    if isinstance(value, dict):
        for key, item in value.items():
            yield from _flatten(item, '{}.{}'.format(prefix, key)
                                if prefix else str(key))
    elif isinstance(value, list) and any(isinstance(v, dict)
                                         for v in value):
        for i, item in enumerate(value):
            yield from _flatten(item, '{}.{}'.format(prefix, i))
    else:
        yield prefix, value


def _inline(value) -> str:
    if isinstance(value, list):
        return '[' + ', '.join(_inline(v) for v in value) + ']'
    if value is None:
        return '-'
    return str(value)


def render_text(payload: Dict) -> str:
    """ one aligned 'key: value' line per leaf """
    pairs = list(_flatten(payload, ''))
    width = max([len(key) for key, _ in pairs] + [0])
    return ''.join('{}: {}\n'.format(key.ljust(width), _inline(value))
                   for key, value in pairs)


def render(payload: Dict, report_format: str) -> str:
    if report_format == 'text':
        return render_text(payload)
    return documents.dumps(payload)


# input

def read_input(path: str) -> documents.AlgebraData:
    if path == '-':
        return documents.parse_document(documents.loads(sys.stdin.read()))
    return documents.read_document(path)


def _header(command: str, path: str = None) -> Dict:
    payload = {'command': command}
    if path is not None:
        payload['input'] = path
    return payload


def _require_equiv(data: documents.AlgebraData):
    if data.equiv is None:
        raise document_exceptions.DocumentParseError(
            'equiv', 'the command needs an equivariant structure')
    return data.equiv


def _theta(equiv) -> Matrix:
    if equiv.theta is None:
        raise document_exceptions.DocumentParseError(
            'equiv.automorphisms.theta', 'the command needs an involution')
    return equiv.theta


# commands

def cmd_verify(args) -> Outcome:
    """ Jacobi identity, invariance of the form and the structure """
    data = read_input(args.document)
    checks = {'jacobi': liealg.check_jacobi(data.alg)}
    payload = _header('verify', args.document)
    if data.form is not None:
        g = data.metric
        checks['metric'] = metric.check_metric(g)
        if data.equiv is not None:
            checks['equivariant'] = equivar.check_equivariant(g, data.equiv)
        if checks['metric']:
            payload['fingerprint'] = plain(metric.fingerprint(g))
    elif data.equiv is not None:
        checks['equivariant'] = equivar.check_equivariant(data.alg,
                                                          data.equiv)
    kind = worst(_kind(check) for check in checks.values())
    payload['decision'] = kind.name.lower()
    payload['checks'] = {key: _decision(check)
                         for key, check in checks.items()}
    return Outcome(payload, kind)


def cmd_invariants(args) -> Outcome:
    data = read_input(args.document)
    payload = _header('invariants', args.document)
    payload['fingerprint'] = plain(metric.fingerprint(data.metric))
    return Outcome(payload)


def cmd_construct(args) -> Outcome:
    params = families.FamilyParams.parse(args.family, args.params)
    entry = families.construct(params)
    return Outcome(documents.emit_document(
        documents.AlgebraData.from_metric(entry.g, entry.phi)))


def cmd_extend(args) -> Outcome:
    """ the standard model of the cocycle document """
    data = read_input(args.document)
    w = quadext.standard_model(data.cocycle(), data.equiv)
    return Outcome(documents.emit_document(
        documents.AlgebraData.from_metric(w.g, w.phi,
                                          subspaces={'ri': w.ri})))


def cmd_extract(args) -> Outcome:
    """ the cocycle of the canonical quadratic extension """
    data = read_input(args.document)
    w = quadext.canonical_extension(data.metric, data.equiv)
    z = quadext.extract_cocycle(w, seed=args.seed)
    return Outcome(documents.emit_document(
        documents.AlgebraData.from_cocycle(z, w.phi_l)))


def cmd_canonical_ideal(args) -> Outcome:
    data = read_input(args.document)
    ideal = metric.canonical_isotropic_ideal(data.metric, data.equiv)
    payload = _header('canonical-ideal', args.document)
    payload['dim'] = ideal.ri.dim
    payload['subspaces'] = {'ri': plain(ideal.ri)}
    payload['radical_chain_dims'] = [R.dim for R in ideal.chain]
    payload['quotient_abelian'] = ideal.quotient_abelian
    if ideal.invariant is not None:
        payload['invariant'] = ideal.invariant
    return Outcome(payload)


def cmd_balanced(args) -> Outcome:
    data = read_input(args.document)
    report = balanced.is_balanced(data.cocycle(), data.equiv,
                                  cross_check=args.cross_check,
                                  seed=args.seed)
    payload = _header('balanced', args.document)
    payload.update(_decision(report.aggregate))
    payload['m'] = report.m
    payload['conditions'] = {key: _decision(decision) for key, decision
                             in report.conditions.items()}
    if report.cross_check is not None:
        payload['cross_check'] = report.cross_check
    return Outcome(payload, report.aggregate.kind)


def cmd_admissible(args) -> Outcome:
    data = read_input(args.document)
    z = data.cocycle()
    theta_l = _theta(_require_equiv(data))
    theta_a = None
    if z.module.equiv is not None:
        theta_a = z.module.equiv.theta
    decision = balanced.admissible(z, theta_l, theta_a, seed=args.seed)
    payload = _header('admissible', args.document)
    payload.update(_decision(decision))
    return Outcome(payload, decision.kind)


def cmd_decompose(args) -> Outcome:
    data = read_input(args.document)
    decision = metric.decompose(data.metric, seed=args.seed)
    payload = _header('decompose', args.document)
    payload.update(_decision(decision))
    return Outcome(payload, decision.kind)


def cmd_equivalent(args) -> Outcome:
    first = read_input(args.document)
    second = read_input(args.other)
    phi_a = None if first.module is None else first.module.equiv
    decision = qcohom.equivalent(first.cocycle(), second.cocycle(),
                                 first.equiv, phi_a)
    payload = _header('equivalent', args.document)
    payload['other'] = args.other
    payload.update(_decision(decision))
    return Outcome(payload, decision.kind)


def cmd_manin(args) -> Outcome:
    """ Manin pair (subspace h1), Manin triple and cobracket (h1, h2) """
    data = read_input(args.document)
    g = data.metric
    h1 = data.subspace('h1')
    payload = _header('manin', args.document)
    if 'h2' not in data.subspaces:
        check = manin.check_manin_pair(g, h1)
        payload.update(_decision(check))
        return Outcome(payload, _kind(check))
    h2 = data.subspaces['h2']
    check = manin.check_manin_triple(g, h1, h2)
    payload.update(_decision(check))
    if check:
        cobracket = manin.cobracket_from_triple(
            manin.ManinWitness(g, h1, h2))
        payload['cobracket'] = {
            'delta': [plain(C) for C in cobracket.delta],
            'cocycle': _decision(cobracket.cocycle),
            'cojacobi': _decision(cobracket.cojacobi),
            'dual': plain(cobracket.dual)}
    return Outcome(payload, _kind(check))


def cmd_extrinsic(args) -> Outcome:
    """
    Extrinsic symmetric triple axioms and fullness of a metric document,
    or the innerness condition for a cocycle document
    """
    data = read_input(args.document)
    equiv = _require_equiv(data)
    payload = _header('extrinsic', args.document)
    if data.module is not None:
        decision = extrinsic.check_O4(data.cocycle(), equiv)
        payload.update(_decision(decision))
        return Outcome(payload, decision.kind)
    if 'D' not in equiv.derivations:
        raise document_exceptions.DocumentParseError(
            'equiv.derivations.D', 'missing derivation')
    t = extrinsic.ExtrinsicTriple(data.metric, equiv.derivations['D'],
                                  _theta(equiv), data.vectors.get('xi'))
    report = extrinsic.check_extrinsic(t)
    checks = dict(report.checks)
    checks['full'] = extrinsic.check_fullness(t)
    kind = worst(_kind(check) for check in checks.values())
    payload['decision'] = kind.name.lower()
    payload['checks'] = {key: _decision(check)
                         for key, check in checks.items()}
    if report.xi is not None:
        payload['xi'] = plain(report.xi)
    return Outcome(payload, kind)


def cmd_cw_metric(args) -> Outcome:
    params = lorentzian.cw_params(args.p, args.q, args.lam, args.mu)
    form = lorentzian.cw_metric_at(params, args.point)
    payload = _header('cw-metric')
    payload['params'] = plain(params)
    payload['point'] = plain(list(rationals('cahen_wallach', args.point)))
    payload['metric'] = plain(form.matrix)
    return Outcome(payload)


def cmd_report(args) -> Outcome:
    """ one pipeline over a batch of documents, in input order """
    handler = COMMANDS[args.pipeline][0]
    reports, kinds, failed = [], [], False
    for path in args.documents:
        sub = argparse.Namespace(**vars(args))
        sub.document = path
        try:
            outcome = handler(sub)
        except INPUT_ERRORS as err:
            reports.append({'input': path, 'error': str(err)})
            failed = True
            continue
        reports.append(outcome.payload)
        kinds.append(outcome.kind or DecisionKind.YES)
    payload = _header('report')
    payload['pipeline'] = args.pipeline
    payload['reports'] = reports
    kind = worst(kinds)
    payload['decision'] = kind.name.lower()
    return Outcome(payload, kind, failed)


def _document(parser):
    parser.add_argument('document', help="algebra document, - for "
                        "standard input")


def _documents_parser(subparsers, name, handler, help_text):
    parser = subparsers.add_parser(name, help=help_text)
    _document(parser)
    parser.set_defaults(handler=handler)
    return parser


# command name -> (handler, help)
COMMANDS: Dict[str, tuple] = {
    'verify': (cmd_verify, 'Jacobi identity, invariant form, structure'),
    'invariants': (cmd_invariants, 'isomorphism invariants'),
    'extend': (cmd_extend, 'standard model of a cocycle document'),
    'extract': (cmd_extract, 'cocycle of the canonical extension'),
    'canonical-ideal': (cmd_canonical_ideal, 'canonical isotropic ideal'),
    'balanced': (cmd_balanced, 'balancedness of a cocycle'),
    'admissible': (cmd_admissible, 'admissibility of a cocycle'),
    'decompose': (cmd_decompose, 'orthogonal decomposability'),
    'manin': (cmd_manin, 'Manin pair or triple and its cobracket'),
    'extrinsic': (cmd_extrinsic, 'extrinsic symmetric triple'),
}


class CommandParser(argparse.ArgumentParser):
    """ usage errors raise UnknownCommandError, exit status 3 """

    def error(self, message):
        self.print_usage(sys.stderr)
        raise document_exceptions.UnknownCommandError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = CommandParser(
        prog='metriclie', description="Exact computations with metric Lie "
        "algebras, symmetric triples and quadratic extensions")
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    parser.add_argument('--seed', type=int, default=None,
                        help="random seed, default from settings")
    parser.add_argument('--format', dest='report_format',
                        choices=('json', 'text'), default=None,
                        help="report format, default from settings")
    parser.add_argument('--output', default=None,
                        help="write the report to a file")
    parser.add_argument('--verbose', action='store_true',
                        help="log progress to standard error")
    subparsers = parser.add_subparsers(dest='command')
    for name, (handler, help_text) in COMMANDS.items():
        sub = _documents_parser(subparsers, name, handler, help_text)
        if name == 'balanced':
            sub.add_argument('--cross-check', action='store_true',
                             help="compare with ri of the standard model")
    sub = _documents_parser(subparsers, 'equivalent', cmd_equivalent,
                            'equivalence of two cocycles')
    sub.add_argument('other', help="second cocycle document")
    sub = subparsers.add_parser('construct', help="catalog family member")
    sub.add_argument('family', help="one of {}".format(
        ', '.join(families.family_tags())))
    sub.add_argument('params', nargs='*', help="values or name=value")
    sub.set_defaults(handler=cmd_construct)
    sub = subparsers.add_parser('cw-metric', help="Cahen-Wallach metric "
                                "at a point")
    sub.add_argument('p', type=int)
    sub.add_argument('q', type=int)
    sub.add_argument('--lam', nargs='*', default=[])
    sub.add_argument('--mu', nargs='*', default=[])
    sub.add_argument('--point', nargs='+', required=True)
    sub.set_defaults(handler=cmd_cw_metric)
    sub = subparsers.add_parser('report', help="a pipeline over documents")
    sub.add_argument('--pipeline', choices=sorted(COMMANDS),
                     default='verify')
    sub.add_argument('--cross-check', action='store_true')
    sub.add_argument('documents', nargs='+')
    sub.set_defaults(handler=cmd_report)
    return parser


def run(args: argparse.Namespace) -> Outcome:
    """
    Runs the command of parsed arguments

    Raises
    ------
        UnknownCommandError: no command given
        any of INPUT_ERRORS
    """
    if getattr(args, 'handler', None) is None:
        raise document_exceptions.UnknownCommandError(str(args.command))
    return args.handler(args)


def main(argv: List[str] = None,
         write: Callable[[str], object] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.basicConfig(level=logging.INFO, stream=sys.stderr)
        outcome = run(args)
    except INPUT_ERRORS as err:
        sys.stderr.write('metriclie: {}\n'.format(err))
        return INPUT_ERROR
    report_format = Settings.get('report_format', args.report_format)
    text = render(outcome.payload, report_format)
    if args.output is not None:
        with open(args.output, 'w') as output_file:
            output_file.write(text)
    else:
        (write or sys.stdout.write)(text)
    return outcome.exit_code


if __name__ == '__main__':
    sys.exit(main())
