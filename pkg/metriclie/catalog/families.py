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
Registry of the catalog families: every constructor is reachable by its
family tag with parameters given as text (command line) or as plain
values (documents).
"""
import enum
import logging

from typing import Dict, NamedTuple, Sequence, Tuple

import yaml

from metriclie.catalog import extrinsic, hermitian, hyperkahler, \
    lorentzian, nilpotent
from metriclie.catalog.basic import CatalogEntry
from metriclie.exceptions import catalog_exceptions

metriclie_log = logging.getLogger('metriclie')


def parse_quartic(text) -> Dict:
    """
    Quartic from 'e1,e2,...:c; ...' (exponents, then the coefficient),
    e.g. '4,0:1; 2,2:1/2; 0,4:1'. Mappings pass through.
    """
    if isinstance(text, dict):
        return {tuple(k): v for k, v in text.items()}
    quartic = {}
    for term in str(text).split(';'):
        if not term.strip():
            continue
        try:
            exponent, coefficient = term.split(':')
            quartic[tuple(int(e) for e in exponent.split(','))] = \
                coefficient.strip()
        except ValueError:
            raise catalog_exceptions.InvalidFamilyParameterError(
                'quartic', 'cannot read the term {!r}'.format(term))
    return quartic


def _sequence(value) -> tuple:
    """ '1, 2' or [1, 2] or 1 -> a tuple of the entries as given """
    if isinstance(value, (list, tuple)):
        return tuple(value)
    if isinstance(value, str):
        return tuple(v.strip() for v in value.split(',') if v.strip())
    return (value,)


def _flag(value) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in ('1', 'true', 'yes')
    return bool(value)


class FamilyParams(NamedTuple):
    """
    Family tag with its parameters

    Attributes
    ----------
    family : str
    params : dict
        parameter name -> value, text values are converted by the family
    args : tuple
        leading positional values, in the order of the family's
        parameters
    """
    family: str
    params: Dict = {}
    args: Tuple = ()

    @classmethod
    def parse(cls, family: str, items: Sequence[str]) -> 'FamilyParams':
        """
        From command line items 'value' or 'name=value'; values are read
        as YAML scalars or flow sequences, rationals such as 1/2 stay text

        Raises
        ------
            InvalidFamilyParameterError: a positional value after a named
            one
        """
        params, args = {}, []
        for item in items:
            key, value = item.split('=', 1) if '=' in item else (None, item)
            try:
                value = yaml.safe_load(value)
            except yaml.YAMLError:
                pass
            if key is not None:
                params[key.strip()] = value
            elif params:
                raise catalog_exceptions.InvalidFamilyParameterError(
                    family, 'positional value {!r} after named parameters'
                    ''.format(item))
            else:
                args.append(value)
        return cls(family, params, tuple(args))


def _osc(lam=(1,)):
    return lorentzian.osc(_sequence(lam))


def _cahen_wallach(p=0, q=0, lam=(), mu=()):
    return lorentzian.cahen_wallach(int(p), int(q), _sequence(lam),
                                    _sequence(mu))


def _index2_h1(lam=(), mu=(), variant=1):
    return lorentzian.index2_h1(_sequence(lam), _sequence(mu), int(variant))


def _nilpotent(entry='1', signature=None, gamma=0):
    if signature is not None:
        signature = tuple(int(s) for s in _sequence(signature))
    return nilpotent.nilpotent_le9(str(entry), signature, int(gamma))


def _pseudo_hermitian(case='1a', p=0, r=0, c=0):
    return hermitian.pseudo_hermitian(str(case), int(p), int(r), c)


def _para_hermitian(case='1', c=0):
    return hermitian.para_hermitian(str(case), c)


def _gm(m=1):
    return hermitian.gm_family(int(m))


def _hk_abelian(n=1, S=None, hypersymplectic=False):
    return hyperkahler.hk_abelian_holonomy(
        int(n), None if S is None else parse_quartic(S),
        _flag(hypersymplectic))


def _hk_nonabelian(n=1, p=0, hypersymplectic=False):
    return hyperkahler.hk_nonabelian_holonomy(int(n), int(p),
                                              _flag(hypersymplectic))


def _g_s(S=None, m=2, quaternionic=False):
    m = int(m)
    S = hyperkahler.s_lambda(1, 2 * m) if S is None else parse_quartic(S)
    return hyperkahler.build_gJS(S, m, _flag(quaternionic))


def _extrinsic(case='sl2', n=1, c=0):
    return extrinsic.extrinsic_simple(str(case), int(n), c)


class Family(enum.Enum):
    """
    Catalog families by tag

    Enumerators
    ------------
    OSC: oscillator algebras osc(lam)
    CAHEN_WALLACH: d(p, q, lam, mu)
    INDEX2_H1: index 2 triples over h(1)
    NILPOTENT: nilpotent metric Lie algebras up to dimension 9
    PSEUDO_HERMITIAN: pseudo-Hermitian triples of signature (2, 2q)
    PARA_HERMITIAN: para-Hermitian triples of signature (2, 2)
    GM: the nilpotent pseudo-Hermitian family g(m)
    HK_ABELIAN: quaternionic triples with abelian holonomy
    HK_NONABELIAN: quaternionic triples with non-abelian holonomy
    G_S: g_S and g_{J,S} of an invariant quartic
    EXTRINSIC: extrinsic triples over sl(2,R) and su(2)
    """
    OSC = (_osc, 'osc')
    CAHEN_WALLACH = (_cahen_wallach, 'cw')
    INDEX2_H1 = (_index2_h1, 'index2_h1')
    NILPOTENT = (_nilpotent, 'nilpotent')
    PSEUDO_HERMITIAN = (_pseudo_hermitian, 'pseudo_hermitian')
    PARA_HERMITIAN = (_para_hermitian, 'para_hermitian')
    GM = (_gm, 'gm')
    HK_ABELIAN = (_hk_abelian, 'hk_abelian')
    HK_NONABELIAN = (_hk_nonabelian, 'hk_nonabelian')
    G_S = (_g_s, 'g_s')
    EXTRINSIC = (_extrinsic, 'extrinsic')

    # Need this to make the functions callable
    def __call__(self, *args, **kwargs):
        return self.value[0](*args, **kwargs)

    @property
    def tag(self) -> str:
        return self.value[1]

    @classmethod
    def from_tag(cls, tag: str) -> 'Family':
        for family in cls:
            if family.tag == tag:
                return family
        raise catalog_exceptions.UnknownFamilyError(
            tag, [family.tag for family in cls])


def family_tags():
    return [family.tag for family in Family]


def construct(params: FamilyParams) -> CatalogEntry:
    """
    Builds the catalog entry named by params

    Raises
    ------
        UnknownFamilyError: unknown tag
        InvalidFamilyParameterError: unknown parameter names or values
        the family rejects
    """
    family = Family.from_tag(params.family)
    try:
        entry = family(*params.args, **params.params)
    except (TypeError, ValueError) as error:
        raise catalog_exceptions.InvalidFamilyParameterError(
            params.family, str(error))
    metriclie_log.info("constructed {}".format(entry.name))
    return entry
