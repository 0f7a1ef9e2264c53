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
Indecomposable nilpotent metric Lie algebras of dimension at most 9
without simple ideals, each given by its data (l, a, alpha, gamma).
Indices in the data are 0-based: sigma^{14} (x) e_1 is ((0, 3), 0).
"""
import logging

from typing import Callable, Dict, List, NamedTuple, Tuple

from metriclie.algebra.liealg import LieAlgebra
from metriclie.catalog.basic import (CatalogEntry, abelian,
                                     alpha_from_terms, entry_from_witness,
                                     g41, heisenberg, heisenberg_plus_line,
                                     label, sigma)
from metriclie.cohomology.cochain import Cochain
from metriclie.cohomology.qcohom import OrthogonalModule, QuadCocycle
from metriclie.exceptions import catalog_exceptions
from metriclie.extensions.quadext import standard_model
from metriclie.utils.exactlin import SymForm

metriclie_log = logging.getLogger('metriclie')


class NilpotentData(NamedTuple):
    """
    One item of the list

    Attributes
    ----------
    algebra : callable
        returns l
    signatures : tuple
        the admissible (p, q) of a = R^{p,q}
    alpha : tuple
        ((i, j), k) terms of alpha = sum sigma^{ij} (x) e_k
    gammas : tuple
        the admissible gamma, each a tuple of (indices, c) terms
    """
    algebra: Callable[[], LieAlgebra]
    signatures: Tuple[Tuple[int, int], ...]
    alpha: Tuple
    gammas: Tuple


_LINE = ((0, 1), (1, 0))

NILPOTENT_DATA: Dict[str, NilpotentData] = {
    '1': NilpotentData(g41, _LINE, (((0, 3), 0),),
                       ((), (((1, 2, 3), 1),), (((0, 2, 3), 1),),
                        (((0, 2, 3), -1),))),
    '2': NilpotentData(heisenberg_plus_line, _LINE, (((0, 2), 0),),
                       ((((1, 2, 3), 1),),)),
    '3': NilpotentData(lambda: abelian(4), _LINE, (((0, 2), 0),),
                       ((((1, 2, 3), 1),),)),
    '4a': NilpotentData(heisenberg, _LINE, (((0, 2), 0),), ((),)),
    '4b': NilpotentData(heisenberg, ((0, 2), (2, 0), (1, 1)),
                        (((0, 2), 0), ((1, 2), 1)), ((),)),
    '5a': NilpotentData(lambda: abelian(3), ((0, 0),), (),
                        ((((0, 1, 2), 1),),)),
    '5b': NilpotentData(lambda: abelian(3), ((0, 2), (2, 0), (1, 1)),
                        (((0, 1), 0), ((0, 2), 1)), ((),)),
    '5c': NilpotentData(lambda: abelian(3),
                        ((0, 3), (2, 1), (1, 2), (3, 0)),
                        (((0, 1), 0), ((0, 2), 1), ((1, 2), 2)), ((),)),
    '6': NilpotentData(lambda: abelian(2), _LINE, (((0, 1), 0),), ((),)),
}


def nilpotent_entries() -> List[str]:
    return list(NILPOTENT_DATA)


def nilpotent_variants(entry: str) -> List[Tuple[Tuple[int, int], int]]:
    """ all (signature of a, gamma index) pairs of an entry """
    data = _data(entry)
    return [(s, k) for s in data.signatures for k in range(len(data.gammas))]


def _data(entry: str) -> NilpotentData:
    try:
        return NILPOTENT_DATA[str(entry)]
    except KeyError:
        raise catalog_exceptions.InvalidFamilyParameterError(
            'nilpotent', 'unknown entry {}, the entries are {}'
            ''.format(entry, ', '.join(NILPOTENT_DATA)))


def nilpotent_le9(entry: str, signature: Tuple[int, int] = None,
                  gamma: int = 0) -> CatalogEntry:
    """
    Builds d_{alpha,gamma}(l, a) for one item of the list

    Parameters
    ----------
        entry: str
            '1', '2', '3', '4a', '4b', '5a', '5b', '5c' or '6'
        signature: (p, q)
            a = R^{p,q} with p negative directions, default the first
            admissible one
        gamma: int
            index into the admissible gammas (entry 1 has four)

    Returns
    -------
        CatalogEntry

    Raises
    ------
        InvalidFamilyParameterError: unknown entry, signature or gamma
    """
    data = _data(entry)
    signature = tuple(signature) if signature is not None else \
        data.signatures[0]
    if signature not in data.signatures:
        raise catalog_exceptions.InvalidFamilyParameterError(
            'nilpotent', 'entry {} admits a = R^{{p,q}} for (p, q) in {}, '
            'got {}'.format(entry, list(data.signatures), signature))
    if not 0 <= gamma < len(data.gammas):
        raise catalog_exceptions.InvalidFamilyParameterError(
            'nilpotent', 'entry {} has {} choices of gamma, got index {}'
            ''.format(entry, len(data.gammas), gamma))
    L = data.algebra()
    p, q = signature
    module = OrthogonalModule.trivial(L, SymForm.standard(p, q))
    alpha = alpha_from_terms(L.dim, module.dim, data.alpha)
    terms = data.gammas[gamma]
    gamma_cochain = sigma(L.dim, *terms) if terms else \
        Cochain.zero(L.dim, 3, scalar=True)
    z = QuadCocycle(alpha, gamma_cochain, module)
    name = label('nilpotent', entry, signature, gamma)
    return entry_from_witness(standard_model(z, name=name), name,
                              {'entry': str(entry), 'signature': signature,
                               'gamma': gamma}, cocycle=z)
