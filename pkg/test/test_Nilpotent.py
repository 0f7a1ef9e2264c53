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

import pytest

from metriclie.algebra import liealg, metric
from metriclie.catalog import basic, nilpotent
from metriclie.cohomology import balanced, qcohom
from metriclie.exceptions import catalog_exceptions
from metriclie.extensions import quadext

dimensions = {'1': 9, '2': 9, '3': 9, '4a': 7, '4b': 8, '5a': 6, '5b': 8,
              '5c': 9, '6': 5}

all_variants = [(entry, signature, gamma)
                for entry in nilpotent.nilpotent_entries()
                for signature, gamma in nilpotent.nilpotent_variants(entry)]


class TestList:

    def test_entries(self):
        assert nilpotent.nilpotent_entries() == list(dimensions)

    @pytest.mark.parametrize('entry, count', [('1', 8), ('2', 2), ('4b', 3),
                                              ('5a', 1), ('5c', 4)])
    def test_variants(self, entry, count):
        assert len(nilpotent.nilpotent_variants(entry)) == count

    @pytest.mark.parametrize('entry, signature, gamma', all_variants)
    def test_entry(self, entry, signature, gamma):
        """ every item is a nilpotent metric Lie algebra """
        built = nilpotent.nilpotent_le9(entry, signature, gamma)
        n = dimensions[entry]
        assert built.g.dim == n
        assert basic.verify_entry(built)
        assert liealg.nilindex(built.g.alg) is not None
        p, q = signature
        dim_l = (n - p - q) // 2
        assert tuple(built.g.signature()) == (dim_l + p, dim_l + q, 0)

    @pytest.mark.parametrize('entry', ['1', '4a', '5b', '6'])
    def test_indecomposable(self, entry):
        built = nilpotent.nilpotent_le9(entry)
        assert not metric.decompose(built.g, seed=1).is_yes


class TestEntries:

    def test_name(self):
        built = nilpotent.nilpotent_le9('1', (0, 1), 2)
        assert built.name == 'nilpotent(1, [0, 1], 2)'
        assert built.params == {'entry': '1', 'signature': (0, 1),
                                'gamma': 2}

    def test_default_signature(self):
        built = nilpotent.nilpotent_le9('4b')
        assert built.params['signature'] == (0, 2)

    @pytest.mark.parametrize('entry, index', [('6', 3), ('5a', 2)])
    def test_nilindex(self, entry, index):
        assert liealg.nilindex(nilpotent.nilpotent_le9(entry).g.alg) == index

    def test_empty_module(self):
        built = nilpotent.nilpotent_le9('5a')
        assert built.witness.module.dim == 0
        assert built.witness.l.dim == 3
        assert built.witness.l.is_abelian()


class TestErrors:

    @pytest.mark.parametrize('entry, signature, gamma',
                             [('7', None, 0),
                              ('1', (1, 1), 0),
                              ('1', None, 4),
                              ('2', None, 1),
                              ('5a', (0, 1), 0),
                              ('6', None, -1)])
    def test_invalid(self, entry, signature, gamma):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            nilpotent.nilpotent_le9(entry, signature, gamma)


class TestCanonicalExtension:

    @pytest.mark.parametrize('entry, signature, gamma', all_variants)
    def test_round_trip(self, entry, signature, gamma):
        """ the canonical extension gives back the class of the item """
        built = nilpotent.nilpotent_le9(entry, signature, gamma)
        z = built.extras['cocycle']
        w0 = built.witness
        assert balanced.ri_criterion(z)
        w = quadext.canonical_extension(w0.g)
        assert w.ri == w0.ri
        S = w.p_map * w0.p_map.T
        U = w0.i_map.T * w.i_map
        extracted = quadext.extract_cocycle(w, check_class=False)
        pulled = qcohom.pullback_cocycle(extracted, S, U, z.module)
        assert qcohom.equivalent(z, pulled).is_yes
