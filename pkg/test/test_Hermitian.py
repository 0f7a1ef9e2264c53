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
from metriclie.catalog import basic, hermitian
from metriclie.exceptions import catalog_exceptions

# case, p, r, c
compact_and_split = [('3', 0, 0, 0), ('3', 1, 0, 1), ('3', 1, 1, 0),
                     ('3', 2, 1, 2), ('4', 0, 0, 1), ('4', 1, 0, 0),
                     ('4', 1, 1, 1)]


class TestPseudoHermitian:

    @pytest.mark.parametrize('case, signature', [('1a', (2, 3, 0)),
                                                 ('1b', (3, 2, 0))])
    def test_line(self, case, signature):
        entry = hermitian.pseudo_hermitian(case)
        assert entry.g.dim == 5
        assert tuple(entry.g.signature()) == signature
        assert basic.verify_entry(entry)
        assert entry.phi.preset == 'complex'
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            (2, 2, 0)

    def test_heisenberg(self):
        entry = hermitian.pseudo_hermitian('2')
        assert entry.g.dim == 8
        assert basic.verify_entry(entry)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            (2, 4, 0)
        assert hermitian.check_radical_nilpotent(entry)

    @pytest.mark.parametrize('case, p, r, c', compact_and_split)
    def test_semisimple_base(self, case, p, r, c):
        """ g_- has signature (2, 2q) with q = 1 + p """
        entry = hermitian.pseudo_hermitian(case, p, r, c)
        assert entry.g.dim == 6 + 4 * (p - r) + 3 * r
        assert basic.verify_entry(entry)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            (2, 2 + 2 * p, 0)
        assert hermitian.check_radical_nilpotent(entry)

    def test_name(self):
        entry = hermitian.pseudo_hermitian('3', 1, 0, 2)
        assert entry.name == 'pseudo_hermitian(3, 1, 0, 2)'
        assert entry.params == {'case': '3', 'p': 1, 'r': 0, 'c': 2}
        assert hermitian.pseudo_hermitian('1a').name == \
            'pseudo_hermitian(1a)'

    @pytest.mark.parametrize('case, p, r', [('5', 0, 0), ('3', 1, 2),
                                            ('4', -1, 0)])
    def test_invalid(self, case, p, r):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            hermitian.pseudo_hermitian(case, p, r)


class TestParaHermitian:

    @pytest.mark.parametrize('case, signature', [('1', (2, 3, 0)),
                                                 ('2', (3, 2, 0))])
    def test_line(self, case, signature):
        entry = hermitian.para_hermitian(case)
        assert entry.g.dim == 5
        assert tuple(entry.g.signature()) == signature
        assert basic.verify_entry(entry)
        assert entry.phi.preset == 'para_complex'

    @pytest.mark.parametrize('c', [0, 1, '-1/2'])
    def test_sl2(self, c):
        entry = hermitian.para_hermitian('3', c)
        assert entry.g.dim == 6
        assert basic.verify_entry(entry)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            (2, 2, 0)

    def test_invalid(self):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            hermitian.para_hermitian('4')


class TestGm:

    @pytest.mark.parametrize('m', [0, 1, 2, 3])
    def test_nilindex(self, m):
        entry = hermitian.gm_family(m)
        assert entry.g.dim == 3 * m + 2
        assert liealg.nilindex(entry.g.alg) == 2 * m + 1
        assert basic.verify_entry(entry)

    @pytest.mark.parametrize('m, signature', [(1, (2, 2, 0)),
                                              (2, (2, 4, 0))])
    def test_triple_signature(self, m, signature):
        entry = hermitian.gm_family(m)
        assert tuple(metric.triple_signature(entry.g, entry.theta)) == \
            signature
        assert basic.holonomy_is_abelian(entry)
        assert entry.witness is None

    def test_brackets(self):
        g = hermitian.gm_family(1).g.alg
        assert g.basis_names == ('E1', 'E2', 'F1', 'F2', 'Z1')
        assert list(g.bracket('E1', 'F1')) == [0, 0, 0, 0, 1]
        assert list(g.bracket('Z1', 'F1')) == [0, -1, 0, 0, 0]

    def test_invalid(self):
        with pytest.raises(catalog_exceptions.InvalidFamilyParameterError):
            hermitian.gm_family(-1)
