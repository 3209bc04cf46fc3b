#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for the crossing-critical family generators
"""

import pytest

from crosscrit.core import consts, exceptions, families, graph


@pytest.mark.parametrize('k', [2, 3, 4, 7])
def test_ccg13_counts(k):
    g = families.generate_ccg13k(k)
    assert g.num_vertices == 10 + 3 * k
    assert g.num_edges == 16 + 6 * k
    assert g.multiplicity == 56 + 8 * k
    assert graph.degree(g, g.vertex_by_label('x')) == 2 * k + 16


@pytest.mark.parametrize('k', [2, 3, 5])
def test_ccg13_observations(k):
    report = families.check_observations(families.generate_ccg13k(k), k)
    assert report['ok']
    assert report['three_connected']
    assert report['non_planar']
    assert report['mirror_automorphism']


def test_ccg13_bowtie_thicknesses(ccg13_2):
    names = dict((ccg13_2.edge_name(edge.id), edge.thickness) for edge in ccg13_2.edges)
    assert names['xu1'] == 7
    assert names['u1u2'] == 5
    assert names['u5x'] == 1
    assert names['u1v4'] == 2
    assert names['u2v3'] == 1


def test_ccg13_wedges_share_chain_vertices():
    g = families.generate_ccg13k(3)
    assert families.wedge_labels(3, 1) == ('w1^1', 'u5', 'w3^1', 'w4^1')
    assert families.wedge_labels(3, 3) == ('w1^3', 'w3^2', 'v5', 'w4^3')
    assert g.edge_by_labels('w1^2', 'w3^1').thickness == 2
    assert g.edge_by_labels('w3^2', 'w4^2').thickness == 2
    assert g.edge_by_labels('w3^1', 'w3^2').thickness == 1


@pytest.mark.parametrize('k', [1, 0, -3])
def test_ccg13_needs_two_wedges(k):
    with pytest.raises(exceptions.FamilyParameterError):
        families.generate_ccg13k(k)


def test_mirror_map_is_an_involution():
    mapping = families.mirror_map(4)
    assert all(mapping[mapping[label]] == label for label in mapping)
    assert mapping['w1^1'] == 'w4^4'
    assert mapping['w3^1'] == 'w3^3'
    assert mapping['u2'] == 'v2'


def test_family_for_degree():
    assert families.family_for_degree(1) == consts.CCG13_MIN_K
    assert families.family_for_degree(6) == 3
    assert families.family_for_degree(11) == 5


@pytest.mark.parametrize('k', [2, 3])
def test_ccgi13_expansions(k):
    g = families.generate_ccgi13k(k)
    assert g.num_vertices == 10 + 3 * k + 4
    for side in ('u', 'v'):
        assert g.find_vertex('{}3'.format(side)) is None
        tip = g.vertex_by_label('{}3^3'.format(side))
        assert graph.degree(g, tip) == 3
        assert graph.incidence_profile(g, g.vertex_by_label('{}3^1'.format(side))).thicknesses == (3, 4)
    assert graph.is_k_connected(g, 2)


def test_expansion_needs_a_441_profile(ccg13_2):
    by_label = ccg13_2.vertex_by_label
    with pytest.raises(exceptions.ExpansionProfileError):
        families.expansion_4to3(ccg13_2, by_label('x'), by_label('u1'), by_label('v1'), by_label('u5'))
    with pytest.raises(exceptions.ExpansionProfileError):
        families.expansion_4to3(ccg13_2, by_label('v3'), by_label('v2'), by_label('u2'), by_label('v4'))


def test_expansion_keeps_thick_edge_ids(ccg13_2):
    by_label = ccg13_2.vertex_by_label
    thick = ccg13_2.edge_by_labels('v2', 'v3')
    expanded = families.expansion_4to3(ccg13_2, by_label('v3'), by_label('v2'), by_label('v4'), by_label('u2'))
    assert expanded.edge(thick.id).thickness == 4
    assert expanded.label(by_label('v3')) == 'v3^1'
    assert expanded.multiplicity == ccg13_2.multiplicity + 5


def test_gcd_adds_one_k33_per_crossing():
    g = families.generate(families.FamilySpec(consts.GCD, 6, 14))
    assert g.num_vertices == (10 + 3 * 3 + 4 - 1) + (6 - 1)
    assert graph.degree(g, g.vertex_by_label('x')) >= 6
    assert g.find_vertex('k1_b1') is not None


def test_gcdi_chains_expanded_blocks():
    g = families.generate(families.FamilySpec(consts.GCDI, 4, 27, 2))
    assert g.find_vertex('g2_x') is not None
    assert g.find_vertex('k1_a2') is not None
    assert graph.is_k_connected(g, 1)


@pytest.mark.parametrize('spec', [
    families.FamilySpec(consts.GCD, 4, 12),
    families.FamilySpec(consts.GCDI, 4, 20, 2),
    families.FamilySpec(consts.GCDI, 4, 20, 0),
    families.FamilySpec('nope', 2),
])
def test_invalid_family_parameters(spec):
    with pytest.raises(exceptions.FamilyParameterError):
        families.generate(spec)


def test_unknown_standard_graph():
    with pytest.raises(exceptions.FamilyParameterError):
        families.standard_graph('k7')
