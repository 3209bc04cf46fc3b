#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains generators for the explicit crossing-critical families and a few standard graphs
"""

from __future__ import print_function, division, absolute_import

import logging
from collections import namedtuple, OrderedDict

import networkx as nx

from crosscrit.core import consts, exceptions, graph

logger = logging.getLogger(consts.LOGGER_NAME)

FamilySpec = namedtuple('FamilySpec', ['family', 'k', 'c', 'i'])
FamilySpec.__new__.__defaults__ = (None, None)

K33_LABELS = (('a1', 'a2', 'a3'), ('b1', 'b2', 'b3'))


def wedge_labels(k, i):
    """
    Returns the labels of the four vertices of the i-th wedge of ccg13k. Consecutive wedges share their chain vertices
    :param int k: number of wedges
    :param int i: wedge index, starting at 1
    :return: labels of w1, w2, w3 and w4 of the wedge
    :rtype: tuple(str, str, str, str)
    """

    w2 = 'u5' if i == 1 else 'w3^{}'.format(i - 1)
    w3 = 'v5' if i == k else 'w3^{}'.format(i)

    return 'w1^{}'.format(i), w2, w3, 'w4^{}'.format(i)


def chain_label(k, j):
    """
    Returns the label of the j-th vertex of the chain u5 = W0, W1, ..., Wk = v5 shared by the wedges
    """

    if j == 0:
        return 'u5'
    if j == k:
        return 'v5'

    return 'w3^{}'.format(j)


def generate_ccg13k(k):
    """
    Generates the 13-crossing-critical graph with k wedges attached to the bowtie
    :param int k: number of wedges (>= 2)
    :return: WeightedMultigraph
    """

    if k < consts.CCG13_MIN_K:
        raise exceptions.FamilyParameterError(
            'ccg13k needs k >= {} (one wedge can be drawn with 12 crossings), {} given'.format(consts.CCG13_MIN_K, k))

    builder = graph.GraphBuilder()
    for label in ['x'] + ['u{}'.format(j) for j in range(1, 6)] + ['v{}'.format(j) for j in range(1, 6)]:
        builder.vertex(label)

    for side in ('u', 'v'):
        cycle = ['x'] + ['{}{}'.format(side, j) for j in range(1, 6)] + ['x']
        for (a, b), thickness in zip(zip(cycle, cycle[1:]), consts.BOWTIE_CYCLE_THICKNESS):
            builder.connect(a, b, thickness)
    for a, b, thickness in consts.BOWTIE_CROSS_EDGES:
        builder.connect(a, b, thickness)

    for i in range(1, k + 1):
        w1, w2, w3, w4 = wedge_labels(k, i)
        builder.connect('x', w1)
        builder.connect('x', w4)
        builder.connect(w1, w4)
        builder.connect(w2, w3)
        builder.connect(w1, w2, 2)
        builder.connect(w3, w4, 2)

    return builder.build()


def family_for_degree(d):
    """
    Returns the number of wedges needed to reach maximum degree at least d
    :param int d: target degree
    :return: int
    """

    return max(consts.CCG13_MIN_K, d // 2)


def mirror_map(k):
    """
    Returns the label permutation of the automorphism of ccg13k that exchanges both bowtie cycles
    :param int k: number of wedges
    :return: dict(str, str)
    """

    mapping = OrderedDict([('x', 'x')])
    for j in range(1, 6):
        mapping['u{}'.format(j)] = 'v{}'.format(j)
        mapping['v{}'.format(j)] = 'u{}'.format(j)
    for j in range(1, k):
        mapping[chain_label(k, j)] = chain_label(k, k - j)
    for i in range(1, k + 1):
        mapping['w1^{}'.format(i)] = 'w4^{}'.format(k + 1 - i)
        mapping['w4^{}'.format(i)] = 'w1^{}'.format(k + 1 - i)

    return mapping


def is_label_automorphism(g, mapping):
    """
    Returns whether the given label map is a thickness preserving automorphism of the graph
    :param WeightedMultigraph g: graph
    :param dict mapping: label to label map
    :return: bool
    """

    labels = [label for label in g.labels().values()]
    if sorted(mapping.keys()) != sorted(labels) or sorted(mapping.values()) != sorted(labels):
        return False
    for edge in g.edges:
        image = g.edge_between(
            g.vertex_by_label(mapping[g.label(edge.u)]), g.vertex_by_label(mapping[g.label(edge.v)]))
        if image is None or image.thickness != edge.thickness:
            return False

    return True


def check_observations(g, k):
    """
    Checks the basic structural facts of ccg13k: degree of x, 3-connectivity, non-planarity and mirror symmetry
    :param WeightedMultigraph g: graph generated by generate_ccg13k
    :param int k: number of wedges
    :return: report with one entry per check and an overall ok flag
    :rtype: dict
    """

    from crosscrit.core.drawing import planarize

    degree_x = graph.degree(g, g.vertex_by_label('x'))
    report = OrderedDict()
    report['degree_x'] = degree_x
    report['expected_degree_x'] = 2 * k + 16
    report['three_connected'] = graph.is_k_connected(g, 3)
    report['non_planar'] = not planarize.is_planar(g)
    report['mirror_automorphism'] = is_label_automorphism(g, mirror_map(k))
    report['ok'] = bool(
        degree_x == 2 * k + 16 and report['three_connected'] and report['non_planar'] and
        report['mirror_automorphism'])

    return report


def expansion_4to3(g, s, t1, t2, t3):
    """
    Replaces the vertex s, incident with the 4-thick edges st1, st2 and the simple edge st3, with the three vertex
    gadget s1, s2, s3: 4-thick s1t1 and s2t2, 3-thick s1s2 and simple s3t1, s3t2 and s3t3.
    s1 keeps the id of s and the thick edges keep their ids.

    :param WeightedMultigraph g: graph
    :param int s: vertex to expand
    :param int t1: end of the first 4-thick edge
    :param int t2: end of the second 4-thick edge
    :param int t3: end of the simple edge
    :return: expanded graph
    :rtype: WeightedMultigraph
    """

    incident = g.incident_edges(s)
    profile = graph.incidence_profile(g, s).thicknesses
    main, bridge = consts.EXPANSION_MAIN_THICKNESS, consts.EXPANSION_BRIDGE_THICKNESS
    if profile != (1, main, main):
        raise exceptions.ExpansionProfileError(
            'Vertex {} has incidence profile {}; a 4-to-3 expansion needs (1, 4, 4)'.format(g.label(s), profile))
    edge1, edge2, edge3 = g.edge_between(s, t1), g.edge_between(s, t2), g.edge_between(s, t3)
    if None in (edge1, edge2, edge3) or edge1.thickness != main or edge2.thickness != main or edge3.thickness != 1:
        raise exceptions.ExpansionProfileError(
            'Vertices {}, {}, {} do not match the (4, 4, 1) incidence of {}'.format(t1, t2, t3, s))

    label = g.label(s)
    builder = graph.GraphBuilder(g)
    for edge in incident:
        builder.remove_edge(edge.id)
    s2 = builder.add_vertex('{}^2'.format(label) if label is not None else None)
    s3 = builder.add_vertex('{}^3'.format(label) if label is not None else None)
    builder.add_edge(edge1.u, edge1.v, main, edge_id=edge1.id)
    builder.add_edge(t2 if edge2.u == t2 else s2, s2 if edge2.u == t2 else t2, main, edge_id=edge2.id)
    builder.add_edge(s, s2, bridge)
    builder.add_edge(s3, t1)
    builder.add_edge(s3, t2)
    builder.add_edge(t3 if edge3.u == t3 else s3, s3 if edge3.u == t3 else t3, 1, edge_id=edge3.id)

    expanded = builder.build()
    if label is not None:
        vertices = [(v, '{}^1'.format(label) if v == s else lbl) for v, lbl in expanded.labels().items()]
        expanded = graph.WeightedMultigraph(vertices, expanded.edges)

    return expanded


def generate_ccgi13k(k):
    """
    Generates ccg13k with the 4-to-3 expansion applied at v3 and then at u3
    :param int k: number of wedges
    :return: WeightedMultigraph
    """

    g = generate_ccg13k(k)
    by_label = g.vertex_by_label
    g = expansion_4to3(g, by_label('v3'), by_label('v2'), by_label('v4'), by_label('u2'))
    by_label = g.vertex_by_label
    g = expansion_4to3(g, by_label('u3'), by_label('u2'), by_label('u4'), by_label('v2'))

    return g


def generate_G_c_d(c, d):
    """
    Generates a c-crossing-critical graph with maximum degree at least d by zipping copies of K3,3 onto ccgi13k
    :param int c: crossing number (>= 13)
    :param int d: target degree
    :return: WeightedMultigraph
    """

    if c < consts.CCG13_CROSSINGS:
        raise exceptions.FamilyParameterError('G(c, d) needs c >= 13, {} given'.format(c))

    return generate_G_c_d_i(c, d, 1)


def generate_G_c_d_i(c, d, i):
    """
    Generates the zip chain of i copies of ccgi13k followed by c - 13i copies of K3,3.
    Each block is zipped at the free degree-3 vertex left by the previous block.

    :param int c: crossing number
    :param int d: target degree
    :param int i: number of high degree blocks
    :return: WeightedMultigraph
    """

    if i < 1 or consts.CCG13_CROSSINGS * i > c:
        raise exceptions.FamilyParameterError('G(c, d, i) needs 1 <= i <= c / 13, got c={} and i={}'.format(c, i))

    k = family_for_degree(d)
    base = generate_ccgi13k(k)
    result = base
    free_end = base.vertex_by_label('v3^3')
    for block in range(2, i + 1):
        prefix = 'g{}_'.format(block)
        result = graph.zip_product(result, free_end, base, base.vertex_by_label('u3^3'), prefix=prefix)
        free_end = result.vertex_by_label('{}v3^3'.format(prefix))
        logger.debug('Zipped ccgi13 block {} into G({}, {}, {})'.format(block, c, d, i))

    k33 = standard_graph('k33')
    for block in range(1, c - consts.CCG13_CROSSINGS * i + 1):
        prefix = 'k{}_'.format(block)
        result = graph.zip_product(result, free_end, k33, k33.vertex_by_label('a1'), prefix=prefix)
        free_end = result.vertex_by_label('{}a2'.format(prefix))

    return result


def generate(spec):
    """
    Generates the family member described by the given FamilySpec
    :param FamilySpec spec: family description
    :return: WeightedMultigraph
    """

    if spec.family == consts.CCG13:
        return generate_ccg13k(spec.k)
    elif spec.family == consts.CCGI13:
        return generate_ccgi13k(spec.k)
    elif spec.family == consts.GCD:
        return generate_G_c_d(spec.c, spec.k)
    elif spec.family == consts.GCDI:
        return generate_G_c_d_i(spec.c, spec.k, spec.i)

    raise exceptions.FamilyParameterError('Unknown family: {}'.format(spec.family))


# ======================================================================================================================
# STANDARD GRAPHS
# ======================================================================================================================

def complete_bipartite_33():
    builder = graph.GraphBuilder()
    for label in K33_LABELS[0] + K33_LABELS[1]:
        builder.vertex(label)
    for a in K33_LABELS[0]:
        for b in K33_LABELS[1]:
            builder.connect(a, b)

    return builder.build()


def standard_graph(name):
    """
    Returns one of the small graphs used as solver anchors
    :param str name: one of k4, k5, k6, k33, petersen, c3c3, k33zip
    :return: WeightedMultigraph
    """

    name = name.lower()
    if name in ('k4', 'k5', 'k6'):
        return graph.from_networkx(nx.complete_graph(int(name[1])))
    if name == 'k33':
        return complete_bipartite_33()
    if name == 'petersen':
        return graph.from_networkx(nx.petersen_graph())
    if name == 'c3c3':
        product = nx.cartesian_product(nx.cycle_graph(3), nx.cycle_graph(3))
        return graph.from_networkx(nx.relabel_nodes(product, lambda node: 'c{}{}'.format(*node)))
    if name == 'k33zip':
        k33 = complete_bipartite_33()
        return graph.zip_product(k33, k33.vertex_by_label('a1'), k33, k33.vertex_by_label('a1'), prefix='z_')

    raise exceptions.FamilyParameterError('Unknown standard graph: {}'.format(name))
