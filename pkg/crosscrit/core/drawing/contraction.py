#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the wedge contraction rewrite: a drawing of ccg13k is turned into a drawing of ccg13 with fewer
wedges and no additional crossings
"""

from __future__ import print_function, division, absolute_import

import logging
from collections import OrderedDict, namedtuple

import networkx as nx

from crosscrit.core import consts, exceptions, families
from crosscrit.core.drawing import drawing, planarize

logger = logging.getLogger(consts.LOGGER_NAME)

ContractionPlan = namedtuple('ContractionPlan', ['first', 'size', 'edge_path', 'chain_path'])

# Rotation cases at a shared chain vertex
ADJACENT_FORWARD = 1
ADJACENT_BACKWARD = 2
OPPOSITE = 3


def _neighbour_labels(d, vertex):
    g = d.graph
    labels = list()
    for end in d.rotation[drawing.vertex_key(vertex)]:
        edge = g.edge(end.edge)
        labels.append(g.label(edge.v if edge.u == vertex else edge.u))

    return labels


def rotation_case(d, i):
    """
    Returns the rotation case at the chain vertex shared by wedges i and i + 1. Rotations are compared up to reversal
    :param Drawing d: drawing of ccg13k
    :param int i: wedge index, 1 <= i <= k - 1
    :return: 1 when w4^i, w1^(i+1) are consecutive and w1^(i+1) precedes the next chain vertex, 2 when they are
        consecutive otherwise and 3 when they are opposite
    :rtype: int
    """

    k = _wedge_count(d.graph)
    if not 1 <= i <= k - 1:
        raise exceptions.ContractionError('Wedge index must be between 1 and {}, got {}'.format(k - 1, i))

    shared = d.graph.vertex_by_label(families.chain_label(k, i))
    order = _neighbour_labels(d, shared)
    w4 = 'w4^{}'.format(i)
    w1_next = 'w1^{}'.format(i + 1)
    chain_next = families.chain_label(k, i + 1)
    start = order.index(w4)
    order = order[start:] + order[:start]
    if order[2] == w1_next:
        return OPPOSITE
    if order[3] == w1_next:
        order = [order[0]] + list(reversed(order[1:]))

    return ADJACENT_FORWARD if order[2] == chain_next else ADJACENT_BACKWARD


def _wedge_count(g):
    k = 0
    while g.find_vertex('w1^{}'.format(k + 1)) is not None:
        k += 1
    if k < 1 or g.find_vertex('x') is None:
        raise exceptions.ContractionError('Drawing is not a drawing of ccg13k')

    return k


def plan_contraction(d, i):
    """
    Chooses the wedges merged by the contraction at wedge i from the rotations at the shared chain vertices
    :param Drawing d: drawing of ccg13k
    :param int i: wedge index
    :return: ContractionPlan
    """

    k = _wedge_count(d.graph)
    first, size = i, 2
    if rotation_case(d, i) == OPPOSITE:
        neighbour = i + 1 if i + 1 <= k - 1 else i - 1
        if neighbour < 1:
            raise exceptions.ContractionError('No wedge can be merged with wedge {} when k = {}'.format(i, k))
        if rotation_case(d, neighbour) == OPPOSITE:
            first, size = min(i, neighbour), 3
        else:
            first = neighbour

    if k - (size - 1) < consts.CCG13_MIN_K:
        raise exceptions.ContractionError(
            'Merging {} wedges of ccg13_{} would leave fewer than {} wedges'.format(size, k, consts.CCG13_MIN_K))

    chain = [families.chain_label(k, j) for j in range(first - 1, first + size)]
    w1 = ['w1^{}'.format(j) for j in range(first, first + size)]
    w4 = ['w4^{}'.format(j) for j in range(first, first + size)]
    if size == 2:
        edge_path = [w1[0], w4[0], chain[1], w1[1], w4[1]]
        chain_path = [chain[0], chain[1], chain[2]]
    else:
        edge_path = [w1[0], w4[0], chain[1], chain[2], w1[2], w4[2]]
        chain_path = [chain[0], chain[1], w1[1], w4[1], chain[2], chain[3]]

    return ContractionPlan(first, size, edge_path, chain_path)


def _relabel_map(k, plan):
    """
    Returns the map from surviving labels of ccg13k to labels of the contracted graph
    """

    shift = plan.size - 1
    new_k = k - shift
    last = plan.first + plan.size - 1
    mapping = OrderedDict()
    for label in ['x'] + ['u{}'.format(j) for j in range(1, 6)] + ['v{}'.format(j) for j in range(1, 6)]:
        mapping[label] = label
    for j in range(1, k):
        if j < plan.first:
            mapping[families.chain_label(k, j)] = families.chain_label(new_k, j)
        elif j >= last:
            mapping[families.chain_label(k, j)] = families.chain_label(new_k, j - shift)
    for j in range(1, k + 1):
        if j < plan.first:
            mapping['w1^{}'.format(j)] = 'w1^{}'.format(j)
            mapping['w4^{}'.format(j)] = 'w4^{}'.format(j)
        elif j > last:
            mapping['w1^{}'.format(j)] = 'w1^{}'.format(j - shift)
            mapping['w4^{}'.format(j)] = 'w4^{}'.format(j - shift)
    mapping['w1^{}'.format(plan.first)] = 'w1^{}'.format(plan.first)
    mapping['w4^{}'.format(last)] = 'w4^{}'.format(plan.first)

    return mapping


def _oriented_names(g, orders, label_a, label_b):
    edge = g.edge_by_labels(label_a, label_b)
    names = ['c{}'.format(c) for c in orders[edge.id]]
    if g.label(edge.u) != label_a:
        names.reverse()

    return edge.id, names


def _shortcut_loops(names, dropped):
    """
    Removes the closed loops of a curve that crosses itself. The crossings on every removed loop are added to dropped
    """

    kept = list()
    for name in names:
        if name in dropped:
            continue
        if name in kept:
            index = kept.index(name)
            dropped.update(kept[index:])
            del kept[index:]
        else:
            kept.append(name)

    return kept


def wedge_contraction(d, i):
    """
    Contracts wedges of a drawing of ccg13k starting at wedge i. Consecutive wedges are merged into one by drawing
    the new w1w4 edge and the new chain edge along paths of the old drawing; every crossing of the result already
    existed in the input drawing
    :param Drawing d: valid drawing of ccg13k
    :param int i: wedge index, 1 <= i <= k - 1
    :return: drawing of ccg13 with one or two fewer wedges
    :rtype: Drawing
    """

    verification = drawing.verify_drawing(d)
    if not verification:
        raise exceptions.InvalidDrawingError(verification.reason)

    g = d.graph
    k = _wedge_count(g)
    plan = plan_contraction(d, i)
    new_k = k - (plan.size - 1)
    mapping = _relabel_map(k, plan)
    logger.debug('Contracting wedges {}..{} of ccg13_{}'.format(plan.first, plan.first + plan.size - 1, k))

    orders = d.edge_orders()
    path_edges = dict()
    new_routes = OrderedDict()
    for key, path in (('edge', plan.edge_path), ('chain', plan.chain_path)):
        names = list()
        for label_a, label_b in zip(path, path[1:]):
            edge_id, oriented = _oriented_names(g, orders, label_a, label_b)
            path_edges[edge_id] = key
            names.extend(oriented)
        new_routes[key] = names

    kept_edges = [
        edge for edge in g.edges
        if edge.id not in path_edges and g.label(edge.u) in mapping and g.label(edge.v) in mapping]
    alive = set(edge.id for edge in kept_edges) | set(path_edges)

    dropped = set()
    for crossing_id, crossing in enumerate(d.crossings):
        if crossing.a not in alive or crossing.b not in alive:
            dropped.add('c{}'.format(crossing_id))
    for key in new_routes:
        new_routes[key] = _shortcut_loops(new_routes[key], dropped)

    contracted = nx.Graph()
    label_routes = OrderedDict()
    for edge in kept_edges:
        label_u, label_v = mapping[g.label(edge.u)], mapping[g.label(edge.v)]
        contracted.add_edge(label_u, label_v, thickness=edge.thickness)
        label_routes[(label_u, label_v)] = ['c{}'.format(c) for c in orders[edge.id] if 'c{}'.format(c) not in dropped]
    new_edge = (mapping[plan.edge_path[0]], mapping[plan.edge_path[-1]])
    new_chain = (mapping[plan.chain_path[0]], mapping[plan.chain_path[-1]])
    for pair, key in ((new_edge, 'edge'), (new_chain, 'chain')):
        contracted.add_edge(pair[0], pair[1], thickness=1)
        label_routes[pair] = [name for name in new_routes[key] if name not in dropped]
    for node in contracted.nodes():
        contracted.nodes[node]['label'] = node

    target = families.generate_ccg13k(new_k)
    target_skeleton = target.skeleton()
    if not nx.is_isomorphic(
            contracted, target_skeleton,
            node_match=lambda a, b: a['label'] == b['label'],
            edge_match=lambda a, b: a['thickness'] == b['thickness']):
        raise exceptions.ContractionError('Contracted graph is not isomorphic to ccg13_{}'.format(new_k))

    try:
        result = planarize.build_drawing(target, planarize.routes_by_labels(target, label_routes))
    except exceptions.InvalidDrawingError as exc:
        raise exceptions.ContractionError('Contracted configuration cannot be drawn: {}'.format(exc.diagnostic))

    return result
