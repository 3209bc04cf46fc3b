#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the C-bridge decomposition of a graph with respect to a cycle split into Q paths
"""

from __future__ import print_function, division, absolute_import

import logging
from collections import OrderedDict, namedtuple

import networkx as nx

from crosscrit.core import consts, exceptions
from crosscrit.core.analyzer import plane

logger = logging.getLogger(consts.LOGGER_NAME)

CBridge = namedtuple('CBridge', ['nodes', 'edges', 'attachments', 'J'])
BridgeDecomposition = namedtuple('BridgeDecomposition', ['bridges', 'order', 'chain_lengths'])


def _as_graph(g):
    return g.graph if isinstance(g, plane.PlaneGraph) else g


def c_bridges(g, cycle, segments):
    """
    Returns the C-bridges of the graph: every edge off the cycle with both ends on it, and every component of the
    graph minus the cycle together with its edges to the cycle. J holds the 1-based indices of the Q paths a bridge
    touches
    :param nx.Graph g: graph or PlaneGraph
    :param list cycle: vertices of C in order
    :param list segments: Q1..Qn as vertex lists along C
    :return: list(CBridge)
    """

    g = _as_graph(g)
    cycle_set = set(cycle)
    cycle_edges = set(plane.path_edges(cycle, closed=True))
    for node in cycle:
        if node not in g:
            raise exceptions.AnalyzerError('Cycle vertex {!r} is not in the graph'.format(node))
    for edge in cycle_edges:
        if not g.has_edge(*tuple(edge)):
            raise exceptions.AnalyzerError('Cycle edge {} is not in the graph'.format(tuple(edge)))
    segment_of = dict()
    for index, segment in enumerate(segments):
        for node in segment:
            if node not in cycle_set:
                raise exceptions.AnalyzerError('Q{} vertex {!r} is not on the cycle'.format(index + 1, node))
            segment_of[node] = index + 1

    def _make(nodes, edges):
        attachments = sorted((node for node in nodes if node in cycle_set), key=cycle.index)
        touched = sorted(set(segment_of[node] for node in attachments if node in segment_of))
        return CBridge(tuple(sorted(nodes, key=str)), tuple(edges), tuple(attachments), tuple(touched))

    bridges = list()
    for a, b in g.edges():
        if a in cycle_set and b in cycle_set and frozenset((a, b)) not in cycle_edges:
            bridges.append(_make(set((a, b)), [(a, b)]))

    rest = g.subgraph(set(g.nodes()) - cycle_set)
    for component in nx.connected_components(rest):
        nodes = set(component)
        edges = list(rest.subgraph(component).edges())
        for node in component:
            for other in g.neighbors(node):
                if other in cycle_set:
                    nodes.add(other)
                    edges.append((node, other))
        bridges.append(_make(nodes, edges))

    return bridges


def precedes(first, second):
    """
    Returns whether first < second in the bridge order: min J(second) <= min J(first), max J(first) <= max J(second),
    and one inequality is strict or J(second) is a proper subset of J(first). Bridges touching no Q path are
    incomparable
    """

    if not first.J or not second.J:
        return False
    low = min(second.J) <= min(first.J)
    high = max(first.J) <= max(second.J)
    if not (low and high):
        return False
    strict = min(second.J) < min(first.J) or max(first.J) < max(second.J)

    return strict or set(second.J) < set(first.J)


def longest_chain_lengths(bridges):
    """
    Returns l(H) for every bridge: the number of bridges of the longest chain of the order whose maximum is H
    :param list(CBridge) bridges: bridges
    :return: list(int) aligned with bridges
    """

    order = nx.DiGraph()
    order.add_nodes_from(range(len(bridges)))
    for index_a, bridge_a in enumerate(bridges):
        for index_b, bridge_b in enumerate(bridges):
            if index_a != index_b and precedes(bridge_a, bridge_b):
                order.add_edge(index_a, index_b)

    lengths = dict((index, 1) for index in order.nodes())
    for index in nx.topological_sort(order):
        for successor in order.successors(index):
            lengths[successor] = max(lengths[successor], lengths[index] + 1)

    return [lengths[index] for index in range(len(bridges))]


def c_bridge_decomposition(g, cycle, segments):
    """
    Returns the C-bridges, the pairs (i, j) with bridge i preceding bridge j, and the chain length of every bridge
    :return: BridgeDecomposition
    """

    bridges = c_bridges(g, cycle, segments)
    order = [
        (index_a, index_b) for index_a, bridge_a in enumerate(bridges) for index_b, bridge_b in enumerate(bridges)
        if index_a != index_b and precedes(bridge_a, bridge_b)]
    lengths = longest_chain_lengths(bridges)
    logger.debug('{} C-bridges, longest chain {}'.format(len(bridges), max(lengths or [0])))

    return BridgeDecomposition(bridges, order, lengths)


def decomposition_to_dict(decomposition):
    data = OrderedDict()
    data['bridges'] = [
        OrderedDict([
            ('nodes', list(bridge.nodes)), ('attachments', list(bridge.attachments)), ('J', list(bridge.J)),
            ('l', length)])
        for bridge, length in zip(decomposition.bridges, decomposition.chain_lengths)]
    data['order'] = [list(pair) for pair in decomposition.order]

    return data
