#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that realizes crossing configurations as drawings.
A configuration lists, for every skeleton edge, the names of the crossings met when walking from its u endpoint.
Each crossing is replaced by a wheel gadget whose rim forces the a, b, a, b alternation, and the resulting graph is
given to the networkx planarity test.
"""

from __future__ import print_function, division, absolute_import

import logging
from collections import OrderedDict, namedtuple

import networkx as nx

from crosscrit.core import consts, exceptions
from crosscrit.core.drawing import drawing

logger = logging.getLogger(consts.LOGGER_NAME)

Realization = namedtuple('Realization', ['ok', 'embedding', 'witness_edges', 'crossings', 'orders', 'segment_of'])

SPOKE = 'spoke'
RIM = 'rim'
SEGMENT = 'segment'


def routes_by_labels(g, label_routes):
    """
    Converts routes keyed by (label, label) pairs into routes keyed by edge id. A route given against the stored
    direction of its edge is reversed
    :param WeightedMultigraph g: graph
    :param dict label_routes: crossing names listed from the first label of the key to the second
    :return: OrderedDict(int, list)
    """

    routes = OrderedDict()
    for (label_a, label_b), names in label_routes.items():
        edge = g.edge_by_labels(label_a, label_b)
        names = list(names)
        if edge.u != g.vertex_by_label(label_a):
            names.reverse()
        routes[edge.id] = names

    return routes


def crossing_registry(g, routes):
    """
    Returns the crossing registry and per edge crossing ids of a configuration. Crossings are numbered in order of
    first appearance when walking the edges of the graph in order
    :param WeightedMultigraph g: graph
    :param dict routes: crossing names per edge id
    :return: crossings, names and crossing ids per edge
    :rtype: tuple(list(Crossing), list, OrderedDict)
    """

    for edge_id in routes:
        if not g.has_edge(edge_id):
            raise exceptions.InvalidDrawingError('route given for unknown edge {}'.format(edge_id))

    occurrences = OrderedDict()
    for edge in g.edges:
        for position, name in enumerate(routes.get(edge.id, ())):
            occurrences.setdefault(name, list()).append((edge.id, position))

    crossings, names, ids = list(), list(), dict()
    for name, found in occurrences.items():
        if len(found) != 2 or found[0][0] == found[1][0]:
            raise exceptions.InvalidDrawingError(
                'crossing {!r} must appear once on each of two distinct edges'.format(name))
        (a, sa), (b, sb) = found
        ids[name] = len(crossings)
        crossings.append(drawing.Crossing(a, sa, b, sb))
        names.append(name)

    orders = OrderedDict((edge.id, [ids[name] for name in routes.get(edge.id, ())]) for edge in g.edges)

    return crossings, names, orders


def gadget_graph(g, crossings, orders):
    """
    Returns the planarization of a configuration with every crossing vertex wrapped in a wheel gadget.
    :return: gadget graph and the map from (node, neighbour) to the SegmentEnd leaving node
    :rtype: tuple(nx.Graph, dict)
    """

    gadget = nx.Graph()
    for vertex in g.vertices:
        gadget.add_node(('v', vertex))

    for crossing_id, crossing in enumerate(crossings):
        hub = ('c', crossing_id)
        ports = [
            ('p', crossing_id, crossing.a, 0), ('p', crossing_id, crossing.b, 0),
            ('p', crossing_id, crossing.a, 1), ('p', crossing_id, crossing.b, 1)]
        for index, port in enumerate(ports):
            gadget.add_edge(hub, port, kind=SPOKE)
            gadget.add_edge(port, ports[(index + 1) % 4], kind=RIM)

    segment_of = dict()
    for edge in g.edges:
        order = orders[edge.id]
        for segment in range(len(order) + 1):
            start = ('v', edge.u) if segment == 0 else ('p', order[segment - 1], edge.id, 1)
            end = ('v', edge.v) if segment == len(order) else ('p', order[segment], edge.id, 0)
            gadget.add_edge(start, end, kind=SEGMENT, edge=edge.id, segment=segment)
            segment_of[(start, end)] = drawing.SegmentEnd(edge.id, segment)
            segment_of[(end, start)] = drawing.SegmentEnd(edge.id, segment)

    return gadget, segment_of


def realize(g, routes):
    """
    Runs the planarity test on the gadget graph of the configuration
    :param WeightedMultigraph g: graph
    :param dict routes: crossing names per edge id
    :return: Realization
    """

    crossings, _, orders = crossing_registry(g, routes)
    gadget, segment_of = gadget_graph(g, crossings, orders)
    planar, certificate = nx.check_planarity(gadget, counterexample=True)
    if planar:
        return Realization(True, certificate, list(), crossings, orders, segment_of)

    witness = set()
    for node_a, node_b in certificate.edges():
        data = gadget.edges[node_a, node_b]
        if data.get('kind') == SEGMENT:
            witness.add(data['edge'])

    return Realization(False, None, sorted(witness), crossings, orders, segment_of)


def configuration_is_realizable(g, routes):
    """
    Returns whether the crossing configuration can be drawn in the plane
    :param WeightedMultigraph g: graph
    :param dict routes: crossing names per edge id
    :return: realizability flag and the skeleton edges of a Kuratowski subgraph when not realizable
    :rtype: tuple(bool, list(int))
    """

    realization = realize(g, routes)

    return realization.ok, realization.witness_edges


def build_drawing(g, routes):
    """
    Builds a valid drawing realizing the crossing configuration
    :param WeightedMultigraph g: graph
    :param dict routes: crossing names per edge id
    :return: Drawing
    """

    realization = realize(g, routes)
    if not realization.ok:
        names = ', '.join(g.edge_name(edge_id) for edge_id in realization.witness_edges)
        raise exceptions.InvalidDrawingError(
            'crossing configuration is not realizable (Kuratowski witness on edges: {})'.format(names))

    embedding, segment_of = realization.embedding, realization.segment_of
    rotation = OrderedDict()
    for vertex in g.vertices:
        node = ('v', vertex)
        rotation[drawing.vertex_key(vertex)] = [
            segment_of[(node, neighbour)] for neighbour in embedding.neighbors_cw_order(node)]

    for crossing_id, crossing in enumerate(realization.crossings):
        ends = list()
        for port in embedding.neighbors_cw_order(('c', crossing_id)):
            _, _, edge_id, side = port
            position = crossing.sa if edge_id == crossing.a else crossing.sb
            ends.append(drawing.SegmentEnd(edge_id, position + side))
        rotation[drawing.crossing_key(crossing_id)] = ends

    result = drawing.Drawing(g, rotation, realization.crossings)
    verification = drawing.verify_drawing(result)
    if not verification:
        raise exceptions.InvalidDrawingError(verification.reason)

    return result


def is_planar(g):
    """
    Returns whether the skeleton of the graph is planar
    :param WeightedMultigraph g: graph
    :return: bool
    """

    return nx.check_planarity(g.skeleton())[0]
