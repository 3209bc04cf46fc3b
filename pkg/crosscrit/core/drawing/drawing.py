#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the combinatorial drawing model: a planarization given by a rotation system plus a registry
of crossing vertices
"""

from __future__ import print_function, division, absolute_import

import logging
from collections import OrderedDict, namedtuple, Counter

import networkx as nx

from crosscrit.core import consts, exceptions, graph

logger = logging.getLogger(consts.LOGGER_NAME)

Crossing = namedtuple('Crossing', ['a', 'sa', 'b', 'sb'])
SegmentEnd = namedtuple('SegmentEnd', ['edge', 'segment'])
CrossingCount = namedtuple('CrossingCount', ['total', 'pairs'])
PairCount = namedtuple('PairCount', ['a', 'b', 'count'])


def vertex_key(vertex):
    return 'v{}'.format(vertex)


def crossing_key(crossing_id):
    return 'c{}'.format(crossing_id)


class VerificationResult(object):
    def __init__(self, ok, reason=''):
        self.ok = ok
        self.reason = reason

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__

    def __repr__(self):
        return '<VerificationResult ok={} reason="{}">'.format(self.ok, self.reason)


class Drawing(object):
    """
    Drawing of a WeightedMultigraph as a planarization.
    Every skeleton edge is split by its crossings into segments numbered from its u endpoint. A crossing sitting at
    position p along an edge separates segments p and p + 1.
    """

    def __init__(self, g, rotation, crossings):
        """
        :param WeightedMultigraph g: drawn graph
        :param dict rotation: clockwise SegmentEnd lists keyed by 'v<vertex id>' and 'c<crossing id>'
        :param list(Crossing) crossings: crossing registry. The crossing id is the index in this list
        """

        self._graph = g
        self._rotation = OrderedDict(
            (key, tuple(SegmentEnd(*end) for end in ends)) for key, ends in rotation.items())
        self._crossings = tuple(Crossing(*crossing) for crossing in crossings)

    def __repr__(self):
        return '<Drawing {!r} crossings={}>'.format(self._graph, len(self._crossings))

    @property
    def graph(self):
        return self._graph

    @property
    def rotation(self):
        return self._rotation

    @property
    def crossings(self):
        return self._crossings

    def nodes(self):
        return [vertex_key(v) for v in self._graph.vertices] + [crossing_key(c) for c in range(len(self._crossings))]

    def edge_orders(self):
        """
        Returns, for every skeleton edge, its crossing ids sorted by position from the u endpoint.
        Positions are not validated here.
        :return: dict(int, list(int))
        """

        positions = OrderedDict((edge.id, list()) for edge in self._graph.edges)
        for crossing_id, crossing in enumerate(self._crossings):
            positions.setdefault(crossing.a, list()).append((crossing.sa, crossing_id))
            positions.setdefault(crossing.b, list()).append((crossing.sb, crossing_id))

        return OrderedDict((edge_id, [c for _, c in sorted(items)]) for edge_id, items in positions.items())

    def segment_endpoints(self, edge_id, segment, orders=None):
        """
        Returns the planarization node keys at both ends of the given segment
        :param int edge_id: skeleton edge id
        :param int segment: segment index
        :param dict orders: precomputed edge orders
        :return: tuple(str, str)
        """

        orders = orders or self.edge_orders()
        edge = self._graph.edge(edge_id)
        order = orders[edge_id]
        start = vertex_key(edge.u) if segment == 0 else crossing_key(order[segment - 1])
        end = vertex_key(edge.v) if segment == len(order) else crossing_key(order[segment])

        return start, end

    def segments(self):
        """
        Returns all segments of the planarization as (SegmentEnd, start key, end key) tuples
        :return: list(tuple(SegmentEnd, str, str))
        """

        orders = self.edge_orders()
        found = list()
        for edge in self._graph.edges:
            for segment in range(len(orders[edge.id]) + 1):
                start, end = self.segment_endpoints(edge.id, segment, orders)
                found.append((SegmentEnd(edge.id, segment), start, end))

        return found

    def planarization(self):
        """
        Returns the planarization as a networkx multigraph. Segments are stored as edge keys
        :return: nx.MultiGraph
        """

        planar = nx.MultiGraph()
        planar.add_nodes_from(self.nodes())
        for end, start, finish in self.segments():
            planar.add_edge(start, finish, key=end)

        return planar

    def to_dict(self):
        return {
            'graph': self._graph.to_dict(),
            'rotation': dict((key, [[end.edge, end.segment] for end in ends]) for key, ends in self._rotation.items()),
            'crossings': [{'a': c.a, 'sa': c.sa, 'b': c.b, 'sb': c.sb} for c in self._crossings]
        }

    @classmethod
    def from_dict(cls, data):
        try:
            g = graph.WeightedMultigraph.from_dict(data['graph'])
            rotation = OrderedDict(
                (key, [SegmentEnd(int(e), int(s)) for e, s in ends]) for key, ends in sorted(data['rotation'].items()))
            crossings = [
                Crossing(int(c['a']), int(c['sa']), int(c['b']), int(c['sb'])) for c in data['crossings']]
        except (KeyError, TypeError, ValueError) as exc:
            raise exceptions.DrawingError('Malformed drawing data: {}'.format(exc))

        return cls(g, rotation, crossings)


# ======================================================================================================================
# VERIFICATION
# ======================================================================================================================

def verify_drawing(d):
    """
    Checks every structural invariant of the drawing: contiguous crossing positions, vertex and crossing rotations,
    alternation at crossings, connectivity and Euler's formula over the faces traced from the rotation system
    :param Drawing d: drawing to check
    :return: VerificationResult
    """

    g = d.graph
    for crossing_id, crossing in enumerate(d.crossings):
        for edge_id in (crossing.a, crossing.b):
            if not g.has_edge(edge_id):
                return VerificationResult(False, 'crossing {} references unknown edge {}'.format(crossing_id, edge_id))
        if crossing.a == crossing.b:
            return VerificationResult(False, 'crossing {} crosses edge {} with itself'.format(crossing_id, crossing.a))

    orders = d.edge_orders()
    for edge_id, order in orders.items():
        positions = sorted(
            [c.sa for c in d.crossings if c.a == edge_id] + [c.sb for c in d.crossings if c.b == edge_id])
        if positions != list(range(len(order))):
            return VerificationResult(
                False, 'crossing positions along edge {} are not contiguous: {}'.format(
                    g.edge_name(edge_id), positions))

    nodes = d.nodes()
    if set(d.rotation.keys()) != set(nodes):
        missing = sorted(set(nodes) - set(d.rotation.keys()))
        extra = sorted(set(d.rotation.keys()) - set(nodes))
        return VerificationResult(False, 'rotation keys mismatch (missing: {}, extra: {})'.format(missing, extra))

    for vertex in g.vertices:
        expected = list()
        for edge in g.incident_edges(vertex):
            expected.append(SegmentEnd(edge.id, 0 if edge.u == vertex else len(orders[edge.id])))
        if Counter(d.rotation[vertex_key(vertex)]) != Counter(expected):
            return VerificationResult(
                False, 'rotation at vertex {} does not list its incident segments'.format(g.label(vertex) or vertex))

    for crossing_id, crossing in enumerate(d.crossings):
        ends = d.rotation[crossing_key(crossing_id)]
        expected = [
            SegmentEnd(crossing.a, crossing.sa), SegmentEnd(crossing.a, crossing.sa + 1),
            SegmentEnd(crossing.b, crossing.sb), SegmentEnd(crossing.b, crossing.sb + 1)]
        if len(ends) != 4 or Counter(ends) != Counter(expected):
            return VerificationResult(False, 'crossing {} does not have exactly 4 segment ends'.format(crossing_id))
        if any(ends[index].edge == ends[(index + 1) % 4].edge for index in range(4)):
            return VerificationResult(False, 'crossing {} rotation is not alternating'.format(crossing_id))

    planar = d.planarization()
    if planar.number_of_nodes() and not nx.is_connected(planar):
        return VerificationResult(False, 'planarization is disconnected')

    num_faces = len(trace_faces(d))
    num_nodes, num_segments = planar.number_of_nodes(), planar.number_of_edges()
    if num_nodes and num_nodes - num_segments + num_faces != 2:
        return VerificationResult(
            False, 'Euler formula fails: V - E + F = {} - {} + {}'.format(num_nodes, num_segments, num_faces))

    return VerificationResult(True)


def trace_faces(d):
    """
    Returns the faces of the planarization traced from the rotation system. Each face is a list of darts
    (tail key, SegmentEnd, head key)
    :param Drawing d: drawing with consistent rotations
    :return: list(list(tuple(str, SegmentEnd, str)))
    """

    orders = d.edge_orders()
    endpoints = dict()
    for edge in d.graph.edges:
        for segment in range(len(orders[edge.id]) + 1):
            endpoints[SegmentEnd(edge.id, segment)] = d.segment_endpoints(edge.id, segment, orders)

    positions = dict()
    for key, ends in d.rotation.items():
        for index, end in enumerate(ends):
            positions[(key, end)] = index

    def _head(tail, end):
        start, finish = endpoints[end]
        return finish if tail == start else start

    darts = list()
    for end, (start, finish) in endpoints.items():
        darts.append((start, end, finish))
        darts.append((finish, end, start))

    visited = set()
    faces = list()
    for dart in darts:
        if dart in visited:
            continue
        face = list()
        current = dart
        while current not in visited:
            visited.add(current)
            face.append(current)
            _, end, head = current
            ends = d.rotation[head]
            following = ends[(positions[(head, end)] + 1) % len(ends)]
            current = (head, following, _head(head, following))
        faces.append(face)

    if not darts and d.graph.num_vertices:
        faces.append(list())

    return faces


def to_planar_embedding(d):
    """
    Returns the rotation system as a networkx PlanarEmbedding. Each segment is subdivided by a midpoint node so
    parallel segments stay distinct.
    Raises InvalidDrawingError if networkx rejects the embedding.

    :param Drawing d: drawing
    :return: nx.PlanarEmbedding
    """

    embedding = nx.PlanarEmbedding()
    embedding.add_nodes_from(d.nodes())
    data = dict()
    for end, start, finish in d.segments():
        data['m{}.{}'.format(end.edge, end.segment)] = [start, finish]
    for key, ends in d.rotation.items():
        data[key] = ['m{}.{}'.format(end.edge, end.segment) for end in ends]
    embedding.set_data(data)
    try:
        embedding.check_structure()
    except nx.NetworkXException as exc:
        raise exceptions.InvalidDrawingError('rotation system is not a plane embedding ({})'.format(exc))

    return embedding


# ======================================================================================================================
# COUNTING
# ======================================================================================================================

def crossing_count(d, verify=True):
    """
    Returns the weighted number of crossings of the drawing. A crossing between edges of thickness t1 and t2
    counts as t1 * t2 crossings
    :param Drawing d: drawing
    :param bool verify: whether to reject invalid drawings
    :return: CrossingCount
    """

    if verify:
        result = verify_drawing(d)
        if not result:
            raise exceptions.InvalidDrawingError(result.reason)

    g = d.graph
    pairs = OrderedDict()
    for crossing in d.crossings:
        a, b = sorted((crossing.a, crossing.b))
        pairs[(a, b)] = pairs.get((a, b), 0) + g.edge(a).thickness * g.edge(b).thickness

    breakdown = [PairCount(a, b, count) for (a, b), count in sorted(pairs.items())]

    return CrossingCount(sum(pair.count for pair in breakdown), breakdown)


def named_breakdown(d, count=None):
    """
    Returns the per pair breakdown keyed by readable edge names
    :return: dict(tuple(str, str), int)
    """

    count = count or crossing_count(d)

    return OrderedDict(((d.graph.edge_name(pair.a), d.graph.edge_name(pair.b)), pair.count) for pair in count.pairs)


# ======================================================================================================================
# REWRITES
# ======================================================================================================================

def remove_edge_copy(d, e):
    """
    Deletes one copy of the edge from the drawing. While copies remain the routing is unchanged. Otherwise the edge
    and its crossings disappear and the segments of the crossed edges are renumbered
    :param Drawing d: drawing
    :param int e: edge id
    :return: Drawing
    """

    g = d.graph
    edge = g.edge(e)
    reduced = graph.delete_one_copy(g, e)
    if edge.thickness > 1:
        return Drawing(reduced, d.rotation, d.crossings)

    removed = set(c for c, crossing in enumerate(d.crossings) if e in (crossing.a, crossing.b))
    new_ids = dict()
    for crossing_id in range(len(d.crossings)):
        if crossing_id not in removed:
            new_ids[crossing_id] = len(new_ids)

    orders = d.edge_orders()

    def _shift(edge_id, index):
        return index - sum(1 for c in orders[edge_id][:index] if c in removed)

    def _map_end(end):
        return SegmentEnd(end.edge, _shift(end.edge, end.segment))

    crossings = list()
    for crossing_id, crossing in enumerate(d.crossings):
        if crossing_id in removed:
            continue
        crossings.append(Crossing(
            crossing.a, _shift(crossing.a, crossing.sa), crossing.b, _shift(crossing.b, crossing.sb)))

    rotation = OrderedDict()
    for vertex in g.vertices:
        key = vertex_key(vertex)
        rotation[key] = [_map_end(end) for end in d.rotation[key] if end.edge != e]
    for crossing_id, new_id in sorted(new_ids.items(), key=lambda item: item[1]):
        rotation[crossing_key(new_id)] = [_map_end(end) for end in d.rotation[crossing_key(crossing_id)]]

    return Drawing(reduced, rotation, crossings)


def apply_vertex_map(d, mapping):
    """
    Relabels the drawing through a thickness preserving automorphism of its graph given as a label map
    :param Drawing d: drawing
    :param dict mapping: label to label map
    :return: Drawing of the same graph
    """

    g = d.graph
    vertex_map = dict()
    for vertex, label in g.labels().items():
        if label not in mapping:
            raise exceptions.DrawingError('Vertex map does not cover vertex {}'.format(label))
        vertex_map[vertex] = g.vertex_by_label(mapping[label])

    orders = d.edge_orders()
    edge_map = dict()
    for edge in g.edges:
        image = g.edge_between(vertex_map[edge.u], vertex_map[edge.v])
        if image is None or image.thickness != edge.thickness:
            raise exceptions.DrawingError('Vertex map is not an automorphism at edge {}'.format(g.edge_name(edge.id)))
        edge_map[edge.id] = (image.id, image.u != vertex_map[edge.u])

    def _map_end(end):
        image, reversed_ = edge_map[end.edge]
        return SegmentEnd(image, len(orders[end.edge]) - end.segment if reversed_ else end.segment)

    def _map_position(edge_id, position):
        image, reversed_ = edge_map[edge_id]
        return image, len(orders[edge_id]) - 1 - position if reversed_ else position

    crossings = list()
    for crossing in d.crossings:
        a, sa = _map_position(crossing.a, crossing.sa)
        b, sb = _map_position(crossing.b, crossing.sb)
        crossings.append(Crossing(a, sa, b, sb))

    rotation = OrderedDict()
    inverse = dict((image, vertex) for vertex, image in vertex_map.items())
    for vertex in g.vertices:
        rotation[vertex_key(vertex)] = [_map_end(end) for end in d.rotation[vertex_key(inverse[vertex])]]
    for crossing_id in range(len(d.crossings)):
        key = crossing_key(crossing_id)
        rotation[key] = [_map_end(end) for end in d.rotation[key]]

    return Drawing(g, rotation, crossings)


def drawing_to_json(d):
    return d.to_dict()


def drawing_from_json(data):
    return Drawing.from_dict(data)
