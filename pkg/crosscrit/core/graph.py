#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the weighted multigraph representation used by crosscrit.
Bunches of parallel edges are stored as a single skeleton edge carrying an integer thickness.
"""

from __future__ import print_function, division, absolute_import

import logging
from collections import OrderedDict, namedtuple

import pydot
import networkx as nx

from crosscrit.core import consts, exceptions

logger = logging.getLogger(consts.LOGGER_NAME)

Edge = namedtuple('Edge', ['id', 'u', 'v', 'thickness'])
VertexIncidenceProfile = namedtuple('VertexIncidenceProfile', ['vertex', 'thicknesses'])


class WeightedMultigraph(object):
    """
    Immutable graph whose skeleton is simple and whose edges carry a positive thickness
    """

    def __init__(self, vertices=None, edges=None):
        """
        :param list vertices: vertex ids or (vertex id, label) tuples
        :param list edges: Edge instances or (edge id, u, v, thickness) tuples
        """

        self._labels = OrderedDict()
        self._by_label = dict()
        self._edges = OrderedDict()
        self._pairs = dict()
        self._incidence = OrderedDict()

        for vertex in vertices or list():
            if isinstance(vertex, (tuple, list)):
                vertex_id, label = vertex
            else:
                vertex_id, label = vertex, None
            self._add_vertex(vertex_id, label)

        for edge in edges or list():
            self._add_edge(Edge(*edge))

    def __eq__(self, other):
        if not isinstance(other, WeightedMultigraph):
            return False
        return list(self._labels.items()) == list(other._labels.items()) and \
            list(self._edges.values()) == list(other._edges.values())

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return '<WeightedMultigraph |V|={} |E|={} m={}>'.format(self.num_vertices, self.num_edges, self.multiplicity)

    # ==================================================================================================================
    # PROPERTIES
    # ==================================================================================================================

    @property
    def vertices(self):
        return list(self._labels.keys())

    @property
    def edges(self):
        return list(self._edges.values())

    @property
    def num_vertices(self):
        return len(self._labels)

    @property
    def num_edges(self):
        return len(self._edges)

    @property
    def multiplicity(self):
        """
        Returns the total number of edges of the multigraph (sum of all thicknesses)
        :return: int
        """

        return sum(edge.thickness for edge in self._edges.values())

    # ==================================================================================================================
    # QUERIES
    # ==================================================================================================================

    def has_vertex(self, vertex):
        return vertex in self._labels

    def has_edge(self, edge_id):
        return edge_id in self._edges

    def label(self, vertex):
        self._check_vertex(vertex)
        return self._labels[vertex]

    def labels(self):
        return OrderedDict(self._labels)

    def vertex_by_label(self, label):
        """
        Returns the id of the vertex with the given label
        :param str label: vertex label
        :return: vertex id
        :rtype: int
        """

        if label not in self._by_label:
            raise exceptions.UnknownVertexError(label)

        return self._by_label[label]

    def find_vertex(self, label):
        return self._by_label.get(label, None)

    def edge(self, edge_id):
        if edge_id not in self._edges:
            raise exceptions.UnknownEdgeError(edge_id)
        return self._edges[edge_id]

    def edge_between(self, u, v):
        """
        Returns the skeleton edge joining both vertices
        :param int u: first vertex id
        :param int v: second vertex id
        :return: Edge or None if both vertices are not adjacent
        :rtype: Edge or None
        """

        edge_id = self._pairs.get(frozenset((u, v)), None)

        return self._edges[edge_id] if edge_id is not None else None

    def edge_by_labels(self, label_a, label_b):
        """
        Returns the skeleton edge joining the vertices with the given labels
        :param str label_a: label of the first vertex
        :param str label_b: label of the second vertex
        :return: Edge
        :rtype: Edge
        """

        edge = self.edge_between(self.vertex_by_label(label_a), self.vertex_by_label(label_b))
        if edge is None:
            raise exceptions.UnknownEdgeError('{}{}'.format(label_a, label_b))

        return edge

    def incident_edges(self, vertex):
        self._check_vertex(vertex)
        return [self._edges[edge_id] for edge_id in self._incidence[vertex]]

    def neighbors(self, vertex):
        return [other_end(edge, vertex) for edge in self.incident_edges(vertex)]

    def edge_name(self, edge_id):
        """
        Returns a readable name for the given edge, built from the labels of its endpoints when available
        :param int edge_id: edge id
        :return: str
        """

        edge = self.edge(edge_id)
        label_u, label_v = self._labels[edge.u], self._labels[edge.v]
        if label_u is None or label_v is None:
            return 'e{}'.format(edge_id)

        return '{}{}'.format(label_u, label_v)

    def sort_key(self, vertex):
        label = self._labels[vertex]
        return label is None, label or '', vertex

    def next_edge_id(self):
        return max(self._edges) + 1 if self._edges else 0

    def skeleton(self):
        """
        Returns the simple skeleton graph as a networkx graph. Thickness and edge id are stored as edge attributes
        :return: nx.Graph
        """

        skeleton = nx.Graph()
        for vertex, label in self._labels.items():
            skeleton.add_node(vertex, label=label)
        for edge in self._edges.values():
            skeleton.add_edge(edge.u, edge.v, thickness=edge.thickness, id=edge.id)

        return skeleton

    # ==================================================================================================================
    # SERIALIZATION
    # ==================================================================================================================

    def to_dict(self):
        vertices = list()
        for vertex, label in self._labels.items():
            vertex_data = {'id': vertex}
            if label is not None:
                vertex_data['label'] = label
            vertices.append(vertex_data)
        edges = [{'id': e.id, 'u': e.u, 'v': e.v, 'thickness': e.thickness} for e in self._edges.values()]

        return {'vertices': vertices, 'edges': edges}

    @classmethod
    def from_dict(cls, data):
        try:
            vertices = [(int(vertex['id']), vertex.get('label', None)) for vertex in data['vertices']]
            edges = [
                (int(edge['id']), int(edge['u']), int(edge['v']), int(edge.get('thickness', 1)))
                for edge in data['edges']]
        except (KeyError, TypeError, ValueError) as exc:
            raise exceptions.GraphError('Malformed graph data: {}'.format(exc))

        return cls(vertices, edges)

    # ==================================================================================================================
    # INTERNAL
    # ==================================================================================================================

    def _check_vertex(self, vertex):
        if vertex not in self._labels:
            raise exceptions.UnknownVertexError(vertex)

    def _add_vertex(self, vertex, label):
        if isinstance(vertex, bool) or not isinstance(vertex, int):
            raise exceptions.GraphError('Vertex ids must be integers: {!r}'.format(vertex))
        if vertex in self._labels:
            raise exceptions.GraphError('Duplicated vertex id: {}'.format(vertex))
        if label is not None:
            if label in self._by_label:
                raise exceptions.GraphError('Duplicated vertex label: {}'.format(label))
            self._by_label[label] = vertex
        self._labels[vertex] = label
        self._incidence[vertex] = list()

    def _add_edge(self, edge):
        if edge.id in self._edges:
            raise exceptions.GraphError('Duplicated edge id: {}'.format(edge.id))
        self._check_vertex(edge.u)
        self._check_vertex(edge.v)
        if edge.u == edge.v:
            raise exceptions.GraphError('Self-loops are not supported: edge {}'.format(edge.id))
        if isinstance(edge.thickness, bool) or not isinstance(edge.thickness, int) or edge.thickness < 1:
            raise exceptions.GraphError('Edge {} must have a positive integer thickness'.format(edge.id))
        pair = frozenset((edge.u, edge.v))
        if pair in self._pairs:
            raise exceptions.GraphError(
                'Vertices {} and {} are already joined by edge {}'.format(edge.u, edge.v, self._pairs[pair]))
        self._edges[edge.id] = edge
        self._pairs[pair] = edge.id
        self._incidence[edge.u].append(edge.id)
        self._incidence[edge.v].append(edge.id)


class GraphBuilder(object):
    """
    Mutable helper used to assemble WeightedMultigraph instances
    """

    def __init__(self, graph=None):
        self._vertices = OrderedDict()
        self._labels = dict()
        self._edges = OrderedDict()

        if graph is not None:
            for vertex, label in graph.labels().items():
                self.add_vertex(label, vertex_id=vertex)
            for edge in graph.edges:
                self._edges[edge.id] = edge

    def add_vertex(self, label=None, vertex_id=None):
        """
        Adds a new vertex
        :param str label: optional unique label
        :param int vertex_id: optional id. If not given, the next free id is used
        :return: id of the new vertex
        :rtype: int
        """

        if vertex_id is None:
            vertex_id = max(self._vertices) + 1 if self._vertices else 0
        if vertex_id in self._vertices:
            raise exceptions.GraphError('Duplicated vertex id: {}'.format(vertex_id))
        if label is not None:
            if label in self._labels:
                raise exceptions.GraphError('Duplicated vertex label: {}'.format(label))
            self._labels[label] = vertex_id
        self._vertices[vertex_id] = label

        return vertex_id

    def vertex(self, label):
        """
        Returns the id of the vertex with the given label, creating it if necessary
        :param str label: vertex label
        :return: int
        """

        if label in self._labels:
            return self._labels[label]

        return self.add_vertex(label)

    def add_edge(self, u, v, thickness=1, edge_id=None):
        if edge_id is None:
            edge_id = max(self._edges) + 1 if self._edges else 0
        if edge_id in self._edges:
            raise exceptions.GraphError('Duplicated edge id: {}'.format(edge_id))
        self._edges[edge_id] = Edge(edge_id, u, v, thickness)

        return edge_id

    def connect(self, label_a, label_b, thickness=1):
        return self.add_edge(self.vertex(label_a), self.vertex(label_b), thickness)

    def remove_vertex(self, vertex):
        label = self._vertices.pop(vertex)
        if label is not None:
            self._labels.pop(label)
        for edge_id in [e.id for e in self._edges.values() if vertex in (e.u, e.v)]:
            self._edges.pop(edge_id)

    def remove_edge(self, edge_id):
        self._edges.pop(edge_id)

    def build(self):
        return WeightedMultigraph(list(self._vertices.items()), list(self._edges.values()))


def other_end(edge, vertex):
    """
    Returns the endpoint of the edge that is not the given vertex
    :param Edge edge: skeleton edge
    :param int vertex: one of the endpoints of the edge
    :return: int
    """

    return edge.v if edge.u == vertex else edge.u


def from_networkx(nx_graph, thickness_attr='thickness'):
    """
    Converts a networkx graph into a WeightedMultigraph. Nodes are renumbered and their names are kept as labels
    :param nx.Graph nx_graph: simple graph
    :param str thickness_attr: edge attribute holding thicknesses. Missing values are read as 1
    :return: WeightedMultigraph
    """

    builder = GraphBuilder()
    node_ids = dict()
    for node in nx_graph.nodes():
        node_ids[node] = builder.add_vertex(str(node))
    for u, v, data in nx_graph.edges(data=True):
        builder.add_edge(node_ids[u], node_ids[v], int(data.get(thickness_attr, 1)))

    return builder.build()


# ======================================================================================================================
# OPERATIONS
# ======================================================================================================================

def degree(g, v):
    """
    Returns the degree of the vertex, counting each thick edge with its multiplicity
    :param WeightedMultigraph g: graph
    :param int v: vertex id
    :return: int
    """

    return sum(edge.thickness for edge in g.incident_edges(v))


def incidence_profile(g, v):
    return VertexIncidenceProfile(v, tuple(sorted(edge.thickness for edge in g.incident_edges(v))))


def is_k_connected(g, k):
    """
    Returns whether the skeleton of the graph is k-vertex-connected. Multiplicities are ignored
    :param WeightedMultigraph g: graph
    :param int k: connectivity to test
    :return: bool
    """

    if k < 1:
        raise exceptions.GraphError('Connectivity must be positive, {} given'.format(k))
    if g.num_vertices <= k:
        return False

    skeleton = g.skeleton()
    if not nx.is_connected(skeleton):
        return False
    if k == 1:
        return True

    return nx.node_connectivity(skeleton) >= k


def delete_one_copy(g, e):
    """
    Removes one of the parallel edges of the given skeleton edge
    :param WeightedMultigraph g: graph
    :param int e: edge id
    :return: new graph
    :rtype: WeightedMultigraph
    """

    edge = g.edge(e)
    builder = GraphBuilder(g)
    builder.remove_edge(e)
    if edge.thickness > 1:
        builder.add_edge(edge.u, edge.v, edge.thickness - 1, edge_id=edge.id)

    return _keep_edge_order(g, builder.build())


def add_one_copy(g, u, v, edge_id=None):
    """
    Adds one parallel copy of the edge uv. Inverse of delete_one_copy
    :param WeightedMultigraph g: graph
    :param int u: first endpoint
    :param int v: second endpoint
    :param int edge_id: id to use when the skeleton edge has to be created
    :return: new graph
    :rtype: WeightedMultigraph
    """

    existing = g.edge_between(u, v)
    builder = GraphBuilder(g)
    if existing is not None:
        builder.remove_edge(existing.id)
        builder.add_edge(u if existing.u == u else v, v if existing.u == u else u, existing.thickness + 1, existing.id)
    else:
        builder.add_edge(u, v, 1, edge_id=edge_id if edge_id is not None else g.next_edge_id())

    return _keep_edge_order(g, builder.build())


def zip_product(g1, v1, g2, v2, matching=None, prefix=None):
    """
    Returns the zip product of both graphs at the given vertices: the disjoint union of g1 - v1 and g2 - v2 plus one
    edge for every matched pair of neighbours.
    Vertices and edges of g1 keep their ids; those of g2 are renumbered after them.

    :param WeightedMultigraph g1: first graph
    :param int v1: zip vertex of the first graph
    :param WeightedMultigraph g2: second graph
    :param int v2: zip vertex of the second graph
    :param list(tuple(int, int)) matching: bijection between neighbours of v1 and v2. If not given, neighbours are
        paired in ascending label order
    :param str prefix: prefix added to all labels coming from g2
    :return: zipped graph
    :rtype: WeightedMultigraph
    """

    for graph, vertex in ((g1, v1), (g2, v2)):
        if not graph.has_vertex(vertex):
            raise exceptions.UnknownVertexError(vertex)
        thick_edges = [graph.edge_name(edge.id) for edge in graph.incident_edges(vertex) if edge.thickness != 1]
        if thick_edges:
            raise exceptions.ZipThickEdgeError(
                'Zip vertex {} is incident with thick edges: {}'.format(vertex, ', '.join(thick_edges)))

    d1, d2 = degree(g1, v1), degree(g2, v2)
    if d1 != d2:
        raise exceptions.ZipDegreeError('Zip vertices have different degrees: {} and {}'.format(d1, d2))
    if d1 not in consts.ZIP_DEGREES:
        raise exceptions.ZipDegreeError('Zip vertices must have degree 2 or 3, not {}'.format(d1))

    for graph, vertex in ((g1, v1), (g2, v2)):
        rest = graph.skeleton()
        rest.remove_node(vertex)
        if not rest.number_of_nodes() or not nx.is_connected(rest):
            raise exceptions.ZipDisconnectedError('Removing vertex {} disconnects its graph'.format(vertex))

    neighbors1 = sorted(g1.neighbors(v1), key=g1.sort_key)
    neighbors2 = sorted(g2.neighbors(v2), key=g2.sort_key)
    if matching is None:
        matching = list(zip(neighbors1, neighbors2))
    else:
        matching = [tuple(pair) for pair in matching]
        if len(matching) != d1 or sorted(a for a, _ in matching) != sorted(neighbors1) or \
                sorted(b for _, b in matching) != sorted(neighbors2):
            raise exceptions.ZipMatchingError('Matching {} is not a bijection between neighbourhoods'.format(matching))

    used_labels = set(label for vertex, label in g1.labels().items() if vertex != v1 and label is not None)
    builder = GraphBuilder()
    for vertex, label in g1.labels().items():
        if vertex != v1:
            builder.add_vertex(label, vertex_id=vertex)
    vertex_map = dict()
    for vertex, label in g2.labels().items():
        if vertex == v2:
            continue
        if label is not None and prefix:
            label = '{}{}'.format(prefix, label)
        if label is not None and label in used_labels:
            raise exceptions.ZipError('Label "{}" appears in both zip operands. Use a prefix'.format(label))
        vertex_map[vertex] = builder.add_vertex(label)

    for edge in g1.edges:
        if v1 not in (edge.u, edge.v):
            builder.add_edge(edge.u, edge.v, edge.thickness, edge_id=edge.id)
    for edge in g2.edges:
        if v2 not in (edge.u, edge.v):
            builder.add_edge(vertex_map[edge.u], vertex_map[edge.v], edge.thickness)
    for a, b in matching:
        builder.add_edge(a, vertex_map[b], 1)

    zipped = builder.build()
    logger.debug('Zipped graphs at {} and {}: {!r}'.format(v1, v2, zipped))

    return zipped


def graph_to_json(g):
    return g.to_dict()


def graph_from_json(data):
    return WeightedMultigraph.from_dict(data)


def graph_to_dot(g):
    """
    Returns DOT text for the graph. Thickness is drawn as the edge label
    :param WeightedMultigraph g: graph
    :return: str
    """

    dot = pydot.Dot(graph_type='graph')
    for vertex, label in g.labels().items():
        dot.add_node(pydot.Node('n{}'.format(vertex), label='"{}"'.format(label if label is not None else vertex)))
    for edge in g.edges:
        dot.add_edge(pydot.Edge('n{}'.format(edge.u), 'n{}'.format(edge.v), label='"{}"'.format(edge.thickness)))

    return dot.to_string()


def _keep_edge_order(original, graph):
    """
    Internal function that reorders the edges of the given graph following the edge order of the original graph
    """

    order = dict((edge.id, index) for index, edge in enumerate(original.edges))
    edges = sorted(graph.edges, key=lambda edge: (order.get(edge.id, len(order)), edge.id))

    return WeightedMultigraph(list(graph.labels().items()), edges)
