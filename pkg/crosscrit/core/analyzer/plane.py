#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the plane graph model used by the structural analyses
"""

from __future__ import print_function, division, absolute_import

import math
import logging

import networkx as nx

from crosscrit.core import consts, exceptions
from crosscrit.core.drawing import drawing

logger = logging.getLogger(consts.LOGGER_NAME)


def crossing_name(crossing_id):
    return '#{}'.format(crossing_id)


def path_edges(path, closed=False):
    """
    Returns the undirected edges of a vertex sequence
    :param list path: vertices
    :param bool closed: whether the sequence is a cycle
    :return: list(frozenset)
    """

    path = list(path)
    pairs = list(zip(path, path[1:]))
    if closed and len(path) > 2:
        pairs.append((path[-1], path[0]))

    return [frozenset(pair) for pair in pairs]


class PlaneGraph(object):
    """
    Plane graph given by a networkx PlanarEmbedding plus an outer face.
    The outer face is identified by one of its half-edges; faces lie on the right of the half-edges that trace them.
    """

    def __init__(self, embedding, outer=None):
        """
        :param nx.PlanarEmbedding embedding: clockwise rotation system
        :param tuple outer: half-edge of the outer face. Defaults to the first half-edge of the largest face
        """

        try:
            embedding.check_structure()
        except nx.NetworkXException as exc:
            raise exceptions.AnalyzerError('Invalid plane embedding: {}'.format(exc))

        self._embedding = embedding
        self._faces = None
        self._face_index = None
        if outer is not None and not embedding.has_edge(*outer):
            raise exceptions.AnalyzerError('Outer half-edge {} is not part of the embedding'.format(outer))
        self._outer = outer
        if self._outer is None and embedding.number_of_edges():
            self._outer = max(self.faces(), key=len)[0]

    def __repr__(self):
        return '<PlaneGraph nodes={} edges={}>'.format(
            self._embedding.number_of_nodes(), self._embedding.number_of_edges() // 2)

    # ==================================================================================================================
    # CONSTRUCTORS
    # ==================================================================================================================

    @classmethod
    def from_positions(cls, g, positions):
        """
        Builds the plane graph of a straight line drawing. The outer face is the face left of the leftmost vertex
        :param nx.Graph g: graph
        :param dict positions: (x, y) coordinates per node
        :return: PlaneGraph
        """

        data = dict()
        for node in g.nodes():
            x, y = positions[node]
            data[node] = sorted(
                g.neighbors(node),
                key=lambda other: -math.atan2(positions[other][1] - y, positions[other][0] - x))
        embedding = nx.PlanarEmbedding()
        embedding.add_nodes_from(g.nodes())
        embedding.set_data(data)

        outer = None
        if g.number_of_edges():
            candidates = [node for node in g.nodes() if g.degree(node)]
            leftmost = min(candidates, key=lambda node: (positions[node][0], positions[node][1]))
            x, y = positions[leftmost]

            def _turn_from_left(other):
                angle = math.atan2(positions[other][1] - y, positions[other][0] - x)
                return (angle - math.pi) % (2 * math.pi) or 2 * math.pi

            outer = (leftmost, min(g.neighbors(leftmost), key=_turn_from_left))

        return cls(embedding, outer)

    @classmethod
    def from_graph(cls, g, outer=None):
        """
        Embeds a planar graph with the networkx planarity test
        :param nx.Graph g: planar graph
        :param tuple outer: half-edge of the outer face
        :return: PlaneGraph
        """

        planar, embedding = nx.check_planarity(g)
        if not planar:
            raise exceptions.AnalyzerError('Graph is not planar')

        return cls(embedding, outer)

    @classmethod
    def from_drawing(cls, d, outer=None):
        """
        Returns the planarization of a drawing as a plane graph. Graph vertices are named by their labels (ids when
        unlabelled) and crossing vertices by '#<crossing id>'
        :param Drawing d: valid drawing
        :param tuple outer: half-edge of the outer face
        :return: PlaneGraph
        """

        verification = drawing.verify_drawing(d)
        if not verification:
            raise exceptions.InvalidDrawingError(verification.reason)

        g = d.graph
        names = dict()
        for vertex in g.vertices:
            label = g.label(vertex)
            names[drawing.vertex_key(vertex)] = label if label is not None else vertex
        for crossing_id in range(len(d.crossings)):
            names[drawing.crossing_key(crossing_id)] = crossing_name(crossing_id)
        if len(set(names.values())) != len(names):
            raise exceptions.AnalyzerError('Vertex labels collide with crossing names')

        orders = d.edge_orders()
        data = dict()
        for key, ends in d.rotation.items():
            neighbours = list()
            for end in ends:
                start, finish = d.segment_endpoints(end.edge, end.segment, orders)
                neighbours.append(names[finish if start == key else start])
            if len(set(neighbours)) != len(neighbours) or names[key] in neighbours:
                raise exceptions.AnalyzerError(
                    'Planarization of the drawing has parallel segments around {}'.format(names[key]))
            data[names[key]] = neighbours

        embedding = nx.PlanarEmbedding()
        embedding.add_nodes_from(names.values())
        embedding.set_data(data)

        return cls(embedding, outer)

    # ==================================================================================================================
    # PROPERTIES
    # ==================================================================================================================

    @property
    def embedding(self):
        return self._embedding

    @property
    def outer(self):
        return self._outer

    @property
    def graph(self):
        g = nx.Graph()
        g.add_nodes_from(self._embedding.nodes())
        g.add_edges_from(self._embedding.edges())

        return g

    # ==================================================================================================================
    # FACES
    # ==================================================================================================================

    def faces(self):
        """
        Returns every face as the list of half-edges tracing it
        :return: list(list(tuple))
        """

        if self._faces is None:
            faces, index = list(), dict()
            for dart in self._embedding.edges():
                if dart in index:
                    continue
                face = list()
                current = dart
                while current not in index:
                    index[current] = len(faces)
                    face.append(current)
                    current = self._embedding.next_face_half_edge(*current)
                faces.append(face)
            self._faces, self._face_index = faces, index

        return self._faces

    def face_of(self, dart):
        self.faces()
        try:
            return self._faces[self._face_index[tuple(dart)]]
        except KeyError:
            raise exceptions.AnalyzerError('Unknown half-edge {}'.format(dart))

    def outer_face(self):
        return self.face_of(self._outer) if self._outer is not None else list()

    def face_containing(self, edges):
        """
        Returns a half-edge of a face whose boundary holds all the given edges. The outer face is tried first
        :param list(frozenset) edges: undirected edges
        :return: half-edge or None
        """

        faces = self.faces()
        if self._outer is not None:
            outer_index = self._face_index[self._outer]
            faces = [faces[outer_index]] + [face for index, face in enumerate(faces) if index != outer_index]
        wanted = set(edges)
        for face in faces:
            if wanted <= set(frozenset(dart) for dart in face):
                return next(dart for dart in face if frozenset(dart) in wanted)

        return None

    # ==================================================================================================================
    # SUBGRAPHS
    # ==================================================================================================================

    def check_path(self, path, closed=False):
        """
        Raises AnalyzerError when the sequence is not a simple path (or cycle) of the plane graph
        """

        path = list(path)
        if not path:
            raise exceptions.AnalyzerError('Empty path')
        for node in path:
            if node not in self._embedding:
                raise exceptions.AnalyzerError('Unknown vertex {!r}'.format(node))
        if len(set(path)) != len(path):
            raise exceptions.AnalyzerError('Path {} repeats a vertex'.format(path))
        if closed and len(path) < 3:
            raise exceptions.AnalyzerError('Cycle {} has fewer than 3 vertices'.format(path))
        for edge in path_edges(path, closed):
            a, b = tuple(edge)
            if not self._embedding.has_edge(a, b):
                raise exceptions.AnalyzerError('Vertices {!r} and {!r} are not adjacent'.format(a, b))

    def restrict(self, edges, nodes=(), outer=None):
        """
        Returns the plane subgraph formed by the given edges (plus isolated nodes) with the induced rotations
        :param set(frozenset) edges: undirected edges to keep
        :param list nodes: extra vertices to keep
        :param tuple outer: half-edge of the outer face of the subgraph
        :return: PlaneGraph
        """

        edges = set(edges)
        kept = set(nodes)
        for edge in edges:
            kept.update(edge)
        data = dict()
        for node in kept:
            data[node] = [
                other for other in self._embedding.neighbors_cw_order(node) if frozenset((node, other)) in edges]
        embedding = nx.PlanarEmbedding()
        embedding.add_nodes_from(kept)
        embedding.set_data(data)

        return PlaneGraph(embedding, outer)

    def disk(self, cycle):
        """
        Returns the vertices and edges drawn in the closed disk bounded by the cycle, that is, on the side of the cycle
        away from the outer face
        :param list cycle: vertices of the cycle in order
        :return: tuple(set, set(frozenset))
        """

        self.check_path(cycle, closed=True)
        if not nx.is_connected(self.graph):
            raise exceptions.AnalyzerError('Disk regions are only computed for connected plane graphs')

        faces = self.faces()
        cycle_edges = set(path_edges(cycle, closed=True))
        outside = set([self._face_index[self._outer]])
        pending = list(outside)
        while pending:
            face = faces[pending.pop()]
            for a, b in face:
                if frozenset((a, b)) in cycle_edges:
                    continue
                twin = self._face_index[(b, a)]
                if twin not in outside:
                    outside.add(twin)
                    pending.append(twin)

        nodes, edges = set(cycle), set(cycle_edges)
        for index, face in enumerate(faces):
            if index in outside:
                continue
            for a, b in face:
                nodes.update((a, b))
                edges.add(frozenset((a, b)))

        return nodes, edges
