#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the edge insertion heuristic used to seed the crossing number solver.
A maximal planar subgraph is embedded by networkx; every remaining edge is routed along a cheapest path of the dual
graph, where crossing a segment of an edge of thickness t costs t times the thickness of the inserted edge. Edges are
then removed and reinserted one at a time while the weighted total goes down.
"""

from __future__ import print_function, division, absolute_import

import random
import logging
from collections import OrderedDict

import networkx as nx

from crosscrit.core import consts, exceptions
from crosscrit.core.drawing import drawing, planarize

logger = logging.getLogger(consts.LOGGER_NAME)

SOURCE = 'source'
TARGET = 'target'


class _Conflict(Exception):
    pass


class _Planarization(object):
    """
    Rotation system of a planarization under construction. Rotations list neighbours clockwise and a face continues
    from half-edge (a, b) with (b, c) where c precedes a in the rotation of b
    """

    def __init__(self, g, rotation, owner, paths, next_dummy=0):
        self._g = g
        self.rotation = rotation
        self.owner = owner
        self.paths = paths
        self._next_dummy = next_dummy

    @classmethod
    def from_embedding(cls, g, embedding, edge_ids):
        rotation = dict((node, list(embedding.neighbors_cw_order(node))) for node in embedding.nodes())
        owner, paths = dict(), OrderedDict()
        for edge_id in edge_ids:
            edge = g.edge(edge_id)
            start, end = drawing.vertex_key(edge.u), drawing.vertex_key(edge.v)
            owner[(start, end)] = owner[(end, start)] = edge_id
            paths[edge_id] = [start, end]

        return cls(g, rotation, owner, paths)

    def clone(self):
        return _Planarization(
            self._g, dict((node, list(neighbours)) for node, neighbours in self.rotation.items()), dict(self.owner),
            OrderedDict((edge_id, list(path)) for edge_id, path in self.paths.items()), self._next_dummy)

    def cost(self):
        total = 0
        for edge_id, path in self.paths.items():
            for node in path[1:-1]:
                other = [self.owner[(node, n)] for n in self.rotation[node] if self.owner[(node, n)] != edge_id][0]
                total += self._g.edge(edge_id).thickness * self._g.edge(other).thickness

        return total // 2

    def routes(self):
        return OrderedDict((edge.id, list(self.paths[edge.id][1:-1])) for edge in self._g.edges)

    def faces(self):
        face_of = dict()
        count = 0
        for node, neighbours in self.rotation.items():
            for neighbour in neighbours:
                half_edge = (node, neighbour)
                while half_edge not in face_of:
                    face_of[half_edge] = count
                    tail, head = half_edge
                    around = self.rotation[head]
                    half_edge = (head, around[around.index(tail) - 1])
                count += 1

        return face_of

    def insert(self, edge_id):
        edge = self._g.edge(edge_id)
        start, end = drawing.vertex_key(edge.u), drawing.vertex_key(edge.v)
        face_of = self.faces()

        dual = nx.Graph()
        for (a, b), face in face_of.items():
            other = face_of[(b, a)]
            if face == other:
                continue
            cost = edge.thickness * self._g.edge(self.owner[(a, b)]).thickness
            if dual.has_edge(face, other) and dual.edges[face, other]['weight'] <= cost:
                continue
            dual.add_edge(face, other, weight=cost, segment=(a, b))
        for neighbour in self.rotation[start]:
            dual.add_edge(SOURCE, face_of[(neighbour, start)], weight=0)
        for neighbour in self.rotation[end]:
            dual.add_edge(face_of[(neighbour, end)], TARGET, weight=0)

        faces = nx.dijkstra_path(dual, SOURCE, TARGET, weight='weight')[1:-1]
        nodes = [start] + [self._new_dummy() for _ in faces[1:]] + [end]
        first = next(n for n in self.rotation[start] if face_of[(n, start)] == faces[0])
        last = next(n for n in self.rotation[end] if face_of[(n, end)] == faces[-1])

        for index, (face, next_face) in enumerate(zip(faces, faces[1:])):
            a, b = dual.edges[face, next_face]['segment']
            if face_of[(a, b)] != face:
                a, b = b, a
            self._subdivide(a, b, nodes[index + 1], nodes[index], nodes[index + 2])

        self.rotation[start].insert(self.rotation[start].index(first), nodes[1])
        self.rotation[end].insert(self.rotation[end].index(last), nodes[-2])
        for node_a, node_b in zip(nodes, nodes[1:]):
            self.owner[(node_a, node_b)] = self.owner[(node_b, node_a)] = edge_id
        self.paths[edge_id] = nodes

    def remove(self, edge_id):
        nodes = self.paths.pop(edge_id)
        for node_a, node_b in zip(nodes, nodes[1:]):
            del self.owner[(node_a, node_b)], self.owner[(node_b, node_a)]
        self.rotation[nodes[0]].remove(nodes[1])
        self.rotation[nodes[-1]].remove(nodes[-2])
        for node in nodes[1:-1]:
            a, b = [n for n in self.rotation[node] if (node, n) in self.owner]
            if b in self.rotation[a]:
                raise _Conflict()
            other = self.owner.pop((node, a))
            for key in ((a, node), (node, b), (b, node)):
                del self.owner[key]
            self.rotation[a][self.rotation[a].index(node)] = b
            self.rotation[b][self.rotation[b].index(node)] = a
            self.owner[(a, b)] = self.owner[(b, a)] = other
            self.paths[other].remove(node)
            del self.rotation[node]

    def _new_dummy(self):
        self._next_dummy += 1
        return 'x', self._next_dummy

    def _subdivide(self, a, b, node, right, left):
        # right lies in the face of half-edge (a, b), left in the face of (b, a)
        edge_id = self.owner.pop((a, b))
        del self.owner[(b, a)]
        self.rotation[a][self.rotation[a].index(b)] = node
        self.rotation[b][self.rotation[b].index(a)] = node
        self.rotation[node] = [right, a, left, b]
        for end in (a, b):
            self.owner[(end, node)] = self.owner[(node, end)] = edge_id

        path = self.paths[edge_id]
        for index in range(len(path) - 1):
            if set(path[index:index + 2]) == set((a, b)):
                path.insert(index + 1, node)
                break


def _greedy_planarization(g, order):
    planar = nx.Graph()
    planar.add_nodes_from(drawing.vertex_key(vertex) for vertex in g.vertices)
    kept, rest = list(), list()
    for edge in order:
        start, end = drawing.vertex_key(edge.u), drawing.vertex_key(edge.v)
        planar.add_edge(start, end)
        if nx.check_planarity(planar)[0]:
            kept.append(edge.id)
        else:
            planar.remove_edge(start, end)
            rest.append(edge.id)

    _, embedding = nx.check_planarity(planar)
    planarization = _Planarization.from_embedding(g, embedding, kept)
    for edge_id in rest:
        planarization.insert(edge_id)

    return planarization


def _reinsert_edges(planarization, rounds):
    cost = planarization.cost()
    for _ in range(rounds):
        improved = False
        for edge_id in list(planarization.paths):
            if len(planarization.paths[edge_id]) == 2:
                continue
            candidate = planarization.clone()
            try:
                candidate.remove(edge_id)
            except _Conflict:
                continue
            candidate.insert(edge_id)
            candidate_cost = candidate.cost()
            if candidate_cost < cost:
                planarization, cost, improved = candidate, candidate_cost, True
        if not improved:
            break

    return planarization


def insertion_drawing(g, trials=consts.INSERTION_TRIALS, rounds=consts.INSERTION_ROUNDS, seed=0):
    """
    Returns a drawing of the graph found by planar subgraph edge insertion. Thick edges join the planar subgraph
    first; the first trial keeps the stored edge order and the others shuffle it
    :param WeightedMultigraph g: connected graph
    :param int trials: number of edge orders tried
    :param int rounds: reinsertion rounds per trial
    :param int seed: seed of the edge order shuffles
    :return: Drawing with the smallest weighted crossing count found
    """

    if g.num_vertices and not nx.is_connected(g.skeleton()):
        raise exceptions.DrawingError('Edge insertion needs a connected graph')

    rng = random.Random(seed)
    best, best_cost = None, None
    for trial in range(max(1, trials)):
        order = g.edges
        if trial:
            rng.shuffle(order)
        order.sort(key=lambda edge: -edge.thickness)
        planarization = _reinsert_edges(_greedy_planarization(g, order), rounds)
        cost = planarization.cost()
        if best_cost is None or cost < best_cost:
            best, best_cost = planarization, cost
        if best_cost == 0:
            break

    logger.debug('Edge insertion drew {} with {} weighted crossings'.format(g, best_cost))

    return planarize.build_drawing(g, best.routes())
