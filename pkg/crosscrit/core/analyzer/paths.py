#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains Menger path counting and 1-nest depth
"""

from __future__ import print_function, division, absolute_import

import logging

import networkx as nx
from networkx.algorithms.connectivity import local_node_connectivity

from crosscrit.core import consts, exceptions, graph
from crosscrit.core.analyzer import plane

logger = logging.getLogger(consts.LOGGER_NAME)


def _skeleton_and_thickness(g, u, v):
    if isinstance(g, graph.WeightedMultigraph):
        if not g.has_vertex(u) or not g.has_vertex(v):
            raise exceptions.UnknownVertexError('Unknown vertex {} or {}'.format(u, v))
        edge = g.edge_between(u, v)
        return g.skeleton(), edge.thickness if edge is not None else 0

    if u not in g or v not in g:
        raise exceptions.AnalyzerError('Unknown vertex {!r} or {!r}'.format(u, v))
    if not g.has_edge(u, v):
        return g, 0

    return g, g.edges[u, v].get('thickness', 1)


def internally_disjoint_paths(g, u, v):
    """
    Returns a largest set of internally vertex-disjoint u-v paths. Every copy of a thick uv edge is its own path
    :param g: WeightedMultigraph or nx.Graph (edge attribute 'thickness' defaults to 1)
    :return: list(list)
    """

    if u == v:
        raise exceptions.AnalyzerError('Paths need two distinct end vertices')
    skeleton, direct = _skeleton_and_thickness(g, u, v)
    rest = nx.Graph(skeleton)
    if rest.has_edge(u, v):
        rest.remove_edge(u, v)

    paths = [[u, v] for _ in range(direct)]
    try:
        paths.extend(list(path) for path in nx.node_disjoint_paths(rest, u, v))
    except nx.NetworkXNoPath:
        pass

    return paths


def count_internally_disjoint_paths(g, u, v):
    """
    Returns the largest number of internally vertex-disjoint u-v paths. A t-thick uv edge contributes t paths
    :param g: WeightedMultigraph or nx.Graph
    :param u: vertex
    :param v: vertex
    :return: int
    """

    if u == v:
        raise exceptions.AnalyzerError('Paths need two distinct end vertices')
    skeleton, direct = _skeleton_and_thickness(g, u, v)
    rest = nx.Graph(skeleton)
    if rest.has_edge(u, v):
        rest.remove_edge(u, v)

    return direct + local_node_connectivity(rest, u, v)


# ======================================================================================================================
# NESTS
# ======================================================================================================================

def cycles_through(g, w, budget=consts.DEFAULT_CYCLE_BUDGET):
    """
    Enumerates every cycle through w once, as a vertex list starting at w.
    Raises CycleBudgetExceeded when more than budget cycles exist
    :param nx.Graph g: simple graph
    :param w: vertex
    :param int budget: largest number of cycles enumerated
    :return: list(list)
    """

    if w not in g:
        raise exceptions.AnalyzerError('Unknown vertex {!r}'.format(w))

    rank = dict((node, index) for index, node in enumerate(g.nodes()))
    cycles = list()
    path = [w]
    on_path = set(path)
    stack = [iter(g.neighbors(w))]
    while stack:
        other = next(stack[-1], None)
        if other is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if other == w and len(path) > 2:
            # each cycle is met in both directions
            if rank[path[1]] < rank[path[-1]]:
                cycles.append(list(path))
                if len(cycles) > budget:
                    raise exceptions.CycleBudgetExceeded(budget)
            continue
        if other in on_path:
            continue
        path.append(other)
        on_path.add(other)
        stack.append(iter(g.neighbors(other)))

    return cycles


def one_nest_depth(plane_graph, w, budget=consts.DEFAULT_CYCLE_BUDGET):
    """
    Returns the depth of the deepest 1-nest at w: cycles C1..Cm through w with every Ci drawn in the closed disk of
    Cj for i < j and any two of them meeting only in w
    :param PlaneGraph plane_graph: connected plane graph (a Drawing is converted through its planarization)
    :param w: vertex
    :param int budget: largest number of cycles enumerated
    :return: int
    """

    if not isinstance(plane_graph, plane.PlaneGraph):
        plane_graph = plane.PlaneGraph.from_drawing(plane_graph)
    cycles = cycles_through(plane_graph.graph, w, budget)
    if not cycles:
        return 0

    disks = [plane_graph.disk(cycle)[0] for cycle in cycles]
    nest = nx.DiGraph()
    nest.add_nodes_from(range(len(cycles)))
    for inner, inner_cycle in enumerate(cycles):
        others = set(inner_cycle) - set([w])
        for outer, outer_cycle in enumerate(cycles):
            if inner == outer or others & set(outer_cycle):
                continue
            if others <= disks[outer]:
                nest.add_edge(inner, outer)
    logger.debug('{} cycles through {!r}, {} nesting pairs'.format(len(cycles), w, nest.number_of_edges()))

    return nx.dag_longest_path_length(nest) + 1
