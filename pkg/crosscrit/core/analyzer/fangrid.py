#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains fan-grid verification and the two path system obstruction
"""

from __future__ import print_function, division, absolute_import

import logging
from collections import namedtuple

import networkx as nx

from crosscrit.core import consts, exceptions
from crosscrit.core.drawing import drawing
from crosscrit.core.analyzer import plane

logger = logging.getLogger(consts.LOGGER_NAME)

# cycle starts at the center; left, segments and right split the rest of the cycle in order
FanGrid = namedtuple('FanGrid', ['center', 'cycle', 'left', 'segments', 'right', 'rays', 'rows'])

PathSystemCertificate = namedtuple('PathSystemCertificate', ['width', 'reason'])


def _boundary(fan_grid):
    boundary = list(fan_grid.left)
    for segment in fan_grid.segments:
        boundary.extend(segment)
    boundary.extend(fan_grid.right)

    return boundary


def _check_references(plane_graph, fan_grid):
    plane_graph.check_path(fan_grid.cycle, closed=True)
    if fan_grid.cycle[0] != fan_grid.center:
        raise exceptions.AnalyzerError('Fan-grid cycle must start at its center {!r}'.format(fan_grid.center))
    for part in [fan_grid.left, fan_grid.right] + list(fan_grid.segments):
        if not part:
            raise exceptions.AnalyzerError('Fan-grid boundary paths must be non empty')
        plane_graph.check_path(part)
    for path in list(fan_grid.rays or ()) + list(fan_grid.rows or ()):
        plane_graph.check_path(path)


def _inside(nodes, edges, path):
    return set(path) <= nodes and set(plane.path_edges(path)) <= edges


def verify_fan_grid(plane_graph, fan_grid):
    """
    Checks a fan-grid candidate: the center lies on the outer face, the cycle minus the center is the concatenation of
    L, Q1..Qn and R, the rays are internally disjoint paths from the center to their own Q inside the closed disk of
    the cycle, and the rows are vertex-disjoint L-R paths inside the disk that avoid the Q paths and the center
    :param PlaneGraph plane_graph: plane graph
    :param FanGrid fan_grid: candidate with explicit rays and rows
    :return: VerificationResult
    """

    _check_references(plane_graph, fan_grid)
    if fan_grid.rays is None or fan_grid.rows is None:
        raise exceptions.AnalyzerError('Fan-grid candidate needs explicit rays and rows; use find_fan_grid_paths')

    center = fan_grid.center
    outer_nodes = set(node for half_edge in plane_graph.outer_face() for node in half_edge)
    if center not in outer_nodes:
        return drawing.VerificationResult(False, 'center {!r} is not on the outer face'.format(center))

    rest = list(fan_grid.cycle[1:])
    boundary = _boundary(fan_grid)
    if boundary != rest and boundary != list(reversed(rest)):
        return drawing.VerificationResult(False, 'L, Q1..Qn, R do not split the cycle minus the center')

    nodes, edges = plane_graph.disk(fan_grid.cycle)
    if len(fan_grid.rays) != len(fan_grid.segments):
        return drawing.VerificationResult(False, 'expected one ray per Q path')

    used = set()
    for index, (ray, segment) in enumerate(zip(fan_grid.rays, fan_grid.segments)):
        if len(ray) < 2 or ray[0] != center or ray[-1] not in segment:
            return drawing.VerificationResult(False, 'ray {} must join the center to Q{}'.format(index + 1, index + 1))
        if not _inside(nodes, edges, ray):
            return drawing.VerificationResult(False, 'ray {} leaves the disk of the cycle'.format(index + 1))
        if used & set(ray[1:]):
            return drawing.VerificationResult(False, 'rays are not internally vertex-disjoint')
        used.update(ray[1:])

    q_nodes = set()
    for segment in fan_grid.segments:
        q_nodes.update(segment)
    left, right = set(fan_grid.left), set(fan_grid.right)
    used = set()
    for index, row in enumerate(fan_grid.rows):
        if row[0] not in left or row[-1] not in right:
            return drawing.VerificationResult(False, 'row {} does not join L to R'.format(index + 1))
        if not _inside(nodes, edges, row):
            return drawing.VerificationResult(False, 'row {} leaves the disk of the cycle'.format(index + 1))
        if q_nodes & set(row) or center in row:
            return drawing.VerificationResult(False, 'row {} meets a Q path or the center'.format(index + 1))
        if used & set(row):
            return drawing.VerificationResult(False, 'rows are not vertex-disjoint')
        used.update(row)

    return drawing.VerificationResult(True)


def _disk_graph(plane_graph, cycle):
    nodes, edges = plane_graph.disk(cycle)
    h = nx.Graph()
    h.add_nodes_from(nodes)
    h.add_edges_from(tuple(edge) for edge in edges)

    return h


def find_fan_grid_paths(plane_graph, center, cycle, left, segments, right):
    """
    Fills in rays and rows of a fan-grid frame with vertex-disjoint path searches inside the disk of the cycle.
    Rays is None when some Q path cannot get its own ray; rows holds as many rows as exist
    :return: FanGrid
    """

    frame = FanGrid(center, tuple(cycle), tuple(left), tuple(tuple(s) for s in segments), tuple(right), None, None)
    _check_references(plane_graph, frame)
    h = _disk_graph(plane_graph, cycle)

    source, sink = ('source',), ('sink',)
    rays_graph = h.to_directed()
    for index, segment in enumerate(frame.segments):
        port = ('q', index)
        rays_graph.add_edges_from((node, port) for node in segment)
        rays_graph.add_edge(port, sink)
    rays = None
    try:
        found = list(nx.node_disjoint_paths(rays_graph, center, sink))
    except nx.NetworkXNoPath:
        found = list()
    if len(found) == len(frame.segments):
        rays = [None] * len(found)
        for path in found:
            rays[path[-2][1]] = tuple(path[:-2])

    q_nodes = set(node for segment in frame.segments for node in segment)
    rows_graph = h.subgraph(set(h.nodes()) - q_nodes - set([center])).to_directed()
    rows_graph.add_edges_from((source, node) for node in frame.left if node in rows_graph)
    rows_graph.add_edges_from((node, sink) for node in frame.right if node in rows_graph)
    rows = list()
    if source in rows_graph and sink in rows_graph:
        try:
            rows = [tuple(path[1:-1]) for path in nx.node_disjoint_paths(rows_graph, source, sink)]
        except nx.NetworkXNoPath:
            rows = list()

    return frame._replace(rays=rays, rows=[_trim_row(row, frame.left, frame.right) for row in rows])


def _trim_row(row, left, right):
    """
    Shortens a row to its last L vertex and its first R vertex after it
    """

    left, right = set(left), set(right)
    start = max(index for index, node in enumerate(row) if node in left)
    end = min(index for index, node in enumerate(row) if node in right and index >= start)

    return tuple(row[start:end + 1])


# ======================================================================================================================
# PATH SYSTEMS
# ======================================================================================================================

def path_systems_certificate(g, first, second):
    """
    Checks the two path system obstruction: both systems consist of pairwise vertex-disjoint paths of g and every
    path of one system meets every path of the other. Such a pair certifies path-width at least the size of the
    smaller system
    :param nx.Graph g: graph
    :param list first: paths as vertex lists
    :param list second: paths as vertex lists
    :return: PathSystemCertificate whose width is 0 when the check fails
    """

    for name, system in (('first', first), ('second', second)):
        used = set()
        for path in system:
            if not path or any(node not in g for node in path) or len(set(path)) != len(path):
                return PathSystemCertificate(0, '{} system holds an invalid path {}'.format(name, list(path)))
            if not all(g.has_edge(a, b) for a, b in zip(path, path[1:])):
                return PathSystemCertificate(0, '{} system holds a non path {}'.format(name, list(path)))
            if used & set(path):
                return PathSystemCertificate(0, '{} system paths are not vertex-disjoint'.format(name))
            used.update(path)

    for index_a, path_a in enumerate(first):
        for index_b, path_b in enumerate(second):
            if not set(path_a) & set(path_b):
                return PathSystemCertificate(
                    0, 'path {} of the first system misses path {} of the second'.format(index_a, index_b))

    return PathSystemCertificate(min(len(first), len(second)), '')


def fan_grid_path_systems(fan_grid):
    """
    Returns the rays without the center and the rows of a fan-grid as two path systems
    :param FanGrid fan_grid: fan-grid with explicit rays and rows
    :return: tuple(list, list)
    """

    if fan_grid.rays is None or fan_grid.rows is None:
        raise exceptions.AnalyzerError('Fan-grid has no explicit rays and rows')

    return [list(ray[1:]) for ray in fan_grid.rays], [list(row) for row in fan_grid.rows]
