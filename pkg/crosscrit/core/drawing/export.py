#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains SVG and DOT exporters for drawings
"""

from __future__ import print_function, division, absolute_import

import io
import logging

import pydot
import networkx as nx
from matplotlib.figure import Figure

from crosscrit.core import consts, exceptions
from crosscrit.core.drawing import drawing

logger = logging.getLogger(consts.LOGGER_NAME)

VERTEX_COLOR = '#1f3a93'
CROSSING_COLOR = '#c0392b'
SEGMENT_COLOR = '#4d4d4d'
MARKER_SPACING = 0.012


def layout(d):
    """
    Returns straight line positions for every planarization node and segment midpoint
    :param Drawing d: valid drawing
    :return: dict(str, tuple(float, float))
    """

    if not d.graph.num_vertices:
        return dict()

    embedding = drawing.to_planar_embedding(d)

    return dict((node, (float(x), float(y))) for node, (x, y) in nx.planar_layout(embedding).items())


def _marker_offsets(weight, spacing=MARKER_SPACING):
    """
    Returns small offsets that spread the markers of one weighted crossing along a row
    """

    return [((j - (weight - 1) / 2.0) * spacing, 0.0) for j in range(weight)]


def export_svg(d, width=8.0, height=8.0):
    """
    Renders the planarization of the drawing as an SVG document. A crossing between edges of thickness t1 and t2 is
    drawn as t1 * t2 red crosses grouped around the crossing vertex, with ids 'crossing-<id>-<j>'; graph vertices
    use 'vertex-<id>'
    :param Drawing d: valid drawing
    :param float width: figure width in inches
    :param float height: figure height in inches
    :return: SVG text
    :rtype: str
    """

    verification = drawing.verify_drawing(d)
    if not verification:
        raise exceptions.InvalidDrawingError(verification.reason)

    figure = Figure(figsize=(width, height))
    axes = figure.add_subplot(1, 1, 1)
    axes.set_axis_off()
    axes.set_aspect('equal')

    positions = layout(d)
    g = d.graph
    for end, start, finish in d.segments():
        middle = positions['m{}.{}'.format(end.edge, end.segment)]
        xs = [positions[start][0], middle[0], positions[finish][0]]
        ys = [positions[start][1], middle[1], positions[finish][1]]
        axes.plot(xs, ys, color=SEGMENT_COLOR, linewidth=0.8 + 0.6 * g.edge(end.edge).thickness, zorder=1)

    for vertex, label in g.labels().items():
        x, y = positions[drawing.vertex_key(vertex)]
        axes.plot([x], [y], marker='o', markersize=9, color=VERTEX_COLOR, gid='vertex-{}'.format(vertex), zorder=2)
        axes.text(x, y, label if label is not None else str(vertex), fontsize=7, ha='center', va='bottom', zorder=3)

    for crossing_id, crossing in enumerate(d.crossings):
        x, y = positions[drawing.crossing_key(crossing_id)]
        for j, (dx, dy) in enumerate(_marker_offsets(g.edge(crossing.a).thickness * g.edge(crossing.b).thickness)):
            axes.plot(
                [x + dx], [y + dy], marker='X', markersize=6, color=CROSSING_COLOR, linestyle='None',
                gid='crossing-{}-{}'.format(crossing_id, j), zorder=4)

    output = io.BytesIO()
    figure.savefig(output, format='svg', metadata={'Date': None})

    return output.getvalue().decode('utf-8')


def export_dot(d):
    """
    Returns DOT text of the planarization. Crossing vertices are drawn as small red points
    :param Drawing d: valid drawing
    :return: str
    """

    verification = drawing.verify_drawing(d)
    if not verification:
        raise exceptions.InvalidDrawingError(verification.reason)

    g = d.graph
    dot = pydot.Dot(graph_type='graph')
    for vertex, label in g.labels().items():
        dot.add_node(pydot.Node(drawing.vertex_key(vertex), label='"{}"'.format(label if label is not None else vertex)))
    for crossing_id in range(len(d.crossings)):
        dot.add_node(pydot.Node(
            drawing.crossing_key(crossing_id), label='""', shape='point', color='red', width='0.08'))
    for end, start, finish in d.segments():
        dot.add_edge(pydot.Edge(
            start, finish, label='"{}"'.format(g.edge(end.edge).thickness),
            comment='"{}/{}"'.format(g.edge_name(end.edge), end.segment)))

    return dot.to_string()
