#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for SVG and DOT exporters
"""

import pytest

from crosscrit.core import consts, exceptions
from crosscrit.core.drawing import drawing, export, templates


def test_svg_marks_every_crossing(canonical_2):
    svg = export.export_svg(canonical_2)
    assert '<svg' in svg
    assert svg.count('id="crossing-') == 13
    for crossing_id, crossing in enumerate(canonical_2.crossings):
        weight = canonical_2.graph.edge(crossing.a).thickness * canonical_2.graph.edge(crossing.b).thickness
        assert 'id="crossing-{}-{}"'.format(crossing_id, weight - 1) in svg
        assert 'id="crossing-{}-{}"'.format(crossing_id, weight) not in svg
    assert 'vertex-0' in svg


def test_svg_of_simple_drawing_has_one_marker_per_crossing():
    d = templates.template_drawing(consts.FIG4B, 2)
    svg = export.export_svg(d)
    assert svg.count('id="crossing-') == drawing.crossing_count(d).total == 16


def test_dot_has_point_crossings(canonical_2):
    dot = export.export_dot(canonical_2)
    assert dot.startswith('graph')
    assert 'c0' in dot
    assert 'point' in dot


def test_layout_places_every_node(canonical_2):
    positions = export.layout(canonical_2)
    crossings = len(canonical_2.crossings)
    assert crossings == 6
    assert len(positions) == 16 + crossings + 28 + 2 * crossings


def test_invalid_drawing_is_not_exported(canonical_2):
    broken = drawing.Drawing(canonical_2.graph, canonical_2.rotation, canonical_2.crossings[:-1])
    with pytest.raises(exceptions.InvalidDrawingError):
        export.export_svg(broken)
    with pytest.raises(exceptions.InvalidDrawingError):
        export.export_dot(broken)
