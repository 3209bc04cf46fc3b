#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for the drawing model and the configuration realizer
"""

import json
from collections import OrderedDict

import pytest

from crosscrit.core import exceptions, families, graph
from crosscrit.core.drawing import drawing, planarize


def _k5_one_crossing(k5):
    """
    Routes of K5 with the single crossing between edges 02 and 13
    """

    a = k5.edge_by_labels('0', '2').id
    b = k5.edge_by_labels('1', '3').id

    return OrderedDict([(a, ['X']), (b, ['X'])])


def test_planar_graph_draws_without_crossings(k4):
    d = planarize.build_drawing(k4, OrderedDict())
    assert drawing.verify_drawing(d)
    assert drawing.crossing_count(d).total == 0
    assert len(drawing.trace_faces(d)) == 4


def test_k5_needs_a_crossing(k5):
    ok, witness = planarize.configuration_is_realizable(k5, OrderedDict())
    assert not ok
    assert len(witness) == 10
    assert not planarize.is_planar(k5)

    d = planarize.build_drawing(k5, _k5_one_crossing(k5))
    assert drawing.verify_drawing(d)
    assert drawing.crossing_count(d).total == 1
    assert len(d.rotation['c0']) == 4


def test_unrealizable_configuration_raises(k5):
    with pytest.raises(exceptions.InvalidDrawingError) as exc:
        planarize.build_drawing(k5, OrderedDict())
    assert 'Kuratowski' in exc.value.diagnostic


def test_crossing_names_must_pair_two_edges(k5):
    a = k5.edge_by_labels('0', '2').id
    with pytest.raises(exceptions.InvalidDrawingError):
        planarize.build_drawing(k5, OrderedDict([(a, ['X'])]))
    with pytest.raises(exceptions.InvalidDrawingError):
        planarize.build_drawing(k5, OrderedDict([(a, ['X', 'X'])]))
    with pytest.raises(exceptions.InvalidDrawingError):
        planarize.build_drawing(k5, OrderedDict([(99, ['X'])]))


def test_routes_by_labels_reverses_against_stored_direction(k5):
    routes = planarize.routes_by_labels(k5, OrderedDict([(('2', '0'), ['P', 'Q'])]))
    assert list(routes.values()) == [['Q', 'P']]


def test_crossings_are_weighted_by_thickness(canonical_2):
    count = drawing.crossing_count(canonical_2)
    assert count.total == 13
    names = drawing.named_breakdown(canonical_2, count)
    assert names[('u1v4', 'u4v1')] == 4
    assert names[('u2v3', 'u3v2')] == 1
    assert sum(names.values()) == 13


def test_verify_detects_missing_crossing(canonical_2):
    broken = drawing.Drawing(canonical_2.graph, canonical_2.rotation, canonical_2.crossings[:-1])
    result = drawing.verify_drawing(broken)
    assert not result
    assert result.reason
    with pytest.raises(exceptions.InvalidDrawingError):
        drawing.crossing_count(broken)


def test_verify_detects_non_alternating_crossing(canonical_2):
    rotation = OrderedDict(canonical_2.rotation)
    ends = list(rotation['c0'])
    ends[1], ends[2] = ends[2], ends[1]
    rotation['c0'] = ends
    result = drawing.verify_drawing(drawing.Drawing(canonical_2.graph, rotation, canonical_2.crossings))
    assert not result
    assert 'alternating' in result.reason


def test_verify_detects_bad_vertex_rotation(canonical_2):
    rotation = OrderedDict(canonical_2.rotation)
    key = drawing.vertex_key(canonical_2.graph.vertex_by_label('x'))
    rotation[key] = list(rotation[key])[1:]
    result = drawing.verify_drawing(drawing.Drawing(canonical_2.graph, rotation, canonical_2.crossings))
    assert not result
    assert 'rotation at vertex x' in result.reason


def test_verify_detects_wrong_face_count(k4):
    d = planarize.build_drawing(k4, OrderedDict())
    rotation = OrderedDict(d.rotation)
    key = drawing.vertex_key(k4.vertex_by_label('0'))
    rotation[key] = [rotation[key][1], rotation[key][0], rotation[key][2]]
    result = drawing.verify_drawing(drawing.Drawing(k4, rotation, d.crossings))
    assert not result
    assert 'Euler' in result.reason


def test_remove_copy_of_thick_edge_keeps_routing(canonical_2):
    g = canonical_2.graph
    edge = g.edge_by_labels('u1', 'v4')
    reduced = drawing.remove_edge_copy(canonical_2, edge.id)
    assert reduced.crossings == canonical_2.crossings
    assert drawing.crossing_count(reduced).total == 9


def test_remove_last_copy_drops_its_crossings(canonical_2):
    g = canonical_2.graph
    edge = g.edge_by_labels('u2', 'v3')
    reduced = drawing.remove_edge_copy(canonical_2, edge.id)
    assert not reduced.graph.has_edge(edge.id)
    assert len(reduced.crossings) == len(canonical_2.crossings) - 3
    assert drawing.verify_drawing(reduced)
    assert drawing.crossing_count(reduced).total == 8


def test_apply_vertex_map_through_mirror(canonical_2):
    mirrored = drawing.apply_vertex_map(canonical_2, families.mirror_map(2))
    assert drawing.verify_drawing(mirrored)
    assert drawing.crossing_count(mirrored).total == 13


def test_apply_vertex_map_rejects_non_automorphisms(canonical_2):
    mapping = dict((label, label) for label in canonical_2.graph.labels().values())
    mapping['u1'], mapping['u2'] = 'u2', 'u1'
    with pytest.raises(exceptions.DrawingError):
        drawing.apply_vertex_map(canonical_2, mapping)


def test_json_text_is_stable(canonical_2):
    text = json.dumps(drawing.drawing_to_json(canonical_2), sort_keys=True)
    again = drawing.drawing_from_json(json.loads(text))
    assert json.dumps(drawing.drawing_to_json(again), sort_keys=True) == text
    assert drawing.crossing_count(again).total == 13


def test_malformed_drawing_data():
    with pytest.raises(exceptions.DrawingError):
        drawing.drawing_from_json({'graph': {'vertices': [], 'edges': []}})


def test_planar_embedding_of_drawing(canonical_2):
    embedding = drawing.to_planar_embedding(canonical_2)
    crossings = len(canonical_2.crossings)
    assert embedding.number_of_nodes() == 16 + crossings + 28 + 2 * crossings


def test_segments_of_thick_graph(weighted_path):
    d = planarize.build_drawing(weighted_path, OrderedDict())
    assert [start for _, start, _ in d.segments()] == ['v0', 'v1']
    assert graph.degree(weighted_path, 1) == 4
