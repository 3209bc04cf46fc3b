#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for the structural analyzer: thresholds, combs, paths, nests, fan-grids and C-bridges
"""

import random

import pytest
import networkx as nx

from crosscrit.core import consts, exceptions
from crosscrit.core.analyzer import bridges, combs, fangrid, paths, plane, thresholds


def _random_tree(rng, n):
    tree = nx.Graph()
    tree.add_node(0)
    for i in range(1, n):
        tree.add_edge(rng.randrange(i), i)

    return tree


# ======================================================================================================================
# THRESHOLDS
# ======================================================================================================================

def test_bound_leaves_threshold_values():
    assert thresholds.bound_leaves_threshold(3, 1, 2) == 3
    assert thresholds.bound_leaves_threshold(2, 2, 3) == 4
    assert thresholds.bound_leaves_threshold(5, 0, 9) == 1
    assert thresholds.bound_leaves_threshold(5, 3, 1) == 1
    for D in range(1, 6):
        for k in range(1, 8):
            assert thresholds.bound_leaves_threshold(D, 1, k) == 1 + (k - 1) * (D - 1)


def test_start_threshold():
    assert thresholds.start_threshold(2, 0, 1) == thresholds.bound_leaves_threshold(2, 1, 8) == 8


def test_extend_thresholds():
    values = thresholds.extend_thresholds(2, 1, 1, 1, 1)
    assert values.s1 == 16
    assert values.s2 == 32
    assert values.d(0) == 1
    assert values.d(2) == 15 ** 2
    assert values.d_s2 == 15 ** 32
    assert values.value == 15 ** 32 + 1


def test_extend_thresholds_refuses_huge_values():
    values = thresholds.extend_thresholds(2, 1, 1, 1, 1)
    with pytest.raises(exceptions.AnalyzerError):
        values.d(consts.MAX_THRESHOLD_DIGITS)
    with pytest.raises(exceptions.AnalyzerError):
        values.d(-1)


def test_richter_thomassen_bound():
    assert thresholds.richter_thomassen_bound(13) == 49
    assert thresholds.richter_thomassen_bound(2) == 21


def test_redraw_escape_pairs():
    for c in range(1, 13):
        assert thresholds.redraw_escape_pairs(c) == []
    assert thresholds.redraw_escape_pairs(13) == [(6, 2)]


@pytest.mark.parametrize('args', [(0, 1, 1), (2, -1, 1), (2, 1, 0)])
def test_threshold_arguments(args):
    with pytest.raises(exceptions.AnalyzerError):
        thresholds.bound_leaves_threshold(*args)


# ======================================================================================================================
# TREES AND COMBS
# ======================================================================================================================

def test_tree_measures():
    tree = nx.balanced_tree(2, 3)
    assert combs.binary_minor_depth(tree, 0) == 3
    assert combs.branching_depth(tree, 0) == 3
    assert len(combs.tree_leaves(tree, 0)) == 8
    assert combs.max_degree(tree) == 3

    assert combs.binary_minor_depth(nx.path_graph(6), 0) == 0
    assert combs.binary_minor_depth(nx.star_graph(5), 0) == 1


def test_random_trees_respect_leaf_bound():
    rng = random.Random(7)
    for _ in range(500):
        tree = _random_tree(rng, rng.randint(2, 40))
        leaves = combs.tree_leaves(tree, 0)
        D = combs.max_degree(tree)
        b = combs.binary_minor_depth(tree, 0)
        assert len(leaves) <= thresholds.bound_leaves_threshold(D, b, combs.branching_depth(tree, 0) + 1)


def test_random_trees_with_many_leaves_hold_combs():
    rng = random.Random(11)
    for _ in range(200):
        tree = _random_tree(rng, rng.randint(2, 40))
        D = combs.max_degree(tree)
        b = combs.binary_minor_depth(tree, 0)
        leaves = set(combs.tree_leaves(tree, 0))
        for k in (2, 3, 4):
            if len(leaves) <= thresholds.bound_leaves_threshold(D, b, k):
                continue
            comb = combs.find_comb(tree, 0, k)
            assert comb is not None
            assert len(comb.teeth) == k
            assert combs.verify_comb(tree, comb)
            assert set(comb.teeth) <= leaves


def test_caterpillar_comb():
    tree = nx.path_graph(5)
    for index, spine_vertex in enumerate((1, 2, 3)):
        tree.add_edge(spine_vertex, 'a{}'.format(index))
    comb = combs.find_comb(tree, 0, 3)
    assert len(comb.teeth) == 3
    assert combs.verify_comb(tree, comb)


def test_trees_without_combs():
    assert combs.find_comb(nx.path_graph(4), 0, 2) is None
    assert combs.find_comb(nx.star_graph(3), 0, 2) is None
    with pytest.raises(exceptions.AnalyzerError):
        combs.find_comb(nx.path_graph(4), 0, 0)
    with pytest.raises(exceptions.AnalyzerError):
        combs.find_comb(nx.cycle_graph(4), 0, 1)


def test_verify_comb_rejects_shared_tooth_paths():
    tree = nx.star_graph(3)
    comb = combs.Comb((0,), (1, 2), ((1, 0), (2, 0)))
    assert not combs.verify_comb(tree, comb)


def test_q_clean_subcomb(comb_on_q):
    plane_graph, q_path, spine, teeth = comb_on_q
    comb = combs.Comb(tuple(spine), tuple(teeth), tuple((tooth, spine[i]) for i, tooth in enumerate(teeth)))
    assert not combs.is_q_clean(plane_graph, q_path, comb)

    clean = combs.q_clean_subcomb(plane_graph, q_path, comb, 2)
    assert len(clean.teeth) == 2
    assert combs.verify_comb(plane_graph.graph, clean)
    assert combs.is_q_clean(plane_graph, q_path, clean)
    assert combs.q_clean_subcomb(plane_graph, q_path, clean, 2) == clean
    assert combs.q_clean_subcomb(plane_graph, q_path, clean, 3) is None


# ======================================================================================================================
# PATHS AND NESTS
# ======================================================================================================================

def test_internally_disjoint_path_counts(k4, k33, ccg13_2):
    assert paths.count_internally_disjoint_paths(k4, 0, 1) == 3
    a1, b1 = k33.vertex_by_label('a1'), k33.vertex_by_label('b1')
    assert paths.count_internally_disjoint_paths(k33, a1, b1) == 3

    x, u1 = ccg13_2.vertex_by_label('x'), ccg13_2.vertex_by_label('u1')
    found = paths.internally_disjoint_paths(ccg13_2, x, u1)
    assert len(found) == paths.count_internally_disjoint_paths(ccg13_2, x, u1) == 9
    assert found.count([x, u1]) == 7


def test_paths_need_distinct_ends(k4):
    with pytest.raises(exceptions.AnalyzerError):
        paths.count_internally_disjoint_paths(k4, 0, 0)
    with pytest.raises(exceptions.AnalyzerError):
        paths.internally_disjoint_paths(nx.path_graph(3), 'a', 0)


def test_plane_faces():
    g = nx.cycle_graph(4)
    g.add_edge(0, 2)
    positions = {0: (0.0, 0.0), 1: (1.0, 0.0), 2: (1.0, 1.0), 3: (0.0, 1.0)}
    plane_graph = plane.PlaneGraph.from_positions(g, positions)
    assert len(plane_graph.faces()) == 3
    assert len(plane_graph.outer_face()) == 4


def test_plane_from_graph_needs_planarity():
    assert len(plane.PlaneGraph.from_graph(nx.complete_graph(4)).faces()) == 4
    with pytest.raises(exceptions.AnalyzerError):
        plane.PlaneGraph.from_graph(nx.complete_graph(5))


def test_plane_from_drawing(canonical_2):
    plane_graph = plane.PlaneGraph.from_drawing(canonical_2)
    g = plane_graph.graph
    assert g.number_of_nodes() == 16 + 6
    assert g.number_of_edges() == 28 + 2 * 6
    assert len(plane_graph.faces()) == 40 - 22 + 2
    assert plane.crossing_name(0) in g


@pytest.mark.parametrize('m', [1, 2, 4])
def test_nest_depth(nest_fixture, m):
    _, plane_graph, _ = nest_fixture(m)
    assert paths.one_nest_depth(plane_graph, 'w') == m


def test_theta_and_tree_nests(theta_plane):
    assert paths.one_nest_depth(theta_plane, 'w') == 1
    assert len(paths.cycles_through(theta_plane.graph, 'w')) == 3

    tree = plane.PlaneGraph.from_graph(nx.path_graph(3))
    assert paths.one_nest_depth(tree, 1) == 0


def test_cycle_budget(nest_fixture):
    g, plane_graph, _ = nest_fixture(3)
    with pytest.raises(exceptions.CycleBudgetExceeded):
        paths.one_nest_depth(plane_graph, 'w', budget=2)
    assert len(paths.cycles_through(g, 'w', budget=3)) == 3


# ======================================================================================================================
# FAN-GRIDS
# ======================================================================================================================

@pytest.mark.parametrize('r, n', [(2, 3), (2, 2), (1, 4)])
def test_fan_grid_is_found(fan_grid_fixture, r, n):
    g, plane_graph, _, frame = fan_grid_fixture(r, n)
    grid = fangrid.find_fan_grid_paths(plane_graph, **frame)
    assert len(grid.rays) == n
    assert len(grid.rows) == r
    assert fangrid.verify_fan_grid(plane_graph, grid)

    rays, rows = fangrid.fan_grid_path_systems(grid)
    assert fangrid.path_systems_certificate(g, rays, rows).width == min(r, n)


def test_fan_grid_rows_avoid_the_center(fan_grid_fixture):
    _, plane_graph, _, frame = fan_grid_fixture(0, 2)
    rays = [('v', 'p{}_0'.format(i), 'q{}'.format(i)) for i in (1, 2)]
    candidate = fangrid.FanGrid(
        frame['center'], frame['cycle'], frame['left'], frame['segments'], frame['right'], rays, [('l0', 'v', 'r0')])
    result = fangrid.verify_fan_grid(plane_graph, candidate)
    assert not result
    assert 'center' in result.reason


def test_fan_grid_needs_explicit_paths(fan_grid_fixture):
    _, plane_graph, _, frame = fan_grid_fixture(1, 2)
    candidate = fangrid.FanGrid(
        frame['center'], frame['cycle'], frame['left'], frame['segments'], frame['right'], None, None)
    with pytest.raises(exceptions.AnalyzerError):
        fangrid.verify_fan_grid(plane_graph, candidate)


def test_path_systems_certificate_failures():
    g = nx.grid_2d_graph(3, 3)
    rows = [[(i, j) for j in range(3)] for i in range(3)]
    columns = [[(i, j) for i in range(3)] for j in range(3)]
    assert fangrid.path_systems_certificate(g, rows, columns).width == 3

    certificate = fangrid.path_systems_certificate(g, rows[:1], [[(2, 0), (2, 1)]])
    assert certificate.width == 0
    assert 'misses' in certificate.reason
    assert fangrid.path_systems_certificate(g, [rows[0], rows[0]], columns).width == 0
    assert fangrid.path_systems_certificate(g, [[(0, 0), (1, 1)]], columns).width == 0


# ======================================================================================================================
# C-BRIDGES
# ======================================================================================================================

def test_c_bridge_chain_lengths():
    g = nx.cycle_graph(8)
    g.add_edges_from([(3, 5), (1, 6), ('h', 6), ('h', 7)])
    cycle = list(range(8))
    segments = [[0, 1], [2, 3], [4, 5], [6, 7]]

    decomposition = bridges.c_bridge_decomposition(g, cycle, segments)
    lengths = dict((bridge.J, length) for bridge, length in zip(decomposition.bridges, decomposition.chain_lengths))
    assert lengths == {(2, 3): 1, (4,): 1, (1, 4): 2}

    data = bridges.decomposition_to_dict(decomposition)
    assert len(data['bridges']) == 3
    assert len(data['order']) == 2


def test_bridge_order_on_subsets():
    wide = bridges.CBridge(('a',), (), (), (1, 2, 3))
    narrow = bridges.CBridge(('b',), (), (), (1, 3))
    assert bridges.precedes(wide, narrow)
    assert not bridges.precedes(narrow, wide)
    assert not bridges.precedes(bridges.CBridge(('c',), (), (), ()), narrow)


def test_c_bridges_reject_foreign_segments():
    with pytest.raises(exceptions.AnalyzerError):
        bridges.c_bridges(nx.cycle_graph(4), [0, 1, 2, 3], [[0, 9]])
