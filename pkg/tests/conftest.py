#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains shared fixtures for crosscrit tests
"""

import logging

import pytest
import networkx as nx

from crosscrit.core import consts, families, graph
from crosscrit.core.drawing import templates
from crosscrit.core.analyzer import plane


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch, tmp_path):
    monkeypatch.setenv(consts.LOG_DIR_ENV, str(tmp_path / 'logs'))
    monkeypatch.delenv(consts.THREADS_ENV, raising=False)


@pytest.fixture
def restore_logger():
    """
    Restores the crosscrit logger after a test that loads logging.ini
    """

    logger = logging.getLogger(consts.LOGGER_NAME)
    handlers, level, propagate = list(logger.handlers), logger.level, logger.propagate
    yield logger
    for handler in list(logger.handlers):
        if handler not in handlers:
            logger.removeHandler(handler)
            handler.close()
    logger.setLevel(level)
    logger.propagate = propagate


@pytest.fixture
def k4():
    return families.standard_graph('k4')


@pytest.fixture
def k5():
    return families.standard_graph('k5')


@pytest.fixture
def k33():
    return families.standard_graph('k33')


@pytest.fixture
def petersen():
    return families.standard_graph('petersen')


@pytest.fixture
def c3c3():
    return families.standard_graph('c3c3')


@pytest.fixture
def ccg13_2():
    return families.generate_ccg13k(2)


@pytest.fixture
def canonical_2():
    return templates.canonical_drawing(2)


@pytest.fixture
def weighted_path():
    """
    Path a - b - c with a 3-thick ab edge
    """

    builder = graph.GraphBuilder()
    builder.connect('a', 'b', 3)
    builder.connect('b', 'c')

    return builder.build()


# ======================================================================================================================
# PLANE FIXTURES
# ======================================================================================================================

def _plane_from(edges, positions):
    g = nx.Graph()
    g.add_nodes_from(positions)
    g.add_edges_from(edges)

    return g, plane.PlaneGraph.from_positions(g, positions)


@pytest.fixture
def fan_grid_fixture():
    """
    Returns a factory of straight line fan-grids with r rows and n rays.
    The center v sits below the grid, L and R run up both sides and Q1..Qn are the top vertices q1..qn
    """

    def _build(r, n):
        positions = {'v': ((n + 1) / 2.0, -1.0)}
        edges = list()
        for j in range(r + 1):
            positions['l{}'.format(j)] = (0.0, float(j))
            positions['r{}'.format(j)] = (float(n + 1), float(j))
            for i in range(1, n + 1):
                positions['p{}_{}'.format(i, j)] = (float(i), float(j))
        for i in range(1, n + 1):
            positions['q{}'.format(i)] = (float(i), float(r + 1))

        left = ['l{}'.format(j) for j in range(r + 1)]
        right = ['r{}'.format(j) for j in reversed(range(r + 1))]
        segments = [['q{}'.format(i)] for i in range(1, n + 1)]
        cycle = ['v'] + left + [segment[0] for segment in segments] + right
        edges.extend(zip(cycle, cycle[1:] + cycle[:1]))

        for i in range(1, n + 1):
            ray = ['v'] + ['p{}_{}'.format(i, j) for j in range(r + 1)] + ['q{}'.format(i)]
            edges.extend(zip(ray, ray[1:]))
        for j in range(1, r + 1):
            row = ['l{}'.format(j)] + ['p{}_{}'.format(i, j) for i in range(1, n + 1)] + ['r{}'.format(j)]
            edges.extend(zip(row, row[1:]))

        g, plane_graph = _plane_from(edges, positions)
        frame = {'center': 'v', 'cycle': cycle, 'left': left, 'segments': segments, 'right': right}

        return g, plane_graph, positions, frame

    return _build


@pytest.fixture
def nest_fixture():
    """
    Returns a factory of m cycles through w nested around each other. Cycle i is w, p_i, s_i, r_i
    """

    def _build(m):
        positions = {'w': (0.0, 0.0)}
        edges = list()
        for i in range(1, m + 1):
            p, s, r = 'p{}'.format(i), 's{}'.format(i), 'r{}'.format(i)
            positions[p] = (1.0, float(i))
            positions[s] = (float(i + 1), 0.0)
            positions[r] = (1.0, -float(i))
            edges.extend([('w', p), (p, s), (s, r), (r, 'w')])

        g, plane_graph = _plane_from(edges, positions)

        return g, plane_graph, positions

    return _build


@pytest.fixture
def theta_plane():
    positions = {'w': (0.0, 0.0), 'z': (2.0, 0.0), 'a': (1.0, 1.0), 'b': (1.0, 0.0), 'c': (1.0, -1.0)}
    edges = [('w', 'a'), ('a', 'z'), ('w', 'b'), ('b', 'z'), ('w', 'c'), ('c', 'z')]

    return _plane_from(edges, positions)[1]


@pytest.fixture
def comb_on_q():
    """
    Spine s0..s4 with five teeth on a Q path wrapping around it. Teeth at s0, s2 and s4 hang below the spine,
    teeth at s1 and s3 above it
    """

    positions = dict(('s{}'.format(i), (float(i), 0.0)) for i in range(5))
    positions.update({
        'ql0': (0.0, -2.0), 'ql2': (2.0, -2.0), 'ql4': (4.0, -2.0), 'qc1': (6.0, -2.0), 'qc2': (6.0, 2.0),
        'qu3': (3.0, 2.0), 'qu1': (1.0, 2.0)})
    q_path = ['ql0', 'ql2', 'ql4', 'qc1', 'qc2', 'qu3', 'qu1']
    spine = ['s{}'.format(i) for i in range(5)]
    teeth = ['ql0', 'qu1', 'ql2', 'qu3', 'ql4']
    edges = list(zip(q_path, q_path[1:])) + list(zip(spine, spine[1:]))
    edges.extend((tooth, 's{}'.format(index)) for index, tooth in enumerate(teeth))

    plane_graph = _plane_from(edges, positions)[1]

    return plane_graph, q_path, spine, teeth
