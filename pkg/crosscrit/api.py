#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains crosscrit API implementation
"""

from __future__ import print_function, division, absolute_import

import logging
from collections import OrderedDict

import networkx as nx

from crosscrit.core import consts, exceptions, utils, graph, families, solver
from crosscrit.core.drawing import drawing, templates, contraction, export
from crosscrit.core.analyzer import plane, thresholds, combs, fangrid, bridges, paths

logger = logging.getLogger(consts.LOGGER_NAME)

STANDARD_GRAPHS = ('k4', 'k5', 'k6', 'k33', 'petersen', 'c3c3', 'k33zip')


# ======================================================================================================================
# GRAPHS
# ======================================================================================================================

def generate(family, k=None, c=None, d=None, i=None):
    """
    Generates a family member or a standard graph

    :param str family: ccg13, ccgi13, gcd, gcdi or one of the standard graph names
    :param int k: number of wedges (ccg13, ccgi13)
    :param int c: crossing number (gcd, gcdi)
    :param int d: degree (gcd, gcdi)
    :param int i: number of expanded blocks (gcdi)
    :return: WeightedMultigraph
    :example:
    >>> generate('ccg13', k=2).num_vertices
    16
    """

    name = family.lower()
    if name in STANDARD_GRAPHS:
        return families.standard_graph(name)

    tag = name.upper()
    if tag not in consts.FAMILIES:
        raise exceptions.FamilyParameterError('Unknown family: {}'.format(family))
    if tag in (consts.CCG13, consts.CCGI13):
        if k is None:
            raise exceptions.FamilyParameterError('{} needs --k'.format(name))
        return families.generate(families.FamilySpec(tag, k))
    if c is None or d is None:
        raise exceptions.FamilyParameterError('{} needs --c and --d'.format(name))
    if tag == consts.GCDI and i is None:
        raise exceptions.FamilyParameterError('gcdi needs --i')

    return families.generate(families.FamilySpec(tag, d, c, i))


def load_graph(file_path):
    """
    Loads a graph JSON file
    :param str file_path: path of the file
    :return: WeightedMultigraph
    """

    return graph.graph_from_json(_read(file_path))


def load_drawing(file_path):
    """
    Loads a drawing JSON file
    :param str file_path: path of the file
    :return: Drawing
    """

    return drawing.drawing_from_json(_read(file_path))


def _read(file_path):
    try:
        data = utils.read_json(file_path)
    except (IOError, OSError, ValueError) as exc:
        raise exceptions.GraphError('Could not read {}: {}'.format(file_path, exc))
    if data is None:
        raise exceptions.GraphError('File {} is empty'.format(file_path))

    return data


# ======================================================================================================================
# DRAWINGS
# ======================================================================================================================

def draw(figure, k, i=None, mirror=False):
    """
    Builds a figure template drawing of ccg13k (ccgi13k for the expanded figure)
    :param str figure: figure tag, case insensitive
    :param int k: number of wedges
    :param int i: wedge index of the wedge dependent figures
    :param bool mirror: whether to mirror the drawing through the u/v symmetry
    :return: Drawing
    """

    return templates.template_drawing(figure.upper(), k, i=i, mirror=mirror)


def count(d):
    """
    Returns the weighted crossing total of a valid drawing with its per pair breakdown
    :param Drawing d: drawing
    :return: dict
    """

    total = drawing.crossing_count(d)
    names = drawing.named_breakdown(d, total)
    data = OrderedDict()
    data['total'] = total.total
    data['pairs'] = [
        OrderedDict([('a', pair.a), ('b', pair.b), ('names', list(name)), ('count', pair.count)])
        for pair, name in zip(total.pairs, names)]

    return data


def verify(d):
    """
    Verifies a drawing and returns the report with its crossing total when valid
    :param Drawing d: drawing
    :return: dict
    """

    result = drawing.verify_drawing(d)
    data = OrderedDict()
    data['ok'] = result.ok
    data['reason'] = result.reason
    data['total'] = drawing.crossing_count(d, verify=False).total if result else None

    return data


def contract(d, i):
    return contraction.wedge_contraction(d, i)


def render(d, fmt):
    """
    Renders a drawing in the given format
    :param Drawing d: drawing
    :param str fmt: json, svg or dot
    :return: JSON data for json, text otherwise
    """

    if fmt == 'json':
        return drawing.drawing_to_json(d)
    if fmt == 'svg':
        return export.export_svg(d)
    if fmt == 'dot':
        return export.export_dot(d)

    raise exceptions.DrawingError('Unknown drawing format: {}'.format(fmt))


def ccg13_certificate(k, threads=None):
    return templates.criticality_certificate(k, threads=threads)


# ======================================================================================================================
# SOLVER
# ======================================================================================================================

def make_budget(nodes=None, timeout_s=None, upper_bound=None, heuristic=True):
    return solver.SolveBudget(
        nodes=nodes or consts.DEFAULT_NODE_LIMIT, time_s=timeout_s or consts.DEFAULT_TIME_LIMIT,
        upper_bound=upper_bound, heuristic=heuristic)


def solve(g, nodes=None, timeout_s=None, upper_bound=None, decide=None, heuristic=True):
    """
    Computes the crossing number of a graph, or decides cr <= decide when given
    :param WeightedMultigraph g: connected graph
    :param int nodes: node limit
    :param float timeout_s: time limit in seconds
    :param Drawing upper_bound: drawing seeding the search
    :param int decide: decision level
    :param bool heuristic: seed the search with an edge insertion drawing when no upper bound is given
    :return: dict
    """

    budget = make_budget(nodes, timeout_s, upper_bound, heuristic)
    if decide is not None:
        result = solver.cr_decision(g, decide, budget)
        data = OrderedDict()
        data['status'] = result.status
        data['k'] = decide
        data['nodes'] = result.nodes
        data['elapsed'] = round(result.elapsed, 3)
        data['witness'] = result.witness.to_dict() if result.witness is not None else None
        return data

    return solver.cr_exact(g, budget).to_dict()


def check_criticality(g, c, nodes=None, timeout_s=None, threads=None, heuristic=True):
    return solver.criticality_check(g, c, make_budget(nodes, timeout_s, heuristic=heuristic), threads=threads)


# ======================================================================================================================
# ANALYZER
# ======================================================================================================================

def threshold(kind, D=None, b=None, k=None, m=None, t=None, c=None):
    """
    Evaluates one of the threshold functions
    :param str kind: boundleaves, start, extend, rt or redraw
    :return: dict
    """

    def _need(**values):
        missing = [name for name, value in values.items() if value is None]
        if missing:
            raise exceptions.AnalyzerError('{} needs {}'.format(kind, ', '.join('--' + name for name in sorted(missing))))

    data = OrderedDict([('kind', kind)])
    if kind == 'boundleaves':
        _need(D=D, b=b, k=k)
        data['value'] = thresholds.bound_leaves_threshold(D, b, k)
    elif kind == 'start':
        _need(D=D, b=b, k=k)
        data['value'] = thresholds.start_threshold(D, b, k)
    elif kind == 'extend':
        _need(D=D, b=b, m=m, k=k, t=t)
        values = thresholds.extend_thresholds(D, b, m, k, t)
        data['s1'] = values.s1
        data['s2'] = values.s2
        data['d_s2'] = values.d_s2
        data['value'] = values.value
    elif kind == 'rt':
        _need(c=c)
        data['value'] = thresholds.richter_thomassen_bound(c)
    elif kind == 'redraw':
        _need(c=c)
        data['value'] = [list(pair) for pair in thresholds.redraw_escape_pairs(c)]
    else:
        raise exceptions.AnalyzerError('Unknown threshold: {}'.format(kind))

    return data


def _tree(data):
    tree = nx.Graph()
    tree.add_nodes_from(data.get('nodes', ()))
    tree.add_edges_from(tuple(edge) for edge in data.get('edges', ()))
    if 'root' not in data:
        raise exceptions.AnalyzerError('Tree input needs a root')

    return tree, data['root']


def _plane(data):
    """
    Builds a plane graph from a drawing, from straight line positions or from a planar edge list
    """

    outer = tuple(data['outer']) if data.get('outer') else None
    if 'drawing' in data:
        return plane.PlaneGraph.from_drawing(drawing.drawing_from_json(data['drawing']), outer)

    g = nx.Graph()
    g.add_nodes_from(data.get('nodes', ()))
    g.add_edges_from(tuple(edge) for edge in data.get('edges', ()))
    if 'positions' in data:
        positions = dict((node, tuple(data['positions'][str(node)])) for node in g.nodes())
        return plane.PlaneGraph.from_positions(g, positions)

    return plane.PlaneGraph.from_graph(g, outer)


def _comb_to_dict(comb):
    if comb is None:
        return None

    return OrderedDict([
        ('spine', list(comb.spine)), ('teeth', list(comb.teeth)),
        ('tooth_paths', [list(path) for path in comb.tooth_paths])])


def analyze(kind, data):
    """
    Runs a structural analysis over JSON input data. A fangrid input that lists its rays (and rows) is checked as
    given; otherwise rays and rows are searched for
    :param str kind: depth, comb, paths, nest, fangrid or bridges
    :param dict data: analysis input (see docs/formats.md)
    :return: dict
    """

    result = OrderedDict([('kind', kind)])
    if kind == 'depth':
        tree, root = _tree(data)
        result['b'] = combs.binary_minor_depth(tree, root)
        result['leaves'] = len(combs.tree_leaves(tree, root))
        result['max_degree'] = combs.max_degree(tree)
        result['branching'] = combs.branching_depth(tree, root)
    elif kind == 'comb':
        tree, root = _tree(data)
        result['comb'] = _comb_to_dict(combs.find_comb(tree, root, int(data.get('k', 1))))
    elif kind == 'paths':
        g = graph.graph_from_json(data['graph'])
        u, v = g.vertex_by_label(data['u']), g.vertex_by_label(data['v'])
        found = paths.internally_disjoint_paths(g, u, v)
        result['count'] = len(found)
        result['paths'] = [[g.label(vertex) for vertex in path] for path in found]
    elif kind == 'nest':
        result['depth'] = paths.one_nest_depth(
            _plane(data), data['w'], int(data.get('budget', consts.DEFAULT_CYCLE_BUDGET)))
    elif kind == 'fangrid' and 'rays' in data:
        plane_graph = _plane(data)
        candidate = fangrid.FanGrid(
            data['center'], tuple(data['cycle']), tuple(data['left']), tuple(tuple(s) for s in data['segments']),
            tuple(data['right']), tuple(tuple(ray) for ray in data['rays']),
            tuple(tuple(row) for row in data.get('rows', ())))
        verification = fangrid.verify_fan_grid(plane_graph, candidate)
        result['rays'] = [list(ray) for ray in candidate.rays]
        result['rows'] = [list(row) for row in candidate.rows]
        result['ok'] = verification.ok
        result['reason'] = verification.reason
    elif kind == 'fangrid':
        plane_graph = _plane(data)
        found = fangrid.find_fan_grid_paths(
            plane_graph, data['center'], data['cycle'], data['left'], data['segments'], data['right'])
        result['rays'] = [list(ray) for ray in found.rays] if found.rays is not None else None
        result['rows'] = [list(row) for row in found.rows]
        if found.rays is not None:
            verification = fangrid.verify_fan_grid(plane_graph, found)
            certificate = fangrid.path_systems_certificate(
                plane_graph.graph, *fangrid.fan_grid_path_systems(found))
            result['ok'] = verification.ok
            result['path_width_lower_bound'] = certificate.width
        else:
            result['ok'] = False
            result['path_width_lower_bound'] = 0
    elif kind == 'bridges':
        decomposition = bridges.c_bridge_decomposition(_plane(data).graph, data['cycle'], data['segments'])
        result.update(bridges.decomposition_to_dict(decomposition))
    else:
        raise exceptions.AnalyzerError('Unknown analysis: {}'.format(kind))

    return result
