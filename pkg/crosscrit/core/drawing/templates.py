#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the hand encoded drawings of ccg13k: the canonical 13 crossing drawing, its reroutes and the
drawings used to certify that every edge copy is critical
"""

from __future__ import print_function, division, absolute_import

import logging
from collections import OrderedDict, namedtuple
from concurrent.futures import ThreadPoolExecutor

from crosscrit.core import consts, exceptions, families, utils
from crosscrit.core.drawing import drawing, planarize

logger = logging.getLogger(consts.LOGGER_NAME)

DrawingTemplate = namedtuple('DrawingTemplate', ['figure', 'k', 'i', 'mirror'])
EdgeClass = namedtuple('EdgeClass', ['figure', 'i', 'mirror'])
CertificateRow = namedtuple(
    'CertificateRow', ['edge', 'name', 'copy', 'figure', 'wedge', 'mirror', 'total', 'valid'])

# Edges joining both bowtie cycles
BLUE_EDGES = OrderedDict([('A', ('u1', 'v4')), ('B', ('u4', 'v1')), ('C', ('u2', 'v3')), ('D', ('u3', 'v2'))])

# Crossings met along each blue edge of the canonical drawing, from its u endpoint
CANONICAL_BLUE_ROUTES = OrderedDict([
    ('A', ['AB', 'AD', 'AC']),
    ('B', ['BD', 'BC', 'AB']),
    ('C', ['BC', 'CD', 'AC']),
    ('D', ['BD', 'CD', 'AD'])
])

# Blue routes once u4v1 leaves the bowtie through a dotted reroute
REROUTED_BLUE_ROUTES = OrderedDict([
    ('A', ['AD', 'AC']),
    ('C', ['CD', 'AC']),
    ('D', ['CD', 'AD'])
])


def _blue_routes(letter_routes, blue_edges=None):
    blue_edges = blue_edges or BLUE_EDGES
    return OrderedDict((blue_edges[letter], list(names)) for letter, names in letter_routes.items())


def _fig2_routes(k, i):
    return _blue_routes(CANONICAL_BLUE_ROUTES)


def _dotted_a_routes(k, i):
    routes = _blue_routes(REROUTED_BLUE_ROUTES)
    routes[BLUE_EDGES['B']] = ['Bv']
    routes[('v4', 'v5')] = ['Bv']

    return routes


def _dotted_b_routes(k, i):
    _, w2, w3, w4 = families.wedge_labels(k, k)
    routes = _blue_routes(REROUTED_BLUE_ROUTES)
    routes[BLUE_EDGES['B']] = ['Bc', 'Bw', 'Bx']
    routes[(w2, w3)] = ['Bc']
    routes[(w3, w4)] = ['Bw']
    routes[('v5', 'x')] = ['Bx']

    return routes


def _fig4a_routes(k, i):
    w1, w2, w3, w4 = families.wedge_labels(k, k)

    return OrderedDict([(('x', 'u1'), ['P', 'Q']), ((w1, w4), ['P']), ((w2, w3), ['Q'])])


def _fig4a_shifted_routes(k, i):
    w1, w2, w3, w4 = families.wedge_labels(k, k)

    return OrderedDict([
        (('u1', 'u2'), ['P1', 'P2']),
        (BLUE_EDGES['A'], ['Q1', 'Q2']),
        ((w1, w4), ['P1', 'Q1']),
        ((w2, w3), ['P2', 'Q2'])
    ])


def _fig4b_routes(k, i):
    return OrderedDict([(('v2', 'v3'), ['X']), (('u3', 'u4'), ['X'])])


def _fig5a_routes(k, i):
    w1, w2, w3, w4 = families.wedge_labels(k, i)
    routes = _blue_routes(OrderedDict((letter, ['w' + letter, 'c' + letter]) for letter in BLUE_EDGES))
    routes[(w2, w3)] = ['X', 'cB', 'cD', 'cC', 'cA']
    routes[(w1, w4)] = ['wB', 'wD', 'wC', 'wA']
    routes[('x', w1)] = ['X']

    return routes


def _fig5b_routes(k, i):
    w1, w2, w3, _ = families.wedge_labels(k, i)
    routes = _blue_routes(OrderedDict((letter, ['w' + letter, 'c' + letter]) for letter in BLUE_EDGES))
    routes[(w1, w2)] = ['wA', 'wC', 'wD', 'wB']
    routes[(w2, w3)] = ['cB', 'cD', 'cC', 'cA']

    return routes


def _expanded_routes(k, i):
    blue_edges = OrderedDict(BLUE_EDGES)
    blue_edges['C'] = ('u2', 'v3^3')
    blue_edges['D'] = ('u3^3', 'v2')

    return _blue_routes(CANONICAL_BLUE_ROUTES, blue_edges)


TEMPLATE_ROUTES = {
    consts.FIG2: _fig2_routes,
    consts.FIG2_DOTTED_A: _dotted_a_routes,
    consts.FIG2_DOTTED_B: _dotted_b_routes,
    consts.FIG4A: _fig4a_routes,
    consts.FIG4A_SHIFTED: _fig4a_shifted_routes,
    consts.FIG4B: _fig4b_routes,
    consts.FIG5A: _fig5a_routes,
    consts.FIG5B: _fig5b_routes,
    consts.EXPANDED: _expanded_routes
}


def expanded_mirror_map(k):
    """
    Returns the mirror label map of ccgi13k. The gadgets replacing u3 and v3 are exchanged vertex by vertex
    """

    mapping = families.mirror_map(k)
    mapping.pop('u3')
    mapping.pop('v3')
    for j in range(1, 4):
        mapping['u3^{}'.format(j)] = 'v3^{}'.format(j)
        mapping['v3^{}'.format(j)] = 'u3^{}'.format(j)

    return mapping


def template_drawing(figure, k, i=None, mirror=False):
    """
    Returns the drawing of one of the hand encoded templates
    :param str figure: template tag, one of consts.FIGURES
    :param int k: number of wedges
    :param int i: wedge index, only used by wedge templates
    :param bool mirror: whether to apply the automorphism exchanging both bowtie cycles
    :return: Drawing
    """

    figure = figure.upper()
    if figure not in consts.FIGURES:
        raise exceptions.TemplateError('Unknown template "{}". Available: {}'.format(figure, ', '.join(consts.FIGURES)))
    if figure in consts.WEDGE_FIGURES:
        if i is None or not 1 <= i <= k:
            raise exceptions.TemplateError('Template {} needs a wedge index 1 <= i <= {}, got {}'.format(figure, k, i))
    else:
        i = None

    g = families.generate_ccgi13k(k) if figure == consts.EXPANDED else families.generate_ccg13k(k)
    routes = planarize.routes_by_labels(g, TEMPLATE_ROUTES[figure](k, i))
    try:
        result = planarize.build_drawing(g, routes)
    except exceptions.InvalidDrawingError as exc:
        raise exceptions.TemplateError('Template {} (k={}, i={}) cannot be drawn: {}'.format(figure, k, i, exc.diagnostic))

    if mirror:
        mapping = expanded_mirror_map(k) if figure == consts.EXPANDED else families.mirror_map(k)
        result = drawing.apply_vertex_map(result, mapping)

    total = drawing.crossing_count(result).total
    if total != consts.FIGURE_TOTALS[figure]:
        raise exceptions.TemplateError(
            'Template {} has {} crossings instead of {}'.format(figure, total, consts.FIGURE_TOTALS[figure]))

    return result


def build_template(template):
    """
    Returns the drawing described by a DrawingTemplate
    :param DrawingTemplate template: template description
    :return: Drawing
    """

    return template_drawing(template.figure, template.k, template.i, template.mirror)


def canonical_drawing(k, mirror=False):
    """
    Returns the drawing of ccg13k with 13 crossings, all of them between the edges joining both bowtie cycles
    :param int k: number of wedges
    :param bool mirror: whether to apply the bowtie automorphism
    :return: Drawing
    """

    return template_drawing(consts.FIG2, k, mirror=mirror)


def edge_classes(k):
    """
    Returns, for every skeleton edge of ccg13k, the template used to draw it with at most 12 crossings once one of its
    copies is deleted. Edges not covered directly are covered by the mirror image of another edge class
    :param int k: number of wedges
    :return: OrderedDict(int, EdgeClass) keyed by edge id
    """

    g = families.generate_ccg13k(k)

    direct = OrderedDict()
    for pair in BLUE_EDGES.values():
        direct[frozenset(pair)] = EdgeClass(consts.FIG2, None, False)
    direct[frozenset(('v4', 'v5'))] = EdgeClass(consts.FIG2_DOTTED_A, None, False)
    direct[frozenset(('x', 'v5'))] = EdgeClass(consts.FIG2_DOTTED_B, None, False)
    direct[frozenset(('x', 'u1'))] = EdgeClass(consts.FIG4A, None, False)
    direct[frozenset(('u1', 'u2'))] = EdgeClass(consts.FIG4A_SHIFTED, None, False)
    direct[frozenset(('v2', 'v3'))] = EdgeClass(consts.FIG4B, None, False)
    direct[frozenset(('u3', 'u4'))] = EdgeClass(consts.FIG4B, None, False)
    for i in range(1, k + 1):
        w1, w2, w3, w4 = families.wedge_labels(k, i)
        for pair in (('x', w1), (w2, w3), (w1, w4)):
            direct[frozenset(pair)] = EdgeClass(consts.FIG5A, i, False)
        direct[frozenset((w1, w2))] = EdgeClass(consts.FIG5B, i, False)

    classes = OrderedDict(direct)
    mirror = families.mirror_map(k)
    for pair, edge_class in direct.items():
        image = frozenset(mirror[label] for label in pair)
        if image not in classes:
            classes[image] = EdgeClass(edge_class.figure, edge_class.i, True)

    result = OrderedDict()
    for edge in g.edges:
        pair = frozenset((g.label(edge.u), g.label(edge.v)))
        if pair not in classes:
            raise exceptions.TemplateError('Edge {} is not covered by any template'.format(g.edge_name(edge.id)))
        result[edge.id] = classes[pair]

    return result


def drop_drawing(k, e, copy=0):
    """
    Returns a drawing of ccg13k minus one copy of the given edge with at most 12 crossings
    :param int k: number of wedges
    :param int e: edge id in generate_ccg13k(k)
    :param int copy: index of the deleted copy
    :return: Drawing
    """

    g = families.generate_ccg13k(k)
    edge = g.edge(e)
    if not 0 <= copy < edge.thickness:
        raise exceptions.TemplateError(
            'Edge {} has {} copies, copy {} requested'.format(g.edge_name(e), edge.thickness, copy))

    edge_class = edge_classes(k)[e]
    # copies of a thick edge are interchangeable, so every copy index uses the same drawing
    template = template_drawing(edge_class.figure, k, edge_class.i, edge_class.mirror)

    return drawing.remove_edge_copy(template, e)


@utils.timestamp
def criticality_certificate(k, threads=None):
    """
    Builds the criticality table of ccg13k: total of the canonical drawing plus, for every edge copy, the template used
    once that copy is deleted, the resulting crossing total and whether the drawing is valid
    :param int k: number of wedges
    :param int threads: number of workers. Defaults to the CROSSCRIT_THREADS value
    :return: certificate data
    :rtype: dict
    """

    g = families.generate_ccg13k(k)
    classes = edge_classes(k)
    canonical_total = drawing.crossing_count(canonical_drawing(k)).total
    threads = threads or utils.get_thread_count()

    def _check_edge(edge):
        edge_class = classes[edge.id]
        try:
            dropped = drop_drawing(k, edge.id)
        except exceptions.DrawingError as exc:
            logger.warning('Drop drawing of edge {} failed: {}'.format(g.edge_name(edge.id), exc))
            return edge, edge_class, None, False
        verification = drawing.verify_drawing(dropped)
        total = drawing.crossing_count(dropped, verify=False).total if verification else None
        return edge, edge_class, total, bool(verification)

    with ThreadPoolExecutor(max_workers=threads) as executor:
        checked = list(executor.map(_check_edge, g.edges))

    rows = list()
    for edge, edge_class, total, valid in checked:
        for copy in range(edge.thickness):
            rows.append(CertificateRow(
                edge.id, g.edge_name(edge.id), copy, edge_class.figure, edge_class.i, edge_class.mirror, total, valid))

    bound = consts.CCG13_CROSSINGS - 1
    covered = len(classes) == g.num_edges
    ok = canonical_total == consts.CCG13_CROSSINGS and covered and all(
        row.valid and row.total is not None and row.total <= bound for row in rows)
    logger.info('Criticality certificate for k={}: {} edge copies, ok={}'.format(k, len(rows), ok))

    return OrderedDict([
        ('k', k),
        ('canonical_total', canonical_total),
        ('covered_edges', len(classes)),
        ('skeleton_edges', g.num_edges),
        ('multiplicity', g.multiplicity),
        ('rows', [row._asdict() for row in rows]),
        ('ok', ok)
    ])

