#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains rooted tree measures and comb extraction
"""

from __future__ import print_function, division, absolute_import

import logging
import itertools
from collections import namedtuple, deque

import networkx as nx

from crosscrit.core import consts, exceptions
from crosscrit.core.drawing import drawing
from crosscrit.core.analyzer import plane, thresholds

logger = logging.getLogger(consts.LOGGER_NAME)

# tooth_paths[i] runs from teeth[i] to a vertex of the spine
Comb = namedtuple('Comb', ['spine', 'teeth', 'tooth_paths'])


def _rooted(tree, root):
    if tree.number_of_nodes() == 0 or not nx.is_tree(tree):
        raise exceptions.AnalyzerError('Expected a non empty tree')
    if root not in tree:
        raise exceptions.AnalyzerError('Root {!r} is not a vertex of the tree'.format(root))

    return nx.bfs_tree(tree, root)


def tree_leaves(tree, root):
    """
    Returns the vertices without children. A single vertex tree has its root as only leaf
    """

    rooted = _rooted(tree, root)

    return [node for node in rooted.nodes() if rooted.out_degree(node) == 0]


def max_degree(tree):
    return max([degree for _, degree in tree.degree()] or [0])


def binary_minor_depth(tree, root):
    """
    Returns b(T), the depth of the deepest rooted complete binary tree that is a rooted minor of the tree
    :param nx.Graph tree: tree
    :param root: root vertex
    :return: int
    """

    rooted = _rooted(tree, root)
    depth = dict()
    for node in nx.dfs_postorder_nodes(rooted, root):
        values = sorted((depth[child] for child in rooted.successors(node)), reverse=True)
        if not values:
            depth[node] = 0
        elif len(values) > 1 and values[0] == values[1]:
            depth[node] = values[0] + 1
        else:
            depth[node] = values[0]

    return depth[root]


def branching_depth(tree, root):
    """
    Returns the largest number of vertices with at least two children on a root-leaf path
    """

    rooted = _rooted(tree, root)
    count = {root: 1 if rooted.out_degree(root) > 1 else 0}
    for parent, child in nx.bfs_edges(rooted, root):
        count[child] = count[parent] + (1 if rooted.out_degree(child) > 1 else 0)

    return max(count.values())


def verify_comb(g, comb):
    """
    Checks that the comb is a subgraph of g: a spine path plus vertex-disjoint tooth paths of length at least one,
    each joining its tooth to a spine vertex and avoiding the rest of the spine
    :param nx.Graph g: host graph
    :param Comb comb: comb
    :return: VerificationResult
    """

    def _is_path(path):
        return all(node in g for node in path) and len(set(path)) == len(path) and all(
            g.has_edge(a, b) for a, b in zip(path, path[1:]))

    if not comb.spine or not _is_path(comb.spine):
        return drawing.VerificationResult(False, 'spine is not a path')
    if not comb.teeth or len(comb.teeth) != len(comb.tooth_paths):
        return drawing.VerificationResult(False, 'a comb needs at least one tooth and one path per tooth')

    spine = set(comb.spine)
    used = set()
    for tooth, path in zip(comb.teeth, comb.tooth_paths):
        if len(path) < 2 or not _is_path(path) or path[0] != tooth:
            return drawing.VerificationResult(False, 'tooth path of {!r} is not a path of length >= 1'.format(tooth))
        if path[-1] not in spine or spine & set(path[:-1]):
            return drawing.VerificationResult(False, 'tooth path of {!r} must meet the spine at its end'.format(tooth))
        if used & set(path):
            return drawing.VerificationResult(False, 'tooth paths are not vertex-disjoint')
        used.update(path)

    return drawing.VerificationResult(True)


def find_comb(tree, root, k):
    """
    Returns a comb with k teeth, all of them leaves of the rooted tree, or None when the tree has none.
    The spine is chosen among all paths of the tree: a spine vertex can carry a tooth when some component of the tree
    minus the vertex avoids the spine and contains a leaf
    :param nx.Graph tree: tree
    :param root: root vertex
    :param int k: number of teeth (>= 1)
    :return: Comb or None
    """

    if k < 1:
        raise exceptions.AnalyzerError('A comb needs at least one tooth, {} requested'.format(k))

    rooted = _rooted(tree, root)
    leaves = set(node for node in rooted.nodes() if rooted.out_degree(node) == 0 and node != root)
    parent = dict((child, node) for node, child in nx.bfs_edges(rooted, root))
    below = dict()
    for node in nx.dfs_postorder_nodes(rooted, root):
        below[node] = (1 if node in leaves else 0) + sum(below[child] for child in rooted.successors(node))

    threshold = thresholds.bound_leaves_threshold(max(max_degree(tree), 1), binary_minor_depth(tree, root), k)
    if len(leaves) > threshold:
        logger.debug('{} leaves exceed f = {}, a comb with {} teeth exists'.format(len(leaves), threshold, k))

    def _tooth_branch(vertex, path_neighbours):
        for other in tree.neighbors(vertex):
            if other in path_neighbours:
                continue
            found = below[other] if parent.get(other) == vertex else len(leaves) - below[vertex]
            if found:
                return other
        return None

    def _carries(vertex, path_neighbours):
        return 1 if _tooth_branch(vertex, path_neighbours) is not None else 0

    best = (0, None, None)
    for start in tree.nodes():
        single = _carries(start, ())
        if single > best[0]:
            best = (single, start, start)
        stack = [(other, start, 0, other) for other in tree.neighbors(start)]
        while stack and best[0] < k:
            node, previous, inner, first = stack.pop()
            count = _carries(start, (first,)) + inner + _carries(node, (previous,))
            if count > best[0]:
                best = (count, start, node)
            for other in tree.neighbors(node):
                if other != previous:
                    stack.append((other, node, inner + _carries(node, (previous, other)), first))
        if best[0] >= k:
            break

    if best[0] < k:
        return None

    path = nx.shortest_path(tree, best[1], best[2])
    chosen = list()
    for index, vertex in enumerate(path):
        neighbours = set(path[max(index - 1, 0):index] + path[index + 1:index + 2])
        branch = _tooth_branch(vertex, neighbours)
        if branch is not None:
            chosen.append((index, vertex, branch))
        if len(chosen) == k:
            break

    teeth, tooth_paths = list(), list()
    for _, vertex, branch in chosen:
        leaf = _first_leaf(tree, vertex, branch, leaves)
        teeth.append(leaf)
        tooth_paths.append(tuple(nx.shortest_path(tree, leaf, vertex)))
    spine = tuple(path[chosen[0][0]:chosen[-1][0] + 1])

    return Comb(spine, tuple(teeth), tuple(tooth_paths))


def _first_leaf(tree, blocked, start, leaves):
    seen = set([blocked, start])
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node in leaves:
            return node
        for other in tree.neighbors(node):
            if other not in seen:
                seen.add(other)
                queue.append(other)

    raise exceptions.AnalyzerError('No leaf behind {!r}'.format(start))


# ======================================================================================================================
# Q-CLEAN SUBCOMBS
# ======================================================================================================================

def _attachments(comb):
    return [comb.spine.index(path[-1]) for path in comb.tooth_paths]


def subcomb(comb, indices):
    """
    Returns the subcomb keeping the given teeth. The spine is trimmed to the span of their attachment vertices
    """

    indices = sorted(set(indices))
    attachments = _attachments(comb)
    spans = [attachments[index] for index in indices]

    return Comb(
        tuple(comb.spine[min(spans):max(spans) + 1]),
        tuple(comb.teeth[index] for index in indices),
        tuple(comb.tooth_paths[index] for index in indices))


def _check_q_comb(plane_graph, q_path, comb):
    plane_graph.check_path(q_path)
    if len(q_path) < 2:
        raise exceptions.AnalyzerError('Q must have at least one edge')
    verification = verify_comb(plane_graph.graph, comb)
    if not verification:
        raise exceptions.AnalyzerError('Invalid comb: {}'.format(verification.reason))

    comb_nodes = set(comb.spine)
    for path in comb.tooth_paths:
        comb_nodes.update(path)
    if not set(comb.teeth) <= set(q_path) or comb_nodes & set(q_path) != set(comb.teeth):
        raise exceptions.AnalyzerError('Comb must meet Q exactly in its teeth')

    dart = plane_graph.face_containing(plane.path_edges(q_path))
    if dart is None:
        raise exceptions.AnalyzerError('Q does not lie on the boundary of a face')

    return dart


def is_q_clean(plane_graph, q_path, comb, dart=None):
    """
    Returns whether Q and the spine of the comb both lie on the outer face of the subdrawing formed by the comb and Q.
    The outer face is the face holding the face of the plane graph that Q lies on
    :param PlaneGraph plane_graph: plane graph
    :param list q_path: vertices of Q in order
    :param Comb comb: comb whose teeth lie on Q
    :return: bool
    """

    dart = dart or _check_q_comb(plane_graph, q_path, comb)
    edges = set(plane.path_edges(q_path)) | set(plane.path_edges(comb.spine))
    for path in comb.tooth_paths:
        edges.update(plane.path_edges(path))
    sub = plane_graph.restrict(edges, comb.spine, outer=dart)

    face = sub.outer_face()
    face_edges = set(frozenset(half_edge) for half_edge in face)
    face_nodes = set(node for half_edge in face for node in half_edge)
    if len(comb.spine) == 1 and comb.spine[0] not in face_nodes:
        return False

    return set(plane.path_edges(comb.spine)) <= face_edges and set(plane.path_edges(q_path)) <= face_edges


def _tooth_sides(plane_graph, comb):
    """
    Returns, per tooth, the side of the spine its path leaves from. Teeth attached at spine ends fit both sides
    """

    sides = list()
    spine = comb.spine
    for attachment, path in zip(_attachments(comb), comb.tooth_paths):
        if attachment == 0 or attachment == len(spine) - 1:
            sides.append(None)
            continue
        order = list(plane_graph.embedding.neighbors_cw_order(spine[attachment]))
        start = order.index(spine[attachment + 1])
        order = order[start:] + order[:start]
        sides.append('right' if order.index(path[-2]) < order.index(spine[attachment - 1]) else 'left')

    return sides


def q_clean_subcomb(plane_graph, q_path, comb, k):
    """
    Returns a Q-clean subcomb with k teeth, or None. Combs with at least 3k - 1 teeth always have one when Q lies on a
    face boundary.
    Windows of consecutive teeth leaving the spine on the same side are tried first, then tooth subsets up to the
    search limit
    :param PlaneGraph plane_graph: plane graph
    :param list q_path: vertices of Q in order
    :param Comb comb: comb with its teeth on Q, otherwise disjoint from Q
    :param int k: number of teeth wanted
    :return: Comb or None
    """

    if k < 1:
        raise exceptions.AnalyzerError('A subcomb needs at least one tooth, {} requested'.format(k))
    dart = _check_q_comb(plane_graph, q_path, comb)
    total = len(comb.teeth)
    if total < k:
        return None
    if is_q_clean(plane_graph, q_path, comb, dart):
        return comb

    order = sorted(range(total), key=lambda index: _attachments(comb)[index])
    sides = _tooth_sides(plane_graph, comb)
    groups = list()
    for side in ('right', 'left'):
        groups.append([index for index in order if sides[index] in (side, None)])
    groups.append(order)

    tried = set()
    for group in groups:
        for start in range(len(group) - k + 1):
            window = tuple(sorted(group[start:start + k]))
            if window in tried:
                continue
            tried.add(window)
            candidate = subcomb(comb, window)
            if is_q_clean(plane_graph, q_path, candidate, dart):
                return candidate

    for window in itertools.islice(itertools.combinations(range(total), k), consts.SUBCOMB_SEARCH_LIMIT):
        if window in tried:
            continue
        candidate = subcomb(comb, window)
        if is_q_clean(plane_graph, q_path, candidate, dart):
            return candidate

    logger.debug('No Q-clean subcomb with {} teeth among {} teeth'.format(k, total))

    return None
