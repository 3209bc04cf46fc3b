#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the exact crossing number solver.
The search runs on the skeleton: a crossing between edges of thickness t1 and t2 costs t1 * t2. Nodes of the search
are crossing configurations; a configuration that cannot be drawn yields a Kuratowski subgraph of its gadget graph
and the next crossing is chosen between two edges of that subgraph.
"""

from __future__ import print_function, division, absolute_import

import time
import logging
import itertools
from collections import OrderedDict, namedtuple
from concurrent.futures import ThreadPoolExecutor

import networkx as nx

from crosscrit.core import consts, exceptions, graph, utils
from crosscrit.core.drawing import drawing, insertion, planarize

logger = logging.getLogger(consts.LOGGER_NAME)

DecisionResult = namedtuple('DecisionResult', ['status', 'witness', 'nodes', 'elapsed', 'next_bound'])


class SolveBudget(object):
    """
    Limits of a solver run. The optional upper bound drawing seeds the search; without one, the edge insertion
    heuristic provides it unless heuristic is False
    """

    def __init__(
            self, nodes=consts.DEFAULT_NODE_LIMIT, time_s=consts.DEFAULT_TIME_LIMIT, upper_bound=None, heuristic=True):
        if nodes is not None and nodes < 1:
            raise exceptions.SolverError('Node limit must be positive, {} given'.format(nodes))
        if time_s is not None and time_s <= 0:
            raise exceptions.SolverError('Time limit must be positive, {} given'.format(time_s))

        self.nodes = nodes
        self.time_s = time_s
        self.upper_bound = upper_bound
        self.heuristic = heuristic

    def __repr__(self):
        return '<SolveBudget nodes={} time_s={} seeded={} heuristic={}>'.format(
            self.nodes, self.time_s, self.upper_bound is not None, self.heuristic)

    def copy(self):
        """
        Returns the same limits without the upper bound drawing, for runs on other graphs
        """

        return SolveBudget(self.nodes, self.time_s, heuristic=self.heuristic)

    def seed(self, g):
        """
        Returns the upper bound drawing of the graph: the given one or, when allowed, an edge insertion drawing
        :param WeightedMultigraph g: connected graph
        :return: Drawing or None
        """

        if self.upper_bound is not None or not self.heuristic:
            return self.upper_bound

        upper = insertion.insertion_drawing(g)
        logger.debug('Edge insertion upper bound: {}'.format(drawing.crossing_count(upper).total))

        return upper


class SolveResult(object):
    """
    Outcome of an exact crossing number computation. When the budget runs out crossing_number is None and only the
    bounds are known
    """

    def __init__(self, status, crossing_number=None, witness=None, lower=0, upper=None, nodes=0, elapsed=0.0):
        self.status = status
        self.crossing_number = crossing_number
        self.witness = witness
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
        self.elapsed = elapsed

    def __repr__(self):
        return '<SolveResult status={} cr={} bounds=[{}, {}] nodes={}>'.format(
            self.status, self.crossing_number, self.lower, self.upper, self.nodes)

    @property
    def solved(self):
        return self.crossing_number is not None

    def to_dict(self):
        data = OrderedDict()
        data['status'] = self.status
        data['cr'] = self.crossing_number
        data['bounds'] = [self.lower, self.upper]
        data['nodes'] = self.nodes
        data['elapsed'] = round(self.elapsed, 3)
        data['witness'] = self.witness.to_dict() if self.witness is not None else None
        return data


class _BudgetExhausted(Exception):
    pass


class _SearchState(object):
    def __init__(self, budget, nodes_used=0):
        self.budget = budget
        self.nodes = nodes_used
        self.start = time.time()
        self.next_bound = None

    def tick(self):
        self.nodes += 1
        if self.budget.nodes is not None and self.nodes > self.budget.nodes:
            raise _BudgetExhausted()
        if self.budget.time_s is not None and time.time() - self.start > self.budget.time_s:
            raise _BudgetExhausted()

    def prune(self, cost):
        if self.next_bound is None or cost < self.next_bound:
            self.next_bound = cost

    @property
    def elapsed(self):
        return time.time() - self.start


def _check_connected(g):
    if g.num_vertices and not nx.is_connected(g.skeleton()):
        raise exceptions.SolverError('Crossing number search needs a connected graph')


def _config_key(config):
    return tuple(sorted((edge_id, tuple(names)) for edge_id, names in config.items() if names))


def _pair_counts(config):
    counts = dict()
    for names in config.values():
        for name in names:
            counts[name] = counts.get(name, 0) + 1

    pairs = dict()
    for name in counts:
        pairs[name[:2]] = pairs.get(name[:2], 0) + 1

    return pairs


def _candidate_pairs(g, config, witness_edges, good, pair_cap):
    """
    Returns the edge pairs of the Kuratowski witness that may still cross, sorted by descending thickness product
    """

    crossed = _pair_counts(config)
    candidates = list()
    for a, b in itertools.combinations(sorted(witness_edges), 2):
        edge_a, edge_b = g.edge(a), g.edge(b)
        if good and set((edge_a.u, edge_a.v)) & set((edge_b.u, edge_b.v)):
            continue
        if crossed.get((a, b), 0) >= pair_cap:
            continue
        candidates.append((edge_a.thickness * edge_b.thickness, a, b))
    candidates.sort(key=lambda item: (-item[0], item[1], item[2]))

    return candidates


def _search(g, k, state, good, pair_cap):
    """
    Depth first search over crossing configurations of weighted cost at most k. Returns the routes of a realizable
    configuration or None
    """

    visited = set()

    def _explore(config, cost):
        state.tick()
        key = _config_key(config)
        if key in visited:
            return None
        visited.add(key)

        ok, witness_edges = planarize.configuration_is_realizable(g, config)
        if ok:
            return config

        candidates = _candidate_pairs(g, config, witness_edges, good, pair_cap)
        if not candidates:
            return None
        cheapest = min(product for product, _, _ in candidates)
        if cost + cheapest > k:
            state.prune(cost + cheapest)
            return None

        crossed = _pair_counts(config)
        for product, a, b in candidates:
            if cost + product > k:
                state.prune(cost + product)
                continue
            name = (a, b, crossed.get((a, b), 0))
            for position_a in range(len(config[a]) + 1):
                for position_b in range(len(config[b]) + 1):
                    child = OrderedDict(config)
                    child[a] = config[a][:position_a] + (name,) + config[a][position_a:]
                    child[b] = config[b][:position_b] + (name,) + config[b][position_b:]
                    found = _explore(child, cost + product)
                    if found is not None:
                        return found

        return None

    return _explore(OrderedDict((edge.id, tuple()) for edge in g.edges), 0)


def _witness_drawing(g, config):
    return planarize.build_drawing(g, OrderedDict((edge_id, list(names)) for edge_id, names in config.items()))


def _decide(g, k, state, good=True, pair_cap=consts.DEFAULT_PAIR_CAP):
    upper = state.budget.seed(g)
    if upper is not None and drawing.crossing_count(upper).total <= k:
        return consts.YES, upper

    state.next_bound = None
    try:
        found = _search(g, k, state, good, pair_cap)
    except _BudgetExhausted:
        return consts.BUDGET_EXCEEDED, None
    if found is None:
        return consts.NO, None

    return consts.YES, _witness_drawing(g, found)


def cr_decision(g, k, budget=None, good=True, pair_cap=consts.DEFAULT_PAIR_CAP):
    """
    Decides whether the graph has a drawing with at most k weighted crossings
    :param WeightedMultigraph g: connected graph
    :param int k: crossing budget
    :param SolveBudget budget: search limits
    :param bool good: restrict the search to good drawings (adjacent edges never cross)
    :param int pair_cap: maximum number of crossings between two edges
    :return: DecisionResult whose status is one of 'yes', 'no' or 'budget-exceeded'
    """

    if k < 0:
        raise exceptions.SolverError('Crossing budget must be non negative, {} given'.format(k))
    _check_connected(g)

    state = _SearchState(budget or SolveBudget())
    status, witness = _decide(g, k, state, good, pair_cap)
    logger.debug('cr <= {}: {} after {} nodes'.format(k, status, state.nodes))

    return DecisionResult(status, witness, state.nodes, state.elapsed, state.next_bound)


@utils.timestamp
def cr_exact(g, budget=None, good=True, pair_cap=consts.DEFAULT_PAIR_CAP):
    """
    Computes the crossing number of the graph. Decision levels jump to the smallest cost pruned by the previous level
    :param WeightedMultigraph g: connected graph
    :param SolveBudget budget: search limits shared by all levels
    :param bool good: restrict the search to good drawings
    :param int pair_cap: maximum number of crossings between two edges
    :return: SolveResult
    """

    _check_connected(g)
    budget = budget or SolveBudget()
    seed = budget.seed(g)
    upper = drawing.crossing_count(seed).total if seed is not None else None
    state = _SearchState(budget)

    level = 0
    while True:
        if upper is not None and level >= upper:
            return SolveResult(consts.YES, upper, seed, upper, upper, state.nodes, state.elapsed)
        state.next_bound = None
        try:
            found = _search(g, level, state, good, pair_cap)
        except _BudgetExhausted:
            logger.info('Solver budget exhausted at level {} after {} nodes'.format(level, state.nodes))
            return SolveResult(consts.BUDGET_EXCEEDED, None, None, level, upper, state.nodes, state.elapsed)
        if found is not None:
            witness = _witness_drawing(g, found)
            return SolveResult(consts.YES, level, witness, level, level, state.nodes, state.elapsed)
        if state.next_bound is None:
            raise exceptions.SolverError('Search space exhausted without a drawing; relax the good drawing restriction')
        logger.debug('No drawing with {} crossings ({} nodes so far), next level {}'.format(
            level, state.nodes, state.next_bound))
        level = state.next_bound


def cr_oracle_bruteforce(g):
    """
    Returns the crossing number of a tiny graph by enumerating sets of crossing pairs of independent edges in increasing
    weighted cost together with every order of the crossings along each edge
    :param WeightedMultigraph g: graph with at most 8 vertices and 14 skeleton edges
    :return: int
    """

    if g.num_vertices > consts.ORACLE_MAX_VERTICES or g.num_edges > consts.ORACLE_MAX_EDGES:
        raise exceptions.OracleSizeError(
            'Oracle handles at most {} vertices and {} edges, got {} and {}'.format(
                consts.ORACLE_MAX_VERTICES, consts.ORACLE_MAX_EDGES, g.num_vertices, g.num_edges))

    pairs = list()
    for edge_a, edge_b in itertools.combinations(g.edges, 2):
        if not set((edge_a.u, edge_a.v)) & set((edge_b.u, edge_b.v)):
            pairs.append((edge_a.thickness * edge_b.thickness, edge_a.id, edge_b.id))

    def _subsets(index, remaining):
        if remaining == 0:
            yield list()
            return
        for position in range(index, len(pairs)):
            product = pairs[position][0]
            if product <= remaining:
                for rest in _subsets(position + 1, remaining - product):
                    yield [pairs[position]] + rest

    def _realizable(subset):
        per_edge = OrderedDict((edge.id, list()) for edge in g.edges)
        for _, a, b in subset:
            per_edge[a].append((a, b))
            per_edge[b].append((a, b))
        edge_ids = [edge_id for edge_id, names in per_edge.items() if len(names) > 1]
        for orders in itertools.product(*[itertools.permutations(per_edge[edge_id]) for edge_id in edge_ids]):
            routes = OrderedDict(per_edge)
            for edge_id, order in zip(edge_ids, orders):
                routes[edge_id] = list(order)
            if planarize.configuration_is_realizable(g, routes)[0]:
                return True
        return False

    cost = 0
    limit = sum(product for product, _, _ in pairs)
    while cost <= limit:
        for subset in _subsets(0, cost):
            if _realizable(subset):
                return cost
        cost += 1

    raise exceptions.SolverError('No good drawing found by the oracle')


def _strip_isolated(g):
    builder = graph.GraphBuilder(g)
    for vertex in g.vertices:
        if not g.incident_edges(vertex):
            builder.remove_vertex(vertex)

    return builder.build()


def _components(g):
    skeleton = g.skeleton()
    components = list()
    for nodes in nx.connected_components(skeleton):
        builder = graph.GraphBuilder()
        for vertex in sorted(nodes):
            builder.add_vertex(g.label(vertex), vertex_id=vertex)
        for edge in g.edges:
            if edge.u in nodes:
                builder.add_edge(edge.u, edge.v, edge.thickness, edge_id=edge.id)
        components.append(builder.build())

    return components


def _decide_at_most(g, k, budget):
    """
    Decides cr(g) <= k for a possibly disconnected graph by adding up the crossing numbers of its components
    :return: status and witness drawing (None for disconnected graphs)
    """

    g = _strip_isolated(g)
    components = _components(g)
    if len(components) <= 1:
        result = cr_decision(g, k, budget)
        return result.status, result.witness

    total = 0
    for component in components:
        result = cr_exact(component, budget.copy())
        if not result.solved:
            return consts.BUDGET_EXCEEDED, None
        total += result.crossing_number
        if total > k:
            return consts.NO, None

    return consts.YES, None


@utils.timestamp
def criticality_check(g, c, budget=None, threads=None):
    """
    Checks that the graph is c-crossing-critical: cr(g) >= c and deleting any single edge copy leaves a graph with
    crossing number at most c - 1
    :param WeightedMultigraph g: connected graph
    :param int c: crossing number threshold (>= 1)
    :param SolveBudget budget: limits used by every decision
    :param int threads: number of workers. Defaults to the CROSSCRIT_THREADS value
    :return: report data
    :rtype: dict
    """

    if c < 1:
        raise exceptions.SolverError('Criticality threshold must be positive, {} given'.format(c))
    _check_connected(g)
    budget = budget or SolveBudget()
    threads = threads or utils.get_thread_count()

    lower = cr_decision(g, c - 1, budget.copy())

    def _check_edge(edge):
        status, witness = _decide_at_most(graph.delete_one_copy(g, edge.id), c - 1, budget.copy())
        crossings = drawing.crossing_count(witness).total if witness is not None else None
        return edge, status, witness, crossings

    with ThreadPoolExecutor(max_workers=threads) as executor:
        checked = list(executor.map(_check_edge, g.edges))

    rows = list()
    for edge, status, witness, crossings in checked:
        for copy in range(edge.thickness):
            row = OrderedDict()
            row['edge'] = edge.id
            row['name'] = g.edge_name(edge.id)
            row['copy'] = copy
            row['status'] = status
            row['crossings'] = crossings
            row['witness'] = witness.to_dict() if witness is not None else None
            rows.append(row)

    budget_exceeded = lower.status == consts.BUDGET_EXCEEDED or any(
        row['status'] == consts.BUDGET_EXCEEDED for row in rows)
    violations = [row['name'] for row in rows if row['status'] == consts.NO]
    lower_ok = lower.status == consts.NO
    critical = lower_ok and not budget_exceeded and not violations

    report = OrderedDict()
    report['c'] = c
    report['lower_bound'] = lower.status
    report['lower_bound_witness'] = lower.witness.to_dict() if lower.witness is not None else None
    report['edges'] = rows
    report['violations'] = violations
    report['budget_exceeded'] = budget_exceeded
    report['critical'] = critical
    logger.info('Criticality check c={}: critical={} violations={}'.format(c, critical, len(violations)))

    return report
