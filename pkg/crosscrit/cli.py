#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the crosscrit command line front end.
Every subcommand writes JSON to stdout (or --out) and logs to stderr
"""

from __future__ import print_function, division, absolute_import

import sys
import logging
import argparse

from crosscrit import api, loader
from crosscrit.__version__ import get_version
from crosscrit.core import consts, exceptions, utils, graph

logger = logging.getLogger(consts.LOGGER_NAME)

__description__ = 'Construct, draw and verify crossing-critical graphs'

# Failures reported with the bad arguments exit code
ARGUMENT_ERRORS = (
    exceptions.GraphError, exceptions.FamilyParameterError, exceptions.ExpansionProfileError,
    exceptions.TemplateError, exceptions.AnalyzerError, exceptions.SolverError)


def _build_parser():
    parser = argparse.ArgumentParser(prog='crosscrit', description=__description__)
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(get_version()))
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    def _output(sub):
        sub.add_argument('--out', help='output file [default is stdout]', default=None)
        sub.add_argument('--pretty', help='human readable output', action='store_true')

    gen = subparsers.add_parser('gen', help='generate a family member or a standard graph')
    gen.add_argument('family', help='ccg13, ccgi13, gcd, gcdi, {}'.format(', '.join(api.STANDARD_GRAPHS)))
    gen.add_argument('--k', type=int, default=None, help='number of wedges')
    gen.add_argument('--c', type=int, default=None, help='crossing number')
    gen.add_argument('--d', type=int, default=None, help='degree')
    gen.add_argument('--i', type=int, default=None, help='number of expanded blocks')
    gen.add_argument('--format', choices=('json', 'dot'), default='json')
    _output(gen)

    draw = subparsers.add_parser('draw', help='build a figure template drawing')
    draw.add_argument('figure', help=', '.join(tag.lower() for tag in consts.FIGURES))
    draw.add_argument('--k', type=int, required=True, help='number of wedges')
    draw.add_argument('--i', type=int, default=None, help='wedge index')
    draw.add_argument('--mirror', action='store_true', help='mirror through the u/v symmetry')
    draw.add_argument('--contract', type=int, default=None, help='contract wedges starting at this index')
    draw.add_argument('--format', choices=('json', 'svg', 'dot'), default='json')
    _output(draw)

    count = subparsers.add_parser('count', help='count the weighted crossings of a drawing')
    count.add_argument('drawing', help='drawing JSON file')
    _output(count)

    verify = subparsers.add_parser('verify', help='verify a drawing')
    verify.add_argument('drawing', help='drawing JSON file')
    _output(verify)

    solve = subparsers.add_parser('solve', help='compute the crossing number of a graph')
    solve.add_argument('graph', help='graph JSON file or standard graph name')
    solve.add_argument('--nodes', type=int, default=consts.DEFAULT_NODE_LIMIT, help='search node limit')
    solve.add_argument('--timeout-s', type=float, default=consts.DEFAULT_TIME_LIMIT, help='time limit in seconds')
    solve.add_argument('--upper', default=None, help='drawing JSON file seeding the search')
    solve.add_argument('--decide', type=int, default=None, help='only decide cr <= DECIDE')
    solve.add_argument(
        '--no-heuristic', dest='heuristic', action='store_false', help='do not seed the search by edge insertion')
    _output(solve)

    crit = subparsers.add_parser('crit', help='check crossing-criticality')
    crit.add_argument('graph', help='ccg13, a graph JSON file or a standard graph name')
    crit.add_argument('--k', type=int, default=None, help='number of wedges of ccg13')
    crit.add_argument('--c', type=int, default=None, help='crossing number threshold of a solver check')
    crit.add_argument('--nodes', type=int, default=consts.DEFAULT_NODE_LIMIT, help='search node limit')
    crit.add_argument('--timeout-s', type=float, default=consts.DEFAULT_TIME_LIMIT, help='time limit in seconds')
    crit.add_argument(
        '--no-heuristic', dest='heuristic', action='store_false', help='do not seed the searches by edge insertion')
    _output(crit)

    analyze = subparsers.add_parser('analyze', help='run a structural analysis')
    analyze.add_argument('kind', choices=('depth', 'comb', 'paths', 'nest', 'fangrid', 'bridges'))
    analyze.add_argument('input', help='analysis input JSON file')
    analyze.add_argument(
        '--candidate', default=None, help='JSON file with the rays and rows of a fan-grid candidate to verify')
    _output(analyze)

    limits = subparsers.add_parser('thresholds', help='evaluate threshold functions')
    limits.add_argument('kind', choices=('boundleaves', 'start', 'extend', 'rt', 'redraw'))
    for name in ('D', 'b', 'k', 'm', 't', 'c'):
        limits.add_argument('--{}'.format(name), type=int, default=None)
    _output(limits)

    return parser


def _load_graph(source):
    if source.lower() in api.STANDARD_GRAPHS:
        return api.generate(source)

    return api.load_graph(source)


def _emit(args, data):
    if isinstance(data, str):
        text = data
    else:
        text = utils.dump_json(data, pretty=args.pretty)
    if args.out:
        with open(args.out, 'w') as output_file:
            output_file.write(text)
            output_file.write('\n')
    else:
        sys.stdout.write(text)
        sys.stdout.write('\n')


def _certificate_table(certificate):
    lines = ['ccg13_{} canonical total {}'.format(certificate['k'], certificate['canonical_total'])]
    lines.append('{:<12} {:>4} {:<14} {:>5} {:>6} {:>5} {:>5}'.format(
        'edge', 'copy', 'figure', 'wedge', 'mirror', 'total', 'valid'))
    for row in certificate['rows']:
        lines.append('{:<12} {:>4} {:<14} {:>5} {:>6} {:>5} {:>5}'.format(
            row['name'], row['copy'], row['figure'], row['wedge'] if row['wedge'] is not None else '-',
            'yes' if row['mirror'] else 'no', row['total'] if row['total'] is not None else '-',
            'yes' if row['valid'] else 'no'))
    lines.append('covered {}/{} edges, ok={}'.format(
        certificate['covered_edges'], certificate['skeleton_edges'], certificate['ok']))

    return '\n'.join(lines)


def _run_gen(args):
    g = api.generate(args.family, k=args.k, c=args.c, d=args.d, i=args.i)
    _emit(args, graph.graph_to_dot(g) if args.format == 'dot' else graph.graph_to_json(g))

    return consts.EXIT_OK


def _run_draw(args):
    d = api.draw(args.figure, args.k, i=args.i, mirror=args.mirror)
    if args.contract is not None:
        d = api.contract(d, args.contract)
    _emit(args, api.render(d, args.format))

    return consts.EXIT_OK


def _run_count(args):
    _emit(args, api.count(api.load_drawing(args.drawing)))

    return consts.EXIT_OK


def _run_verify(args):
    report = api.verify(api.load_drawing(args.drawing))
    _emit(args, report)

    return consts.EXIT_OK if report['ok'] else consts.EXIT_VERIFICATION_FAILED


def _run_solve(args):
    upper = api.load_drawing(args.upper) if args.upper else None
    result = api.solve(
        _load_graph(args.graph), nodes=args.nodes, timeout_s=args.timeout_s, upper_bound=upper, decide=args.decide,
        heuristic=args.heuristic)
    _emit(args, result)

    return consts.EXIT_BUDGET_EXCEEDED if result['status'] == consts.BUDGET_EXCEEDED else consts.EXIT_OK


def _run_crit(args):
    if args.graph.lower() == 'ccg13':
        if args.k is None:
            raise exceptions.FamilyParameterError('crit ccg13 needs --k')
        certificate = api.ccg13_certificate(args.k)
        _emit(args, _certificate_table(certificate) if args.pretty else certificate)
        return consts.EXIT_OK if certificate['ok'] else consts.EXIT_VERIFICATION_FAILED

    if args.c is None:
        raise exceptions.SolverError('crit on a graph needs --c')
    report = api.check_criticality(
        _load_graph(args.graph), args.c, nodes=args.nodes, timeout_s=args.timeout_s, heuristic=args.heuristic)
    _emit(args, report)
    if report['budget_exceeded']:
        return consts.EXIT_BUDGET_EXCEEDED

    return consts.EXIT_OK if report['critical'] else consts.EXIT_VERIFICATION_FAILED


def _run_analyze(args):
    data = utils.read_json(args.input)
    if not isinstance(data, dict):
        raise exceptions.AnalyzerError('Analysis input must be a JSON object')
    if args.candidate:
        candidate = utils.read_json(args.candidate)
        if not isinstance(candidate, dict) or 'rays' not in candidate:
            raise exceptions.AnalyzerError('Fan-grid candidate must be a JSON object with rays and rows')
        data.update((key, candidate[key]) for key in ('rays', 'rows') if key in candidate)
    result = api.analyze(args.kind, data)
    _emit(args, result)

    return consts.EXIT_VERIFICATION_FAILED if result.get('ok') is False and 'reason' in result else consts.EXIT_OK


def _run_thresholds(args):
    _emit(args, api.threshold(args.kind, D=args.D, b=args.b, k=args.k, m=args.m, t=args.t, c=args.c))

    return consts.EXIT_OK


COMMANDS = {
    'gen': _run_gen,
    'draw': _run_draw,
    'count': _run_count,
    'verify': _run_verify,
    'solve': _run_solve,
    'crit': _run_crit,
    'analyze': _run_analyze,
    'thresholds': _run_thresholds
}


def run(argv=None):
    """
    Runs a crosscrit command
    :param list(str) argv: command line arguments. Defaults to sys.argv
    :return: exit code
    :rtype: int
    """

    if argv is None:
        argv = sys.argv[1:]

    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code

    try:
        return COMMANDS[args.command](args)
    except exceptions.CycleBudgetExceeded:
        return consts.EXIT_BUDGET_EXCEEDED
    except ARGUMENT_ERRORS:
        return consts.EXIT_BAD_ARGS
    except exceptions.DrawingError:
        return consts.EXIT_VERIFICATION_FAILED
    except (IOError, OSError, ValueError) as exc:
        logger.error('CrossCrit >>> {}'.format(exc))
        return consts.EXIT_BAD_ARGS


def main(argv=None):
    loader.create_logger()
    sys.exit(run(argv))


if __name__ == '__main__':
    main()
