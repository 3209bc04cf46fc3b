#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for the crosscrit command line front end
"""

import os
import json

import pytest

from crosscrit import cli
from crosscrit.core import consts, utils
from crosscrit.core.drawing import drawing


def _output(capsys):
    return json.loads(capsys.readouterr().out)


def test_gen_writes_graph_file(tmp_path):
    out = tmp_path / 'ccg13_2.json'
    assert cli.run(['gen', 'ccg13', '--k', '2', '--out', str(out)]) == consts.EXIT_OK
    data = utils.read_json(str(out))
    assert len(data['vertices']) == 16


def test_gen_rejects_bad_parameters():
    assert cli.run(['gen', 'ccg13', '--k', '1']) == consts.EXIT_BAD_ARGS
    assert cli.run(['gen', 'ccg13']) == consts.EXIT_BAD_ARGS
    assert cli.run(['gen', 'nope', '--k', '2']) == consts.EXIT_BAD_ARGS


def test_gen_dot(capsys):
    assert cli.run(['gen', 'k33', '--format', 'dot']) == consts.EXIT_OK
    assert capsys.readouterr().out.startswith('graph')


def test_crit_ccg13(capsys):
    assert cli.run(['crit', 'ccg13', '--k', '2']) == consts.EXIT_OK
    certificate = _output(capsys)
    assert certificate['ok']
    assert certificate['canonical_total'] == 13


def test_crit_ccg13_table(capsys):
    assert cli.run(['crit', 'ccg13', '--k', '2', '--pretty']) == consts.EXIT_OK
    assert 'ok=True' in capsys.readouterr().out


def test_crit_graph(capsys):
    assert cli.run(['crit', 'k5', '--c', '1']) == consts.EXIT_OK
    assert _output(capsys)['critical']
    assert cli.run(['crit', 'k5']) == consts.EXIT_BAD_ARGS


def test_thresholds(capsys):
    assert cli.run(['thresholds', 'boundleaves', '--D', '3', '--b', '1', '--k', '2']) == consts.EXIT_OK
    assert _output(capsys)['value'] == 3
    assert cli.run(['thresholds', 'rt', '--c', '13']) == consts.EXIT_OK
    assert _output(capsys)['value'] == 49
    assert cli.run(['thresholds', 'redraw', '--c', '13']) == consts.EXIT_OK
    assert _output(capsys)['value'] == [[6, 2]]
    assert cli.run(['thresholds', 'rt']) == consts.EXIT_BAD_ARGS


def test_solve(capsys):
    assert cli.run(['solve', 'k5']) == consts.EXIT_OK
    result = _output(capsys)
    assert result['cr'] == 1
    assert result['status'] == consts.YES


def test_solve_decision(capsys):
    assert cli.run(['solve', 'k33', '--decide', '0']) == consts.EXIT_OK
    assert _output(capsys)['status'] == consts.NO


def test_solve_budget_exceeded(capsys):
    assert cli.run(['solve', 'k5', '--nodes', '1', '--no-heuristic']) == consts.EXIT_BUDGET_EXCEEDED
    assert _output(capsys)['cr'] is None


def test_solve_seeded_by_edge_insertion(capsys):
    assert cli.run(['solve', 'k5', '--nodes', '1']) == consts.EXIT_OK
    assert _output(capsys)['cr'] == 1


def test_count_and_verify_drawing_files(tmp_path, capsys, canonical_2):
    good = tmp_path / 'canonical.json'
    utils.write_json(drawing.drawing_to_json(canonical_2), str(good))
    assert cli.run(['count', str(good)]) == consts.EXIT_OK
    assert _output(capsys)['total'] == 13
    assert cli.run(['verify', str(good)]) == consts.EXIT_OK
    assert _output(capsys)['ok']

    data = drawing.drawing_to_json(canonical_2)
    data['crossings'] = data['crossings'][:-1]
    broken = tmp_path / 'broken.json'
    utils.write_json(data, str(broken))
    assert cli.run(['verify', str(broken)]) == consts.EXIT_VERIFICATION_FAILED


def test_missing_drawing_file(tmp_path):
    assert cli.run(['count', str(tmp_path / 'missing.json')]) == consts.EXIT_BAD_ARGS


def test_draw(capsys):
    assert cli.run(['draw', 'fig2', '--k', '2', '--format', 'dot']) == consts.EXIT_OK
    assert capsys.readouterr().out.startswith('graph')
    assert cli.run(['draw', 'fig4b', '--k', '2', '--mirror']) == consts.EXIT_OK
    assert len(_output(capsys)['crossings']) > 0
    assert cli.run(['draw', 'fig5a', '--k', '2']) == consts.EXIT_BAD_ARGS


def test_draw_contracted(capsys):
    assert cli.run(['draw', 'fig2', '--k', '4', '--contract', '1']) == consts.EXIT_OK
    assert 'rotation' in _output(capsys)
    assert cli.run(['draw', 'fig2', '--k', '2', '--contract', '1']) == consts.EXIT_VERIFICATION_FAILED


def test_analyze(tmp_path, capsys):
    tree = tmp_path / 'tree.json'
    utils.write_json({'root': 0, 'edges': [[0, 1], [0, 2], [1, 3], [1, 4], [2, 5], [2, 6]]}, str(tree))
    assert cli.run(['analyze', 'depth', str(tree)]) == consts.EXIT_OK
    result = _output(capsys)
    assert result['b'] == 2
    assert result['leaves'] == 4


def test_analyze_nest_budget(tmp_path, capsys):
    theta = tmp_path / 'theta.json'
    utils.write_json({
        'nodes': ['w', 'z', 'a', 'b', 'c'],
        'edges': [['w', 'a'], ['a', 'z'], ['w', 'b'], ['b', 'z'], ['w', 'c'], ['c', 'z']],
        'positions': {'w': [0, 0], 'z': [2, 0], 'a': [1, 1], 'b': [1, 0], 'c': [1, -1]},
        'w': 'w'}, str(theta))
    assert cli.run(['analyze', 'nest', str(theta)]) == consts.EXIT_OK
    assert _output(capsys)['depth'] == 1

    data = utils.read_json(str(theta))
    data['budget'] = 1
    utils.write_json(data, str(theta))
    assert cli.run(['analyze', 'nest', str(theta)]) == consts.EXIT_BUDGET_EXCEEDED


def test_analyze_fangrid_candidate(tmp_path, capsys, fan_grid_fixture):
    g, _, positions, frame = fan_grid_fixture(1, 2)
    data = dict(frame)
    data.update({
        'nodes': list(g.nodes()), 'edges': [list(edge) for edge in g.edges()],
        'positions': dict((node, list(xy)) for node, xy in positions.items())})
    frame_file = tmp_path / 'frame.json'
    utils.write_json(data, str(frame_file))

    rays = [['v', 'p{}_0'.format(i), 'p{}_1'.format(i), 'q{}'.format(i)] for i in (1, 2)]
    good = tmp_path / 'good.json'
    utils.write_json({'rays': rays, 'rows': [['l1', 'p1_1', 'p2_1', 'r1']]}, str(good))
    assert cli.run(['analyze', 'fangrid', str(frame_file), '--candidate', str(good)]) == consts.EXIT_OK
    result = _output(capsys)
    assert result['ok']
    assert result['rows'] == [['l1', 'p1_1', 'p2_1', 'r1']]

    through_center = tmp_path / 'center.json'
    utils.write_json({'rays': rays, 'rows': [['l0', 'v', 'r0']]}, str(through_center))
    assert cli.run(
        ['analyze', 'fangrid', str(frame_file), '--candidate', str(through_center)]) == consts.EXIT_VERIFICATION_FAILED
    result = _output(capsys)
    assert not result['ok']
    assert 'center' in result['reason']

    no_rays = tmp_path / 'no_rays.json'
    utils.write_json({'rows': []}, str(no_rays))
    assert cli.run(['analyze', 'fangrid', str(frame_file), '--candidate', str(no_rays)]) == consts.EXIT_BAD_ARGS


def test_usage_errors():
    assert cli.run(['explode']) == consts.EXIT_BAD_ARGS
    assert cli.run([]) == consts.EXIT_BAD_ARGS


def test_main_configures_logging(restore_logger, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(['thresholds', 'rt', '--c', '13'])
    assert exc.value.code == consts.EXIT_OK
    assert os.path.isdir(os.environ[consts.LOG_DIR_ENV])
    assert _output(capsys)['value'] == 49
