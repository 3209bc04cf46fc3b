#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for crosscrit utils and logger loading
"""

import os

from crosscrit import loader
from crosscrit.core import consts, utils


def test_dump_json_is_sorted_and_compact():
    assert utils.dump_json({'b': 1, 'a': [1, 2]}) == '{"a":[1,2],"b":1}'
    assert utils.dump_json({'b': 1, 'a': 2}, pretty=True) == '{\n  "a": 2,\n  "b": 1\n}'


def test_write_and_read_json(tmp_path):
    path = str(tmp_path / 'nested' / 'data.json')
    assert utils.write_json({'x': 1}, path) == path
    assert utils.read_json(path) == {'x': 1}

    empty = tmp_path / 'empty.json'
    empty.write_text('')
    assert utils.read_json(str(empty)) is None


def test_thread_count(monkeypatch):
    assert utils.get_thread_count() == 1
    monkeypatch.setenv(consts.THREADS_ENV, '4')
    assert utils.get_thread_count() == 4
    monkeypatch.setenv(consts.THREADS_ENV, 'many')
    assert utils.get_thread_count() == 1
    monkeypatch.setenv(consts.THREADS_ENV, '0')
    assert utils.get_thread_count() == 1


def test_timestamp_keeps_function_name():
    @utils.timestamp
    def add(a, b):
        return a + b

    assert add(1, 2) == 3
    assert add.__name__ == 'add'


def test_logs_path_follows_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(consts.LOG_DIR_ENV, str(tmp_path / 'elsewhere'))
    assert loader.get_logs_path() == os.path.normpath(str(tmp_path / 'elsewhere'))
