#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains crosscrit utils functions
"""

from __future__ import print_function, division, absolute_import

import os
import json
import time
import logging
from functools import wraps

from crosscrit.core import consts

logger = logging.getLogger(consts.LOGGER_NAME)


def read_json(filename):
    """
    Get data from JSON file
    """

    if os.stat(filename).st_size == 0:
        return None
    else:
        try:
            with open(filename, 'r') as json_file:
                data = json.load(json_file)
        except Exception as err:
            logger.warning('Could not read {0}'.format(filename))
            raise err

    return data


def dump_json(data, pretty=False):
    """
    Returns the canonical JSON text of the given data. Keys are sorted so the same data always produces the same bytes
    :param object data: JSON serializable data
    :param bool pretty: whether or not output should be indented
    :return: JSON text
    :rtype: str
    """

    if pretty:
        return json.dumps(data, sort_keys=True, indent=2, separators=(',', ': '))

    return json.dumps(data, sort_keys=True, separators=(',', ':'))


def write_json(data, filename, pretty=False):
    """
    Writes given data into a JSON file
    :param object data: JSON serializable data
    :param str filename: path of the file to write
    :param bool pretty: whether or not output should be indented
    :return: Path of the written file
    :rtype: str
    """

    file_dir = os.path.dirname(os.path.abspath(filename))
    if not os.path.isdir(file_dir):
        os.makedirs(file_dir)

    with open(filename, 'w') as json_file:
        json_file.write(dump_json(data, pretty=pretty))
        json_file.write('\n')

    return filename


def get_thread_count():
    """
    Returns the number of worker threads requested through the environment. Single thread is the deterministic default
    :return: Number of worker threads (always >= 1)
    :rtype: int
    """

    value = os.environ.get(consts.THREADS_ENV, '')
    if not value:
        return 1
    try:
        threads = int(value)
    except ValueError:
        logger.warning('Invalid value "{}" for {}. Using a single thread.'.format(value, consts.THREADS_ENV))
        return 1

    return max(1, threads)


def timestamp(f):
    """
    Function decorator that gets the elapsed time with a more descriptive output

    :param f: fn, function
    """

    @wraps(f)
    def wrapper(*args, **kwargs):
        start_time = time.time()
        res = f(*args, **kwargs)
        logger.info('<{}> Elapsed time : {}'.format(f.__name__, time.time() - start_time))
        return res
    return wrapper
