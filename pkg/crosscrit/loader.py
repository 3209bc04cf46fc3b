#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Initialization module for crosscrit
"""

from __future__ import print_function, division, absolute_import

import os
import logging.config

from crosscrit.core import consts


def get_logs_path():
    """
    Returns folder where crosscrit log files are stored
    :return: Absolute path to the logs folder
    :rtype: str
    """

    default_path = os.path.join(os.path.expanduser('~'), 'crosscrit', 'logs')

    return os.path.normpath(os.environ.get(consts.LOG_DIR_ENV, default_path))


def create_logger():
    """
    Creates crosscrit logger based on logging.ini configuration file
    """

    logger_path = get_logs_path()
    if not os.path.isdir(logger_path):
        os.makedirs(logger_path)

    logging.config.fileConfig(
        os.path.normpath(os.path.join(os.path.dirname(__file__), 'logging.ini')), disable_existing_loggers=False)
