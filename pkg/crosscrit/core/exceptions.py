#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains crosscrit exceptions
"""

from __future__ import print_function, division, absolute_import

import logging

from crosscrit.core import consts

logger = logging.getLogger(consts.LOGGER_NAME)


class CrossCritException(Exception):
    def __init__(self, message, *args):

        crosscrit_message = 'CrossCrit >>> {}'.format(message)
        logger.error(crosscrit_message)

        super(CrossCritException, self).__init__(crosscrit_message, *args)


# ======================================================================================================================
# GRAPHS
# ======================================================================================================================

class GraphError(CrossCritException):
    pass


class UnknownVertexError(GraphError):
    def __init__(self, vertex):
        super(UnknownVertexError, self).__init__('Unknown vertex: {}'.format(vertex))


class UnknownEdgeError(GraphError):
    def __init__(self, edge):
        super(UnknownEdgeError, self).__init__('Unknown edge: {}'.format(edge))


class ZipError(GraphError):
    pass


class ZipDegreeError(ZipError):
    pass


class ZipThickEdgeError(ZipError):
    pass


class ZipDisconnectedError(ZipError):
    pass


class ZipMatchingError(ZipError):
    pass


# ======================================================================================================================
# FAMILIES
# ======================================================================================================================

class FamilyParameterError(CrossCritException):
    pass


class ExpansionProfileError(CrossCritException):
    pass


# ======================================================================================================================
# DRAWINGS
# ======================================================================================================================

class DrawingError(CrossCritException):
    pass


class InvalidDrawingError(DrawingError):
    def __init__(self, diagnostic):
        self.diagnostic = diagnostic
        super(InvalidDrawingError, self).__init__('Invalid drawing: {}'.format(diagnostic))


class TemplateError(DrawingError):
    pass


class ContractionError(DrawingError):
    pass


# ======================================================================================================================
# SOLVER
# ======================================================================================================================

class SolverError(CrossCritException):
    pass


class OracleSizeError(SolverError):
    pass


# ======================================================================================================================
# ANALYZER
# ======================================================================================================================

class AnalyzerError(CrossCritException):
    pass


class CycleBudgetExceeded(AnalyzerError):
    def __init__(self, budget):
        self.budget = budget
        super(CycleBudgetExceeded, self).__init__('Cycle budget of {} cycles exhausted'.format(budget))
