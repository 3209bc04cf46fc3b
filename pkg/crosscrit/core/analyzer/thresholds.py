#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the explicit threshold functions used by the structural analyses.
All values are exact Python integers.
"""

from __future__ import print_function, division, absolute_import

import math
import logging
from collections import namedtuple

from crosscrit.core import consts, exceptions

logger = logging.getLogger(consts.LOGGER_NAME)

ExtendThresholds = namedtuple('ExtendThresholds', ['s1', 's2', 'd', 'd_s2', 'value'])


def _check_positive(**values):
    for name, value in values.items():
        if value < 1:
            raise exceptions.AnalyzerError('{} must be at least 1, got {}'.format(name, value))


def bound_leaves_threshold(D, b, k):
    """
    Returns the largest number of leaves of a rooted tree with maximum degree at most D, b(T) <= b and fewer than k
    branching vertices on every root-leaf path.
    f(D, b, k) = 1 when k = 1 or b = 0, otherwise f(D, b, k - 1) + (D - 1) * f(D, b - 1, k - 1)
    :param int D: maximum degree (>= 1)
    :param int b: binary minor depth bound (>= 0)
    :param int k: branching vertex bound (>= 1)
    :return: int
    """

    _check_positive(D=D, k=k)
    if b < 0:
        raise exceptions.AnalyzerError('b must be non negative, got {}'.format(b))

    # row[j] holds f(D, j, level)
    row = [1] * (b + 1)
    for _ in range(2, k + 1):
        row = [1] + [row[j] + (D - 1) * row[j - 1] for j in range(1, b + 1)]

    return row[b]


def start_threshold(D, b, k):
    """
    Returns the degree of the center above which a 2-connected plane graph holds a (0 x k)-fan-grid, a subtree with
    b(T) > b or two vertices joined by more than D internally disjoint paths
    """

    return bound_leaves_threshold(D, b + 1, 3 * k + 5)


def extend_thresholds(D, b, m, k, t):
    """
    Returns the constants of the fan-grid growth step: s1 = 2 f(D, b, 3k + 5), s2 = 2 s1 m, d(l) = (t (s1 - 1))^l and
    the number of rays t d(s2) + 1 that guarantees the growth outcomes
    :param int D: bond bound
    :param int b: binary minor depth bound
    :param int m: nest depth bound
    :param int k: number of rays wanted after the growth step
    :param int t: face bound
    :return: ExtendThresholds whose d member is a callable
    """

    _check_positive(D=D, b=b, m=m, k=k, t=t)

    s1 = 2 * bound_leaves_threshold(D, b, 3 * k + 5)
    s2 = 2 * s1 * m
    base = t * (s1 - 1)

    def d(l):
        if l < 0:
            raise exceptions.AnalyzerError('d(l) is defined for l >= 0, got {}'.format(l))
        if base > 1 and l * math.log10(base) > consts.MAX_THRESHOLD_DIGITS:
            raise exceptions.AnalyzerError(
                'd({}) has more than {} digits'.format(l, consts.MAX_THRESHOLD_DIGITS))
        return base ** l

    d_s2 = d(s2)

    return ExtendThresholds(s1, s2, d, d_s2, t * d_s2 + 1)


def richter_thomassen_bound(c):
    """
    Returns ceil(5c / 2 + 16), the number of crossings a c-crossing-critical graph can always be drawn with
    """

    _check_positive(c=c)

    return (5 * c + 1) // 2 + 16


def redraw_escape_pairs(c):
    """
    Returns the pairs (k, r) with r >= 2, k >= 0 and k r <= c - 1 whose redrawing bound c - 1 - k r + k (k - 1) / 2
    reaches c. The list is empty for every c <= 12, and (6, 2) is the only pair at c = 13
    :param int c: crossing number
    :return: list(tuple(int, int))
    """

    _check_positive(c=c)

    pairs = list()
    for r in range(2, c):
        for k in range((c - 1) // r + 1):
            if c - 1 - k * r + k * (k - 1) // 2 >= c:
                pairs.append((k, r))

    return sorted(pairs)
