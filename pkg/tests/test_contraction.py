#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for the wedge contraction rewrite
"""

import pytest

from crosscrit.core import consts, exceptions, families
from crosscrit.core.drawing import contraction, drawing, planarize, templates


@pytest.mark.parametrize('k', [3, 4, 5, 6])
def test_contraction_never_adds_crossings(k):
    d = templates.canonical_drawing(k)
    plan = contraction.plan_contraction(d, 1)
    contracted = contraction.wedge_contraction(d, 1)

    assert contracted.graph == families.generate_ccg13k(k - (plan.size - 1))
    assert drawing.verify_drawing(contracted)
    assert drawing.crossing_count(contracted).total <= consts.CCG13_CROSSINGS


def test_rotation_cases_are_known():
    d = templates.canonical_drawing(4)
    for i in range(1, 4):
        assert contraction.rotation_case(d, i) in (
            contraction.ADJACENT_FORWARD, contraction.ADJACENT_BACKWARD, contraction.OPPOSITE)


def test_rotation_case_index_out_of_range(canonical_2):
    with pytest.raises(exceptions.ContractionError):
        contraction.rotation_case(canonical_2, 0)
    with pytest.raises(exceptions.ContractionError):
        contraction.rotation_case(canonical_2, 2)


def test_two_wedges_cannot_be_contracted(canonical_2):
    with pytest.raises(exceptions.ContractionError):
        contraction.wedge_contraction(canonical_2, 1)


def test_contraction_needs_a_ccg13_drawing(k4):
    with pytest.raises(exceptions.ContractionError):
        contraction.wedge_contraction(planarize.build_drawing(k4, dict()), 1)
