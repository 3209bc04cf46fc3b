#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains drawing model, realization, templates, contraction and export
"""
