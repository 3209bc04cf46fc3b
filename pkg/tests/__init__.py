#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Initialization module for crosscrit tests
"""
