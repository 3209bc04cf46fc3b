#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains constants definitions used by crosscrit
"""

from __future__ import print_function, division, absolute_import

# Defines name of the logger used by all crosscrit modules
LOGGER_NAME = 'crosscrit'

# Defines Environment Variable that overrides the number of worker threads used by sweeps and solves
THREADS_ENV = 'CROSSCRIT_THREADS'

# Defines Environment Variable that overrides the folder where log files are written
LOG_DIR_ENV = 'CROSSCRIT_LOG_DIR'

# Exit codes returned by the command line front end
EXIT_OK = 0
EXIT_BAD_ARGS = 2
EXIT_VERIFICATION_FAILED = 3
EXIT_BUDGET_EXCEEDED = 4

# Crossing number reached by every member of the ccg13 family
CCG13_CROSSINGS = 13

# Smallest number of wedges accepted by the ccg13 generator (one wedge draws with 12 crossings)
CCG13_MIN_K = 2

# Thicknesses of the edges of each bowtie cycle, listed from x: xu1, u1u2, u2u3, u3u4, u4u5, u5x
BOWTIE_CYCLE_THICKNESS = (7, 5, 4, 4, 4, 1)

# Edges joining both bowtie cycles with their thickness
BOWTIE_CROSS_EDGES = (('u2', 'v3', 1), ('u3', 'v2', 1), ('u1', 'v4', 2), ('u4', 'v1', 2))

# Thickness of the 4-to-3 expansion gadget edges
EXPANSION_MAIN_THICKNESS = 4
EXPANSION_BRIDGE_THICKNESS = 3

# Vertex degrees allowed at zip product vertices
ZIP_DEGREES = (2, 3)

# Default solver budget
DEFAULT_NODE_LIMIT = 2000000
DEFAULT_TIME_LIMIT = 60.0

# Maximum number of crossings allowed between the same pair of edges in a good drawing
DEFAULT_PAIR_CAP = 1

# Edge orders tried by the edge insertion heuristic and reinsertion rounds per order
INSERTION_TRIALS = 24
INSERTION_ROUNDS = 4

# Size limits of the brute force crossing number oracle
ORACLE_MAX_VERTICES = 8
ORACLE_MAX_EDGES = 14

# Default number of cycles enumerated by nest searches before giving up
DEFAULT_CYCLE_BUDGET = 20000

# Family tags
CCG13 = 'CCG13'
CCGI13 = 'CCGI13'
GCD = 'GCD'
GCDI = 'GCDI'
FAMILIES = (CCG13, CCGI13, GCD, GCDI)

# Drawing template tags
FIG2 = 'FIG2'
FIG2_DOTTED_A = 'FIG2_DOTTED_A'
FIG2_DOTTED_B = 'FIG2_DOTTED_B'
FIG4A = 'FIG4A'
FIG4A_SHIFTED = 'FIG4A_SHIFTED'
FIG4B = 'FIG4B'
FIG5A = 'FIG5A'
FIG5B = 'FIG5B'
EXPANDED = 'EXPANDED'
FIGURES = (FIG2, FIG2_DOTTED_A, FIG2_DOTTED_B, FIG4A, FIG4A_SHIFTED, FIG4B, FIG5A, FIG5B, EXPANDED)

# Figures whose drawing depends on a wedge index
WEDGE_FIGURES = (FIG5A, FIG5B)

# Crossing totals of every template
FIGURE_TOTALS = {
    FIG2: 13, FIG2_DOTTED_A: 13, FIG2_DOTTED_B: 13, FIG4A: 14, FIG4A_SHIFTED: 14, FIG4B: 16,
    FIG5A: 13, FIG5B: 18, EXPANDED: 13
}

# Solver outcomes
YES = 'yes'
NO = 'no'
BUDGET_EXCEEDED = 'budget-exceeded'

# Largest threshold value (in decimal digits) evaluated exactly by the analyzer
MAX_THRESHOLD_DIGITS = 1000000

# Number of tooth subsets tried by the exhaustive Q-clean subcomb search
SUBCOMB_SEARCH_LIMIT = 20000
