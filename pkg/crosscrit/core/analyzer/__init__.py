"""
Structural analyses of plane graphs and rooted trees: thresholds, combs, fan-grids, nests, C-bridges and Menger
path counting
"""
