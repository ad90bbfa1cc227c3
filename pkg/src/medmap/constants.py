"""Pinned SI constants (CODATA 2018).

Everything outside the force/experiment layer works in natural units; these
constants enter only where results are reported in SI.
"""

C_LIGHT = 2.99792458e8  # m/s
EPS0 = 8.8541878128e-12  # F/m
HBAR = 1.054571817e-34  # J s
