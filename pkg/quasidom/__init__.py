#!/usr/bin/env python3

"""
Minimum [1,2]-dominating sets of interval graphs.

A set D is [1,2]-dominating when every vertex outside D has one or two
neighbors in D.  On interval graphs the minimum is computed by a memoized
dynamic program over the right-endpoint numbering (`quasidom.dp`), checked
against an exact sweep (`quasidom.sweep`) and a brute force branch and bound
(`quasidom.oracle`).  On circle graphs the problem is hard; `quasidom.reduction`
builds the 3-SAT gadget and checks it on small formulas.
"""

from . import internals
from .dp import GammaEvaluator, Solution, solve_gamma12
from .graph import IntervalGraph, is_1j_dominating, read_edge_list, read_intervals
from .oracle import MembershipConstraint, min_dom
from .reduction import build_gadget, parse_dimacs_cnf, verify_reduction_small

qd_context = internals.qd_context
