"""Finite groups, power graphs and reduced power graphs, exact invariants, and theorem checks."""
from .graph_core import DiGraph, SimpleGraph
from .group_core import FiniteGroup, GroupError, build_group, from_cayley_table
from .invariants import Caps, InvariantReport, compute_report
from .powergraph import P, P_STAR, RP, RP_STAR, GraphVariant, build
from .theorems import CHECKS, SuiteReport, default_catalog, run_check, run_suite

__version__ = "0.1.0"

__all__ = ["CHECKS", "Caps", "DiGraph", "FiniteGroup", "GraphVariant", "GroupError",
           "InvariantReport", "P", "P_STAR", "RP", "RP_STAR", "SimpleGraph", "SuiteReport",
           "build", "build_group", "compute_report", "default_catalog", "from_cayley_table",
           "run_check", "run_suite"]
