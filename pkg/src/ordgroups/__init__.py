"""Orderable groups: braid, free, lattice, piecewise-linear and finitely presented groups.

Each order is exposed as an :class:`~ordgroups.order_core.OrderOracle`
so the generic property checkers in :mod:`ordgroups.order_core` apply to all of them.
"""
from .errors import InputError, OrderError, ResourceBoundExceeded
from .order_core import Cmp, OrderOracle, Report, SampleSet, Sign

__version__ = "0.1.0"

__all__ = ["Cmp", "InputError", "OrderError", "OrderOracle", "Report", "ResourceBoundExceeded", "SampleSet", "Sign"]
