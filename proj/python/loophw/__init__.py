"""Exact highest-weight analysis for the sl2 loop algebra.

Thin wrappers over the C++ core; every result is plain JSON data.
"""

import json

from . import _core
from ._core import CapError, NotHighestWeight, ParameterMismatch

__all__ = ["analyze", "network", "network_dot", "verify", "run_cli",
           "CapError", "NotHighestWeight", "ParameterMismatch"]


def analyze(params, construct="weyl", cap=0):
    """Highest-weight report for a built module, e.g. analyze("2:2,3:1", "packed")."""
    return json.loads(_core.analyze_json(params, construct, cap))


def network(params, jobs=1):
    """Submodule network of the Weyl module with exact quotient dimensions."""
    return json.loads(_core.network_json(params, jobs))


def network_dot(params):
    return _core.network_dot(params)


def verify(params=None, seed=None, window=None):
    kwargs = {}
    if seed is not None:
        kwargs["seed"] = seed
    if window is not None:
        kwargs["window"] = window
    return json.loads(_core.verify_json(params, **kwargs))


def run_cli(*args):
    """Run the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
