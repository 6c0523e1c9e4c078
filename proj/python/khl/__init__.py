"""Exact Koszul homology, cross effects and λ-ring identity checks."""

import json

from . import _khl
from ._khl import IoError, KhlError, ParseError, ValidationError, identity_names, suite_names, verify_identity

__all__ = [
    "IoError",
    "KhlError",
    "ParseError",
    "ValidationError",
    "identity_names",
    "koszul_homology",
    "nfg_homology",
    "predicted_homology",
    "run_scenario",
    "suite_names",
    "verify_identity",
    "__version__",
]

__version__ = _khl.version()


def _ring(ring):
    if isinstance(ring, str):
        ring = {"kind": ring}
    return json.dumps(ring)


def run_scenario(scenario, jobs=1, timings=True, fmt="json"):
    """Run a scenario given as a dict or JSON text; JSON reports come back parsed."""
    text = scenario if isinstance(scenario, str) else json.dumps(scenario)
    out = _khl.run_scenario(text, jobs=jobs, timings=timings, format=fmt)
    return json.loads(out) if fmt == "json" else out


def koszul_homology(ring, ideal, rank, n, window=None, dual=False):
    """H_0..H_n of the (dual) Koszul complex of the resolution of (R/I)^rank."""
    return json.loads(_khl.koszul_homology(_ring(ring), list(ideal), rank, n, window, dual))


def predicted_homology(ring, ideal, rank, n, window=None, dual=False):
    """Schur-module prediction for koszul_homology."""
    return json.loads(_khl.predicted_homology(_ring(ring), list(ideal), rank, n, window, dual))


def nfg_homology(ring, ideal, rank, functor, window=None):
    """Homology of N F Γ of the resolution of (R/I)^rank, F such as "Sym2" or "Div2"."""
    return json.loads(_khl.nfg_homology(_ring(ring), list(ideal), rank, functor, window))
