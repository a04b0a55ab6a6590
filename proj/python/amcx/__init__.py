"""Numerical checks for the augmented Monge-Ampere counterexample family."""

import json

from ._core import (
    JetError,
    RunConfig,
    RunResult,
    SingularMatrixError,
    alpha,
    blowup,
    certify_point,
    det_routes,
    f,
    run_suites,
    version,
    z,
)

__version__ = version()


def run(subcommand="all", **options):
    """Run a verification suite and return the parsed JSON report."""
    cfg = RunConfig()
    cfg.subcommand = subcommand
    for key, value in options.items():
        if not hasattr(cfg, key):
            raise TypeError(f"unknown option {key!r}")
        setattr(cfg, key, value)
    return json.loads(run_suites(cfg).json)


__all__ = [
    "JetError",
    "RunConfig",
    "RunResult",
    "SingularMatrixError",
    "alpha",
    "blowup",
    "certify_point",
    "det_routes",
    "f",
    "run",
    "run_suites",
    "version",
    "z",
]
