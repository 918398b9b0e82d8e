"""Legendrian front and satellite calculator."""

import json as _json

from ._core import (
    FrontDiagram,
    LegcalcError,
    PatternFront,
    certificate,
    compose,
    gen_identity,
    gen_P,
    gen_Q,
    gen_R,
    iterate,
    parse,
    satellite,
    sb_bounds,
)
from ._core import run as _run


def cli(*args, stdin=""):
    """Run a legcalc command in-process; returns (exit code, parsed JSON or None, stderr)."""
    code, out, err = _run(list(args), stdin)
    try:
        data = _json.loads(out) if out.strip() else None
    except ValueError:
        data = out
    return code, data, err


__all__ = [
    "FrontDiagram",
    "LegcalcError",
    "PatternFront",
    "certificate",
    "cli",
    "compose",
    "gen_identity",
    "gen_P",
    "gen_Q",
    "gen_R",
    "iterate",
    "parse",
    "satellite",
    "sb_bounds",
]
