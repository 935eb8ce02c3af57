"""Certified arccos bounds, region classification of f_{a,b} and the verification suite."""

import json

from ._carlson import (
    ArgumentError,
    DegenerateParams,
    DomainError,
    InvalidFamily,
    PoleError,
    PrecisionError,
    _envelope_json,
    _extrema_json,
    _suite_json,
    _table_json,
    approx_arccos,
    classify_numeric,
    classify_symbolic,
    f_eval,
    family_bounds,
    g_eval,
)
from ._carlson import arccos_hp as _arccos_hp


def arccos_hp(x, digits=40):
    """Decimal string of arccos(x) to `digits` significant digits. Accepts a float or a decimal string."""
    return _arccos_hp(repr(float(x)) if isinstance(x, (int, float)) else str(x), digits)


def extrema(a, b):
    return json.loads(_extrema_json(a, b))


def best_envelope(x, families=None):
    return json.loads(_envelope_json(x, ",".join(families or [])))


def bound_table(xs, families=None):
    return json.loads(_table_json(list(xs), ",".join(families or [])))


def run_suite(seed=7, digits=40):
    return json.loads(_suite_json(seed, digits))
