"""Numerical probes of asymptotic behavior.

Everything here is labeled conjectural: the tables report trends, they do
not prove limits, and nothing in the test suite asserts a conjecture.
Exact arithmetic is used up to max_exact_vertices() vertices (override with
the RESIST_MAX_EXACT_N environment variable), floating point beyond.
"""

import os
from fractions import Fraction

from .engine import resistance_det, resistance_float
from .graphs import bent_linear_2tree, straight_linear_ktree, triangular_grid

DEFAULT_MAX_EXACT = 300
LABEL = "conjectural"


def max_exact_vertices() -> int:
    env = os.environ.get("RESIST_MAX_EXACT_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"RESIST_MAX_EXACT_N must be an integer, got {env!r}")
    return DEFAULT_MAX_EXACT


def _endpoint_value(g, i, j):
    if g.vertex_count <= max_exact_vertices():
        return resistance_det(g, i, j).value, "exact"
    return resistance_float(g, i, j).value, "float"


def ktree_increments(k: int, n_max: int) -> dict:
    """Endpoint resistance increments on the straight linear k-tree.

    The increment r(1, n) - r(1, n-1) appears to approach
    6 / (k (k+1) (2k+1)); the table reports values and increments so the
    trend can be eyeballed. k=1 is the path (increment exactly 1), k=2 the
    strip (increment tending to 1/5).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n_max < k + 2:
        raise ValueError(f"n_max must be >= {k + 2}, got {n_max}")
    target = Fraction(6, k * (k + 1) * (2 * k + 1))
    rows = []
    prev = None
    for n in range(k + 1, n_max + 1):
        g = straight_linear_ktree(n, k)
        value, method = _endpoint_value(g, 1, n)
        inc = None
        if prev is not None:
            inc = value - prev if method == "exact" and isinstance(prev, Fraction) else float(value) - float(prev)
        rows.append({"n": n, "value": value, "increment": inc, "method": method})
        prev = value
    return {
        "kind": "ktree-increments",
        "k": k,
        "target": target,
        "rows": rows,
        "label": LABEL,
    }


def triangle_grid_growth(rows_max: int) -> dict:
    """Apex-to-corner resistance of the triangular grid as it grows.

    Differences between consecutive sizes are reported; the growth looks
    logarithmic in the number of cell rows, but that is only a trend.
    """
    if rows_max < 2:
        raise ValueError(f"rows_max must be >= 2, got {rows_max}")
    rows = []
    prev = None
    for r in range(2, rows_max + 1):
        grid = triangular_grid(r)
        value, method = _endpoint_value(grid.graph, grid.apex, grid.bottom_left)
        diff = None
        increasing = None
        if prev is not None:
            diff = float(value) - float(prev)
            increasing = diff > 0
        rows.append(
            {
                "vertex_rows": r,
                "cell_rows": grid.cell_rows,
                "cells": grid.cells,
                "vertices": grid.graph.vertex_count,
                "value": value,
                "difference": diff,
                "increasing": increasing,
                "method": method,
            }
        )
        prev = value
    return {"kind": "triangle-grid-growth", "rows": rows, "label": LABEL}


def _bend_position(n, rule):
    if rule == "middle":
        return min(max(n // 2, 3), n - 3)
    if rule == "first":
        return 3
    if rule == "last":
        return n - 3
    raise ValueError(f"unknown bend rule {rule!r}")


def bent_diameter_growth(n_max: int, bend_rule: str = "middle") -> dict:
    """Endpoint resistance of bent strips as the strip grows.

    bend_rule places the bend: "middle", "first" (always at 3), or "last"
    (always at n-3). Increments are reported for trend-watching only.
    """
    if n_max < 6:
        raise ValueError(f"n_max must be >= 6, got {n_max}")
    rows = []
    prev = None
    for n in range(6, n_max + 1):
        bend_k = _bend_position(n, bend_rule)
        g = bent_linear_2tree(n, bend_k)
        value, method = _endpoint_value(g, 1, n)
        inc = float(value) - float(prev) if prev is not None else None
        rows.append(
            {
                "n": n,
                "bend_k": bend_k,
                "value": value,
                "increment": inc,
                "method": method,
            }
        )
        prev = value
    return {
        "kind": "bent-diameter-growth",
        "bend_rule": bend_rule,
        "rows": rows,
        "label": LABEL,
    }
