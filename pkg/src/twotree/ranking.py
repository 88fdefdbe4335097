"""Resistance ranking of non-edges, for link prediction on the strip.

Lower resistance means a more likely link. On the straight strip the order
is fully structural: smaller offset k first, and within an offset the
centered pairs first, moving outward, with mirror pairs exactly tied.
rank_nonedges builds the order both structurally and by sorting exact
values, and refuses to answer if the two disagree.
"""

from dataclasses import dataclass
from fractions import Fraction

from .engine import resistance_det
from .formulas import r_closed
from .graphs import WeightedGraph


@dataclass(frozen=True)
class TieGroup:
    value: Fraction
    pairs: tuple


def _structural_groups(n):
    groups = []
    for k in range(3, n):
        q = n - k
        centers = []
        if q % 2 == 1:
            mid = (q + 1) // 2
            centers.append((mid,))
            for d in range(1, mid):
                centers.append((mid - d, mid + d))
        else:
            lo, hi = q // 2, q // 2 + 1
            centers.append((lo, hi))
            for d in range(1, lo):
                centers.append((lo - d, hi + d))
        for js in centers:
            groups.append(tuple(sorted((j, j + k) for j in js)))
    return groups


def rank_nonedges(n: int):
    """Tie groups of non-edges of the straight strip, most likely link first.

    The structural order and the exact-value order are both computed; any
    disagreement raises. Returns a list of TieGroup.
    """
    if n < 5:
        raise ValueError(f"ranking needs n >= 5, got {n}")
    m = n - 2
    structural = _structural_groups(n)

    values = {}
    for k in range(3, n):
        for j in range(1, n - k + 1):
            values[(j, j + k)] = r_closed(m, j, k)
    by_value = sorted(values, key=lambda p: (values[p], p))
    grouped = []
    for pair in by_value:
        if grouped and values[grouped[-1][0]] == values[pair]:
            grouped[-1].append(pair)
        else:
            grouped.append([pair])
    value_order = [tuple(g) for g in grouped]

    if structural != value_order:
        raise AssertionError(
            f"structural and value orders disagree for n={n}: "
            f"{structural} vs {value_order}"
        )
    return [TieGroup(value=values[g[0]], pairs=g) for g in structural]


def render_ranking(groups) -> str:
    """Canonical one-line serialization: groups joined by ', ',
    tied pairs joined by ' & ', each pair as {u,v}."""
    return ", ".join(
        " & ".join("{%d,%d}" % (u, v) for u, v in g.pairs) for g in groups
    )


def predict_links(n: int, count: int, tie_policy: str = "lowest-index"):
    """The `count` most likely new links on the straight strip.

    tie_policy "lowest-index": flatten tie groups (pairs within a group are
    in (u, v) order) and return exactly `count` pairs. "report-group": never
    split a tie group; if the cutoff lands inside one, the whole group is
    included, so the result may exceed `count`.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    groups = rank_nonedges(n)
    total = sum(len(g.pairs) for g in groups)
    if count > total:
        raise ValueError(f"only {total} non-edges exist for n={n}, asked for {count}")
    if tie_policy == "lowest-index":
        flat = [p for g in groups for p in g.pairs]
        return flat[:count]
    if tie_policy == "report-group":
        out = []
        for g in groups:
            if len(out) >= count:
                break
            out.extend(g.pairs)
        return out
    raise ValueError(f"unknown tie_policy {tie_policy!r}")


def rank_nonedges_graph(g: WeightedGraph):
    """Resistance ranking of non-edges of an arbitrary connected graph.

    Exact determinant path, so ties are exact. Returns TieGroups; ties are
    grouped by equal value, ordered by (value, pair).
    """
    adj = g.adjacency()
    nonedges = [
        (u, v)
        for u in g.vertices
        for v in range(u + 1, g.vertex_count + 1)
        if v not in adj[u]
    ]
    values = {p: resistance_det(g, *p).value for p in nonedges}
    by_value = sorted(values, key=lambda p: (values[p], p))
    groups = []
    for pair in by_value:
        if groups and values[groups[-1][0]] == values[pair]:
            groups[-1].append(pair)
        else:
            groups.append([pair])
    return [TieGroup(value=values[g0[0]], pairs=tuple(g0)) for g0 in groups]
