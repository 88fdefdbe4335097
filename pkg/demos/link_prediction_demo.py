"""Rank the missing edges of a strip by effective resistance.

Low resistance between two non-adjacent vertices means the network
already connects them well, so they are the most natural candidates
for new links. This prints the full ranking for n = 9 and shows how
the two tie policies hand out a fixed prediction budget.
"""

from twotree.graphs import format_resistance
from twotree.ranking import predict_links, rank_nonedges, render_ranking


def main():
    n = 9
    groups = rank_nonedges(n)

    print(f"non-edge ranking for the straight strip on {n} vertices")
    print()
    for gid, group in enumerate(groups, start=1):
        pairs = " & ".join("{%d,%d}" % p for p in group.pairs)
        print(f"  group {gid:2d}  r = {format_resistance(group.value):>8}  {pairs}")
    print()
    print("one line form:")
    print(" ", render_ranking(groups))
    print()

    budget = 3
    strict = predict_links(n, budget, tie_policy="lowest-index")
    grouped = predict_links(n, budget, tie_policy="report-group")
    print(f"budget of {budget} predictions:")
    print(f"  lowest-index : {strict}")
    print(f"  report-group : {grouped}  (whole tie group kept)")


if __name__ == "__main__":
    main()
