"""Print the asymptotic probe tables.

Endpoint-resistance increments for k-trees and the apex-to-corner
resistance of growing triangular grids. Every value is labeled
conjectural; the tables show trends, they prove nothing.
"""

from fractions import Fraction

from twotree.conjectures import (
    ktree_increments,
    triangle_grid_growth,
)


def show(x):
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return f"{float(x):.9f}"
    if isinstance(x, float):
        return f"{x:.9f}"
    return str(x)


def main():
    for k in (1, 2, 3):
        table = ktree_increments(k, k + 14)
        target = table["target"]
        print(f"k = {k}: endpoint increments vs target {target} = {float(target):.9f}")
        print(f"  {'n':>4} {'r(1,n)':>14} {'increment':>14}  method")
        for row in table["rows"]:
            print(
                f"  {row['n']:>4} {show(row['value']):>14}"
                f" {show(row['increment']):>14}  {row['method']}"
            )
        print(f"  label: {table['label']}")
        print()

    table = triangle_grid_growth(10)
    print("triangular grid, apex to corner:")
    print(f"  {'rows':>5} {'cells':>6} {'vertices':>9} {'value':>13} {'diff':>12}")
    for row in table["rows"]:
        print(
            f"  {row['cell_rows']:>5} {row['cells']:>6} {row['vertices']:>9}"
            f" {show(row['value']):>13} {show(row['difference']):>12}"
        )
    print(f"  label: {table['label']}")


if __name__ == "__main__":
    main()
