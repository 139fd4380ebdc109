#!/usr/bin/env python3
"""Walk four matrices whose invariants cover the predicate landscape:

both predicates holding, both failing, correspondence without
characterization, and a failing matrix repaired by one unimodular pair.
"""

import sys

from padicsmith.classify import analyze
from padicsmith.exact import IntMatrix
from padicsmith.smith import smith_form


def show(title, rows, p):
    A = IntMatrix.from_rows(rows)
    rep = analyze(A, p)
    print(f"== {title} (p = {p})")
    print(f"   invariant factors: {smith_form(A).diag}")
    print(f"   coeff valuations:  {rep.f_vals}")
    print(f"   divisor valuations: {rep.delta_vals}")
    vals = ", ".join(str(v) for v in rep.eig_vals.values)
    print(f"   eigenvalue valuations: ({vals})")
    print(f"   p-characterized: {rep.p_characterized}, p-correspondent: {rep.p_correspondent}")
    print()
    return A, rep


def main():
    show("both predicates hold", [[3, -1, 3], [9, -10, 0], [3, 0, 3]], 3)

    show(
        "fractional eigenvalue valuations break correspondence",
        [
            [37, 192, 180, 369],
            [55, 268, 198, 531],
            [163, 758, 442, 1539],
            [198, 908, 486, 1858],
        ],
        2,
    )

    show(
        "correspondent but not characterized (hull below the points)",
        [
            [-20, -2, 81, -388],
            [18, -6, -84, 375],
            [7, 34, 3, 41],
            [13004, -11695, -64944, 289315],
        ],
        3,
    )

    A, _ = show(
        "all eigenvalue valuations collide",
        [
            [-48, -83, 91, -497],
            [-407, -666, 637, -3948],
            [83, 125, -91, 728],
            [-291, -599, 903, -3717],
        ],
        7,
    )

    U = IntMatrix.from_rows([[6, 1, 0, 20], [1, 1, 1, 0], [1, 1, 1, 2], [1, 3, 0, 1]])
    V = IntMatrix.from_rows([[1, 1, 1, 17], [0, 0, 3, 2], [0, 5, 1, 3], [1, 0, 9, 56]])
    show("the same matrix after one unimodular pair U A V", (U @ A @ V).to_lists(), 7)
    return 0


if __name__ == "__main__":
    sys.exit(main())
