"""Exact LP feasibility by the simplex method with Bland's rule.

Only phase 1 is needed: decide whether ``{x >= 0 : A x = b}`` is empty.
All pivots are exact, so the answer is a proof, not an estimate.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .field import Scalar, sign, simplify
from .linalg import reciprocal


def feasible_point(a: Sequence[Sequence[Scalar]], b: Sequence[Scalar]) -> Optional[List[Scalar]]:
    """A point of ``{x >= 0 : a x = b}``, or ``None`` if it is empty."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = []
    for i in range(m):
        r = [simplify(x) for x in a[i]]
        rhs = simplify(b[i])
        if sign(rhs) < 0:
            r = [-x for x in r]
            rhs = -rhs
        # one artificial variable per row, columns n..n+m-1
        rows.append(r + [1 if k == i else 0 for k in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m
    # reduced costs of min sum(artificials): c_j - sum over rows of column j
    cost = [0] * (width + 1)
    for r in rows:
        for j in range(n):
            if r[j]:
                cost[j] = cost[j] - r[j]
        cost[width] = cost[width] - r[width]
    while True:
        enter = next((j for j in range(width) if sign(cost[j]) < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, r in enumerate(rows):
            if sign(r[enter]) > 0:
                ratio = r[width] * reciprocal(r[enter])
                if (leave is None or sign(ratio - best) < 0
                        or (sign(ratio - best) == 0 and basis[i] < basis[leave])):
                    leave, best = i, ratio
        if leave is None:
            # cannot happen in phase 1: the objective is bounded below by 0
            raise ArithmeticError("phase-1 LP reported unbounded")
        _pivot(rows, cost, leave, enter, width)
        basis[leave] = enter
    if sign(cost[width]) != 0:
        return None
    x = [0] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][width]
    return x


def _pivot(rows, cost, leave: int, enter: int, width: int):
    pr = rows[leave]
    inv = reciprocal(pr[enter])
    pr = rows[leave] = [simplify(x * inv) if x else 0 for x in pr]
    nz = [k for k in range(width + 1) if pr[k]]
    for i, r in enumerate(rows):
        f = r[enter]
        if i != leave and f:
            for k in nz:
                r[k] = simplify(r[k] - f * pr[k])
    f = cost[enter]
    if f:
        for k in nz:
            cost[k] = simplify(cost[k] - f * pr[k])


def is_edge(points: Sequence[Sequence[Scalar]], i: int, j: int) -> bool:
    """True iff ``points[i]`` and ``points[j]`` span an edge of their convex hull.

    Looks for a linear functional ``u`` with ``u.p_i = u.p_j`` and
    ``u.p_i >= u.p_r + 1`` for every other point.  The points are assumed
    distinct and in convex position.
    """
    p, q = points[i], points[j]
    dim = len(p)
    diff = [simplify(x - y) for x, y in zip(p, q)]
    others = [r for k, r in enumerate(points) if k != i and k != j]
    # variables: u+ (dim), u- (dim), one surplus per other point
    ncols = 2 * dim + len(others)
    a = [diff + [-x for x in diff] + [0] * len(others)]
    b = [0]
    for k, r in enumerate(others):
        g = [simplify(x - y) for x, y in zip(p, r)]
        surplus = [0] * len(others)
        surplus[k] = -1
        a.append(g + [-x for x in g] + surplus)
        b.append(1)
    assert all(len(row) == ncols for row in a)
    return feasible_point(a, b) is not None
