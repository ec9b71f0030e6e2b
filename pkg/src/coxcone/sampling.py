"""Random support functions for stress-testing the membership oracles.

Four kinds, so that both verdicts show up:

* ``noise``: independent integers in ``[-20, 20]`` (almost never members);
* ``member``: nonnegative combinations of root segments, weight polytopes
  and a linear function (always members);
* ``boundary``: a member pushed toward noise until a facet becomes tight;
* ``beyond``: the same push, slightly past the boundary (never members).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from typing import List, Optional

from .field import Scalar, sign, simplify
from .linalg import reciprocal
from .submod import SubmodularCone, SupportFunction

KINDS = ("noise", "member", "boundary", "beyond")


def noise(cone: SubmodularCone, rng: random.Random, bound: int = 20) -> SupportFunction:
    return SupportFunction(cone.fan, [rng.randint(-bound, bound) for _ in cone.fan.rays])


def _roots(cone: SubmodularCone) -> List[tuple]:
    pos = cone.rs.pos_roots
    return pos + [tuple(-x for x in r) for r in pos]


def _coroot(rs, a) -> tuple:
    # alpha^vee = 2 alpha / <alpha, alpha>
    return tuple(simplify(x * Fraction(2) / rs.inner(a, a)) for x in a)


def member(cone: SubmodularCone, rng: random.Random, terms: int = 4,
           integral: bool = False) -> SupportFunction:
    """A random point of the cone.

    With ``integral`` (crystallographic only) every value is an integer:
    segments run along coroots, weight polytopes are centered on coroot-lattice
    points and the linear part is a coroot-lattice vector.
    """
    fan, rs = cone.fan, cone.rs
    d = rs.d
    values: List[Scalar] = [0] * fan.n_rays
    roots = _roots(cone)
    scale = 1
    if integral:
        scale = lcm(*(Fraction(x).denominator for row in rs.cartan_inv for x in row))
    for _ in range(rng.randint(1, terms)):
        a = rng.choice(roots)
        if integral:
            a = _coroot(rs, a)
        c = rng.randint(0, 5)
        if c:
            for n, r in enumerate(fan.rays):
                p = rs.inner(r.coords, a)
                if sign(p) > 0:
                    values[n] = values[n] + c * p
    for _ in range(rng.randint(0, 2)):
        k = rng.randrange(d)
        c = rng.randint(0, 3) * scale
        if c:
            per_owner = [rs.inner(lam, rs.fund_coweights[k]) for lam in rs.fund_weights]
            for n, r in enumerate(fan.rays):
                values[n] = values[n] + c * per_owner[r.owner]
    # a global linear function; coroot coordinates keep values integral
    v = [rng.randint(-3, 3) for _ in range(d)]
    lin = [simplify(x * Fraction(2) / rs.gram[i][i]) for i, x in enumerate(v)] if integral else v
    for n, r in enumerate(fan.rays):
        values[n] = values[n] + rs.inner(r.coords, lin)
    return SupportFunction(fan, values)


def boundary_step(cone: SubmodularCone, inside: SupportFunction, outside: SupportFunction
                  ) -> Optional[Scalar]:
    """Largest ``t`` keeping ``inside + t (outside - inside)`` in the cone.

    ``None`` when the whole ray stays inside.
    """
    best = None
    for f in cone.facets:
        a = f.evaluate(inside)
        b = f.evaluate(outside)
        slope = simplify(b - a)
        if sign(slope) < 0:
            t = simplify(a * reciprocal(-slope))
            if best is None or sign(t - best) < 0:
                best = t
    return best


def _along(inside: SupportFunction, outside: SupportFunction, t: Scalar) -> SupportFunction:
    return SupportFunction(inside.fan, [x + t * (y - x) for x, y in zip(inside.values, outside.values)])


def sample(cone: SubmodularCone, rng: random.Random, kind: str) -> SupportFunction:
    if kind == "noise":
        return noise(cone, rng)
    if kind == "member":
        return member(cone, rng)
    if kind in ("boundary", "beyond"):
        inside = member(cone, rng)
        outside = noise(cone, rng)
        t = boundary_step(cone, inside, outside)
        if t is None:
            return inside if kind == "boundary" else outside
        if kind == "beyond":
            t = t + Fraction(1, 64)
        return _along(inside, outside, t)
    raise ValueError(f"unknown sample kind {kind!r}; choose from {KINDS}")


def mixed(cone: SubmodularCone, rng: random.Random, count: int):
    """``count`` samples cycling through all four kinds."""
    for n in range(count):
        yield sample(cone, rng, KINDS[n % len(KINDS)])
