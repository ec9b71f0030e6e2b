"""The Coxeter complex: rays, chambers, walls, and piecewise-linear evaluation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .field import Scalar, sign, simplify
from .rootsys import RootSystem
from .weyl import WeylElement, WeylGroup

Vec = Tuple[Scalar, ...]
Terms = Tuple[Tuple[int, Scalar], ...]


@dataclass(frozen=True)
class Ray:
    """A conjugate ``w lambda_i`` of a fundamental weight."""

    index: int
    owner: int
    coords: Vec
    witness: int  # index of one w in W with w lambda_owner == coords


@dataclass(frozen=True)
class Wall:
    """The wall between chambers ``w`` and ``w s_i``, with ``l(w) < l(w s_i)``.

    ``terms`` is the wall-crossing functional written LHS-minus-RHS:
    ``h(w l_i) + h(w s_i l_i) + sum_{j in N(i)} A_ji h(w l_j)``.
    """

    chamber: int
    gen: int
    terms: Terms

    def evaluate(self, h) -> Scalar:
        return _apply(self.terms, h)


def _apply(terms: Terms, h) -> Scalar:
    values = h.values if hasattr(h, "values") else h
    total = 0
    for r, c in terms:
        v = values[r]
        if v:
            total = total + c * v
    return simplify(total)


class CoxeterFan:
    """Rays, chamber incidences and walls of the Coxeter complex of ``W``.

    ``chamber_rays[w][i]`` is the index of the ray ``w lambda_i``.
    """

    def __init__(self, W: WeylGroup):
        self.W = W
        self.rs: RootSystem = W.rs
        d = self.rs.d
        lam = self.rs.fund_weights
        self.rays: List[Ray] = []
        self.ray_index: Dict[Vec, int] = {}
        self.chamber_rays: List[Tuple[int, ...]] = []
        for w, elt in enumerate(W.elements):
            if w == 0:
                row = [self._add_ray(i, lam[i], 0) for i in range(d)]
            else:
                parent = W.parent[w]
                j = elt.word[-1]
                row = list(self.chamber_rays[parent])
                # w = parent s_j, so w lambda_j = parent lambda_j - parent alpha_j
                pm = W.elements[parent].matrix
                base = self.rays[row[j]].coords
                coords = tuple(simplify(base[k] - pm[k][j]) for k in range(d))
                row[j] = self._add_ray(j, coords, w)
            self.chamber_rays.append(tuple(row))
        self._order_rays()
        self.walls: List[Wall] = self._build_walls()

    def _add_ray(self, owner: int, coords: Vec, witness: int) -> int:
        idx = self.ray_index.get(coords)
        if idx is None:
            idx = len(self.rays)
            self.rays.append(Ray(idx, owner, coords, witness))
            self.ray_index[coords] = idx
        return idx

    def _order_rays(self):
        # canonical ray order: by owner, then by the BFS position of the witness
        order = sorted(range(len(self.rays)),
                       key=lambda r: (self.rays[r].owner, self.rays[r].witness))
        relabel = {old: new for new, old in enumerate(order)}
        self.rays = [Ray(relabel[r.index], r.owner, r.coords, r.witness)
                     for r in (self.rays[o] for o in order)]
        self.ray_index = {r.coords: r.index for r in self.rays}
        self.chamber_rays = [tuple(relabel[x] for x in row) for row in self.chamber_rays]

    def _build_walls(self) -> List[Wall]:
        W, a = self.W, self.rs.cartan
        nbrs = [self.rs.neighbors(i) for i in range(self.rs.d)]
        walls = []
        for w in range(len(W)):
            cr = self.chamber_rays[w]
            for i in range(self.rs.d):
                x = W.cayley[w][i]
                if W.lengths[x] < W.lengths[w]:
                    continue
                terms = [(cr[i], 1), (self.chamber_rays[x][i], 1)]
                terms += [(cr[j], a[j][i]) for j in nbrs[i]]
                walls.append(Wall(w, i, tuple(sorted(terms))))
        return walls

    # basic queries ----------------------------------------------------------

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    @property
    def d(self) -> int:
        return self.rs.d

    def ray_of(self, coords: Sequence[Scalar]) -> Ray:
        key = tuple(simplify(x) for x in coords)
        try:
            return self.rays[self.ray_index[key]]
        except KeyError:
            raise KeyError(f"{key} is not a ray of {self.rs.name}") from None

    def chamber(self, w) -> Tuple[int, ...]:
        return self.chamber_rays[w if isinstance(w, int) else w.index]

    @cached_property
    def chambers_of_ray(self) -> List[frozenset]:
        out: List[set] = [set() for _ in self.rays]
        for w, row in enumerate(self.chamber_rays):
            for r in row:
                out[r].add(w)
        return [frozenset(s) for s in out]

    def span_face(self, r, r2) -> bool:
        """True iff some chamber contains both rays."""
        a = r if isinstance(r, int) else r.index
        b = r2 if isinstance(r2, int) else r2.index
        if a == b:
            return True
        ca, cb = self.chambers_of_ray[a], self.chambers_of_ray[b]
        if len(ca) > len(cb):
            ca, cb = cb, ca
        return any(w in cb for w in ca)

    # point location and PL evaluation --------------------------------------

    def dominant_rep(self, x: Sequence[Scalar], rng: Optional[random.Random] = None
                     ) -> Tuple[WeylElement, List[Scalar]]:
        """Write ``x = w (sum_i c_i lambda_i)`` with all ``c_i >= 0``.

        Reflects by ``s_i`` while some ``<y, alpha_i^vee>`` is negative; with
        ``rng`` the reflection is picked at random among the negative ones.
        """
        rs = self.rs
        y = tuple(simplify(t) for t in x)
        w = 0
        while True:
            p = rs.coroot_pairings(y)
            neg = [i for i, c in enumerate(p) if sign(c) < 0]
            if not neg:
                break
            i = rng.choice(neg) if rng is not None else neg[0]
            y = rs.reflect(i, y)
            w = self.W.cayley[w][i]
        return self.W.elements[w], p

    def decompose(self, x: Sequence[Scalar], rng: Optional[random.Random] = None) -> Terms:
        """``x`` as a nonnegative combination of the rays of its minimal cone."""
        w, c = self.dominant_rep(x, rng)
        row = self.chamber_rays[w.index]
        return tuple((row[i], ci) for i, ci in enumerate(c) if ci)

    def eval_pl(self, h, x: Sequence[Scalar], rng: Optional[random.Random] = None) -> Scalar:
        """Evaluate the piecewise-linear extension of ``h`` at ``x``."""
        return _apply(self.decompose(x, rng), h)

    @cached_property
    def pair_terms(self) -> List[Tuple[int, int, Terms]]:
        """For every unordered ray pair, the decomposition of their sum."""
        out = []
        rays = self.rays
        for a in range(len(rays)):
            ca = rays[a].coords
            for b in range(a + 1, len(rays)):
                s = tuple(simplify(u + v) for u, v in zip(ca, rays[b].coords))
                out.append((a, b, self.decompose(s)))
        return out
