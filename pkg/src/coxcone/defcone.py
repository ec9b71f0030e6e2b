"""Deformations of the Coxeter permutohedron.

Support-function generators (weight polytopes, zonotopes, Minkowski sums),
vertex realization, the symmetric subcone, indecomposability through the
dimension of the nef face, face orbits of weight polytopes, and the Coxeter
matroid edge test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .coxfan import CoxeterFan
from .field import Scalar, is_integer, sign, simplify
from .lp import is_edge
from .rootsys import RootSystem, RootSystemError
from .submod import SubmodularCone, SupportFunction, SupportFunctionError
from .weyl import WeylElement, WeylGroup

Vec = Tuple[Scalar, ...]


class NotSubmodularError(ValueError):
    """The support function violates a facet inequality."""


def _require_crystallographic(rs: RootSystem, what: str):
    if not rs.crystallographic:
        raise RootSystemError(f"{what} is only defined for crystallographic systems, "
                              f"not {rs.name}")


def cone_of(fan: CoxeterFan) -> SubmodularCone:
    """The facet list of ``fan``, built on first use and kept on the fan."""
    cone = getattr(fan, "_cone", None)
    if cone is None:
        cone = fan._cone = SubmodularCone(fan)
    return cone


def _require_submodular(fan: CoxeterFan, h):
    verdict = cone_of(fan).check_local(h)
    if not verdict:
        f = verdict.facet
        raise NotSubmodularError(
            f"support function violates the facet (gen {f.gen + 1}, coset {f.coset_rep}) "
            f"with value {verdict.slack}")


# generators ------------------------------------------------------------------

def is_dominant(rs: RootSystem, x: Sequence[Scalar]) -> bool:
    return all(sign(c) >= 0 for c in rs.coroot_pairings(x))


def support_weight_polytope(fan: CoxeterFan, x_dominant: Sequence[Scalar]) -> SupportFunction:
    """Support function of the convex hull of ``W x``; ``x`` must be dominant.

    The value on ``w lambda_i`` is ``<lambda_i, x>`` for every ``w``.
    """
    rs = fan.rs
    x = tuple(simplify(t) for t in x_dominant)
    if len(x) != rs.d:
        raise ValueError(f"expected {rs.d} coordinates, got {len(x)}")
    if not is_dominant(rs, x):
        raise ValueError("weight polytope input must be dominant; use dominant_rep first")
    per_owner = [rs.inner(lam, x) for lam in rs.fund_weights]
    return SupportFunction(fan, [per_owner[r.owner] for r in fan.rays])


def fundamental_coweight_support(fan: CoxeterFan, k: int) -> SupportFunction:
    """Support function of the orbit polytope of ``lambda_k^vee``."""
    return support_weight_polytope(fan, fan.rs.fund_coweights[k])


def fundamental_weight_support(fan: CoxeterFan, k: int) -> SupportFunction:
    return support_weight_polytope(fan, fan.rs.fund_weights[k])


def rho(rs: RootSystem) -> Vec:
    """Half the sum of the positive roots."""
    return tuple(simplify(sum((r[k] for r in rs.pos_roots), 0) * Fraction(1, 2))
                 for k in range(rs.d))


def support_zonotope(fan: CoxeterFan, roots: Iterable[Sequence[Scalar]],
                     centered: bool = True) -> SupportFunction:
    """Zonotope generated by segments along the given positive roots.

    Centered: sum of ``[-a/2, a/2]``. Uncentered: sum of ``[0, a]``.
    """
    rs = fan.rs
    pos = set(rs.pos_roots)
    gens = []
    for a in roots:
        a = tuple(simplify(t) for t in a)
        if a not in pos:
            raise ValueError(f"{a} is not a positive root of {rs.name}")
        gens.append(a)
    half = Fraction(1, 2)
    values = []
    for r in fan.rays:
        total = 0
        for a in gens:
            p = rs.inner(r.coords, a)
            if centered:
                total = total + (p if sign(p) > 0 else -p) * half
            elif sign(p) > 0:
                total = total + p
        values.append(total)
    return SupportFunction(fan, values)


def support_segment(fan: CoxeterFan, v: Sequence[Scalar]) -> SupportFunction:
    """Support function of the segment ``[0, v]`` for any vector ``v``.

    It is submodular exactly when ``v`` is parallel to a root.
    """
    rs = fan.rs
    values = []
    for r in fan.rays:
        p = rs.inner(r.coords, v)
        values.append(p if sign(p) > 0 else 0)
    return SupportFunction(fan, values)


def minkowski(h1: SupportFunction, h2: SupportFunction, a: Scalar = 1, b: Scalar = 1
              ) -> SupportFunction:
    """``a h1 + b h2``, the support function of ``a P1 + b P2``."""
    if sign(a) < 0 or sign(b) < 0:
        raise ValueError("Minkowski coefficients must be nonnegative")
    if h1.fan.rs.spec != h2.fan.rs.spec or h1.fan.n_rays != h2.fan.n_rays:
        raise SupportFunctionError("support functions live on different fans")
    return SupportFunction(h1.fan, [a * x + b * y for x, y in zip(h1.values, h2.values)])


# realization -----------------------------------------------------------------

@dataclass
class VertexSet:
    """Distinct vertices and, for each chamber ``w``, the index of its vertex."""

    vertices: List[Vec]
    chamber_map: List[int]

    def __len__(self):
        return len(self.vertices)

    def vertex_of(self, w) -> Vec:
        return self.vertices[self.chamber_map[w if isinstance(w, int) else w.index]]


def vertices(fan: CoxeterFan, h, validate: bool = True) -> VertexSet:
    """Realize ``h`` as a polytope: one vertex per chamber, deduplicated.

    The vertex of chamber ``w`` is ``sum_i h(w lambda_i) w alpha_i^vee``,
    the solution of ``<w lambda_i, v> = h(w lambda_i)``.
    """
    _require_submodular(fan, h)
    rs, W = fan.rs, fan.W
    d = rs.d
    values = h.values if hasattr(h, "values") else h
    coroot_scale = [simplify(Fraction(2) / rs.gram[i][i]) for i in range(d)]
    found: Dict[Vec, int] = {}
    out: List[Vec] = []
    chamber_map: List[int] = []
    for w, elt in enumerate(W.elements):
        m = elt.matrix
        cr = fan.chamber_rays[w]
        v = [0] * d
        for i in range(d):
            c = values[cr[i]]
            if not c:
                continue
            c = c * coroot_scale[i]
            for k in range(d):
                if m[k][i]:
                    v[k] = v[k] + c * m[k][i]
        key = tuple(simplify(t) for t in v)
        idx = found.get(key)
        if idx is None:
            idx = found[key] = len(out)
            out.append(key)
        chamber_map.append(idx)
    vs = VertexSet(out, chamber_map)
    if validate:
        _validate(fan, values, vs)
    return vs


def _validate(fan: CoxeterFan, values, vs: VertexSet):
    rs = fan.rs
    g_rays = [linalg.mat_vec(rs.gram, r.coords) for r in fan.rays]
    for n, v in enumerate(vs.vertices):
        for r, gr in enumerate(g_rays):
            if sign(linalg.dot(gr, v) - values[r]) > 0:
                raise RuntimeError(f"vertex {n} violates the ray {fan.rays[r].coords}; "
                                   "the local oracle and the realization disagree")
    for w, n in enumerate(vs.chamber_map):
        v = vs.vertices[n]
        for r in fan.chamber_rays[w]:
            if sign(linalg.dot(g_rays[r], v) - values[r]) != 0:
                raise RuntimeError(f"vertex of chamber {w} is not tight on its own rays")


def vertex_ambient(rs: RootSystem, vs: VertexSet) -> List[Vec]:
    return [rs.ambient_convert(v, "to_ambient") for v in vs.vertices]


def coroot_coordinates(rs: RootSystem, v: Sequence[Scalar]) -> Vec:
    """Coefficients of ``v`` on the simple coroots ``alpha_i^vee = (2/G_ii) alpha_i``."""
    return tuple(simplify(x * rs.gram[i][i] * Fraction(1, 2)) for i, x in enumerate(v))


def lattice_check(fan: CoxeterFan, h) -> bool:
    """True iff every vertex lies in the coroot lattice."""
    _require_crystallographic(fan.rs, "the coroot lattice test")
    vs = vertices(fan, h)
    return all(all(is_integer(c) for c in coroot_coordinates(fan.rs, v)) for v in vs.vertices)


# symmetric subcone -------------------------------------------------------------

@dataclass(frozen=True)
class SymmetricVerdict:
    """``coeffs`` writes ``v`` in the rows of the inverse Cartan matrix."""

    member: bool
    coeffs: Tuple[Scalar, ...]
    outside: Optional[int] = None

    def __bool__(self):
        return self.member


def symmetric_membership(rs: RootSystem, v: Sequence[Scalar]) -> SymmetricVerdict:
    """Decide membership of the W-symmetric function with ``h(lambda_i) = v_i``."""
    if len(v) != rs.d:
        raise ValueError(f"expected {rs.d} values, got {len(v)}")
    coeffs = tuple(linalg.mat_vec(linalg.transpose(rs.cartan), v))
    bad = next((k for k, c in enumerate(coeffs) if sign(c) < 0), None)
    return SymmetricVerdict(bad is None, coeffs, bad)


def symmetric_support(fan: CoxeterFan, v: Sequence[Scalar]) -> SupportFunction:
    """The W-invariant function equal to ``v_i`` on the orbit of ``lambda_i``."""
    return SupportFunction(fan, [v[r.owner] for r in fan.rays])


# indecomposability ------------------------------------------------------------

def active_walls(fan: CoxeterFan, h) -> List[int]:
    """Indices into ``fan.walls`` of the walls whose functional vanishes on ``h``."""
    return [n for n, w in enumerate(fan.walls) if sign(w.evaluate(h)) == 0]


def nef_dimension_at(fan: CoxeterFan, h, check: bool = True) -> int:
    """Dimension of the smallest face of the nef cone containing ``h``.

    Solves the vanishing walls exactly and removes the ``d`` dimensions of
    global linear functions.
    """
    if check:
        _require_submodular(fan, h)
    rows = {fan.walls[n].terms for n in active_walls(fan, h)}
    rank = linalg.RowReducer().extend(dict(t) for t in sorted(rows))
    return fan.n_rays - rank - fan.d


def is_indecomposable(fan: CoxeterFan, h) -> bool:
    return nef_dimension_at(fan, h) == 1


def predict_indecomposable_weight(rs: RootSystem, i: int) -> bool:
    """Crystallographic prediction: every Dynkin edge at ``i`` is simple."""
    _require_crystallographic(rs, "the weight-orbit indecomposability prediction")
    return all(rs.edge_label(i, j) == 3 for j in rs.neighbors(i))


def only_triangular_2faces(rs: RootSystem, i: int) -> bool:
    """True iff the orbit polytope of ``lambda_i`` has only triangular 2-faces."""
    return all(rs.edge_label(i, j) == 3 for j in rs.neighbors(i))


def _components(rs: RootSystem, nodes: FrozenSet[int]) -> List[FrozenSet[int]]:
    left = set(nodes)
    out = []
    while left:
        stack = [left.pop()]
        comp = set(stack)
        while stack:
            x = stack.pop()
            for y in rs.neighbors(x):
                if y in left:
                    left.discard(y)
                    comp.add(y)
                    stack.append(y)
        out.append(frozenset(comp))
    return out


def face_orbits(rs: RootSystem, subset: Iterable[int]) -> List[Tuple[FrozenSet[int], int]]:
    """Face orbit types of the orbit polytope of a point interior to ``C_{[d]-I}``.

    Returns ``(J, |J|)`` for each ``J`` with no connected component of the
    Dynkin diagram restricted to ``J`` lying inside ``I``.
    """
    inside = frozenset(subset)
    out = []
    for k in range(rs.d + 1):
        for j in combinations(range(rs.d), k):
            js = frozenset(j)
            if not any(c <= inside for c in _components(rs, js)):
                out.append((js, k))
    return out


# Coxeter matroids ---------------------------------------------------------------

def lambda_of(rs: RootSystem, subset: Iterable[int]) -> Vec:
    """``sum of lambda_i over i not in I``; its stabilizer is ``W_I``."""
    inside = set(subset)
    return tuple(simplify(sum((rs.fund_weights[i][k] for i in range(rs.d) if i not in inside), 0))
                 for k in range(rs.d))


def parallel_to_root(rs: RootSystem, v: Sequence[Scalar]) -> bool:
    v = [simplify(x) for x in v]
    k = next((n for n, x in enumerate(v) if x), None)
    if k is None:
        return False
    for a in rs.pos_roots:
        if not a[k]:
            continue
        t = v[k] * linalg.reciprocal(a[k])
        if all(sign(x - t * y) == 0 for x, y in zip(v, a)):
            return True
    return False


@dataclass
class MatroidVerdict:
    matroid: bool
    violating_edge: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = field(default_factory=list)
    points: List[Vec] = field(default_factory=list)

    def __bool__(self):
        return self.matroid


def coxeter_matroid_check(W: WeylGroup, subset: Iterable[int], members: Sequence) -> MatroidVerdict:
    """Decide whether ``{w lambda_I : w in M}`` has only root-parallel edges.

    ``members`` are minimal coset representatives for ``W / W_I``.
    """
    rs = W.rs
    inside = sorted(set(subset))
    if not members:
        raise ValueError("a Coxeter matroid needs at least one element")
    idx = []
    for m in members:
        w = m if isinstance(m, int) else m.index
        if not W.is_coset_canonical(w, inside):
            raise ValueError(f"{W[w]!r} is not a minimal coset representative for W_I")
        idx.append(w)
    base = lambda_of(rs, inside)
    points = []
    for w in dict.fromkeys(idx):
        points.append(W[w].act(base))
    edges = [(i, j) for i, j in combinations(range(len(points)), 2) if is_edge(points, i, j)]
    for i, j in edges:
        diff = [a - b for a, b in zip(points[i], points[j])]
        if not parallel_to_root(rs, diff):
            return MatroidVerdict(False, (i, j), edges, points)
    return MatroidVerdict(True, None, edges, points)


def bruhat_interval_polytope(W: WeylGroup, u, v, subset: Iterable[int] = ()) -> List[Vec]:
    """Distinct points ``z lambda_I`` for ``u <= z <= v`` in Bruhat order."""
    inside = sorted(set(subset))
    if not W.bruhat_leq(u, v):
        raise ValueError(f"{W[u if isinstance(u, int) else u.index]!r} is not below "
                         f"{W[v if isinstance(v, int) else v.index]!r} in Bruhat order")
    if not W.is_coset_canonical(v, inside):
        raise ValueError("v must be a minimal coset representative for W_I")
    base = lambda_of(W.rs, inside)
    pts = []
    for z in W.bruhat_interval(u, v):
        p = z.act(base)
        if p not in pts:
            pts.append(p)
    return pts
