"""Finite irreducible root systems in simple-root coordinates.

Every vector handled by the package is written in the basis of simple roots
``alpha_1 .. alpha_d`` and the inner product is the Gram matrix ``G``.
Node indices are 0-based in the API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from . import linalg
from .field import PHI, Quad, Scalar, sign, simplify

FAMILIES = ("A", "B", "C", "D", "E6", "F4", "G2", "H3", "H4", "I2")
CLASSICAL = ("A", "B", "C", "D")
_FIXED_RANK = {"E6": 6, "F4": 4, "G2": 2, "H3": 3, "H4": 4, "I2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
DIHEDRAL_M = (3, 4, 5, 6)

Vec = Tuple[Scalar, ...]


class RootSystemError(ValueError):
    """Invalid or unsupported root system parameters."""


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int
    m: Optional[int] = None

    def __post_init__(self):
        fam = self.family.upper()
        if fam in ("E", "F", "G", "H", "I") and self.rank:
            fam = f"{fam}{self.rank}"
        if fam in ("E7", "E8"):
            raise RootSystemError(
                f"{fam} is not supported: its Weyl group is beyond desk-scale enumeration")
        if fam not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)
        if fam in _FIXED_RANK:
            if self.rank != _FIXED_RANK[fam]:
                raise RootSystemError(f"{fam} has rank {_FIXED_RANK[fam]}, got {self.rank}")
        elif self.rank < _MIN_RANK[fam]:
            raise RootSystemError(f"type {fam} needs rank >= {_MIN_RANK[fam]}, got {self.rank}")
        if fam == "I2":
            if self.m not in DIHEDRAL_M:
                raise RootSystemError(f"I2(m) supports m in {DIHEDRAL_M}, got {self.m}")
        elif self.m is not None:
            raise RootSystemError("m is only meaningful for I2")

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        if self.family in CLASSICAL:
            return f"{self.family}{self.rank}"
        return self.family

    @property
    def crystallographic(self) -> bool:
        return self.family not in ("H3", "H4") and not (self.family == "I2" and self.m == 5)


def _chain_gram(d: int, tail: Dict[Tuple[int, int], Scalar], norms: Dict[int, Scalar]):
    """Gram matrix of a path diagram with unit-type links, overridden by ``tail``."""
    g = [[0] * d for _ in range(d)]
    for i in range(d):
        g[i][i] = norms.get(i, 2)
    for i in range(d - 1):
        g[i][i + 1] = g[i + 1][i] = -1
    for (i, j), v in tail.items():
        g[i][j] = g[j][i] = v
    return g


def _ambient_simple_roots(family: str, d: int) -> List[List[int]]:
    """Simple roots of the classical families in the standard basis of R^n."""
    n = d + 1 if family == "A" else d
    rows = []
    for i in range(d - 1 if family != "A" else d):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        rows.append(r)
    if family == "B":
        r = [0] * n
        r[d - 1] = 1
        rows.append(r)
    elif family == "C":
        r = [0] * n
        r[d - 1] = 2
        rows.append(r)
    elif family == "D":
        r = [0] * n
        r[d - 2] = r[d - 1] = 1
        rows.append(r)
    return rows


def _exceptional_gram(spec: RootSystemSpec):
    fam = spec.family
    if fam == "E6":
        # Bourbaki numbering: chain 1-3-4-5-6 with node 2 attached to node 4
        g = [[0] * 6 for _ in range(6)]
        for i in range(6):
            g[i][i] = 2
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
            g[i][j] = g[j][i] = -1
        return g
    if fam == "F4":
        return _chain_gram(4, {(2, 3): Fraction(-1, 2)}, {2: 1, 3: 1})
    if fam == "G2":
        return [[Fraction(2, 3), -1], [-1, 2]]
    if fam == "H3":
        return _chain_gram(3, {(1, 2): -PHI}, {})
    if fam == "H4":
        return _chain_gram(4, {(2, 3): -PHI}, {})
    if fam == "I2":
        return {
            3: [[2, -1], [-1, 2]],
            4: [[2, -1], [-1, 1]],
            5: [[2, -PHI], [-PHI, 2]],
            6: [[Fraction(2, 3), -1], [-1, 2]],
        }[spec.m]
    raise AssertionError(fam)


def coxeter_label(a_ij: Scalar, a_ji: Scalar) -> int:
    """Recover ``m_ij`` from ``A_ij * A_ji = 4 cos^2(pi / m_ij)``."""
    prod = simplify(a_ij * a_ji)
    table = {0: 2, 1: 3, 2: 4, 3: 6}
    if not isinstance(prod, Quad) and prod in table:
        return table[prod]
    if prod == PHI * PHI:
        return 5
    raise RootSystemError(f"Cartan product {prod} does not match any supported m")


@dataclass
class RootSystem:
    """Exact data of an irreducible root system.

    ``fund_weights[i]``, ``fund_coweights[i]``, ``simple_coroots[i]`` and the
    entries of ``pos_roots`` are coordinate tuples in the simple-root basis.
    ``dynkin`` maps an edge ``frozenset({i, j})`` to its label ``m_ij >= 3``.
    """

    spec: RootSystemSpec
    gram: List[List[Scalar]]
    cartan: List[List[Scalar]] = field(init=False)
    cartan_inv: List[List[Scalar]] = field(init=False)
    dynkin: Dict[FrozenSet[int], int] = field(init=False)
    fund_weights: List[Vec] = field(init=False)
    fund_coweights: List[Vec] = field(init=False)
    simple_coroots: List[Vec] = field(init=False)
    pos_roots: List[Vec] = field(init=False)
    ambient: Optional[List[List[int]]] = None

    def __post_init__(self):
        d = self.d
        g = self.gram
        self.cartan = [[simplify(Fraction(2) * g[i][j] / g[i][i]) for j in range(d)] for i in range(d)]
        self.cartan_inv = linalg.inverse(self.cartan)
        self.dynkin = {}
        for i in range(d):
            for j in range(i + 1, d):
                if self.cartan[i][j] or self.cartan[j][i]:
                    self.dynkin[frozenset((i, j))] = coxeter_label(self.cartan[i][j],
                                                                   self.cartan[j][i])
        # lambda_j = sum_i Ainv[i][j] alpha_i: column j of the inverse Cartan matrix
        self.fund_weights = [tuple(self.cartan_inv[i][j] for i in range(d)) for j in range(d)]
        # lambda_i^vee = (2 / G_ii) lambda_i is the basis dual to the simple roots
        self.fund_coweights = [tuple(simplify(Fraction(2) / g[i][i] * x) for x in self.fund_weights[i])
                               for i in range(d)]
        self.simple_coroots = [tuple(simplify(Fraction(2) / g[i][i]) if k == i else 0
                                     for k in range(d)) for i in range(d)]
        self.pos_roots = self._positive_roots()

    @property
    def d(self) -> int:
        return len(self.gram)

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def family(self) -> str:
        return self.spec.family

    @property
    def crystallographic(self) -> bool:
        return self.spec.crystallographic

    def inner(self, x, y) -> Scalar:
        """``<x, y>`` for simple-root coordinate vectors."""
        total = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.gram[i]
            for j, yj in enumerate(y):
                if yj and row[j]:
                    total = total + xi * row[j] * yj
        return simplify(total)

    def coroot_pairings(self, x) -> List[Scalar]:
        """``[<x, alpha_i^vee> for i]``, which is ``A x`` in these coordinates."""
        return linalg.mat_vec(self.cartan, x)

    def reflect(self, i: int, x) -> Vec:
        """Simple reflection ``s_i(x) = x - <x, alpha_i^vee> alpha_i``."""
        c = linalg.dot(self.cartan[i], x)
        if not c:
            return tuple(x)
        out = list(x)
        out[i] = simplify(out[i] - c)
        return tuple(out)

    def neighbors(self, i: int) -> List[int]:
        return sorted(j for e in self.dynkin if i in e for j in e if j != i)

    def edge_label(self, i: int, j: int) -> int:
        return self.dynkin.get(frozenset((i, j)), 2)

    def _positive_roots(self) -> List[Vec]:
        d = self.d
        simple = [tuple(1 if k == i else 0 for k in range(d)) for i in range(d)]
        seen = set(simple) | {tuple(-x for x in r) for r in simple}
        frontier = list(seen)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(d):
                    t = self.reflect(i, r)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        pos = [r for r in seen if all(sign(x) >= 0 for x in r)]
        pos.sort(key=lambda r: (simplify(sum(r)), r))
        return pos

    # ambient coordinates (classical families only) -------------------------

    def ambient_convert(self, v, direction: str = "to_ambient") -> Vec:
        """Change basis between simple-root coordinates and R^n.

        Type ``A_{d}`` lives in R^{d+1} modulo the all-ones vector; the ambient
        representative returned has minimum coordinate 0, so the weight
        ``e_1 + ... + e_k`` comes back as exactly that 0/1 vector.
        """
        if self.ambient is None:
            raise RootSystemError(f"{self.name} has no classical ambient embedding")
        rows = self.ambient
        if direction == "to_ambient":
            n = len(rows[0])
            out = [0] * n
            for c, r in zip(v, rows):
                if c:
                    for k in range(n):
                        if r[k]:
                            out[k] = out[k] + c * r[k]
            if self.family == "A":
                low = min(out)
                out = [x - low for x in out]
            return tuple(simplify(x) for x in out)
        if direction == "to_root_coords":
            x = list(v)
            if len(x) != len(rows[0]):
                raise ValueError(f"expected {len(rows[0])} ambient coordinates, got {len(x)}")
            if self.family == "A":
                mean = Fraction(sum(Fraction(t) for t in x), len(x))
                x = [t - mean for t in x]
            # solve x = sum_i c_i rows[i] through the Gram system of the rows
            g = self.gram
            rhs = [sum((r[k] * x[k] for k in range(len(x)) if r[k]), 0) for r in rows]
            coords = linalg.solve(g, rhs)
            back = [sum((c * r[k] for c, r in zip(coords, rows)), 0) for k in range(len(x))]
            if any(simplify(a - b) for a, b in zip(back, x)):
                raise ValueError("vector is not in the span of the root system")
            return tuple(simplify(c) for c in coords)
        raise ValueError(f"unknown direction {direction!r}")

    def describe(self) -> dict:
        return {
            "name": self.name,
            "d": self.d,
            "crystallographic": self.crystallographic,
            "dynkin": {tuple(sorted(e)): m for e, m in self.dynkin.items()},
        }


def build(spec: RootSystemSpec) -> RootSystem:
    """Construct the root system for ``spec``."""
    if spec.family in CLASSICAL:
        rows = _ambient_simple_roots(spec.family, spec.rank)
        gram = [[sum(a * b for a, b in zip(r, s)) for s in rows] for r in rows]
        return RootSystem(spec, gram, ambient=rows)
    return RootSystem(spec, _exceptional_gram(spec))


def root_system(family: str, rank: int, m: Optional[int] = None) -> RootSystem:
    return build(RootSystemSpec(family, rank, m))
