"""Weyl group enumeration as exact matrices acting on simple-root coordinates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .field import Scalar, sign, simplify
from .rootsys import RootSystem

DEFAULT_CAP = 200_000

Matrix = Tuple[Tuple[Scalar, ...], ...]


class WeylCapExceeded(RuntimeError):
    def __init__(self, cap: int, count: int):
        super().__init__(f"Weyl group enumeration exceeded cap {cap} "
                         f"({count} elements found so far)")
        self.cap = cap
        self.count = count


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A group element with one reduced word.

    Equality and hashing go through the matrix, which is the canonical form.
    ``index`` is the position in the owning :class:`WeylGroup` (BFS order).
    """

    matrix: Matrix
    word: Tuple[int, ...]
    index: int

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def act(self, x: Sequence[Scalar]) -> Tuple[Scalar, ...]:
        return tuple(simplify(sum((a * b for a, b in zip(row, x) if a and b), 0))
                     for row in self.matrix)

    def __repr__(self):
        w = "".join(f"s{i + 1}" for i in self.word) or "e"
        return f"WeylElement({w})"


class WeylGroup:
    """The Weyl group of ``rs`` enumerated breadth-first from the identity.

    ``cayley[w][i]`` is the index of ``w * s_i``; BFS depth equals length.
    """

    def __init__(self, rs: RootSystem, cap: int = DEFAULT_CAP):
        self.rs = rs
        self.cap = cap
        d = rs.d
        a = rs.cartan
        ident = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
        self.elements: List[WeylElement] = [WeylElement(ident, (), 0)]
        self.index: Dict[Matrix, int] = {ident: 0}
        self.parent: List[int] = [-1]
        cayley: List[List[int]] = [[-1] * d]
        queue = deque([0])
        while queue:
            w = queue.popleft()
            m = self.elements[w].matrix
            for i in range(d):
                if cayley[w][i] >= 0:
                    continue
                new = _times_simple(m, a, i)
                j = self.index.get(new)
                if j is None:
                    j = len(self.elements)
                    if j >= cap:
                        raise WeylCapExceeded(cap, j)
                    self.elements.append(WeylElement(new, self.elements[w].word + (i,), j))
                    self.index[new] = j
                    self.parent.append(w)
                    cayley.append([-1] * d)
                    queue.append(j)
                cayley[w][i] = j
                cayley[j][i] = w
        self.cayley: List[Tuple[int, ...]] = [tuple(r) for r in cayley]
        self.lengths: List[int] = [len(e.word) for e in self.elements]
        self.generators: List[WeylElement] = [self.elements[self.cayley[0][i]] for i in range(d)]
        self._intervals: Dict[int, frozenset] = {}

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i: int) -> WeylElement:
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def order(self) -> int:
        return len(self.elements)

    def _idx(self, w) -> int:
        return w if isinstance(w, int) else w.index

    def element(self, word: Iterable[int]) -> WeylElement:
        """The element ``s_{i1} s_{i2} ... s_{ik}``."""
        idx = 0
        for i in word:
            idx = self.cayley[idx][i]
        return self.elements[idx]

    def multiply(self, u, v) -> WeylElement:
        idx = self._idx(u)
        for i in self.elements[self._idx(v)].word:
            idx = self.cayley[idx][i]
        return self.elements[idx]

    def inverse(self, w) -> WeylElement:
        return self.element(reversed(self.elements[self._idx(w)].word))

    @property
    def longest(self) -> WeylElement:
        top = max(range(len(self)), key=self.lengths.__getitem__)
        return self.elements[top]

    def is_descent(self, w, i: int) -> bool:
        """True if ``l(w s_i) < l(w)``."""
        w = self._idx(w)
        return self.lengths[self.cayley[w][i]] < self.lengths[w]

    # parabolic subgroups and cosets ----------------------------------------

    def parabolic(self, subset: Iterable[int]) -> List[WeylElement]:
        """The subgroup ``W_I`` generated by ``{s_i : i in I}``."""
        gens = sorted(set(subset))
        seen = {0}
        order = [0]
        frontier = [0]
        while frontier:
            nxt = []
            for w in frontier:
                for i in gens:
                    x = self.cayley[w][i]
                    if x not in seen:
                        seen.add(x)
                        order.append(x)
                        nxt.append(x)
            frontier = nxt
        return [self.elements[i] for i in order]

    def coset_canonical(self, w, subset: Iterable[int]) -> WeylElement:
        """Minimum-length element of the left coset ``w W_I``."""
        gens = tuple(sorted(set(subset)))
        idx = self._idx(w)
        lengths, cayley = self.lengths, self.cayley
        moved = True
        while moved:
            moved = False
            for i in gens:
                x = cayley[idx][i]
                if lengths[x] < lengths[idx]:
                    idx = x
                    moved = True
        return self.elements[idx]

    def is_coset_canonical(self, w, subset: Iterable[int]) -> bool:
        return not any(self.is_descent(w, i) for i in subset)

    # orders -----------------------------------------------------------------

    def bruhat_leq(self, u, v) -> bool:
        """Bruhat order through the subword property.

        ``u <= v`` iff ``u`` is the product of some subword of a fixed reduced
        word of ``v``; the set of such products is the lower interval of ``v``.
        """
        return self._idx(u) in self._lower_interval(self._idx(v))

    def bruhat_interval(self, u, v) -> List[WeylElement]:
        u, v = self._idx(u), self._idx(v)
        lower = self._lower_interval(v)
        if u not in lower:
            return []
        return [self.elements[z] for z in sorted(lower) if u in self._lower_interval(z)]

    def _lower_interval(self, v: int) -> frozenset:
        found = self._intervals.get(v)
        if found is None:
            reach = {0}
            for i in self.elements[v].word:
                reach |= {self.cayley[x][i] for x in reach}
            found = self._intervals[v] = frozenset(reach)
        return found

    def weak_leq(self, u, v) -> bool:
        """Right weak order: ``v = u x`` with ``l(v) = l(u) + l(x)``."""
        u, v = self._idx(u), self._idx(v)
        x = self.multiply(self.inverse(u), v)
        return self.lengths[v] == self.lengths[u] + x.length

    # orbits -------------------------------------------------------------------

    def orbit(self, x: Sequence[Scalar]) -> List[Tuple[Scalar, ...]]:
        """Deduplicated ``{w x : w in W}``, grown by simple reflections."""
        rs = self.rs
        start = tuple(simplify(t) for t in x)
        seen = {start}
        out = [start]
        frontier = [start]
        while frontier:
            nxt = []
            for y in frontier:
                for i in range(rs.d):
                    z = rs.reflect(i, y)
                    if z not in seen:
                        seen.add(z)
                        out.append(z)
                        nxt.append(z)
            frontier = nxt
        return out

    def inversions(self, w) -> int:
        """Number of positive roots sent to negative roots."""
        e = self.elements[self._idx(w)]
        return sum(1 for r in self.rs.pos_roots if any(sign(t) < 0 for t in e.act(r)))


def _times_simple(m: Matrix, a, i: int) -> Matrix:
    # M s_i = M - (M e_i) (row i of A)
    row = a[i]
    out = []
    for r in m:
        c = r[i]
        if c:
            out.append(tuple(simplify(r[k] - c * row[k]) if row[k] else r[k]
                             for k in range(len(r))))
        else:
            out.append(r)
    return tuple(out)


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylGroup:
    return WeylGroup(rs, cap)
