"""Set-function encodings for the classical families.

Ground elements are ``1..d``.  A signed set is a frozenset of nonzero
integers, ``-e`` standing for the barred element; it is admissible when it
never contains both ``e`` and ``-e``.  ``e_S`` is the ambient vector with
``+1``/``-1`` in the positions of ``S``.

* Type ``A_{d-1}``: ``f(S) = h(e_S)`` for ``0 < |S| < d``; ``f`` is 0 on the
  empty set and on ``[d]``.
* Type ``C_d``: ``f(S) = h(e_S)`` for every nonempty admissible ``S``.
  Type ``B_d`` has the same fan; its rays for ``|S| = d`` are ``e_S / 2``.
* Type ``D_d``: ``f(S) = h(e_S)`` for ``|S| <= d - 2`` and
  ``g(S) = h(e_S / 2)`` for ``|S| = d``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple

from .coxfan import CoxeterFan
from .field import Scalar, sign, simplify
from .submod import SupportFunction, SupportFunctionError

SignedSet = FrozenSet[int]
EMPTY: SignedSet = frozenset()


def subsets(d: int) -> Iterator[FrozenSet[int]]:
    """All subsets of ``{1..d}``, by size."""
    for k in range(d + 1):
        for c in combinations(range(1, d + 1), k):
            yield frozenset(c)


def admissible_sets(d: int, size: Optional[int] = None) -> Iterator[SignedSet]:
    """Admissible signed subsets of ``[+-d]``, optionally of one size."""
    sizes = range(d + 1) if size is None else [size]
    for k in sizes:
        for support in combinations(range(1, d + 1), k):
            for signs in product((1, -1), repeat=k):
                yield frozenset(s * e for s, e in zip(signs, support))


def is_admissible(s) -> bool:
    return 0 not in s and all(-e not in s for e in s)


def bar(s) -> SignedSet:
    return frozenset(-e for e in s)


def meet(s: SignedSet, t: SignedSet) -> SignedSet:
    return s & t


def join(s: SignedSet, t: SignedSet) -> SignedSet:
    """Elements of the union whose negation is not also in the union."""
    u = s | t
    return frozenset(e for e in u if -e not in u)


def indicator(s, n: int, scale: Scalar = 1) -> Tuple[Scalar, ...]:
    """``scale * e_S`` in ``R^n``."""
    v = [0] * n
    for e in s:
        v[abs(e) - 1] = scale if e > 0 else -scale
    return tuple(v)


def _ray(fan: CoxeterFan, ambient) -> int:
    cache = fan.__dict__.setdefault("_ambient_rays", {})
    idx = cache.get(ambient)
    if idx is None:
        idx = cache[ambient] = fan.ray_of(fan.rs.ambient_convert(ambient, "to_root_coords")).index
    return idx


def _require(fan: CoxeterFan, families: str):
    if fan.rs.family not in families:
        raise SupportFunctionError(
            f"encoding needs a type {'/'.join(families)} fan, got {fan.rs.name}")


# type A ------------------------------------------------------------------

def typeA_ray(fan: CoxeterFan, s) -> int:
    """Ray index of ``e_S`` in ``A_{d-1}``, ``0 < |S| < d``."""
    return _ray(fan, indicator(s, fan.rs.d + 1))


def encode_typeA(fan: CoxeterFan, f: Mapping) -> SupportFunction:
    """``h(e_S) = f(S)``; ``f`` must vanish on the empty set and ``[d]``."""
    _require(fan, "A")
    d = fan.rs.d + 1
    full = frozenset(range(1, d + 1))
    for end in (EMPTY, full):
        if sign(f.get(end, 0)):
            raise SupportFunctionError(
                "f must be normalized: f(empty) = f([d]) = 0 (see normalize_submodular)")
    values: List[Scalar] = [None] * fan.n_rays
    for s in subsets(d):
        if s and s != full:
            if s not in f:
                raise SupportFunctionError(f"f has no value on {sorted(s)}")
            values[typeA_ray(fan, s)] = f[s]
    return SupportFunction(fan, values)


def decode_typeA(h: SupportFunction) -> Dict[FrozenSet[int], Scalar]:
    fan = h.fan
    _require(fan, "A")
    d = fan.rs.d + 1
    full = frozenset(range(1, d + 1))
    out = {EMPTY: 0, full: 0}
    for s in subsets(d):
        if s and s != full:
            out[s] = h.values[typeA_ray(fan, s)]
    return out


def normalize_submodular(d: int, F: Mapping) -> Dict[FrozenSet[int], Scalar]:
    """Subtract the modular part so that ``f(empty) = f([d]) = 0``.

    Modular functions satisfy every submodular inequality with equality,
    so ``F`` and the result are submodular together.
    """
    full = frozenset(range(1, d + 1))
    base = F.get(EMPTY, 0)
    slope = (F[full] - base) * Fraction(1, d)
    return {s: simplify(F[s] - base - slope * len(s)) for s in subsets(d)}


def typeA_local_inequalities(d: int) -> Iterator[Tuple[FrozenSet[int], ...]]:
    """``(Sa, Sb, S, Sab)`` for ``f(Sa) + f(Sb) >= f(S) + f(Sab)``."""
    for s in subsets(d):
        rest = [e for e in range(1, d + 1) if e not in s]
        for a, b in combinations(rest, 2):
            yield s | {a}, s | {b}, s, s | {a, b}


def check_typeA_local(d: int, f: Mapping) -> bool:
    return all(sign(f[p] + f[q] - f[r] - f[t]) >= 0 for p, q, r, t in typeA_local_inequalities(d))


def check_typeA_global(d: int, f: Mapping) -> bool:
    sets = list(subsets(d))
    return all(sign(f[s] + f[t] - f[s & t] - f[s | t]) >= 0 for s in sets for t in sets)


def typeA_functionals(fan: CoxeterFan) -> set:
    """The classical local inequalities written as sparse functionals on rays."""
    d = fan.rs.d + 1
    full = frozenset(range(1, d + 1))
    out = set()
    for p, q, r, t in typeA_local_inequalities(d):
        terms: Dict[int, Scalar] = {}
        for s, c in ((p, 1), (q, 1), (r, -1), (t, -1)):
            if s and s != full:
                k = typeA_ray(fan, s)
                terms[k] = terms.get(k, 0) + c
        out.add(tuple(sorted((k, c) for k, c in terms.items() if c)))
    return out


# types B and C -------------------------------------------------------------

def typeBC_ray(fan: CoxeterFan, s) -> int:
    d = fan.rs.d
    half = fan.rs.family == "B" and len(s) == d
    return _ray(fan, indicator(s, d, Fraction(1, 2) if half else 1))


def encode_typeBC(fan: CoxeterFan, f: Mapping) -> SupportFunction:
    """``h(e_S) = f(S)`` on a ``B_d`` or ``C_d`` fan.

    On ``B_d`` the rays with ``|S| = d`` are ``e_S / 2`` and get ``f(S) / 2``.
    """
    _require(fan, "BC")
    d = fan.rs.d
    values: List[Scalar] = [None] * fan.n_rays
    for s in admissible_sets(d):
        if not s:
            continue
        if s not in f:
            raise SupportFunctionError(f"f has no value on signed set {sorted(s)}")
        v = f[s]
        if fan.rs.family == "B" and len(s) == d:
            v = Fraction(1, 2) * v
        values[typeBC_ray(fan, s)] = v
    return SupportFunction(fan, values)


def decode_typeBC(h: SupportFunction) -> Dict[SignedSet, Scalar]:
    fan = h.fan
    _require(fan, "BC")
    d = fan.rs.d
    out = {EMPTY: 0}
    for s in admissible_sets(d):
        if s:
            v = h.values[typeBC_ray(fan, s)]
            if fan.rs.family == "B" and len(s) == d:
                v = 2 * v
            out[s] = simplify(v)
    return out


def bisubmodular_local_inequalities(d: int):
    """Displayed local families as ``(plus, minus)`` lists of signed sets.

    ``|S| <= d-2``: ``f(Sa) + f(Sb) >= f(S) + f(Sab)``;
    ``|S| = d-1``: ``f(Sa) + f(S a-bar) >= 2 f(S)``.
    """
    for s in admissible_sets(d):
        used = {abs(e) for e in s}
        free = [e for e in range(1, d + 1) if e not in used]
        if len(s) <= d - 2:
            signed = [sg * e for e in free for sg in (1, -1)]
            for a, b in combinations(signed, 2):
                if a != -b:
                    yield [s | {a}, s | {b}], [s, s | {a, b}]
        elif len(s) == d - 1:
            (a,) = free
            yield [s | {a}, s | {-a}], [s, s]


def check_bisubmodular_local(d: int, f: Mapping) -> bool:
    f = _with_empty(f)
    return all(sign(sum(f[p] for p in plus) - sum(f[m] for m in minus)) >= 0
               for plus, minus in bisubmodular_local_inequalities(d))


def check_bisubmodular_global(d: int, f: Mapping) -> bool:
    """``f(S) + f(T) >= f(S meet T) + f(S join T)`` over all admissible pairs."""
    f = _with_empty(f)
    sets = list(admissible_sets(d))
    for i, s in enumerate(sets):
        for t in sets[i + 1:]:
            if sign(f[s] + f[t] - f[meet(s, t)] - f[join(s, t)]) < 0:
                return False
    return True


def _with_empty(f: Mapping) -> Mapping:
    if EMPTY in f:
        return f
    g = dict(f)
    g[EMPTY] = 0
    return g


def bisubmodular_functionals(fan: CoxeterFan) -> set:
    """The displayed local families as sparse functionals on the fan's rays."""
    d = fan.rs.d
    out = set()
    for plus, minus in bisubmodular_local_inequalities(d):
        terms: Dict[int, Scalar] = {}
        for group, c in ((plus, 1), (minus, -1)):
            for s in group:
                if not s:
                    continue
                k = typeBC_ray(fan, s)
                # B_d rays with |S| = d are e_S/2, so h(e_S) = 2 h(ray)
                w = 2 if fan.rs.family == "B" and len(s) == d else 1
                terms[k] = terms.get(k, 0) + c * w
        out.add(tuple(sorted((k, c) for k, c in terms.items() if c)))
    return out


# type D ----------------------------------------------------------------------

def typeD_ray(fan: CoxeterFan, s) -> int:
    d = fan.rs.d
    return _ray(fan, indicator(s, d, Fraction(1, 2) if len(s) == d else 1))


def encode_typeD(fan: CoxeterFan, f: Mapping, g: Mapping) -> SupportFunction:
    """``h(e_S) = f(S)`` for ``|S| <= d-2`` and ``h(e_S / 2) = g(S)`` for ``|S| = d``."""
    _require(fan, "D")
    d = fan.rs.d
    values: List[Scalar] = [None] * fan.n_rays
    for k in list(range(1, d - 1)) + [d]:
        table = g if k == d else f
        for s in admissible_sets(d, k):
            if s not in table:
                which = "g" if k == d else "f"
                raise SupportFunctionError(f"{which} has no value on signed set {sorted(s)}")
            values[typeD_ray(fan, s)] = table[s]
    return SupportFunction(fan, values)


def decode_typeD(h: SupportFunction) -> Tuple[Dict[SignedSet, Scalar], Dict[SignedSet, Scalar]]:
    fan = h.fan
    _require(fan, "D")
    d = fan.rs.d
    f = {EMPTY: 0}
    g = {}
    for k in range(1, d - 1):
        for s in admissible_sets(d, k):
            f[s] = h.values[typeD_ray(fan, s)]
    for s in admissible_sets(d, d):
        g[s] = h.values[typeD_ray(fan, s)]
    return f, g


def disubmodular_local_inequalities(d: int):
    """Displayed local type-D families as ``(plus, minus)`` lists of
    ``("f" | "g", signed set)``."""
    for s in admissible_sets(d):
        if len(s) > d - 2:
            continue
        used = {abs(e) for e in s}
        free = [e for e in range(1, d + 1) if e not in used]
        signed = [sg * e for e in free for sg in (1, -1)]
        pairs = [(a, b) for a, b in combinations(signed, 2) if a != -b]
        if len(s) <= d - 4:
            for a, b in pairs:
                yield [("f", s | {a}), ("f", s | {b})], [("f", s), ("f", s | {a, b})]
        elif len(s) == d - 3:
            for a, b in pairs:
                (c,) = [e for e in free if e not in (abs(a), abs(b))]
                yield ([("f", s | {a}), ("f", s | {b})],
                       [("f", s), ("g", s | {a, b, c}), ("g", s | {a, b, -c})])
        else:
            for a, b in pairs:
                yield [("g", s | {a, b}), ("g", s | {-a, -b})], [("f", s)]


def check_disubmodular_local(d: int, f: Mapping, g: Mapping) -> bool:
    tables = {"f": _with_empty(f), "g": g}

    def total(group):
        return sum((tables[t][s] for t, s in group), 0)

    return all(sign(total(plus) - total(minus)) >= 0
               for plus, minus in disubmodular_local_inequalities(d))


def disubmodular_bridge(d: int, f: Mapping, g: Mapping) -> Dict[SignedSet, Scalar]:
    """Extend ``(f, g)`` to every admissible set so that the pair is
    disubmodular iff the extension is bisubmodular."""
    f = _with_empty(f)
    h: Dict[SignedSet, Scalar] = {}
    for s in admissible_sets(d):
        if len(s) <= d - 2:
            h[s] = f[s]
        elif len(s) == d - 1:
            (a,) = [e for e in range(1, d + 1) if e not in {abs(x) for x in s}]
            h[s] = simplify(g[s | {a}] + g[s | {-a}])
        else:
            h[s] = simplify(2 * g[s])
    return h
