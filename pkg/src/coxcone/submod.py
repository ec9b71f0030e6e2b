"""The cone of submodular functions on a Coxeter fan.

A support function assigns a value to every ray.  It is submodular (convex
piecewise linear on the fan) iff every wall-crossing functional is
nonnegative on it.  Walls related by the stabilizer of their defining
relation give the same functional, so the facet list is the wall list
deduplicated by ``(generator i, coset of W_{[d] - N(i)})``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .coxfan import CoxeterFan, Terms, _apply
from .field import Scalar, format_scalar, is_integer, parse_scalar, sign, simplify
from .rootsys import RootSystem, RootSystemError, RootSystemSpec, build
from .weyl import DEFAULT_CAP, WeylGroup

__all__ = [
    "SupportFunction",
    "SupportFunctionError",
    "FacetInequality",
    "Verdict",
    "SubmodularCone",
    "facet_count_formula",
    "is_discrete",
    "setting",
]


class SupportFunctionError(ValueError):
    """Malformed or incomplete support function input."""


class SupportFunction:
    """A value for every ray of a fan, stored in the fan's ray order."""

    __slots__ = ("fan", "values")

    def __init__(self, fan: CoxeterFan, values: Sequence[Scalar]):
        if len(values) != fan.n_rays:
            raise SupportFunctionError(
                f"expected {fan.n_rays} values for {fan.rs.name}, got {len(values)}")
        self.fan = fan
        self.values: Tuple[Scalar, ...] = tuple(simplify(v) for v in values)

    @classmethod
    def zero(cls, fan: CoxeterFan) -> "SupportFunction":
        return cls(fan, [0] * fan.n_rays)

    @classmethod
    def from_function(cls, fan: CoxeterFan, fn) -> "SupportFunction":
        """Apply ``fn(ray)`` to every :class:`~coxcone.coxfan.Ray`."""
        return cls(fan, [fn(r) for r in fan.rays])

    @classmethod
    def linear(cls, fan: CoxeterFan, v: Sequence[Scalar]) -> "SupportFunction":
        """The global linear function ``r -> <r, v>``."""
        return cls(fan, [fan.rs.inner(r.coords, v) for r in fan.rays])

    @classmethod
    def from_mapping(cls, fan: CoxeterFan, mapping: Mapping) -> "SupportFunction":
        """Build from ``{coords: value}``; every ray must be present."""
        keyed = {tuple(simplify(x) for x in k): v for k, v in mapping.items()}
        unknown = [k for k in keyed if k not in fan.ray_index]
        if unknown:
            raise SupportFunctionError(
                f"{len(unknown)} keys are not rays of {fan.rs.name}: "
                + ", ".join(_ray_text(k) for k in unknown[:5]))
        missing = [r.coords for r in fan.rays if r.coords not in keyed]
        if missing:
            raise SupportFunctionError(
                f"{len(missing)} rays have no value: "
                + ", ".join(_ray_text(k) for k in missing[:5])
                + (" ..." if len(missing) > 5 else ""))
        return cls(fan, [keyed[r.coords] for r in fan.rays])

    def __getitem__(self, key) -> Scalar:
        if isinstance(key, int):
            return self.values[key]
        return self.values[self.fan.ray_of(key).index]

    def as_mapping(self) -> Dict[tuple, Scalar]:
        return {r.coords: v for r, v in zip(self.fan.rays, self.values)}

    def _check(self, other: "SupportFunction"):
        if other.fan is not self.fan and other.fan.rs.spec != self.fan.rs.spec:
            raise SupportFunctionError("support functions live on different fans")

    def __add__(self, other: "SupportFunction") -> "SupportFunction":
        self._check(other)
        return SupportFunction(self.fan, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "SupportFunction") -> "SupportFunction":
        self._check(other)
        return SupportFunction(self.fan, [a - b for a, b in zip(self.values, other.values)])

    def scale(self, c: Scalar) -> "SupportFunction":
        return SupportFunction(self.fan, [c * v for v in self.values])

    __rmul__ = scale

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, SupportFunction):
            return NotImplemented
        return self.fan.rs.spec == other.fan.rs.spec and self.values == other.values

    def __hash__(self):
        return hash((self.fan.rs.spec, self.values))

    def __repr__(self):
        return f"SupportFunction({self.fan.rs.name}, {len(self.values)} rays)"

    # JSON -----------------------------------------------------------------

    def to_json(self) -> dict:
        spec = self.fan.rs.spec
        rs_obj = {"family": spec.family, "rank": spec.rank}
        if spec.m is not None:
            rs_obj["m"] = spec.m
        return {
            "rootsystem": rs_obj,
            "values": [{"ray": [format_scalar(x) for x in r.coords], "h": format_scalar(v)}
                       for r, v in zip(self.fan.rays, self.values)],
        }

    @classmethod
    def from_json(cls, fan: CoxeterFan, data) -> "SupportFunction":
        """Parse the JSON object form; errors name the offending field."""
        if not isinstance(data, dict):
            raise SupportFunctionError("top level must be an object")
        rs_obj = data.get("rootsystem")
        if rs_obj is not None:
            if not isinstance(rs_obj, dict):
                raise SupportFunctionError("field 'rootsystem' must be an object")
            try:
                spec = RootSystemSpec(str(rs_obj.get("family", "")), int(rs_obj.get("rank", 0)),
                                      rs_obj.get("m"))
            except (RootSystemError, TypeError, ValueError) as exc:
                raise SupportFunctionError(f"field 'rootsystem': {exc}") from None
            if spec != fan.rs.spec:
                raise SupportFunctionError(
                    f"field 'rootsystem': file is for {spec.name}, expected {fan.rs.name}")
        entries = data.get("values")
        if not isinstance(entries, list):
            raise SupportFunctionError("field 'values' must be a list")
        mapping = {}
        for n, entry in enumerate(entries):
            where = f"values[{n}]"
            if not isinstance(entry, dict) or "ray" not in entry or "h" not in entry:
                raise SupportFunctionError(f"{where}: expected an object with 'ray' and 'h'")
            ray = entry["ray"]
            if not isinstance(ray, list) or len(ray) != fan.d:
                raise SupportFunctionError(f"{where}.ray: expected a list of {fan.d} scalars")
            try:
                key = tuple(parse_scalar(x) for x in ray)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise SupportFunctionError(f"{where}.ray: {exc}") from None
            try:
                val = parse_scalar(entry["h"])
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise SupportFunctionError(f"{where}.h: {exc}") from None
            if key in mapping:
                raise SupportFunctionError(f"{where}.ray: duplicate ray {_ray_text(key)}")
            mapping[key] = val
        return cls.from_mapping(fan, mapping)

    @classmethod
    def loads(cls, fan: CoxeterFan, text: str) -> "SupportFunction":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SupportFunctionError(
                f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        return cls.from_json(fan, data)


def _ray_text(key) -> str:
    return "[" + ",".join(format_scalar(x) for x in key) + "]"


@dataclass(frozen=True)
class FacetInequality:
    """``sum(c * h(r) for r, c in terms) >= 0``, one per facet of the cone."""

    gen: int
    coset_rep: int  # index in W of the minimal element of w W_{[d] - N(gen)}
    terms: Terms

    def evaluate(self, h) -> Scalar:
        return _apply(self.terms, h)

    def as_dict(self) -> Dict[int, Scalar]:
        return dict(self.terms)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a membership test; truthy iff ``member``.

    ``facet`` (local oracle) or ``pair`` (global oracle) is the first
    violation in canonical order and ``slack`` its (negative) value.
    """

    member: bool
    facet: Optional[FacetInequality] = None
    pair: Optional[Tuple[int, int]] = None
    slack: Optional[Scalar] = None

    def __bool__(self):
        return self.member


class SubmodularCone:
    """Facets and membership oracles for the submodular cone of ``fan``."""

    def __init__(self, fan: CoxeterFan):
        self.fan = fan
        self.rs = fan.rs
        self.W = fan.W
        self._facets: Optional[List[FacetInequality]] = None
        self._pairs: Optional[List[Tuple[int, int, Terms]]] = None

    @property
    def facets(self) -> List[FacetInequality]:
        if self._facets is None:
            self._facets = self._dedup_facets()
        return self._facets

    def _dedup_facets(self) -> List[FacetInequality]:
        d = self.rs.d
        complements = [[j for j in range(d) if j not in self.rs.neighbors(i)] for i in range(d)]
        seen: Dict[Tuple[int, int], FacetInequality] = {}
        for wall in self.fan.walls:
            rep = self.W.coset_canonical(wall.chamber, complements[wall.gen]).index
            key = (wall.gen, rep)
            if key not in seen:
                seen[key] = FacetInequality(wall.gen, rep, wall.terms)
        return [seen[k] for k in sorted(seen)]

    def facet_classes(self) -> Dict[int, int]:
        """Number of facets in each generator class."""
        out = {i: 0 for i in range(self.rs.d)}
        for f in self.facets:
            out[f.gen] += 1
        return out

    def check_local(self, h) -> Verdict:
        """Nonnegativity of every facet functional."""
        for f in self.facets:
            v = f.evaluate(h)
            if sign(v) < 0:
                return Verdict(False, facet=f, slack=v)
        return Verdict(True)

    @property
    def pair_checks(self) -> List[Tuple[int, int, Terms]]:
        """Ray pairs whose sum is not already the given combination."""
        if self._pairs is None:
            # a pair spanning a face decomposes as itself, so its check is 0 >= 0
            self._pairs = [(a, b, t) for a, b, t in self.fan.pair_terms
                           if t != ((a, 1), (b, 1))]
        return self._pairs

    def check_global(self, h) -> Verdict:
        """``h(r) + h(r') >= h(r + r')`` over all ray pairs."""
        values = h.values if hasattr(h, "values") else h
        for a, b, terms in self.pair_checks:
            v = simplify(values[a] + values[b] - _apply(terms, values))
            if sign(v) < 0:
                return Verdict(False, pair=(a, b), slack=v)
        return Verdict(True)

    def slack(self, h) -> List[Scalar]:
        return [f.evaluate(h) for f in self.facets]


def facet_count_formula(family: str, d: int) -> int:
    """Closed-form facet counts.

    ``A``: ``d`` is the ground-set size, so the root system is ``A_{d-1}``.
    ``BC`` (also ``B`` or ``C``) and ``D``: ``d`` is the rank.
    """
    fam = family.upper()
    if fam == "A":
        if d < 2:
            raise ValueError("type A count needs ground set size d >= 2")
        return d * (d - 1) * 2 ** d // 8
    if fam in ("BC", "B", "C"):
        if d < 2:
            raise ValueError("type BC count needs d >= 2")
        return 2 * d * (d - 1) * 3 ** (d - 2) + d * 2 ** (d - 1)
    if fam == "D":
        if d < 3:
            raise ValueError("type D count needs d >= 3")
        return 2 * d * (d - 1) * 3 ** (d - 2) - d * (d - 1) * 2 ** (d - 2)
    raise ValueError(f"no facet count formula for family {family!r}")


def is_discrete(rs: RootSystem, h) -> bool:
    """True iff every value is an integer; only meaningful when crystallographic."""
    if not rs.crystallographic:
        raise RootSystemError(f"{rs.name} is not crystallographic; discreteness is undefined")
    values = h.values if hasattr(h, "values") else h
    return all(is_integer(v) for v in values)


@dataclass
class Setting:
    """Everything built for one root system, shared between callers."""

    rs: RootSystem
    W: WeylGroup
    fan: CoxeterFan
    cone: SubmodularCone


@lru_cache(maxsize=None)
def _setting(spec: RootSystemSpec, cap: int) -> Setting:
    rs = build(spec)
    W = WeylGroup(rs, cap)
    fan = CoxeterFan(W)
    cone = fan._cone = SubmodularCone(fan)
    return Setting(rs, W, fan, cone)


def setting(family: str, rank: int, m: Optional[int] = None, cap: int = DEFAULT_CAP) -> Setting:
    """Root system, Weyl group, fan and cone, built once per ``(spec, cap)``."""
    return _setting(RootSystemSpec(family, rank, m), cap)
