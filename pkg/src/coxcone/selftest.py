"""The acceptance checks, runnable from the CLI and from pytest.

Every check returns a :class:`CheckResult`; nothing here raises on a
mathematical mismatch, so one failing check never hides the others.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import classical, defcone, linalg, sampling
from .field import format_scalar, sign
from .rootsys import RootSystemSpec, build
from .submod import facet_count_formula, is_discrete, setting

SEED = 20240229


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


# systems used by several checks
RANK_LE_3 = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3),
             ("G", 2), ("H", 3), ("I", 2, 3), ("I", 2, 4), ("I", 2, 5), ("I", 2, 6)]
RANK_LE_4 = RANK_LE_3 + [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("F", 4), ("H", 4)]
CRYSTALLOGRAPHIC_LE_4 = [s for s in RANK_LE_4
                         if build(RootSystemSpec(*s[:2], *s[2:])).crystallographic]
ALL_SUPPORTED = ([("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)]
                 + [("C", n) for n in range(2, 9)] + [("D", n) for n in range(3, 9)]
                 + [("E", 6), ("F", 4), ("G", 2), ("H", 3), ("H", 4)]
                 + [("I", 2, m) for m in (3, 4, 5, 6)])


def _setting(s):
    return setting(s[0], s[1], s[2] if len(s) > 2 else None)


def _name(s) -> str:
    return build(RootSystemSpec(s[0], s[1], s[2] if len(s) > 2 else None)).name


# 1 ---------------------------------------------------------------------------

FACET_TABLE = {
    "A": {3: 6, 4: 24, 5: 80, 6: 240},
    "BC": {2: 8, 3: 48, 4: 248, 5: 1160},
    "D": {3: 24, 4: 168, 5: 920},
}


def check_facet_counts() -> CheckResult:
    bad = []
    for fam, table in FACET_TABLE.items():
        for d, expected in table.items():
            s = ("A", d - 1) if fam == "A" else ("C" if fam == "BC" else fam, d)
            st = _setting(s)
            dedup = len(st.cone.facets)
            literal = len({w.terms for w in st.fan.walls})
            formula = facet_count_formula(fam, d)
            if not dedup == literal == formula == expected:
                bad.append(f"{fam}{d}: dedup {dedup}, literal {literal}, formula {formula}, "
                           f"expected {expected}")
    n = sum(len(t) for t in FACET_TABLE.values())
    return CheckResult(1, "facet counts", not bad,
                       "; ".join(bad) if bad else f"{n} systems match the closed forms")


# 2 ---------------------------------------------------------------------------

def check_inverse_cartan() -> CheckResult:
    bad = []
    for s in RANK_LE_4:
        rs = build(RootSystemSpec(s[0], s[1], s[2] if len(s) > 2 else None))
        W = _setting(s).W
        for k in range(rs.d):
            orbit = W.orbit(rs.fund_coweights[k])
            for i in range(rs.d):
                best = None
                for p in orbit:
                    v = rs.inner(rs.fund_weights[i], p)
                    if best is None or sign(v - best) > 0:
                        best = v
                if best != rs.cartan_inv[k][i]:
                    bad.append(f"{rs.name} k={k + 1} i={i + 1}: {format_scalar(best)}")
    return CheckResult(2, "inverse Cartan identity", not bad,
                       "; ".join(bad[:5]) if bad else f"{len(RANK_LE_4)} systems, all (i, k)")


# 3 ---------------------------------------------------------------------------

def check_oracle_equivalence(samples: int = 1000, seed: int = SEED) -> CheckResult:
    parts, bad = [], []
    for s in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("H", 3)]:
        st = _setting(s)
        rng = random.Random(seed)
        members = disagree = 0
        for h in sampling.mixed(st.cone, rng, samples):
            a = bool(st.cone.check_local(h))
            b = bool(st.cone.check_global(h))
            members += a
            disagree += a != b
        parts.append(f"{st.rs.name} {members}/{samples} members")
        if disagree:
            bad.append(f"{st.rs.name}: {disagree} disagreements")
    return CheckResult(3, "local/global oracle equivalence", not bad,
                       "; ".join(bad) if bad else "zero disagreements (" + ", ".join(parts) + ")")


# 4 ---------------------------------------------------------------------------

def check_typeA_classical() -> CheckResult:
    bad = []
    for d in (4, 5):
        st = _setting(("A", d - 1))
        fan_set = {f.terms for f in st.cone.facets}
        classic = classical.typeA_functionals(st.fan)
        if fan_set != classic:
            bad.append(f"d={d}: {len(fan_set ^ classic)} functionals differ")
    return CheckResult(4, "type A classical inequalities", not bad,
                       "; ".join(bad) if bad else "facet set equals the 3-term family for d = 4, 5")


# 5 ---------------------------------------------------------------------------

def check_bisubmodular(trials: int = 500, seed: int = SEED) -> CheckResult:
    parts, bad = [], []
    for d in (2, 3):
        st = _setting(("C", d))
        rng = random.Random(seed)
        members = disagree = 0
        for h in sampling.mixed(st.cone, rng, trials):
            f = classical.decode_typeBC(h)
            v = bool(st.cone.check_local(h))
            loc = classical.check_bisubmodular_local(d, f)
            glob = classical.check_bisubmodular_global(d, f)
            members += v
            disagree += not (v == loc == glob)
        parts.append(f"C{d} {members}/{trials}")
        if disagree:
            bad.append(f"C{d}: {disagree} disagreements")
    for d in (3, 4):
        st = _setting(("D", d))
        rng = random.Random(seed)
        members = disagree = 0
        for h in sampling.mixed(st.cone, rng, trials):
            f, g = classical.decode_typeD(h)
            di = classical.check_disubmodular_local(d, f, g)
            bi = classical.check_bisubmodular_global(d, classical.disubmodular_bridge(d, f, g))
            v = bool(st.cone.check_local(h))
            members += v
            disagree += not (di == bi == v)
        parts.append(f"D{d} {members}/{trials}")
        if disagree:
            bad.append(f"D{d}: {disagree} disagreements")
    return CheckResult(5, "bisubmodular and disubmodular bridge", not bad,
                       "; ".join(bad) if bad else "zero disagreements (" + ", ".join(parts) + " members)")


# 6 ---------------------------------------------------------------------------

def check_indecomposable_prediction() -> CheckResult:
    bad, total = [], 0
    for s in CRYSTALLOGRAPHIC_LE_4:
        st = _setting(s)
        for k in range(st.rs.d):
            h = defcone.fundamental_coweight_support(st.fan, k)
            nef = defcone.nef_dimension_at(st.fan, h)
            pred = defcone.predict_indecomposable_weight(st.rs, k)
            total += 1
            if pred != (nef == 1):
                bad.append(f"{st.rs.name} node {k + 1}: predicted {pred}, nef dimension {nef}")
    return CheckResult(6, "indecomposability prediction", not bad,
                       "; ".join(bad) if bad else f"{total} fundamental coweight polytopes agree")


# 7 ---------------------------------------------------------------------------

def noncrystallographic_nef(family: str, rank: int, nodes=None) -> Dict[int, int]:
    """Nef dimension of each fundamental weight polytope (1-based keys)."""
    st = setting(family, rank)
    nodes = range(st.rs.d) if nodes is None else nodes
    return {k + 1: defcone.nef_dimension_at(st.fan, defcone.fundamental_coweight_support(st.fan, k))
            for k in nodes}


def check_noncrystallographic(include_h4: bool = False) -> CheckResult:
    nef = noncrystallographic_nef("H", 3)
    expected = {1: True, 2: True, 3: False}
    bad = [f"H3 node {k}: nef dimension {nef[k]}, expected "
           + ("1" if want else "> 1")
           for k, want in expected.items() if (nef[k] == 1) != want]
    detail = "H3 nef dimensions " + ", ".join(f"node {k}: {v}" for k, v in nef.items())
    if include_h4:
        h4 = noncrystallographic_nef("H", 4, nodes=[2])
        detail += f"; H4 node 3: {h4[3]}"
        if h4[3] != 1:
            bad.append(f"H4 node 3: nef dimension {h4[3]}, expected 1")
    else:
        detail += "; H4 skipped (enable with --h4)"
    return CheckResult(7, "non-crystallographic exceptions", not bad,
                       detail + ("; " + "; ".join(bad) if bad else ""))


# 8 ---------------------------------------------------------------------------

def check_facet_witness() -> CheckResult:
    """Active walls of the lambda_i^vee polytope versus the generator-i wall class."""
    bad, total = [], 0
    for s in RANK_LE_3:
        st = _setting(s)
        for i in range(st.rs.d):
            h = defcone.fundamental_coweight_support(st.fan, i)
            active = set(defcone.active_walls(st.fan, h))
            klass = {n for n, w in enumerate(st.fan.walls) if w.gen == i}
            total += 1
            if active != klass:
                gens = sorted({st.fan.walls[n].gen + 1 for n in active})
                bad.append(f"{st.rs.name} i={i + 1}: active generators {gens}")
    return CheckResult(8, "facet-hood witness", not bad,
                       (f"{len(bad)}/{total} mismatches, e.g. " + "; ".join(bad[:3]))
                       if bad else f"{total} (system, i) pairs match")


# 9 ---------------------------------------------------------------------------

def parabolic_choices(d: int) -> List[frozenset]:
    """Three distinct parabolic index sets ``I`` per rank."""
    cands = [frozenset({0}), frozenset({d - 1}), frozenset(range(d - 1)), frozenset(),
             frozenset(range(d))]
    out = []
    for c in cands:
        if c not in out:
            out.append(c)
    return out[:3]


def check_realization_counts() -> CheckResult:
    bad, total = [], 0
    for s in RANK_LE_3:
        st = _setting(s)
        rs, W = st.rs, st.W
        n = len(defcone.vertices(st.fan, defcone.support_weight_polytope(st.fan, defcone.rho(rs))))
        total += 1
        if n != len(W):
            bad.append(f"{rs.name} permutohedron: {n} vertices, |W| = {len(W)}")
        for inside in parabolic_choices(rs.d):
            x = [sum((rs.fund_coweights[i][k] for i in range(rs.d) if i not in inside), 0)
                 for k in range(rs.d)]
            n = len(defcone.vertices(st.fan, defcone.support_weight_polytope(st.fan, x)))
            want = len(W) // len(W.parabolic(inside))
            total += 1
            if n != want:
                bad.append(f"{rs.name} I={sorted(i + 1 for i in inside)}: {n} vertices, want {want}")
    return CheckResult(9, "realization counts", not bad,
                       "; ".join(bad) if bad else f"{total} polytopes have the predicted vertex count")


# 10 --------------------------------------------------------------------------

def check_lattice(samples: int = 200, seed: int = SEED) -> CheckResult:
    bad = []
    for s in [("A", 3), ("B", 3), ("C", 3)]:
        st = _setting(s)
        rng = random.Random(seed)
        for n in range(samples):
            h = sampling.member(st.cone, rng, integral=True)
            if not is_discrete(st.rs, h) or not defcone.lattice_check(st.fan, h):
                bad.append(f"{st.rs.name} sample {n}")
    a2 = setting("A", 2)
    control = defcone.fundamental_coweight_support(a2.fan, 0)
    negative_ok = not defcone.lattice_check(a2.fan, control)
    if not negative_ok:
        bad.append("A2 inverse-Cartan row gave lattice vertices")
    return CheckResult(10, "coroot lattice vertices", not bad,
                       "; ".join(bad[:5]) if bad
                       else f"{3 * samples} integer members lattice, A2 control rejected")


# 11 --------------------------------------------------------------------------

def check_symmetric_cone(trials: int = 50, seed: int = SEED) -> CheckResult:
    bad = []
    rng = random.Random(seed)
    eps = Fraction(1, 1000)
    for s in ALL_SUPPORTED:
        rs = build(RootSystemSpec(s[0], s[1], s[2] if len(s) > 2 else None))
        d = rs.d
        at = linalg.transpose(rs.cartan)
        for k in range(d):
            if linalg.mat_vec(at, rs.cartan_inv[k]) != [1 if j == k else 0 for j in range(d)]:
                bad.append(f"{rs.name}: row {k + 1} not sent to e_{k + 1}")
        for _ in range(trials):
            c = [Fraction(rng.randint(0, 10), rng.randint(1, 5)) for _ in range(d)]
            v = [sum((c[k] * rs.cartan_inv[k][i] for k in range(d)), 0) for i in range(d)]
            verdict = defcone.symmetric_membership(rs, v)
            if not verdict or list(verdict.coeffs) != c:
                bad.append(f"{rs.name}: combination {c} rejected")
            j = rng.randrange(d)
            c[j] = -eps
            v = [sum((c[k] * rs.cartan_inv[k][i] for k in range(d)), 0) for i in range(d)]
            if defcone.symmetric_membership(rs, v):
                bad.append(f"{rs.name}: perturbed combination accepted")
    return CheckResult(11, "symmetric cone", not bad,
                       "; ".join(bad[:5]) if bad
                       else f"{len(ALL_SUPPORTED)} systems, {trials} combinations each")


CHECKS: List[Callable[..., CheckResult]] = [
    check_facet_counts,
    check_inverse_cartan,
    check_oracle_equivalence,
    check_typeA_classical,
    check_bisubmodular,
    check_indecomposable_prediction,
    check_noncrystallographic,
    check_facet_witness,
    check_realization_counts,
    check_lattice,
    check_symmetric_cone,
]


def run_check(number: int, **kwargs) -> CheckResult:
    fn = CHECKS[number - 1]
    start = time.perf_counter()
    res = fn(**kwargs)
    res.seconds = time.perf_counter() - start
    return res


def run_all(include_h4: bool = False, only: Optional[List[int]] = None, echo=None) -> List[CheckResult]:
    out = []
    for n in range(1, len(CHECKS) + 1):
        if only and n not in only:
            continue
        res = run_check(n, include_h4=include_h4) if n == 7 else run_check(n)
        if echo:
            echo(res.line())
        out.append(res)
    return out
