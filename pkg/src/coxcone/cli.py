"""Command-line interface.

    coxcone <verb> <family> <rank> [--m M] [flags] [-f FILE]
    coxcone selftest [--h4] [--only N ...]

Node numbers on the command line and in JSON output are 1-based.  Exit
status: 0 on success or membership, 1 on a negative verdict (the
certificate is in the JSON), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import defcone, selftest
from .field import format_scalar, parse_scalar
from .submod import SupportFunction, facet_count_formula, setting
from .weyl import DEFAULT_CAP, WeylCapExceeded

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

VERBS = ("info", "facets", "check", "vertices", "weightpoly", "indecomposable",
         "matroid-check", "selftest")


class InputError(Exception):
    """Bad user input; reported with exit status 2."""


def _vec(v) -> List[str]:
    return [format_scalar(x) for x in v]


def _word(elt) -> str:
    return "".join(f"s{i + 1}" for i in elt.word) or "e"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxcone",
        description="Submodular cones, deformations and Coxeter matroids of finite root systems.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    system = argparse.ArgumentParser(add_help=False)
    system.add_argument("family", help="A, B, C, D, E, F, G, H or I")
    system.add_argument("rank", type=int)
    system.add_argument("--m", type=int, default=None, help="dihedral order for I2(m)")
    system.add_argument("--wcap", type=int, default=DEFAULT_CAP,
                        help="abort Weyl group enumeration beyond this many elements")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("-f", "--file", help="support function JSON ('-' for stdin)")
    source.add_argument("--fundamental", type=int, metavar="K",
                        help="use the K-th fundamental coweight polytope instead of a file")

    sub.add_parser("info", parents=[system], help="sizes of the group, fan and cone")
    sub.add_parser("facets", parents=[system], help="list the facet inequalities")
    p = sub.add_parser("check", parents=[system, source], help="decide membership in the cone")
    p.add_argument("--global", dest="use_global", action="store_true",
                   help="use the pairwise oracle instead of the facet list")
    p = sub.add_parser("vertices", parents=[system, source], help="realize the polytope")
    p.add_argument("--ambient", action="store_true", help="add ambient coordinates (A-D)")
    p = sub.add_parser("weightpoly", parents=[system],
                       help="emit the support function of a weight polytope")
    p.add_argument("--fundamental", type=int, metavar="K")
    p.add_argument("--point", help="comma-separated simple-root coordinates of any point; "
                   "write --point=-1,2 when the first entry is negative")
    sub.add_parser("indecomposable", parents=[system, source],
                   help="nef dimension and indecomposability")
    p = sub.add_parser("matroid-check", parents=[system],
                       help="test whether a set of coset representatives is a Coxeter matroid")
    p.add_argument("-f", "--file", required=True,
                   help='JSON {"parabolic": [nodes], "members": [words] or "all"}')
    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--h4", action="store_true", help="include the H4 computation")
    p.add_argument("--only", type=int, nargs="+", metavar="N", help="run only these checks")
    return parser


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _node(st, k: Optional[int]) -> int:
    if k is None or not 1 <= k <= st.rs.d:
        raise InputError(f"--fundamental must be a node between 1 and {st.rs.d}")
    return k - 1


def _support(st, args) -> SupportFunction:
    if args.fundamental is not None:
        if args.file:
            raise InputError("give either -f or --fundamental, not both")
        return defcone.fundamental_coweight_support(st.fan, _node(st, args.fundamental))
    if not args.file:
        raise InputError("a support function is required: use -f FILE or --fundamental K")
    return SupportFunction.loads(st.fan, _read(args.file))


def _facet_json(st, f) -> dict:
    return {
        "generator": f.gen + 1,
        "coset_rep": _word(st.W[f.coset_rep]),
        "terms": [{"ray": _vec(st.fan.rays[r].coords), "coeff": format_scalar(c)} for r, c in f.terms],
    }


def cmd_info(st, args) -> tuple:
    rs = st.rs
    out = {
        "rootsystem": rs.name,
        "rank": rs.d,
        "crystallographic": rs.crystallographic,
        "cartan": [_vec(row) for row in rs.cartan],
        "dynkin": [[min(e) + 1, max(e) + 1, m] for e, m in sorted(rs.dynkin.items(), key=lambda t: sorted(t[0]))],
        "positive_roots": len(rs.pos_roots),
        "weyl_order": len(st.W),
        "rays": st.fan.n_rays,
        "walls": len(st.fan.walls),
        "facets": len(st.cone.facets),
        "facets_by_generator": {str(i + 1): n for i, n in st.cone.facet_classes().items()},
    }
    fam = rs.family
    if fam in ("A", "B", "C", "D"):
        key, d = ("A", rs.d + 1) if fam == "A" else ("BC" if fam in "BC" else "D", rs.d)
        if fam != "D" or d >= 3:
            out["facet_formula"] = facet_count_formula(key, d)
    return out, EXIT_OK


def cmd_facets(st, args) -> tuple:
    return {"rootsystem": st.rs.name, "count": len(st.cone.facets),
            "facets": [_facet_json(st, f) for f in st.cone.facets]}, EXIT_OK


def cmd_check(st, args) -> tuple:
    h = _support(st, args)
    if args.use_global:
        v = st.cone.check_global(h)
        out = {"member": v.member, "oracle": "global"}
        if not v:
            a, b = v.pair
            out["violated_pair"] = [_vec(st.fan.rays[a].coords), _vec(st.fan.rays[b].coords)]
            out["slack"] = format_scalar(v.slack)
    else:
        v = st.cone.check_local(h)
        out = {"member": v.member, "oracle": "local"}
        if not v:
            out["violated_facet"] = _facet_json(st, v.facet)
            out["slack"] = format_scalar(v.slack)
    return out, EXIT_OK if v else EXIT_NEGATIVE


def _not_member(st, h) -> Optional[tuple]:
    v = st.cone.check_local(h)
    if v:
        return None
    return {"member": False, "violated_facet": _facet_json(st, v.facet),
            "slack": format_scalar(v.slack)}, EXIT_NEGATIVE


def cmd_vertices(st, args) -> tuple:
    h = _support(st, args)
    bad = _not_member(st, h)
    if bad:
        return bad
    vs = defcone.vertices(st.fan, h)
    out = {"rootsystem": st.rs.name, "count": len(vs), "vertices": [_vec(v) for v in vs.vertices]}
    if args.ambient:
        if st.rs.ambient is None:
            raise InputError(f"--ambient needs a classical family, not {st.rs.name}")
        out["ambient"] = [_vec(v) for v in defcone.vertex_ambient(st.rs, vs)]
    return out, EXIT_OK


def cmd_weightpoly(st, args) -> tuple:
    if (args.fundamental is None) == (args.point is None):
        raise InputError("give exactly one of --fundamental K or --point x1,...,xd")
    if args.fundamental is not None:
        h = defcone.fundamental_coweight_support(st.fan, _node(st, args.fundamental))
    else:
        try:
            x = [parse_scalar(t) for t in args.point.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"--point: {exc}") from None
        if len(x) != st.rs.d:
            raise InputError(f"--point needs {st.rs.d} coordinates, got {len(x)}")
        # the orbit polytope only depends on the orbit, so move x to the dominant chamber
        w, c = st.fan.dominant_rep(x)
        dom = [sum((c[i] * st.rs.fund_weights[i][k] for i in range(st.rs.d)), 0)
               for k in range(st.rs.d)]
        h = defcone.support_weight_polytope(st.fan, dom)
    return h.to_json(), EXIT_OK


def cmd_indecomposable(st, args) -> tuple:
    h = _support(st, args)
    bad = _not_member(st, h)
    if bad:
        return bad
    nef = defcone.nef_dimension_at(st.fan, h, check=False)
    out = {"rootsystem": st.rs.name, "nef_dimension": nef, "indecomposable": nef == 1}
    if args.fundamental is not None:
        k = args.fundamental - 1
        out["only_triangular_2faces"] = defcone.only_triangular_2faces(st.rs, k)
        if st.rs.crystallographic:
            out["predicted_indecomposable"] = defcone.predict_indecomposable_weight(st.rs, k)
    return out, EXIT_OK


def cmd_matroid(st, args) -> tuple:
    try:
        data = json.loads(_read(args.file))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError("top level must be an object")
    par = data.get("parabolic", [])
    if not isinstance(par, list) or not all(isinstance(i, int) and 1 <= i <= st.rs.d for i in par):
        raise InputError(f"field 'parabolic': expected a list of nodes between 1 and {st.rs.d}")
    inside = sorted({i - 1 for i in par})
    members = data.get("members")
    W = st.W
    if members == "all":
        reps = sorted({W.coset_canonical(w, inside).index for w in range(len(W))})
    elif isinstance(members, list) and members:
        reps = []
        for n, m in enumerate(members):
            try:
                word = _parse_word(m, st.rs.d)
            except ValueError as exc:
                raise InputError(f"members[{n}]: {exc}") from None
            reps.append(W.element(word).index)
    else:
        raise InputError("field 'members': expected a nonempty list of words or \"all\"")
    v = defcone.coxeter_matroid_check(W, inside, reps)
    out = {"matroid": v.matroid, "points": len(v.points), "edges": len(v.edges)}
    if not v:
        i, j = v.violating_edge
        out["violating_edge"] = [_vec(v.points[i]), _vec(v.points[j])]
    return out, EXIT_OK if v else EXIT_NEGATIVE


def _parse_word(m, d: int) -> List[int]:
    """A word as ``"s1s2"``, ``"e"`` or a list of 1-based generators."""
    if isinstance(m, list):
        gens = m
    elif isinstance(m, str):
        text = m.strip()
        if text in ("", "e"):
            return []
        parts = text.split("s")
        if parts[0] != "" or not all(p.isdigit() for p in parts[1:]):
            raise ValueError(f"cannot parse word {m!r}")
        gens = [int(p) for p in parts[1:]]
    else:
        raise ValueError(f"cannot parse word {m!r}")
    if not all(isinstance(g, int) and 1 <= g <= d for g in gens):
        raise ValueError(f"generators must be between 1 and {d}")
    return [g - 1 for g in gens]


def cmd_selftest(args) -> tuple:
    results = selftest.run_all(include_h4=args.h4, only=args.only,
                               echo=lambda line: print(line, file=sys.stderr))
    out = {
        "passed": all(r.passed for r in results),
        "results": [{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in results],
    }
    return out, EXIT_OK if out["passed"] else EXIT_NEGATIVE


COMMANDS = {
    "info": cmd_info,
    "facets": cmd_facets,
    "check": cmd_check,
    "vertices": cmd_vertices,
    "weightpoly": cmd_weightpoly,
    "indecomposable": cmd_indecomposable,
    "matroid-check": cmd_matroid,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "selftest":
            out, code = cmd_selftest(args)
        else:
            st = setting(args.family, args.rank, args.m, args.wcap)
            out, code = COMMANDS[args.verb](st, args)
    except (InputError, ValueError, WeylCapExceeded) as exc:
        # ValueError covers malformed systems, support functions and coset data
        print(json.dumps({"error": str(exc)}))
        print(f"coxcone: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(out, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
