"""Command line front end.

Exit codes: 0 when every requested check passes, 1 when one fails, 2 for
usage errors. ``--json`` prints {command, params, results, version} with
sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import CoeffRing
from .errors import NotClosedError, NotDualizableError, UsageError
from .report import Report

GROUPS = {"gl2": "GL2", "sl2": "SL2"}
CARRIERS = {"g": "G", "n": "N", "t": "T", "nt": "NmodT"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ring(text: str) -> CoeffRing:
    return CoeffRing.parse(text)


def build_comodule(desc: str, group: str, ring: CoeffRing, carrier: str = "G"):
    """Comodule from a description: standard, sym<d>, symtensor2, dual:<desc>, adjoint."""
    from .adjoint import adjoint_gl2_points, adjoint_sl2
    from .comodule import dual, restrict, standard, sym_power, sym_tensor2
    from .hopf import build_hopf, quotient_map

    def base(s: str):
        if s.startswith("dual:"):
            return dual(base(s[5:]))
        h = build_hopf(group, "G", ring)
        if s == "standard":
            return standard(h)
        if s == "symtensor2":
            return sym_tensor2(standard(h))
        if s == "adjoint":
            return adjoint_gl2_points(ring) if group == "GL2" else adjoint_sl2(ring)
        if s.startswith("sym") and s[3:].isdigit():
            return sym_power(standard(h), int(s[3:]))
        raise UsageError(f"unknown comodule description {s!r}")

    W = base(desc)
    if carrier != "G":
        W = restrict(W, quotient_map(group, "G", carrier, ring))
    return W


def _matrix_details(W) -> list:
    return [[str(v) for v in row] for row in W.matrix]


# ---------------------------------------------------------------------------
# subcommands; each returns (params, Report)
# ---------------------------------------------------------------------------


def cmd_character(a):
    from .acceptance import _sym_over_n
    from .weights import character, extract_weights, refined_character, refined_decompose, sym_character

    if a.d < 0:
        raise UsageError("--d must be >= 0")
    _, WN, WT = _sym_over_n(a.d, a.ring)
    w = extract_weights(WT)
    rep = Report(f"character of Sym^{a.d}(V)")
    if a.refined:
        for b in refined_decompose(WN, w):
            chi = b.character()
            rep.add(f"block {b.index}", chi == refined_character(a.d, b.index),
                    {"basis": [WN.basis[i] for i in b.indices], "character": str(chi), "weights": list(b.weights)})
    chi = character(w)
    rep.add("total", chi == sym_character(a.d), {"character": str(chi), "weights": w})
    return {"d": a.d, "refined": a.refined, "ring": str(a.ring)}, rep


def cmd_verify(a):
    from . import acceptance
    from .comodule import verify_comodule
    from .hopf import build_hopf, verify_hopf_axioms

    params = {"target": a.target}
    if a.target == "hopf":
        group, kind = GROUPS[a.group], CARRIERS[a.carrier]
        params.update(group=a.group, ring=str(a.ring), carrier=a.carrier)
        return params, verify_hopf_axioms(build_hopf(group, kind, a.ring))
    if a.target == "comodule":
        params.update(group=a.group, ring=str(a.ring), carrier=a.carrier, comodule=a.comodule)
        W = build_comodule(a.comodule, GROUPS[a.group], a.ring, CARRIERS[a.carrier])
        return params, verify_comodule(W)
    if a.target == "all":
        params["dmax"] = a.dmax
        rep = Report("acceptance")
        for o in acceptance.run_all(a.dmax):
            c = o.criterion
            rep.add(f"{c.number}. {c.title}", o.passed,
                    {"seconds": round(o.seconds, 3), "limit": c.limit,
                     "failing": [x.name for x in o.report.failures()]})
        return params, rep
    fn = {
        "dist": acceptance.c5_distributions,
        "adjoint": acceptance.c6_adjoint,
        "example": acceptance.c7_sym_vs_symtensor,
        "quotient": acceptance.c8_quotient,
        "points": acceptance.c9_points,
        "f2": acceptance.c10_finite_field,
    }[a.target]
    return params, fn()


def cmd_iso(a):
    from .morphism import iso_exists

    group = GROUPS[a.group]
    W1 = build_comodule(a.left, group, a.ring, CARRIERS[a.carrier])
    W2 = build_comodule(a.right, group, a.ring, CARRIERS[a.carrier])
    r = iso_exists(W1, W2, seed=a.seed)
    rep = Report("isomorphism")
    verdicts = {"isomorphic": "isomorphic", "none": "not isomorphic", "undecided": "undecided"}
    # the question is answered when the verdict is definite
    rep.add("verdict", r.verdict != "undecided",
            {"verdict": verdicts[r.verdict], "witness": r.witness, "reason": r.obstruction})
    rep.merge(r.report, "witness")
    params = {"left": a.left, "right": a.right, "ring": str(a.ring), "carrier": a.carrier, "group": a.group}
    return params, rep


def cmd_adjoint(a):
    from .adjoint import adjoint_gl2_coords, adjoint_gl2_points, adjoint_sl2, adjoint_sl2_from_gl2
    from .comodule import restrict, verify_comodule
    from .hopf import quotient_map
    from .weights import extract_weights

    group = GROUPS[a.group]
    rep = Report("adjoint")
    if group == "GL2":
        W = adjoint_gl2_points(a.ring)
        C = adjoint_gl2_coords(a.ring)
        rep.add("points and coordinate constructions agree", C.dual.same_matrix(W))
    else:
        W = adjoint_sl2(a.ring)
        rep.add("sl2 is a subcomodule of gl2", adjoint_sl2_from_gl2(a.ring).same_matrix(W))
    rep.add("comodule axioms", verify_comodule(W).ok)
    kind = CARRIERS[a.restrict]
    if kind != "G":
        W = restrict(W, quotient_map(group, "G", kind, a.ring))
    rep.add("matrix", True, {"basis": list(W.basis), "rows": _matrix_details(W)})
    if kind == "T":
        rep.add("weights", True, extract_weights(W))
    return {"group": a.group, "restrict": a.restrict, "ring": str(a.ring)}, rep


def cmd_points(a):
    from . import points

    group = {"gl2": "GL2", "sl2": "SL2", "t": "T", "n": "N", "nt": "NmodT"}[a.group]
    ambient = GROUPS[a.ambient]
    params = {"group": a.group, "mod": a.mod, "ambient": a.ambient, "verify": a.verify}
    P = points.enumerate_points(group, a.mod, ambient)
    rep = Report("points")
    rep.add("enumerated", P.closed, {"order": P.order, "closed": P.closed})
    if a.verify == "law":
        kind = {"GL2": "G", "SL2": "G", "T": "T", "N": "N", "NmodT": "NmodT"}[group]
        amb = group if group in ("GL2", "SL2") else ambient
        rep.merge(points.hopf_points_consistency(amb, a.mod, kind), "")
    elif a.verify == "normalizer":
        rep.merge(points.normalizer_check(a.mod, group if group in ("GL2", "SL2") else ambient), "")
    elif a.verify == "splitting":
        rep.merge(points.splitting_check(a.mod), "")
    elif a.verify == "roots":
        rep.merge(points.root_coroot_check(a.mod), "")
    return params, rep


def cmd_bracket_table(a):
    from .distributions import bracket_table, dist_basis

    group = GROUPS[a.group]
    names = [str(b) for b in dist_basis(group)]
    rep = Report("bracket table")
    for (i, j), v in bracket_table(group).items():
        rep.add(f"[{names[i]}, {names[j]}]", True, str(v))
    return {"group": a.group}, rep


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gl2hopf", description="Hopf algebras of GL2 and SL2: checks and computations.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, ring="Z"):
        sp.add_argument("--json", action="store_true", help="machine readable output")
        sp.add_argument("--ring", type=_ring, default=CoeffRing.parse(ring), help="Z, Q, F<p> or Zmod<n>")

    s = sub.add_parser("character", help="character of Sym^d(V), optionally per Weyl-orbit block")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--refined", action="store_true")
    common(s)
    s.set_defaults(fn=cmd_character)

    s = sub.add_parser("verify", help="run a verification")
    s.add_argument("target", choices=["hopf", "comodule", "dist", "adjoint", "example", "quotient", "points",
                                      "f2", "all"])
    s.add_argument("--group", choices=sorted(GROUPS), default="gl2")
    s.add_argument("--carrier", choices=sorted(CARRIERS), default="g")
    s.add_argument("--comodule", default="standard")
    s.add_argument("--dmax", type=int, default=8)
    common(s)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("iso", help="decide whether two comodules are isomorphic")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--carrier", choices=sorted(CARRIERS), default="g")
    s.add_argument("--group", choices=sorted(GROUPS), default="gl2")
    s.add_argument("--seed", type=int, default=0)
    common(s)
    s.set_defaults(fn=cmd_iso)

    s = sub.add_parser("adjoint", help="the adjoint comodule")
    s.add_argument("--group", choices=sorted(GROUPS), default="gl2")
    s.add_argument("--restrict", choices=["g", "n", "t"], default="g")
    common(s)
    s.set_defaults(fn=cmd_adjoint)

    s = sub.add_parser("points", help="points over Z/n")
    s.add_argument("--group", choices=["gl2", "sl2", "t", "n", "nt"], required=True)
    s.add_argument("--mod", type=int, required=True)
    s.add_argument("--ambient", choices=sorted(GROUPS), default="gl2")
    s.add_argument("--verify", choices=["law", "normalizer", "splitting", "roots"])
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_points)

    s = sub.add_parser("bracket-table", help="Lie bracket on Dist_1")
    s.add_argument("--group", choices=sorted(GROUPS), default="gl2")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_bracket_table)
    return p


def render(command: str, params: dict, rep: Report, as_json: bool) -> str:
    if as_json:
        doc = {"command": command, "params": params, "results": rep.to_json(), "version": __version__}
        return json.dumps(doc, sort_keys=True, indent=2)
    lines = [f"{command}: {'pass' if rep.ok else 'FAIL'}"]
    for c in rep.checks:
        d = c.details
        if not isinstance(d, str):
            d = json.dumps(d, sort_keys=True, default=str)
        lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}" + (f": {d}" if d else ""))
    return "\n".join(lines)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = make_parser().parse_args(argv)
        params, rep = args.fn(args)
    except (UsageError, NotClosedError, NotDualizableError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(render(args.command, params, rep, getattr(args, "json", False)), file=out)
    return 0 if rep.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
