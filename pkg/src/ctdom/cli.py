"""Command-line front end.

Every command prints one JSON RunReport on stdout; diagnostics go to
stderr.  Exit codes: 0 ok, 2 unreadable input, 3 precondition violated,
4 verification disagreement, 5 budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .classes import classify_dichotomy, contains_induced
from .contraction import ct_bruteforce, ct_characterization, verify_certificate
from .domination import DomKind, SolverBudget, enumerate_dom_sets, min_dom_set
from .errors import CtdomError, GraphError, InvalidFormula, ParseError, PreconditionError, Timeout, TooManyVariables
from .graph import Graph, bits, four_subdivide, load_graph, make_named_graph
from .reductions.formula import all_satisfying, load_formula
from .reductions.gadgets import GadgetKind, build_gadget, certificate_labels, check_claimed_class, side_claims
from .reductions.local import check_local_claims
from .reductions.subdivision import td_transform_down, td_transform_up
from .suites import run_suite, suite_names

SMALL_KINDS = (GadgetKind.TD_2P4, GadgetKind.STD_LONG_PAW, GadgetKind.STD_C3C4)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_DISAGREE, EXIT_TIMEOUT = 0, 2, 3, 4, 5


class Disagreement(Exception):
    """A verification step failed; carries the partial report."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


def _digest(paths: list[str]) -> str:
    h = hashlib.sha256()
    for p in paths:
        with open(p, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()


def _set(G: Graph, D: int) -> list:
    return [G.label(v) for v in bits(D)] if G.labels else list(bits(D))


def _budget(args) -> SolverBudget:
    return SolverBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


# commands


def cmd_gamma(args) -> dict:
    G = load_graph(args.file)
    kind = DomKind.parse(args.kind)
    D = min_dom_set(G, kind, _budget(args))
    return {"gamma": D.bit_count(), "set": _set(G, D)}


def cmd_ct(args) -> dict:
    G = load_graph(args.file)
    kind = DomKind.parse(args.kind)
    out: dict = {}
    if args.method in ("brute", "both"):
        out["brute"] = ct_bruteforce(G, kind, _budget(args)).to_json()
    if args.method in ("char", "both"):
        res = ct_characterization(G, kind, _budget(args))
        out["char"] = res.to_json()
        out["certificateValid"] = verify_certificate(G, kind, res, _budget(args))
    if args.method == "both":
        out["agree"] = out["brute"]["ct"] == out["char"]["ct"]
        if not out["agree"]:
            raise Disagreement("brute force and characterisation disagree", out)
    out["ct"] = (out.get("char") or out["brute"])["ct"]
    if out.get("certificateValid") is False:
        raise Disagreement("characterisation certificate does not check out", out)
    return out


def cmd_hfree(args) -> dict:
    G = load_graph(args.file)
    H = make_named_graph(args.pattern)
    emb = contains_induced(G, H)
    return {"pattern": args.pattern, "free": emb is None, "embedding": None if emb is None else [G.label(v) for v in emb]}


def cmd_classify(args) -> dict:
    verdict = classify_dichotomy(args.pattern, args.kind, args.k)
    return {"pattern": args.pattern, "kind": DomKind.parse(args.kind).value, "k": args.k, **verdict.to_json()}


def cmd_gadget_build(args) -> dict:
    f = load_formula(args.formula)
    built = build_gadget(GadgetKind.parse(args.kind), f)
    bundles = built if isinstance(built, tuple) else (built,)
    assignments = all_satisfying(f)
    out = {"satisfiable": bool(assignments), "bundles": []}
    failed = []
    for B in bundles:
        entry = B.to_json()
        entry["vertexCountMatches"] = B.graph.n == B.predicted.vertex_count
        if not entry["vertexCountMatches"]:
            failed.append("vertex count")
        if args.verify in ("cert", "full"):
            holds, how = check_claimed_class(B)
            entry["classCheck"] = {"holds": holds, "detail": how}
            if not holds:
                failed.append("class")
            if assignments:
                a = assignments[0]
                claims = side_claims(B, a)
                entry["certificate"] = {"assignment": [int(x) for x in a], "set": certificate_labels(B, a)}
                entry["sideClaims"] = [c.to_json() for c in claims]
                failed += [c.name for c in claims if not c.holds]
            local = check_local_claims(B, _budget(args))
            entry["localClaims"] = {"checked": len(local), "violated": [r.to_json(B.graph) for r in local if not r.holds]}
            failed += [r.claim.name for r in local if not r.holds]
        if args.verify == "full":
            if B.kind in SMALL_KINDS:
                target = B.predicted.gamma_if_sat
                g = min_dom_set(B.graph, B.dom_kind, _budget(args)).bit_count()
                exact = {"gamma": g, "gammaHitsTarget": g == target}
                if (g == target) != bool(assignments):
                    failed.append("gamma biconditional")
                if B.kind is not GadgetKind.STD_C3C4:
                    c = ct_characterization(B.graph, B.dom_kind, _budget(args)).value
                    exact["ct"] = c
                    if (c == B.predicted.ct_if_sat) != bool(assignments):
                        failed.append("ct biconditional")
            else:
                exact = {"skipped": "exact solving is only attempted on the small gadgets"}
            entry["exact"] = exact
        if args.brief:
            entry.pop("graph", None)
        out["bundles"].append(entry)
    if failed:
        out["failedChecks"] = failed
        raise Disagreement(f"gadget checks failed: {', '.join(failed)}", out)
    return out


def cmd_subdivide(args) -> dict:
    G = load_graph(args.file)
    H, path = four_subdivide(G)
    out = {"graph": H.to_json(), "paths": {f"{u}-{v}": list(p) for (u, v), p in path.items()}}
    if args.check:
        budget = _budget(args)
        gG = min_dom_set(G, DomKind.TOTAL, budget).bit_count()
        gH = min_dom_set(H, DomKind.TOTAL, budget).bit_count()
        check = {"gammaG": gG, "gammaH": gH, "gammaShift": gH == gG + 2 * G.m}
        sizes_ok = True
        for D in enumerate_dom_sets(G, DomKind.TOTAL, gG, budget):
            U = td_transform_up(G, H, path, D)
            back = td_transform_down(G, H, path, U)
            sizes_ok &= U.bit_count() == gH and back.bit_count() <= gG
        check["transforms"] = sizes_ok
        if gG >= 3:
            cG = ct_characterization(G, DomKind.TOTAL, budget).value
            cH = ct_characterization(H, DomKind.TOTAL, budget).value
            check.update(ctG=cG, ctH=cH, ctEqual=cG == cH)
        out["check"] = check
        if not (check["gammaShift"] and sizes_ok and check.get("ctEqual", True)):
            raise Disagreement("subdivision check failed", out)
    return out


def cmd_selftest(args) -> dict:
    names = [n for n in suite_names() if n != "all"] if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        r = run_suite(name, seed=args.seed, scale=args.scale)
        print(r.line(), file=sys.stderr)
        results.append(r)
    out = {"suites": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    if not out["passed"]:
        raise Disagreement("selftest failed", out)
    return out


# plumbing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-seconds", type=float, default=60.0, help="time budget for exact solvers")
    common.add_argument("--max-nodes", type=int, default=10**8, help="search-node budget for exact solvers")
    p = argparse.ArgumentParser(prog="ctdom", description="Contraction numbers for total and semitotal domination.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", parents=[common], help="minimum total or semitotal dominating set")
    g.add_argument("file")
    g.add_argument("--kind", required=True, choices=["total", "semitotal"])
    g.set_defaults(func=cmd_gamma)

    c = sub.add_parser("ct", parents=[common], help="contraction number")
    c.add_argument("file")
    c.add_argument("--kind", required=True, choices=["total", "semitotal"])
    c.add_argument("--method", default="char", choices=["brute", "char", "both"])
    c.set_defaults(func=cmd_ct)

    h = sub.add_parser("hfree", parents=[common], help="induced-subgraph test")
    h.add_argument("file")
    h.add_argument("--pattern", required=True)
    h.set_defaults(func=cmd_hfree)

    k = sub.add_parser("classify", parents=[common], help="complexity verdict on H-free graphs")
    k.add_argument("--pattern", required=True)
    k.add_argument("--kind", required=True, choices=["total", "semitotal"])
    k.add_argument("--k", type=int, default=2, choices=[1, 2])
    k.set_defaults(func=cmd_classify)

    gd = sub.add_parser("gadget", help="hardness gadgets")
    gsub = gd.add_subparsers(dest="gadget_command", required=True)
    b = gsub.add_parser("build", parents=[common], help="build and optionally verify a gadget")
    b.add_argument("--kind", required=True, help="e.g. td2p4, stdclawk3")
    b.add_argument("--formula", required=True)
    b.add_argument("--verify", default="none", choices=["none", "cert", "full"])
    b.add_argument("--brief", action="store_true", help="omit the graph from the report")
    b.set_defaults(func=cmd_gadget_build)

    s = sub.add_parser("subdivide", parents=[common], help="4-subdivide every edge")
    s.add_argument("file")
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_subdivide)

    t = sub.add_parser("selftest", parents=[common], help="run acceptance suites")
    t.add_argument("--suite", default="all", choices=suite_names())
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--scale", type=float, default=1.0)
    t.set_defaults(func=cmd_selftest)
    return p


def _inputs(args) -> list[str]:
    return [x for x in (getattr(args, "file", None), getattr(args, "formula", None)) if x]


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    report: dict = {"command": list(sys.argv[1:] if argv is None else argv), "seed": getattr(args, "seed", None)}
    start = time.monotonic()
    code = EXIT_OK
    try:
        report["inputsDigest"] = _digest(_inputs(args))
        report["results"] = args.func(args)
    except Disagreement as exc:
        report["results"] = exc.report
        report["error"] = str(exc)
        code = EXIT_DISAGREE
    except Timeout as exc:
        report["error"] = f"timeout: {exc}"
        code = EXIT_TIMEOUT
    except (PreconditionError, TooManyVariables) as exc:
        report["error"] = f"precondition: {exc}"
        code = EXIT_PRECONDITION
    except (ParseError, InvalidFormula, GraphError, OSError) as exc:
        report["error"] = f"input: {exc}"
        code = EXIT_PARSE
    except CtdomError as exc:
        report["error"] = f"{type(exc).__name__}: {exc}"
        code = EXIT_DISAGREE
    report["timings"] = {"seconds": round(time.monotonic() - start, 3)}
    report["exitCode"] = code
    if "error" in report:
        print(report["error"], file=sys.stderr)
    json.dump(report, stdout, indent=2, sort_keys=True)
    stdout.write("\n")
    return code


def main() -> None:
    sys.exit(run())
