"""Batch command-line interface.

Subcommands: check-snark, find-normal, superpose, extend, verify,
templates-validate, oracle-search, sweep. Exit codes: 0 success, 1 holds a
negative verdict on well-formed input, 2 parse failure, 3 invalid input or
size guard, 4 construction method not applicable, 5 internal verification
failure. Outputs are JSON on stdout, deterministic for a fixed seed.
"""
from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from . import __version__
from .coloring import is_normal
from .extender import (
    MethodInapplicable,
    VerificationFailed,
    InvalidInput,
    extend,
    verify_extension,
)
from .formats import (
    ParseError,
    coloring_from_json,
    coloring_to_json,
    load_graph,
    spec_from_json,
    to_dot,
)
from .multipole import Multipole, validate
from .oracle import (
    BoundaryConstraint,
    SizeGuardExceeded,
    check_snark,
    find_normal_coloring,
    is_bridgeless,
    is_three_edge_colorable,
    search_normal_coloring,
)
from .petersen import (
    ALL_TEMPLATE_IDS,
    all_contexts,
    sigma_color,
    template,
    template_registry,
    validate_instance,
)
from .superposition import JunctionParams, SuperpositionSpec, build, spec_warnings, validate_spec

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_INAPPLICABLE = 4
EXIT_VERIFY = 5

ORACLE_EDGE_LIMIT = 300


def _emit(obj: Dict) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _read_text(path: str) -> str:
    return Path(path).read_text()


def _load_closed_graph(path: str) -> Multipole:
    m = load_graph(_read_text(path))
    rep = validate(m)
    if not rep.ok:
        raise InvalidInput(f"input graph invalid: {rep.problems[0]}")
    if not m.is_closed():
        raise InvalidInput("input graph must be closed")
    return m


def _load_spec(path: str) -> SuperpositionSpec:
    obj = json.loads(_read_text(path))
    spec = spec_from_json(obj)
    rep = validate_spec(spec)
    if not rep.ok:
        raise InvalidInput(f"invalid spec: {rep.problems[0]}")
    for note in spec_warnings(spec):
        print(f"warning: {note}", file=sys.stderr)
    return spec


def cmd_check_snark(args: argparse.Namespace) -> int:
    m = _load_closed_graph(args.graph)
    if len(m.edges) > ORACLE_EDGE_LIMIT:
        raise SizeGuardExceeded(f"{len(m.edges)} edges exceed the oracle limit")
    bridgeless = is_bridgeless(m)
    colorable = is_three_edge_colorable(m)
    snark = bridgeless and not colorable
    _emit({"bridgeless": bridgeless, "threeEdgeColorable": colorable, "snark": snark})
    return EXIT_OK if snark else EXIT_NEGATIVE


def cmd_find_normal(args: argparse.Namespace) -> int:
    m = _load_closed_graph(args.graph)
    col = find_normal_coloring(m)
    if col is None:
        _emit({"found": False})
        return EXIT_NEGATIVE
    _emit(coloring_to_json(m, col, {"found": True}))
    return EXIT_OK


def cmd_superpose(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    sp = build(spec)
    out = {
        "vertices": len(sp.graph.vertices),
        "edges": len(sp.graph.edges),
        "cycleLength": spec.g,
        "kinds": list(spec.kinds),
    }
    if args.out:
        Path(args.out).write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    if args.dot:
        Path(args.dot).write_text(to_dot(sp.graph))
    _emit(out)
    return EXIT_OK


def _base_coloring(spec: SuperpositionSpec, path: Optional[str]):
    if path is None:
        col = find_normal_coloring(spec.base)
        if col is None:
            raise InvalidInput("base graph admits no normal 5-edge-coloring at this size")
        return col
    obj = json.loads(_read_text(path))
    col = coloring_from_json(spec.base, obj)
    if not is_normal(spec.base, col):
        raise InvalidInput("supplied base coloring is not a normal 5-edge-coloring")
    return col


def cmd_extend(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    sigma = _base_coloring(spec, args.coloring)
    res = extend(spec, sigma)
    sp = build(spec)
    out = coloring_to_json(
        sp.graph,
        res.coloring,
        {
            "templates": {str(k): v for k, v in sorted(res.templates.items())},
            "adjustments": list(res.adjustments),
            "usedReversal": res.used_reversal,
        },
    )
    if args.out:
        Path(args.out).write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    if args.dot:
        Path(args.dot).write_text(to_dot(sp.graph, res.coloring))
    _emit(out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    sp = build(spec)
    obj = json.loads(_read_text(args.coloring))
    col = coloring_from_json(sp.graph, obj)
    sigma = _base_coloring(spec, args.base_coloring)
    rep = verify_extension(sp, col, sigma)
    _emit({"ok": rep.ok, "poor": rep.poor, "rich": rep.rich, "problems": list(rep.problems)})
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_templates_validate(args: argparse.Namespace) -> int:
    registry = template_registry()
    checked = 0
    rng = random.Random(args.seed)
    perms = list(itertools.permutations((1, 2, 3, 4, 5)))
    for tid in ALL_TEMPLATE_IDS:
        for pi in rng.sample(perms, args.samples):
            if tid.startswith("R"):
                inst = template(tid, pi[0], pi[1], pi[2])
            else:
                inst = template(tid, pi[0], pi[1], pi[2], (pi[3], pi[4]))
            problems = validate_instance(inst)
            if problems:
                _emit({"ok": False, "template": tid, "params": list(pi), "problems": problems})
                return EXIT_VERIFY
            checked += 1
    _emit({"ok": True, "templates": len(registry), "instancesChecked": checked})
    return EXIT_OK


def cmd_oracle_search(args: argparse.Namespace) -> int:
    m = _load_closed_graph(args.graph)
    fixed: Dict[str, int] = {}
    if args.fixed:
        raw = json.loads(_read_text(args.fixed))
        if not isinstance(raw, dict):
            raise ParseError("constraint file must map element ids to colors")
        fixed = {str(k): int(v) for k, v in raw.items()}
    col = search_normal_coloring(m, BoundaryConstraint(fixed=fixed))
    if col is None:
        _emit({"found": False})
        return EXIT_NEGATIVE
    _emit(coloring_to_json(m, col, {"found": True}))
    return EXIT_OK


def _sweep_one(
    base: Multipole, cycle: Tuple[str, ...], sigma, seed: int, index: int
) -> Dict:
    rng = random.Random((seed, index))
    perms = list(itertools.permutations((1, 2, 3)))
    g = len(cycle)
    while True:
        kinds = tuple(rng.choice(("A", "Aprime")) for _ in range(g))
        junctions = tuple(
            JunctionParams(rng.choice(perms), rng.choice((1, 2, 3))) for _ in range(g)
        )
        if any(j.p[0] != 1 or j.d != 1 for j in junctions):
            break
    spec = SuperpositionSpec(base=base, cycle=cycle, kinds=kinds, junctions=junctions)
    res = extend(spec, sigma)
    return {
        "index": index,
        "kinds": list(kinds),
        "junctions": [{"p": list(j.p), "d": j.d} for j in junctions],
        "poor": res.poor,
        "rich": res.rich,
        "usedReversal": res.used_reversal,
        "ok": True,
    }


def cmd_sweep(args: argparse.Namespace) -> int:
    base = _load_closed_graph(args.base)
    cycle = tuple(args.cycle.split(","))
    probe = SuperpositionSpec(
        base=base,
        cycle=cycle,
        kinds=tuple("A" for _ in cycle),
        junctions=tuple(JunctionParams((1, 2, 3), 2) for _ in cycle),
    )
    rep = validate_spec(probe)
    if not rep.ok:
        raise InvalidInput(f"invalid cycle: {rep.problems[0]}")
    sigma = _base_coloring(probe, args.coloring)
    rows = [_sweep_one(base, cycle, sigma, args.seed, k) for k in range(args.count)]
    min_poor = min(r["poor"] for r in rows) if rows else None
    for r in rows:
        sys.stdout.write(json.dumps(r, sort_keys=True) + "\n")
    _emit({"count": len(rows), "minPoor": min_poor, "seed": args.seed, "ok": True})
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="supersnark",
        description="Superpositions of snarks by Petersen superedges and "
        "normal 5-edge-colorings of them, with exact oracles.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-snark", help="bridgeless + not 3-edge-colorable")
    p.add_argument("graph", help="graph6 or JSON graph file")
    p.set_defaults(fn=cmd_check_snark)

    p = sub.add_parser("find-normal", help="exact normal 5-edge-coloring search")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_find_normal)

    p = sub.add_parser("superpose", help="build a superposition from a spec file")
    p.add_argument("spec")
    p.add_argument("-o", "--out")
    p.add_argument("--dot")
    p.set_defaults(fn=cmd_superpose)

    p = sub.add_parser("extend", help="extend a normal coloring of the base onto the build")
    p.add_argument("spec")
    p.add_argument("--coloring", help="base coloring JSON (derived by the oracle if absent)")
    p.add_argument("-o", "--out")
    p.add_argument("--dot")
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("verify", help="re-verify an extension coloring file")
    p.add_argument("spec")
    p.add_argument("coloring")
    p.add_argument("--base-coloring")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("templates-validate", help="validate the template registry")
    p.add_argument("--samples", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_templates_validate)

    p = sub.add_parser("oracle-search", help="constrained normal-coloring search")
    p.add_argument("graph")
    p.add_argument("--fixed", help="JSON file mapping element ids to colors")
    p.set_defaults(fn=cmd_oracle_search)

    p = sub.add_parser("sweep", help="seeded random junction-parameter sweep")
    p.add_argument("--base", required=True)
    p.add_argument("--cycle", required=True, help="comma-separated vertex list")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coloring")
    p.set_defaults(fn=cmd_sweep)

    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, json.JSONDecodeError, FileNotFoundError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SizeGuardExceeded, InvalidInput, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except MethodInapplicable as exc:
        print(f"method inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
