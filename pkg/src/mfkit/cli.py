"""Command-line interface: constructions on stdout as JSON, summaries on stderr.

Exit codes: 0 success or suite pass, 1 suite failure, 2 usage error,
3 degenerate input.  MF_SEED provides the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import brackets, cremona, forgetful, suites, trees
from .errors import GeometryError, UnknownSuite
from .projective import ProjectivePoint
from .veronese import rnc_through


def _parse_point(text: str) -> ProjectivePoint:
    return ProjectivePoint([Fraction(part) for part in text.split(",")])


def _parse_points(text: str) -> list[ProjectivePoint]:
    return [_parse_point(chunk) for chunk in text.split(";") if chunk]


def _emit(payload: dict, summary: str) -> None:
    print(json.dumps(payload, sort_keys=True))
    print(summary, file=sys.stderr)


def _point_json(p: ProjectivePoint) -> list[str]:
    return [str(c) for c in p.canonical()]


def _cmd_dim(args) -> int:
    values = forgetful.dimension_formulas(args.n)
    ok = values["basis"] == values["subset_difference"] == values["hook_count"]
    _emit({"n": args.n, "status": "pass" if ok else "fail", **values},
          f"n={args.n}: {values['basis']} = {values['subset_difference']} = "
          f"{values['hook_count']} -> {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def _cmd_omega_basis(args) -> int:
    system = forgetful.forgetful_system(args.n)
    _emit({"n": args.n, "dimension": system.dimension,
           "basis": [f.to_dict() for f in system.basis]},
          f"n={args.n}: {system.dimension} basis forms")
    return 0


def _cmd_xi_basis(args) -> int:
    system = cremona.birational_system(args.n)
    _emit({"n": args.n, "dimension": system.dimension,
           "basis": [f.to_dict() for f in system.basis]},
          f"n={args.n}: {system.dimension} basis forms")
    return 0


def _cmd_phi(args) -> int:
    system = forgetful.forgetful_system(args.n)
    image = system.apply(_parse_point(args.point))
    _emit({"n": args.n, "image": _point_json(image)},
          ",".join(_point_json(image)))
    return 0


def _cmd_rnc(args) -> int:
    curve = rnc_through(_parse_points(args.points))
    _emit(curve.to_dict(), f"degree-{curve.ambient_dim} curve in P^{curve.ambient_dim}")
    return 0


def _cmd_cremona(args) -> int:
    image = cremona.cremona_involution(_parse_point(args.point))
    _emit({"image": _point_json(image)}, ",".join(_point_json(image)))
    return 0


def _cmd_config(args) -> int:
    config = forgetful.config_of_point(args.n, _parse_point(args.point))
    _emit({"n": args.n, "configuration": [_point_json(p) for p in config]},
          "; ".join(",".join(_point_json(p)) for p in config))
    return 0


def _cmd_git_point(args) -> int:
    config = _parse_points(args.config)
    image = brackets.git_point(args.n, config)
    if image is None:
        _emit({"n": args.n, "zero_vector": True}, "zero vector (unstable)")
    else:
        _emit({"n": args.n, "zero_vector": False, "image": _point_json(image)},
              ",".join(_point_json(image)))
    return 0


def _cmd_tree_contract(args) -> int:
    with open(args.tree, encoding="utf-8") as fh:
        tree = trees.StableTree.from_dict(json.load(fh))
    result = trees.contract(tree)
    if isinstance(result, trees.CentralContraction):
        payload = {"central": result.vertex,
                   "classes": [sorted(c) for c in result.classes]}
        summary = f"central vertex {result.vertex}, {len(result.classes)} classes"
    else:
        halves = sorted((sorted(h) for h in result.halves))
        payload = {"split": halves}
        summary = f"balanced split {halves[0]} | {halves[1]}"
    _emit(payload, summary)
    return 0


def _cmd_tree_enum2(args) -> int:
    enumerated = trees.enumerate_two_vertex(args.n)
    profiles: dict[str, int] = {}
    for t in enumerated:
        key = str(tuple(sorted((t.weight(0), t.weight(1)))))
        profiles[key] = profiles.get(key, 0) + 1
    _emit({"n": args.n, "count": len(enumerated), "profiles": profiles,
           "trees": [t.to_dict() for t in enumerated]},
          f"{len(enumerated)} two-vertex trees")
    return 0


def _cmd_verify(args) -> int:
    report = suites.verify_suite(args.suite, n=args.n, seed=args.seed,
                                 samples=args.samples, bound=args.bound)
    print(json.dumps(report.to_dict(), sort_keys=True))
    status = "pass" if report.passed else "fail"
    print(f"{args.suite} (n={args.n}, seed={args.seed}): {status} "
          f"[{len(report.checks)} checks, {report.elapsed_ms} ms]", file=sys.stderr)
    for check in report.failures():
        print(f"  FAIL {check.name}: expected {check.expected!r}, "
              f"got {check.actual!r}", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mfkit",
        description="Exact workbench for configurations of points on the line, "
                    "rational normal curves, and the linear systems contracting them.",
    )
    default_seed = int(os.environ.get("MF_SEED", "0"))
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **arguments):
        p = sub.add_parser(name)
        for flag, opts in arguments.items():
            p.add_argument(flag, **opts)
        p.set_defaults(fn=fn)
        return p

    add("dim", _cmd_dim, **{"--n": dict(type=int, required=True)})
    add("omega-basis", _cmd_omega_basis, **{"--n": dict(type=int, required=True)})
    add("xi-basis", _cmd_xi_basis, **{"--n": dict(type=int, required=True)})
    add("phi", _cmd_phi, **{"--n": dict(type=int, required=True),
                            "--point": dict(required=True)})
    add("rnc", _cmd_rnc, **{"--points": dict(required=True)})
    add("cremona", _cmd_cremona, **{"--point": dict(required=True)})
    add("config", _cmd_config, **{"--n": dict(type=int, required=True),
                                  "--point": dict(required=True)})
    add("git-point", _cmd_git_point, **{"--n": dict(type=int, required=True),
                                        "--config": dict(required=True)})
    tree = sub.add_parser("tree")
    tree_sub = tree.add_subparsers(dest="tree_verb", required=True)
    contract_p = tree_sub.add_parser("contract")
    contract_p.add_argument("--tree", required=True)
    contract_p.set_defaults(fn=_cmd_tree_contract)
    enum_p = tree_sub.add_parser("enum2")
    enum_p.add_argument("--n", type=int, required=True)
    enum_p.set_defaults(fn=_cmd_tree_enum2)
    verify = sub.add_parser("verify")
    verify.add_argument("--suite", required=True, choices=suites.SUITE_NAMES)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--seed", type=int, default=default_seed)
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--bound", type=int, default=20)
    verify.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UnknownSuite as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
