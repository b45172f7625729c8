"""Command-line front door: unfold, gen-random, precompute, verify.

Exit codes: 0 success, 1 usage, 2 input/parse errors, 3 no net found,
4 degenerate random construction, 5 net search failure during precompute,
6 verification failures.  Diagnostics go to stderr, machine output to stdout
or the files named by flags.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .assets import (
    NetAssetBundle,
    NetSearchFailed,
    bundle_to_dict,
    dumps_canonical,
    precompute_assets,
    verify_assets,
)
from .catalog import CATALOG_NAMES, CURATED_NAMES, catalog_solid
from .polytope import ParseError, Polytope3, UnknownName, load_off, write_off
from .random_polytopes import (
    DegenerateSample,
    SimplicityFailed,
    random_subpolytope,
    random_tangent_polytope,
)
from .svg import net_to_svg
from .unfold import NoNetFound, find_net


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="polynet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_unfold = sub.add_parser("unfold", help="compute an injective net")
    p_unfold.add_argument("--input", required=True,
                          help="OFF file path or built-in catalog name")
    p_unfold.add_argument("--seed", type=int, default=0)
    p_unfold.add_argument("--budget", type=int, default=100_000)
    p_unfold.add_argument("--svg", metavar="FILE", help="write the net as SVG")
    p_unfold.add_argument("--json", metavar="FILE", help="write the asset bundle as JSON")
    p_unfold.set_defaults(func=_cmd_unfold)

    p_rand = sub.add_parser("gen-random", help="two-step random polytope to OFF")
    p_rand.add_argument("--planes", type=int, required=True)
    p_rand.add_argument("--fraction", type=float, required=True)
    p_rand.add_argument("--seed", type=int, default=0)
    p_rand.add_argument("--off", metavar="FILE", required=True)
    p_rand.set_defaults(func=_cmd_gen_random)

    p_pre = sub.add_parser("precompute", help="generate all game asset bundles")
    p_pre.add_argument("--out", metavar="DIR", required=True)
    p_pre.add_argument("--seed", type=int, default=0)
    p_pre.add_argument("--random-count", type=int, default=50)
    p_pre.add_argument("--johnson", metavar="DIR",
                       help="directory of OFF files for the level-4 pool")
    p_pre.set_defaults(func=_cmd_precompute)

    p_ver = sub.add_parser("verify", help="re-check every precomputed bundle")
    p_ver.add_argument("--assets", metavar="DIR", required=True)
    p_ver.set_defaults(func=_cmd_verify)
    return parser


def _resolve_input(spec: str) -> Polytope3:
    path = Path(spec)
    if path.exists():
        p = load_off(path.read_text(encoding="utf-8"))
        return Polytope3(p.vertices, p.facets, name=path.stem)
    if spec in CATALOG_NAMES or spec in CURATED_NAMES:
        return catalog_solid(spec)
    raise UnknownName(spec)


def _cmd_unfold(args) -> int:
    try:
        p = _resolve_input(args.input)
    except UnknownName:
        print(f"polynet: {args.input!r} is neither a file nor a catalog name",
              file=sys.stderr)
        return 2
    net = find_net(p, seed=args.seed, budget=args.budget)
    if args.svg:
        Path(args.svg).write_text(net_to_svg(net, p.facet_colors()), encoding="utf-8")
    if args.json:
        bundle = NetAssetBundle(p.name or "unfold", f"input:{args.input}",
                                p, p.facet_colors(), net)
        Path(args.json).write_text(dumps_canonical(bundle_to_dict(bundle)), encoding="utf-8")
    print(f"{p.name} {p.n_vertices} {p.n_edges} {p.n_facets} "
          f"injective={str(net.injective).lower()} placements={net.placements}")
    return 0


def _cmd_gen_random(args) -> int:
    q = random_tangent_polytope(args.planes, seed=args.seed)
    p = q if args.fraction == 1.0 else random_subpolytope(q, args.fraction, seed=(args.seed, 1))
    Path(args.off).write_text(write_off(p), encoding="utf-8")
    print(f"{p.n_vertices} {p.n_edges} {p.n_facets}")
    return 0


def _cmd_precompute(args) -> int:
    manifest = precompute_assets(args.out, seed=args.seed, n_random=args.random_count,
                                 johnson_dir=args.johnson)
    total = len({aid for ids in manifest["levels"].values() for aid in ids})
    print(f"{total} assets -> {args.out}")
    return 0


def _cmd_verify(args) -> int:
    failures = verify_assets(args.assets)
    if failures:
        for failure in failures:
            print(failure, file=sys.stderr)
        return 6
    import json

    manifest = json.loads((Path(args.assets) / "manifest.json").read_text(encoding="utf-8"))
    total = len({aid for ids in manifest["levels"].values() for aid in ids})
    print(f"all {total} assets valid")
    return 0


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "gen-random":
        if args.planes < 4:
            parser.print_usage(sys.stderr)
            print("polynet: error: --planes must be at least 4", file=sys.stderr)
            return 1
        if not 0.0 < args.fraction <= 1.0:
            parser.print_usage(sys.stderr)
            print("polynet: error: --fraction must lie in (0, 1]", file=sys.stderr)
            return 1
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"polynet: {exc}", file=sys.stderr)
        return 2
    except NoNetFound as exc:
        print(f"polynet: {exc}", file=sys.stderr)
        return 3
    except (SimplicityFailed, DegenerateSample) as exc:
        print(f"polynet: {exc}", file=sys.stderr)
        return 4
    except NetSearchFailed as exc:
        print(f"polynet: {exc}", file=sys.stderr)
        return 5


def main(argv=None) -> None:
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
