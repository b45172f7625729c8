"""Precomputed game assets: mesh + net + colors bundles serialized as JSON.

One file per bundle plus a manifest mapping levels to asset ids.  Floats are
written with 17 significant digits and keys in sorted order, so a fixed seed
reproduces the output byte for byte.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import catalog
from .game import RANDOM_POOL_SIZE
from .geometry import GeometryError
from .polytope import (
    FacetColor,
    InvalidPolytope,
    Polytope3,
    gonality_color,
    GREEN,
    load_off,
)
from .random_polytopes import random_subpolytope, random_tangent_polytope
from .unfold import NoNetFound, PlanarNet, find_net, is_injective, net_invariant_report


class NetSearchFailed(GeometryError):
    """Some pool polytope had no injective net within budget."""

    def __init__(self, failed_ids: list[str]):
        super().__init__(f"no net found for: {', '.join(failed_ids)}")
        self.failed_ids = failed_ids


@dataclass(frozen=True)
class NetAssetBundle:
    asset_id: str
    provenance: str
    polytope: Polytope3
    colors: tuple[FacetColor, ...]
    net: PlanarNet


# ---------------------------------------------------------------------------
# canonical JSON


def dumps_canonical(obj) -> str:
    """JSON with sorted keys, no whitespace, floats at 17 significant digits."""
    pieces: list[str] = []
    _write_canonical(obj, pieces)
    return "".join(pieces) + "\n"


def _write_canonical(obj, out: list[str]) -> None:
    if isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError("cannot serialize non-finite numbers")
        out.append(format(x, ".17g"))
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                out.append(",")
            out.append(json.dumps(str(key), ensure_ascii=False))
            out.append(":")
            _write_canonical(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _write_canonical(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def bundle_to_dict(bundle: NetAssetBundle) -> dict:
    p, net = bundle.polytope, bundle.net
    return {
        "id": bundle.asset_id,
        "provenance": bundle.provenance,
        "mesh": {
            "vertices": [[float(x) for x in v] for v in p.vertices],
            "facets": [list(c) for c in p.facets],
            "colors": [list(c.rgb) for c in bundle.colors],
        },
        "net": {
            "polygons": [[[float(x) for x in pt] for pt in poly] for poly in net.polygons],
            "foldEdges": [list(e) for e in net.fold_edges],
            "cutEdges": [list(e) for e in net.cut_edges],
            "root": net.root,
        },
    }


def write_bundle(bundle: NetAssetBundle, directory: Path) -> Path:
    path = directory / f"{bundle.asset_id}.json"
    path.write_text(dumps_canonical(bundle_to_dict(bundle)), encoding="utf-8")
    return path


def _make_bundle(p: Polytope3, asset_id: str, provenance: str, seed,
                 budget: int, green: bool = False) -> NetAssetBundle:
    net = find_net(p, seed=seed, budget=budget)
    colors = p.facet_colors("green" if green else "gonality")
    return NetAssetBundle(asset_id, provenance, p, colors, net)


def _recolor(bundle: NetAssetBundle, asset_id: str, provenance: str) -> NetAssetBundle:
    return NetAssetBundle(asset_id, provenance, bundle.polytope,
                          tuple(GREEN for _ in bundle.colors), bundle.net)


# ---------------------------------------------------------------------------
# precompute


def precompute_assets(out_dir: str | os.PathLike, seed,
                      n_random: int = RANDOM_POOL_SIZE,
                      budget: int = 100_000,
                      johnson_dir: str | os.PathLike | None = None) -> dict:
    """Generate every pool bundle and the level manifest; returns the manifest.

    The random pool is ``n_random`` two-step instances (20-40 tangent planes,
    vertex fraction 0.5-0.8).  Output is deterministic per seed.  Raises
    NetSearchFailed listing any pool entry with no net within budget.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    base = seed if isinstance(seed, tuple) else (int(seed),)

    failures: list[str] = []
    levels: dict[str, list[str]] = {}

    def build(p, asset_id, provenance, stream, green=False):
        try:
            bundle = _make_bundle(p, asset_id, provenance, seed=base + stream,
                                  budget=budget, green=green)
        except NoNetFound:
            failures.append(asset_id)
            return None
        write_bundle(bundle, out)
        return bundle

    catalog_bundles = {}
    for i, name in enumerate(catalog.CATALOG_NAMES):
        bundle = build(catalog.catalog_solid(name), name, f"catalog:{name}", (0, i))
        if bundle:
            catalog_bundles[name] = bundle

    for t, triplet in enumerate(catalog.CURATED_TRIPLETS):
        for j, name in enumerate(triplet):
            build(catalog.catalog_solid(name), name, f"curated:{name}", (1, t, j))

    johnson_ids: list[str] = []
    if johnson_dir is not None:
        for i, path in enumerate(sorted(Path(johnson_dir).glob("*.off"))):
            p = load_off(path.read_text(encoding="utf-8"))
            asset_id = f"johnson_{path.stem}"
            if build(p, asset_id, f"johnson:{path.stem}", (2, i)):
                johnson_ids.append(asset_id)

    random_ids: list[str] = []
    for i in range(n_random):
        rng = np.random.default_rng(np.random.SeedSequence(entropy=list(base), spawn_key=(3, i)))
        n_planes = int(rng.integers(20, 41))
        fraction = float(rng.uniform(0.5, 0.8))
        q = random_tangent_polytope(n_planes, seed=base + (4, i))
        p = random_subpolytope(q, fraction, seed=base + (5, i))
        asset_id = f"random_{i:02d}"
        provenance = f"random:planes={n_planes},fraction={fraction!r},index={i}"
        bundle = build(p, asset_id, provenance, (6, i))
        if bundle:
            random_ids.append(asset_id)
            green = _recolor(bundle, f"{asset_id}_green", provenance + ",green")
            write_bundle(green, out)

    if failures:
        raise NetSearchFailed(failures)

    platonic = list(catalog.PLATONIC_NAMES)
    archimedean = platonic + list(catalog.ARCHIMEDEAN_NAMES)
    full = list(catalog.CATALOG_NAMES)
    levels["1"] = platonic
    levels["2"] = archimedean
    levels["3"] = full
    levels["4"] = johnson_ids if johnson_ids else full
    levels["5"] = random_ids
    levels["6"] = [f"{i}_green" for i in random_ids]
    levels["7"] = [name for triplet in catalog.CURATED_TRIPLETS for name in triplet]

    manifest = {"levels": levels}
    (out / "manifest.json").write_text(dumps_canonical(manifest), encoding="utf-8")
    return manifest


# ---------------------------------------------------------------------------
# verification


def _check_bundle(data: dict) -> list[str]:
    problems: list[str] = []
    for key in ("id", "provenance", "mesh", "net"):
        if key not in data:
            return [f"missing top-level key {key!r}"]
    mesh = data["mesh"]
    net = data["net"]
    for key in ("vertices", "facets", "colors"):
        if key not in mesh:
            return [f"mesh missing key {key!r}"]
    for key in ("polygons", "foldEdges", "cutEdges", "root"):
        if key not in net:
            return [f"net missing key {key!r}"]

    try:
        p = Polytope3(np.array(mesh["vertices"], dtype=float),
                      tuple(tuple(c) for c in mesh["facets"]))
    except (InvalidPolytope, GeometryError, ValueError) as exc:
        return [f"invalid mesh: {exc}"]

    colors = mesh["colors"]
    if len(colors) != p.n_facets:
        problems.append(f"{len(colors)} colors for {p.n_facets} facets")
    else:
        by_rule = [list(gonality_color(len(c)).rgb) for c in p.facets]
        all_green = all(c == list(GREEN.rgb) for c in colors)
        if colors != by_rule and not all_green:
            problems.append("colors match neither the gonality rule nor uniform green")

    planar = PlanarNet(tuple(np.array(poly, dtype=float) for poly in net["polygons"]),
                       tuple(tuple(e) for e in net["foldEdges"]),
                       tuple(tuple(e) for e in net["cutEdges"]),
                       int(net["root"]), injective=True)
    problems.extend(net_invariant_report(p, planar))
    if not is_injective(planar):
        problems.append("net polygons overlap")
    return problems


def verify_assets(directory: str | os.PathLike) -> list[str]:
    """Re-check every bundle referenced by the manifest; returns failure strings."""
    root = Path(directory)
    try:
        manifest = json.loads((root / "manifest.json").read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        return [f"manifest.json: {exc}"]
    ids = sorted({aid for ids in manifest.get("levels", {}).values() for aid in ids})
    if not ids:
        return ["manifest lists no assets"]
    failures = []
    for asset_id in ids:
        path = root / f"{asset_id}.json"
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            failures.append(f"{asset_id}: {exc}")
            continue
        for problem in _check_bundle(data):
            failures.append(f"{asset_id}: {problem}")
    return failures
