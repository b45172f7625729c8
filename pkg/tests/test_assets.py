import hashlib
import json
from pathlib import Path

import pytest

from polynet.assets import (
    NetAssetBundle,
    bundle_to_dict,
    dumps_canonical,
    precompute_assets,
    verify_assets,
)
from polynet.catalog import platonic_solid
from polynet.unfold import find_net


def test_dumps_canonical_format():
    obj = {"b": [1, 2.5, True], "a": {"x": 0.1}, "s": "héllo"}
    text = dumps_canonical(obj)
    assert text == '{"a":{"x":0.10000000000000001},"b":[1,2.5,true],"s":"héllo"}\n'
    assert json.loads(text) == {"a": {"x": 0.1}, "b": [1, 2.5, True], "s": "héllo"}
    with pytest.raises(ValueError):
        dumps_canonical(float("nan"))


def test_bundle_schema():
    cube = platonic_solid("cube")
    net = find_net(cube, seed=0)
    bundle = NetAssetBundle("cube", "catalog:cube", cube, cube.facet_colors(), net)
    data = bundle_to_dict(bundle)
    assert set(data) == {"id", "provenance", "mesh", "net"}
    assert set(data["mesh"]) == {"vertices", "facets", "colors"}
    assert set(data["net"]) == {"polygons", "foldEdges", "cutEdges", "root"}
    assert len(data["mesh"]["vertices"]) == 8
    assert all(len(v) == 3 for v in data["mesh"]["vertices"])
    assert data["mesh"]["colors"] == [[0, 0, 255]] * 6
    assert len(data["net"]["foldEdges"]) == 5
    assert all(len(e) == 4 for e in data["net"]["foldEdges"])
    assert all(len(e) == 2 for e in data["net"]["cutEdges"])
    assert 0 <= data["net"]["root"] < 6


def _tree_digest(directory: Path) -> str:
    h = hashlib.sha256()
    for path in sorted(directory.rglob("*.json")):
        h.update(path.name.encode())
        h.update(path.read_bytes())
    return h.hexdigest()


@pytest.fixture(scope="module")
def small_asset_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("assets")
    manifest = precompute_assets(out, seed=3, n_random=2)
    return out, manifest


def test_precompute_manifest_levels(small_asset_dir):
    _out, manifest = small_asset_dir
    levels = manifest["levels"]
    assert sorted(levels) == ["1", "2", "3", "4", "5", "6", "7"]
    assert len(levels["1"]) == 5
    assert len(levels["2"]) == 10
    assert len(levels["3"]) == 15
    assert levels["4"] == levels["3"]
    assert levels["5"] == ["random_00", "random_01"]
    assert levels["6"] == ["random_00_green", "random_01_green"]
    assert len(levels["7"]) == 6


def test_precompute_files_written(small_asset_dir):
    out, manifest = small_asset_dir
    ids = {aid for ids in manifest["levels"].values() for aid in ids}
    for asset_id in ids:
        assert (out / f"{asset_id}.json").exists()
    on_disk = json.loads((out / "manifest.json").read_text())
    assert on_disk == manifest


def test_precompute_deterministic(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    precompute_assets(a, seed=5, n_random=2)
    precompute_assets(b, seed=5, n_random=2)
    assert _tree_digest(a) == _tree_digest(b)


def test_green_variant_mirrors_geometry(small_asset_dir):
    out, _ = small_asset_dir
    plain = json.loads((out / "random_00.json").read_text())
    green = json.loads((out / "random_00_green.json").read_text())
    assert green["mesh"]["vertices"] == plain["mesh"]["vertices"]
    assert green["net"] == plain["net"]
    assert set(map(tuple, green["mesh"]["colors"])) == {(0, 128, 0)}


def test_verify_clean(small_asset_dir):
    out, _ = small_asset_dir
    assert verify_assets(out) == []


def test_verify_detects_tampering(small_asset_dir, tmp_path):
    out, _ = small_asset_dir
    work = tmp_path / "tampered"
    work.mkdir()
    for path in out.glob("*.json"):
        (work / path.name).write_bytes(path.read_bytes())
    data = json.loads((work / "cube.json").read_text())
    data["net"]["polygons"][0][0][0] += 0.5
    (work / "cube.json").write_text(dumps_canonical(data))
    failures = verify_assets(work)
    assert failures
    assert all(f.startswith("cube:") for f in failures)


def test_verify_detects_bad_colors(small_asset_dir, tmp_path):
    out, _ = small_asset_dir
    work = tmp_path / "recolored"
    work.mkdir()
    for path in out.glob("*.json"):
        (work / path.name).write_bytes(path.read_bytes())
    data = json.loads((work / "tetrahedron.json").read_text())
    data["mesh"]["colors"][0] = [255, 0, 0]
    (work / "tetrahedron.json").write_text(dumps_canonical(data))
    failures = verify_assets(work)
    assert any(f.startswith("tetrahedron:") and "color" in f for f in failures)


def test_verify_missing_manifest(tmp_path):
    assert verify_assets(tmp_path)  # reports a failure rather than raising
