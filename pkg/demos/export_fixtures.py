"""Regenerate the cross-check fixtures consumed by the front-end tests:
every (truth, answer, score) triple at k = 3, plus one real cube bundle."""

from pathlib import Path

from polynet.assets import NetAssetBundle, bundle_to_dict, dumps_canonical
from polynet.catalog import platonic_solid
from polynet.game import scoring_fixture
from polynet.unfold import find_net

out = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"
out.mkdir(parents=True, exist_ok=True)

for k in range(2, 6):
    (out / f"scoring_k{k}.json").write_text(dumps_canonical(scoring_fixture(k)))

cube = platonic_solid("cube")
bundle = NetAssetBundle("cube", "catalog:cube", cube, cube.facet_colors(),
                        find_net(cube, seed=0))
(out / "cube.json").write_text(dumps_canonical(bundle_to_dict(bundle)))

print("wrote", sorted(p.name for p in out.iterdir()))
