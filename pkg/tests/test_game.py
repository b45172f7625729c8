import itertools
import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polynet.catalog import CATALOG_NAMES, PLATONIC_NAMES
from polynet.game import (
    GameConfig,
    HighScoreStore,
    NotAPermutation,
    PoolEntry,
    PoolTooSmall,
    Round,
    level_pool,
    new_game,
    score_round,
    scoring_fixture,
    update_high_score,
)


def test_config_validation():
    with pytest.raises(ValueError):
        GameConfig(level=0, k=3)
    with pytest.raises(ValueError):
        GameConfig(level=8, k=3)
    with pytest.raises(ValueError):
        GameConfig(level=1, k=1)
    with pytest.raises(ValueError):
        GameConfig(level=1, k=6)
    with pytest.raises(ValueError):
        GameConfig(level=1, k=3, rounds=4)
    assert GameConfig(level=3, k=4).rounds == 5


def test_level7_forces_k3():
    assert GameConfig(level=7, k=5).k == 3
    assert GameConfig(level=7, k=2).k == 3


def test_level_pools():
    assert [e.asset_id for e in level_pool(1)] == list(PLATONIC_NAMES)
    assert len(level_pool(2)) == 10
    assert [e.asset_id for e in level_pool(3)] == list(CATALOG_NAMES)
    assert [e.asset_id for e in level_pool(4)] == list(CATALOG_NAMES)  # no Johnson data
    assert [e.asset_id for e in level_pool(4, johnson_ids=("j1", "j2"))] == ["j1", "j2"]
    assert len(level_pool(5)) == 50
    assert all(e.asset_id.endswith("_green") for e in level_pool(6))
    pool7 = level_pool(7)
    assert len(pool7) == 6
    assert len({e.triplet for e in pool7}) == 2


def test_new_game_level1_k5_uses_all_platonic():
    game = new_game(GameConfig(level=1, k=5), seed=9)
    for round_ in game.rounds:
        assert sorted(round_.polytope_ids) == sorted(PLATONIC_NAMES)
        assert sorted(round_.truth) == [0, 1, 2, 3, 4]
        assert round_.net_ids == tuple(round_.polytope_ids[t] for t in round_.truth)


def test_new_game_deterministic():
    a = new_game(GameConfig(level=3, k=4), seed=77)
    b = new_game(GameConfig(level=3, k=4), seed=77)
    assert [r.polytope_ids for r in a.rounds] == [r.polytope_ids for r in b.rounds]
    assert [r.truth for r in a.rounds] == [r.truth for r in b.rounds]


def test_new_game_rounds_distinct_polytopes():
    game = new_game(GameConfig(level=3, k=5), seed=123)
    for round_ in game.rounds:
        assert len(set(round_.polytope_ids)) == 5


def test_new_game_level7_draws_triplets():
    game = new_game(GameConfig(level=7, k=5), seed=4)
    triplets = {tuple(sorted(t)) for t in
                (("square_pyramid", "pentagonal_pyramid", "hexagonal_pyramid"),
                 ("square_antiprism", "pentagonal_antiprism", "hexagonal_antiprism"))}
    for round_ in game.rounds:
        assert tuple(sorted(round_.polytope_ids)) in triplets


def test_pool_too_small():
    pool = [PoolEntry("a", "catalog"), PoolEntry("b", "catalog")]
    with pytest.raises(PoolTooSmall):
        new_game(GameConfig(level=1, k=3), seed=0, pool=pool)


def _round(truth):
    k = len(truth)
    return Round(polytope_ids=("x",) * k, net_ids=("x",) * k, truth=tuple(truth))


def test_score_examples():
    assert score_round(_round(range(5)), range(5)) == 5
    assert score_round(_round((0, 1, 2, 3)), (1, 0, 3, 2)) == 0  # derangement
    assert score_round(_round((0, 1, 2)), (1, 0, 2)) == 1


def test_score_rejects_non_permutations():
    with pytest.raises(NotAPermutation):
        score_round(_round((0, 1, 2)), (0, 1, 1))
    with pytest.raises(NotAPermutation):
        score_round(_round((0, 1, 2)), (0, 1))
    with pytest.raises(NotAPermutation):
        score_round(_round((0, 1, 2)), (0, 1, 3))


@given(st.integers(min_value=2, max_value=5), st.randoms(use_true_random=False))
def test_score_counts_fixed_points(k, pyrandom):
    truth = list(range(k))
    pyrandom.shuffle(truth)
    answer = list(range(k))
    pyrandom.shuffle(answer)
    expected = sum(1 for t, a in zip(truth, answer) if t == a)
    assert score_round(_round(truth), answer) == expected
    assert 0 <= expected <= k


def test_perfect_score_iff_answer_is_truth():
    for truth in itertools.permutations(range(4)):
        for answer in itertools.permutations(range(4)):
            score = score_round(_round(truth), answer)
            assert (score == 4) == (answer == truth)
            assert score != 3  # a permutation cannot miss exactly one point


def test_random_answer_mean_score_is_one():
    rng = np.random.default_rng(314)
    k = 4
    total = 0
    trials = 10_000
    for _ in range(trials):
        truth = tuple(int(x) for x in rng.permutation(k))
        answer = tuple(int(x) for x in rng.permutation(k))
        total += score_round(_round(truth), answer)
    assert abs(total / trials - 1.0) < 0.05


def test_game_state_flow():
    game = new_game(GameConfig(level=1, k=2), seed=3)
    assert not game.finished
    for _ in range(5):
        game.submit(game.current_round.truth)
    assert game.finished
    assert game.total == 10
    record = game.record()
    assert record.total == 10
    assert record.per_round == (2, 2, 2, 2, 2)
    with pytest.raises(RuntimeError):
        game.submit((0, 1))


def test_scoring_fixture_shape():
    fx = scoring_fixture(3)
    assert len(fx) == 36
    perfect = [e for e in fx if e["truth"] == e["answer"]]
    assert len(perfect) == 6
    assert all(e["score"] == 3 for e in perfect)


# ---------------------------------------------------------------------------
# high scores


def test_high_score_store(tmp_path):
    store = HighScoreStore(tmp_path / "scores.json")
    assert store.get(1, 2) is None
    assert store.update(1, 2, 7) is True
    assert store.get(1, 2) == 7
    assert store.update(1, 2, 5) is False
    assert store.get(1, 2) == 7
    # stored 20, new 21 at level 3 / k 5 (max 25)
    assert store.update(3, 5, 20) is True
    assert store.update(3, 5, 21) is True
    raw = json.loads((tmp_path / "scores.json").read_text())
    assert raw == {"1:2": 7, "3:5": 21}


def test_high_score_bounds(tmp_path):
    store = HighScoreStore(tmp_path / "scores.json")
    with pytest.raises(ValueError):
        store.update(1, 2, 11)  # max is 5 * k = 10
    config = GameConfig(level=1, k=2)
    assert update_high_score(store, config, 10) is True
