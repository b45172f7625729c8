"""Simulate the matching game end to end: draw five rounds, answer some
randomly and some correctly, and track the high score file."""

import tempfile
from pathlib import Path

import numpy as np

from polynet import GameConfig, HighScoreStore, new_game, update_high_score

rng = np.random.default_rng(99)
config = GameConfig(level=3, k=4)
game = new_game(config, seed=2)

for i in range(5):
    round_ = game.current_round
    print(f"round {i + 1}: polytopes {round_.polytope_ids}")
    if i < 2:
        answer = tuple(int(x) for x in rng.permutation(config.k))  # guessing
    else:
        answer = round_.truth  # a player who has figured it out
    score = game.submit(answer)
    print(f"  answered {answer}, truth {round_.truth} -> {score}/{config.k}")

print("final score:", game.total, "of", 5 * config.k)

store = HighScoreStore(Path(tempfile.mkdtemp()) / "highscores.json")
if update_high_score(store, config, game.total):
    print("new high score!")
print("stored best for (level, k) =", (config.level, config.k), "is",
      store.get(config.level, config.k))

# level 7 always deals hand-picked look-alike triplets at k = 3
game7 = new_game(GameConfig(level=7, k=5), seed=3)
print("\nlevel 7 round:", game7.current_round.polytope_ids)
