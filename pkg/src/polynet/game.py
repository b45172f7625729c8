"""Game engine: level pools, round generation, fixed-point scoring, high scores.

A game is five rounds; each round shows k polytopes and the same k nets in a
shuffled order, and the score is the number of nets sitting under their own
polytope.  Levels climb the catalog ladder; the top level draws hand-picked
look-alike triplets and forces k = 3.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from dataclasses import dataclass

import numpy as np

from . import catalog


class EmptyPool(Exception):
    pass


class PoolTooSmall(Exception):
    pass


class NotAPermutation(ValueError):
    pass


class StoreIOError(OSError):
    pass


# minimal string table; only English ships, the chooser is UI chrome
STRINGS = {
    "en": {
        "title": "Match the nets",
        "submit": "Submit",
        "solution": "Show solution",
        "next_round": "Next round",
        "final_score": "Final score",
        "high_score": "High score",
        "new_high_score": "New high score!",
    },
}

LEVELS = (1, 2, 3, 4, 5, 6, 7)
RANDOM_POOL_SIZE = 50


@dataclass(frozen=True)
class GameConfig:
    """Level 1..7 and polytopes-per-round k in 2..5; level 7 forces k = 3."""

    level: int
    k: int
    rounds: int = 5
    language_tag: str = "en"

    def __post_init__(self):
        if self.level not in LEVELS:
            raise ValueError(f"level must be 1..7, got {self.level}")
        if not 2 <= self.k <= 5:
            raise ValueError(f"k must be 2..5, got {self.k}")
        if self.level == 7:
            object.__setattr__(self, "k", 3)
        if self.rounds != 5:
            raise ValueError("a game lasts five rounds")


@dataclass(frozen=True)
class PoolEntry:
    """One drawable polytope: a stable asset id plus its source kind."""

    asset_id: str
    kind: str  # catalog | curated | johnson | random
    triplet: int | None = None  # group index for level-7 entries


@dataclass
class Round:
    """k polytopes (top row order) and their nets in display order.

    ``truth[j]`` is the top-row index of the polytope whose net sits in
    display slot j; ``answer`` is the player's claimed assignment.
    """

    polytope_ids: tuple[str, ...]
    net_ids: tuple[str, ...]
    truth: tuple[int, ...]
    answer: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ScoreRecord:
    per_round: tuple[int, ...]
    total: int
    timestamp: float

    def __post_init__(self):
        if self.total != sum(self.per_round):
            raise ValueError("total must equal the sum of round scores")


def level_pool(level: int, johnson_ids: tuple[str, ...] = (),
               random_pool_size: int = RANDOM_POOL_SIZE) -> list[PoolEntry]:
    """Drawable entries per level.

    1: regular solids; 2: + semi-regular; 3: + their duals; 4: ingested
    Johnson solids when present, else the level-3 pool; 5: random pool with
    gonality colors; 6: the same solids all green; 7: curated triplets.
    """
    if level not in LEVELS:
        raise ValueError(f"level must be 1..7, got {level}")
    if level == 1:
        names = catalog.PLATONIC_NAMES
    elif level == 2:
        names = catalog.PLATONIC_NAMES + catalog.ARCHIMEDEAN_NAMES
    elif level == 3:
        names = catalog.CATALOG_NAMES
    elif level == 4:
        if johnson_ids:
            return [PoolEntry(i, "johnson") for i in johnson_ids]
        names = catalog.CATALOG_NAMES
    elif level == 5:
        return [PoolEntry(f"random_{i:02d}", "random") for i in range(random_pool_size)]
    elif level == 6:
        return [PoolEntry(f"random_{i:02d}_green", "random") for i in range(random_pool_size)]
    else:
        pool = [PoolEntry(name, "curated", triplet=t)
                for t, triplet in enumerate(catalog.CURATED_TRIPLETS) for name in triplet]
        if len(pool) < 6:
            raise EmptyPool("level 7 needs at least two curated triplets")
        return pool
    pool = [PoolEntry(name, "catalog") for name in names]
    if not pool:
        raise EmptyPool(f"level {level} has no polytopes")
    return pool


def _draw_round(pool: list[PoolEntry], k: int, level: int,
                rng: np.random.Generator) -> Round:
    if level == 7:
        groups = sorted({e.triplet for e in pool if e.triplet is not None})
        chosen_group = groups[int(rng.integers(len(groups)))]
        members = [e for e in pool if e.triplet == chosen_group]
        order = rng.permutation(len(members))
        ids = tuple(members[int(i)].asset_id for i in order)
    else:
        picks = rng.choice(len(pool), size=k, replace=False)
        ids = tuple(pool[int(i)].asset_id for i in picks)
    truth = tuple(int(x) for x in rng.permutation(len(ids)))
    nets = tuple(ids[t] for t in truth)
    return Round(polytope_ids=ids, net_ids=nets, truth=truth)


def score_round(round_: Round, answer) -> int:
    """Number of display slots whose claimed polytope matches the truth."""
    answer = tuple(int(a) for a in answer)
    k = len(round_.truth)
    if sorted(answer) != list(range(k)):
        raise NotAPermutation(f"{answer} is not a permutation of 0..{k - 1}")
    return sum(a == t for a, t in zip(answer, round_.truth))


class GameState:
    """Five pre-drawn rounds plus the submit/next bookkeeping."""

    def __init__(self, config: GameConfig, rounds: list[Round]):
        self.config = config
        self.rounds = rounds
        self.scores: list[int] = []

    @property
    def current_round(self) -> Round:
        return self.rounds[len(self.scores)]

    @property
    def finished(self) -> bool:
        return len(self.scores) == len(self.rounds)

    @property
    def total(self) -> int:
        return sum(self.scores)

    def submit(self, answer) -> int:
        if self.finished:
            raise RuntimeError("game is over")
        round_ = self.current_round
        score = score_round(round_, answer)
        round_.answer = tuple(int(a) for a in answer)
        self.scores.append(score)
        return score

    def record(self) -> ScoreRecord:
        if not self.finished:
            raise RuntimeError("game still in progress")
        return ScoreRecord(tuple(self.scores), self.total, time.time())


def new_game(config: GameConfig, seed, pool: list[PoolEntry] | None = None) -> GameState:
    """Draw five rounds; k distinct polytopes per round, deterministic per seed."""
    if pool is None:
        pool = level_pool(config.level)
    if config.level != 7 and len(pool) < config.k:
        raise PoolTooSmall(f"pool of {len(pool)} cannot seat k={config.k}")
    rng = np.random.default_rng(seed)
    rounds = [_draw_round(pool, config.k, config.level, rng) for _ in range(config.rounds)]
    return GameState(config, rounds)


# ---------------------------------------------------------------------------
# high scores


class HighScoreStore:
    """JSON map "level:k" -> best total, replaced atomically on update."""

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)

    def load(self) -> dict[str, int]:
        try:
            with open(self.path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except FileNotFoundError:
            return {}
        except (OSError, json.JSONDecodeError) as exc:
            raise StoreIOError(f"cannot read high scores: {exc}") from exc
        return {str(k): int(v) for k, v in raw.items()}

    def get(self, level: int, k: int) -> int | None:
        return self.load().get(f"{level}:{k}")

    def update(self, level: int, k: int, total: int) -> bool:
        """Keep the per-(level, k) maximum; returns True on a new record."""
        if not 0 <= total <= 5 * k:
            raise ValueError(f"total {total} outside 0..{5 * k}")
        scores = self.load()
        key = f"{level}:{k}"
        if key in scores and scores[key] >= total:
            return False
        scores[key] = total
        try:
            fd, tmp = tempfile.mkstemp(dir=os.path.dirname(self.path) or ".",
                                       prefix=".highscore-")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(scores, fh, sort_keys=True)
            os.replace(tmp, self.path)
        except OSError as exc:
            raise StoreIOError(f"cannot write high scores: {exc}") from exc
        return True


def update_high_score(store: HighScoreStore, config: GameConfig, total: int) -> bool:
    return store.update(config.level, config.k, total)


# ---------------------------------------------------------------------------
# fixtures for the browser front end


def scoring_fixture(k: int) -> list[dict]:
    """All (truth, answer, score) triples at a given k, for cross-checking
    any reimplementation of the scoring rule."""
    from itertools import permutations

    out = []
    for truth in permutations(range(k)):
        round_ = Round(polytope_ids=("x",) * k, net_ids=("x",) * k, truth=truth)
        for answer in permutations(range(k)):
            out.append({"truth": list(truth), "answer": list(answer),
                        "score": score_round(round_, answer)})
    return out
