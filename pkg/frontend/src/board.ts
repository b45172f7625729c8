// Board state machine for one game: five rounds of k polytopes over k nets
// in a shuffled order.  The player swaps nets; submitting scores the round.

import { Rand, sampleWithoutReplacement, shuffled } from "./rng.js";
import { invert, isPermutation, scoreRound } from "./scoring.js";

export interface RoundSpec {
  /** asset ids in top-row order */
  polytopeIds: string[];
  /** truth[j] = top-row index of the polytope whose net starts in slot j */
  truth: number[];
}

export const ROUNDS_PER_GAME = 5;

export function drawRounds(pool: string[], k: number, rand: Rand,
                           triplets?: string[][]): RoundSpec[] {
  const rounds: RoundSpec[] = [];
  for (let r = 0; r < ROUNDS_PER_GAME; r++) {
    let ids: string[];
    if (triplets && triplets.length > 0) {
      const group = triplets[Math.floor(rand() * triplets.length)];
      ids = shuffled(group, rand);
    } else {
      if (pool.length < k) throw new Error(`pool of ${pool.length} cannot seat k=${k}`);
      ids = sampleWithoutReplacement(pool, k, rand);
    }
    const truth = shuffled(ids.map((_, i) => i), rand);
    rounds.push({ polytopeIds: ids, truth });
  }
  return rounds;
}

export type Phase = "playing" | "revealed" | "finished";

export class BoardState {
  readonly k: number;
  readonly rounds: RoundSpec[];
  readonly scores: number[] = [];
  /** 0-based index of the round on screen; advances only on nextRound() */
  roundIndex = 0;
  /** arrangement[j] = original display slot of the net currently in slot j */
  arrangement: number[];
  phase: Phase = "playing";

  constructor(rounds: RoundSpec[]) {
    if (rounds.length !== ROUNDS_PER_GAME) {
      throw new Error(`a game has ${ROUNDS_PER_GAME} rounds`);
    }
    this.rounds = rounds;
    this.k = rounds[0].truth.length;
    this.arrangement = rounds[0].truth.map((_, i) => i);
  }

  get currentRound(): RoundSpec {
    return this.rounds[this.roundIndex];
  }

  get totalScore(): number {
    return this.scores.reduce((a, b) => a + b, 0);
  }

  /** Polytope index of the net currently shown in slot j. */
  slotContents(): number[] {
    const truth = this.currentRound.truth;
    return this.arrangement.map((orig) => truth[orig]);
  }

  swapNets(a: number, b: number): void {
    if (this.phase !== "playing") throw new Error("round is not in progress");
    if (a === b || a < 0 || b < 0 || a >= this.k || b >= this.k) {
      throw new Error(`bad swap (${a}, ${b})`);
    }
    [this.arrangement[a], this.arrangement[b]] = [this.arrangement[b], this.arrangement[a]];
  }

  /** The engine-convention answer: claimed polytope per original display slot. */
  currentAnswer(): number[] {
    // the net from original slot s now sits under polytope invert(arrangement)[s]
    return invert(this.arrangement);
  }

  submitRound(): number {
    if (this.phase !== "playing") throw new Error("round already submitted");
    const answer = this.currentAnswer();
    if (!isPermutation(answer)) throw new Error("arrangement corrupted");
    const score = scoreRound(this.currentRound.truth, answer);
    this.scores.push(score);
    this.phase = this.scores.length === this.rounds.length ? "finished" : "revealed";
    return score;
  }

  /** Correct pairings for the solution view: polytope index -> current slot. */
  solution(): { polytope: number; slot: number }[] {
    const contents = this.slotContents();
    return contents.map((polytope, slot) => ({ polytope, slot }))
      .sort((x, y) => x.polytope - y.polytope);
  }

  nextRound(): void {
    if (this.phase !== "revealed") throw new Error("no revealed round to advance from");
    this.roundIndex += 1;
    this.arrangement = this.currentRound.truth.map((_, i) => i);
    this.phase = "playing";
  }
}

// ---------------------------------------------------------------------------
// high scores in (local) storage

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
}

export class HighScores {
  constructor(private storage: StorageLike) {}

  key(level: number, k: number): string {
    return `mtn.highscore.${level}.${k}`;
  }

  best(level: number, k: number): number | null {
    const raw = this.storage.getItem(this.key(level, k));
    if (raw === null) return null;
    const value = Number.parseInt(raw, 10);
    return Number.isFinite(value) ? value : null;
  }

  /** Returns true when the total sets a new record (and stores it). */
  update(level: number, k: number, total: number): boolean {
    const best = this.best(level, k);
    if (best !== null && best >= total) return false;
    this.storage.setItem(this.key(level, k), String(total));
    return true;
  }
}
