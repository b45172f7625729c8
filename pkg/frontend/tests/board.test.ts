import { describe, expect, it } from "vitest";

import { BoardState, HighScores, ROUNDS_PER_GAME, RoundSpec, StorageLike, drawRounds } from "../src/board.js";
import { isPermutation } from "../src/scoring.js";
import { mulberry32 } from "../src/rng.js";

const PLATONIC = ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"];

class FakeStorage implements StorageLike {
  private data = new Map<string, string>();

  getItem(key: string): string | null {
    return this.data.get(key) ?? null;
  }

  setItem(key: string, value: string): void {
    this.data.set(key, value);
  }
}

function freshBoard(k = 2, seed = 7): BoardState {
  return new BoardState(drawRounds(PLATONIC, k, mulberry32(seed)));
}

describe("drawRounds", () => {
  it("draws five rounds of k distinct polytopes with a shuffled truth", () => {
    const rounds = drawRounds(PLATONIC, 3, mulberry32(1));
    expect(rounds).toHaveLength(ROUNDS_PER_GAME);
    for (const round of rounds) {
      expect(new Set(round.polytopeIds).size).toBe(3);
      expect(isPermutation(round.truth)).toBe(true);
    }
  });

  it("is deterministic per seed", () => {
    expect(drawRounds(PLATONIC, 3, mulberry32(5)))
      .toEqual(drawRounds(PLATONIC, 3, mulberry32(5)));
  });

  it("rejects pools smaller than k", () => {
    expect(() => drawRounds(["a", "b"], 3, mulberry32(0))).toThrow();
  });

  it("draws whole triplets when given", () => {
    const triplets = [["a1", "a2", "a3"], ["b1", "b2", "b3"]];
    const rounds = drawRounds([], 3, mulberry32(2), triplets);
    for (const round of rounds) {
      const sorted = [...round.polytopeIds].sort();
      expect([["a1", "a2", "a3"], ["b1", "b2", "b3"]]).toContainEqual(sorted);
    }
  });
});

describe("BoardState swaps", () => {
  it("swap is an involution", () => {
    const board = freshBoard(4);
    const before = [...board.arrangement];
    board.swapNets(0, 2);
    board.swapNets(0, 2);
    expect(board.arrangement).toEqual(before);
  });

  it("any swap sequence keeps a permutation", () => {
    const board = freshBoard(5);
    const rand = mulberry32(99);
    for (let i = 0; i < 200; i++) {
      const a = Math.floor(rand() * 5);
      const b = Math.floor(rand() * 5);
      if (a !== b) board.swapNets(a, b);
      expect(isPermutation(board.arrangement)).toBe(true);
      expect(isPermutation(board.currentAnswer())).toBe(true);
    }
  });

  it("score is computed on the swapped order", () => {
    const rounds: RoundSpec[] = Array.from({ length: 5 }, () => ({
      polytopeIds: ["a", "b"],
      truth: [1, 0],
    }));
    const board = new BoardState(rounds);
    // initially net of polytope 1 sits in slot 0: nothing matches
    expect(board.slotContents()).toEqual([1, 0]);
    board.swapNets(0, 1);
    expect(board.slotContents()).toEqual([0, 1]);
    expect(board.submitRound()).toBe(2);
  });
});

describe("scripted playthrough", () => {
  it("five perfect rounds at level 1, k = 2 score 10 and set the high score", () => {
    const storage = new FakeStorage();
    const highScores = new HighScores(storage);
    const board = freshBoard(2, 42);

    for (let round = 0; round < ROUNDS_PER_GAME; round++) {
      expect(board.phase).toBe("playing");
      expect(board.roundIndex).toBe(round);
      // swap until every net sits under its polytope
      const contents = board.slotContents();
      if (contents[0] !== 0) board.swapNets(0, 1);
      expect(board.slotContents()).toEqual([0, 1]);
      const score = board.submitRound();
      expect(score).toBe(2);
      if (round < ROUNDS_PER_GAME - 1) {
        expect(board.phase).toBe("revealed");
        board.nextRound();
      }
    }

    expect(board.phase).toBe("finished");
    expect(board.totalScore).toBe(10);
    expect(highScores.update(1, 2, board.totalScore)).toBe(true);
    expect(storage.getItem("mtn.highscore.1.2")).toBe("10");
    expect(highScores.best(1, 2)).toBe(10);
    // a worse later game does not displace the record
    expect(highScores.update(1, 2, 7)).toBe(false);
    expect(highScores.best(1, 2)).toBe(10);
  });

  it("solution view pairs every polytope with the slot holding its net", () => {
    const board = freshBoard(3, 11);
    board.submitRound();
    const pairs = board.solution();
    expect(pairs.map((p) => p.polytope)).toEqual([0, 1, 2]);
    const contents = board.slotContents();
    for (const { polytope, slot } of pairs) {
      expect(contents[slot]).toBe(polytope);
    }
  });

  it("guards the state machine", () => {
    const board = freshBoard(2);
    board.submitRound();
    expect(() => board.submitRound()).toThrow();
    expect(() => board.swapNets(0, 1)).toThrow();
    board.nextRound();
    expect(() => board.nextRound()).toThrow();
  });
});
