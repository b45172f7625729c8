// Scoring, ported one-to-one from the engine: the round score is the number
// of display slots whose claimed polytope matches the hidden truth.

export function isPermutation(xs: readonly number[]): boolean {
  const seen = new Array<boolean>(xs.length).fill(false);
  for (const x of xs) {
    if (!Number.isInteger(x) || x < 0 || x >= xs.length || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

export function scoreRound(truth: readonly number[], answer: readonly number[]): number {
  if (truth.length !== answer.length || !isPermutation(truth) || !isPermutation(answer)) {
    throw new Error("truth and answer must be permutations of the same slots");
  }
  let score = 0;
  for (let j = 0; j < truth.length; j++) {
    if (truth[j] === answer[j]) score++;
  }
  return score;
}

/** Invert a permutation: out[perm[i]] = i. */
export function invert(perm: readonly number[]): number[] {
  const out = new Array<number>(perm.length);
  perm.forEach((p, i) => { out[p] = i; });
  return out;
}
