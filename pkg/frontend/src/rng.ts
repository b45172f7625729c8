// Small deterministic PRNG (mulberry32) so tests can replay exact games;
// gameplay seeds from Date.now().

export type Rand = () => number;

export function mulberry32(seed: number): Rand {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function shuffled<T>(items: readonly T[], rand: Rand): T[] {
  const out = items.slice();
  for (let i = out.length - 1; i > 0; i--) {
    const j = Math.floor(rand() * (i + 1));
    [out[i], out[j]] = [out[j], out[i]];
  }
  return out;
}

export function sampleWithoutReplacement<T>(items: readonly T[], k: number, rand: Rand): T[] {
  if (k > items.length) throw new Error(`cannot draw ${k} from ${items.length}`);
  return shuffled(items, rand).slice(0, k);
}
