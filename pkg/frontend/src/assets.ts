// Fetching the precomputed manifest and asset bundles (static JSON files).

import { AssetBundle, Manifest, parseBundle, parseManifest } from "./types.js";

export const ASSET_BASE = "assets";

export async function fetchManifest(base: string = ASSET_BASE): Promise<Manifest> {
  const res = await fetch(`${base}/manifest.json`);
  if (!res.ok) throw new Error(`manifest: HTTP ${res.status}`);
  return parseManifest(await res.json());
}

export async function fetchBundle(id: string, base: string = ASSET_BASE): Promise<AssetBundle> {
  const res = await fetch(`${base}/${id}.json`);
  if (!res.ok) throw new Error(`asset ${id}: HTTP ${res.status}`);
  return parseBundle(await res.json());
}

/** Level-7 ids come in consecutive hand-picked triples. */
export function tripletsOf(ids: string[]): string[][] {
  const out: string[][] = [];
  for (let i = 0; i + 2 < ids.length; i += 3) {
    out.push(ids.slice(i, i + 3));
  }
  return out;
}
