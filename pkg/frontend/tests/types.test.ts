import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { tripletsOf } from "../src/assets.js";
import { parseBundle, parseManifest } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

describe("parseBundle", () => {
  const cube = JSON.parse(readFileSync(join(here, "fixtures", "cube.json"), "utf-8"));

  it("accepts a real engine-produced bundle", () => {
    const bundle = parseBundle(cube);
    expect(bundle.id).toBe("cube");
    expect(bundle.mesh.vertices).toHaveLength(8);
    expect(bundle.mesh.facets).toHaveLength(6);
    expect(bundle.mesh.colors).toHaveLength(6);
    expect(bundle.net.polygons).toHaveLength(6);
    expect(bundle.net.foldEdges).toHaveLength(5);
  });

  it("rejects malformed bundles with a message naming the asset", () => {
    const broken = JSON.parse(JSON.stringify(cube));
    broken.mesh.facets[0] = [0, 99, 2, 3]; // vertex index out of range
    expect(() => parseBundle(broken)).toThrow(/cube/);
    expect(() => parseBundle({})).toThrow();
    expect(() => parseBundle(null)).toThrow();
    const missingNet = { id: "x", provenance: "", mesh: cube.mesh };
    expect(() => parseBundle(missingNet)).toThrow(/mesh or net/);
  });
});

describe("parseManifest", () => {
  it("round-trips a level table", () => {
    const manifest = parseManifest({ levels: { "1": ["cube"], "2": [] } });
    expect(manifest.levels["1"]).toEqual(["cube"]);
  });

  it("rejects junk", () => {
    expect(() => parseManifest({})).toThrow();
    expect(() => parseManifest({ levels: { "1": [3] } })).toThrow();
  });
});

describe("tripletsOf", () => {
  it("chunks level-7 ids into consecutive triples", () => {
    expect(tripletsOf(["a", "b", "c", "d", "e", "f"]))
      .toEqual([["a", "b", "c"], ["d", "e", "f"]]);
  });
});
