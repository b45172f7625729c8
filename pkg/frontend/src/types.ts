// Asset bundle schema as produced by the precompute pipeline.  The shapes
// here mirror the JSON files byte-for-byte; parseBundle validates untrusted
// input so a malformed asset surfaces as an error tile, not a crash.

export type Vec3 = [number, number, number];
export type Vec2 = [number, number];
export type Rgb = [number, number, number];

export interface MeshData {
  vertices: Vec3[];
  facets: number[][];
  colors: Rgb[];
}

export interface NetData {
  polygons: Vec2[][];
  foldEdges: [number, number, number, number][];
  cutEdges: [number, number][];
  root: number;
}

export interface AssetBundle {
  id: string;
  provenance: string;
  mesh: MeshData;
  net: NetData;
}

export interface Manifest {
  levels: Record<string, string[]>;
}

function isNumberArray(x: unknown, length?: number): x is number[] {
  return Array.isArray(x) && (length === undefined || x.length === length) &&
    x.every((v) => typeof v === "number" && Number.isFinite(v));
}

export function parseBundle(data: unknown): AssetBundle {
  const obj = data as Partial<AssetBundle>;
  if (typeof obj !== "object" || obj === null) throw new Error("bundle is not an object");
  if (typeof obj.id !== "string") throw new Error("bundle missing id");
  const mesh = obj.mesh as Partial<MeshData> | undefined;
  const net = obj.net as Partial<NetData> | undefined;
  if (!mesh || !net) throw new Error(`asset ${obj.id}: missing mesh or net`);
  if (!Array.isArray(mesh.vertices) || !mesh.vertices.every((v) => isNumberArray(v, 3))) {
    throw new Error(`asset ${obj.id}: bad mesh.vertices`);
  }
  const nv = mesh.vertices.length;
  if (!Array.isArray(mesh.facets) ||
      !mesh.facets.every((c) => isNumberArray(c) && c.length >= 3 &&
        c.every((i) => Number.isInteger(i) && i >= 0 && i < nv))) {
    throw new Error(`asset ${obj.id}: bad mesh.facets`);
  }
  if (!Array.isArray(mesh.colors) || mesh.colors.length !== mesh.facets.length ||
      !mesh.colors.every((c) => isNumberArray(c, 3))) {
    throw new Error(`asset ${obj.id}: bad mesh.colors`);
  }
  if (!Array.isArray(net.polygons) || net.polygons.length !== mesh.facets.length ||
      !net.polygons.every((p) => Array.isArray(p) && p.every((pt) => isNumberArray(pt, 2)))) {
    throw new Error(`asset ${obj.id}: bad net.polygons`);
  }
  if (!Array.isArray(net.foldEdges) || !net.foldEdges.every((e) => isNumberArray(e, 4))) {
    throw new Error(`asset ${obj.id}: bad net.foldEdges`);
  }
  if (!Array.isArray(net.cutEdges) || !net.cutEdges.every((e) => isNumberArray(e, 2))) {
    throw new Error(`asset ${obj.id}: bad net.cutEdges`);
  }
  if (typeof net.root !== "number") throw new Error(`asset ${obj.id}: bad net.root`);
  return obj as AssetBundle;
}

export function parseManifest(data: unknown): Manifest {
  const obj = data as Partial<Manifest>;
  if (typeof obj !== "object" || obj === null || typeof obj.levels !== "object" ||
      obj.levels === null) {
    throw new Error("manifest missing levels");
  }
  for (const [level, ids] of Object.entries(obj.levels)) {
    if (!Array.isArray(ids) || !ids.every((i) => typeof i === "string")) {
      throw new Error(`manifest level ${level} is not a list of ids`);
    }
  }
  return obj as Manifest;
}
