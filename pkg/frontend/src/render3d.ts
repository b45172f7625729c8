// Software renderer for convex meshes on a 2D canvas: orthographic
// projection, backface culling (sufficient for convex solids), slight
// normal-based shading.  Dragging rotates the model about the screen axes.

import { MeshData, Vec3 } from "./types.js";

type Mat3 = [number, number, number, number, number, number, number, number, number];

function matMul(a: Mat3, b: Mat3): Mat3 {
  const out = new Array(9).fill(0) as Mat3;
  for (let i = 0; i < 3; i++) {
    for (let j = 0; j < 3; j++) {
      out[3 * i + j] = a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j];
    }
  }
  return out;
}

function rotation(axis: "x" | "y", angle: number): Mat3 {
  const c = Math.cos(angle);
  const s = Math.sin(angle);
  return axis === "x"
    ? [1, 0, 0, 0, c, -s, 0, s, c]
    : [c, 0, s, 0, 1, 0, -s, 0, c];
}

function apply(m: Mat3, v: Vec3): Vec3 {
  return [
    m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
    m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
    m[6] * v[0] + m[7] * v[1] + m[8] * v[2],
  ];
}

function facetNormal(pts: Vec3[]): Vec3 {
  // Newell's method; outward for counterclockwise-from-outside cycles
  let x = 0, y = 0, z = 0;
  for (let i = 0; i < pts.length; i++) {
    const a = pts[i];
    const b = pts[(i + 1) % pts.length];
    x += (a[1] - b[1]) * (a[2] + b[2]);
    y += (a[2] - b[2]) * (a[0] + b[0]);
    z += (a[0] - b[0]) * (a[1] + b[1]);
  }
  const n = Math.hypot(x, y, z) || 1;
  return [x / n, y / n, z / n];
}

export class PolytopeView {
  private rotationMatrix: Mat3 = matMul(rotation("x", -0.45), rotation("y", 0.65));
  private dragging = false;
  private lastX = 0;
  private lastY = 0;

  constructor(private canvas: HTMLCanvasElement, private mesh: MeshData) {
    canvas.addEventListener("pointerdown", (ev) => {
      this.dragging = true;
      this.lastX = ev.clientX;
      this.lastY = ev.clientY;
      canvas.setPointerCapture(ev.pointerId);
    });
    canvas.addEventListener("pointermove", (ev) => {
      if (!this.dragging) return;
      const dx = ev.clientX - this.lastX;
      const dy = ev.clientY - this.lastY;
      this.lastX = ev.clientX;
      this.lastY = ev.clientY;
      this.rotate(dx * 0.01, dy * 0.01);
    });
    const stop = () => { this.dragging = false; };
    canvas.addEventListener("pointerup", stop);
    canvas.addEventListener("pointercancel", stop);
    this.draw();
  }

  rotate(aboutY: number, aboutX: number): void {
    this.rotationMatrix = matMul(matMul(rotation("y", aboutY), rotation("x", aboutX)),
                                 this.rotationMatrix);
    this.draw();
  }

  draw(): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    const { width, height } = this.canvas;
    ctx.clearRect(0, 0, width, height);

    let radius = 0;
    for (const v of this.mesh.vertices) radius = Math.max(radius, Math.hypot(...v));
    const scale = 0.42 * Math.min(width, height) / (radius || 1);
    const cx = width / 2;
    const cy = height / 2;

    const rotated = this.mesh.vertices.map((v) => apply(this.rotationMatrix, v));
    const projected = rotated.map((v) => [cx + scale * v[0], cy - scale * v[1]]);

    // far-to-near keeps shared silhouette edges tidy
    const order = this.mesh.facets
      .map((cycle, i) => {
        const pts = cycle.map((j) => rotated[j]);
        const normal = facetNormal(pts);
        const depth = pts.reduce((s, p) => s + p[2], 0) / pts.length;
        return { i, normal, depth };
      })
      .filter((f) => f.normal[2] > 0)
      .sort((a, b) => a.depth - b.depth);

    for (const { i, normal } of order) {
      const cycle = this.mesh.facets[i];
      const [r, g, b] = this.mesh.colors[i];
      const shade = 0.55 + 0.45 * normal[2];
      ctx.beginPath();
      cycle.forEach((j, idx) => {
        const [x, y] = projected[j];
        if (idx === 0) ctx.moveTo(x, y);
        else ctx.lineTo(x, y);
      });
      ctx.closePath();
      ctx.fillStyle = `rgb(${Math.round(r * shade)},${Math.round(g * shade)},${Math.round(b * shade)})`;
      ctx.fill();
      ctx.strokeStyle = "rgba(20,20,20,0.85)";
      ctx.lineWidth = 1.2;
      ctx.stroke();
    }
  }
}
