// Net renderer: filled facet polygons, dashed fold edges, solid cut edges.
// Every net is fitted to the same tile box, so displayed size gives no hint
// about which polytope it belongs to.

import { NetData, Rgb } from "./types.js";

export function drawNet(canvas: HTMLCanvasElement, net: NetData, colors: Rgb[],
                        pad = 8): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);

  let minX = Infinity, minY = Infinity, maxX = -Infinity, maxY = -Infinity;
  for (const poly of net.polygons) {
    for (const [x, y] of poly) {
      minX = Math.min(minX, x); maxX = Math.max(maxX, x);
      minY = Math.min(minY, y); maxY = Math.max(maxY, y);
    }
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min((width - 2 * pad) / spanX, (height - 2 * pad) / spanY);
  const ox = (width - scale * spanX) / 2;
  const oy = (height - scale * spanY) / 2;
  const px = (x: number) => ox + scale * (x - minX);
  const py = (y: number) => height - oy - scale * (y - minY); // keep orientation

  net.polygons.forEach((poly, f) => {
    const [r, g, b] = colors[f] ?? [128, 128, 128];
    ctx.beginPath();
    poly.forEach(([x, y], i) => {
      if (i === 0) ctx.moveTo(px(x), py(y));
      else ctx.lineTo(px(x), py(y));
    });
    ctx.closePath();
    ctx.fillStyle = `rgb(${r},${g},${b})`;
    ctx.fill();
  });

  const segment = (facet: number, slot: number): [number, number, number, number] => {
    const poly = net.polygons[facet];
    const [x0, y0] = poly[slot];
    const [x1, y1] = poly[(slot + 1) % poly.length];
    return [px(x0), py(y0), px(x1), py(y1)];
  };

  ctx.strokeStyle = "#222";
  ctx.lineWidth = 1.5;
  ctx.setLineDash([]);
  for (const [f, i] of net.cutEdges) {
    const [x0, y0, x1, y1] = segment(f, i);
    ctx.beginPath();
    ctx.moveTo(x0, y0);
    ctx.lineTo(x1, y1);
    ctx.stroke();
  }
  ctx.setLineDash([5, 4]);
  for (const [fa, ea] of net.foldEdges) {
    const [x0, y0, x1, y1] = segment(fa, ea);
    ctx.beginPath();
    ctx.moveTo(x0, y0);
    ctx.lineTo(x1, y1);
    ctx.stroke();
  }
  ctx.setLineDash([]);
}
