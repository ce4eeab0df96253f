// Radial embedding: vertices on a fixed circle, half-edge spokes at
// angles proportional to the rotation position. The rotation order is
// the mathematical content, so the angular order around each rendered
// vertex equals the rotation list read clockwise; no force simulation.

import type { GraphJson } from "./types.js";

export interface SpokePoint {
  half: string;
  vertex: string;
  index: number; // position in the rotation list
  angle: number; // radians, clockwise from 12 o'clock
  x: number;
  y: number;
}

export interface VertexPoint {
  id: string;
  degree: number;
  x: number;
  y: number;
}

export interface EdgePath {
  id: string;
  from: SpokePoint;
  to: SpokePoint | null; // null for an orbifold edge: drawn to a cross
  crossX?: number;
  crossY?: number;
}

export interface Layout {
  vertices: VertexPoint[];
  spokes: SpokePoint[];
  edges: EdgePath[];
  width: number;
  height: number;
}

const SPOKE_LENGTH = 46;

export function radialLayout(graph: GraphJson, size = 560): Layout {
  const names = graph.vertices.map((v) => v.id);
  const radius = names.length === 1 ? 0 : size * 0.32;
  const cx = size / 2;
  const cy = size / 2;
  const centres = new Map<string, VertexPoint>();
  names.forEach((id, i) => {
    const theta = (2 * Math.PI * i) / names.length - Math.PI / 2;
    const degree = graph.vertices[i].degree;
    centres.set(id, {
      id,
      degree,
      x: cx + radius * Math.cos(theta),
      y: cy + radius * Math.sin(theta),
    });
  });

  const spokes: SpokePoint[] = [];
  const byHalf = new Map<string, SpokePoint>();
  for (const id of names) {
    const rot = graph.rotation[id];
    const centre = centres.get(id)!;
    rot.forEach((half, index) => {
      // Clockwise placement: screen angle grows clockwise when y points
      // down, so equal increments in list order realize the rotation.
      const angle = (2 * Math.PI * index) / rot.length - Math.PI / 2;
      const point: SpokePoint = {
        half,
        vertex: id,
        index,
        angle,
        x: centre.x + SPOKE_LENGTH * Math.cos(angle),
        y: centre.y + SPOKE_LENGTH * Math.sin(angle),
      };
      spokes.push(point);
      byHalf.set(half, point);
    });
  }

  const edges: EdgePath[] = [];
  const seen = new Set<string>();
  for (const entry of graph.pairing) {
    const id = entry.length === 1 ? entry[0] : [...entry].sort().join("~");
    if (seen.has(id)) continue;
    seen.add(id);
    const from = byHalf.get(entry[0])!;
    if (entry.length === 1) {
      edges.push({
        id,
        from,
        to: null,
        crossX: from.x + 34 * Math.cos(from.angle),
        crossY: from.y + 34 * Math.sin(from.angle),
      });
    } else {
      edges.push({ id, from, to: byHalf.get(entry[1])! });
    }
  }
  edges.sort((a, b) => (a.id < b.id ? -1 : a.id > b.id ? 1 : 0));
  return { vertices: [...centres.values()], spokes, edges, width: size, height: size };
}

/** Angular order of the rendered spokes around a vertex (clockwise). */
export function renderedOrder(layout: Layout, vertex: string): string[] {
  return layout.spokes
    .filter((s) => s.vertex === vertex)
    .sort((a, b) => a.index - b.index)
    .map((s) => s.half);
}
